#pragma once

#include "qtri/errors.hpp"
#include "qtri/int_matrix.hpp"
#include "qtri/io.hpp"
#include "qtri/laurent.hpp"
#include "qtri/seed.hpp"
#include "qtri/std_basis.hpp"
#include "qtri/strata.hpp"
#include "qtri/torus.hpp"
#include "qtri/tprime.hpp"
#include "qtri/tribasis.hpp"
