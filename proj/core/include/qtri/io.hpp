#pragma once

/**
 * @file io.hpp
 * @brief JSON and text encodings. All output orderings are deterministic.
 *
 * LaurentPoly:  {"-2":"1","0":"2","2":"1"}  (decimal-string degree -> decimal-string coefficient)
 * TorusElem:    [{"exp":[...],"coeff":LaurentPoly}, ...] sorted by exponent
 * TriBasisElem: {"a":[...],"terms":[...],"support":[[...],...]}
 * Seed input:   {"B":[[...],...]} or a bare [[...],...]
 */

#include "qtri/laurent.hpp"
#include "qtri/seed.hpp"
#include "qtri/tribasis.hpp"
#include "qtri/torus.hpp"

#include <string>
#include <vector>

namespace qtri::io {

std::string to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

std::string to_json(const TorusElem& t);
/// Reads the TorusElem encoding over the given skew form.
TorusElem torus_from_json(const std::string& text, const LambdaHandle& lambda);

std::string to_json(const TriBasisElem& c);
std::string to_json(const Seed& s);
std::string to_json(const WVector& w);
std::string to_json(const Theorem1Report& r);

/// Parses {"B": [[...]]} or [[...]]. DomainError on malformed input.
IntMatrix matrix_from_json(const std::string& text);
/// Parses "1,-2,3", "[1,-2,3]" or "(1,-2,3)" (whitespace ignored).
std::vector<int> parse_int_list(const std::string& text);

/// Pretty-printed JSON (two-space indent) for any of the encodings above.
std::string pretty(const std::string& json_text);

}  // namespace qtri::io
