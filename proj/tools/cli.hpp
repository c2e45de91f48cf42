#pragma once

#include "qtri/qtri.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qtri::cli {

enum class Command { Basis, Support, ChiM, EStar, Verify, Mutate, Dims };
enum class Format { Auto, Json, Tsv };

struct JobSpec {
    Command command = Command::Basis;
    std::optional<IntMatrix> B;
    std::optional<std::vector<int>> a;
    std::optional<std::vector<int>> w;  ///< interleaved w_1, w'_1, w_2, w'_2, ...
    std::optional<std::vector<int>> v;
    std::optional<std::vector<int>> k;  ///< 1-based mutation sequence
    std::optional<std::vector<int>> frozen;
    Format format = Format::Auto;
    std::uint64_t seed = 1;
    int sweep_n = 4;
    int sweep_bmax = 3;
    int sweep_amax = 4;
    int sweep_count = 200;
    int jobs = 1;
    std::string out;
};

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kInternal = 3 };

/// Executes a validated job. Diagnostics go to err; the return value is the exit status.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec, honours --out, and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SweepInstance {
    IntMatrix B;
    ExpVec a;
};

/// Random skew-symmetric bipartite matrix: each vertex is a source with
/// probability 1/2 and every sink/source pair gets 0..bmax arrows.
IntMatrix random_bipartite(std::mt19937_64& rng, int n, int bmax);

/// Deterministic in its arguments. With fixed_B every instance uses that matrix;
/// otherwise n is drawn from 1..nmax. a has cluster entries in [-amax, amax] and
/// a zero frozen block.
std::vector<SweepInstance> make_sweep(std::uint64_t seed, int count, int nmax, int bmax, int amax,
                                      const std::optional<IntMatrix>& fixed_B = std::nullopt);

}  // namespace qtri::cli
