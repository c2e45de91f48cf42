#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace qtri::cli {

namespace {

using ordered = nlohmann::ordered_json;

int dimension_of(const JobSpec& job) {
    if (job.B) return job.B->rows();
    if (job.a) return static_cast<int>(job.a->size()) / 2;
    if (job.w) return static_cast<int>(job.w->size()) / 2;
    if (job.v) return static_cast<int>(job.v->size());
    throw DomainError("cannot infer n: pass --B or a vector argument");
}

IntMatrix matrix_of(const JobSpec& job) { return job.B ? *job.B : IntMatrix(dimension_of(job), dimension_of(job)); }

template <class T>
const T& require(const std::optional<T>& x, const char* flag) {
    if (!x) throw DomainError(std::string("missing required flag ") + flag);
    return *x;
}

ExpVec exponent_arg(const JobSpec& job, int n) {
    ExpVec a = require(job.a, "--a");
    if (static_cast<int>(a.size()) == n) a.resize(2 * n, 0);
    if (static_cast<int>(a.size()) != 2 * n)
        throw DomainError("--a must have n or 2n entries (n = " + std::to_string(n) + ")");
    return a;
}

WVector w_arg(const JobSpec& job, int n) {
    const WVector w = WVector::from_interleaved(require(job.w, "--w"));
    if (w.n() != n) throw DomainError("--w must list 2n entries (n = " + std::to_string(n) + ")");
    if (!w.is_nonnegative()) throw DomainError("--w entries must be nonnegative");
    return w;
}

std::vector<int> frozen_arg(const JobSpec& job, int n) {
    if (!job.frozen) return std::vector<int>(n, 0);
    if (static_cast<int>(job.frozen->size()) != n) throw DomainError("--frozen must have n entries");
    return *job.frozen;
}

std::string tsv_row(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "\t" : "") << xs[i];
    return os.str();
}

ordered parse_json(const std::string& s) { return ordered::parse(s); }

int cmd_basis(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    const Seed s = principal_seed(B);
    const BipartiteQuiver q = bipartite_parts(B);
    const TriBasisElem c = triangular_basis(s, q, exponent_arg(job, q.n()));
    if (job.format == Format::Tsv) {
        for (int i = 0; i < q.n(); ++i) out << 'v' << (i + 1) << '\t';
        out << "e_v\n";
        for (const auto& [v, e] : c.ev_table) out << tsv_row(v) << '\t' << e.to_string() << '\n';
    } else {
        out << io::to_json(c) << '\n';
    }
    return kOk;
}

int cmd_support(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    const BipartiteQuiver q = bipartite_parts(B);
    const ExpVec a = exponent_arg(job, q.n());
    if (job.format == Format::Json) {
        ordered j;
        j["a"] = a;
        j["support_region"] = support_region(q, a);
        out << j.dump() << '\n';
    } else {
        out << support_tsv(q, a, 1);
    }
    return kOk;
}

int cmd_chi_m(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    const BipartiteQuiver q = bipartite_parts(B);
    out << io::to_json(chi_M(q, principal_seed(B), w_arg(job, q.n()))) << '\n';
    return kOk;
}

int cmd_e_star(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    const BipartiteQuiver q = bipartite_parts(B);
    out << io::to_json(e_star(principal_seed(B), q, w_arg(job, q.n()), frozen_arg(job, q.n()))) << '\n';
    return kOk;
}

int cmd_mutate(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    Seed s = principal_seed(B);
    for (int k : require(job.k, "--k")) s = mutate(s, k - 1);
    out << io::to_json(s) << '\n';
    return kOk;
}

int cmd_dims(const JobSpec& job, std::ostream& out) {
    const IntMatrix B = matrix_of(job);
    const BipartiteQuiver q = bipartite_parts(B);
    const WVector w = w_arg(job, q.n());
    const std::vector<int> v = require(job.v, "--v");
    if (static_cast<int>(v.size()) != q.n()) throw DomainError("--v must have n entries");
    const bool nonempty = is_nonempty_F(q, v, w);
    ordered j;
    j["v"] = v;
    j["w"] = w.interleaved();
    j["cq_v"] = cq_apply(q, v).interleaved();
    j["nonempty"] = nonempty;
    j["l_dominant"] = is_l_dominant(q, v, w);
    j["vbar"] = vbar(q, v, w);
    if (nonempty) {
        j["d"] = dim_F(q, v, w);
        j["d_tilde"] = dim_Ftilde(q, v, w);
        j["poincare"] = parse_json(io::to_json(poincare_F(q, v, w)));
    } else {
        j["d"] = nullptr;
        j["d_tilde"] = nullptr;
        j["poincare"] = nullptr;
    }
    if (job.format == Format::Tsv) {
        for (const auto& [key, val] : j.items()) out << key << '\t' << val.dump() << '\n';
    } else {
        out << j.dump() << '\n';
    }
    return kOk;
}

struct InstanceResult {
    bool passed = false;
    ordered detail;
};

InstanceResult check_instance(const IntMatrix& B, const ExpVec& a) {
    InstanceResult r;
    const Seed s = principal_seed(B);
    const BipartiteQuiver q = bipartite_parts(B);
    const Theorem1Report rep = verify_theorem1(s, q, a);
    const bool unique = triangular_basis(s, q, a, TieBreak::ReverseLex).torus_form == rep.elem.torus_form;
    const WVector w = w_of_a(q, a);
    const TorusElem es = e_star(s, q, w, std::vector<int>(q.n(), 0));
    const bool keystone = es == e_star_closed_form(s, q, w) && es == bar(chi_M(q, s, w));
    r.passed = rep.passed() && unique && keystone;
    r.detail["B"] = B.to_rows();
    r.detail["theorem1"] = parse_json(io::to_json(rep));
    r.detail["tie_break_independent"] = unique;
    r.detail["e_star_keystone"] = keystone;
    r.detail["passed"] = r.passed;
    return r;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
    if (job.a) {
        const IntMatrix B = matrix_of(job);
        const InstanceResult r = check_instance(B, exponent_arg(job, B.rows()));
        out << r.detail.dump() << '\n';
        return r.passed ? kOk : kVerifyFailed;
    }

    const auto instances = make_sweep(job.seed, job.sweep_count, job.sweep_n, job.sweep_bmax, job.sweep_amax, job.B);
    std::vector<InstanceResult> results(instances.size());
    std::vector<std::string> errors(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < instances.size(); i = next++) {
            try {
                results[i] = check_instance(instances[i].B, instances[i].a);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const int jobs = std::max(1, job.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    ordered failures = ordered::array();
    std::size_t passed = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (errors[i].empty() && results[i].passed) {
            ++passed;
            continue;
        }
        ordered f;
        f["index"] = i;
        f["B"] = instances[i].B.to_rows();
        f["a"] = instances[i].a;
        if (!errors[i].empty())
            f["error"] = errors[i];
        else
            f["detail"] = results[i].detail;
        failures.push_back(std::move(f));
    }
    ordered j;
    j["seed"] = job.seed;
    j["instances"] = instances.size();
    j["passed"] = passed;
    j["failures"] = std::move(failures);
    out << j.dump() << '\n';
    return passed == instances.size() ? kOk : kVerifyFailed;
}

std::string read_source(const std::string& text) {
    if (text.empty()) return text;
    const char c = text.front();
    if (c == '[' || c == '{' || c == '(' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return text;
    std::ifstream in(text);
    if (!in) throw DomainError("cannot read input file '" + text + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> list_source(const std::string& text) {
    const std::string s = read_source(text);
    if (s.find('{') != std::string::npos) throw DomainError("expected an integer list, got an object");
    return io::parse_int_list(s);
}

}  // namespace

IntMatrix random_bipartite(std::mt19937_64& rng, int n, int bmax) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> mult(0, bmax);
    std::vector<bool> src(n);
    for (int i = 0; i < n; ++i) src[i] = coin(rng) == 1;
    IntMatrix B(n, n);
    for (int alpha = 0; alpha < n; ++alpha) {
        if (src[alpha]) continue;
        for (int beta = 0; beta < n; ++beta) {
            if (!src[beta]) continue;
            const int x = mult(rng);
            B(alpha, beta) = x;
            B(beta, alpha) = -x;
        }
    }
    return B;
}

std::vector<SweepInstance> make_sweep(std::uint64_t seed, int count, int nmax, int bmax, int amax,
                                      const std::optional<IntMatrix>& fixed_B) {
    if (count < 0 || nmax < 1 || bmax < 0 || amax < 0) throw DomainError("sweep bounds must be nonnegative, n >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ndist(1, nmax);
    std::uniform_int_distribution<int> adist(-amax, amax);
    std::vector<SweepInstance> out;
    out.reserve(count);
    for (int t = 0; t < count; ++t) {
        IntMatrix B = fixed_B ? *fixed_B : random_bipartite(rng, ndist(rng), bmax);
        ExpVec a(2 * B.rows(), 0);
        for (int i = 0; i < B.rows(); ++i) a[i] = adist(rng);
        out.push_back({std::move(B), std::move(a)});
    }
    return out;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
    try {
        if (job.B) bipartite_parts(*job.B);  // validate before dispatch
        switch (job.command) {
            case Command::Basis: return cmd_basis(job, out);
            case Command::Support: return cmd_support(job, out);
            case Command::ChiM: return cmd_chi_m(job, out);
            case Command::EStar: return cmd_e_star(job, out);
            case Command::Verify: return cmd_verify(job, out);
            case Command::Mutate: return cmd_mutate(job, out);
            case Command::Dims: return cmd_dims(job, out);
        }
    } catch (const NotBipartiteError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Triangular bases of bipartite quantum cluster algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string B_text, a_text, w_text, v_text, k_text, frozen_text, format = "auto";
    JobSpec job;
    app.add_option("--B", B_text, "exchange matrix as JSON ([[...]] or {\"B\": [[...]]}) or a file path");
    app.add_option("--a", a_text, "exponent / g-vector, n or 2n integers");
    app.add_option("--w", w_text, "pairs w_1,w'_1,w_2,w'_2,...");
    app.add_option("--v", v_text, "dimension vector, n integers");
    app.add_option("--k", k_text, "mutation sequence, 1-based vertices");
    app.add_option("--frozen", frozen_text, "frozen prefix for e-star, n integers");
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"auto", "json", "tsv"}));
    app.add_option("--seed", job.seed, "seed for randomized sweeps");
    app.add_option("--sweep-n", job.sweep_n, "largest vertex count in sweeps");
    app.add_option("--sweep-bmax", job.sweep_bmax, "largest arrow multiplicity in sweeps");
    app.add_option("--sweep-amax", job.sweep_amax, "largest |a_i| in sweeps");
    app.add_option("--sweep-count", job.sweep_count, "number of sweep instances");
    app.add_option("--jobs", job.jobs, "worker threads for sweeps");
    app.add_option("--out", job.out, "write output to this file");

    const std::pair<const char*, Command> commands[] = {
        {"basis", Command::Basis},   {"support", Command::Support}, {"chi-m", Command::ChiM},
        {"e-star", Command::EStar},  {"verify", Command::Verify},   {"mutate", Command::Mutate},
        {"dims", Command::Dims}};
    const char* help[] = {"triangular basis element C_a as JSON",
                          "TSV of f(v) and the support region around C_a",
                          "chi(M(w)) as a torus element",
                          "generalized monomial E*_{w,frozen}",
                          "check the support and degree bounds; sweep when --a is absent",
                          "mutate the principal seed along --k",
                          "dimension data for (v, w)"};
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        const Command c = commands[i].second;
        app.add_subcommand(commands[i].first, help[i])->callback([&job, c] { job.command = c; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    try {
        if (!B_text.empty()) job.B = io::matrix_from_json(read_source(B_text));
        if (!a_text.empty()) job.a = list_source(a_text);
        if (!w_text.empty()) job.w = list_source(w_text);
        if (!v_text.empty()) job.v = list_source(v_text);
        if (!k_text.empty()) job.k = list_source(k_text);
        if (!frozen_text.empty()) job.frozen = list_source(frozen_text);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    job.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Auto;

    if (job.out.empty()) return run(job, out, err);
    std::ofstream file(job.out);
    if (!file) {
        err << "error: cannot open '" << job.out << "' for writing\n";
        return kBadInput;
    }
    return run(job, file, err);
}

}  // namespace qtri::cli
