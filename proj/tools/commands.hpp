#pragma once

/**
 * @file commands.hpp
 * @brief Subcommands of the `permlcs` tool, independent of argument parsing.
 *
 * Each command writes its report to `out`, diagnostics to `err`, and returns
 * the process exit status: 0 when every asserted bound holds, 1 when one is
 * violated, 2 on a usage or input-format error.
 *
 * JSON reports always carry the keys `command`, `params`, `results`, `pass`.
 * Wall-clock timings are only included when `timing` is set, so reports are
 * byte-identical across runs by default.
 */

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlcs/permlcs.hpp"

namespace permlcs::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2 };

using json = nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string fixed4(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

inline json report(const std::string& command, json params, json results, bool pass) {
    json r;
    r["command"] = command;
    r["params"] = std::move(params);
    r["results"] = std::move(results);
    r["pass"] = pass;
    return r;
}

inline void emit(std::ostream& out, const json& r) { out << r.dump(2) << '\n'; }

inline PermSet load_permset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return read_permset(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << contents;
    if (!f) throw UsageError("failed writing '" + path + "'");
}

inline json provenance_json(const Provenance& p) {
    json j;
    j["construction"] = to_string(p.kind);
    j["params"] = json::object();
    for (const auto& [key, value] : p.params) j["params"][key] = value;
    return j;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

} // namespace detail

// ---------------------------------------------------------------- construct

struct ConstructOptions {
    std::string kind; // algebraic | hadamard
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> s;
    std::optional<std::string> out_path;
    std::optional<std::string> matrix_out;
    std::uint64_t max_size = kDefaultMaxSize;
    bool timing = false;
};

inline int cmd_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::Stopwatch clock;
        json params{{"kind", opt.kind}};
        json results;
        PermSet set;
        if (opt.kind == "algebraic") {
            if (!opt.n || !opt.k) throw UsageError("construct algebraic needs --n and --k");
            if (opt.s) throw UsageError("--s does not apply to the algebraic construction");
            params["n"] = *opt.n;
            params["k"] = *opt.k;
            const ConstructionParams cp = general_params(*opt.n, *opt.k);
            set = build_general(*opt.n, *opt.k);
            results["s1"] = cp.s1;
            results["s2"] = cp.s2;
            results["s3"] = cp.s3;
            results["p"] = cp.p;
            results["n_prime"] = cp.n;
            results["exact"] = cp.n == *opt.n;
            results["pair_bound_2p_minus_1"] = 2 * cp.p - 1;
            results["theorem2_threshold"] = cube_root_bound_value(32.0, *opt.n, *opt.k);
        } else if (opt.kind == "hadamard") {
            if (!opt.k) throw UsageError("construct hadamard needs --k");
            if (opt.s.has_value() == opt.n.has_value()) throw UsageError("construct hadamard needs exactly one of --s, --n");
            params["k"] = *opt.k;
            params["max_size"] = opt.max_size;
            if (opt.s) {
                params["s"] = *opt.s;
                set = build_hadamard_set(*opt.k, *opt.s, opt.max_size);
            } else {
                params["n"] = *opt.n;
                set = build_hadamard_for_n(*opt.k, *opt.n, opt.max_size);
            }
            const auto s = static_cast<std::uint64_t>(set.provenance().params.at("s"));
            results["s"] = s;
            results["n_prime"] = set.provenance().params.at("n_prime");
            results["theorem1_threshold"] = hadamard_lcs_bound(*opt.k, s);
            results["hadamard_construction"] = (*opt.k & (*opt.k - 1)) == 0 ? "sylvester" : "paley";
            if (opt.matrix_out) {
                std::ostringstream m;
                write_hadamard(m, hadamard_of_order(*opt.k));
                detail::write_file(*opt.matrix_out, m.str());
                params["matrix_out"] = *opt.matrix_out;
            }
        } else {
            throw UsageError("unknown construction '" + opt.kind + "' (expected algebraic or hadamard)");
        }
        results["n"] = set.n();
        results["k"] = set.k();
        results["provenance"] = detail::provenance_json(set.provenance());
        if (opt.out_path) {
            detail::write_file(*opt.out_path, to_permset_string(set));
            params["out"] = *opt.out_path;
        }
        if (opt.timing) results["elapsed_ms"] = clock.elapsed_ms();
        detail::emit(out, detail::report("construct", params, results, true));
        return static_cast<int>(kOk);
    });
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
    std::string in_path;
    std::string bound = "all"; // theorem2 | theorem1 | lower | all
    bool timing = false;
};

struct BoundCheck {
    std::string name;
    json threshold;
    std::string relation; // "<=" or ">="
    bool applicable = true;
    bool holds = false;
};

inline bool theorem1_applicable(std::size_t k) { return k >= 4 && k % 4 == 0; }
inline bool theorem2_applicable(std::size_t n, std::size_t k) { return k >= 3 && static_cast<u128>(k) * k <= n; }

inline BoundCheck check_theorem2(std::size_t n, std::size_t k, std::size_t max_lcs) {
    return {"theorem2", cube_root_bound_value(32.0, n, k), "<=", theorem2_applicable(n, k),
            within_cube_root_bound(max_lcs, 32, n, k)};
}

inline BoundCheck check_theorem1(std::size_t n, std::size_t k, std::size_t max_lcs) {
    const std::uint64_t s = ceil_root(n, static_cast<unsigned>(k - 1));
    const std::uint64_t bound = hadamard_lcs_bound(k, s);
    return {"theorem1", bound, "<=", true, max_lcs <= bound};
}

inline BoundCheck check_lower(std::size_t n, std::size_t max_lcs) {
    const std::uint64_t bound = ceil_cbrt(n);
    return {"lower", bound, ">=", true, max_lcs >= bound};
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::Stopwatch clock;
        const std::string& b = opt.bound;
        if (b != "all" && b != "theorem1" && b != "theorem2" && b != "lower")
            throw UsageError("--bound must be one of theorem1, theorem2, lower, all");
        const PermSet set = detail::load_permset(opt.in_path);
        const std::size_t n = set.n(), k = set.k();
        if (k < 2) throw UsageError("verify needs at least two permutations, file has " + std::to_string(k));
        if (b == "theorem1" && !theorem1_applicable(k))
            throw UsageError("theorem1 needs k >= 4 with k a multiple of 4 (Hadamard order), got k = " + std::to_string(k));
        if (b == "lower" && k < 3) throw UsageError("the cube-root lower bound needs k >= 3");

        const LcsMatrix m = lcs_all_pairs(set);
        const std::size_t max_lcs = m.max_pair();
        std::vector<BoundCheck> checks;
        if (b == "theorem2" || (b == "all" && theorem2_applicable(n, k))) checks.push_back(check_theorem2(n, k, max_lcs));
        if (b == "theorem1" || (b == "all" && theorem1_applicable(k))) checks.push_back(check_theorem1(n, k, max_lcs));
        if (b == "lower" || (b == "all" && k >= 3)) checks.push_back(check_lower(n, max_lcs));

        json results;
        results["n"] = n;
        results["k"] = k;
        results["pairwise_lcs"] = json::array();
        for (const auto& pv : m.pairs())
            results["pairwise_lcs"].push_back({{"i", pv.i + 1}, {"j", pv.j + 1}, {"lcs", pv.value}});
        results["max_pair_lcs"] = max_lcs;
        results["min_pair_lcs"] = m.min_pair();
        results["bounds"] = json::array();
        bool pass = true;
        for (const auto& c : checks) {
            results["bounds"].push_back({{"name", c.name},
                                         {"threshold", c.threshold},
                                         {"relation", c.relation},
                                         {"applicable", c.applicable},
                                         {"holds", c.holds}});
            pass = pass && c.holds;
        }
        if (opt.timing) results["elapsed_ms"] = clock.elapsed_ms();
        detail::emit(out, detail::report("verify", {{"in", opt.in_path}, {"bound", b}}, results, pass));
        return static_cast<int>(pass ? kOk : kViolated);
    });
}

// ------------------------------------------------------------------ sample

struct SampleOptions {
    std::uint64_t n = 0;
    std::uint64_t k = 2;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> lis_csv;
    bool timing = false;
};

inline std::string lis_csv(const LisSample& sample) {
    std::ostringstream s;
    s << "trial,length\n";
    for (std::size_t t = 0; t < sample.lengths.size(); ++t) s << t << ',' << sample.lengths[t] << '\n';
    return s.str();
}

inline int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::Stopwatch clock;
        if (opt.n < 1) throw UsageError("--n must be positive");
        if (opt.k < 2) throw UsageError("--k must be at least 2");
        if (opt.trials < 1) throw UsageError("--trials must be positive");
        const ProbabilisticVerdict v = check_probabilistic_bound(opt.n, opt.k, opt.trials, opt.seed);

        json results;
        results["threshold_2e_sqrt_n"] = v.threshold;
        results["violations"] = v.violations;
        results["fraction_below"] = v.fraction_below;
        results["min_max_pair_lcs"] = v.min_max_lcs;
        results["max_max_pair_lcs"] = v.max_max_lcs;
        results["mean_max_pair_lcs"] = v.mean_max_lcs;
        results["max_pair_lcs"] = v.max_lcs;
        results["histogram"] = json::object();
        for (const auto& [value, count] : v.histogram()) results["histogram"][std::to_string(value)] = count;
        bool pass = v.violations == 0;
        if (opt.k >= 3) {
            const std::uint64_t lower = ceil_cbrt(opt.n);
            results["cube_root_lower_bound"] = lower;
            results["lower_bound_holds"] = v.min_max_lcs >= lower;
            pass = pass && v.min_max_lcs >= lower;
        }
        json params{{"n", opt.n}, {"k", opt.k}, {"trials", opt.trials}, {"seed", opt.seed}};
        if (opt.lis_csv) {
            detail::write_file(*opt.lis_csv, lis_csv(sample_lis(opt.n, opt.trials, opt.seed)));
            params["lis_csv"] = *opt.lis_csv;
        }
        if (opt.timing) results["elapsed_ms"] = clock.elapsed_ms();
        detail::emit(out, detail::report("sample", params, results, pass));
        return static_cast<int>(pass ? kOk : kViolated);
    });
}

// ---------------------------------------------------------------- distance

struct DistanceOptions {
    std::string in_path;
    bool timing = false;
};

inline json code_json(const CodeReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"min_distance", r.min_distance},
            {"max_pair_lcs", r.max_pair_lcs},
            {"provenance", to_string(r.provenance)},
            {"duplicate_codewords", r.duplicate_codewords}};
}

inline int cmd_distance(const DistanceOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        detail::Stopwatch clock;
        const PermSet set = detail::load_permset(opt.in_path);
        if (set.k() < 2) throw UsageError("distance needs at least two codewords, file has " + std::to_string(set.k()));
        const CodeReport r = code_report(set);
        if (r.duplicate_codewords) err << "warning: duplicate codewords, minimum distance is 0\n";
        json results{{"code", code_json(r)}};
        if (opt.timing) results["elapsed_ms"] = clock.elapsed_ms();
        detail::emit(out, detail::report("distance", {{"in", opt.in_path}}, results, true));
        return static_cast<int>(kOk);
    });
}

// ------------------------------------------------------------------- bench

struct BenchOptions {
    std::vector<std::string> grids;
    std::uint64_t seed = 0;
    std::uint64_t max_size = kDefaultMaxSize;
    bool timing = false;
};

struct GridCell {
    std::string construction;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> s1;
    std::optional<std::uint64_t> s;
};

namespace detail {
inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) parts.push_back(cur);
    return parts;
}

inline std::uint64_t parse_u64(const std::string& tok) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw UsageError("grid: bad integer '" + tok + "'");
    return v;
}

/// "3,4,5" or "3..8" or a mix ("1,4..6").
inline std::vector<std::uint64_t> parse_values(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        const auto lo = parse_u64(item.substr(0, dots));
        const auto hi = parse_u64(item.substr(dots + 2));
        if (lo > hi || hi - lo > 100000) throw UsageError("grid: bad range '" + item + "'");
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw UsageError("grid: empty value list");
    return out;
}
} // namespace detail

/// construction=<algebraic|hadamard|random>;k=<list>;{n|s1|s}=<list>; cells in key order.
inline std::vector<GridCell> parse_grid(const std::string& spec) {
    std::map<std::string, std::vector<std::uint64_t>> axes;
    std::vector<std::string> constructions;
    for (const auto& field : detail::split(spec, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw UsageError("grid: expected key=values, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "construction") {
            constructions = detail::split(value, ',');
        } else if (key == "k" || key == "n" || key == "s1" || key == "s") {
            axes[key] = detail::parse_values(value);
        } else {
            throw UsageError("grid: unknown key '" + key + "'");
        }
    }
    if (constructions.empty()) throw UsageError("grid: missing construction=");
    if (!axes.count("k")) throw UsageError("grid: missing k=");
    std::vector<GridCell> cells;
    for (const auto& c : constructions) {
        std::string second;
        if (c == "algebraic") {
            if (axes.count("n") == axes.count("s1")) throw UsageError("grid: algebraic needs exactly one of n=, s1=");
            second = axes.count("n") ? "n" : "s1";
        } else if (c == "hadamard") {
            if (axes.count("n") == axes.count("s")) throw UsageError("grid: hadamard needs exactly one of n=, s=");
            second = axes.count("n") ? "n" : "s";
        } else if (c == "random") {
            if (!axes.count("n")) throw UsageError("grid: random needs n=");
            second = "n";
        } else {
            throw UsageError("grid: unknown construction '" + c + "'");
        }
        for (auto k : axes["k"])
            for (auto v : axes[second]) {
                GridCell cell{c, k, {}, {}, {}};
                if (second == "n") cell.n = v;
                else if (second == "s1") cell.s1 = v;
                else cell.s = v;
                cells.push_back(cell);
            }
    }
    return cells;
}

struct BenchRow {
    std::string construction;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t max_lcs = 0;
    std::string bound;
    bool holds = false;
    double elapsed_ms = 0.0;
};

inline BenchRow run_cell(const GridCell& cell, std::uint64_t seed, std::uint64_t max_size) {
    detail::Stopwatch clock;
    BenchRow row{cell.construction, 0, cell.k, 0, "", false, 0.0};
    if (cell.construction == "algebraic") {
        const std::uint64_t n = cell.n ? *cell.n : cell.k * cell.k * cell.s1.value() * *cell.s1 * *cell.s1;
        const PermSet set = build_general(n, cell.k);
        row.n = n;
        row.max_lcs = lcs_all_pairs(set).max_pair();
        row.bound = detail::fixed4(cube_root_bound_value(32.0, n, cell.k));
        row.holds = within_cube_root_bound(row.max_lcs, 32, n, cell.k);
    } else if (cell.construction == "hadamard") {
        const PermSet set = cell.s ? build_hadamard_set(cell.k, *cell.s, max_size)
                                   : build_hadamard_for_n(cell.k, cell.n.value(), max_size);
        const auto s = static_cast<std::uint64_t>(set.provenance().params.at("s"));
        const std::uint64_t bound = hadamard_lcs_bound(cell.k, s);
        row.n = set.n();
        row.max_lcs = lcs_all_pairs(set).max_pair();
        row.bound = std::to_string(bound);
        row.holds = row.max_lcs <= bound;
    } else {
        const std::uint64_t n = cell.n.value();
        if (cell.k < 2) throw UsageError("grid: random sets need k >= 2");
        Rng rng = trial_rng(seed, n * 1000003ull + cell.k);
        const PermSet set = random_set(n, cell.k, rng);
        row.n = n;
        row.max_lcs = lcs_all_pairs(set).max_pair();
        row.bound = detail::fixed4(two_e_sqrt(n));
        row.holds = !reaches_two_e_sqrt(row.max_lcs, n);
    }
    row.elapsed_ms = clock.elapsed_ms();
    return row;
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        std::vector<GridCell> cells;
        for (const auto& g : opt.grids) {
            auto more = parse_grid(g);
            cells.insert(cells.end(), more.begin(), more.end());
        }
        if (cells.empty()) throw UsageError("bench needs a non-empty --grid");
        std::vector<BenchRow> rows;
        rows.reserve(cells.size());
        for (const auto& c : cells) rows.push_back(run_cell(c, opt.seed, opt.max_size));
        bool pass = true;
        out << "construction,n,k,max_lcs,bound,elapsed_ms\n";
        for (const auto& r : rows) {
            out << r.construction << ',' << r.n << ',' << r.k << ',' << r.max_lcs << ',' << r.bound << ','
                << (opt.timing ? detail::fixed4(r.elapsed_ms) : std::string("NA")) << '\n';
            if (!r.holds) {
                err << "bound violated: " << r.construction << " n=" << r.n << " k=" << r.k << " max_lcs=" << r.max_lcs
                    << " bound=" << r.bound << '\n';
                pass = false;
            }
        }
        return static_cast<int>(pass ? kOk : kViolated);
    });
}

} // namespace permlcs::cli
