// permlcs: construct, verify, sample, distance and bench subcommands.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = permlcs::cli;

int main(int argc, char** argv) {
    CLI::App app{"Permutation sets with short pairwise longest common subsequences"};
    app.require_subcommand(1);

    cli::ConstructOptions construct;
    std::uint64_t n = 0, k = 0, s = 0;
    auto* c = app.add_subcommand("construct", "Build an algebraic or Hadamard permutation set");
    c->add_option("kind", construct.kind, "algebraic | hadamard")->required();
    auto* c_n = c->add_option("--n", n, "Ground-set size");
    auto* c_k = c->add_option("--k", k, "Number of permutations");
    auto* c_s = c->add_option("--s", s, "Digit base (hadamard)");
    c->add_option("--out", construct.out_path, "Write the set as a PERMSET v1 file");
    c->add_option("--matrix-out", construct.matrix_out, "Write the Hadamard matrix as +/- rows (hadamard)");
    c->add_option("--max-size", construct.max_size, "Cap on s^(k-1) for the Hadamard construction");
    c->add_flag("--timing", construct.timing, "Include wall-clock timings in the report");

    cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check a PERMSET file against the LCS bounds");
    v->add_option("file", verify.in_path, "PERMSET v1 file")->required();
    v->add_option("--bound", verify.bound, "theorem1 | theorem2 | lower | all");
    v->add_flag("--timing", verify.timing, "Include wall-clock timings in the report");

    cli::SampleOptions sample;
    auto* smp = app.add_subcommand("sample", "Random k-sets versus the 2e*sqrt(n) threshold");
    smp->add_option("--n", sample.n, "Ground-set size")->required();
    smp->add_option("--k", sample.k, "Set size");
    smp->add_option("--trials", sample.trials, "Number of sampled sets")->required();
    smp->add_option("--seed", sample.seed, "RNG seed");
    smp->add_option("--lis-csv", sample.lis_csv, "Also write raw LIS samples as CSV (trial,length)");
    smp->add_flag("--timing", sample.timing, "Include wall-clock timings in the report");

    cli::DistanceOptions distance;
    auto* d = app.add_subcommand("distance", "Deletion-distance code report for a PERMSET file");
    d->add_option("file", distance.in_path, "PERMSET v1 file")->required();
    d->add_flag("--timing", distance.timing, "Include wall-clock timings in the report");

    cli::BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Max pairwise LCS over a parameter grid, as CSV");
    b->add_option("--grid", bench.grids,
                  "construction=<algebraic|hadamard|random>;k=<list>;<n|s1|s>=<list> (repeatable)");
    b->add_option("--seed", bench.seed, "RNG seed for random cells");
    b->add_option("--max-size", bench.max_size, "Cap on s^(k-1) for Hadamard cells");
    b->add_flag("--timing", bench.timing, "Measure elapsed_ms (otherwise NA)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    }

    if (*c) {
        if (*c_n) construct.n = n;
        if (*c_k) construct.k = k;
        if (*c_s) construct.s = s;
        return cli::cmd_construct(construct, std::cout, std::cerr);
    }
    if (*v) return cli::cmd_verify(verify, std::cout, std::cerr);
    if (*smp) return cli::cmd_sample(sample, std::cout, std::cerr);
    if (*d) return cli::cmd_distance(distance, std::cout, std::cerr);
    return cli::cmd_bench(bench, std::cout, std::cerr);
}
