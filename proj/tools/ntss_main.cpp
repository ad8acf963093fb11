#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ntss/brute.hpp"
#include "ntss/characterize.hpp"
#include "ntss/dp.hpp"
#include "ntss/hardness.hpp"
#include "ntss/kernelize.hpp"
#include "ntss/random_gen.hpp"
#include "ntss/simulate.hpp"
#include "ntss/treedecomp.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"exact solver suite for non-monotone target set selection with thresholds in {0,1,deg}"};
    app.require_subcommand(1);

    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "diagnostics on standard error");
    auto note = [&verbose](const std::string& msg) {
        if (verbose)
            std::cerr << msg << '\n';
    };

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the activation process from a seed set");
    std::string sim_instance, sim_seed;
    bool sim_trace = false;
    long long sim_max_states = 0;
    sim->add_option("--instance", sim_instance, "instance file")->required();
    sim->add_option("--seed", sim_seed, "seed set, comma-separated ids ('' = empty)")->required();
    sim->add_flag("--trace", sim_trace, "print every state, one per line");
    sim->add_option("--max-states", sim_max_states, "abort after storing this many distinct states");

    // check
    auto* chk = app.add_subcommand("check", "decide whether a seed set is a target set");
    std::string chk_instance, chk_seed, chk_method = "both";
    chk->add_option("--instance", chk_instance, "instance file")->required();
    chk->add_option("--seed", chk_seed, "candidate set, comma-separated ids")->required();
    chk->add_option("--method", chk_method, "sim | conditions | both (default both)")
        ->check(CLI::IsMember({"sim", "conditions", "both"}));

    // conditions
    auto* cnd = app.add_subcommand("conditions", "print the target-set conditions of a reduced instance");
    std::string cnd_instance;
    cnd->add_option("--instance", cnd_instance, "instance file (must be fully reduced)")->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "apply the forced-vertex reduction to a fixpoint");
    std::string red_instance, red_emit;
    red->add_option("--instance", red_instance, "instance file")->required();
    red->add_option("--emit-kernel", red_emit, "write the reduced instance to this file");

    // solve
    auto* sol = app.add_subcommand("solve", "minimum target set");
    std::string sol_instance, sol_method, sol_td;
    bool sol_emit_witness = false;
    int sol_threads = 1;
    sol->add_option("--instance", sol_instance, "instance file")->required();
    sol->add_option("--method", sol_method, "brute | tw")
        ->required()
        ->check(CLI::IsMember({"brute", "tw"}));
    sol->add_option("--td", sol_td, "tree decomposition file (.td) for --method tw");
    sol->add_flag("--emit-witness", sol_emit_witness, "also print the witness for --method tw");
    sol->add_option("--threads", sol_threads, "worker threads for --method brute (output-invariant)");

    // generate
    auto* gen = app.add_subcommand("generate", "build a target-set instance from a restricted CNF");
    std::string gen_cnf, gen_out, gen_labels;
    int gen_distance = 1;
    gen->add_option("--cnf", gen_cnf, "DIMACS CNF file")->required();
    gen->add_option("--distance", gen_distance, "minimum distance between degree-3 vertices")->required();
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->add_option("--labels", gen_labels, "write construction labels to this file");

    // cross-validate
    auto* xv = app.add_subcommand("cross-validate", "compare simulation against the condition checker");
    std::string xv_instance;
    bool xv_random = false;
    int xv_n = 0, xv_trials = 0;
    std::uint64_t xv_seed = 0;
    xv->add_option("--instance", xv_instance, "instance file (exhaustive over all subsets)");
    xv->add_flag("--random", xv_random, "validate pseudo-random instances instead of a file");
    xv->add_option("--n", xv_n, "vertex count for --random");
    xv->add_option("--trials", xv_trials, "instance count for --random");
    xv->add_option("--seed", xv_seed, "RNG seed for --random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (sim->parsed()) {
        ntss::Instance inst = ntss::parse_instance(slurp(sim_instance));
        ntss::VertexSet seed = ntss::parse_vertex_set(sim_seed, inst.n());
        ntss::ProcessOutcome out = ntss::run(inst, seed, sim_trace, sim_max_states);
        if (sim_trace)
            for (const ntss::VertexSet& state : *out.trace)
                std::cout << ntss::format_vertex_set(state) << '\n';
        if (out.reached_all) {
            std::cout << "reached-all yes\n";
            std::cout << "t0 " << *out.t0 << '\n';
        } else {
            std::cout << "reached-all no\n";
            std::cout << "cycle-start " << out.cycle_start << '\n';
            std::cout << "cycle-length " << out.cycle_length << '\n';
        }
        return 0;
    }

    if (chk->parsed()) {
        ntss::Instance inst = ntss::parse_instance(slurp(chk_instance));
        ntss::VertexSet seed = ntss::parse_vertex_set(chk_seed, inst.n());
        std::optional<bool> by_sim, by_cond;
        if (chk_method != "conditions")
            by_sim = ntss::is_target_set(inst, seed);
        if (chk_method != "sim")
            by_cond = ntss::decide_target_set_fast(inst, seed);
        if (by_sim && by_cond && *by_sim != *by_cond) {
            std::cerr << "MISMATCH sim=" << (*by_sim ? "yes" : "no")
                      << " conditions=" << (*by_cond ? "yes" : "no") << '\n';
            return 1;
        }
        bool verdict = by_sim ? *by_sim : *by_cond;
        std::cout << "target-set: " << (verdict ? "yes" : "no") << '\n';
        return 0;
    }

    if (cnd->parsed()) {
        ntss::Instance inst = ntss::parse_instance(slurp(cnd_instance));
        ntss::Classification cls = ntss::classify(inst);
        std::cout << ntss::format_conditions(ntss::extract_conditions(cls, inst.graph()));
        return 0;
    }

    if (red->parsed()) {
        ntss::Instance inst = ntss::parse_instance(slurp(red_instance));
        ntss::Kernelization k = ntss::kernelize(inst);
        std::cout << "forced " << ntss::format_vertex_set(k.forced) << '\n';
        std::cout << "kernel-n " << k.kernel.n() << '\n';
        std::cout << "kernel-m " << k.kernel.graph().edge_count() << '\n';
        std::cout << "rounds " << k.rounds.size() << '\n';
        if (!red_emit.empty())
            spill(red_emit, ntss::serialize_instance(k.kernel));
        return 0;
    }

    if (sol->parsed()) {
        ntss::Instance inst = ntss::parse_instance(slurp(sol_instance));
        note("instance: n=" + std::to_string(inst.n()) + " m=" +
             std::to_string(inst.graph().edge_count()));
        if (sol_method == "brute") {
            ntss::OracleResult res = ntss::min_target_bruteforce(inst, 20, sol_threads);
            note("subsets examined: " + std::to_string(res.subsets_examined));
            std::cout << "minimum " << res.min_size << '\n';
            std::cout << "witness " << ntss::format_vertex_set(res.witness) << '\n';
        } else {
            std::optional<ntss::TreeDecomposition> td;
            if (!sol_td.empty()) {
                td = ntss::parse_td(slurp(sol_td), inst);
                note("decomposition: " + std::to_string(td->bags.size()) + " bags, width " +
                     std::to_string(td->width()));
            }
            ntss::SolveResult res = ntss::solve(inst, td);
            std::cout << "minimum " << res.min_size << '\n';
            if (sol_emit_witness)
                std::cout << "witness " << ntss::format_vertex_set(res.witness) << '\n';
        }
        return 0;
    }

    if (gen->parsed()) {
        ntss::RestrictedCnf cnf = ntss::parse_dimacs(slurp(gen_cnf));
        std::vector<std::string> violations = ntss::validate_restricted(cnf);
        if (!violations.empty()) {
            for (const std::string& v : violations)
                std::cerr << "restriction violated: " << v << '\n';
            return 1;
        }
        ntss::GeneratedInstance g = ntss::generate(cnf, gen_distance);
        spill(gen_out, ntss::serialize_instance(g.instance));
        if (!gen_labels.empty())
            spill(gen_labels, ntss::format_labels(g));
        std::cout << "order " << g.instance.n() << '\n';
        std::cout << "edges " << g.instance.graph().edge_count() << '\n';
        return 0;
    }

    if (xv->parsed()) {
        if (xv_random) {
            if (xv_n < 1 || xv_trials < 1)
                throw CLI::ValidationError("cross-validate", "--random requires --n and --trials");
            if (xv_n > 16)
                throw std::runtime_error("cross-validate: --n is limited to 16");
            ntss::Lcg rng(xv_seed);
            unsigned long long total = 0;
            for (int trial = 1; trial <= xv_trials; ++trial) {
                ntss::Instance inst = ntss::random_instance(xv_n, 40, rng);
                ntss::CrossValidationReport rep = ntss::cross_validate(inst);
                total += rep.subsets_checked;
                if (!rep.consistent) {
                    std::cout << "MISMATCH trial=" << trial
                              << " X=" << ntss::format_vertex_set(rep.mismatch)
                              << " sim=" << (rep.sim_value ? "yes" : "no")
                              << " conditions=" << (rep.fast_value ? "yes" : "no") << '\n';
                    std::cerr << ntss::serialize_instance(inst);
                    return 0;
                }
            }
            std::cout << "consistent " << total << " over " << xv_trials << " instances\n";
        } else {
            if (xv_instance.empty())
                throw CLI::ValidationError("cross-validate", "need --instance or --random");
            ntss::Instance inst = ntss::parse_instance(slurp(xv_instance));
            ntss::CrossValidationReport rep = ntss::cross_validate(inst);
            if (rep.consistent) {
                std::cout << "consistent " << rep.subsets_checked << '\n';
            } else {
                std::cout << "MISMATCH X=" << ntss::format_vertex_set(rep.mismatch)
                          << " sim=" << (rep.sim_value ? "yes" : "no")
                          << " conditions=" << (rep.fast_value ? "yes" : "no") << '\n';
            }
        }
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
