#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "uma/checkpoint.hpp"
#include "uma/config.hpp"
#include "uma/dual_space.hpp"
#include "uma/kernels.hpp"
#include "uma/quotient.hpp"
#include "uma/suites.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int simulate(const std::string& config_path, const std::string& out_dir, std::optional<std::uint64_t> seed,
             unsigned threads) {
    uma::LoadedConfig cfg;
    try {
        cfg = uma::load_config(config_path);
    } catch (const uma::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (seed) {
        cfg.run.seed = *seed;
        cfg.seed_generated = false;
    }
    std::cerr << "seed=" << cfg.run.seed << (cfg.seed_generated ? " (generated)" : "") << '\n';

    fs::create_directories(out_dir);
    const std::string stem = fs::path(config_path).stem().string();
    const fs::path csv_path = fs::path(out_dir) / (stem + ".csv");
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
        std::cerr << "error: cannot write " << csv_path.string() << '\n';
        return kFailure;
    }
    uma::BatchOptions opts;
    opts.threads = threads;
    opts.checkpoint_prefix = (fs::path(out_dir) / stem).string();
    uma::BatchSummary summary = uma::run_batch(cfg.run, csv, opts);
    csv.close();
    if (!csv) {
        std::cerr << "error: failed writing " << csv_path.string() << '\n';
        return kFailure;
    }
    const std::string line = summary.line() + " seed=" + std::to_string(cfg.run.seed);
    std::ofstream(fs::path(out_dir) / (stem + ".summary.txt")) << line << '\n';
    std::cout << line << '\n' << "csv=" << csv_path.string() << '\n';
    return kOk;
}

int verify(bool quick, std::uint64_t seed, const std::string& fault_name, const std::string& out_dir) {
    auto fault = uma::suites::parse_fault(fault_name);
    if (!fault) {
        std::cerr << "error: unknown fault '" << fault_name << "'\n";
        return kUsage;
    }
    uma::suites::Options o{seed, quick, *fault};
    std::cout << "simd=" << uma::simd::isa_name(uma::simd::active_isa()) << " seed=" << seed
              << (quick ? " scale=quick" : " scale=full") << '\n';
    auto results = uma::suites::run_all(o);
    std::cout << uma::suites::format_table(results);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    if (ok) return kOk;
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / "counterexamples.txt";
    std::ofstream(path) << uma::suites::format_counterexamples(results);
    std::cout << "counterexamples=" << path.string() << '\n';
    return kFailure;
}

// vertex as its sorted literal names, the constant 1 left out
std::string vertex_text(const uma::Sigma& sigma, const uma::LiteralSet& u) {
    std::vector<std::string> names;
    u.for_each([&](uma::Literal a) {
        if (!a.is_constant()) names.push_back(sigma.name(a));
    });
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

int inspect(const std::string& path, bool show_dual) {
    uma::Snapshot snap = uma::load_checkpoint(path);
    const uma::Sigma& sigma = snap.sigma();
    std::cout << "kind: " << uma::to_string(snap.kind()) << '\n'
              << "queries: " << sigma.n_pairs() << '\n'
              << "updates: " << snap.update_count() << '\n';
    uma::Pcr g = snap.derived_pcr();
    g.freeze();
    auto rels = g.relations();
    std::cout << "relations: " << rels.size() << '\n';
    for (auto [a, b] : rels) std::cout << sigma.name(a) << " -> " << sigma.name(b) << '\n';
    std::cout << "# negligible: " << sigma.format(g.negligibles()) << '\n'
              << "# minset: " << sigma.format(snap.minset()) << '\n';
    if (g.is_degenerate()) {
        std::cout << "# degenerate: no quotient\n";
        return kOk;
    }
    uma::PocQuotient q = uma::canonical_quotient(g);
    const uma::Sigma& qs = q.quotient.sigma();
    std::cout << "# classes: " << q.class_count() << " (" << qs.n_pairs() << " pairs)\n";
    for (std::size_t c = 0; c < qs.n_pairs(); ++c)
        std::cout << "# class " << qs.query_name(c) << " = " << sigma.format(q.classes[qs.positive(c).id()]) << '\n';
    if (show_dual) {
        if (qs.n_pairs() > uma::DualSpace::kDefaultCap) {
            std::cout << "dual: too large to enumerate (" << qs.n_pairs() << " quotient pairs)\n";
        } else {
            auto dual = uma::DualSpace::enumerate(q.quotient, uma::DualSpace::kDefaultCap);
            auto edges = dual.edges();
            std::cout << "dual vertices: " << dual.size() << ", edges: " << edges.size() << '\n';
            for (auto [i, j] : edges)
                std::cout << vertex_text(qs, dual.vertex(i)) << " -- " << vertex_text(qs, dual.vertex(j)) << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pointed complemented relations: learning, agents and verification"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "run the batch described by a config file");
    std::string config_path, sim_out = ".";
    std::optional<std::uint64_t> sim_seed;
    unsigned threads = 0;
    sim->add_option("--config", config_path, "YAML run config")->required();
    sim->add_option("--out", sim_out, "output directory");
    sim->add_option("--seed", sim_seed, "override run.seed");
    sim->add_option("--threads", threads, "worker threads, 0 for all cores");

    auto* ver = app.add_subcommand("verify", "run the oracle suites");
    bool quick = false;
    std::uint64_t ver_seed = uma::suites::Options{}.seed;
    std::string fault = "none", ver_out = ".";
    ver->add_flag("--quick", quick, "reduced case counts");
    ver->add_option("--seed", ver_seed, "suite seed");
    ver->add_option("--inject-fault", fault,
                    "corrupt one closed form: propagation, median, projection, quotient, minset, weights");
    ver->add_option("--out", ver_out, "where counterexamples.txt goes on failure");

    auto* ins = app.add_subcommand("inspect", "describe a snapshot checkpoint");
    std::string snap_path;
    bool show_dual = false;
    ins->add_option("checkpoint", snap_path, "checkpoint file")->required();
    ins->add_flag("--dual", show_dual, "also enumerate the dual of the derived quotient");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*sim) return simulate(config_path, sim_out, sim_seed, threads);
        if (*ver) return verify(quick, ver_seed, fault, ver_out);
        if (*ins) return inspect(snap_path, show_dual);
    } catch (const uma::CheckpointError& e) {
        std::cerr << "error: " << snap_path << ": " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
