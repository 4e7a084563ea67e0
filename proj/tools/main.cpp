// hyperlap command-line tool: ingestion, Laplacian export, hyperedge
// centralities, SIR simulation, and the removal-experiment harness.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperlap/centrality.hpp"
#include "hyperlap/dataset_io.hpp"
#include "hyperlap/experiment.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/simplex.hpp"
#include "hyperlap/sir.hpp"
#include "hyperlap/spectral.hpp"
#include "hyperlap/stats.hpp"
#include "hyperlap/toy.hpp"

using json = nlohmann::json;
using namespace hyperlap;

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

std::uint64_t ensure_seed(std::optional<std::uint64_t>& seed) {
    if (!seed) {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cout << "seed: " << *seed << " (generated; pass --seed to replay)\n";
    }
    return *seed;
}

SimplexRegistry load_registry(const std::string& path) {
    return read_native_file(path);
}

std::string vertices_string(const Simplex& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) os << ',';
        os << s.vertices[i];
    }
    return os.str();
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw FormatError("cannot open " + path + " for writing");
    return file;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << content;
}

std::vector<double> parse_grid(const std::string& text) {
    // "lo:hi:step" or a comma-separated list
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo, hi, step;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0)
            throw ArgumentError("grid must be lo:hi:step with step > 0, got '" + text + "'");
        for (double x = lo; x <= hi + 1e-12; x += step) out.push_back(x);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ArgumentError("bad grid value '" + tok + "'");
        }
    }
    if (out.empty()) throw ArgumentError("empty grid '" + text + "'");
    return out;
}

struct CentralityOptions {
    double t = 0.5;
    std::string dff_distribution = "hyperedges";  // or "all"
    int eigenpairs = 0;                           // 0 = automatic
    bool weighted_paths = false;
    int workers = 0;
};

Eigen::Index auto_eigenpairs(Eigen::Index n, int flag) {
    if (flag > 0) return std::min<Eigen::Index>(flag, n);
    return n <= 5000 ? n : 2000;
}

CentralityResult compute_measure(const SimplexRegistry& reg, const SpMat& lh, Measure m,
                                 const CentralityOptions& opt) {
    switch (m) {
        case Measure::Degree:
            return degree_centrality(reg, lh);
        case Measure::Closeness:
            return closeness_centrality(reg, simplex_graph(lh), opt.weighted_paths, opt.workers);
        case Measure::Betweenness:
            return betweenness_centrality(reg, simplex_graph(lh), opt.weighted_paths, opt.workers);
        case Measure::Dff: {
            SpMat lap = diffusion_laplacian(lh);
            SpectralDecomposition dec =
                eig_sym(Eigen::MatrixXd(lap), auto_eigenpairs(lap.rows(), opt.eigenpairs));
            for (const auto& w : dec.warnings) std::cerr << "warning: " << w << "\n";
            DffConfig cfg = opt.dff_distribution == "all"
                                ? DffConfig::uniform_all(reg, opt.t)
                                : DffConfig::uniform_hyperedges(reg, opt.t);
            return dff_centrality(reg, dec, cfg);
        }
    }
    throw ArgumentError("unreachable measure");
}

std::vector<Measure> parse_measures(const std::vector<std::string>& names) {
    std::vector<Measure> out;
    for (const auto& n : names) {
        if (n == "all")
            return {Measure::Dff, Measure::Degree, Measure::Betweenness, Measure::Closeness};
        out.push_back(measure_from_name(n));
    }
    if (out.empty())
        out = {Measure::Dff, Measure::Degree, Measure::Betweenness, Measure::Closeness};
    return out;
}

void print_centrality_table(std::ostream& out, const SimplexRegistry& reg,
                            const CentralityResult& res) {
    out << "# measure: " << measure_name(res.measure)
        << (score_ascending(res.measure) ? " (ascending: lower is more influential)"
                                         : " (descending: higher is more influential)")
        << "\n";
    out << "id\tvertices\tmeasure\tscore\trank\n";
    std::vector<int> rank_of(static_cast<size_t>(reg.size()), 0);
    for (size_t pos = 0; pos < res.ranking.size(); ++pos)
        rank_of[static_cast<size_t>(res.ranking[pos])] = static_cast<int>(pos) + 1;
    for (size_t i = 0; i < res.hyperedges.size(); ++i) {
        const SimplexId id = res.hyperedges[i];
        char score[64];
        std::snprintf(score, sizeof(score), "%.12g", res.scores[i]);
        out << id << '\t' << vertices_string(reg.simplex(id)) << '\t'
            << measure_name(res.measure) << '\t' << score << '\t'
            << rank_of[static_cast<size_t>(id)] << "\n";
    }
}

json stats_json(const DatasetStats& stats, const std::string& policy) {
    return json{{"vertices", stats.vertices},
                {"hyperedges", stats.hyperedges},
                {"k_max", stats.k_max},
                {"k_avg", stats.k_avg},
                {"dedup", policy}};
}

json sweep_json(const SweepReport& rep) {
    json points = json::array();
    for (const auto& pt : rep.points)
        points.push_back(json{{"centrality", pt.measure},
                              {"step", pt.step},
                              {"x", pt.x},
                              {"f1", pt.f1},
                              {"f2", pt.f2},
                              {"rs", pt.rs},
                              {"stderr", pt.stderr_rs}});
    return json{{"kind", rep.kind},
                {"mu", rep.mu},
                {"mu_c", rep.mu_c},
                {"mu_clamped", rep.mu_clamped},
                {"removal_fraction", rep.removal_fraction},
                {"points", points}};
}

std::string sweep_table(const SweepReport& rep, const json& config) {
    std::ostringstream os;
    os << "# " << rep.kind << " config: " << config.dump() << "\n";
    os << "centrality\tstep\tx\tf1\tf2\trs\tstderr\trho\n";
    for (const auto& pt : rep.points) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s\t%d\t%.10g\t%.10g\t%.10g\t%.10g\t%.10g\tnan\n",
                      pt.measure.c_str(), pt.step, pt.x, pt.f1, pt.f2, pt.rs, pt.stderr_rs);
        os << buf;
    }
    return os.str();
}

json rank_removal_json(const RankRemovalReport& rep) {
    json parts = json::array();
    for (size_t i = 0; i < rep.part_results.size(); ++i) {
        const PartResult& pr = rep.part_results[i];
        parts.push_back(json{{"step", i},
                             {"removed", pr.removed},
                             {"mean_score", pr.mean_score},
                             {"f2", pr.f2},
                             {"rs", pr.rs},
                             {"stderr", pr.stderr_rs}});
    }
    return json{{"centrality", rep.measure},
                {"parts", rep.parts},
                {"mu", rep.mu},
                {"mu_c", rep.mu_c},
                {"mu_clamped", rep.mu_clamped},
                {"mu_recomputed", rep.mu_recomputed},
                {"f1", rep.f1},
                {"stderr_f1", rep.stderr_f1},
                {"rho_rank", rep.rho_rank},
                {"rho_score", rep.rho_score},
                {"part_results", parts}};
}

std::string rank_removal_table(const RankRemovalReport& rep, const json& config) {
    std::ostringstream os;
    os << "# rank-removal config: " << config.dump() << "\n";
    os << "centrality\tstep\tx\tf1\tf2\trs\tstderr\trho\n";
    for (size_t i = 0; i < rep.part_results.size(); ++i) {
        const PartResult& pr = rep.part_results[i];
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s\t%zu\t%zu\t%.10g\t%.10g\t%.10g\t%.10g\t%.10g\n",
                      rep.measure.c_str(), i, i, rep.f1, pr.f2, pr.rs, pr.stderr_rs,
                      rep.rho_rank);
        os << buf;
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph Laplacians, hyperedge centralities, and SIR removal experiments"};
    app.require_subcommand(1);

    // ---- ingest ----------------------------------------------------------
    struct {
        std::string format = "benson";
        std::string prefix;
        std::string input;
        std::string out;
        std::string dedup = "unit";
    } ingest;
    CLI::App* cmd_ingest = app.add_subcommand("ingest", "parse a dataset and write the native format");
    cmd_ingest->add_option("--format", ingest.format, "benson or native")
        ->check(CLI::IsMember({"benson", "native"}));
    cmd_ingest->add_option("--prefix", ingest.prefix, "path prefix of <prefix>-nverts.txt/-simplices.txt");
    cmd_ingest->add_option("--input", ingest.input, "native file (with --format native)");
    cmd_ingest->add_option("--out", ingest.out, "output native file")->required();
    cmd_ingest->add_option("--dedup", ingest.dedup, "duplicate hyperedge policy")
        ->check(CLI::IsMember({"unit", "multiplicity"}));

    // ---- laplacian -------------------------------------------------------
    struct {
        std::string input;
        std::string which = "lh";
        int k = 0;
        std::string format = "dense";
        std::string out;
    } lap;
    CLI::App* cmd_lap = app.add_subcommand("laplacian", "build and export a Laplacian matrix");
    cmd_lap->add_option("--input", lap.input, "native hypergraph file")->required();
    cmd_lap->add_option("--which", lap.which, "l0, lk, lh, up, down, or both")
        ->check(CLI::IsMember({"l0", "lk", "lh", "up", "down", "both"}));
    cmd_lap->add_option("--k", lap.k, "dimension for lk/up/down/both");
    cmd_lap->add_option("--format", lap.format, "dense or coo")
        ->check(CLI::IsMember({"dense", "coo"}));
    cmd_lap->add_option("--out", lap.out, "output file (default stdout)");

    // ---- centrality ------------------------------------------------------
    struct {
        std::string input;
        std::vector<std::string> measures{"all"};
        std::string out;
        CentralityOptions opt;
    } cent;
    CLI::App* cmd_cent = app.add_subcommand("centrality", "score and rank hyperedges");
    cmd_cent->add_option("--input", cent.input, "native hypergraph file")->required();
    cmd_cent->add_option("--measure", cent.measures,
                         "dff, degree, betweenness, closeness, or all (repeatable)");
    cmd_cent->add_option("--t", cent.opt.t, "diffusion time for dff");
    cmd_cent->add_option("--dff-distribution", cent.opt.dff_distribution,
                         "hyperedges (default) or all simplices")
        ->check(CLI::IsMember({"hyperedges", "all"}));
    cmd_cent->add_option("--eigenpairs", cent.opt.eigenpairs,
                         "spectral truncation (0 = full for N<=5000, else 2000)");
    cmd_cent->add_flag("--weighted-paths", cent.opt.weighted_paths,
                       "use inverse-weight path lengths for closeness/betweenness");
    cmd_cent->add_option("--workers", cent.opt.workers, "parallelism cap (0 = hardware)");
    cmd_cent->add_option("--out", cent.out, "output file (default stdout)");

    // ---- sir -------------------------------------------------------------
    struct {
        std::string input;
        double mu_ratio = 1.5;
        std::optional<double> mu;
        double beta = 1.0;
        int trials = 100;
        std::optional<std::uint64_t> seed;
        int workers = 0;
        std::string out;
    } sir;
    CLI::App* cmd_sir = app.add_subcommand("sir", "run the SIR sweep over all seed vertices");
    cmd_sir->add_option("--input", sir.input, "native hypergraph file")->required();
    cmd_sir->add_option("--mu-ratio", sir.mu_ratio, "infection rate as a multiple of mu_c");
    cmd_sir->add_option("--mu", sir.mu, "absolute infection rate (overrides --mu-ratio)");
    cmd_sir->add_option("--beta", sir.beta, "recovery probability");
    cmd_sir->add_option("--trials", sir.trials, "trials per seed vertex");
    cmd_sir->add_option("--seed", sir.seed, "master seed (generated and printed if absent)");
    cmd_sir->add_option("--workers", sir.workers, "parallelism cap");
    cmd_sir->add_option("--out", sir.out, "JSON report file (default stdout table only)");

    // ---- evaluate --------------------------------------------------------
    struct {
        std::string input;
        std::vector<std::string> measures{"all"};
        int parts = 50;
        double mu_ratio = 1.5;
        double beta = 1.0;
        int trials = 100;
        std::optional<std::uint64_t> seed;
        int workers = 0;
        bool recompute_mu = false;
        std::string ratios = "0.01:0.25:0.01";
        std::string mu_ratios = "1.0:2.0:0.1";
        double removal = 0.05;
        std::string out_dir = ".";
        CentralityOptions opt;
    } ev;
    CLI::App* cmd_eval = app.add_subcommand("evaluate", "removal experiment protocols");
    cmd_eval->require_subcommand(1);
    CLI::App* ev_rank = cmd_eval->add_subcommand("rank-removal",
                                                 "ranked 50-part removal with Spearman");
    CLI::App* ev_ratio = cmd_eval->add_subcommand("ratio-sweep",
                                                  "fixed rate, varying removed fraction");
    CLI::App* ev_inf = cmd_eval->add_subcommand("infection-sweep",
                                                "fixed removed fraction, varying rate");
    for (CLI::App* sub : {ev_rank, ev_ratio, ev_inf}) {
        sub->add_option("--input", ev.input, "native hypergraph file")->required();
        sub->add_option("--centrality", ev.measures, "measures to evaluate (default all)");
        sub->add_option("--mu-ratio", ev.mu_ratio, "infection rate as a multiple of mu_c");
        sub->add_option("--beta", ev.beta, "recovery probability");
        sub->add_option("--trials", ev.trials, "trials per seed vertex");
        sub->add_option("--seed", ev.seed, "master seed");
        sub->add_option("--workers", ev.workers, "parallelism cap");
        sub->add_option("--out", ev.out_dir, "output directory");
        sub->add_option("--t", ev.opt.t, "diffusion time for dff");
        sub->add_option("--dff-distribution", ev.opt.dff_distribution,
                        "dff distribution: hyperedges or all")
            ->check(CLI::IsMember({"hyperedges", "all"}));
        sub->add_option("--eigenpairs", ev.opt.eigenpairs, "spectral truncation");
        sub->add_flag("--weighted-paths", ev.opt.weighted_paths,
                      "inverse-weight path lengths for closeness/betweenness");
    }
    ev_rank->add_option("--parts", ev.parts, "number of removal parts");
    ev_rank->add_flag("--recompute-mu", ev.recompute_mu,
                      "recompute mu_c on each removal variant (default: hold fixed)");
    ev_ratio->add_option("--ratios", ev.ratios, "removal fractions, lo:hi:step or list");
    ev_inf->add_option("--mu-ratios", ev.mu_ratios, "rate multiples, lo:hi:step or list");
    ev_inf->add_option("--removal", ev.removal, "removed fraction of the ranking");

    // ---- verify-toy ------------------------------------------------------
    CLI::App* cmd_verify = app.add_subcommand("verify-toy",
                                              "check the bundled example against its references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_ingest->parsed()) {
            const DedupPolicy policy =
                ingest.dedup == "multiplicity" ? DedupPolicy::Multiplicity : DedupPolicy::Unit;
            SimplexRegistry reg;
            if (ingest.format == "benson") {
                if (ingest.prefix.empty())
                    throw ArgumentError("--prefix is required with --format benson");
                reg = registry_from_raw(read_benson(ingest.prefix), policy);
            } else {
                if (ingest.input.empty())
                    throw ArgumentError("--input is required with --format native");
                reg = load_registry(ingest.input);
            }
            write_native_file(reg, ingest.out);
            DatasetStats stats = dataset_report(reg);
            std::cout << stats.vertices << " vertices, " << stats.hyperedges
                      << " hyperedges, k_max " << stats.k_max << ", k_avg " << stats.k_avg
                      << ", dedup " << ingest.dedup << "\n";
            std::cout << "stats: " << stats_json(stats, ingest.dedup).dump() << "\n";
            return 0;
        }

        if (cmd_lap->parsed()) {
            SimplexRegistry reg = load_registry(lap.input);
            SpMat m;
            if (lap.which == "l0") m = build_Lk(reg, 0);
            else if (lap.which == "lk") m = build_Lk(reg, lap.k);
            else if (lap.which == "lh") m = assemble_LH(reg);
            else if (lap.which == "up") m = build_updown(reg, lap.k, Direction::Up);
            else if (lap.which == "down") m = build_updown(reg, lap.k, Direction::Down);
            else m = build_updown(reg, lap.k, Direction::Both);
            std::ofstream file;
            std::ostream& out = open_or_stdout(file, lap.out);
            if (lap.format == "dense") write_matrix_dense(m, out);
            else write_matrix_coo(m, out);
            return 0;
        }

        if (cmd_cent->parsed()) {
            SimplexRegistry reg = load_registry(cent.input);
            SpMat lh = assemble_LH(reg);
            std::ofstream file;
            std::ostream& out = open_or_stdout(file, cent.out);
            out << "# config: "
                << json{{"input", cent.input},
                        {"t", cent.opt.t},
                        {"dff_distribution", cent.opt.dff_distribution},
                        {"eigenpairs", cent.opt.eigenpairs},
                        {"weighted_paths", cent.opt.weighted_paths}}
                       .dump()
                << "\n";
            for (Measure m : parse_measures(cent.measures))
                print_centrality_table(out, reg, compute_measure(reg, lh, m, cent.opt));
            return 0;
        }

        if (cmd_sir->parsed()) {
            SimplexRegistry reg = load_registry(sir.input);
            ContactNetwork net = contact_network(reg);
            SirParams params;
            params.mu_ratio = sir.mu_ratio;
            params.mu = sir.mu;
            params.beta = sir.beta;
            params.trials = sir.trials;
            params.seed = ensure_seed(sir.seed);
            params.workers = sir.workers;

            const double mu_c = critical_infection_rate(net);
            SirOutcome out = mean_affected_scale(net, params);
            if (out.mu_clamped) std::cerr << "warning: infection rate clamped to 1\n";

            std::cout << "vertex\ttrials\tmean_affected\tf_u\n";
            for (int u = 0; u < net.n; ++u) {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "%lld\t%d\t%.10g\t%.10g\n",
                              static_cast<long long>(reg.vertex_label(u)), params.trials,
                              out.mean_affected[static_cast<size_t>(u)],
                              out.f_u[static_cast<size_t>(u)]);
                std::cout << buf;
            }
            std::cout << "F " << out.f_mean << " (mu_c " << mu_c << ", mu " << out.mu << ")\n";

            if (!sir.out.empty()) {
                json doc{{"tool", "hyperlap"},
                         {"command", "sir"},
                         {"config",
                          json{{"input", sir.input},
                               {"mu_ratio", sir.mu_ratio},
                               {"mu", sir.mu ? json(*sir.mu) : json()},
                               {"beta", sir.beta},
                               {"trials", sir.trials},
                               {"seed", params.seed},
                               {"workers", sir.workers}}},
                         {"results", json{{"mu_c", mu_c},
                                          {"mu", out.mu},
                                          {"mu_clamped", out.mu_clamped},
                                          {"f_mean", out.f_mean},
                                          {"f_u", out.f_u},
                                          {"mean_affected", out.mean_affected}}}};
                write_text_file(sir.out, doc.dump(2) + "\n");
            }
            return 0;
        }

        if (cmd_eval->parsed()) {
            SimplexRegistry reg = load_registry(ev.input);
            SpMat lh = assemble_LH(reg);
            ev.opt.workers = ev.workers;

            SirParams params;
            params.mu_ratio = ev.mu_ratio;
            params.beta = ev.beta;
            params.trials = ev.trials;
            params.seed = ensure_seed(ev.seed);
            params.workers = ev.workers;

            std::vector<CentralityResult> cents;
            for (Measure m : parse_measures(ev.measures))
                cents.push_back(compute_measure(reg, lh, m, ev.opt));

            std::filesystem::create_directories(ev.out_dir);
            json config{{"input", ev.input},
                        {"mu_ratio", ev.mu_ratio},
                        {"beta", ev.beta},
                        {"trials", ev.trials},
                        {"seed", params.seed},
                        {"workers", ev.workers},
                        {"t", ev.opt.t},
                        {"dff_distribution", ev.opt.dff_distribution},
                        {"weighted_paths", ev.opt.weighted_paths}};

            if (ev_rank->parsed()) {
                config["parts"] = ev.parts;
                config["recompute_mu"] = ev.recompute_mu;
                json results = json::object();
                std::string tables;
                for (const CentralityResult& c : cents) {
                    RankRemovalReport rep =
                        part_removal_experiment(reg, c, ev.parts, params, ev.recompute_mu);
                    std::cout << "rank-removal " << rep.measure << ": rho_rank=" << rep.rho_rank
                              << " rho_score=" << rep.rho_score << " (f1=" << rep.f1 << ")\n";
                    results[rep.measure] = rank_removal_json(rep);
                    tables += rank_removal_table(rep, config);
                }
                json doc{{"tool", "hyperlap"},
                         {"command", "evaluate rank-removal"},
                         {"config", config},
                         {"results", results}};
                write_text_file(ev.out_dir + "/rank_removal.json", doc.dump(2) + "\n");
                write_text_file(ev.out_dir + "/rank_removal.tsv", tables);
                std::cout << "wrote " << ev.out_dir << "/rank_removal.{json,tsv}\n";
            } else if (ev_ratio->parsed()) {
                std::vector<double> grid = parse_grid(ev.ratios);
                config["ratios"] = grid;
                SweepReport rep = ratio_sweep(reg, cents, grid, params);
                json doc{{"tool", "hyperlap"},
                         {"command", "evaluate ratio-sweep"},
                         {"config", config},
                         {"results", sweep_json(rep)}};
                write_text_file(ev.out_dir + "/ratio_sweep.json", doc.dump(2) + "\n");
                write_text_file(ev.out_dir + "/ratio_sweep.tsv", sweep_table(rep, config));
                std::cout << "wrote " << ev.out_dir << "/ratio_sweep.{json,tsv}\n";
            } else {
                std::vector<double> grid = parse_grid(ev.mu_ratios);
                config["mu_ratios"] = grid;
                config["removal"] = ev.removal;
                SweepReport rep = infection_sweep(reg, cents, grid, ev.removal, params);
                json doc{{"tool", "hyperlap"},
                         {"command", "evaluate infection-sweep"},
                         {"config", config},
                         {"results", sweep_json(rep)}};
                write_text_file(ev.out_dir + "/infection_sweep.json", doc.dump(2) + "\n");
                write_text_file(ev.out_dir + "/infection_sweep.tsv", sweep_table(rep, config));
                std::cout << "wrote " << ev.out_dir << "/infection_sweep.{json,tsv}\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) {
            ToyVerification v = verify_toy();
            print_verification(v, std::cout);
            return v.ok() ? 0 : kExitData;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return dynamic_cast<const ArgumentError*>(&e) ? kExitUsage : kExitData;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
