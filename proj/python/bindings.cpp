// Python bindings for the core operations: registry construction, the two
// Laplacian families, hyperedge centralities, SIR simulation, and the
// removal-experiment harness.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "hyperlap/centrality.hpp"
#include "hyperlap/dataset_io.hpp"
#include "hyperlap/experiment.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/simplex.hpp"
#include "hyperlap/sir.hpp"
#include "hyperlap/spectral.hpp"
#include "hyperlap/stats.hpp"
#include "hyperlap/toy.hpp"

namespace py = pybind11;
using namespace hyperlap;

namespace {

DedupPolicy policy_from(const std::string& name) {
    if (name == "unit") return DedupPolicy::Unit;
    if (name == "multiplicity") return DedupPolicy::Multiplicity;
    throw ArgumentError("dedup policy must be 'unit' or 'multiplicity'");
}

SimplexRegistry build_registry(const std::vector<std::vector<VertexId>>& hyperedges,
                               std::optional<std::vector<VertexId>> vertices,
                               const std::string& policy,
                               std::optional<std::vector<double>> weights) {
    std::vector<WeightedHyperedge> edges;
    edges.reserve(hyperedges.size());
    for (size_t i = 0; i < hyperedges.size(); ++i) {
        const double w = weights ? weights->at(i) : 1.0;
        edges.emplace_back(hyperedges[i], w);
    }
    std::vector<VertexId> verts;
    if (vertices) {
        verts = *vertices;
    } else {
        for (const auto& e : hyperedges) verts.insert(verts.end(), e.begin(), e.end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    }
    return SimplexRegistry::build(verts, edges, policy_from(policy));
}

SirParams params_from(double mu_ratio, std::optional<double> mu, double beta, int trials,
                      std::uint64_t seed, int workers) {
    SirParams p;
    p.mu_ratio = mu_ratio;
    p.mu = mu;
    p.beta = beta;
    p.trials = trials;
    p.seed = seed;
    p.workers = workers;
    return p;
}

py::dict centrality_dict(const CentralityResult& res) {
    py::dict d;
    d["measure"] = measure_name(res.measure);
    d["ascending"] = score_ascending(res.measure);
    d["hyperedges"] = res.hyperedges;
    d["scores"] = res.scores;
    d["ranking"] = res.ranking;
    d["all_scores"] = res.all_scores;
    if (!res.raw.empty()) d["raw"] = res.raw;
    return d;
}

py::dict rank_removal_dict(const RankRemovalReport& rep) {
    py::dict d;
    d["centrality"] = rep.measure;
    d["parts"] = rep.parts;
    d["mu"] = rep.mu;
    d["mu_c"] = rep.mu_c;
    d["f1"] = rep.f1;
    d["rho_rank"] = rep.rho_rank;
    d["rho_score"] = rep.rho_score;
    py::list parts;
    for (const PartResult& pr : rep.part_results) {
        py::dict p;
        p["removed"] = pr.removed;
        p["mean_score"] = pr.mean_score;
        p["f2"] = pr.f2;
        p["rs"] = pr.rs;
        p["stderr"] = pr.stderr_rs;
        parts.append(p);
    }
    d["part_results"] = parts;
    return d;
}

py::dict sweep_dict(const SweepReport& rep) {
    py::dict d;
    d["kind"] = rep.kind;
    d["mu"] = rep.mu;
    d["mu_c"] = rep.mu_c;
    d["removal_fraction"] = rep.removal_fraction;
    py::list pts;
    for (const SweepPoint& pt : rep.points) {
        py::dict p;
        p["centrality"] = pt.measure;
        p["step"] = pt.step;
        p["x"] = pt.x;
        p["f1"] = pt.f1;
        p["f2"] = pt.f2;
        p["rs"] = pt.rs;
        p["stderr"] = pt.stderr_rs;
        pts.append(p);
    }
    d["points"] = pts;
    return d;
}

CentralityResult measure_on(const SimplexRegistry& reg, const std::string& name, double t,
                            const std::string& dff_distribution, int eigenpairs, bool weighted,
                            int workers) {
    const SpMat lh = assemble_LH(reg);
    const Measure m = measure_from_name(name);
    switch (m) {
        case Measure::Degree:
            return degree_centrality(reg, lh);
        case Measure::Closeness:
            return closeness_centrality(reg, simplex_graph(lh), weighted, workers);
        case Measure::Betweenness:
            return betweenness_centrality(reg, simplex_graph(lh), weighted, workers);
        case Measure::Dff: {
            SpMat lap = diffusion_laplacian(lh);
            Eigen::Index m_eff = eigenpairs > 0 ? std::min<Eigen::Index>(eigenpairs, lap.rows())
                                                : (lap.rows() <= 5000 ? lap.rows() : 2000);
            SpectralDecomposition dec = eig_sym(Eigen::MatrixXd(lap), m_eff);
            DffConfig cfg = dff_distribution == "all" ? DffConfig::uniform_all(reg, t)
                                                      : DffConfig::uniform_hyperedges(reg, t);
            return dff_centrality(reg, dec, cfg);
        }
    }
    throw ArgumentError("unreachable measure");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hypergraph Laplacians, hyperedge centralities, and SIR removal experiments";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<LookupError>(m, "IdLookupError", PyExc_KeyError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<Simplex>(m, "Simplex")
        .def_readonly("vertices", &Simplex::vertices)
        .def_readonly("weight", &Simplex::weight)
        .def_property_readonly("dim", &Simplex::dim)
        .def("__repr__", [](const Simplex& s) {
            std::ostringstream os;
            os << "Simplex({";
            for (size_t i = 0; i < s.vertices.size(); ++i)
                os << (i ? "," : "") << s.vertices[i];
            os << "}, weight=" << s.weight << ")";
            return os.str();
        });

    py::class_<SimplexRegistry>(m, "Hypergraph")
        .def(py::init(&build_registry), py::arg("hyperedges"), py::arg("vertices") = py::none(),
             py::arg("dedup") = "unit", py::arg("weights") = py::none())
        .def_property_readonly("num_vertices", &SimplexRegistry::vertex_count)
        .def_property_readonly("num_simplices", &SimplexRegistry::size)
        .def_property_readonly("num_hyperedges", &SimplexRegistry::hyperedge_count)
        .def_property_readonly("max_dim", &SimplexRegistry::max_dim)
        .def("count", &SimplexRegistry::count, py::arg("dim"))
        .def("offset", &SimplexRegistry::offset, py::arg("dim"))
        .def("simplex", &SimplexRegistry::simplex, py::arg("id"))
        .def("find", &SimplexRegistry::find, py::arg("vertex_set"))
        .def("adjacent", &SimplexRegistry::adjacent, py::arg("a"), py::arg("b"))
        .def("neighbors", &SimplexRegistry::neighbors, py::arg("id"))
        .def("hyperedge_ids", &SimplexRegistry::hyperedge_ids)
        .def("vertex_labels",
             [](const SimplexRegistry& reg) {
                 std::vector<VertexId> out;
                 for (int i = 0; i < reg.vertex_count(); ++i) out.push_back(reg.vertex_label(i));
                 return out;
             })
        .def("remove_hyperedges",
             [](const SimplexRegistry& reg, const std::vector<SimplexId>& ids) {
                 return remove_hyperedges(reg, ids);
             },
             py::arg("ids"))
        .def("stats",
             [](const SimplexRegistry& reg) {
                 DatasetStats s = dataset_report(reg);
                 py::dict d;
                 d["vertices"] = s.vertices;
                 d["hyperedges"] = s.hyperedges;
                 d["k_max"] = s.k_max;
                 d["k_avg"] = s.k_avg;
                 return d;
             })
        .def("__repr__", [](const SimplexRegistry& reg) {
            std::ostringstream os;
            os << "Hypergraph(" << reg.vertex_count() << " vertices, " << reg.hyperedge_count()
               << " hyperedges, max_dim=" << reg.max_dim() << ")";
            return os.str();
        });

    m.def("read_benson",
          [](const std::string& prefix, const std::string& dedup) {
              return registry_from_raw(read_benson(prefix), policy_from(dedup));
          },
          py::arg("prefix"), py::arg("dedup") = "unit");
    m.def("read_native", &read_native_file, py::arg("path"));
    m.def("write_native", &write_native_file, py::arg("hypergraph"), py::arg("path"));

    m.def("incidence_matrix", &build_incidence, py::arg("hypergraph"), py::arg("p"), py::arg("r"));
    m.def("laplacian_k", &build_Lk, py::arg("hypergraph"), py::arg("k"));
    m.def("cross_block", &build_cross_block, py::arg("hypergraph"), py::arg("p"), py::arg("r"));
    m.def("laplacian_blocks", &assemble_LH, py::arg("hypergraph"));
    m.def("updown_laplacian",
          [](const SimplexRegistry& reg, int i, const std::string& direction) {
              Direction d = direction == "up"     ? Direction::Up
                            : direction == "down" ? Direction::Down
                                                  : Direction::Both;
              return build_updown(reg, i, d);
          },
          py::arg("hypergraph"), py::arg("dim"), py::arg("direction") = "both");
    m.def("diffusion_laplacian",
          [](const SimplexRegistry& reg) { return diffusion_laplacian(assemble_LH(reg)); },
          py::arg("hypergraph"));

    m.def("eig_sym",
          [](const Eigen::MatrixXd& matrix, Eigen::Index pairs) {
              SpectralDecomposition dec = eig_sym(matrix, pairs);
              return py::make_tuple(dec.values, dec.vectors, dec.warnings);
          },
          py::arg("matrix"), py::arg("pairs") = -1,
          "Ascending eigenvalues, orthonormal eigenvectors, warnings");

    m.def("centrality", &measure_on, py::arg("hypergraph"), py::arg("measure"),
          py::arg("t") = 0.5, py::arg("dff_distribution") = "hyperedges",
          py::arg("eigenpairs") = 0, py::arg("weighted_paths") = false, py::arg("workers") = 0);
    m.def("centrality_dict",
          [](const SimplexRegistry& reg, const std::string& name, double t,
             const std::string& dist, int pairs, bool weighted, int workers) {
              return centrality_dict(measure_on(reg, name, t, dist, pairs, weighted, workers));
          },
          py::arg("hypergraph"), py::arg("measure"), py::arg("t") = 0.5,
          py::arg("dff_distribution") = "hyperedges", py::arg("eigenpairs") = 0,
          py::arg("weighted_paths") = false, py::arg("workers") = 0);

    py::class_<CentralityResult>(m, "CentralityResult")
        .def_property_readonly("measure",
                               [](const CentralityResult& r) { return measure_name(r.measure); })
        .def_property_readonly("ascending",
                               [](const CentralityResult& r) { return score_ascending(r.measure); })
        .def_readonly("hyperedges", &CentralityResult::hyperedges)
        .def_readonly("scores", &CentralityResult::scores)
        .def_readonly("ranking", &CentralityResult::ranking)
        .def_readonly("all_scores", &CentralityResult::all_scores)
        .def_readonly("raw", &CentralityResult::raw)
        .def("as_dict", &centrality_dict);

    m.def("critical_infection_rate",
          [](const SimplexRegistry& reg) { return critical_infection_rate(contact_network(reg)); },
          py::arg("hypergraph"));
    m.def("edge_infection_prob", &edge_infection_prob, py::arg("mu"), py::arg("w"));
    m.def("contact_weights",
          [](const SimplexRegistry& reg) { return contact_network(reg).weighted_degree; },
          py::arg("hypergraph"), "Weighted vertex degrees of the contact network");

    m.def("run_sir",
          [](const SimplexRegistry& reg, int seed_vertex, double mu, double beta,
             std::uint64_t seed, int trial) {
              return run_sir(contact_network(reg), seed_vertex, mu, beta, seed, trial);
          },
          py::arg("hypergraph"), py::arg("seed_vertex"), py::arg("mu"), py::arg("beta") = 1.0,
          py::arg("seed") = 0, py::arg("trial") = 0);

    m.def("mean_affected_scale",
          [](const SimplexRegistry& reg, double mu_ratio, std::optional<double> mu, double beta,
             int trials, std::uint64_t seed, int workers) {
              SirOutcome out = mean_affected_scale(
                  contact_network(reg), params_from(mu_ratio, mu, beta, trials, seed, workers));
              py::dict d;
              d["f_mean"] = out.f_mean;
              d["f_u"] = out.f_u;
              d["mean_affected"] = out.mean_affected;
              d["mu"] = out.mu;
              d["mu_clamped"] = out.mu_clamped;
              return d;
          },
          py::arg("hypergraph"), py::arg("mu_ratio") = 1.5, py::arg("mu") = py::none(),
          py::arg("beta") = 1.0, py::arg("trials") = 100, py::arg("seed") = 0,
          py::arg("workers") = 0);

    m.def("part_removal_experiment",
          [](const SimplexRegistry& reg, const CentralityResult& centrality, int parts,
             double mu_ratio, double beta, int trials, std::uint64_t seed, int workers,
             bool recompute_mu) {
              return rank_removal_dict(part_removal_experiment(
                  reg, centrality, parts,
                  params_from(mu_ratio, std::nullopt, beta, trials, seed, workers),
                  recompute_mu));
          },
          py::arg("hypergraph"), py::arg("centrality"), py::arg("parts") = 50,
          py::arg("mu_ratio") = 1.5, py::arg("beta") = 1.0, py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("workers") = 0, py::arg("recompute_mu") = false);

    m.def("ratio_sweep",
          [](const SimplexRegistry& reg, const std::vector<CentralityResult>& cents,
             const std::vector<double>& ratios, double mu_ratio, double beta, int trials,
             std::uint64_t seed, int workers) {
              return sweep_dict(ratio_sweep(
                  reg, cents, ratios,
                  params_from(mu_ratio, std::nullopt, beta, trials, seed, workers)));
          },
          py::arg("hypergraph"), py::arg("centralities"), py::arg("ratios"),
          py::arg("mu_ratio") = 1.5, py::arg("beta") = 1.0, py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("workers") = 0);

    m.def("infection_sweep",
          [](const SimplexRegistry& reg, const std::vector<CentralityResult>& cents,
             const std::vector<double>& mu_ratios, double removal_fraction, double beta,
             int trials, std::uint64_t seed, int workers) {
              return sweep_dict(infection_sweep(
                  reg, cents, mu_ratios, removal_fraction,
                  params_from(1.5, std::nullopt, beta, trials, seed, workers)));
          },
          py::arg("hypergraph"), py::arg("centralities"), py::arg("mu_ratios"),
          py::arg("removal_fraction") = 0.05, py::arg("beta") = 1.0, py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("workers") = 0);

    m.def("spearman",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return spearman(x, y);
          },
          py::arg("x"), py::arg("y"));

    m.def("toy_hypergraph", &toy_hypergraph, "The bundled 6-vertex example");
    m.def("verify_toy", []() {
        ToyVerification v = verify_toy();
        std::ostringstream os;
        print_verification(v, os);
        return py::make_tuple(v.ok(), os.str());
    });
}
