#include "hyperlap/dataset_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace hyperlap {

namespace {

std::vector<std::int64_t> read_int_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::vector<std::int64_t> out;
    std::string tok;
    while (in >> tok) {
        try {
            size_t pos = 0;
            std::int64_t v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw FormatError("non-integer token '" + tok + "' in " + path);
        }
    }
    return out;
}

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

} // namespace

RawSimplexList read_benson(const std::string& path_prefix) {
    const std::string nverts_path = path_prefix + "-nverts.txt";
    const std::string simp_path = path_prefix + "-simplices.txt";
    std::vector<std::int64_t> nverts = read_int_file(nverts_path);
    std::vector<std::int64_t> flat = read_int_file(simp_path);

    RawSimplexList raw;
    raw.simplices.reserve(nverts.size());
    size_t cursor = 0;
    for (size_t i = 0; i < nverts.size(); ++i) {
        std::int64_t sz = nverts[i];
        if (sz <= 0)
            throw FormatError("simplex size must be positive at line " + std::to_string(i + 1) +
                              " of " + nverts_path);
        if (cursor + static_cast<size_t>(sz) > flat.size())
            throw FormatError("simplices file " + simp_path + " ends before simplex " +
                              std::to_string(i + 1) + " is complete");
        std::vector<VertexId> vs;
        vs.reserve(static_cast<size_t>(sz));
        for (std::int64_t j = 0; j < sz; ++j) {
            std::int64_t v = flat[cursor++];
            if (v <= 0) throw FormatError("vertex ids must be positive, got " + std::to_string(v));
            vs.push_back(v);
        }
        raw.simplices.push_back(std::move(vs));
    }
    if (cursor != flat.size())
        throw FormatError(simp_path + " has " + std::to_string(flat.size() - cursor) +
                          " trailing ids beyond the sizes in " + nverts_path);
    return raw;
}

std::vector<WeightedHyperedge> dedup(const RawSimplexList& raw, DedupPolicy policy) {
    std::vector<WeightedHyperedge> out;
    std::map<std::vector<VertexId>, size_t> seen;  // canonical set -> position in out
    for (const auto& s : raw.simplices) {
        std::vector<VertexId> vs = s;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        auto it = seen.find(vs);
        if (it == seen.end()) {
            seen.emplace(vs, out.size());
            out.emplace_back(std::move(vs), 1.0);
        } else if (policy == DedupPolicy::Multiplicity) {
            out[it->second].second += 1.0;
        }
    }
    return out;
}

std::vector<VertexId> collect_vertices(const RawSimplexList& raw) {
    std::vector<VertexId> vs;
    for (const auto& s : raw.simplices) vs.insert(vs.end(), s.begin(), s.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

SimplexRegistry registry_from_raw(const RawSimplexList& raw, DedupPolicy policy) {
    return SimplexRegistry::build(collect_vertices(raw), dedup(raw, policy), policy);
}

void write_native(const SimplexRegistry& reg, std::ostream& out) {
    out << "hyperlap-hg 1\n";
    out << "vertices " << reg.vertex_count() << "\n";
    for (int i = 0; i < reg.vertex_count(); ++i) {
        const Simplex& s = reg.simplex(static_cast<SimplexId>(i));
        out << s.vertices[0] << ' ' << format_weight(s.weight) << "\n";
    }
    const SimplexId first = reg.max_dim() >= 1 ? reg.offset(1) : reg.size();
    out << "hyperedges " << (reg.size() - first) << "\n";
    for (SimplexId id = first; id < reg.size(); ++id) {
        const Simplex& s = reg.simplex(id);
        out << s.vertices.size() << ' ' << format_weight(s.weight);
        for (VertexId v : s.vertices) out << ' ' << v;
        out << "\n";
    }
    out << "end\n";
}

void write_native_file(const SimplexRegistry& reg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    write_native(reg, out);
    if (!out) throw FormatError("write failed for " + path);
}

SimplexRegistry read_native(std::istream& in) {
    auto fail = [](const std::string& what) -> void { throw FormatError("native format: " + what); };

    std::string tag;
    int version = 0;
    if (!(in >> tag >> version)) fail("missing header");
    if (tag != "hyperlap-hg" || version != 1) fail("unrecognized header '" + tag + "'");

    std::string kw;
    std::int64_t n = 0;
    if (!(in >> kw >> n) || kw != "vertices" || n < 0) fail("expected 'vertices <count>'");
    std::vector<VertexId> vertices;
    std::vector<WeightedHyperedge> singleton_weights;
    vertices.reserve(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        VertexId label;
        double w;
        if (!(in >> label >> w)) fail("truncated vertex list");
        vertices.push_back(label);
        if (w != 1.0) singleton_weights.push_back({{label}, w});
    }

    std::int64_t m = 0;
    if (!(in >> kw >> m) || kw != "hyperedges" || m < 0) fail("expected 'hyperedges <count>'");
    std::vector<WeightedHyperedge> edges = std::move(singleton_weights);
    edges.reserve(edges.size() + static_cast<size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t sz;
        double w;
        if (!(in >> sz >> w) || sz < 2) fail("bad hyperedge record " + std::to_string(i + 1));
        std::vector<VertexId> vs(static_cast<size_t>(sz));
        for (auto& v : vs)
            if (!(in >> v)) fail("truncated hyperedge record " + std::to_string(i + 1));
        edges.emplace_back(std::move(vs), w);
    }
    if (!(in >> kw) || kw != "end") fail("missing trailing 'end'");

    return SimplexRegistry::build(vertices, edges, DedupPolicy::Unit);
}

SimplexRegistry read_native_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_native(in);
}

void write_matrix_dense(const Eigen::SparseMatrix<double>& m, std::ostream& out) {
    Eigen::MatrixXd d = Eigen::MatrixXd(m);
    out << d.rows() << ' ' << d.cols() << "\n";
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) {
            if (j) out << ' ';
            double v = d(i, j);
            if (v == static_cast<double>(static_cast<std::int64_t>(v)))
                out << static_cast<std::int64_t>(v);
            else
                out << format_weight(v);
        }
        out << "\n";
    }
}

void write_matrix_coo(const Eigen::SparseMatrix<double>& m, std::ostream& out) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.nonZeros() << "\n";
    for (int k = 0; k < m.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, k); it; ++it) {
            double v = it.value();
            out << it.row() << ' ' << it.col() << ' ';
            if (v == static_cast<double>(static_cast<std::int64_t>(v)))
                out << static_cast<std::int64_t>(v);
            else
                out << format_weight(v);
            out << "\n";
        }
    }
}

} // namespace hyperlap
