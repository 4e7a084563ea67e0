#include "hyperlap/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hyperlap {

namespace {

std::string set_to_string(std::span<const VertexId> vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

std::vector<VertexId> canonical(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

} // namespace

bool proper_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
    if (a.size() >= b.size()) return false;
    size_t j = 0;
    for (VertexId v : a) {
        while (j < b.size() && b[j] < v) ++j;
        if (j == b.size() || b[j] != v) return false;
        ++j;
    }
    return true;
}

size_t SimplexRegistry::SetHash::operator()(const std::vector<VertexId>& v) const {
    // FNV-1a over the label bytes
    size_t h = 1469598103934665603ull;
    for (VertexId x : v) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<size_t>((static_cast<std::uint64_t>(x) >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

SimplexRegistry SimplexRegistry::build(const std::vector<VertexId>& vertices,
                                       const std::vector<WeightedHyperedge>& hyperedges,
                                       DedupPolicy policy) {
    SimplexRegistry reg;
    for (VertexId v : vertices) {
        if (v < 0) throw InputError("vertex label must be non-negative: " + std::to_string(v));
        if (reg.vertex_index_.emplace(v, static_cast<int>(reg.vertex_labels_.size())).second)
            reg.vertex_labels_.push_back(v);
    }

    // dim-0 simplices in vertex order; weight may be replaced by an explicit
    // singleton hyperedge below
    std::vector<std::vector<Simplex>> by_dim(1);
    std::vector<bool> vertex_explicit(reg.vertex_labels_.size(), false);
    by_dim[0].reserve(reg.vertex_labels_.size());
    for (VertexId v : reg.vertex_labels_) by_dim[0].push_back(Simplex{{v}, 1.0});

    std::unordered_map<std::vector<VertexId>, std::pair<int, int>, SetHash> where;  // set -> (dim,pos)

    for (const auto& [raw_vs, w] : hyperedges) {
        if (raw_vs.empty()) throw InputError("empty hyperedge");
        if (w <= 0.0) throw InputError("hyperedge weight must be positive");
        std::vector<VertexId> vs = canonical(raw_vs);
        for (VertexId v : vs)
            if (!reg.vertex_index_.count(v))
                throw InputError("hyperedge " + set_to_string(vs) +
                                 " references unknown vertex " + std::to_string(v));
        int dim = static_cast<int>(vs.size()) - 1;
        if (dim == 0) {
            int idx = reg.vertex_index_.at(vs[0]);
            Simplex& s = by_dim[0][static_cast<size_t>(idx)];
            if (!vertex_explicit[static_cast<size_t>(idx)]) {
                s.weight = w;  // explicit listing replaces the implicit unit weight
                vertex_explicit[static_cast<size_t>(idx)] = true;
            } else if (policy == DedupPolicy::Multiplicity) {
                s.weight += w;
            }
            continue;
        }
        if (static_cast<size_t>(dim) + 1 > by_dim.size()) by_dim.resize(static_cast<size_t>(dim) + 1);
        auto it = where.find(vs);
        if (it == where.end()) {
            where.emplace(vs, std::make_pair(dim, static_cast<int>(by_dim[static_cast<size_t>(dim)].size())));
            by_dim[static_cast<size_t>(dim)].push_back(Simplex{std::move(vs), w});
        } else if (policy == DedupPolicy::Multiplicity) {
            by_dim[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)].weight += w;
        }
    }

    reg.max_dim_ = static_cast<int>(by_dim.size()) - 1;
    if (reg.vertex_labels_.empty()) reg.max_dim_ = -1;

    reg.dim_offsets_.assign(static_cast<size_t>(reg.max_dim_ + 2), 0);
    for (int d = 0; d <= reg.max_dim_; ++d)
        reg.dim_offsets_[static_cast<size_t>(d) + 1] =
            reg.dim_offsets_[static_cast<size_t>(d)] + static_cast<SimplexId>(by_dim[static_cast<size_t>(d)].size());

    reg.simplices_.reserve(static_cast<size_t>(reg.dim_offsets_.back()));
    for (auto& dim_list : by_dim)
        for (auto& s : dim_list) reg.simplices_.push_back(std::move(s));

    for (SimplexId id = 0; id < reg.size(); ++id)
        reg.set_index_.emplace(reg.simplices_[static_cast<size_t>(id)].vertices, id);

    reg.incidence_.assign(reg.vertex_labels_.size(), {});
    for (SimplexId id = reg.offset(1); id < reg.size(); ++id)
        for (VertexId v : reg.simplices_[static_cast<size_t>(id)].vertices)
            reg.incidence_[static_cast<size_t>(reg.vertex_index_.at(v))].push_back(id);

    return reg;
}

SimplexId SimplexRegistry::count(int dim) const {
    if (dim < 0 || dim > max_dim_) return 0;
    return dim_offsets_[static_cast<size_t>(dim) + 1] - dim_offsets_[static_cast<size_t>(dim)];
}

SimplexId SimplexRegistry::offset(int dim) const {
    if (dim < 0) throw ArgumentError("negative dimension");
    if (dim > max_dim_ + 1) return size();
    return dim_offsets_[static_cast<size_t>(dim)];
}

void SimplexRegistry::check_id(SimplexId id) const {
    if (id < 0 || id >= size())
        throw LookupError("simplex id " + std::to_string(id) + " out of range [0," +
                          std::to_string(size()) + ")");
}

const Simplex& SimplexRegistry::simplex(SimplexId id) const {
    check_id(id);
    return simplices_[static_cast<size_t>(id)];
}

int SimplexRegistry::dim_of(SimplexId id) const {
    check_id(id);
    return simplices_[static_cast<size_t>(id)].dim();
}

SimplexId SimplexRegistry::find(const std::vector<VertexId>& vertex_set) const {
    auto it = set_index_.find(canonical(vertex_set));
    return it == set_index_.end() ? SimplexId{-1} : it->second;
}

int SimplexRegistry::vertex_index(VertexId label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end())
        throw LookupError("unknown vertex label " + std::to_string(label));
    return it->second;
}

const std::vector<SimplexId>& SimplexRegistry::incident(int vertex_index) const {
    if (vertex_index < 0 || vertex_index >= vertex_count())
        throw LookupError("vertex index " + std::to_string(vertex_index) + " out of range");
    return incidence_[static_cast<size_t>(vertex_index)];
}

bool SimplexRegistry::adjacent(SimplexId a, SimplexId b) const {
    check_id(a);
    check_id(b);
    if (a == b) return false;
    const auto& va = simplices_[static_cast<size_t>(a)].vertices;
    const auto& vb = simplices_[static_cast<size_t>(b)].vertices;
    return proper_subset(va, vb) || proper_subset(vb, va);
}

std::vector<SimplexId> SimplexRegistry::neighbors(SimplexId a) const {
    check_id(a);
    const Simplex& s = simplices_[static_cast<size_t>(a)];
    const int d = s.dim();
    std::vector<SimplexId> out;

    if (d == 0) {
        // supersets only: every incident hyperedge properly contains the vertex
        out = incidence_[static_cast<size_t>(vertex_index_.at(s.vertices[0]))];
        return out;
    }

    // member vertices are always proper subsets
    for (VertexId v : s.vertices) out.push_back(vertex_index_.at(v));

    // candidates sharing at least one vertex; test containment both ways
    std::unordered_set<SimplexId> seen;
    for (VertexId v : s.vertices) {
        for (SimplexId cand : incidence_[static_cast<size_t>(vertex_index_.at(v))]) {
            if (cand == a || !seen.insert(cand).second) continue;
            const auto& vc = simplices_[static_cast<size_t>(cand)].vertices;
            if (proper_subset(vc, s.vertices) || proper_subset(s.vertices, vc))
                out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SimplexId> SimplexRegistry::hyperedge_ids() const {
    std::vector<SimplexId> ids;
    ids.reserve(static_cast<size_t>(size() - offset(1)));
    for (SimplexId id = offset(1); id < size(); ++id) ids.push_back(id);
    return ids;
}

SimplexId SimplexRegistry::hyperedge_count() const {
    return max_dim_ < 1 ? 0 : size() - offset(1);
}

SimplexRegistry remove_hyperedges(const SimplexRegistry& reg,
                                  std::span<const SimplexId> ids) {
    std::unordered_set<SimplexId> removed;
    for (SimplexId id : ids) {
        if (reg.dim_of(id) == 0)
            throw ArgumentError("cannot remove 0-simplex (vertex) id " + std::to_string(id));
        removed.insert(id);
    }
    std::vector<VertexId> vertices;
    vertices.reserve(static_cast<size_t>(reg.vertex_count()));
    for (int i = 0; i < reg.vertex_count(); ++i) vertices.push_back(reg.vertex_label(i));

    std::vector<WeightedHyperedge> kept;
    for (SimplexId id = 0; id < reg.offset(1); ++id) {
        const Simplex& s = reg.simplex(id);
        if (s.weight != 1.0) kept.emplace_back(s.vertices, s.weight);  // keep explicit vertex weights
    }
    for (SimplexId id = reg.offset(1); id < reg.size(); ++id) {
        if (removed.count(id)) continue;
        const Simplex& s = reg.simplex(id);
        kept.emplace_back(s.vertices, s.weight);
    }
    // sets are already unique, so the policy has no effect here
    return SimplexRegistry::build(vertices, kept, DedupPolicy::Unit);
}

} // namespace hyperlap
