#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperlap/errors.hpp"

namespace hyperlap {

/// External vertex label. Labels are opaque non-negative integers; the
/// registry re-indexes them densely but keeps the original label.
using VertexId = std::int64_t;

/// Dimension-major index of a simplex inside one registry: all 0-simplices
/// first (in vertex order), then all 1-simplices, and so on.
using SimplexId = std::int32_t;

/// How duplicate vertex-sets are merged during registration.
enum class DedupPolicy { Unit, Multiplicity };

/// A hyperedge of size k+1 viewed as a k-simplex: a strictly ascending
/// vertex set plus a positive multiplicity weight.
struct Simplex {
    std::vector<VertexId> vertices;
    double weight = 1.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

using WeightedHyperedge = std::pair<std::vector<VertexId>, double>;

/// true iff the vertex set `a` is a proper subset of `b` (both ascending).
bool proper_subset(std::span<const VertexId> a, std::span<const VertexId> b);

/// Immutable dimension-indexed family of simplices. Construction canonicalizes
/// and merges duplicate vertex sets, guarantees that every vertex is present
/// as a 0-simplex, and assigns dimension-major ids. Safe to share between
/// threads once built.
class SimplexRegistry {
public:
    SimplexRegistry() = default;

    /// Registers a hypergraph. Every hyperedge vertex must appear in
    /// `vertices` (InputError otherwise); empty hyperedges are rejected.
    /// Vertex order is preserved and defines the 0-simplex order.
    static SimplexRegistry build(const std::vector<VertexId>& vertices,
                                 const std::vector<WeightedHyperedge>& hyperedges,
                                 DedupPolicy policy = DedupPolicy::Unit);

    int max_dim() const { return max_dim_; }
    SimplexId size() const { return static_cast<SimplexId>(simplices_.size()); }
    SimplexId count(int dim) const;
    /// Id of the first simplex of dimension `dim`.
    SimplexId offset(int dim) const;

    const Simplex& simplex(SimplexId id) const;
    int dim_of(SimplexId id) const;

    /// Id of the simplex with exactly this vertex set, or -1 if absent.
    SimplexId find(const std::vector<VertexId>& vertex_set) const;

    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    VertexId vertex_label(int index) const { return vertex_labels_.at(static_cast<size_t>(index)); }
    /// Dense index of a label; LookupError if unknown.
    int vertex_index(VertexId label) const;

    /// Ids (ascending) of the dim>=1 simplices containing this vertex.
    const std::vector<SimplexId>& incident(int vertex_index) const;

    /// Proper-subset adjacency in either direction. Symmetric, irreflexive,
    /// false between simplices of equal dimension.
    bool adjacent(SimplexId a, SimplexId b) const;

    /// All simplices adjacent to `a`, ascending by id.
    std::vector<SimplexId> neighbors(SimplexId a) const;

    /// Ids of all dim>=1 simplices, ascending.
    std::vector<SimplexId> hyperedge_ids() const;
    SimplexId hyperedge_count() const;

private:
    void check_id(SimplexId id) const;

    std::vector<Simplex> simplices_;       // dimension-major
    std::vector<SimplexId> dim_offsets_;   // size max_dim_+2, cumulative
    int max_dim_ = -1;

    std::vector<VertexId> vertex_labels_;
    std::unordered_map<VertexId, int> vertex_index_;
    std::vector<std::vector<SimplexId>> incidence_;  // per vertex, dim>=1 ids

    struct SetHash {
        size_t operator()(const std::vector<VertexId>& v) const;
    };
    std::unordered_map<std::vector<VertexId>, SimplexId, SetHash> set_index_;
};

/// Copy of the registry without the given dim>=1 simplices. Vertices are
/// always retained, so dense vertex indices stay stable across removals.
/// ArgumentError if any id names a 0-simplex.
SimplexRegistry remove_hyperedges(const SimplexRegistry& reg,
                                  std::span<const SimplexId> ids);

} // namespace hyperlap
