#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "hyperlap/simplex.hpp"

namespace hyperlap {

/// Simplex lists exactly as read from disk, duplicates preserved.
struct RawSimplexList {
    std::vector<std::vector<VertexId>> simplices;
};

/// Basic dataset properties. `k_avg` (average weighted vertex degree, taken
/// from the vertex Laplacian off-diagonals) is filled by dataset_report().
struct DatasetStats {
    std::int64_t vertices = 0;
    std::int64_t hyperedges = 0;  // distinct dim>=1 vertex sets
    double k_avg = 0.0;
    int k_max = 0;  // maximum hyperedge size
};

/// Reads the `<prefix>-nverts.txt` / `<prefix>-simplices.txt` pair: the i-th
/// simplex is the next nverts[i] ids consumed sequentially from the simplices
/// file. An optional `<prefix>-times.txt` is ignored. FormatError on length
/// mismatch, non-integer tokens, or a zero size.
RawSimplexList read_benson(const std::string& path_prefix);

/// Collapses duplicate vertex sets. `Unit` gives every distinct set weight 1;
/// `Multiplicity` keeps occurrence counts (weights accumulate).
std::vector<WeightedHyperedge> dedup(const RawSimplexList& raw, DedupPolicy policy);

/// Ascending list of distinct vertex ids appearing in the raw list.
std::vector<VertexId> collect_vertices(const RawSimplexList& raw);

/// Registry from a raw list: vertices ascending, duplicate sets merged.
SimplexRegistry registry_from_raw(const RawSimplexList& raw, DedupPolicy policy);

// Native interchange format, one document per hypergraph:
//
//   hyperlap-hg 1
//   vertices <count>
//   <label> <weight>          (count lines, registry order)
//   hyperedges <count>
//   <size> <weight> <v...>    (count lines, registry order, dims >= 1)
//   end
//
// Weights are printed with 17 significant digits so a write/read round trip
// reproduces the registry bit-exactly (ids, weights, order).
void write_native(const SimplexRegistry& reg, std::ostream& out);
void write_native_file(const SimplexRegistry& reg, const std::string& path);
SimplexRegistry read_native(std::istream& in);
SimplexRegistry read_native_file(const std::string& path);

// Matrix exports for the CLI: dense text grid ("rows cols" header line then
// one row per line) and sparse coordinate triplets ("rows cols nnz" then
// 0-based "i j value" lines, column-major order).
void write_matrix_dense(const Eigen::SparseMatrix<double>& m, std::ostream& out);
void write_matrix_coo(const Eigen::SparseMatrix<double>& m, std::ostream& out);

} // namespace hyperlap
