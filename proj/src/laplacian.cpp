#include "hyperlap/laplacian.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace hyperlap {

namespace {

void check_dim(const SimplexRegistry& reg, int d, const char* what) {
    if (d < 0 || d > reg.max_dim())
        throw ArgumentError(std::string(what) + " dimension " + std::to_string(d) +
                            " out of range [0," + std::to_string(reg.max_dim()) + "]");
}

/// Keep entries equal to `target` (exact integer counts) and set them to 1.
SpMat threshold_equal(const SpMat& m, double target) {
    std::vector<Eigen::Triplet<double>> trips;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it)
            if (it.value() > target - 0.5 && it.value() < target + 0.5)
                trips.emplace_back(it.row(), it.col(), 1.0);
    SpMat out(m.rows(), m.cols());
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

SpMat identity(Eigen::Index n) {
    SpMat id(n, n);
    id.setIdentity();
    return id;
}

std::string set_to_string(const std::vector<VertexId>& vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

/// Every dim-d simplex must have all of its (d-1)-faces registered.
void check_faces_present(const SimplexRegistry& reg, int d) {
    if (d < 1) return;
    for (SimplexId id = reg.offset(d); id < reg.offset(d) + reg.count(d); ++id) {
        const auto& vs = reg.simplex(id).vertices;
        std::vector<VertexId> face(vs.size() - 1);
        for (size_t drop = 0; drop < vs.size(); ++drop) {
            size_t w = 0;
            for (size_t i = 0; i < vs.size(); ++i)
                if (i != drop) face[w++] = vs[i];
            if (reg.find(face) < 0)
                throw PreconditionError("not a simplicial complex: " + set_to_string(vs) +
                                        " is registered but its face " + set_to_string(face) +
                                        " is not");
        }
    }
}

Eigen::VectorXd dim_weights(const SimplexRegistry& reg, int d) {
    Eigen::VectorXd w(reg.count(d));
    for (SimplexId i = 0; i < reg.count(d); ++i)
        w[i] = reg.simplex(reg.offset(d) + i).weight;
    return w;
}

} // namespace

SpMat vertex_incidence(const SimplexRegistry& reg, int dim) {
    check_dim(reg, dim, "vertex_incidence");
    std::vector<Eigen::Triplet<double>> trips;
    for (SimplexId i = 0; i < reg.count(dim); ++i) {
        const Simplex& s = reg.simplex(reg.offset(dim) + i);
        for (VertexId v : s.vertices)
            trips.emplace_back(i, reg.vertex_index(v), 1.0);
    }
    SpMat m(reg.count(dim), reg.vertex_count());
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

SpMat build_incidence(const SimplexRegistry& reg, int p, int r) {
    if (p >= r) throw ArgumentError("build_incidence requires p < r, got p=" +
                                    std::to_string(p) + " r=" + std::to_string(r));
    check_dim(reg, p, "build_incidence");
    check_dim(reg, r, "build_incidence");
    if (p == 0) return vertex_incidence(reg, r);
    // overlap of p+1 vertices between a p-simplex and a larger r-simplex
    // is exactly containment
    SpMat overlap = vertex_incidence(reg, r) * vertex_incidence(reg, p).transpose();
    return threshold_equal(overlap, static_cast<double>(p + 1));
}

const SpMat& LaplacianBuilder::incidence(int p, int r) {
    auto key = std::make_pair(p, r);
    auto it = incidence_cache_.find(key);
    if (it == incidence_cache_.end())
        it = incidence_cache_.emplace(key, build_incidence(*reg_, p, r)).first;
    return it->second;
}

SpMat LaplacianBuilder::lk(int k) {
    check_dim(*reg_, k, "build_Lk");
    const SimplexRegistry& reg = *reg_;
    SpMat acc = identity(reg.count(k));
    for (int l = 0; l <= reg.max_dim(); ++l) {
        if (l == k || reg.count(l) == 0) continue;
        if (l > k) {
            const SpMat& d = incidence(k, l);
            acc = acc + SpMat(d.transpose() * d);
        } else {
            const SpMat& d = incidence(l, k);
            acc = acc + SpMat(d * d.transpose());
        }
    }
    acc.makeCompressed();
    return acc;
}

SpMat LaplacianBuilder::cross_block(int p, int r) {
    if (p >= r) throw ArgumentError("cross block requires p < r");
    check_dim(*reg_, p, "build_cross_block");
    check_dim(*reg_, r, "build_cross_block");
    const SimplexRegistry& reg = *reg_;
    SpMat acc = 2.0 * incidence(p, r);
    for (int q = 0; q <= reg.max_dim(); ++q) {
        if (q == p || q == r || reg.count(q) == 0) continue;
        SpMat term;
        if (q < p)
            term = incidence(q, r) * SpMat(incidence(q, p).transpose());
        else if (q < r)
            term = incidence(q, r) * incidence(p, q);
        else
            term = SpMat(incidence(r, q).transpose()) * incidence(p, q);
        acc = acc + term;
    }
    acc.makeCompressed();
    return acc;
}

SpMat LaplacianBuilder::lh() {
    const SimplexRegistry& reg = *reg_;
    if (reg.size() == 0) throw ArgumentError("cannot assemble the block Laplacian of an empty registry");
    std::vector<Eigen::Triplet<double>> trips;
    auto add_block = [&](const SpMat& b, SimplexId row0, SimplexId col0, bool transpose) {
        for (int k = 0; k < b.outerSize(); ++k)
            for (SpMat::InnerIterator it(b, k); it; ++it) {
                if (transpose)
                    trips.emplace_back(col0 + it.col(), row0 + it.row(), it.value());
                else
                    trips.emplace_back(row0 + it.row(), col0 + it.col(), it.value());
            }
    };
    for (int k = 0; k <= reg.max_dim(); ++k) {
        if (reg.count(k) == 0) continue;
        add_block(lk(k), reg.offset(k), reg.offset(k), false);
    }
    for (int p = 0; p < reg.max_dim(); ++p) {
        if (reg.count(p) == 0) continue;
        for (int r = p + 1; r <= reg.max_dim(); ++r) {
            if (reg.count(r) == 0) continue;
            SpMat block = cross_block(p, r);
            add_block(block, reg.offset(r), reg.offset(p), false);
            add_block(block, reg.offset(r), reg.offset(p), true);
        }
    }
    SpMat lh(reg.size(), reg.size());
    lh.setFromTriplets(trips.begin(), trips.end());
    return lh;
}

SpMat cross_dim_term(const SimplexRegistry& reg, int k, int l) {
    check_dim(reg, k, "cross_dim_term");
    check_dim(reg, l, "cross_dim_term");
    if (k == l) throw ArgumentError("cross_dim_term requires l != k");
    if (reg.count(l) == 0) return SpMat(reg.count(k), reg.count(k));
    if (l > k) {
        SpMat d = build_incidence(reg, k, l);
        SpMat out(d.transpose() * d);
        out.makeCompressed();
        return out;
    }
    SpMat d = build_incidence(reg, l, k);
    SpMat out(d * d.transpose());
    out.makeCompressed();
    return out;
}

SpMat build_Lk(const SimplexRegistry& reg, int k) {
    LaplacianBuilder b(reg);
    return b.lk(k);
}

SpMat build_cross_block(const SimplexRegistry& reg, int p, int r) {
    LaplacianBuilder b(reg);
    return b.cross_block(p, r);
}

SpMat assemble_LH(const SimplexRegistry& reg) {
    LaplacianBuilder b(reg);
    return b.lh();
}

SpMat build_updown(const SimplexRegistry& reg, int i, Direction dir) {
    check_dim(reg, i, "build_updown");
    const Eigen::Index n = reg.count(i);
    SpMat acc(n, n);

    if (dir == Direction::Up || dir == Direction::Both) {
        check_faces_present(reg, i + 1);
        if (i + 1 <= reg.max_dim() && reg.count(i + 1) > 0) {
            SpMat d = build_incidence(reg, i, i + 1);
            Eigen::VectorXd wi = dim_weights(reg, i);
            Eigen::VectorXd wu = dim_weights(reg, i + 1);
            SpMat up = SpMat(wi.cwiseInverse().asDiagonal()) *
                       SpMat(d.transpose() * SpMat(wu.asDiagonal() * d));
            acc = acc + up;
        }
    }
    if (dir == Direction::Down || dir == Direction::Both) {
        check_faces_present(reg, i);
        if (i >= 1 && reg.count(i - 1) > 0) {
            SpMat d = build_incidence(reg, i - 1, i);
            Eigen::VectorXd wd = dim_weights(reg, i - 1);
            Eigen::VectorXd wi = dim_weights(reg, i);
            SpMat down = SpMat(SpMat(d * SpMat(wd.cwiseInverse().asDiagonal())) *
                               SpMat(d.transpose())) *
                         SpMat(wi.asDiagonal());
            acc = acc + down;
        }
    }
    acc.makeCompressed();
    return acc;
}

} // namespace hyperlap
