#pragma once

#include <map>
#include <vector>

#include "tatecalc/module.hpp"

namespace tate {

/// Matrix with entries in the algebra (coordinates over the standard
/// monomial basis). Represents an R-linear map R^cols -> R^rows.
struct RingMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<RingElem> entries;  // row-major

    RingMatrix() = default;
    RingMatrix(std::size_t r, std::size_t c, std::size_t ring_dim)
        : rows(r), cols(c), entries(r * c, RingElem(ring_dim, 0)) {}

    RingElem& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const RingElem& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    RingMatrix transposed() const {
        RingMatrix t;
        t.rows = cols;
        t.cols = rows;
        t.entries.resize(entries.size());
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.entries[j * rows + i] = at(i, j);
        return t;
    }

    /// Every entry lies in the maximal ideal.
    bool entries_in_m() const {
        for (const auto& e : entries)
            if (!e.empty() && e[0] != 0) return false;
        return true;
    }
};

/// k-linear matrix of the R-linear map, block (i,j) being the
/// multiplication matrix of entry (i,j). Free modules use block-major
/// coordinates, matching FinModule::free_module.
inline Matrix linearize(const LocalAlgebra& R, const RingMatrix& m) {
    const std::size_t d = R.dim();
    Matrix out(R.field(), m.rows * d, m.cols * d);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const RingElem& e = m.at(i, j);
            bool zero = true;
            for (auto c : e)
                if (c) zero = false;
            if (zero) continue;
            Matrix blk = R.multiplication_matrix(e);
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t) out(i * d + s, j * d + t) = blk(s, t);
        }
    return out;
}

/// Recover the R-matrix of an R-linear map between free modules from its
/// k-linear matrix: entry (i,j) is block i of the image of generator j.
/// Verifies R-linearity by round-tripping through linearize.
inline RingMatrix ring_matrix_from_linear(const LocalAlgebra& R, const Matrix& lin,
                                          std::size_t rows, std::size_t cols) {
    const std::size_t d = R.dim();
    TATE_CHECK(lin.rows() == rows * d && lin.cols() == cols * d,
               "linear matrix shape does not match free ranks");
    RingMatrix out(rows, cols, d);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t s = 0; s < d; ++s) out.at(i, j)[s] = lin(i * d + s, j * d);
    TATE_CHECK(linearize(R, out) == lin, "map between free modules is not R-linear");
    return out;
}

/// A complex of free modules on an explicit window [lo, hi], with
/// differentials d_n : F_n -> F_{n-1} for n in (lo, hi].
class FreeComplex {
public:
    FreeComplex(AlgebraPtr R, int lo, int hi)
        : R_(std::move(R)), lo_(lo), hi_(hi), ranks_(static_cast<std::size_t>(hi - lo + 1), 0) {
        TATE_CHECK(lo <= hi, "empty complex window");
    }

    const AlgebraPtr& algebra() const { return R_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    std::size_t rank(int n) const {
        TATE_CHECK(n >= lo_ && n <= hi_, "rank queried outside window");
        return ranks_[static_cast<std::size_t>(n - lo_)];
    }

    void set_rank(int n, std::size_t r) { ranks_[static_cast<std::size_t>(n - lo_)] = r; }

    bool has_diff(int n) const { return diffs_.count(n) > 0; }

    const RingMatrix& diff(int n) const {
        auto it = diffs_.find(n);
        TATE_CHECK(it != diffs_.end(), "differential missing at degree " + std::to_string(n));
        return it->second;
    }

    void set_diff(int n, RingMatrix m) {
        TATE_CHECK(n > lo_ && n <= hi_, "differential outside window");
        TATE_CHECK(m.rows == rank(n - 1) && m.cols == rank(n), "differential shape mismatch");
        diffs_[n] = std::move(m);
    }

    Matrix linearized_diff(int n) const { return linearize(*R_, diff(n)); }

    /// All differential entries lie in m (the minimality criterion).
    bool is_minimal() const {
        for (const auto& [n, d] : diffs_)
            if (!d.entries_in_m()) return false;
        return true;
    }

    /// d_{n-1} d_n = 0 wherever both differentials exist.
    bool differentials_compose_to_zero() const {
        for (int n = lo_ + 2; n <= hi_; ++n)
            if (has_diff(n) && has_diff(n - 1) &&
                !(linearized_diff(n - 1) * linearized_diff(n)).is_zero())
                return false;
        return true;
    }

    /// dim H_n; valid at interior degrees lo < n < hi.
    std::size_t homology_dim(int n) const {
        Matrix out = linearized_diff(n);
        Matrix in = linearized_diff(n + 1);
        std::size_t kd = out.cols() - ::tate::rank(out);
        return kd - ::tate::rank(in);
    }

    /// The complex Hom(-, R): ranks mirrored, differentials transposed
    /// over R. Term n of the result is Hom(F_{-n}, R).
    FreeComplex hom_dual() const {
        FreeComplex out(R_, -hi_, -lo_);
        for (int n = lo_; n <= hi_; ++n) out.set_rank(-n, rank(n));
        for (const auto& [n, d] : diffs_) out.set_diff(-n + 1, d.transposed());
        return out;
    }

private:
    AlgebraPtr R_;
    int lo_, hi_;
    std::vector<std::size_t> ranks_;
    std::map<int, RingMatrix> diffs_;
};

}  // namespace tate
