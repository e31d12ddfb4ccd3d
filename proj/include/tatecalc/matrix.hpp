#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "tatecalc/field.hpp"

namespace tate {

/// Dense matrix over F_p, row-major. Every entry is a reduced residue.
///
/// Elimination uses deterministic first-nonzero pivoting so all outputs
/// are reproducible across platforms.
class Matrix {
public:
    Matrix(PrimeField f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(PrimeField f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeField& field() const { return f_; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto v : e_)
            if (v) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        TATE_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        TATE_CHECK(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        TATE_CHECK(cols_ == o.rows_, "matrix shape mismatch in *");
        Matrix r(f_, rows_, o.cols_);
        const std::uint64_t p = f_.modulus();
        // p < 2^16 in practice, so a full row-by-column dot fits in uint64
        // for any desk-scale inner dimension; reduce once per entry.
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::uint64_t a = (*this)(i, k);
                if (!a) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    std::uint64_t cur = r(i, j);
                    r(i, j) = static_cast<std::uint32_t>((cur + a * o(k, j)) % p);
                }
            }
        return r;
    }

    Matrix scaled(std::uint32_t c) const {
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.mul(e_[i], c);
        return r;
    }

    Matrix transposed() const {
        Matrix r(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix column(std::size_t j) const {
        Matrix r(f_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
        return r;
    }

    void set_column(std::size_t j, const Matrix& col) {
        TATE_CHECK(col.rows_ == rows_ && col.cols_ == 1, "bad column shape");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = col(i, 0);
    }

private:
    PrimeField f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> e_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    TATE_CHECK(a.rows() == b.rows(), "hstack row mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    TATE_CHECK(a.cols() == b.cols(), "vstack col mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

struct RrefResult {
    Matrix r;
    std::vector<std::size_t> pivots;  // pivot column indices, increasing
};

/// Reduced row echelon form with first-nonzero pivoting.
inline RrefResult rref(const Matrix& a) {
    Matrix m = a;
    const PrimeField& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        std::uint32_t s = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            std::uint32_t c = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(c, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

inline std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

/// Basis of the right null space, returned as columns.
inline Matrix kernel(const Matrix& a) {
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::size_t k = a.cols() - rr.pivots.size();
    Matrix basis(a.field(), a.cols(), k);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(free_col, out) = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            basis(rr.pivots[r], out) = a.field().neg(rr.r(r, free_col));
        ++out;
    }
    return basis;
}

/// Any solution X of AX = B, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
    RrefResult rr = rref(hstack(a, b));
    for (auto c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;  // pivot in the RHS block
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(rr.pivots[r], j) = rr.r(r, a.cols() + j);
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Matrix::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

inline bool is_invertible(const Matrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Basis of the column space (as columns, taken from the original matrix).
inline Matrix column_space(const Matrix& a) {
    RrefResult rr = rref(a);
    Matrix basis(a.field(), a.rows(), rr.pivots.size());
    for (std::size_t j = 0; j < rr.pivots.size(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) basis(i, j) = a(i, rr.pivots[j]);
    return basis;
}

/// Projection onto the quotient of k^D by the column space of w.
///
/// proj : k^D -> k^q has kernel exactly col(w); section is a right
/// inverse (proj * section = I_q), given by unit vectors at the
/// coordinates not pivotal in w^T.
struct QuotientMap {
    Matrix proj;     // q x D
    Matrix section;  // D x q
};

inline QuotientMap quotient_map(const Matrix& w) {
    const PrimeField& f = w.field();
    const std::size_t D = w.rows();
    RrefResult rr = rref(w.transposed());  // rows span the subspace
    std::vector<bool> is_pivot(D, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    const std::size_t q = D - rr.pivots.size();
    Matrix proj(f, q, D);
    Matrix section(f, D, q);
    // Reduce each e_j by the echelon rows, then read off the free coords.
    std::vector<std::size_t> free_coord;
    for (std::size_t j = 0; j < D; ++j)
        if (!is_pivot[j]) free_coord.push_back(j);
    for (std::size_t t = 0; t < q; ++t) section(free_coord[t], t) = 1;
    for (std::size_t j = 0; j < D; ++j) {
        std::vector<std::uint32_t> v(D, 0);
        v[j] = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            std::uint32_t c = v[rr.pivots[r]];
            if (!c) continue;
            for (std::size_t s = 0; s < D; ++s) v[s] = f.sub(v[s], f.mul(c, rr.r(r, s)));
        }
        for (std::size_t t = 0; t < q; ++t) proj(t, j) = v[free_coord[t]];
    }
    return {proj, section};
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << m.rows() << "x" << m.cols() << " [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m(i, j);
        }
    }
    return os << "]";
}

}  // namespace tate
