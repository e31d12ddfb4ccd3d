#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tatecalc/algebra.hpp"

namespace tate {

/// A finitely generated module over a LocalAlgebra, given as a
/// finite-dimensional k-space with one action matrix per ring variable.
///
/// Construction validates the whole package: the actions commute, satisfy
/// every defining relation of the algebra, and are nilpotent. Instances
/// are immutable afterwards.
class FinModule {
public:
    FinModule(AlgebraPtr algebra, std::vector<Matrix> actions)
        : R_(std::move(algebra)), actions_(std::move(actions)) {
        TATE_CHECK(actions_.size() == R_->num_vars(), "one action matrix per variable required");
        dim_ = actions_.empty() ? 0 : actions_[0].rows();
        for (const auto& a : actions_)
            TATE_CHECK(a.rows() == dim_ && a.cols() == dim_, "action matrices must be square");
        validate();
    }

    /// Zero-dimensional module.
    static FinModule zero(AlgebraPtr R) {
        std::vector<Matrix> acts(R->num_vars(), Matrix(R->field(), 0, 0));
        return FinModule(std::move(R), std::move(acts));
    }

    /// The ring as a module over itself.
    static FinModule regular(AlgebraPtr R) {
        std::vector<Matrix> acts = R->generator_matrices();
        return FinModule(std::move(R), std::move(acts));
    }

    /// Free module R^rank; coordinate layout is block-major, block b and
    /// ring coordinate s sitting at index b*dim(R)+s.
    static FinModule free_module(AlgebraPtr R, std::size_t rank) {
        const std::size_t d = R->dim();
        std::vector<Matrix> acts;
        for (std::size_t v = 0; v < R->num_vars(); ++v) {
            Matrix a(R->field(), rank * d, rank * d);
            const Matrix& g = R->generator_matrix(v);
            for (std::size_t b = 0; b < rank; ++b)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) a(b * d + i, b * d + j) = g(i, j);
            acts.push_back(std::move(a));
        }
        return FinModule(std::move(R), std::move(acts));
    }

    /// The residue field k = R/m.
    static FinModule residue_field(AlgebraPtr R) {
        std::vector<Matrix> acts(R->num_vars(), Matrix(R->field(), 1, 1));
        return FinModule(std::move(R), std::move(acts));
    }

    const AlgebraPtr& algebra() const { return R_; }
    const PrimeField& field() const { return R_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t v) const { return actions_[v]; }
    const std::vector<Matrix>& actions() const { return actions_; }

    /// Action matrix of a basis monomial (product of variable actions).
    Matrix monomial_action(const Monomial& m) const {
        Matrix acc = Matrix::identity(field(), dim_);
        for (std::size_t v = 0; v < m.exps.size(); ++v)
            for (std::uint32_t e = 0; e < m.exps[v]; ++e) acc = acc * actions_[v];
        return acc;
    }

    /// Action matrix of an arbitrary ring element.
    Matrix element_action(const RingElem& e) const {
        Matrix acc(field(), dim_, dim_);
        for (std::size_t i = 0; i < R_->dim(); ++i) {
            if (!e[i]) continue;
            acc = acc + monomial_action(R_->basis()[i]).scaled(e[i]);
        }
        return acc;
    }

    /// m*M as a subspace: the joint column span of the generator actions.
    Matrix radical_span() const {
        Matrix all(field(), dim_, 0);
        for (const auto& a : actions_) all = hstack(all, a);
        return column_space(all);
    }

private:
    void validate() const {
        const std::size_t nv = actions_.size();
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t w = v + 1; w < nv; ++w)
                TATE_CHECK(actions_[v] * actions_[w] == actions_[w] * actions_[v],
                           "module action matrices do not commute");
        // Defining relations of the algebra must annihilate the module.
        for (const auto& g : R_->relations().gens) {
            Matrix val(field(), dim_, dim_);
            for (const auto& [m, c] : g.terms()) val = val + monomial_action(m).scaled(c);
            TATE_CHECK(val.is_zero(), "module action violates a defining relation");
        }
        // Nilpotency (locality) then follows, but is cheap to confirm.
        for (const auto& a : actions_) {
            Matrix pw = a;
            std::size_t steps = 1;
            while (steps < dim_ && !pw.is_zero()) {
                pw = pw * pw;
                steps *= 2;
            }
            TATE_CHECK(dim_ == 0 || pw.is_zero(), "module action is not nilpotent");
        }
    }

    AlgebraPtr R_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

/// R-linear map between modules over the same algebra.
struct ModuleMap {
    FinModule source;
    FinModule target;
    Matrix matrix;  // dim(target) x dim(source)

    ModuleMap(FinModule src, FinModule tgt, Matrix m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        TATE_CHECK(matrix.rows() == target.dim() && matrix.cols() == source.dim(),
                   "module map shape mismatch");
        for (std::size_t v = 0; v < source.algebra()->num_vars(); ++v)
            TATE_CHECK(target.action(v) * matrix == matrix * source.action(v),
                       "module map does not intertwine the actions");
    }

    bool is_isomorphism() const {
        return source.dim() == target.dim() && rank(matrix) == source.dim();
    }
};

namespace detail {

/// Flatten a dimN x dimM matrix column-major into a vector of length
/// dimN*dimM (used to solve for intertwiners).
inline Matrix flatten(const Matrix& f) {
    Matrix v(f.field(), f.rows() * f.cols(), 1);
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t i = 0; i < f.rows(); ++i) v(j * f.rows() + i, 0) = f(i, j);
    return v;
}

inline Matrix unflatten(const Matrix& v, std::size_t rows, std::size_t cols,
                        std::size_t col = 0) {
    Matrix f(v.field(), rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) f(i, j) = v(j * rows + i, col);
    return f;
}

}  // namespace detail

/// Hom_R(M, N) as a module (R acting through N) together with matrices
/// realizing each basis vector as an intertwiner M -> N.
struct HomModule {
    FinModule module;
    std::vector<Matrix> basis;
};

inline HomModule hom_module(const FinModule& M, const FinModule& N) {
    TATE_CHECK(M.algebra() == N.algebra(), "hom_module: modules over different algebras");
    const PrimeField& f = M.field();
    const std::size_t m = M.dim(), n = N.dim(), nv = M.algebra()->num_vars();
    const std::size_t unknowns = m * n;

    // Conditions A_N f - f A_M = 0, one block row per variable, on the
    // column-major flattening of f.
    Matrix sys(f, nv * unknowns, unknowns);
    for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& a = N.action(v);
        const Matrix& b = M.action(v);
        // entry ((i,j),(k,l)) of the operator f -> A_N f - f A_M
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t row = v * unknowns + j * n + i;
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint32_t c = a(i, k);
                    if (c) sys(row, j * n + k) = f.add(sys(row, j * n + k), c);
                }
                for (std::size_t l = 0; l < m; ++l) {
                    std::uint32_t c = b(l, j);
                    if (c) sys(row, l * n + i) = f.sub(sys(row, l * n + i), c);
                }
            }
    }
    Matrix ker = kernel(sys);
    const std::size_t h = ker.cols();

    std::vector<Matrix> basis;
    for (std::size_t t = 0; t < h; ++t) basis.push_back(detail::unflatten(ker, n, m, t));

    // R acts on Hom by postcomposition; express A_N * F_t in the basis.
    std::vector<Matrix> acts;
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix rhs(f, unknowns, h);
        for (std::size_t t = 0; t < h; ++t)
            rhs.set_column(t, detail::flatten(N.action(v) * basis[t]));
        if (h == 0) {
            acts.emplace_back(f, 0, 0);
            continue;
        }
        auto x = solve(ker, rhs);
        TATE_CHECK(x.has_value(), "hom action does not preserve the intertwiner space");
        acts.push_back(std::move(*x));
    }
    return {FinModule(M.algebra(), std::move(acts)), std::move(basis)};
}

/// M tensor_R N: quotient of the k-tensor product by the relations
/// (x_v m) ox n - m ox (x_v n), generators only. Bilinearity extends the
/// relation span from basis vectors to all of M x N, and an induction on
/// monomial length extends it from the x_v to every r in R.
inline FinModule tensor_module(const FinModule& M, const FinModule& N) {
    TATE_CHECK(M.algebra() == N.algebra(), "tensor_module: modules over different algebras");
    const PrimeField& f = M.field();
    const std::size_t m = M.dim(), n = N.dim(), nv = M.algebra()->num_vars();
    const std::size_t D = m * n;  // e_a ox e_b at index a*n+b

    Matrix rels(f, D, nv * D);
    std::size_t col = 0;
    for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& a = M.action(v);
        const Matrix& b = N.action(v);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < m; ++k)
                    if (a(k, i)) rels(k * n + j, col) = a(k, i);
                for (std::size_t l = 0; l < n; ++l)
                    if (b(l, j)) rels(i * n + l, col) = f.sub(rels(i * n + l, col), b(l, j));
                ++col;
            }
    }
    QuotientMap q = quotient_map(rels);

    std::vector<Matrix> acts;
    for (std::size_t v = 0; v < nv; ++v) {
        // induced action via A_M ox I on representatives
        const Matrix& a = M.action(v);
        Matrix big(f, D, D);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (!a(k, i)) continue;
                for (std::size_t j = 0; j < n; ++j) big(k * n + j, i * n + j) = a(k, i);
            }
        acts.push_back(q.proj * big * q.section);
    }
    return FinModule(M.algebra(), std::move(acts));
}

/// Matlis dual: over an Artinian local k-algebra, Hom_R(M, E(k)) is the
/// k-linear dual with transposed actions, because E(k) = Hom_k(R, k).
inline FinModule matlis_dual(const FinModule& M) {
    std::vector<Matrix> acts;
    for (const auto& a : M.actions()) acts.push_back(a.transposed());
    return FinModule(M.algebra(), std::move(acts));
}

/// Projective cover F = R^rank ->> M; rank = dim M/mM, and the kernel
/// lies inside m*F (Nakayama).
struct ProjectiveCover {
    std::size_t rank;
    FinModule free;
    Matrix onto;  // dim(M) x (rank * dim R)
};

inline ProjectiveCover projective_cover(const FinModule& M) {
    const AlgebraPtr& R = M.algebra();
    const PrimeField& f = M.field();
    Matrix mM = M.radical_span();
    QuotientMap q = quotient_map(mM);
    const std::size_t b = q.proj.rows();

    FinModule free = FinModule::free_module(R, b);
    const std::size_t d = R->dim();
    Matrix onto(f, M.dim(), b * d);
    for (std::size_t t = 0; t < b; ++t) {
        Matrix lift = q.section.column(t);  // a basis vector of M lifting M/mM
        for (std::size_t s = 0; s < d; ++s) {
            Matrix img = M.monomial_action(R->basis()[s]) * lift;
            for (std::size_t i = 0; i < M.dim(); ++i) onto(i, t * d + s) = img(i, 0);
        }
    }
    TATE_CHECK(rank(onto) == M.dim(), "projective cover is not surjective");
    return {b, std::move(free), std::move(onto)};
}

/// First syzygy: the kernel of the projective cover, with its inclusion
/// into the free cover.
struct Syzygy {
    FinModule module;
    Matrix inclusion;  // (rank * dim R) x dim(syzygy)
    ProjectiveCover cover;
};

inline Syzygy syzygy_step(const FinModule& M) {
    ProjectiveCover pc = projective_cover(M);
    Matrix incl = kernel(pc.onto);
    const std::size_t d = M.algebra()->dim();

    // Nakayama: every kernel vector has all block-constant coordinates 0.
    for (std::size_t j = 0; j < incl.cols(); ++j)
        for (std::size_t t = 0; t < pc.rank; ++t)
            TATE_CHECK(incl(t * d, j) == 0, "syzygy escapes m * F: cover not minimal");

    std::vector<Matrix> acts;
    for (std::size_t v = 0; v < M.algebra()->num_vars(); ++v) {
        auto x = incl.cols() == 0
                     ? std::optional<Matrix>(Matrix(M.field(), 0, 0))
                     : solve(incl, pc.free.action(v) * incl);
        TATE_CHECK(x.has_value(), "syzygy is not action-invariant");
        acts.push_back(std::move(*x));
    }
    return {FinModule(M.algebra(), std::move(acts)), std::move(incl), std::move(pc)};
}

inline FinModule syzygy(const FinModule& M) { return syzygy_step(M).module; }

/// Presentation cokernel: M = coker(R^q -> R^p) for a p x q matrix of
/// ring elements (the columns are the relations).
inline FinModule module_from_presentation(AlgebraPtr R,
                                          const std::vector<std::vector<RingElem>>& A) {
    const std::size_t p = A.size();
    const std::size_t q = p == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        TATE_CHECK(row.size() == q, "presentation matrix is ragged");
    const std::size_t d = R->dim();
    const PrimeField f = R->field();

    FinModule free = FinModule::free_module(R, p);

    // k-span of the R-submodule generated by the columns: every standard
    // monomial times every column.
    Matrix gens(f, p * d, q * d);
    for (std::size_t j = 0; j < q; ++j) {
        Matrix colv(f, p * d, 1);
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t s = 0; s < d; ++s) colv(i * d + s, 0) = A[i][j][s];
        for (std::size_t s = 0; s < d; ++s) {
            Matrix img = free.monomial_action(R->basis()[s]) * colv;
            for (std::size_t r = 0; r < p * d; ++r) gens(r, j * d + s) = img(r, 0);
        }
    }
    QuotientMap qm = quotient_map(gens);
    std::vector<Matrix> acts;
    for (std::size_t v = 0; v < R->num_vars(); ++v)
        acts.push_back(qm.proj * free.action(v) * qm.section);
    return FinModule(R, std::move(acts));
}

/// Same, but with polynomial entries (reduced into the algebra first).
inline FinModule module_from_presentation(AlgebraPtr R,
                                          const std::vector<std::vector<Polynomial>>& A) {
    std::vector<std::vector<RingElem>> coords;
    for (const auto& row : A) {
        std::vector<RingElem> r;
        for (const auto& p : row) r.push_back(R->reduce_poly(p));
        coords.push_back(std::move(r));
    }
    return module_from_presentation(std::move(R), coords);
}

/// Split off free direct summands: M = M_red + R^free_rank with M_red
/// reduced. A free summand exists iff some homomorphism M -> R is
/// surjective, i.e. some Hom-basis map has image not inside m.
struct StripResult {
    FinModule reduced;
    std::size_t free_rank = 0;
};

inline bool has_free_summand(const FinModule& M, const HomModule& homR) {
    // image inside m <=> the constant-coordinate row of the map vanishes
    for (const auto& F : homR.basis)
        for (std::size_t j = 0; j < F.cols(); ++j)
            if (F(0, j) != 0) return true;
    return false;
}

inline StripResult strip_free_summands(const FinModule& M) {
    const AlgebraPtr& R = M.algebra();
    FinModule cur = M;
    std::size_t free_rank = 0;
    for (;;) {
        if (cur.dim() == 0) break;
        HomModule homR = hom_module(cur, FinModule::regular(R));
        const Matrix* surj = nullptr;
        std::size_t unit_col = 0;
        for (const auto& F : homR.basis) {
            for (std::size_t j = 0; j < F.cols(); ++j)
                if (F(0, j) != 0) {
                    surj = &F;
                    unit_col = j;
                    break;
                }
            if (surj) break;
        }
        if (!surj) break;
        // f(e_unit_col) is a unit of R, so f splits: M = ker f + R*(u^-1 e).
        Matrix K = kernel(*surj);
        TATE_CHECK(K.cols() == cur.dim() - R->dim(), "free splitting has wrong dimension");
        std::vector<Matrix> acts;
        for (std::size_t v = 0; v < R->num_vars(); ++v) {
            auto x = K.cols() == 0 ? std::optional<Matrix>(Matrix(M.field(), 0, 0))
                                   : solve(K, cur.action(v) * K);
            TATE_CHECK(x.has_value(), "kernel of splitting map is not a submodule");
            acts.push_back(std::move(*x));
        }
        cur = FinModule(R, std::move(acts));
        ++free_rank;
    }
    return {std::move(cur), free_rank};
}

namespace detail {

/// splitmix64; used wherever a documented, platform-independent stream
/// derivation is needed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Deterministic residue draw; avoids std distributions, whose output is
/// implementation-defined.
inline std::uint32_t draw_mod(std::mt19937_64& rng, std::uint32_t n) {
    return static_cast<std::uint32_t>(rng() % n);
}

}  // namespace detail

/// Seeded random isomorphism search: sample k-linear combinations of a
/// Hom basis and return the first invertible one. A certificate is a
/// proof; NotFound (nullopt) is not a disproof.
inline std::optional<ModuleMap> is_isomorphic(const FinModule& M, const FinModule& N,
                                              std::uint64_t seed, unsigned trials = 20) {
    if (M.dim() != N.dim()) return std::nullopt;
    if (M.dim() == 0) return ModuleMap(M, N, Matrix(M.field(), 0, 0));
    HomModule H = hom_module(M, N);
    if (H.basis.empty()) return std::nullopt;
    std::mt19937_64 rng(detail::mix64(seed));
    const std::uint32_t p = M.field().modulus();
    for (unsigned t = 0; t < trials; ++t) {
        Matrix cand(M.field(), N.dim(), M.dim());
        for (const auto& F : H.basis) cand = cand + F.scaled(detail::draw_mod(rng, p));
        if (is_invertible(cand)) return ModuleMap(M, N, std::move(cand));
    }
    return std::nullopt;
}

/// Seeded random module: the cokernel of a g x r presentation matrix with
/// entries drawn uniformly from m. Deterministic for a fixed seed.
inline FinModule random_module(AlgebraPtr R, std::uint64_t seed, unsigned max_gens,
                               unsigned max_rels) {
    TATE_CHECK(max_gens >= 1 && max_rels >= 1, "random_module needs positive bounds");
    std::mt19937_64 rng(detail::mix64(seed));
    const std::uint32_t p = R->field().modulus();
    const std::size_t d = R->dim();
    std::size_t g = 1 + detail::draw_mod(rng, max_gens);
    std::size_t r = 1 + detail::draw_mod(rng, max_rels);
    std::vector<std::vector<RingElem>> A(g, std::vector<RingElem>(r));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            RingElem e(d, 0);
            for (std::size_t s = 1; s < d; ++s) e[s] = detail::draw_mod(rng, p);
            A[i][j] = std::move(e);
        }
    return module_from_presentation(std::move(R), A);
}

}  // namespace tate
