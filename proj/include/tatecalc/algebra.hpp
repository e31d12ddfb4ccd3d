#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "tatecalc/groebner.hpp"
#include "tatecalc/matrix.hpp"

namespace tate {

/// Coordinate vector of a ring element over the standard-monomial basis.
using RingElem = std::vector<std::uint32_t>;

/// A finite-dimensional commutative local algebra over F_p, presented by
/// its standard-monomial basis and the multiplication table of a quotient
/// k[x1..xn]/I. basis[0] is always 1, so the maximal ideal is exactly the
/// span of the higher basis vectors and an element is a unit iff its
/// constant coordinate is nonzero.
class LocalAlgebra {
public:
    LocalAlgebra(PrimeField f, std::vector<std::string> var_names, std::vector<Monomial> basis,
                 std::vector<std::vector<RingElem>> mult, GroebnerBasis relations)
        : field_(f),
          var_names_(std::move(var_names)),
          basis_(std::move(basis)),
          mult_(std::move(mult)),
          relations_(std::move(relations)) {
        TATE_CHECK(!basis_.empty() && basis_[0].is_one(), "basis must start with 1");
        build_generator_matrices();
        validate_table();
    }

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t num_vars() const { return var_names_.size(); }
    const std::vector<std::string>& var_names() const { return var_names_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const GroebnerBasis& relations() const { return relations_; }

    /// Multiplication-by-x_v matrix on the regular module.
    const Matrix& generator_matrix(std::size_t v) const { return gen_mats_[v]; }
    const std::vector<Matrix>& generator_matrices() const { return gen_mats_; }

    RingElem zero_elem() const { return RingElem(dim(), 0); }

    RingElem one_elem() const {
        RingElem e(dim(), 0);
        e[0] = 1;
        return e;
    }

    RingElem basis_elem(std::size_t i) const {
        RingElem e(dim(), 0);
        e[i] = 1;
        return e;
    }

    bool in_maximal_ideal(const RingElem& e) const { return e[0] == 0; }

    bool is_unit(const RingElem& e) const { return e[0] != 0; }

    RingElem multiply(const RingElem& a, const RingElem& b) const {
        RingElem out(dim(), 0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (!b[j]) continue;
                std::uint32_t c = field_.mul(a[i], b[j]);
                const RingElem& t = mult_[i][j];
                for (std::size_t s = 0; s < dim(); ++s)
                    out[s] = field_.add(out[s], field_.mul(c, t[s]));
            }
        }
        return out;
    }

    /// Multiplication-by-e matrix on the regular module.
    Matrix multiplication_matrix(const RingElem& e) const {
        Matrix m(field_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            RingElem col = multiply(e, basis_elem(j));
            for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    RingElem invert(const RingElem& e) const {
        TATE_CHECK(is_unit(e), "invert: element is not a unit");
        auto sol = solve(multiplication_matrix(e), Matrix::identity(field_, dim()).column(0));
        TATE_CHECK(sol.has_value(), "invert: unit has no inverse (broken table)");
        RingElem r(dim());
        for (std::size_t i = 0; i < dim(); ++i) r[i] = (*sol)(i, 0);
        return r;
    }

    /// Coordinates of the reduction of a polynomial into the algebra.
    RingElem reduce_poly(const Polynomial& p) const {
        Polynomial nf = normal_form(p, relations_);
        RingElem out(dim(), 0);
        for (const auto& [m, c] : nf.terms()) {
            bool hit = false;
            for (std::size_t i = 0; i < dim(); ++i)
                if (basis_[i] == m) {
                    out[i] = field_.add(out[i], c);
                    hit = true;
                    break;
                }
            TATE_CHECK(hit, "normal form contains a non-standard monomial");
        }
        return out;
    }

    std::string elem_str(const RingElem& e) const {
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += " + ";
            if (e[i] != 1 || basis_[i].is_one()) s += std::to_string(e[i]);
            if (!basis_[i].is_one()) {
                if (e[i] != 1) s += "*";
                s += basis_[i].str(var_names_);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void build_generator_matrices() {
        gen_mats_.clear();
        for (std::size_t v = 0; v < var_names_.size(); ++v) {
            Polynomial xv = Polynomial::variable(field_, var_names_.size(), v);
            gen_images_.push_back(reduce_poly(xv));
            gen_mats_.push_back(multiplication_matrix(gen_images_.back()));
        }
    }

    void validate_table() {
        const std::size_t n = dim();
        TATE_CHECK(mult_.size() == n, "multiplication table has wrong size");
        for (const auto& row : mult_) TATE_CHECK(row.size() == n, "multiplication table row size");
        for (std::size_t i = 0; i < n; ++i) {
            TATE_CHECK(mult_[0][i] == basis_elem(i) && mult_[i][0] == basis_elem(i),
                       "multiplication table is not unital");
            for (std::size_t j = i + 1; j < n; ++j)
                TATE_CHECK(mult_[i][j] == mult_[j][i], "multiplication table is not commutative");
        }
        // Full associativity is cubic in the dimension; run it at desk
        // scale where it is free, spot-check on generators otherwise.
        if (n <= 40) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t l = 0; l < n; ++l) {
                        RingElem lhs = multiply(mult_[i][j], basis_elem(l));
                        RingElem rhs = multiply(basis_elem(i), mult_[j][l]);
                        TATE_CHECK(lhs == rhs, "multiplication table is not associative");
                    }
        } else {
            for (std::size_t v = 0; v < gen_mats_.size(); ++v)
                for (std::size_t w = 0; w < gen_mats_.size(); ++w)
                    TATE_CHECK(gen_mats_[v] * gen_mats_[w] == gen_mats_[w] * gen_mats_[v],
                               "generator multiplications do not commute");
        }
        // Locality: every non-unit basis element is nilpotent, which holds
        // iff each generator multiplication is nilpotent.
        for (const auto& g : gen_mats_) {
            Matrix pw = g;
            std::size_t steps = 1;
            while (steps < n) {
                pw = pw * pw;
                steps *= 2;
            }
            TATE_CHECK(pw.is_zero(), "algebra is not local: a generator is not nilpotent");
        }
    }

    PrimeField field_;
    std::vector<std::string> var_names_;
    std::vector<Monomial> basis_;
    std::vector<std::vector<RingElem>> mult_;
    GroebnerBasis relations_;
    std::vector<RingElem> gen_images_;
    std::vector<Matrix> gen_mats_;
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

/// Build the Artinian quotient algebra k[vars]/I from a reduced Groebner
/// basis of I. Throws NotArtinianError when the quotient is infinite-
/// dimensional and NotLocalError when some variable fails to be nilpotent
/// (so the quotient splits and is not local).
inline AlgebraPtr build_quotient_algebra(const GroebnerBasis& G,
                                         std::vector<std::string> var_names,
                                         std::size_t cap = 10000) {
    if (var_names.empty()) throw InputError("the ring needs at least one variable");
    std::vector<Monomial> basis = standard_monomials(G, cap);
    if (basis.empty())
        throw NotLocalError("quotient ring is zero (ideal contains a unit)");
    const PrimeField f = G.gens.front().field();
    const std::size_t n = basis.size();
    const std::size_t nvars = var_names.size();

    // Locality first: x_v^dim must reduce to 0 for every variable.
    for (std::size_t v = 0; v < nvars; ++v) {
        Polynomial pw = Polynomial::constant(f, nvars, 1);
        Polynomial xv = Polynomial::variable(f, nvars, v);
        for (std::size_t e = 0; e < n; ++e) pw = normal_form(pw * xv, G);
        if (!pw.is_zero())
            throw NotLocalError("variable " + var_names[v] +
                                " is not nilpotent in the quotient; the ring is not local");
    }

    auto coords = [&](const Polynomial& nf) {
        RingElem out(n, 0);
        for (const auto& [m, c] : nf.terms()) {
            bool hit = false;
            for (std::size_t i = 0; i < n; ++i)
                if (basis[i] == m) {
                    out[i] = c;
                    hit = true;
                    break;
                }
            TATE_CHECK(hit, "normal form escaped the standard monomial basis");
        }
        return out;
    };

    std::vector<std::vector<RingElem>> table(n, std::vector<RingElem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Polynomial prod = Polynomial::term(f, basis[i] * basis[j], 1);
            RingElem c = coords(normal_form(prod, G));
            table[i][j] = c;
            table[j][i] = c;
        }

    return std::make_shared<LocalAlgebra>(f, std::move(var_names), std::move(basis),
                                          std::move(table), G);
}

/// Convenience: parse relation strings and build the quotient algebra.
inline AlgebraPtr make_algebra(std::uint32_t p, const std::vector<std::string>& vars,
                               const std::vector<std::string>& relations,
                               OrderKind order = OrderKind::degrevlex) {
    PrimeField f(p);
    std::vector<Polynomial> gens;
    for (const auto& r : relations) gens.push_back(parse_poly(r, vars, f));
    GroebnerBasis gb = buchberger(std::move(gens), MonomialOrder{order});
    return build_quotient_algebra(gb, vars);
}

struct RingInvariants {
    std::size_t socle_dim = 0;
    std::size_t embedding_dim = 0;
    bool is_gorenstein = false;
    bool is_hypersurface = false;
};

/// Basis of the socle {r : r*m = 0}, the joint kernel of the generator
/// multiplications.
inline Matrix socle_basis(const LocalAlgebra& R) {
    const std::size_t n = R.dim();
    if (R.num_vars() == 0) return Matrix::identity(R.field(), n);
    Matrix stacked(R.field(), 0, n);
    for (std::size_t v = 0; v < R.num_vars(); ++v)
        stacked = v == 0 ? R.generator_matrix(0) : vstack(stacked, R.generator_matrix(v));
    return kernel(stacked);
}

inline RingInvariants ring_invariants(const LocalAlgebra& R) {
    RingInvariants out;
    out.socle_dim = socle_basis(R).cols();
    out.is_gorenstein = out.socle_dim == 1;

    // m/m^2: span the products of positive-degree basis vectors.
    const std::size_t n = R.dim();
    if (n == 1) {
        out.embedding_dim = 0;
    } else {
        Matrix products(R.field(), n - 1, (n - 1) * (n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) {
                RingElem prod = R.multiply(R.basis_elem(i), R.basis_elem(j));
                TATE_CHECK(prod[0] == 0, "product of maximal-ideal elements has a unit part");
                for (std::size_t s = 1; s < n; ++s)
                    products(s - 1, (i - 1) * (n - 1) + (j - 1)) = prod[s];
            }
        out.embedding_dim = (n - 1) - rank(products);
    }
    out.is_hypersurface = out.embedding_dim <= 1;
    return out;
}

}  // namespace tate
