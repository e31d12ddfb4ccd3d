#pragma once

#include <string>
#include <vector>

#include "tatecalc/resolution.hpp"

namespace tate {

/// An integer invariant sequence on an explicit degree window, with a
/// note saying which algorithm produced it.
struct InvariantReport {
    enum class Kind { betti, tate_betti, bass, tate_bass, ext_hat, tor_hat };

    Kind kind;
    int lo = 0;
    std::vector<std::size_t> values;
    std::string provenance;

    int hi() const { return lo + static_cast<int>(values.size()) - 1; }
    std::size_t at(int n) const { return values.at(static_cast<std::size_t>(n - lo)); }
};

inline const char* kind_name(InvariantReport::Kind k) {
    switch (k) {
        case InvariantReport::Kind::betti: return "betti";
        case InvariantReport::Kind::tate_betti: return "tate_betti";
        case InvariantReport::Kind::bass: return "bass";
        case InvariantReport::Kind::tate_bass: return "tate_bass";
        case InvariantReport::Kind::ext_hat: return "ext_hat";
        case InvariantReport::Kind::tor_hat: return "tor_hat";
    }
    return "?";
}

inline InvariantReport betti_report(const Resolution& res) {
    return {InvariantReport::Kind::betti, 0, res.betti, "ranks of the minimal free resolution"};
}

inline InvariantReport tate_betti_report(const CompleteResolution& T) {
    return {InvariantReport::Kind::tate_betti, T.complex.lo(), T.tate_betti,
            "ranks of the minimal complete resolution"};
}

namespace detail {

/// k-matrix of Hom(d, N) : N^{rank(n-1)} -> N^{rank(n)} for the
/// differential d = d_n of a free complex (precomposition).
inline Matrix hom_into_matrix(const FinModule& N, const RingMatrix& d) {
    const PrimeField& f = N.field();
    const std::size_t nd = N.dim();
    Matrix out(f, d.cols * nd, d.rows * nd);
    for (std::size_t c = 0; c < d.cols; ++c)
        for (std::size_t r = 0; r < d.rows; ++r) {
            Matrix blk = N.element_action(d.at(r, c));
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t j = 0; j < nd; ++j) out(c * nd + i, r * nd + j) = blk(i, j);
        }
    return out;
}

/// k-matrix of d (x) N : N^{rank(n)} -> N^{rank(n-1)}.
inline Matrix tensor_with_matrix(const FinModule& N, const RingMatrix& d) {
    const PrimeField& f = N.field();
    const std::size_t nd = N.dim();
    Matrix out(f, d.rows * nd, d.cols * nd);
    for (std::size_t r = 0; r < d.rows; ++r)
        for (std::size_t c = 0; c < d.cols; ++c) {
            Matrix blk = N.element_action(d.at(r, c));
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t j = 0; j < nd; ++j) out(r * nd + i, c * nd + j) = blk(i, j);
        }
    return out;
}

inline std::size_t homology_between(const Matrix& outgoing, const Matrix& incoming) {
    TATE_CHECK((outgoing * incoming).is_zero(), "complex maps do not compose to zero");
    return (outgoing.cols() - rank(outgoing)) - rank(incoming);
}

}  // namespace detail

/// dim H^i(Hom(T, N)) for i in [lo, hi], T a complete resolution of M.
/// Cochain convention: degree i holds Hom(T_i, N) and the differential
/// precomposes with d_{i+1}.
inline InvariantReport ext_hat_from(const CompleteResolution& T, const FinModule& N, int lo,
                                    int hi) {
    TATE_CHECK(T.complex.lo() < lo && T.complex.hi() > hi,
               "complete resolution window too small for ext_hat");
    InvariantReport rep{InvariantReport::Kind::ext_hat, lo, {},
                        "homology of Hom(T_M, N) from the complete resolution of M"};
    for (int i = lo; i <= hi; ++i) {
        Matrix delta_out = detail::hom_into_matrix(N, T.complex.diff(i + 1));
        Matrix delta_in = detail::hom_into_matrix(N, T.complex.diff(i));
        rep.values.push_back(detail::homology_between(delta_out, delta_in));
    }
    return rep;
}

inline InvariantReport ext_hat(const FinModule& M, const FinModule& N, int lo, int hi) {
    CompleteResolution T = complete_resolution(M, std::min(lo - 1, -1), std::max(hi + 1, 0));
    return ext_hat_from(T, N, lo, hi);
}

/// dim H_i(T (x) N) for i in [lo, hi], T a complete resolution of M.
inline InvariantReport tor_hat_from(const CompleteResolution& T, const FinModule& N, int lo,
                                    int hi) {
    TATE_CHECK(T.complex.lo() < lo && T.complex.hi() > hi,
               "complete resolution window too small for tor_hat");
    InvariantReport rep{InvariantReport::Kind::tor_hat, lo, {},
                        "homology of T_M (x) N from the complete resolution of M"};
    for (int i = lo; i <= hi; ++i) {
        Matrix out = detail::tensor_with_matrix(N, T.complex.diff(i));
        Matrix in = detail::tensor_with_matrix(N, T.complex.diff(i + 1));
        rep.values.push_back(detail::homology_between(out, in));
    }
    return rep;
}

inline InvariantReport tor_hat(const FinModule& M, const FinModule& N, int lo, int hi) {
    CompleteResolution T = complete_resolution(M, std::min(lo - 1, -1), std::max(hi + 1, 0));
    return tor_hat_from(T, N, lo, hi);
}

/// Bass numbers mu^n(m, N) for n in [0, steps], computed twice:
/// (a) dim Ext^n(k, N) from the minimal resolution of k,
/// (b) beta_n(N^v) through Matlis duality.
/// The two routes are asserted equal.
inline InvariantReport bass_numbers(const FinModule& N, std::size_t steps) {
    const AlgebraPtr& R = N.algebra();
    Resolution pk = minimal_resolution(FinModule::residue_field(R), steps + 1);

    InvariantReport rep{InvariantReport::Kind::bass, 0, {},
                        "dim Ext^n(k, N); agrees with beta_n of the Matlis dual"};
    for (std::size_t n = 0; n <= steps; ++n) {
        Matrix delta_out = detail::hom_into_matrix(N, pk.complex.diff(static_cast<int>(n) + 1));
        std::size_t h;
        if (n == 0) {
            h = delta_out.cols() - rank(delta_out);
        } else {
            Matrix delta_in = detail::hom_into_matrix(N, pk.complex.diff(static_cast<int>(n)));
            h = detail::homology_between(delta_out, delta_in);
        }
        rep.values.push_back(h);
    }

    Resolution dual = minimal_resolution(matlis_dual(N), steps);
    for (std::size_t n = 0; n <= steps; ++n)
        TATE_CHECK(dual.betti[n] == rep.values[n],
                   "Bass number routes disagree at degree " + std::to_string(n));
    return rep;
}

/// Tate-Bass numbers mu-hat^n(m, N) = beta-hat_n(N^v): the minimal
/// complete injective resolution of N is the Matlis dual of the complete
/// projective resolution of N^v, term by term E(k)^{beta-hat_n}.
/// Exactness and minimality of the dual complex are inherited by duality
/// and asserted on the projective side.
inline InvariantReport tate_bass(const FinModule& N, int lo, int hi) {
    CompleteResolution T = complete_resolution(matlis_dual(N), lo, hi);
    InvariantReport rep{InvariantReport::Kind::tate_bass, lo, T.tate_betti,
                        "ranks of the complete resolution of the Matlis dual"};
    return rep;
}

/// Dimension-level balance (two independent routes per statement):
///   Hom:    dim H^i(Hom(T_M, N))  vs  dim H_i(T_{N^v} (x) M)
///   tensor: dim H_i(T_M (x) N)    vs  dim H^i(Hom(T_N, M^v))
/// The right-hand sides realize Hom(M, U_N) and M (x) U_N through Matlis
/// duality, U_N being the complete injective resolution of N. Degree
/// alignment follows from the convention M_red = Im(T_0 -> T_{-1}) on
/// both sides.
struct BalanceReport {
    int lo = 0, hi = 0;
    std::vector<std::size_t> hom_via_projective;   // H^i(Hom(T_M, N))
    std::vector<std::size_t> hom_via_injective;    // H_i(T_{N^v} (x) M)
    std::vector<std::size_t> tensor_via_projective;  // H_i(T_M (x) N)
    std::vector<std::size_t> tensor_via_injective;   // H^i(Hom(T_N, M^v))
    bool hom_balanced = true;
    bool tensor_balanced = true;
    std::uint64_t seed = 0;

    bool ok() const { return hom_balanced && tensor_balanced; }
};

inline BalanceReport balance_check(const FinModule& M, const FinModule& N, int lo, int hi,
                                   std::uint64_t seed = 0) {
    BalanceReport rep;
    rep.lo = lo;
    rep.hi = hi;
    rep.seed = seed;

    const int clo = std::min(lo - 1, -1), chi = std::max(hi + 1, 0);
    CompleteResolution TM = complete_resolution(M, clo, chi);
    CompleteResolution TNv = complete_resolution(matlis_dual(N), clo, chi);
    CompleteResolution TN = complete_resolution(N, clo, chi);
    FinModule Mv = matlis_dual(M);

    InvariantReport a = ext_hat_from(TM, N, lo, hi);
    InvariantReport b = tor_hat_from(TNv, M, lo, hi);
    InvariantReport c = tor_hat_from(TM, N, lo, hi);
    InvariantReport d = ext_hat_from(TN, Mv, lo, hi);

    rep.hom_via_projective = a.values;
    rep.hom_via_injective = b.values;
    rep.tensor_via_projective = c.values;
    rep.tensor_via_injective = d.values;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] != b.values[i]) rep.hom_balanced = false;
        if (c.values[i] != d.values[i]) rep.tensor_balanced = false;
    }
    return rep;
}

}  // namespace tate
