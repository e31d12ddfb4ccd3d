#pragma once

#include <optional>
#include <vector>

#include "tatecalc/invariants.hpp"

namespace tate {

/// Witness of eventual periodicity of a minimal complex: an isomorphism
/// of syzygy modules Omega^{n0} = Omega^{n0+s}, plus the three lifted
/// free-level isomorphisms realizing the first repeated chunk
/// (C_{n0+2} -> C_{n0+1} -> C_{n0}) = (C_{n0+s+2} -> ... -> C_{n0+s}).
struct PeriodicityCertificate {
    int n0 = 0;
    unsigned s = 1;
    ModuleMap witness;
    int window_lo = 0, window_hi = 0;  // ranks verified to repeat here
    Matrix psi0, psi1, psi2;           // T_{n0+j} -> T_{n0+s+j}, j = 0,1,2
};

struct InvariantPeriodicity {
    unsigned s = 1;
    int lo = 0, hi = 0;
    std::vector<std::size_t> values;
};

namespace detail {

/// Uniform view of a minimal complex for the periodicity search: at each
/// degree n the free term, the differential into degree n-1, the syzygy
/// module Omega^n, its cover from the free term, and its inclusion into
/// the degree-(n-1) free term.
struct ComplexView {
    AlgebraPtr R;
    int mod_lo, mod_hi;    // syzygy data available on [mod_lo, mod_hi]
    int rank_lo, rank_hi;  // ranks available on [rank_lo, rank_hi]
    std::vector<std::size_t> ranks;          // [rank_lo, rank_hi]
    std::vector<FinModule> omegas;           // [mod_lo, mod_hi]
    std::vector<Matrix> covers;              // [mod_lo, mod_hi]
    std::vector<Matrix> inclusions;          // [mod_lo+1, mod_hi], into free(n-1)
    std::vector<Matrix> diffs;               // [rank_lo+1, rank_hi], linearized

    std::size_t rank_at(int n) const { return ranks.at(static_cast<std::size_t>(n - rank_lo)); }
    const FinModule& omega(int n) const {
        return omegas.at(static_cast<std::size_t>(n - mod_lo));
    }
    const Matrix& cover(int n) const {
        return covers.at(static_cast<std::size_t>(n - mod_lo));
    }
    const Matrix& inclusion(int n) const {
        return inclusions.at(static_cast<std::size_t>(n - mod_lo - 1));
    }
    const Matrix& diff(int n) const {
        return diffs.at(static_cast<std::size_t>(n - rank_lo - 1));
    }
};

inline ComplexView make_view(const Resolution& res) {
    if (!res.complex.is_minimal()) throw InputError("periodicity needs a minimal complex");
    ComplexView v;
    v.R = res.module.algebra();
    v.rank_lo = 0;
    v.rank_hi = res.complex.hi();
    for (int n = 0; n <= v.rank_hi; ++n) v.ranks.push_back(res.betti[std::size_t(n)]);
    v.mod_lo = 0;
    v.mod_hi = v.rank_hi;  // syzygies[hi+1] exists but its rank is unknown
    for (int n = 0; n <= v.mod_hi; ++n) {
        v.omegas.push_back(res.syzygies[std::size_t(n)]);
        v.covers.push_back(res.covers[std::size_t(n)]);
        if (n >= 1) v.inclusions.push_back(res.inclusions[std::size_t(n)]);
    }
    for (int n = 1; n <= v.rank_hi; ++n) v.diffs.push_back(res.complex.linearized_diff(n));
    return v;
}

inline ComplexView make_view(const CompleteResolution& T) {
    if (!T.complex.is_minimal()) throw InputError("periodicity needs a minimal complex");
    ComplexView v;
    v.R = T.module.algebra();
    const FreeComplex& cx = T.complex;
    v.rank_lo = cx.lo();
    v.rank_hi = cx.hi();
    for (int n = cx.lo(); n <= cx.hi(); ++n) v.ranks.push_back(cx.rank(n));
    v.mod_lo = cx.lo() + 1;
    v.mod_hi = cx.hi();
    for (int n = v.mod_lo; n <= v.mod_hi; ++n) {
        Matrix lin = cx.linearized_diff(n);
        Matrix incl = column_space(lin);  // Omega^n = Im(d_n) inside free(n-1)
        auto cov = incl.cols() == 0 ? std::optional<Matrix>(Matrix(lin.field(), 0, lin.cols()))
                                    : solve(incl, lin);
        TATE_CHECK(cov.has_value(), "image basis does not span the differential image");
        FinModule fr = FinModule::free_module(v.R, cx.rank(n - 1));
        std::vector<Matrix> acts;
        for (std::size_t g = 0; g < v.R->num_vars(); ++g) {
            auto x = incl.cols() == 0 ? std::optional<Matrix>(Matrix(lin.field(), 0, 0))
                                      : solve(incl, fr.action(g) * incl);
            TATE_CHECK(x.has_value(), "differential image is not a submodule");
            acts.push_back(std::move(*x));
        }
        v.omegas.emplace_back(v.R, std::move(acts));
        v.covers.push_back(std::move(*cov));
        if (n > v.mod_lo) v.inclusions.push_back(incl);  // accessor starts at mod_lo+1
        v.diffs.push_back(std::move(lin));
    }
    return v;
}

/// Lift an isomorphism of covered modules through two projective covers:
/// find psi with coverB * psi = phi * coverA, as a combination of a
/// Hom-basis between the free modules.
inline std::optional<Matrix> lift_through_covers(const ComplexView& v, int a, int b,
                                                 const Matrix& phi) {
    FinModule freeA = FinModule::free_module(v.R, v.rank_at(a));
    FinModule freeB = FinModule::free_module(v.R, v.rank_at(b));
    HomModule H = hom_module(freeA, freeB);
    const Matrix& coverA = v.cover(a);
    const Matrix& coverB = v.cover(b);
    Matrix target = detail::flatten(phi * coverA);
    Matrix sys(phi.field(), target.rows(), H.basis.size());
    for (std::size_t t = 0; t < H.basis.size(); ++t)
        sys.set_column(t, detail::flatten(coverB * H.basis[t]));
    auto coeffs = solve(sys, target);
    if (!coeffs) return std::nullopt;
    Matrix psi(phi.field(), freeB.dim(), freeA.dim());
    for (std::size_t t = 0; t < H.basis.size(); ++t)
        psi = psi + H.basis[t].scaled((*coeffs)(t, 0));
    return psi;
}

}  // namespace detail

/// Validate a certificate against the complex it was drawn from: the
/// witness is an isomorphism, ranks repeat on the checked window, and the
/// three lifted maps are isomorphisms making both squares of the first
/// chunk commute.
inline bool validate_certificate(const detail::ComplexView& v, const PeriodicityCertificate& c) {
    if (!c.witness.is_isomorphism()) return false;
    const int n0 = c.n0, s = static_cast<int>(c.s);
    for (int n = n0; n + s <= v.rank_hi; ++n)
        if (n >= v.rank_lo && v.rank_at(n) != v.rank_at(n + s)) return false;
    if (!is_invertible(c.psi0) || !is_invertible(c.psi1) || !is_invertible(c.psi2)) return false;
    // chunk squares: psi_j d_{n0+j+1} = d_{n0+s+j+1} psi_{j+1}
    if (!(c.psi0 * v.diff(n0 + 1) == v.diff(n0 + s + 1) * c.psi1)) return false;
    if (!(c.psi1 * v.diff(n0 + 2) == v.diff(n0 + s + 2) * c.psi2)) return false;
    // the lift really lifts the witness through the covers
    if (!(v.cover(n0 + s) * c.psi0 == c.witness.matrix * v.cover(n0))) return false;
    return true;
}

namespace detail {

inline std::optional<PeriodicityCertificate> detect_on_view(const ComplexView& v,
                                                            unsigned max_period,
                                                            std::uint64_t seed,
                                                            unsigned trials) {
    for (unsigned s = 1; s <= max_period; ++s) {
        const int si = static_cast<int>(s);
        // chunk validation consumes differentials up to n0+s+2
        for (int n0 = v.mod_lo; n0 + si + 2 <= v.mod_hi; ++n0) {
            bool ranks_repeat = true;
            for (int n = n0; n + si <= v.rank_hi && ranks_repeat; ++n)
                if (n >= v.rank_lo && v.rank_at(n) != v.rank_at(n + si)) ranks_repeat = false;
            if (!ranks_repeat) continue;

            // documented per-candidate stream: mix(seed, s, n0)
            std::uint64_t sub =
                mix64(seed ^ mix64(0x70657273ull + s) ^ mix64(0x6f666673ull + std::uint64_t(n0 + (1 << 20))));
            auto iso = is_isomorphic(v.omega(n0), v.omega(n0 + si), sub, trials);
            if (!iso) continue;

            auto psi0 = lift_through_covers(v, n0, n0 + si, iso->matrix);
            if (!psi0 || !is_invertible(*psi0)) continue;
            // restrict psi0 to ker(d) = Omega^{n0+1} and corestrict
            auto phi1 = solve(v.inclusion(n0 + si + 1), *psi0 * v.inclusion(n0 + 1));
            if (!phi1) continue;
            auto psi1 = lift_through_covers(v, n0 + 1, n0 + si + 1, *phi1);
            if (!psi1 || !is_invertible(*psi1)) continue;
            auto phi2 = solve(v.inclusion(n0 + si + 2), *psi1 * v.inclusion(n0 + 2));
            if (!phi2) continue;
            auto psi2 = lift_through_covers(v, n0 + 2, n0 + si + 2, *phi2);
            if (!psi2 || !is_invertible(*psi2)) continue;

            PeriodicityCertificate cert{n0,
                                        s,
                                        *iso,
                                        n0,
                                        v.rank_hi,
                                        std::move(*psi0),
                                        std::move(*psi1),
                                        std::move(*psi2)};
            TATE_CHECK(validate_certificate(v, cert), "periodicity certificate failed validation");
            return cert;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Search a minimal resolution for eventual periodicity in increasing
/// period order. A returned certificate is independently validated;
/// nullopt only means "not found within the window", never aperiodicity.
inline std::optional<PeriodicityCertificate> detect_complex_periodicity(
    const Resolution& res, unsigned max_period = 6, std::uint64_t seed = 0,
    unsigned trials = 20) {
    return detail::detect_on_view(detail::make_view(res), max_period, seed, trials);
}

inline std::optional<PeriodicityCertificate> detect_complex_periodicity(
    const CompleteResolution& T, unsigned max_period = 6, std::uint64_t seed = 0,
    unsigned trials = 20) {
    return detail::detect_on_view(detail::make_view(T), max_period, seed, trials);
}

/// Smallest period of an integer invariant sequence over its whole
/// window, or nullopt. Requires the window to span at least twice the
/// maximal candidate period.
inline std::optional<InvariantPeriodicity> invariant_periodicity(const InvariantReport& rep,
                                                                 unsigned max_period = 6) {
    if (rep.values.size() < 2 * static_cast<std::size_t>(max_period))
        throw InputError("invariant window shorter than twice the maximal period");
    for (unsigned s = 1; s <= max_period; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i + s < rep.values.size() && ok; ++i)
            if (rep.values[i] != rep.values[i + s]) ok = false;
        if (ok) return InvariantPeriodicity{s, rep.lo, rep.hi(), rep.values};
    }
    return std::nullopt;
}

/// The Betti-number dichotomy at desk scale: a hypersurface must certify
/// an eventually periodic resolution of k with period at most 2, and any
/// other ring must exhibit growth of beta_n(k) beyond beta_0 within the
/// window.
struct DichotomyReport {
    RingInvariants ring;
    std::vector<std::size_t> betti_of_k;
    std::optional<PeriodicityCertificate> certificate;
    bool consistent = false;
};

inline DichotomyReport hypersurface_dichotomy(const AlgebraPtr& R, std::size_t window = 12,
                                              std::uint64_t seed = 0) {
    DichotomyReport rep;
    rep.ring = ring_invariants(*R);
    Resolution res = minimal_resolution(FinModule::residue_field(R), window);
    rep.betti_of_k = res.betti;
    if (rep.ring.is_hypersurface) {
        rep.certificate = detect_complex_periodicity(res, 2, seed);
        rep.consistent = rep.certificate.has_value() && rep.certificate->s <= 2;
    } else {
        bool grows = false;
        for (auto b : res.betti)
            if (b > res.betti[0]) grows = true;
        rep.consistent = grows;
    }
    return rep;
}

}  // namespace tate
