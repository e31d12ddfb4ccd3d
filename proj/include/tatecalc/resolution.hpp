#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tatecalc/complex.hpp"

namespace tate {

/// Partial minimal free resolution F_steps -> ... -> F_0 ->> M.
///
/// Built by iterated projective covers, so minimality (all differential
/// entries in m) holds by construction and is re-asserted. Syzygies and
/// covers are kept for downstream periodicity certificates: syzygies[n]
/// is Omega^n (with Omega^0 = M), covers[n] maps F_n onto Omega^n, and
/// inclusions[n] embeds Omega^n into F_{n-1} for n >= 1.
struct Resolution {
    FreeComplex complex;
    FinModule module;
    Matrix augmentation;  // = covers[0]
    std::vector<std::size_t> betti;
    std::vector<FinModule> syzygies;
    std::vector<Matrix> covers;
    std::vector<Matrix> inclusions;  // inclusions[n] valid for n >= 1
};

inline Resolution minimal_resolution(const FinModule& M, std::size_t steps) {
    const AlgebraPtr& R = M.algebra();
    FreeComplex cx(R, 0, static_cast<int>(steps));

    std::vector<std::size_t> betti;
    std::vector<FinModule> syz;
    std::vector<Matrix> covers, inclusions;
    syz.push_back(M);
    inclusions.emplace_back(M.field(), 0, 0);  // placeholder at n = 0

    FinModule cur = M;
    for (std::size_t n = 0; n <= steps; ++n) {
        Syzygy s = syzygy_step(cur);
        betti.push_back(s.cover.rank);
        cx.set_rank(static_cast<int>(n), s.cover.rank);
        covers.push_back(s.cover.onto);
        if (n >= 1) {
            Matrix lin = inclusions[n] * covers[n];
            cx.set_diff(static_cast<int>(n),
                        ring_matrix_from_linear(*R, lin, betti[n - 1], betti[n]));
        }
        inclusions.push_back(s.inclusion);
        cur = s.module;
        syz.push_back(cur);
    }

    TATE_CHECK(cx.is_minimal(), "minimal resolution has a differential entry outside m");
    TATE_CHECK(cx.differentials_compose_to_zero(), "resolution differentials do not compose to 0");
    for (int n = 1; n < static_cast<int>(steps); ++n)
        TATE_CHECK(cx.homology_dim(n) == 0, "resolution not exact at degree " + std::to_string(n));

    Matrix aug = covers[0];
    return {std::move(cx), M, std::move(aug), std::move(betti),
            std::move(syz), std::move(covers), std::move(inclusions)};
}

/// One step of the right extension for a reduced module K over an
/// Artinian Gorenstein ring: embed K into a free module so that the
/// cokernel is again reduced.
///
/// Route: dualize the projective cover R^q ->> K^v and identify (R^q)^v
/// with R^q through the pairing <a,b> = sigma(ab), sigma a functional
/// not vanishing on the socle. Over these rings Hom(-,R) and the Matlis
/// dual agree (R = E(k)), so this realizes the Hom(K,R) construction;
/// the rank is cross-checked against beta_0(Hom(K,R)) computed directly.
struct CosyzygyStep {
    std::size_t q_rank;
    ModuleMap embedding;  // K -> R^q, image inside m R^q
    Matrix coker_proj;    // R^q ->> K'
    FinModule cosyzygy;   // K'
};

/// Gram matrix of the socle pairing; invertible iff R is Gorenstein.
inline Matrix gorenstein_gram(const LocalAlgebra& R) {
    Matrix soc = socle_basis(R);
    if (soc.cols() != 1)
        throw NotGorensteinError("ring has socle dimension " + std::to_string(soc.cols()) +
                                 ", need 1");
    std::size_t t = 0;
    while (t < R.dim() && soc(t, 0) == 0) ++t;
    TATE_CHECK(t < R.dim(), "zero socle generator");
    Matrix g(R.field(), R.dim(), R.dim());
    for (std::size_t r = 0; r < R.dim(); ++r)
        for (std::size_t s = 0; s < R.dim(); ++s) {
            RingElem prod = R.multiply(R.basis_elem(r), R.basis_elem(s));
            g(s, r) = prod[t];
        }
    TATE_CHECK(is_invertible(g), "socle pairing is degenerate on a Gorenstein ring");
    return g;
}

inline CosyzygyStep cosyzygy_extend(const FinModule& K) {
    const AlgebraPtr& R = K.algebra();
    const PrimeField& f = K.field();
    Matrix gram = gorenstein_gram(*R);  // throws NotGorenstein first
    const std::size_t d = R->dim();

    if (K.dim() == 0) {
        FinModule zero = FinModule::zero(R);
        return {0, ModuleMap(zero, zero, Matrix(f, 0, 0)), Matrix(f, 0, 0), zero};
    }

    HomModule homR = hom_module(K, FinModule::regular(R));
    if (has_free_summand(K, homR))
        throw NotReducedError("cosyzygy_extend requires a reduced module");

    FinModule Kv = matlis_dual(K);
    ProjectiveCover pc = projective_cover(Kv);
    const std::size_t q = pc.rank;

    // beta_0 of Hom(K,R) must equal q: the two dualities agree.
    {
        QuotientMap top = quotient_map(homR.module.radical_span());
        TATE_CHECK(top.proj.rows() == q,
                   "Hom(K,R) and Matlis routes disagree on the cosyzygy cover rank");
    }

    // Theta = I_q (x) Gram identifies R^q with its Matlis dual.
    Matrix theta(f, q * d, q * d);
    for (std::size_t b = 0; b < q; ++b)
        for (std::size_t s = 0; s < d; ++s)
            for (std::size_t r = 0; r < d; ++r) theta(b * d + s, b * d + r) = gram(s, r);
    auto theta_inv = inverse(theta);
    TATE_CHECK(theta_inv.has_value(), "socle pairing matrix not invertible");

    Matrix e_mat = *theta_inv * pc.onto.transposed();
    FinModule freeQ = FinModule::free_module(R, q);
    ModuleMap embedding(K, freeQ, e_mat);  // validates the intertwining
    TATE_CHECK(rank(e_mat) == K.dim(), "cosyzygy embedding is not injective");
    for (std::size_t j = 0; j < e_mat.cols(); ++j)
        for (std::size_t b = 0; b < q; ++b)
            TATE_CHECK(e_mat(b * d, j) == 0,
                       "cosyzygy embedding escapes m R^q; input not reduced?");

    QuotientMap qm = quotient_map(e_mat);
    std::vector<Matrix> acts;
    for (std::size_t v = 0; v < R->num_vars(); ++v)
        acts.push_back(qm.proj * freeQ.action(v) * qm.section);
    FinModule coker(R, std::move(acts));

    return {q, std::move(embedding), qm.proj, std::move(coker)};
}

/// Minimal complete projective resolution T of M on the window [lo, hi]:
/// a totally acyclic complex of free modules with T_n agreeing with the
/// minimal resolution of M_red in degrees >= 0 and M_red = Im(d_0).
/// Free summands of M are stripped first; they do not affect T.
struct CompleteResolution {
    FreeComplex complex;
    FinModule module;           // the module as given
    FinModule reduced;          // M_red
    std::size_t stripped_free_rank;
    ModuleMap splice;           // M_red -> T_{-1}, the degree-0 image
    std::vector<std::size_t> tate_betti;  // ranks on [lo, hi]

    std::size_t tate_betti_at(int n) const {
        return tate_betti.at(static_cast<std::size_t>(n - complex.lo()));
    }
};

inline CompleteResolution complete_resolution(const FinModule& M, int lo, int hi) {
    if (lo >= 0 || hi < 0) throw InputError("complete resolution window needs lo < 0 <= hi");
    const AlgebraPtr& R = M.algebra();
    gorenstein_gram(*R);  // NotGorenstein check up front

    StripResult st = strip_free_summands(M);
    const FinModule& red = st.reduced;

    FreeComplex cx(R, lo, hi);
    if (red.dim() == 0) {
        std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
        for (int n = lo + 1; n <= hi; ++n) cx.set_diff(n, RingMatrix(0, 0, R->dim()));
        FinModule zero = FinModule::zero(R);
        ModuleMap splice(zero, zero, Matrix(M.field(), 0, 0));
        return {std::move(cx), M, red, st.free_rank, std::move(splice), std::move(ranks)};
    }

    Resolution plus = minimal_resolution(red, static_cast<std::size_t>(hi));
    for (int n = 0; n <= hi; ++n) {
        cx.set_rank(n, plus.betti[static_cast<std::size_t>(n)]);
        if (n >= 1) cx.set_diff(n, plus.complex.diff(n));
    }

    // Left of the splice: iterate the cosyzygy extension from M_red.
    std::vector<CosyzygyStep> steps;
    FinModule cur = red;
    for (int j = 1; j <= -lo; ++j) {
        steps.push_back(cosyzygy_extend(cur));
        cur = steps.back().cosyzygy;
        cx.set_rank(-j, steps.back().q_rank);
    }

    const std::size_t d = R->dim();
    Matrix d0 = steps[0].embedding.matrix * plus.augmentation;
    cx.set_diff(0, ring_matrix_from_linear(*R, d0, cx.rank(-1), cx.rank(0)));
    for (int j = 1; j < -lo; ++j) {
        Matrix lin = steps[static_cast<std::size_t>(j)].embedding.matrix *
                     steps[static_cast<std::size_t>(j - 1)].coker_proj;
        cx.set_diff(-j, ring_matrix_from_linear(*R, lin, cx.rank(-j - 1), cx.rank(-j)));
    }

    TATE_CHECK(cx.is_minimal(), "complete resolution has a differential entry outside m");
    TATE_CHECK(cx.differentials_compose_to_zero(),
               "complete resolution differentials do not compose to 0");
    for (int n = lo + 1; n < hi; ++n)
        TATE_CHECK(cx.homology_dim(n) == 0,
                   "complete resolution not exact at degree " + std::to_string(n));

    // Independent rank cross-check: beta-hat_{-n-1}(M) = beta_n(M_red^v).
    if (lo <= -1) {
        Resolution dual = minimal_resolution(matlis_dual(red),
                                             static_cast<std::size_t>(-lo - 1));
        for (int n = 0; n <= -lo - 1; ++n)
            TATE_CHECK(dual.betti[static_cast<std::size_t>(n)] == cx.rank(-n - 1),
                       "dual-route Tate-Betti cross-check failed at degree " +
                           std::to_string(-n - 1));
    }

    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(cx.rank(n));
    TATE_CHECK(rank(d0) == red.dim(), "splice image does not match the reduced module");

    return {std::move(cx), M, red, st.free_rank, steps[0].embedding, std::move(ranks)};
}

/// Exactness report for a complete resolution and its Hom(-, R) dual.
struct AcyclicityReport {
    bool totally_acyclic = true;
    std::vector<int> degrees;
    std::vector<std::size_t> homology;      // of T
    std::vector<std::size_t> hom_homology;  // of Hom(T, R)
};

inline AcyclicityReport check_total_acyclicity(const CompleteResolution& T) {
    AcyclicityReport rep;
    const FreeComplex& cx = T.complex;
    FreeComplex dual = cx.hom_dual();
    for (int n = cx.lo() + 1; n < cx.hi(); ++n) {
        rep.degrees.push_back(n);
        std::size_t h = cx.homology_dim(n);
        // Hom(T,R) at cochain degree n sits at chain degree -n of the dual.
        std::size_t hh = dual.homology_dim(-n);
        rep.homology.push_back(h);
        rep.hom_homology.push_back(hh);
        if (h || hh) rep.totally_acyclic = false;
    }
    return rep;
}

}  // namespace tate
