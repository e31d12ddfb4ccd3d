#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tatecalc/periodicity.hpp"

namespace tate {

/// Outcome of one verification suite. Suites whose hypotheses fail
/// (e.g. Gorenstein-only statements over a non-Gorenstein ring) SKIP
/// rather than fail: the theorems are conditionals and the tool mirrors
/// that structure.
enum class SuiteStatus { pass, fail, skip };

struct SuiteReport {
    std::string name;
    SuiteStatus status = SuiteStatus::pass;
    std::string note;
    std::vector<std::string> lines;

    void record(bool ok, const std::string& what) {
        lines.push_back((ok ? "ok   " : "FAIL ") + what);
        if (!ok) status = SuiteStatus::fail;
    }
};

inline const char* status_name(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "PASS";
        case SuiteStatus::fail: return "FAIL";
        case SuiteStatus::skip: return "SKIP";
    }
    return "?";
}

namespace detail {

inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t i) {
    return mix64(seed ^ mix64(0xA5EEDull + i));
}

inline std::string seq_str(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace detail

/// Minimality and well-formedness of minimal and complete resolutions:
/// d^2 = 0, vanishing interior homology, every differential entry in m.
inline SuiteReport suite_minimality(const AlgebraPtr& R, std::uint64_t seed,
                                    std::size_t count = 5, std::size_t steps = 8,
                                    int lo = -6, int hi = 8) {
    SuiteReport rep{"minimality"};
    bool gorenstein = ring_invariants(*R).is_gorenstein;

    auto check_res = [&](const FinModule& M, const std::string& label) {
        Resolution res = minimal_resolution(M, steps);
        bool ok = res.complex.is_minimal() && res.complex.differentials_compose_to_zero();
        for (int n = 1; n < static_cast<int>(steps) && ok; ++n)
            ok = res.complex.homology_dim(n) == 0;
        rep.record(ok, "minimal resolution of " + label + ", betti " +
                           detail::seq_str(res.betti));
        if (gorenstein) {
            CompleteResolution T = complete_resolution(M, lo, hi);
            bool cok = T.complex.is_minimal() && T.complex.differentials_compose_to_zero();
            for (int n = lo + 1; n < hi && cok; ++n) cok = T.complex.homology_dim(n) == 0;
            rep.record(cok, "complete resolution of " + label + ", tate-betti " +
                                detail::seq_str(T.tate_betti));
        }
    };

    check_res(FinModule::residue_field(R), "k");
    for (std::size_t i = 0; i < count; ++i) {
        FinModule M = random_module(R, detail::instance_seed(seed, i), 2, 3);
        check_res(M, "random module #" + std::to_string(i) + " (dim " +
                         std::to_string(M.dim()) + ")");
    }
    if (!gorenstein)
        rep.note = "ring is not Gorenstein; complete resolutions skipped";
    return rep;
}

/// Total acyclicity of complete resolutions, including Hom(-, R)-exactness.
inline SuiteReport suite_acyclicity(const AlgebraPtr& R, std::uint64_t seed,
                                    std::size_t count = 20, int lo = -6, int hi = 8) {
    SuiteReport rep{"acyclicity"};
    if (!ring_invariants(*R).is_gorenstein) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: ring is not Gorenstein";
        return rep;
    }
    for (std::size_t i = 0; i < count; ++i) {
        FinModule M = random_module(R, detail::instance_seed(seed, i), 2, 3);
        CompleteResolution T = complete_resolution(M, lo, hi);
        AcyclicityReport a = check_total_acyclicity(T);
        rep.record(a.totally_acyclic, "random module #" + std::to_string(i) + " (dim " +
                                          std::to_string(M.dim()) + "): homology and " +
                                          "Hom(T,R)-homology vanish on the window");
    }
    return rep;
}

namespace detail {

/// k's resolution must be eventually periodic for the periodicity
/// theorems to apply; returns the certified period, or nothing.
inline std::optional<PeriodicityCertificate> residue_field_period(const AlgebraPtr& R,
                                                                  std::uint64_t seed,
                                                                  unsigned max_period = 6,
                                                                  std::size_t window = 12) {
    Resolution res = minimal_resolution(FinModule::residue_field(R), window);
    return detect_complex_periodicity(res, max_period, seed);
}

}  // namespace detail

/// Periodicity of Tate-Betti numbers with the period certified on k's
/// resolution, plus the proof identity dim H_n(T_k (x) M) = beta-hat_n(M).
inline SuiteReport suite_tate_betti_periodicity(const AlgebraPtr& R, std::uint64_t seed,
                                                std::size_t count = 20) {
    SuiteReport rep{"tate-betti-periodicity"};
    if (!ring_invariants(*R).is_gorenstein) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: ring is not Gorenstein";
        return rep;
    }
    auto cert = detail::residue_field_period(R, seed);
    if (!cert) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: k's resolution not eventually periodic in window";
        return rep;
    }
    const int s = static_cast<int>(cert->s);
    rep.lines.push_back("ok   k's resolution certified periodic: n0 = " +
                        std::to_string(cert->n0) + ", s = " + std::to_string(cert->s));

    CompleteResolution Tk = complete_resolution(FinModule::residue_field(R), -7, 7);
    const int wlo = -8, whi = 8;
    for (std::size_t i = 0; i < count; ++i) {
        FinModule M = random_module(R, detail::instance_seed(seed, i), 2, 3);
        CompleteResolution T = complete_resolution(M, wlo, whi);
        bool periodic = true;
        for (int n = wlo; n + s <= whi; ++n)
            if (T.tate_betti_at(n) != T.tate_betti_at(n + s)) periodic = false;
        rep.record(periodic, "tate-betti of random module #" + std::to_string(i) + " " +
                                 detail::seq_str(T.tate_betti) + " periodic with s = " +
                                 std::to_string(s));
        InvariantReport th = tor_hat_from(Tk, M, -5, 5);
        bool identity = true;
        for (int n = -5; n <= 5; ++n)
            if (th.at(n) != T.tate_betti_at(n)) identity = false;
        rep.record(identity, "dim H_n(T_k (x) M) = tate-betti_n(M) on [-5,5] for module #" +
                                 std::to_string(i));
    }
    return rep;
}

/// Periodicity of Tate-Bass numbers under the same hypothesis on k.
inline SuiteReport suite_tate_bass_periodicity(const AlgebraPtr& R, std::uint64_t seed,
                                               std::size_t count = 20) {
    SuiteReport rep{"tate-bass-periodicity"};
    if (!ring_invariants(*R).is_gorenstein) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: ring is not Gorenstein";
        return rep;
    }
    auto cert = detail::residue_field_period(R, seed);
    if (!cert) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: k's resolution not eventually periodic in window";
        return rep;
    }
    const int s = static_cast<int>(cert->s);
    rep.lines.push_back("ok   k's resolution certified periodic: s = " + std::to_string(cert->s));

    const int wlo = -8, whi = 8;
    for (std::size_t i = 0; i < count; ++i) {
        FinModule N = random_module(R, detail::instance_seed(seed, i), 2, 3);
        InvariantReport mu = tate_bass(N, wlo, whi);
        bool periodic = true;
        for (int n = wlo; n + s <= whi; ++n)
            if (mu.at(n) != mu.at(n + s)) periodic = false;
        rep.record(periodic, "tate-bass of random module #" + std::to_string(i) + " " +
                                 detail::seq_str(mu.values) + " periodic with s = " +
                                 std::to_string(s));
    }
    return rep;
}

/// Balance: Ext-hat and Tor-hat computed through the projective side of
/// M and through the (dualized) injective side of N agree per degree.
inline SuiteReport suite_balance(const AlgebraPtr& R, std::uint64_t seed,
                                 std::size_t pairs = 10, int lo = -5, int hi = 5) {
    SuiteReport rep{"balance"};
    if (!ring_invariants(*R).is_gorenstein) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: ring is not Gorenstein";
        return rep;
    }
    for (std::size_t i = 0; i < pairs; ++i) {
        FinModule M = random_module(R, detail::instance_seed(seed, 2 * i), 2, 3);
        FinModule N = random_module(R, detail::instance_seed(seed, 2 * i + 1), 2, 3);
        BalanceReport b = balance_check(M, N, lo, hi, seed);
        rep.record(b.hom_balanced, "pair #" + std::to_string(i) +
                                       ": Hom balance " + detail::seq_str(b.hom_via_projective) +
                                       " = " + detail::seq_str(b.hom_via_injective));
        rep.record(b.tensor_balanced,
                   "pair #" + std::to_string(i) + ": tensor balance " +
                       detail::seq_str(b.tensor_via_projective) + " = " +
                       detail::seq_str(b.tensor_via_injective));
    }
    return rep;
}

/// Matlis duality identities: mu-hat_n(m, M^v) = beta-hat_n(M) with the
/// mu side from the Ext-hat(k,-) route, and mu_n(m, M^v) = beta_n(M)
/// with the mu side from the Ext(k,-) route.
inline SuiteReport suite_matlis_duality(const AlgebraPtr& R, std::uint64_t seed,
                                        std::size_t count = 20) {
    SuiteReport rep{"matlis-duality"};
    bool gorenstein = ring_invariants(*R).is_gorenstein;
    if (!gorenstein) {
        rep.status = SuiteStatus::skip;
        rep.note = "hypothesis not satisfied: ring is not Gorenstein";
        return rep;
    }
    std::optional<CompleteResolution> Tk;
    for (std::size_t i = 0; i < count; ++i) {
        FinModule M = random_module(R, detail::instance_seed(seed, i), 2, 3);
        FinModule Mv = matlis_dual(M);

        // finite part: mu_n(m, M^v) = beta_n(M) on [0, 8]
        InvariantReport mu = bass_numbers(Mv, 8);
        Resolution res = minimal_resolution(M, 8);
        bool fin = true;
        for (int n = 0; n <= 8; ++n)
            if (mu.at(n) != res.betti[static_cast<std::size_t>(n)]) fin = false;
        rep.record(fin, "mu_n(m, M^v) = beta_n(M) on [0,8] for module #" + std::to_string(i) +
                            " " + detail::seq_str(mu.values));

        // Tate part: mu-hat_n(m, M^v) = tate-betti_n(M) on [-6, 6], the
        // mu-hat side through Hom(T_k, M^v).
        if (!Tk) Tk = complete_resolution(FinModule::residue_field(R), -8, 8);
        InvariantReport muh = ext_hat_from(*Tk, Mv, -6, 6);
        CompleteResolution T = complete_resolution(M, -6, 6);
        bool tate = true;
        for (int n = -6; n <= 6; ++n)
            if (muh.at(n) != T.tate_betti_at(n)) tate = false;
        rep.record(tate, "mu-hat_n(m, M^v) = tate-betti_n(M) on [-6,6] for module #" +
                             std::to_string(i) + " " + detail::seq_str(muh.values));
    }
    return rep;
}

/// The hypersurface dichotomy on the given ring.
inline SuiteReport suite_hypersurface_dichotomy(const AlgebraPtr& R, std::uint64_t seed,
                                                std::size_t window = 10) {
    SuiteReport rep{"hypersurface-dichotomy"};
    DichotomyReport d = hypersurface_dichotomy(R, window, seed);
    std::string what = d.ring.is_hypersurface
                           ? "hypersurface: k's resolution certified periodic with s = " +
                                 (d.certificate ? std::to_string(d.certificate->s) : "none")
                           : "not a hypersurface: beta_n(k) " + detail::seq_str(d.betti_of_k) +
                                 " exceeds beta_0 in the window";
    rep.record(d.consistent, what);
    return rep;
}

inline SuiteReport run_suite(const std::string& name, const AlgebraPtr& R, std::uint64_t seed,
                             std::size_t count) {
    if (name == "minimality") return suite_minimality(R, seed, count);
    if (name == "acyclicity") return suite_acyclicity(R, seed, count);
    if (name == "tate-betti-periodicity") return suite_tate_betti_periodicity(R, seed, count);
    if (name == "tate-bass-periodicity") return suite_tate_bass_periodicity(R, seed, count);
    if (name == "balance") return suite_balance(R, seed, count);
    if (name == "matlis-duality") return suite_matlis_duality(R, seed, count);
    if (name == "hypersurface-dichotomy") return suite_hypersurface_dichotomy(R, seed);
    throw InputError("unknown suite '" + name +
                     "' (available: minimality, acyclicity, tate-betti-periodicity, "
                     "tate-bass-periodicity, balance, matlis-duality, hypersurface-dichotomy)");
}

}  // namespace tate
