#pragma once

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "tatecalc/poly.hpp"

namespace tate {

struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;
    bool reduced = false;
};

/// Remainder of f on division by the polynomials in gens. No term of the
/// result is divisible by any leading term of gens.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gens,
                              const MonomialOrder& ord) {
    Polynomial rem(f.field(), f.nvars());
    Polynomial h = f;
    const PrimeField& fp = f.field();
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(ord);
        bool reduced_step = false;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            auto [gm, gc] = g.leading_term(ord);
            if (gm.divides(lm)) {
                std::uint32_t c = fp.mul(lc, fp.inv(gc));
                h = h - g.times_monomial(lm / gm, c);
                reduced_step = true;
                break;
            }
        }
        if (!reduced_step) {
            rem.add_term(lm, lc);
            h.add_term(lm, fp.neg(lc));
        }
    }
    return rem;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.gens, gb.order);
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
    const PrimeField& fp = f.field();
    auto [fm, fc] = f.leading_term(ord);
    auto [gm, gc] = g.leading_term(ord);
    Monomial l = Monomial::lcm(fm, gm);
    return f.times_monomial(l / fm, fp.inv(fc)) - g.times_monomial(l / gm, fp.inv(gc));
}

inline bool coprime_leads(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    auto fm = f.leading_term(ord).first;
    auto gm = g.leading_term(ord).first;
    for (std::size_t i = 0; i < fm.exps.size(); ++i)
        if (fm.exps[i] && gm.exps[i]) return false;
    return true;
}

}  // namespace detail

/// Buchberger's algorithm with the coprime-lead pair criterion, followed
/// by inter-reduction to the unique reduced basis (monic generators, no
/// generator term divisible by another generator's lead).
inline GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(std::move(g));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (detail::coprime_leads(basis[i], basis[j], order)) continue;
        Polynomial s = detail::s_polynomial(basis[i], basis[j], order);
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(r);
        for (std::size_t t = 0; t + 1 < basis.size(); ++t) pairs.emplace_back(t, basis.size() - 1);
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto lm = basis[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            auto om = basis[j].leading_term(order).first;
            if (om.divides(lm) && !(om == lm && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each survivor against the others and make it monic.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others, order);
            TATE_CHECK(!r.is_zero(), "minimal generator reduced to zero");
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    for (auto& g : minimal) {
        auto [m, c] = g.leading_term(order);
        g = g.scaled(g.field().inv(c));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return {std::move(minimal), order, true};
}

/// All monomials not divisible by any leading term of G, sorted
/// increasingly by G's order. Throws NotArtinianError past `cap`.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G, std::size_t cap = 10000) {
    TATE_CHECK(G.reduced, "standard_monomials expects a reduced basis");
    if (G.gens.empty())
        throw NotArtinianError("zero ideal: quotient ring is not finite-dimensional");
    std::size_t nvars = 0;
    std::vector<Monomial> leads;
    for (const auto& g : G.gens) {
        nvars = g.nvars();
        leads.push_back(g.leading_term(G.order).first);
    }
    auto is_standard = [&](const Monomial& m) {
        for (const auto& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    // The standard monomials form an order ideal under divisibility, so a
    // breadth-first walk from 1 through variable multiples visits them all.
    std::vector<Monomial> found;
    std::map<Monomial, bool> seen;
    std::deque<Monomial> queue;
    Monomial one(nvars);
    if (!is_standard(one)) return {};  // unit ideal
    queue.push_back(one);
    seen[one] = true;
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        found.push_back(m);
        if (found.size() > cap)
            throw NotArtinianError("quotient ring is not finite-dimensional (more than " +
                                   std::to_string(cap) + " standard monomials)");
        for (std::size_t v = 0; v < nvars; ++v) {
            Monomial next = m;
            ++next.exps[v];
            if (seen.count(next) || !is_standard(next)) continue;
            seen[next] = true;
            queue.push_back(next);
        }
    }
    std::sort(found.begin(), found.end(),
              [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });
    return found;
}

}  // namespace tate
