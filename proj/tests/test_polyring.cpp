#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tatecalc/algebra.hpp"

using namespace tate;

namespace {

const PrimeField F101(101);
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> X = {"x"};

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

/// Independent reducer: repeatedly rewrites the first divisible term it
/// finds (not necessarily the leading one) until no term of the result is
/// divisible by any leading term. Termination follows from the order
/// being a well-order; on a reduced basis the fixpoint is the remainder.
Polynomial brute_force_reduce(Polynomial h, const GroebnerBasis& G) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [m, c] : h.terms()) {
            for (const auto& g : G.gens) {
                auto [gm, gc] = g.leading_term(G.order);
                if (!gm.divides(m)) continue;
                h = h - g.times_monomial(m / gm, h.field().mul(c, h.field().inv(gc)));
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return h;
}

}  // namespace

TEST_CASE("polynomial parsing") {
    SUBCASE("negation folds into the coefficient") {
        Polynomial p = parse_poly("x^2 - y", XY, F101);
        CHECK(p.terms().size() == 2);
        CHECK(p.terms().at(mono({2, 0})) == 1);
        CHECK(p.terms().at(mono({0, 1})) == 100);
    }
    SUBCASE("zero literal") {
        CHECK(parse_poly("0", XY, F101).is_zero());
    }
    SUBCASE("like terms collect") {
        Polynomial p = parse_poly("3*x*y + x*y", XY, F101);
        CHECK(p.terms().size() == 1);
        CHECK(p.terms().at(mono({1, 1})) == 4);
    }
    SUBCASE("whitespace is insignificant") {
        CHECK(parse_poly(" x ^ 2+ 3 * y ", XY, F101) == parse_poly("x^2+3*y", XY, F101));
    }
    SUBCASE("coefficients reduce mod p") {
        Polynomial p = parse_poly("102*x", XY, F101);
        CHECK(p.terms().at(mono({1, 0})) == 1);
    }
    SUBCASE("errors carry a position") {
        CHECK_THROWS_AS(parse_poly("x +", XY, F101), ParseError);
        CHECK_THROWS_AS(parse_poly("z^2", XY, F101), ParseError);
        CHECK_THROWS_AS(parse_poly("x^", XY, F101), ParseError);
        CHECK_THROWS_AS(parse_poly("", XY, F101), ParseError);
        try {
            parse_poly("x + w", XY, F101);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos == 4);
        }
    }
}

TEST_CASE("monomial orders") {
    MonomialOrder drl{OrderKind::degrevlex};
    MonomialOrder lex{OrderKind::lex};
    // degrevlex: degree first, then smaller last exponent wins
    CHECK(drl.less(mono({1, 0}), mono({0, 2})));
    CHECK(drl.less(mono({0, 1}), mono({1, 0})));
    CHECK(lex.less(mono({0, 5}), mono({1, 0})));
}

TEST_CASE("buchberger on the spec examples") {
    SUBCASE("single monomial is its own reduced basis") {
        GroebnerBasis gb = buchberger({parse_poly("x^2", X, F101)}, {});
        REQUIRE(gb.gens.size() == 1);
        CHECK(gb.gens[0] == parse_poly("x^2", X, F101));
        CHECK(gb.reduced);
    }
    SUBCASE("lex basis of (y - x^2, x^3), all S-polynomials reduce to zero") {
        // variable precedence y > x
        std::vector<std::string> yx = {"y", "x"};
        GroebnerBasis gb = buchberger(
            {parse_poly("y - x^2", yx, F101), parse_poly("x^3", yx, F101)},
            {OrderKind::lex});
        REQUIRE(gb.gens.size() == 2);
        // S-polynomial check by the independent reducer
        for (std::size_t i = 0; i < gb.gens.size(); ++i)
            for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
                auto [fm, fc] = gb.gens[i].leading_term(gb.order);
                auto [gm, gc] = gb.gens[j].leading_term(gb.order);
                Monomial l = Monomial::lcm(fm, gm);
                Polynomial s = gb.gens[i].times_monomial(l / fm, F101.inv(fc)) -
                               gb.gens[j].times_monomial(l / gm, F101.inv(gc));
                CHECK(brute_force_reduce(s, gb).is_zero());
            }
    }
    SUBCASE("monomial ideals come back unchanged") {
        std::vector<Polynomial> gens = {parse_poly("x^2", XY, F101), parse_poly("x*y", XY, F101),
                                        parse_poly("y^2", XY, F101)};
        GroebnerBasis gb = buchberger(gens, {});
        REQUIRE(gb.gens.size() == 3);
        for (const auto& g : gens)
            CHECK(std::find(gb.gens.begin(), gb.gens.end(), g) != gb.gens.end());
    }
}

TEST_CASE("normal form") {
    GroebnerBasis gb = buchberger({parse_poly("x^2", X, F101)}, {});
    CHECK(normal_form(parse_poly("x^2", X, F101), gb).is_zero());
    CHECK(normal_form(parse_poly("x^3 + x", X, F101), gb) == parse_poly("x", X, F101));

    SUBCASE("against the brute-force reducer") {
        GroebnerBasis g2 = buchberger(
            {parse_poly("x^2 - y", XY, F101), parse_poly("y^2", XY, F101)}, {});
        Polynomial f = parse_poly("x^2*y", XY, F101);
        CHECK(normal_form(f, g2) == brute_force_reduce(f, g2));
        // a few more mixed polynomials
        for (const char* s : {"x^3 + x*y + 1", "x^4*y^2 + 5*x", "y^3 + x^2 + y"}) {
            Polynomial h = parse_poly(s, XY, F101);
            CHECK(normal_form(h, g2) == brute_force_reduce(h, g2));
        }
    }
    SUBCASE("idempotence and linearity") {
        GroebnerBasis g2 = buchberger(
            {parse_poly("x^2 - y", XY, F101), parse_poly("y^2", XY, F101)}, {});
        Polynomial f = parse_poly("x^3*y + 2*x", XY, F101);
        Polynomial g = parse_poly("y^2 + x*y", XY, F101);
        Polynomial nf = normal_form(f, g2);
        CHECK(normal_form(nf, g2) == nf);
        CHECK(normal_form(f + g, g2) == normal_form(f, g2) + normal_form(g, g2));
        CHECK(normal_form(f.scaled(7), g2) == normal_form(f, g2).scaled(7));
    }
}

TEST_CASE("standard monomials") {
    SUBCASE("k[x]/(x^3)") {
        GroebnerBasis gb = buchberger({parse_poly("x^3", X, F101)}, {});
        auto sm = standard_monomials(gb);
        REQUIRE(sm.size() == 3);
        CHECK(sm[0] == mono({0}));
        CHECK(sm[1] == mono({1}));
        CHECK(sm[2] == mono({2}));
    }
    SUBCASE("k[x,y]/(x^2,xy,y^2)") {
        GroebnerBasis gb = buchberger({parse_poly("x^2", XY, F101), parse_poly("x*y", XY, F101),
                                       parse_poly("y^2", XY, F101)},
                                      {});
        auto sm = standard_monomials(gb);
        REQUIRE(sm.size() == 3);
        CHECK(sm[0] == mono({0, 0}));
    }
    SUBCASE("k[x,y]/(xy) is not Artinian") {
        GroebnerBasis gb = buchberger({parse_poly("x*y", XY, F101)}, {});
        CHECK_THROWS_AS(standard_monomials(gb), NotArtinianError);
    }
}

TEST_CASE("quotient algebra construction") {
    SUBCASE("k[x]/(x^2)") {
        AlgebraPtr R = make_algebra(101, X, {"x^2"});
        CHECK(R->dim() == 2);
        RingElem x = R->basis_elem(1);
        CHECK(R->multiply(x, x) == R->zero_elem());
    }
    SUBCASE("k[x,y]/(x^2,y^2) has basis 1, x, y, xy") {
        AlgebraPtr R = make_algebra(101, XY, {"x^2", "y^2"});
        CHECK(R->dim() == 4);
        RingElem xy = R->multiply(R->basis_elem(1), R->basis_elem(2));
        CHECK(xy == R->basis_elem(3));
    }
    SUBCASE("an idempotent variable splits the ring") {
        CHECK_THROWS_AS(make_algebra(101, X, {"x^2 - x"}), NotLocalError);
    }
    SUBCASE("non-Artinian quotients are rejected") {
        CHECK_THROWS_AS(make_algebra(101, XY, {"x*y"}), NotArtinianError);
    }
    SUBCASE("dim equals the standard monomial count") {
        AlgebraPtr R = make_algebra(101, XY, {"x^2 - y", "y^2"});
        // basis: 1, x, y, xy (x^2 = y, x^3 = xy, x^4 = 0)
        CHECK(R->dim() == 4);
    }
}

TEST_CASE("ring invariants on the three spec rings") {
    SUBCASE("k[x]/(x^3): Gorenstein hypersurface") {
        AlgebraPtr R = make_algebra(101, X, {"x^3"});
        RingInvariants inv = ring_invariants(*R);
        CHECK(inv.socle_dim == 1);
        CHECK(inv.embedding_dim == 1);
        CHECK(inv.is_gorenstein);
        CHECK(inv.is_hypersurface);
    }
    SUBCASE("k[x,y]/(x^2,xy,y^2): socle x,y; not Gorenstein") {
        AlgebraPtr R = make_algebra(101, XY, {"x^2", "x*y", "y^2"});
        RingInvariants inv = ring_invariants(*R);
        CHECK(inv.socle_dim == 2);
        CHECK_FALSE(inv.is_gorenstein);
        CHECK_FALSE(inv.is_hypersurface);
        CHECK(inv.embedding_dim == 2);
    }
    SUBCASE("k[x,y]/(x^2,y^2): Gorenstein, not a hypersurface") {
        AlgebraPtr R = make_algebra(101, XY, {"x^2", "y^2"});
        RingInvariants inv = ring_invariants(*R);
        CHECK(inv.socle_dim == 1);
        CHECK(inv.is_gorenstein);
        CHECK_FALSE(inv.is_hypersurface);
    }
}
