// The graded polynomial ring layer: monomial orders, canonical sorted-term
// polynomials, and the Frobenius/substitution operations everything above is
// built from.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lyucalc/parse.hpp"
#include "lyucalc/ring.hpp"

using namespace lyu;

namespace {

Ring r2() { return make_ring(2, {"x", "y", "z"}); }
Ring r3() { return make_ring(3, {"x", "y"}); }

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a = mono_var(3, 0, 2);       // x^2
    Monomial b = mono_var(3, 1);          // y
    Monomial ab = mono_mul(a, b);
    CHECK(ab.degree() == 3);
    CHECK(mono_divides(a, ab));
    CHECK_FALSE(mono_divides(ab, a));
    CHECK(mono_quot(ab, a) == b);
    CHECK(mono_lcm(a, b) == ab);
    CHECK(mono_gcd(a, b).is_one());
    CHECK(mono_pow(b, 4) == mono_var(3, 1, 4));
    CHECK(mono_one(3).is_one());
}

TEST_CASE("grevlex order: degree first, then reversed last-variable comparison") {
    Ring r = r2();
    auto x = [&](std::size_t i, int e) { return mono_var(3, i, e); };
    CHECK(mono_cmp(*r, x(0, 2), x(0, 1)) > 0);                       // higher degree wins
    CHECK(mono_cmp(*r, x(0, 1), x(1, 1)) > 0);                       // x > y
    CHECK(mono_cmp(*r, x(1, 1), x(2, 1)) > 0);                       // y > z
    CHECK(mono_cmp(*r, mono_mul(x(0, 1), x(2, 1)), x(1, 2)) < 0);    // xz < y^2 in grevlex
    CHECK(mono_cmp(*r, x(0, 1), x(0, 1)) == 0);

    Ring rl = make_ring(2, {"x", "y", "z"}, OrderTag::lex);
    CHECK(mono_cmp(*rl, x(0, 1), x(1, 5)) > 0); // lex ignores degree
}

TEST_CASE("monomials_of_degree enumerates with x_0-heavy first") {
    auto ms = monomials_of_degree(3, 2);
    CHECK(ms.size() == 6); // C(4,2)
    CHECK(ms.front() == mono_var(3, 0, 2));
    CHECK(ms.back() == mono_var(3, 2, 2));
    for (const auto& m : ms) CHECK(m.degree() == 2);
    CHECK(monomials_of_degree(2, 0).size() == 1);
    CHECK(monomials_of_degree(4, 3).size() == 20); // C(6,3)
}

TEST_CASE("polynomial arithmetic keeps canonical form") {
    Ring r = r3();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly f = x + y;
    Poly g = f - x - y;
    CHECK(g.is_zero());
    CHECK((x * y) == (y * x));
    // coefficients live mod 3
    Poly three = x + x + x;
    CHECK(three.is_zero());
    Poly h = (x + y) * (x - y);
    CHECK(h == x * x - y * y);
    // terms strictly descending in the ring order
    Poly s = y * y + x * x + x * y;
    CHECK(s.terms().size() == 3);
    for (std::size_t k = 0; k + 1 < s.terms().size(); ++k)
        CHECK(mono_cmp(*r, s.terms()[k].m, s.terms()[k + 1].m) > 0);
    CHECK(s.lm() == mono_var(2, 0, 2));
    CHECK(s.lc() == 1);
}

TEST_CASE("freshman's dream in characteristic 2") {
    Ring r = r2();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    CHECK((x + y) * (x + y) == x * x + y * y);
}

TEST_CASE("degrees and homogeneity") {
    Ring r = r3();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    CHECK(Poly::zero(r).total_degree() == -1);
    CHECK((x * x + y).total_degree() == 2);
    CHECK_FALSE((x * x + y).is_homogeneous());
    CHECK((x * x + x * y).homogeneous_degree() == 2);
    CHECK(Poly::zero(r).is_homogeneous());
    CHECK(Poly::constant(r, 2).homogeneous_degree() == 0);
    CHECK(Poly::constant(r, 2).is_constant());
    CHECK_FALSE(x.is_constant());
}

TEST_CASE("frobenius raises exponents and coefficients by p^e") {
    Ring r = r3();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly f = x + y.scale(2);
    Poly fp = f.frobenius(1);
    CHECK(fp == Poly::monomial(r, mono_var(2, 0, 3), 1) +
                    Poly::monomial(r, mono_var(2, 1, 3), 2)); // 2^3 = 8 = 2 mod 3
    // frobenius is a ring map: (fg)^[p] = f^[p] g^[p]
    Poly g = x * y + x;
    CHECK((f * g).frobenius(1) == f.frobenius(1) * g.frobenius(1));
    CHECK(f.frobenius(2) == f.frobenius(1).frobenius(1));
    CHECK(f.frobenius(0) == f);
}

TEST_CASE("substitute maps variables to polynomials") {
    Ring r = r3();
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly f = x * x + y;
    // x -> y, y -> x + y
    Poly g = f.substitute({y, x + y}, r);
    CHECK(g == y * y + x + y);
    // substitute into a bigger ring
    Ring big = make_ring(3, {"x", "y", "u"});
    Poly u = Poly::variable(big, 2);
    Poly h = f.substitute({u, u * u}, big);
    CHECK(h == u * u + u * u);
    CHECK(h == u.mul_term(mono_var(3, 2, 1), 2));
}

TEST_CASE("scale, monic, mul_term") {
    Ring r = make_ring(5, {"x", "y"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly f = x.scale(3) + y;
    CHECK(f.monic().lc() == 1);
    CHECK(f.monic().scale(3) == f);
    CHECK(f.scale(0).is_zero());
    Poly shifted = f.mul_term(mono_var(2, 1, 2), 2);
    CHECK(shifted == (x.scale(3) + y) * Poly::monomial(r, mono_var(2, 1, 2), 2));
}

TEST_CASE("with_ring re-sorts terms under the target order") {
    Ring g = make_ring(2, {"x", "y", "z"});
    Ring l = make_ring(2, {"x", "y", "z"}, OrderTag::lex);
    Poly f = parse_poly(g, "x*z + y^2");
    CHECK(f.lm() == mono_var(3, 1, 2)); // grevlex: y^2 leads
    Poly fl = f.with_ring(l);
    CHECK(fl.lm() == mono_mul(mono_var(3, 0, 1), mono_var(3, 2, 1))); // lex: xz leads
    CHECK(fl.with_ring(g) == f);
}

TEST_CASE("to_string prints a re-parsable expression") {
    Ring r = make_ring(7, {"x0", "x1"});
    Poly f = parse_poly(r, "3*x0^2*x1 + x1^3 + 5");
    CHECK(parse_poly(r, f.to_string()) == f);
    CHECK(Poly::zero(r).to_string() == "0");
}
