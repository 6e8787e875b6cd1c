// Gröbner engine: reduced bases, normal forms with witnesses, syzygies,
// lifting through matrices, bracket powers, elimination, Krull dimension.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lyucalc/groebner.hpp"
#include "lyucalc/parse.hpp"

using namespace lyu;

namespace {

std::vector<Poly> polys(const Ring& r, const std::vector<std::string>& ss) {
    std::vector<Poly> out;
    for (const auto& s : ss) out.push_back(parse_poly(r, s));
    return out;
}

} // namespace

TEST_CASE("pinned reduction over F_3: the pair completes to pure squares") {
    Ring r = make_ring(3, {"x0", "x1"});
    auto gb = ideal_gb(r, polys(r, {"x0^2 - x1^2", "x0^2 + x1^2"}));
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == parse_poly(r, "x0^2"));
    CHECK(gb[1] == parse_poly(r, "x1^2"));
}

TEST_CASE("reduced bases are monic, sorted, self-reduced, and idempotent") {
    Ring r = make_ring(5, {"x", "y", "z"});
    auto gens = polys(r, {"2*x^2 + y*z", "x*y + 3*z^2", "y^3 - x*z^2"});
    auto gb = ideal_gb(r, gens);
    for (const auto& g : gb) CHECK(g.lc() == 1);
    for (std::size_t k = 0; k + 1 < gb.size(); ++k)
        CHECK(mono_cmp(*r, gb[k].lm(), gb[k + 1].lm()) > 0);
    // no lead divides another lead or appears in another element's tail
    for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = 0; b < gb.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : gb[b].terms())
                CHECK_FALSE(mono_divides(gb[a].lm(), t.m));
        }
    CHECK(ideal_gb(r, gb) == gb);
    // every input generator reduces to zero against the basis
    GBEngine eng = GBEngine::for_ideal(r, gb);
    for (const auto& g : gens) CHECK(eng.nf1(g).is_zero());
}

TEST_CASE("normal form is a linear section of the quotient") {
    Ring r = make_ring(2, {"x", "y"});
    GBEngine eng = GBEngine::for_ideal(r, polys(r, {"x^2 + x*y", "y^3"}));
    Poly f = parse_poly(r, "x^3 + y^4 + x");
    Poly n = eng.nf1(f);
    CHECK(eng.nf1(n) == n);                       // idempotent
    CHECK(eng.contains1(f - n));                  // f - nf(f) lies in the ideal
    CHECK(eng.nf1(f + parse_poly(r, "x^2 + x*y")) == n);
    CHECK_FALSE(eng.contains1(parse_poly(r, "x")));
}

TEST_CASE("witnesses reconstruct the division") {
    Ring r = make_ring(3, {"x", "y"});
    auto gens = polys(r, {"x^2 - y", "y^2 - x"});
    GBEngine eng(r, free_module({0}), {{gens[0]}, {gens[1]}}, true);
    Poly f = parse_poly(r, "x^4 + x*y");
    auto [n, w] = eng.nf_with_witness({f});
    REQUIRE(n.size() == 1);
    REQUIRE(w.size() == 2);
    CHECK(f == n[0] + w[0] * gens[0] + w[1] * gens[1]);
    // gb elements match their rep expansion in the inputs
    for (std::size_t k = 0; k < eng.gb().size(); ++k) {
        Poly acc = Poly::zero(r);
        for (std::size_t i = 0; i < 2; ++i) acc = acc + eng.reps()[k][i] * gens[i];
        CHECK(acc == eng.gb()[k][0]);
    }
}

TEST_CASE("syzygies annihilate the inputs") {
    Ring r = make_ring(2, {"x", "y"});
    auto gens = polys(r, {"x", "y"});
    GBEngine eng(r, free_module({0}), {{gens[0]}, {gens[1]}}, true);
    REQUIRE(eng.syzygies().size() >= 1);
    for (const auto& s : eng.syzygies()) {
        Poly acc = Poly::zero(r);
        for (std::size_t i = 0; i < 2; ++i) acc = acc + s[i] * gens[i];
        CHECK(acc.is_zero());
    }
    // the Koszul relation (y, -x) spans: every syzygy is a multiple of it
    for (const auto& s : eng.syzygies()) CHECK(s[0] * gens[0] == s[1].negate() * gens[1]);
}

TEST_CASE("syzygy_matrix composes to zero") {
    Ring r = make_ring(2, {"x0", "x1", "x2", "x3"});
    auto gens = polys(r, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
    ModMatrix d1 = ModMatrix::from_cols(r, free_module({0}),
                                        {{gens[0]}, {gens[1]}, {gens[2]}, {gens[3]}});
    ModMatrix syz = syzygy_matrix(d1);
    CHECK(syz.cols() == 4); // the skew-lines ideal has 4 independent first syzygies
    CHECK(d1.compose(syz).is_zero());
}

TEST_CASE("ideal_equal compares ideals, not generator lists") {
    Ring r = make_ring(2, {"x", "y"});
    CHECK(ideal_equal(r, polys(r, {"x", "y"}), polys(r, {"x + y", "y"})));
    CHECK_FALSE(ideal_equal(r, polys(r, {"x"}), polys(r, {"x", "y"})));
    CHECK(ideal_equal(r, {}, {}));
    CHECK(ideal_equal(r, polys(r, {"x^2", "x^2 + x^3"}), polys(r, {"x^2"})));
}

TEST_CASE("lift_through solves a composed-factor equation") {
    Ring r = make_ring(5, {"x", "y"});
    FreeModule f0 = free_module({0});
    ModMatrix a(r, f0, free_module({1}), {parse_poly(r, "x")});
    ModMatrix b(r, f0, free_module({2}), {parse_poly(r, "x^2 + x*y")});
    ModMatrix lift = lift_through(a, b);
    CHECK(a.compose(lift) == b);
    ModMatrix outside(r, f0, free_module({1}), {parse_poly(r, "y")});
    CHECK_THROWS_AS(lift_through(a, outside), NotInImage);
}

TEST_CASE("bracket_power scales exponents without touching structure") {
    Ring r = make_ring(3, {"x", "y"});
    auto gens = polys(r, {"2*x + y", "x*y^2"});
    auto b1 = bracket_power(gens, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == parse_poly(r, "2*x^3 + y^3"));
    CHECK(b1[1] == parse_poly(r, "x^3*y^6"));
    auto b2 = bracket_power(gens, 2);
    CHECK(b2[0] == parse_poly(r, "2*x^9 + y^9"));
    CHECK(bracket_power(gens, 0) == gens);
}

TEST_CASE("elimination projects out the leading block") {
    // image of t -> (t^2, t^3): the cuspidal relation u^3 = v^2
    Ring r = make_ring(7, {"t", "u", "v"});
    auto gens = polys(r, {"u - t^2", "v - t^3"});
    auto [er, egens] = elimination_ideal(r, gens, 1);
    CHECK(er->nvars() == 2);
    REQUIRE(egens.size() == 1);
    CHECK(egens[0] == parse_poly(er, "u^3 - v^2"));
    // eliminating t and u projects the curve onto the whole v-line
    auto [vr, vgens] = elimination_ideal(r, gens, 2);
    CHECK(vr->nvars() == 1);
    CHECK(vgens.empty());
}

TEST_CASE("krull_dimension from lead terms") {
    Ring r = make_ring(2, {"x0", "x1", "x2", "x3"});
    CHECK(krull_dimension(r, {}) == 4);
    CHECK(krull_dimension(r, polys(r, {"x0", "x1", "x2", "x3"})) == 0);
    CHECK(krull_dimension(r, polys(r, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"})) == 2);
    CHECK(krull_dimension(r, polys(r, {"1"})) == -1);
    Ring r3 = make_ring(5, {"x", "y", "z"});
    CHECK(krull_dimension(r3, {parse_poly(r3, "y^2*z - x^3 - z^3")}) == 2);
}

TEST_CASE("module normal forms respect position-over-term") {
    Ring r = make_ring(2, {"x", "y"});
    FreeModule amb = free_module({0, 1});
    // submodule generated by (x, y^2) and (0, x*y)
    std::vector<std::vector<Poly>> cols = {
        {parse_poly(r, "x"), parse_poly(r, "y^2")},
        {Poly::zero(r), parse_poly(r, "x*y")},
    };
    GBEngine eng(r, amb, cols, true);
    CHECK(eng.contains(cols[0]));
    CHECK(eng.contains({parse_poly(r, "x^2"), parse_poly(r, "x*y^2")}));
    std::vector<Poly> v = {parse_poly(r, "y"), Poly::zero(r)};
    CHECK_FALSE(eng.contains(v));
    auto n = eng.nf(v);
    CHECK(n.size() == 2);
    CHECK(eng.nf(n) == n);
}
