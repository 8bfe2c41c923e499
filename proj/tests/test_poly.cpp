#include <doctest.h>

#include "hankel/poly.hpp"
#include "hankel/rng.hpp"

using namespace hankel;

namespace {

SymbolsPtr syms() {
    static SymbolsPtr s = make_symbols({"p1", "p2", "x"});
    return s;
}

Poly random_poly(Rng& rng, const SymbolsPtr& s) {
    Poly out = Poly::zero(s);
    const int terms = 1 + static_cast<int>(rng.bits() % 4);
    for (int t = 0; t < terms; ++t) {
        Poly mono = Poly::constant(s, rat(static_cast<long>(rng.bits() % 13) - 6,
                                          1 + static_cast<long>(rng.bits() % 4)));
        for (std::size_t i = 0; i < s->size(); ++i) {
            const unsigned e = static_cast<unsigned>(rng.bits() % 3);
            if (e) mono *= Poly::var(s, s->name(i), e);
        }
        out += mono;
    }
    return out;
}

std::vector<Rational> random_point(Rng& rng, std::size_t arity) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < arity; ++i)
        pt.push_back(rat(static_cast<long>(rng.bits() % 15) - 7,
                         1 + static_cast<long>(rng.bits() % 5)));
    return pt;
}

}  // namespace

TEST_CASE("product of sum and difference") {
    const auto s = syms();
    const Poly p1 = Poly::var(s, "p1"), p2 = Poly::var(s, "p2");
    CHECK((p1 + p2) * (p1 - p2) == p1.pow(2) - p2.pow(2));
}

TEST_CASE("scaling by a rational") {
    const auto s = syms();
    const Poly scaled = Poly::var(s, "p1").pow(2).scale(rat(1, 144));
    CHECK(scaled.term_count() == 1);
    CHECK(scaled.eval({rat(12), rat(0), rat(0)}) == 1);
}

TEST_CASE("witness substitution expands to the hand-computed quartic") {
    const auto s = syms();
    const Poly p1 = Poly::var(s, "p1"), p2 = Poly::var(s, "p2"), x = Poly::var(s, "x");
    const Poly sub = (p1.pow(2) + (Poly::constant(s, 4) - p1.pow(2)) * x).scale(rat(1, 2));
    const Poly got = p2.pow(2).substitute("p2", sub);

    // [p1^2 + (4 - p1^2) x]^2 / 4, expanded by hand
    const Poly expected = p1.pow(4).scale(rat(1, 4)) + (p1.pow(2) * x).scale(rat(2)) -
                          (p1.pow(4) * x).scale(rat(1, 2)) + x.pow(2).scale(rat(4)) -
                          (p1.pow(2) * x.pow(2)).scale(rat(2)) +
                          (p1.pow(4) * x.pow(2)).scale(rat(1, 4));
    CHECK(got == expected);
}

TEST_CASE("substituting a symbol that does not occur is a no-op") {
    const auto s = syms();
    const Poly f = Poly::var(s, "p1").pow(3).scale(rat(5, 7));
    CHECK(f.substitute("x", Poly::var(s, "p2")) == f);
}

TEST_CASE("zero coefficients are pruned") {
    const auto s = syms();
    const Poly p1 = Poly::var(s, "p1");
    CHECK((p1 - p1).is_zero());
    CHECK((p1 - p1).term_count() == 0);
    CHECK((p1 * Poly::zero(s)).is_zero());
    CHECK(p1.scale(0).is_zero());
}

TEST_CASE("mixed universes are rejected") {
    const auto a = make_symbols({"u", "v"});
    const auto b = make_symbols({"u", "w"});
    CHECK_THROWS_AS(Poly::var(a, "u") + Poly::var(b, "u"), SymbolMismatch);
    CHECK_THROWS_AS(Poly::var(a, "q"), SymbolMismatch);
}

TEST_CASE("identical universes behind different pointers are accepted") {
    const auto a = make_symbols({"u", "v"});
    const auto b = make_symbols({"u", "v"});
    CHECK(Poly::var(a, "u") + Poly::var(b, "u") == Poly::var(a, "u").scale(rat(2)));
}

TEST_CASE("string form lists canonical terms") {
    const auto s = syms();
    const Poly f =
        Poly::var(s, "p1").pow(2).scale(rat(-1, 576)) + Poly::constant(s, rat(3));
    CHECK(f.str() == "3 - 1/576*p1^2");
}

TEST_CASE("ring operations agree with exact evaluation") {
    Rng rng(20240811);
    const auto s = syms();
    for (int trial = 0; trial < 60; ++trial) {
        const Poly f = random_poly(rng, s), g = random_poly(rng, s), h = random_poly(rng, s);
        const auto pt = random_point(rng, s->size());
        CHECK((f * g + h).eval(pt) == f.eval(pt) * g.eval(pt) + h.eval(pt));
        CHECK((f * g) == (g * f));
        CHECK(((f + g) * h) == (f * h + g * h));
        CHECK(f.pow(3).eval(pt) == f.eval(pt) * f.eval(pt) * f.eval(pt));
    }
}

TEST_CASE("substitution commutes with evaluation") {
    Rng rng(7);
    const auto s = syms();
    for (int trial = 0; trial < 40; ++trial) {
        const Poly f = random_poly(rng, s), g = random_poly(rng, s);
        auto pt = random_point(rng, s->size());
        const Poly composed = f.substitute("p2", g);
        auto pt_sub = pt;
        pt_sub[s->index("p2")] = g.eval(pt);
        CHECK(composed.eval(pt) == f.eval(pt_sub));
    }
}
