#include "hankel/identities.hpp"

#include <array>
#include <functional>
#include <map>

#include "hankel/rng.hpp"

namespace hankel {

namespace {

using Sides = std::vector<std::pair<Poly, Poly>>;

Poly V(const SymbolsPtr& S, const std::string& n) { return Poly::var(S, n); }
Poly C(const SymbolsPtr& S, long num, long den = 1) { return Poly::constant(S, rat(num, den)); }

struct PSyms {
    SymbolsPtr S;
    Poly p1, p2, p3, p4, alpha, u, one;

    explicit PSyms(SymbolsPtr syms)
        : S(std::move(syms)),
          p1(V(S, "p1")),
          p2(V(S, "p2")),
          p3(V(S, "p3")),
          p4(V(S, "p4")),
          alpha(V(S, "alpha")),
          u(C(S, 1) - V(S, "alpha")),
          one(C(S, 1)) {}

    Poly p(std::size_t k) const {
        switch (k) {
            case 1: return p1;
            case 2: return p2;
            case 3: return p3;
            case 4: return p4;
        }
        throw IndexOutOfRange("p index");
    }
};

// a_1..a_5 solved step by step from z f'(z) = f(z) (alpha + (1-alpha) p(z)):
// (k-1) a_k = (1-alpha) sum_{j=1}^{k-1} a_j p_{k-j}. Kept independent of the
// closed four-row system below, which it certifies.
std::array<Poly, 6> starlike_recurrence(const PSyms& s) {
    std::array<Poly, 6> a = {s.one, s.one, s.one, s.one, s.one, s.one};
    a[1] = s.one;
    for (std::size_t k = 2; k <= 5; ++k) {
        Poly sum = Poly::zero(s.S);
        for (std::size_t j = 1; j < k; ++j) sum += a[j] * s.p(k - j);
        a[k] = (s.u * sum).scale(rat(1, static_cast<long>(k - 1)));
    }
    return a;
}

// the displayed four-row system
std::array<Poly, 6> starlike_printed(const PSyms& s) {
    std::array<Poly, 6> a = {s.one, s.one, s.one, s.one, s.one, s.one};
    a[2] = s.u * s.p1;
    a[3] = (s.u * (s.u * s.p1.pow(2) + s.p2)).scale(rat(1, 2));
    a[4] = (s.u * (s.u.pow(2) * s.p1.pow(3) + C(s.S, 3) * s.u * s.p1 * s.p2 + C(s.S, 2) * s.p3))
               .scale(rat(1, 6));
    a[5] = (s.u * (s.u.pow(3) * s.p1.pow(4) + C(s.S, 6) * s.u.pow(2) * s.p1.pow(2) * s.p2 +
                   C(s.S, 8) * s.u * s.p1 * s.p3 + C(s.S, 3) * s.u * s.p2.pow(2) +
                   C(s.S, 6) * s.p4))
               .scale(rat(1, 24));
    return a;
}

std::array<Poly, 6> convex_map(const PSyms& s) {
    std::array<Poly, 6> b = starlike_recurrence(s);
    for (std::size_t k = 2; k <= 5; ++k) b[k] = b[k].scale(rat(1, static_cast<long>(k)));
    return b;
}

std::array<Poly, 6> bounded_turning_map(const PSyms& s) {
    std::array<Poly, 6> c = {s.one, s.one, s.one, s.one, s.one, s.one};
    for (std::size_t k = 1; k <= 4; ++k)
        c[k + 1] = (s.u * s.p(k)).scale(rat(1, static_cast<long>(k + 1)));
    return c;
}

// co-analytic part of the harmonic map: b_1 = 0, (k+1) b_{k+1} = k a_k with
// a_k the convex-map coefficients
std::array<Poly, 6> harmonic_g_map(const PSyms& s) {
    const std::array<Poly, 6> h = convex_map(s);
    std::array<Poly, 6> b = {s.one, Poly::zero(s.S), s.one, s.one, s.one, s.one};
    for (std::size_t k = 1; k <= 4; ++k)
        b[k + 1] = h[k].scale(rat(static_cast<long>(k), static_cast<long>(k + 1)));
    return b;
}

// cofactor expansion of H_{3,1} under the a_1 = 1 normalization
Poly h31_normalized(const std::array<Poly, 6>& a) {
    return -(a[2].pow(2) * a[5]) + C(a[2].symbols(), 2) * a[2] * a[3] * a[4] - a[3].pow(3) +
           a[3] * a[5] - a[4].pow(2);
}

// full 3x3 determinant, no normalization assumption (b_1 enters)
Poly h31_general(const std::array<Poly, 6>& b) {
    return b[1] * (b[3] * b[5] - b[4].pow(2)) - b[2] * (b[2] * b[5] - b[3] * b[4]) +
           b[3] * (b[2] * b[4] - b[3].pow(2));
}

Poly starlike_expansion_rhs(const PSyms& s) {
    const Poly body = -(s.u.pow(4) * s.p1.pow(6)) + C(s.S, 3) * s.u.pow(3) * s.p1.pow(4) * s.p2 +
                      C(s.S, 8) * s.u.pow(2) * s.p1.pow(3) * s.p3 -
                      C(s.S, 9) * s.u.pow(2) * s.p1.pow(2) * s.p2.pow(2) -
                      C(s.S, 18) * s.u * s.p1.pow(2) * s.p4 +
                      C(s.S, 24) * s.u * s.p1 * s.p2 * s.p3 - C(s.S, 9) * s.u * s.p2.pow(3) +
                      C(s.S, 18) * s.p2 * s.p4 - C(s.S, 16) * s.p3.pow(2);
    return (s.u.pow(2) * body).scale(rat(1, 144));
}

Poly starlike_decomposition_rhs(const PSyms& s) {
    const Poly B = s.p2 - s.u * s.p1.pow(2);
    const Poly body = s.u * B.pow(3) - C(s.S, 16) * (s.p3 - s.u * s.p1 * s.p2).pow(2) +
                      C(s.S, 8) * B * (s.p4 - s.u * s.p1 * s.p3) +
                      C(s.S, 10) * B * (s.p4 - s.u * s.p2.pow(2));
    return (s.u.pow(2) * body).scale(rat(1, 144));
}

Poly convex_expansion_rhs(const PSyms& s) {
    const Poly body = -(s.u.pow(4) * s.p1.pow(6)) + C(s.S, 6) * s.u.pow(3) * s.p1.pow(4) * s.p2 +
                      C(s.S, 12) * s.u.pow(2) * s.p1.pow(3) * s.p3 -
                      C(s.S, 21) * s.u.pow(2) * s.p1.pow(2) * s.p2.pow(2) -
                      C(s.S, 36) * s.u * s.p1.pow(2) * s.p4 +
                      C(s.S, 36) * s.u * s.p1 * s.p2 * s.p3 - C(s.S, 4) * s.u * s.p2.pow(3) +
                      C(s.S, 72) * s.p2 * s.p4 - C(s.S, 60) * s.p3.pow(2);
    return (s.u.pow(2) * body).scale(rat(1, 8640));
}

Poly convex_decomposition_i_rhs(const PSyms& s) {
    const Poly Bh = s.p2 - s.u.scale(rat(1, 2)) * s.p1.pow(2);
    const Poly B = s.p2 - s.u * s.p1.pow(2);
    const Poly body =
        C(s.S, 8) * s.u * Bh.pow(3) + C(s.S, 24) * s.p4 * B +
        C(s.S, 36) * s.p2 * (s.p4 - s.u * s.p2.pow(2)) +
        C(s.S, 12) * B * (s.p4 - s.u * s.p1 * s.p3) -
        C(s.S, 60) * s.p3 * (s.p3 - s.u.scale(rat(4, 5)) * s.p1 * s.p2) +
        C(s.S, 24) * s.u * s.p2.pow(2) * (s.p2 - s.u.scale(rat(3, 8)) * s.p1.pow(2));
    return (s.u.pow(2) * body).scale(rat(1, 8640));
}

Poly convex_decomposition_ii_rhs(const PSyms& s, bool include_spurious_term) {
    const Poly Bh = s.p2 - s.u.scale(rat(1, 2)) * s.p1.pow(2);
    Poly body = C(s.S, 8) * s.u * Bh.pow(3) -
                C(s.S, 60) * (s.p3 - s.u.scale(rat(1, 2)) * s.p1 * s.p2).pow(2) +
                C(s.S, 48) * Bh * (s.p4 - s.u.scale(rat(1, 2)) * s.p1 * s.p3) +
                C(s.S, 24) * Bh * (s.p4 - s.u.scale(rat(1, 2)) * s.p2.pow(2));
    if (include_spurious_term) body -= C(s.S, 15) * s.u.pow(2) * s.p1.pow(2) * s.p2.pow(2);
    return (s.u.pow(2) * body).scale(rat(1, 8640));
}

Poly bt_expansion_rhs(const PSyms& s) {
    const Poly body = s.u * (-C(s.S, 108) * s.p1.pow(2) * s.p4 +
                             C(s.S, 180) * s.p1 * s.p2 * s.p3 - C(s.S, 80) * s.p2.pow(3)) +
                      C(s.S, 144) * s.p2 * s.p4 - C(s.S, 135) * s.p3.pow(2);
    return (s.u.pow(2) * body).scale(rat(1, 2160));
}

Poly bt_decomposition_rhs(const PSyms& s) {
    const Poly one_minus_4a = s.one - C(s.S, 4) * s.alpha;
    const Poly one_plus_8a = s.one + C(s.S, 8) * s.alpha;
    const Poly body = C(s.S, 108) * s.u * s.p4 * (s.p2 - s.p1.pow(2)) +
                      C(s.S, 80) * s.u * s.p2 * (s.p4 - s.p2.pow(2)) -
                      C(s.S, 135) * s.p3 * (s.p3 - s.p1 * s.p2) -
                      C(s.S, 45) * one_minus_4a * s.p2 * (s.p4 - s.p1 * s.p3) +
                      one_plus_8a * s.p2 * s.p4;
    return (s.u.pow(2) * body).scale(rat(1, 2160));
}

Poly starlike_j3_rhs(const PSyms& s) {
    const Poly body = -C(s.S, 5) * s.u.pow(3) * s.p1.pow(4) -
                      C(s.S, 6) * s.u.pow(2) * s.p1.pow(2) * s.p2 - C(s.S, 3) * s.u * s.p2.pow(2) +
                      C(s.S, 8) * s.u * s.p1 * s.p3 + C(s.S, 6) * s.p4;
    return (s.u * body).scale(rat(1, 24));
}

Poly starlike_j3_decomposition_rhs(const PSyms& s) {
    const Poly B = s.p2 - s.u * s.p1.pow(2);
    const Poly body = -C(s.S, 5) * s.u * B.pow(2) +
                      C(s.S, 8) * s.u * s.p1 * (s.p3 - s.u * s.p1 * s.p2) +
                      C(s.S, 8) * s.u * s.p2 * B + C(s.S, 6) * (s.p4 - s.u * s.p2.pow(2));
    return (s.u * body).scale(rat(1, 24));
}

Poly convex_j3_rhs(const PSyms& s) {
    const Poly body = -C(s.S, 7) * s.u.pow(3) * s.p1.pow(4) -
                      C(s.S, 2) * s.u.pow(2) * s.p1.pow(2) * s.p2 - s.u * s.p2.pow(2) +
                      C(s.S, 24) * s.u * s.p1 * s.p3 + C(s.S, 18) * s.p4;
    return (s.u * body).scale(rat(1, 360));
}

Poly convex_j3_decomposition_rhs(const PSyms& s) {
    const Poly D = s.p2 - s.u.scale(rat(2, 3)) * s.p1.pow(2);
    const Poly body = (s.u * D.pow(2)).scale(rat(-63, 4)) +
                      C(s.S, 24) * s.u * s.p1 * (s.p3 - s.u.scale(rat(2, 3)) * s.p1 * s.p2) +
                      (s.u * s.p2 * D).scale(rat(21, 2)) + (s.u * s.p2.pow(2)).scale(rat(17, 4)) +
                      C(s.S, 18) * s.p4;
    return (s.u * body).scale(rat(1, 360));
}

// printed co-analytic coefficient list of the harmonic map
std::array<Poly, 6> harmonic_g_printed(const PSyms& s) {
    std::array<Poly, 6> b = {s.one, Poly::zero(s.S), s.one, s.one, s.one, s.one};
    b[2] = C(s.S, 1, 2);
    b[3] = (s.u * s.p1).scale(rat(1, 3));
    b[4] = (s.u.pow(2) * s.p1.pow(2) + s.u * s.p2).scale(rat(1, 8));
    b[5] = (s.u.pow(3) * s.p1.pow(3) + C(s.S, 3) * s.u.pow(2) * s.p1 * s.p2 +
            C(s.S, 2) * s.u * s.p3)
               .scale(rat(1, 30));
    return b;
}

Poly harmonic_g_expansion_rhs(const PSyms& s) {
    const Poly body =
        -C(s.S, 2) * s.u.pow(2) * s.p1.pow(3) - C(s.S, 9) * (s.p3 - s.u * s.p1 * s.p2);
    return (s.u * body).scale(rat(1, 540));
}

Poly harmonic_g_decomposition_rhs(const PSyms& s) {
    const Poly body = C(s.S, 3) * s.u * s.p1 * (s.p2 - s.u.scale(rat(2, 3)) * s.p1.pow(2)) -
                      C(s.S, 9) * (s.p3 - s.u.scale(rat(2, 3)) * s.p1 * s.p2);
    return (s.u * body).scale(rat(1, 540));
}

// ---- (p1, x, z) substitution -------------------------------------------

struct XSyms : PSyms {
    Poly x, xbar, z;

    explicit XSyms(SymbolsPtr syms)
        : PSyms(syms), x(V(S, "x")), xbar(V(S, "xbar")), z(V(S, "z")) {}
};

Poly substitute_witness(const XSyms& s, Poly poly_in_p) {
    const Poly A = C(s.S, 4) - s.p1.pow(2);
    const Poly p2_sub = (s.p1.pow(2) + A * s.x).scale(rat(1, 2));
    const Poly p3_sub = (s.p1.pow(3) + C(s.S, 2) * s.p1 * A * s.x - s.p1 * A * s.x.pow(2) +
                         C(s.S, 2) * A * (s.one - s.x * s.xbar) * s.z)
                            .scale(rat(1, 4));
    return poly_in_p.substitute("p2", p2_sub).substitute("p3", p3_sub);
}

Poly harmonic_g_substitution_rhs(const XSyms& s, bool corrected) {
    const Poly A = C(s.S, 4) - s.p1.pow(2);
    const Poly tail = C(s.S, 9) * A * (s.p1 * s.x.pow(2) -
                                       C(s.S, 2) * (s.one - s.x * s.xbar) * s.z);
    Poly head;
    if (corrected) {
        head = (-C(s.S, 8) * s.alpha.pow(2) - C(s.S, 2) * s.alpha + s.one) * s.p1.pow(3) -
               C(s.S, 18) * s.alpha * s.p1 * A * s.x;
    } else {
        head = (-C(s.S, 8) * s.alpha.pow(2) + C(s.S, 16) * s.alpha + s.one) * s.p1.pow(3);
    }
    return (s.u * (head + tail)).scale(rat(1, 2160));
}

// ---- registry -------------------------------------------------------------

struct Entry {
    std::string name;
    std::string note;
    bool erratum;
    std::function<Sides()> build;
};

SymbolsPtr p_universe() {
    static SymbolsPtr S = make_symbols({"p1", "p2", "p3", "p4", "alpha"});
    return S;
}

SymbolsPtr x_universe() {
    static SymbolsPtr S = make_symbols({"p1", "p2", "p3", "p4", "alpha", "x", "xbar", "z"});
    return S;
}

SymbolsPtr a_universe() {
    static SymbolsPtr S = make_symbols({"a2", "a3", "a4", "a5"});
    return S;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> r;
        const auto add = [&r](std::string name, std::string note, bool erratum,
                              std::function<Sides()> build) {
            r.push_back(Entry{std::move(name), std::move(note), erratum, std::move(build)});
        };

        add("hankel_h31_expanded_form",
            "3x3 Hankel determinant with a1=1 equals its cofactor expansion", false, [] {
                const SymbolsPtr S = a_universe();
                const Poly one = C(S, 1);
                const Poly a2 = V(S, "a2"), a3 = V(S, "a3"), a4 = V(S, "a4"), a5 = V(S, "a5");
                const Poly det = one * (a3 * a5 - a4.pow(2)) - a2 * (a2 * a5 - a3 * a4) +
                                 a3 * (a2 * a4 - a3.pow(2));
                const Poly expanded = -(a2.pow(2) * a5) + C(S, 2) * a2 * a3 * a4 - a3.pow(3) +
                                      a3 * a5 - a4.pow(2);
                return Sides{{det, expanded}};
            });

        add("starlike_coefficient_system",
            "a2..a5 solved from the defining subordination match the closed four-row system",
            false, [] {
                const PSyms s(p_universe());
                const auto lhs = starlike_recurrence(s);
                const auto rhs = starlike_printed(s);
                Sides sides;
                for (std::size_t k = 2; k <= 5; ++k) sides.emplace_back(lhs[k], rhs[k]);
                return sides;
            });

        add("starlike_h31_expansion",
            "H31 composed from the starlike map equals the 1/144-prefactor expansion", false, [] {
                const PSyms s(p_universe());
                return Sides{{h31_normalized(starlike_recurrence(s)), starlike_expansion_rhs(s)}};
            });

        add("starlike_h31_decomposition",
            "starlike expansion equals its four-bracket decomposition", false, [] {
                const PSyms s(p_universe());
                return Sides{{starlike_expansion_rhs(s), starlike_decomposition_rhs(s)}};
            });

        add("convex_h31_expansion",
            "H31 with b_k = a_k/k equals the 1/8640-prefactor expansion; certifies the "
            "b_k = a_k/k reading of the Alexander relation",
            false, [] {
                const PSyms s(p_universe());
                return Sides{{h31_normalized(convex_map(s)), convex_expansion_rhs(s)}};
            });

        add("convex_h31_decomposition_i", "convex expansion equals the six-bracket decomposition",
            false, [] {
                const PSyms s(p_universe());
                return Sides{{convex_expansion_rhs(s), convex_decomposition_i_rhs(s)}};
            });

        add("convex_h31_decomposition_ii",
            "convex expansion equals the second decomposition once the duplicated "
            "p1^2 p2^2 term is dropped",
            false, [] {
                const PSyms s(p_universe());
                return Sides{{convex_expansion_rhs(s), convex_decomposition_ii_rhs(s, false)}};
            });

        add("convex_h31_decomposition_ii_erratum",
            "second decomposition verbatim; off by exactly (1/576)(1-alpha)^4 p1^2 p2^2", true,
            [] {
                const PSyms s(p_universe());
                return Sides{{convex_expansion_rhs(s), convex_decomposition_ii_rhs(s, true)}};
            });

        add("bounded_turning_h31_expansion",
            "H31 composed from the bounded-turning map equals the 1/2160-prefactor expansion",
            false, [] {
                const PSyms s(p_universe());
                return Sides{{h31_normalized(bounded_turning_map(s)), bt_expansion_rhs(s)}};
            });

        add("bounded_turning_h31_decomposition",
            "bounded-turning expansion equals its five-bracket decomposition", false, [] {
                const PSyms s(p_universe());
                return Sides{{bt_expansion_rhs(s), bt_decomposition_rhs(s)}};
            });

        add("starlike_j3_expansion",
            "printed expansion equals a5 - a3^2, the negated Zalcman functional", false, [] {
                const PSyms s(p_universe());
                const auto a = starlike_recurrence(s);
                return Sides{{a[5] - a[3].pow(2), starlike_j3_rhs(s)}};
            });

        add("starlike_j3_decomposition", "starlike J3 expansion equals its decomposition", false,
            [] {
                const PSyms s(p_universe());
                return Sides{{starlike_j3_rhs(s), starlike_j3_decomposition_rhs(s)}};
            });

        add("convex_j3_expansion",
            "printed expansion equals b5 - b3^2, the negated Zalcman functional", false, [] {
                const PSyms s(p_universe());
                const auto b = convex_map(s);
                return Sides{{b[5] - b[3].pow(2), convex_j3_rhs(s)}};
            });

        add("convex_j3_decomposition", "convex J3 expansion equals its decomposition", false, [] {
            const PSyms s(p_universe());
            return Sides{{convex_j3_rhs(s), convex_j3_decomposition_rhs(s)}};
        });

        add("bounded_turning_j2_expansion", "J2 on the bounded-turning map, direct sign", false,
            [] {
                const PSyms s(p_universe());
                const auto c = bounded_turning_map(s);
                const Poly rhs = (s.u.pow(2) * s.p1.pow(2)).scale(rat(1, 4)) -
                                 (s.u * s.p2).scale(rat(1, 3));
                return Sides{{c[2].pow(2) - c[3], rhs}};
            });

        add("bounded_turning_j3_expansion", "J3 on the bounded-turning map, direct sign", false,
            [] {
                const PSyms s(p_universe());
                const auto c = bounded_turning_map(s);
                const Poly rhs = (s.u.pow(2) * s.p2.pow(2)).scale(rat(1, 9)) -
                                 (s.u * s.p4).scale(rat(1, 5));
                return Sides{{c[3].pow(2) - c[5], rhs}};
            });

        add("harmonic_g_coefficient_list",
            "co-analytic b2..b5 of the harmonic map match the displayed list", false, [] {
                const PSyms s(p_universe());
                const auto lhs = harmonic_g_map(s);
                const auto rhs = harmonic_g_printed(s);
                Sides sides;
                for (std::size_t k = 2; k <= 5; ++k) sides.emplace_back(lhs[k], rhs[k]);
                return sides;
            });

        add("harmonic_g_h31_expansion",
            "H31 of the co-analytic part equals the 1/540-prefactor form", false, [] {
                const PSyms s(p_universe());
                return Sides{{h31_general(harmonic_g_map(s)), harmonic_g_expansion_rhs(s)}};
            });

        add("harmonic_g_h31_decomposition",
            "co-analytic H31 expansion equals its two-bracket decomposition", false, [] {
                const PSyms s(p_universe());
                return Sides{{harmonic_g_expansion_rhs(s), harmonic_g_decomposition_rhs(s)}};
            });

        add("harmonic_g_h31_substitution",
            "(p1,x,z)-parametrized co-analytic H31; corrected p1^3 coefficient "
            "(1 - 2 alpha - 8 alpha^2) and restored -18 alpha p1 (4-p1^2) x term",
            false, [] {
                const XSyms s(x_universe());
                const Poly lhs = substitute_witness(s, h31_general(harmonic_g_map(s)));
                return Sides{{lhs, harmonic_g_substitution_rhs(s, true)}};
            });

        add("harmonic_g_h31_substitution_erratum",
            "verbatim (p1,x,z) form; drops the x-linear term, off by "
            "(alpha^2-alpha)(p1^3 + 4 p1 x - p1^3 x)/120",
            true, [] {
                const XSyms s(x_universe());
                const Poly lhs = substitute_witness(s, h31_general(harmonic_g_map(s)));
                return Sides{{lhs, harmonic_g_substitution_rhs(s, false)}};
            });

        return r;
    }();
    return entries;
}

IdentityReport build_report(const Entry& e) {
    IdentityReport rep;
    rep.name = e.name;
    rep.note = e.note;
    rep.erratum = e.erratum;
    rep.sides = e.build();
    rep.holds = true;
    for (const auto& [lhs, rhs] : rep.sides) {
        rep.residuals.push_back(lhs - rhs);
        if (!rep.residuals.back().is_zero()) rep.holds = false;
    }
    return rep;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const Entry& e : registry()) n.push_back(e.name);
        return n;
    }();
    return names;
}

IdentityReport verify_identity(const std::string& name) {
    for (const Entry& e : registry())
        if (e.name == name) return build_report(e);
    throw Error("unknown identity: " + name);
}

std::vector<IdentityReport> verify_all_identities() {
    std::vector<IdentityReport> out;
    for (const Entry& e : registry()) out.push_back(build_report(e));
    return out;
}

bool cross_check_at_random_points(const IdentityReport& report, int points, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < points; ++t) {
        for (std::size_t i = 0; i < report.sides.size(); ++i) {
            const auto& [lhs, rhs] = report.sides[i];
            const std::size_t arity = lhs.symbols()->size();
            std::vector<Rational> pt;
            pt.reserve(arity);
            for (std::size_t k = 0; k < arity; ++k) {
                const long num = static_cast<long>(rng.bits() % 19) - 9;
                const long den = 1 + static_cast<long>(rng.bits() % 8);
                pt.push_back(rat(num, den));
            }
            const Rational diff = lhs.eval(pt) - rhs.eval(pt);
            if (diff != report.residuals[i].eval(pt)) return false;
        }
    }
    return true;
}

}  // namespace hankel
