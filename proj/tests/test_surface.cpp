#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sheafbetti/errors.hpp"
#include "sheafbetti/surface.hpp"

using namespace sheafbetti;

namespace {

const Surface P2 = Surface::projective_plane();
const Surface F0 = Surface::hirzebruch(0);
const Surface F1 = Surface::hirzebruch(1);

oracle::Cls as_pair(const Surface& s, const DivisorClass& c) {
    return s.picard_rank() == 1 ? oracle::Cls{c.coords[0], 0} : oracle::Cls{c.coords[0], c.coords[1]};
}

DivisorClass random_class(const Surface& s, oracle::Gen& g, std::int64_t lo, std::int64_t hi) {
    if (s.picard_rank() == 1) return DivisorClass{g.uniform(lo, hi)};
    return DivisorClass{g.uniform(lo, hi), g.uniform(lo, hi)};
}

}  // namespace

TEST_CASE("surface construction and parsing") {
    CHECK(Surface::parse("p2") == P2);
    CHECK(Surface::parse("f0") == F0);
    CHECK(Surface::parse("f1") == F1);
    CHECK_THROWS_AS(Surface::parse("f2"), DomainError);
    CHECK_THROWS_AS(Surface::hirzebruch(2), DomainError);
    CHECK(P2.picard_rank() == 1);
    CHECK(F1.picard_rank() == 2);
    CHECK(F0.betti() == std::array<int, 3>{1, 2, 1});
    CHECK(DivisorClass::parse("2,5") == DivisorClass{2, 5});
    CHECK(DivisorClass::parse("-3") == DivisorClass{-3});
    CHECK_THROWS_AS(DivisorClass::parse("x"), DomainError);
}

TEST_CASE("intersect") {
    CHECK(intersect(P2, {2}, {3}) == 6);
    CHECK(intersect(F1, {1, 0}, {1, 0}) == -1);
    CHECK(intersect(F0, {1, 2}, {3, 1}) == 7);
    CHECK(intersect(F1, {0, 1}, {0, 1}) == 0);
    CHECK(intersect(F1, {1, 0}, {0, 1}) == 1);
    CHECK_THROWS_AS(intersect(P2, {1, 2}, {1}), DomainError);
    CHECK_THROWS_AS(intersect(F0, {1}, {1, 0}), DomainError);
}

TEST_CASE("canonical class") {
    CHECK(canonical_class(P2) == DivisorClass{-3});
    CHECK(-intersect(P2, canonical_class(P2), {5}) == 15);
    CHECK(canonical_class(F1) == DivisorClass{-2, -3});
    CHECK(canonical_class(F0) == DivisorClass{-2, -2});
    for (const auto& s : {F0, F1}) {
        CHECK(intersect(s, s.canonical(), {0, 1}) == -2);
        CHECK(arithmetic_genus(s, {0, 1}) == 0);
        CHECK(arithmetic_genus(s, {1, 0}) == 0);
    }
    CHECK(arithmetic_genus(P2, {1}) == 0);
}

TEST_CASE("euler characteristic and genus") {
    CHECK(euler_characteristic(P2, {0}) == 1);
    CHECK(euler_characteristic(F1, {1, 1}) == 3);
    for (std::int64_t d = 0; d <= 15; ++d) {
        CHECK(euler_characteristic(P2, {d}) == oracle::monomials_p2(d));
        CHECK(arithmetic_genus(P2, {d}) == (d - 1) * (d - 2) / 2);
    }
    CHECK(arithmetic_genus(P2, {4}) == 3);
    CHECK(arithmetic_genus(P2, {3}) == 1);
    CHECK(arithmetic_genus(F1, {0, 1}) == 0);
}

TEST_CASE("effectivity, primitivity, integral members") {
    CHECK_FALSE(is_effective(P2, {-1}));
    CHECK(is_effective(F1, {2, 0}));
    CHECK(is_effective(F0, {0, 1}));
    CHECK_FALSE(is_effective(F0, {1, -1}));

    auto pp = primitive_part(P2, {6});
    CHECK(pp.multiplicity == 6);
    CHECK(pp.primitive == DivisorClass{1});
    pp = primitive_part(F0, {2, 4});
    CHECK(pp.multiplicity == 2);
    CHECK(pp.primitive == DivisorClass{1, 2});
    CHECK(is_primitive(F1, {2, 5}));
    CHECK_THROWS_AS(primitive_part(P2, {0}), DomainError);

    CHECK(has_integral_member(P2, {5}));
    CHECK(has_integral_member(F1, {2, 3}));
    CHECK_FALSE(has_integral_member(F1, {0, 2}));
    CHECK(has_integral_member(F1, {0, 1}));
    CHECK(has_integral_member(F1, {1, 0}));
    CHECK_FALSE(has_integral_member(F1, {2, 1}));
    CHECK_FALSE(has_integral_member(F0, {2, 0}));
    CHECK(has_integral_member(F0, {2, 1}));
    CHECK_THROWS_AS(has_integral_member(P2, {-2}), DomainError);
    // every class on the a > 0, b > ae range, and every sigma + c f with c > e
    for (int e : {0, 1}) {
        const auto s = Surface::hirzebruch(e);
        for (std::int64_t a = 1; a <= 8; ++a)
            for (std::int64_t b = a * e + 1; b <= 12; ++b) CHECK(has_integral_member(s, {a, b}));
    }
}

TEST_CASE("sub_effective_classes") {
    CHECK(sub_effective_classes(P2, {3}) == std::vector<DivisorClass>{{1}, {2}, {3}});
    CHECK(sub_effective_classes(F0, {1, 1}) == std::vector<DivisorClass>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(sub_effective_classes(F1, {2, 1}) ==
          std::vector<DivisorClass>{{0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK_THROWS_AS(sub_effective_classes(P2, {-1}), DomainError);
}

TEST_CASE("K-negativity") {
    for (std::int64_t d = 1; d <= 20; ++d) CHECK(is_kx_negative(P2, {d}));
    CHECK(is_kx_negative(F1, {1, 0}));
    CHECK(intersect(F1, F1.canonical(), {1, 0}) == -1);
    for (const auto& s : {F0, F1})
        for (std::int64_t a = 0; a <= 6; ++a)
            for (std::int64_t b = 0; b <= 6; ++b)
                if (a + b > 0) CHECK(is_kx_negative(s, {a, b}));
}

TEST_CASE("property: bilinearity, symmetry, parity, Serre symmetry") {
    oracle::Gen g(20261019);
    for (const auto& s : {P2, F0, F1}) {
        const oracle::Lattice lat{s.picard_rank() == 1 ? -1 : s.e()};
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = random_class(s, g, -20, 20);
            const auto y = random_class(s, g, -20, 20);
            const auto z = random_class(s, g, -20, 20);
            CHECK(intersect(s, x + y, z) == intersect(s, x, z) + intersect(s, y, z));
            CHECK(intersect(s, x, y) == intersect(s, y, x));
            CHECK(intersect(s, x, y) == lat.dot(as_pair(s, x), as_pair(s, y)));
            const auto kx = intersect(s, s.canonical(), x);
            CHECK((self_intersection(s, x) + kx) % 2 == 0);
            CHECK(euler_characteristic(s, x) == euler_characteristic(s, s.canonical() - x));
        }
    }
}

TEST_CASE("property: sub_effective_classes closed under complement") {
    oracle::Gen g(7);
    for (const auto& s : {P2, F0, F1}) {
        for (int trial = 0; trial < 60; ++trial) {
            const auto l = random_class(s, g, 0, 7);
            if (l.is_zero()) continue;
            const auto subs = sub_effective_classes(s, l);
            CHECK(std::is_sorted(subs.begin(), subs.end()));
            for (const auto& p : subs) {
                CHECK(is_effective(s, p));
                CHECK(is_effective(s, l - p));
                if (p == l) continue;
                CHECK(std::find(subs.begin(), subs.end(), l - p) != subs.end());
            }
        }
    }
}
