#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "srpow/ideal.hpp"

using namespace srpow;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal make(const AmbientContext& amb, std::vector<std::vector<int>> exps) {
    std::vector<Monomial> gens;
    for (auto& e : exps) gens.push_back(mono(std::move(e)));
    return MonomialIdeal::minimalize(amb, std::move(gens));
}

// All monomials in n variables of total degree <= max_degree.
std::vector<Monomial> monomials_up_to(int n, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(Monomial(e));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
        e[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, max_degree);
    return out;
}

MonomialIdeal random_ideal(std::mt19937& rng, const AmbientContext& amb) {
    const int count = 1 + static_cast<int>(rng() % 5);
    std::vector<Monomial> gens;
    for (int k = 0; k < count; ++k) {
        std::vector<int> e(static_cast<std::size_t>(amb.n), 0);
        int deg = 0;
        for (int i = 0; i < amb.n; ++i) {
            e[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 4);
            deg += e[static_cast<std::size_t>(i)];
        }
        if (deg == 0) e[0] = 1;
        gens.push_back(mono(e));
    }
    return MonomialIdeal::minimalize(amb, std::move(gens));
}

} // namespace

TEST_CASE("ambient context validation") {
    CHECK_THROWS_AS(AmbientContext(2), std::invalid_argument);
    CHECK_THROWS_AS(AmbientContext(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(AmbientContext(4, -3), std::invalid_argument);
    CHECK_NOTHROW(AmbientContext(3));
    CHECK_NOTHROW(AmbientContext(5, 2));
    CHECK_NOTHROW(AmbientContext(5, 101));
}

TEST_CASE("monomial basics") {
    const Monomial a = mono({1, 0, 1, 0});
    const Monomial b = mono({1, 0, 1, 1});
    CHECK(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK(a.degree() == 2);
    CHECK((a * b).exponents() == std::vector<int>{2, 0, 2, 1});
    CHECK(a.lcm(mono({0, 2, 1, 0})).exponents() == std::vector<int>{1, 2, 1, 0});
    CHECK(mono({0, 3, 0}).squarefree_part() == mono({0, 1, 0}));
    CHECK(a.to_string() == "x1*x3");
    CHECK(Monomial::one(4).to_string() == "1");
    CHECK_THROWS_AS(mono({1, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(a.divides(mono({1, 0, 1})), std::invalid_argument);
}

TEST_CASE("minimalize drops divisible generators") {
    const AmbientContext amb(4);
    const MonomialIdeal i1 = make(amb, {{1, 0, 1, 0}, {1, 0, 1, 1}});
    CHECK(i1.generators() == std::vector<Monomial>{mono({1, 0, 1, 0})});

    CHECK(make(amb, {}).is_zero());

    const MonomialIdeal i2 = make(amb, {{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}});
    CHECK(i2.generators() ==
          std::vector<Monomial>{mono({0, 1, 1, 0}), mono({1, 1, 0, 0})});

    CHECK_THROWS_AS(MonomialIdeal::minimalize(amb, {mono({1, 0, 1})}),
                    std::invalid_argument);
}

TEST_CASE("minimalize is idempotent") {
    std::mt19937 rng(7);
    const AmbientContext amb(4);
    for (int trial = 0; trial < 50; ++trial) {
        const MonomialIdeal i = random_ideal(rng, amb);
        std::vector<Monomial> gens = i.generators();
        CHECK(MonomialIdeal::minimalize(amb, gens) == i);
    }
}

TEST_CASE("contains: divisibility by some generator") {
    const AmbientContext amb(4);
    const MonomialIdeal i = make(amb, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK_FALSE(i.contains(mono({1, 1, 0, 0})));
    CHECK(i.contains(mono({1, 0, 1, 2})));
    CHECK(MonomialIdeal::unit(amb).contains(mono({0, 0, 0, 0})));
    CHECK(MonomialIdeal::unit(amb).contains(mono({3, 1, 0, 2})));
    CHECK_FALSE(MonomialIdeal::zero(amb).contains(mono({1, 1, 1, 1})));
}

TEST_CASE("contains: K4 second symbolic power holds the full product") {
    // I_K4^(2) built from primes only: intersection of P_ij^2 over the six
    // edge complements of K4.
    const AmbientContext amb(4);
    MonomialIdeal i = MonomialIdeal::unit(amb);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            const VarMask rest = 0xFu & ~((1u << u) | (1u << v));
            i = i.intersect(prime_power(amb, rest, 2));
        }
    CHECK(i.contains(mono({1, 1, 1, 1})));
    // minimal generators: x1x2x3x4 and the four (2,2,2,0) patterns
    CHECK(i.generators().size() == 5);
    CHECK(i.generators().front() == mono({1, 1, 1, 1}));
}

TEST_CASE("intersect matches membership on both sides") {
    const AmbientContext amb(4);
    const MonomialIdeal left = make(amb, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    const MonomialIdeal right = make(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const MonomialIdeal both = left.intersect(right);
    CHECK(both == make(amb, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
    // brute-force membership comparison, all monomials of degree <= 2
    for (const Monomial& f : monomials_up_to(4, 2))
        CHECK(both.contains(f) == (left.contains(f) && right.contains(f)));
}

TEST_CASE("intersect: idempotence and unit identity") {
    std::mt19937 rng(11);
    const AmbientContext amb(4);
    for (int trial = 0; trial < 30; ++trial) {
        const MonomialIdeal i = random_ideal(rng, amb);
        CHECK(i.intersect(i) == i);
        CHECK(i.intersect(MonomialIdeal::unit(amb)) == i);
        CHECK(MonomialIdeal::unit(amb).intersect(i) == i);
    }
}

TEST_CASE("intersect membership property on random ideals") {
    std::mt19937 rng(13);
    const AmbientContext amb(3);
    const std::vector<Monomial> probes = monomials_up_to(3, 5);
    for (int trial = 0; trial < 25; ++trial) {
        const MonomialIdeal i = random_ideal(rng, amb);
        const MonomialIdeal j = random_ideal(rng, amb);
        const MonomialIdeal k = i.intersect(j);
        for (const Monomial& f : probes)
            CHECK(k.contains(f) == (i.contains(f) && j.contains(f)));
    }
}

TEST_CASE("power of the C4 ideal") {
    const AmbientContext amb(4);
    const MonomialIdeal i = make(amb, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    const MonomialIdeal sq = i.power(2);
    CHECK(sq == make(amb, {{2, 0, 2, 0}, {1, 1, 1, 1}, {0, 2, 0, 2}}));
    CHECK(i.power(1) == i);
    CHECK(i.power(0) == MonomialIdeal::unit(amb));
}

TEST_CASE("power scales the minimal generator degree") {
    const AmbientContext amb(4);
    // P4 ideal: non-edges of the path 1-2-3-4
    const MonomialIdeal i = make(amb, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}});
    CHECK(i.min_generator_degree() == 2);
    for (int m = 1; m <= 4; ++m)
        CHECK(i.power(m).min_generator_degree() == 2 * m);
}

TEST_CASE("product membership sanity") {
    std::mt19937 rng(17);
    const AmbientContext amb(3);
    for (int trial = 0; trial < 25; ++trial) {
        const MonomialIdeal i = random_ideal(rng, amb);
        const MonomialIdeal j = random_ideal(rng, amb);
        const MonomialIdeal prod = i.multiply(j);
        // every product of generators is a member
        for (const Monomial& a : i.generators())
            for (const Monomial& b : j.generators())
                CHECK(prod.contains(a * b));
    }
}

TEST_CASE("prime_power enumerates the right generators") {
    const AmbientContext amb(4);
    // variables {x3,x4}, m=2
    CHECK(prime_power(amb, 0b1100, 2) ==
          make(amb, {{0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}));
    CHECK(prime_power(amb, 0b0010, 3) == make(amb, {{0, 3, 0, 0}}));
    // P_12 in n=4
    CHECK(prime_power(amb, 0b1100, 1) == make(amb, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK_THROWS_AS(prime_power(amb, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(prime_power(amb, 0b0001, 0), std::invalid_argument);
}

TEST_CASE("radical clamps exponents and minimalizes") {
    const AmbientContext amb(4);
    const MonomialIdeal sq = make(amb, {{2, 0, 2, 0}, {1, 1, 1, 1}, {0, 2, 0, 2}});
    CHECK(sq.radical() == make(amb, {{1, 0, 1, 0}, {0, 1, 0, 1}}));

    const MonomialIdeal i = make(amb, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(i.radical() == i);
}

TEST_CASE("radical properties on random ideals") {
    std::mt19937 rng(19);
    const AmbientContext amb(3);
    const std::vector<Monomial> probes = monomials_up_to(3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const MonomialIdeal i = random_ideal(rng, amb);
        const MonomialIdeal rad = i.radical();
        CHECK(rad.radical() == rad);
        // f in radical iff some power of f lies in the ideal
        int max_deg = 0;
        for (const Monomial& g : i.generators()) max_deg = std::max(max_deg, g.degree());
        for (const Monomial& f : probes) {
            bool pow_in = false;
            Monomial fk = f;
            for (int k = 1; k <= max_deg && !pow_in; ++k) {
                if (i.contains(fk)) pow_in = true;
                fk = fk * f;
            }
            CHECK(rad.contains(f) == pow_in);
        }
    }
}

TEST_CASE("equality is structural on minimal generators") {
    const AmbientContext amb(4);
    const MonomialIdeal i = make(amb, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(i == i);
    const MonomialIdeal j = make(amb, {{0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}});
    CHECK(i == j); // same minimal set after absorption
    CHECK_FALSE(i == make(amb, {{1, 0, 1, 0}}));
}
