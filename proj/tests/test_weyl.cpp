#include <doctest.h>

#include "weylsym/rng.hpp"
#include "weylsym/weyl.hpp"

using namespace weylsym;

namespace {

WeylElement mono(int k, Exponents a, Exponents b, long c = 1) {
    return WeylElement::monomial(k, std::move(a), std::move(b), Rational(c));
}

WeylElement random_op(Rng& rng, int k, int max_z, int max_d, int parts,
                      bool allow_denom = false) {
    WeylElement acc(k);
    for (int t = 0; t < parts; ++t) {
        Exponents a(k, 0), b(k, 0);
        int za = int(rng.range(0, max_z)), zb = int(rng.range(0, max_d));
        for (int i = 0; i < za; ++i) ++a[rng.range(0, k - 1)];
        for (int i = 0; i < zb; ++i) ++b[rng.range(0, k - 1)];
        acc += mono(k, a, b, rng.coeff().get_num().get_si());
    }
    if (allow_denom && rng.range(0, 1))
        return WeylElement::localized(1, acc);
    return acc;
}

Poly random_zpoly(Rng& rng, int k, int max_deg, int parts) {
    Poly p(z_alphabet(k));
    for (int t = 0; t < parts; ++t) {
        Exponents e(k, 0);
        int d = int(rng.range(0, max_deg));
        for (int i = 0; i < d; ++i) ++e[rng.range(0, k - 1)];
        p.add_term(e, rng.coeff());
    }
    return p;
}

}  // namespace

TEST_CASE("canonical commutation") {
    int k = 1;
    WeylElement d = mono(k, {0}, {1});
    WeylElement z = mono(k, {1}, {0});
    CHECK(d * z == mono(k, {1}, {1}) + WeylElement::one(k));
    CHECK(commutator(d, z) == WeylElement::one(k));
}

TEST_CASE("repeated Leibniz exchange: D^3 z^2") {
    int k = 1;
    WeylElement lhs = mono(k, {0}, {3}) * mono(k, {2}, {0});
    WeylElement want =
        mono(k, {2}, {3}) + mono(k, {1}, {2}, 6) + mono(k, {0}, {1}, 6);
    CHECK(lhs == want);
}

TEST_CASE("derivative past a delta denominator") {
    int k = 2;
    WeylElement d1 = mono(k, {0, 0}, {1, 0});
    WeylElement inv_delta = WeylElement::localized(1, WeylElement::one(k));
    WeylElement got = d1 * inv_delta;
    // ∂₁ δ^{-1} = δ^{-1}∂₁ − δ^{-2}  (∂₁δ = 1 at k = 2)
    WeylElement want = WeylElement::localized(
        2, WeylElement::from_poly(delta_of(k)) * d1 - WeylElement::one(k));
    CHECK(got == want);
    CHECK(got.denom_power() == 2);
}

TEST_CASE("localized square: D2 = delta^-1 (Dz2 - Dz1) at k=2") {
    int k = 2;
    WeylElement g = mono(k, {0, 0}, {0, 1}) - mono(k, {0, 0}, {1, 0});
    WeylElement d2 = WeylElement::localized(1, g);
    // hand-computed: D2² = δ^{-2}(∂₂−∂₁)² + 2δ^{-3}(∂₂−∂₁)
    WeylElement delta_mult = WeylElement::from_poly(delta_of(k));
    WeylElement want = WeylElement::localized(
        3, delta_mult * (g * g) + g * Rational(2));
    CHECK(d2 * d2 == want);
}

TEST_CASE("apply") {
    SUBCASE("sigma_1 kills delta") {
        for (int k = 2; k <= 4; ++k) {
            WeylElement s1(k);
            for (int j = 1; j <= k; ++j) {
                Exponents b(k, 0);
                b[j - 1] = 1;
                s1 += mono(k, Exponents(k, 0), b);
            }
            CHECK(s1.apply(delta_of(k)).num.is_zero());
        }
    }
    SUBCASE("Euler operator scales by the degree") {
        int k = 3;
        WeylElement euler(k);
        for (int j = 1; j <= k; ++j) {
            Exponents a(k, 0), b(k, 0);
            a[j - 1] = b[j - 1] = 1;
            euler += mono(k, a, b);
        }
        LocalizedPoly r = euler.apply(delta_of(k));
        CHECK(r.denom_power == 0);
        CHECK(r.num == delta_of(k) * Rational(3));
    }
    SUBCASE("vanishing partial") {
        int k = 2;
        CHECK(mono(k, {0, 0}, {1, 0})
                  .apply(Poly::variable(z_alphabet(k), 2))
                  .num.is_zero());
    }
}

TEST_CASE("permute") {
    int k = 2;
    WeylElement e = mono(k, {1, 0}, {0, 1});
    Permutation swap = Permutation::transposition(k, 1, 2);
    CHECK(e.permute(swap) == mono(k, {0, 1}, {1, 0}));
    CHECK(e.permute(Permutation::identity(k)) == e);
    WeylElement dm = WeylElement::from_poly(delta_of(k));
    CHECK(dm.permute(swap) == -dm);
    // δ^{-m} prefix contributes sign(τ)^m
    WeylElement loc = WeylElement::localized(
        1, WeylElement::from_poly(delta_of(k) * delta_of(k)));
    CHECK(loc.permute(swap) == -loc);
}

TEST_CASE("symmetrize") {
    SUBCASE("S(z1) = (k-1)! N_1 at k = 3") {
        int k = 3;
        WeylElement got = mono(k, {1, 0, 0}, {0, 0, 0}).symmetrize();
        WeylElement want =
            (mono(k, {1, 0, 0}, {0, 0, 0}) + mono(k, {0, 1, 0}, {0, 0, 0}) +
             mono(k, {0, 0, 1}, {0, 0, 0})) *
            Rational(2);
        CHECK(got == want);
    }
    SUBCASE("S(1) = k!") {
        for (int k = 1; k <= 4; ++k)
            CHECK(WeylElement::one(k).symmetrize() ==
                  WeylElement::one(k) * Rational(factorial(k)));
    }
    SUBCASE("two-element orbit") {
        int k = 2;
        CHECK(mono(k, {1, 0}, {0, 1}).symmetrize() ==
              mono(k, {1, 0}, {0, 1}) + mono(k, {0, 1}, {1, 0}));
    }
    SUBCASE("localized input rejected") {
        int k = 2;
        WeylElement loc = WeylElement::localized(1, WeylElement::one(k));
        CHECK_THROWS_AS((void)loc.symmetrize(), ContractError);
    }
}

TEST_CASE("classify") {
    int k = 2;
    WeylElement n2 = mono(k, {2, 0}, {0, 0}) + mono(k, {0, 2}, {0, 0});
    CHECK(n2.classify() == Symmetry::Symmetric);
    CHECK(WeylElement::from_poly(delta_of(k)).classify() ==
          Symmetry::Antisymmetric);
    CHECK(mono(k, {1, 0}, {0, 0}).classify() == Symmetry::Neither);
}

TEST_CASE("kronecker bracket at k = 4") {
    int k = 4;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            Exponents a(k, 0), b(k, 0);
            b[i - 1] = 1;
            a[j - 1] = 1;
            WeylElement c =
                commutator(mono(k, Exponents(k, 0), b), mono(k, a, Exponents(k, 0)));
            if (i == j)
                CHECK(c == WeylElement::one(k));
            else
                CHECK(c.is_zero());
        }
}

TEST_CASE("randomized algebra laws") {
    Rng rng(20250601);
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t < 6; ++t) {
            WeylElement a = random_op(rng, k, 2, 2, 2, true);
            WeylElement b = random_op(rng, k, 2, 2, 2);
            WeylElement c = random_op(rng, k, 2, 2, 2, true);
            CHECK((a * b) * c == a * (b * c));
            // application is a module action (b stays in W1 so that b(f)
            // is an honest polynomial)
            Poly f = random_zpoly(rng, k, 3, 3);
            LocalizedPoly inner = b.apply(f);
            REQUIRE(inner.denom_power == 0);
            CHECK((a * b).apply(f) == a.apply(inner.num));
        }
    }
}

TEST_CASE("permute is multiplicative") {
    Rng rng(4242);
    int k = 3;
    Permutation tau;
    tau.images = {2, 3, 1};
    for (int t = 0; t < 6; ++t) {
        WeylElement a = random_op(rng, k, 2, 2, 2);
        WeylElement b = random_op(rng, k, 2, 2, 2);
        CHECK((a * b).permute(tau) == a.permute(tau) * b.permute(tau));
    }
}

TEST_CASE("pure weight is additive under products") {
    int k = 2;
    WeylElement a = mono(k, {2, 0}, {0, 1}).symmetrize();  // weight 1
    WeylElement b = mono(k, {0, 0}, {1, 0}).symmetrize();  // weight -1
    auto wa = a.pure_weight(), wb = b.pure_weight();
    REQUIRE(wa.has_value());
    REQUIRE(wb.has_value());
    WeylElement ab = a * b;
    REQUIRE(!ab.is_zero());
    auto wab = ab.pure_weight();
    REQUIRE(wab.has_value());
    CHECK(*wab == *wa + *wb);
}

TEST_CASE("order is additive under products") {
    Rng rng(11);
    int k = 2;
    for (int t = 0; t < 8; ++t) {
        WeylElement a = random_op(rng, k, 2, 2, 2);
        WeylElement b = random_op(rng, k, 2, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).order() == a.order() + b.order());
    }
}

TEST_CASE("symmetrization symmetrizes") {
    Rng rng(500);
    for (int k = 2; k <= 4; ++k)
        for (int t = 0; t < 4; ++t)
            CHECK(random_op(rng, k, 2, 2, 2).symmetrize().classify() ==
                  Symmetry::Symmetric);
}

TEST_CASE("weyl serialization round-trips") {
    int k = 2;
    WeylElement e = mono(k, {1, 0}, {0, 1}, 3) - mono(k, {0, 0}, {2, 0});
    CHECK(e.to_string() == "-Dz1^2 + 3*z1*Dz2");
    CHECK(WeylElement::parse(k, e.to_string()) == e);
    WeylElement loc = WeylElement::localized(
        1, WeylElement::from_poly(delta_of(k)) * mono(k, {0, 0}, {1, 0}) -
               WeylElement::one(k));
    CHECK(WeylElement::parse(k, loc.to_string()) == loc);
    CHECK(WeylElement::parse(k, loc.to_string()).to_string() ==
          loc.to_string());
    CHECK(WeylElement::zero(k).to_string() == "0");
    Rng rng(777);
    for (int t = 0; t < 8; ++t) {
        WeylElement r = random_op(rng, k, 2, 2, 3, true);
        CHECK(WeylElement::parse(k, r.to_string()) == r);
    }
}
