#include <doctest.h>

#include <algorithm>
#include <vector>

#include "weylsym/poly.hpp"
#include "weylsym/rng.hpp"
#include "weylsym/zeta_poly.hpp"

using namespace weylsym;

namespace {

Poly zvar(int k, int i) { return Poly::variable(z_alphabet(k), i); }
Poly zconst(int k, long c) { return Poly::constant(z_alphabet(k), Rational(c)); }

// Independent oracle for δ_k: the determinant expansion Σ_τ sgn(τ) ∏_i
// z_i^{τ(i)-1}... realized as the Leibniz sum over permutations of the
// exponent pattern (k-1, k-2, ..., 0).  The production path multiplies
// binomials instead.
Poly delta_by_determinant(int k) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Poly acc(z_alphabet(k));
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] < perm[j]) ++inversions;
        Exponents e(k);
        for (int i = 0; i < k; ++i) e[i] = k - 1 - perm[i];
        acc.add_term(e, (inversions % 2 == 0) ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Poly random_poly(Rng& rng, int k, int max_deg, int parts) {
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

TEST_CASE("monomial products") {
    int k = 2;
    CHECK(zvar(k, 1) * zvar(k, 1) ==
          Poly::monomial(z_alphabet(k), {2, 0}, 1));
    Poly d = zvar(k, 1) - zvar(k, 2);
    Poly sq = d * d;
    Poly expect = Poly::parse(z_alphabet(k), "z1^2 - 2*z1*z2 + z2^2");
    CHECK(sq == expect);
}

TEST_CASE("vandermonde square matches the determinant oracle") {
    for (int k = 2; k <= 4; ++k) {
        Poly delta = vandermonde_delta(k);
        CHECK(delta == delta_by_determinant(k));
        Poly square = delta * delta;
        CHECK(square == delta_by_determinant(k) * delta_by_determinant(k));
        int deg;
        CHECK(square.is_homogeneous(&deg));
        CHECK(deg == k * (k - 1));
    }
}

TEST_CASE("exact division") {
    int k = 2;
    Poly num = zvar(k, 1) * zvar(k, 1) - zvar(k, 2) * zvar(k, 2);
    Poly den = zvar(k, 1) - zvar(k, 2);
    CHECK(num.exact_div(den) == zvar(k, 1) + zvar(k, 2));
    for (int kk = 2; kk <= 4; ++kk) {
        Poly d = vandermonde_delta(kk);
        CHECK(d.exact_div(d) == Poly::constant(z_alphabet(kk), 1));
    }
    Poly cubes = zvar(k, 1).pow(3) - zvar(k, 2).pow(3);
    Poly q = cubes.exact_div(den);
    CHECK(q == Poly::parse(z_alphabet(k), "z1^2 + z1*z2 + z2^2"));
    CHECK(q * den == cubes);
}

TEST_CASE("division failure carries a remainder witness") {
    int k = 2;
    Poly num = zvar(k, 1) * zvar(k, 1) + zconst(k, 1);
    Poly den = zvar(k, 1) - zvar(k, 2);
    CHECK_THROWS_AS((void)num.exact_div(den), NotDivisibleError);
    try {
        (void)num.exact_div(den);
    } catch (const NotDivisibleError& e) {
        CHECK(!e.remainder.empty());
        CHECK(e.remainder != "0");
    }
    CHECK(!num.try_exact_div(den).has_value());
}

TEST_CASE("partial derivatives") {
    int k = 2;
    CHECK((zvar(k, 1) * zvar(k, 1)).partial(1) == zconst(k, 2) * zvar(k, 1));
    CHECK(zvar(k, 1).partial(2).is_zero());
    CHECK(vandermonde_delta(2).partial(1) == zconst(2, 1));
    CHECK_THROWS_AS((void)zvar(k, 1).partial(3), ContractError);
    CHECK_THROWS_AS((void)(zvar(2, 1) + Poly::variable(z_alphabet(3), 1)),
                    ContractError);
}

TEST_CASE("ring axioms on randomized triples") {
    Rng rng(20240811);
    for (int k = 1; k <= 4; ++k) {
        for (int t = 0; t < 10; ++t) {
            Poly a = random_poly(rng, k, 4, 3);
            Poly b = random_poly(rng, k, 4, 3);
            Poly c = random_poly(rng, k, 4, 3);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("mul then exact_div round-trips") {
    Rng rng(7);
    for (int k = 1; k <= 3; ++k) {
        for (int t = 0; t < 10; ++t) {
            Poly p = random_poly(rng, k, 3, 3);
            Poly q = random_poly(rng, k, 3, 3);
            if (q.is_zero()) continue;
            CHECK((p * q).exact_div(q) == p);
        }
    }
}

TEST_CASE("residue at infinity: defining cases") {
    int k = 2;
    VarAlphabet za = z_alphabet(k);
    // num = 1, den = ζ
    CHECK(residue_at_infinity(ZetaPoly::constant(zconst(k, 1)),
                              ZetaPoly::zeta(za)) == zconst(k, 1));
    // polynomial has no residue
    CHECK(residue_at_infinity(ZetaPoly::zeta(za).shifted(2),
                              ZetaPoly::constant(zconst(k, 1)))
              .is_zero());
    // logarithmic derivative: residue of ζP'(ζ)/P(ζ) is N_1
    ZetaPoly p = ZetaPoly::from_roots(za, {zvar(k, 1), zvar(k, 2)});
    ZetaPoly num = p.derivative().shifted(1);
    CHECK(residue_at_infinity(num, p) == zvar(k, 1) + zvar(k, 2));
}

TEST_CASE("residue requires a monic denominator") {
    int k = 2;
    VarAlphabet za = z_alphabet(k);
    ZetaPoly den = ZetaPoly::zeta(za) * zconst(k, 2);
    CHECK_THROWS_AS(
        (void)residue_at_infinity(ZetaPoly::constant(zconst(k, 1)), den),
        NonMonicDenominatorError);
}

TEST_CASE("residue is linear and kills total derivatives") {
    Rng rng(99);
    int k = 2;
    VarAlphabet za = z_alphabet(k);
    ZetaPoly den = ZetaPoly::from_roots(za, {zvar(k, 1), zvar(k, 2)});
    for (int t = 0; t < 8; ++t) {
        auto rnd_zeta = [&](int deg) {
            ZetaPoly z(za);
            for (int i = 0; i <= deg; ++i)
                z = z + ZetaPoly::constant(random_poly(rng, k, 2, 2)).shifted(i);
            return z;
        };
        ZetaPoly n1 = rnd_zeta(3), n2 = rnd_zeta(3);
        Poly r1 = residue_at_infinity(n1, den);
        Poly r2 = residue_at_infinity(n2, den);
        CHECK(residue_at_infinity(n1 + n2, den) == r1 + r2);
        // residue of (g/den)' = 0: numerator g'·den − g·den' over den²
        ZetaPoly g = rnd_zeta(2);
        ZetaPoly numerator = g.derivative() * den - g * den.derivative();
        CHECK(residue_at_infinity(numerator, den * den).is_zero());
    }
}

TEST_CASE("canonical serialization round-trips") {
    int k = 3;
    Rng rng(3);
    for (int t = 0; t < 12; ++t) {
        Poly p = random_poly(rng, k, 4, 4);
        Poly back = Poly::parse(z_alphabet(k), p.to_string());
        CHECK(back == p);
        CHECK(back.to_string() == p.to_string());
    }
    CHECK(Poly::zero(z_alphabet(k)).to_string() == "0");
    CHECK(Poly::parse(z_alphabet(k), "0").is_zero());
    Poly d2 = vandermonde_delta(2);
    CHECK(d2.to_string() == "z1 - z2");
    Poly third = Poly::monomial(z_alphabet(2), {2, 1}, make_rational(-2, 3));
    CHECK(third.to_string() == "-2/3*z1^2*z2");
    CHECK(Poly::parse(z_alphabet(2), "-2/3*z1^2*z2") == third);
}

TEST_CASE("graded-lex order is the iteration order") {
    Poly p = Poly::parse(z_alphabet(2), "z1 + z2^2 + 3");
    std::vector<Exponents> seen;
    for (const auto& [e, c] : p.terms()) seen.push_back(e);
    CHECK(seen == std::vector<Exponents>{{0, 2}, {1, 0}, {0, 0}});
    CHECK(p.to_string() == "z2^2 + z1 + 3");
}

TEST_CASE("elementary and complete homogeneous generators") {
    CHECK(elementary_symmetric(3, 1) ==
          Poly::parse(z_alphabet(3), "z1 + z2 + z3"));
    CHECK(elementary_symmetric(3, 3) == Poly::parse(z_alphabet(3), "z1*z2*z3"));
    CHECK(elementary_symmetric(3, 0) == zconst(3, 1));
    CHECK(complete_homogeneous(2, 2) ==
          Poly::parse(z_alphabet(2), "z1^2 + z1*z2 + z2^2"));
    CHECK(int(complete_homogeneous(3, 4).term_count()) == 15);
}
