#include <doctest.h>

#include "weylsym/rng.hpp"
#include "weylsym/symfun.hpp"

using namespace weylsym;

namespace {

SigmaPoly sp(int k, const char* text) { return SigmaPoly::parse(k, text); }

}  // namespace

TEST_CASE("to_sigma basics") {
    SymContext c2(2), c3(3);
    Poly f = Poly::parse(z_alphabet(2), "z1^2 + z2^2");
    CHECK(to_sigma(c2, f) == sp(2, "s1^2 - 2*s2"));
    CHECK(to_sigma(c3, Poly::parse(z_alphabet(3), "z1*z2*z3")) == sp(3, "s3"));
    CHECK(realize(c2, sp(2, "s1^2 - 2*s2")) == f);
}

TEST_CASE("discriminant in sigma at k = 2 is s1^2 - 4 s2") {
    SymContext c2(2);
    CHECK(to_sigma(c2, c2.delta_sq) == sp(2, "s1^2 - 4*s2"));
}

TEST_CASE("delta^2 at k = 3 rewrites and realizes back") {
    SymContext c3(3);
    SigmaPoly d3 = to_sigma(c3, c3.delta_sq);
    CHECK(d3.pure_weight() == 6);
    CHECK(realize(c3, d3) == c3.delta_sq);
}

TEST_CASE("to_sigma rejects asymmetric input") {
    SymContext c2(2);
    CHECK_THROWS_AS((void)to_sigma(c2, Poly::variable(z_alphabet(2), 1)),
                    NotSymmetricError);
}

TEST_CASE("antisym_factor") {
    SymContext c2(2);
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        CHECK(antisym_factor(c, c.delta) == SigmaPoly::constant(k, 1));
    }
    CHECK(antisym_factor(c2, Poly::parse(z_alphabet(2), "z1^2 - z2^2")) ==
          sp(2, "s1"));
    CHECK(antisym_factor(c2, Poly::parse(z_alphabet(2), "z1^3 - z2^3")) ==
          sp(2, "s1^2 - s2"));
    CHECK_THROWS_AS(
        (void)antisym_factor(c2, Poly::parse(z_alphabet(2), "z1 + z2")),
        NotAntisymmetricError);
}

TEST_CASE("m_poly values and range") {
    SymContext c2(2), c3(3);
    CHECK(m_poly(c2, 0) == SigmaPoly::constant(2, 1));
    CHECK(m_poly(c2, 1) == sp(2, "s1"));
    CHECK(m_poly(c2, -1).is_zero());
    CHECK(m_poly(c3, -2).is_zero());
    CHECK(m_poly(c2, 2) == sp(2, "s1^2 - s2"));
    CHECK(m_poly(c3, 2) == sp(3, "s1^2 - s2"));
    CHECK_THROWS_AS((void)m_poly(c2, -2), ContractError);
}

TEST_CASE("newton_in_sigma") {
    SymContext c3(3);
    CHECK(newton_in_sigma(c3, 0) == SigmaPoly::constant(3, 3));
    CHECK(newton_in_sigma(c3, 1) == sp(3, "s1"));
    CHECK(newton_in_sigma(c3, 2) == sp(3, "s1^2 - 2*s2"));
}

TEST_CASE("round trip on randomized symmetric polynomials") {
    Rng rng(614);
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        for (int t = 0; t < 6; ++t) {
            Poly g(sigma_alphabet(k));
            for (int i = 0; i < 3; ++i) {
                Exponents e(k, 0);
                for (int h = 0; h < k; ++h) e[h] = int(rng.range(0, 2));
                g.add_term(e, rng.coeff());
            }
            Poly f = realize(c, SigmaPoly(g));
            CHECK(realize(c, to_sigma(c, f)) == f);
        }
    }
}

TEST_CASE("division lemma") {
    SymContext c2(2), c3(3);
    SUBCASE("k=2, d=1: z^2 = (z + z1)(z - z1) + z1^2") {
        auto r = division_lemma(c2, 1);
        CHECK(r.check);
        CHECK(r.quotient.eval(Poly::variable(z_alphabet(2), 2)) ==
              Poly::parse(z_alphabet(2), "z1 + z2"));
        CHECK(r.remainder.degree() <= 0);
    }
    SUBCASE("k=2, d=0") {
        auto r = division_lemma(c2, 0);
        CHECK(r.check);
        CHECK(r.quotient.eval(Poly::variable(z_alphabet(2), 2)) ==
              Poly::constant(z_alphabet(2), 1));
    }
    SUBCASE("k=3, d=2: Q_2(z_3) = M_2 realized") {
        auto r = division_lemma(c3, 2);
        CHECK(r.check);
        CHECK(r.quotient.eval(Poly::variable(z_alphabet(3), 3)) ==
              realize(c3, sp(3, "s1^2 - s2")));
    }
    SUBCASE("d sweep") {
        for (int k = 2; k <= 4; ++k) {
            SymContext c(k);
            for (int d = 0; d <= 5; ++d) CHECK(division_lemma(c, d).check);
        }
    }
}

TEST_CASE("partials of Newton sums give M polynomials") {
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        for (int h = 1; h <= k; ++h)
            for (int p = 1; p <= 8; ++p) {
                if (p - h < -k + 1) continue;
                SigmaPoly lhs = newton_in_sigma(c, p).partial(h);
                SigmaPoly rhs =
                    m_poly(c, p - h) * Rational((h % 2 == 1) ? p : -p);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("sigma1 action lowers M polynomials") {
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        for (int d = 1; d <= 8; ++d)
            CHECK(sigma1_on(c, m_poly(c, d)) ==
                  m_poly(c, d - 1) * Rational(d + k - 1));
    }
}

TEST_CASE("M_d equals the complete homogeneous oracle") {
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        for (int d = 0; d <= 8; ++d)
            CHECK(m_poly(c, d) == to_sigma(c, complete_homogeneous(k, d)));
    }
}

TEST_CASE("Newton-Girard beyond k") {
    for (int k = 2; k <= 4; ++k) {
        SymContext c(k);
        for (int p = k + 1; p <= k + 4; ++p) {
            SigmaPoly acc = newton_in_sigma(c, p);
            for (int h = 1; h <= k; ++h) {
                SigmaPoly t =
                    SigmaPoly::variable(k, h) * newton_in_sigma(c, p - h);
                acc += (h % 2 == 1) ? -t : t;
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("M_d is monic of degree d in s1") {
    for (int k = 2; k <= 3; ++k) {
        SymContext c(k);
        for (int d = 0; d <= 6; ++d) {
            SigmaPoly m = m_poly(c, d);
            Exponents top(k, 0);
            top[0] = d;
            CHECK(m.poly().coeff(top) == Rational(1));
            CHECK(m.pure_weight() == d);
        }
    }
}
