#include "weylsym/symfun.hpp"

#include "weylsym/weyl.hpp"

namespace weylsym {

std::optional<int> SigmaPoly::pure_weight() const {
    if (is_zero()) return 0;
    std::optional<int> w;
    for (const auto& [g, c] : poly().terms()) {
        int wt = 0;
        for (int h = 0; h < k(); ++h) wt += (h + 1) * g[h];
        if (w && *w != wt) return std::nullopt;
        w = wt;
    }
    return w;
}

namespace {

SigmaPoly to_sigma_impl(int k, const std::vector<Poly>& elementary, Poly f) {
    SigmaPoly out(k);
    while (!f.is_zero()) {
        auto [lam, c] = f.lex_leading();
        Exponents gamma(k, 0);
        for (int h = 0; h < k; ++h) {
            int next = (h + 1 < k) ? lam[h + 1] : 0;
            if (lam[h] < next)
                throw NotSymmetricError(
                    "lex-leading exponent is not weakly decreasing");
            gamma[h] = lam[h] - next;
        }
        Poly mono = Poly::constant(z_alphabet(k), c);
        for (int h = 0; h < k; ++h)
            if (gamma[h] > 0) mono = mono * elementary[h + 1].pow(gamma[h]);
        f -= mono;
        out += SigmaPoly(Poly::monomial(sigma_alphabet(k), gamma, c));
    }
    return out;
}

}  // namespace

SymContext::SymContext(int kk)
    : k(kk), delta(vandermonde_delta(kk)), delta_sq(delta * delta) {
    if (k < 1) throw ContractError("k must be positive");
    elementary.reserve(k + 1);
    for (int h = 0; h <= k; ++h) elementary.push_back(elementary_symmetric(k, h));
}

bool is_symmetric_poly(const Poly& f) {
    int k = f.k();
    for (int i = 1; i < k; ++i) {
        auto tau = Permutation::transposition(k, i, i + 1);
        if (!(f.permute_vars(tau.images) == f)) return false;
    }
    return true;
}

bool is_antisymmetric_poly(const Poly& f) {
    int k = f.k();
    for (int i = 1; i < k; ++i) {
        auto tau = Permutation::transposition(k, i, i + 1);
        if (!(f.permute_vars(tau.images) == -f)) return false;
    }
    return true;
}

Poly realize(const SymContext& ctx, const SigmaPoly& g) {
    Poly out(z_alphabet(ctx.k));
    for (const auto& [gamma, c] : g.poly().terms()) {
        Poly mono = Poly::constant(z_alphabet(ctx.k), c);
        for (int h = 0; h < ctx.k; ++h)
            if (gamma[h] > 0) mono = mono * ctx.elementary[h + 1].pow(gamma[h]);
        out += mono;
    }
    return out;
}

SigmaPoly to_sigma(const SymContext& ctx, const Poly& f) {
    if (f.alphabet().kind != VarKind::Z || f.k() != ctx.k)
        throw ContractError("to_sigma: expected a z-polynomial over the same k");
    if (!is_symmetric_poly(f))
        throw NotSymmetricError("to_sigma: input is not symmetric");
    return to_sigma_impl(ctx.k, ctx.elementary, f);
}

SigmaPoly antisym_factor(const SymContext& ctx, const Poly& f) {
    if (f.alphabet().kind != VarKind::Z || f.k() != ctx.k)
        throw ContractError("antisym_factor: expected a z-polynomial over the same k");
    if (!is_antisymmetric_poly(f))
        throw NotAntisymmetricError("antisym_factor: input is not antisymmetric");
    if (f.is_zero()) return SigmaPoly(ctx.k);
    return to_sigma(ctx, f.exact_div(ctx.delta));
}

SigmaPoly m_poly(const SymContext& ctx, int d) {
    if (d < -ctx.k + 1)
        throw ContractError("m_poly: d below the defined range [-k+1, +inf)");
    if (d < 0) return SigmaPoly(ctx.k);
    std::vector<SigmaPoly> m;
    m.reserve(d + 1);
    m.push_back(SigmaPoly::constant(ctx.k, 1));
    for (int i = 1; i <= d; ++i) {
        SigmaPoly acc(ctx.k);
        for (int h = 1; h <= ctx.k && h <= i + ctx.k - 1; ++h) {
            if (i - h < 0) continue;  // hole values vanish
            Rational sgn = (h % 2 == 1) ? 1 : -1;
            acc += SigmaPoly::variable(ctx.k, h) * m[i - h] * sgn;
        }
        m.push_back(acc);
    }
    return m[d];
}

SigmaPoly newton_in_sigma(const SymContext& ctx, int p) {
    if (p < 0) throw ContractError("newton_in_sigma: p must be nonnegative");
    if (p == 0) return SigmaPoly::constant(ctx.k, ctx.k);
    Poly np(z_alphabet(ctx.k));
    for (int j = 1; j <= ctx.k; ++j) {
        Exponents e(ctx.k, 0);
        e[j - 1] = p;
        np.add_term(e, 1);
    }
    return to_sigma(ctx, np);
}

SigmaPoly sigma1_on(const SymContext& ctx, const SigmaPoly& g) {
    SigmaPoly out(ctx.k);
    for (int h = 0; h < ctx.k; ++h)
        out += SigmaPoly::variable(ctx.k, h) * g.partial(h + 1) *
               Rational(ctx.k - h);
    return out;
}

DivisionLemmaResult division_lemma(const SymContext& ctx, int d) {
    if (ctx.k < 2) throw ContractError("division_lemma: k >= 2 required");
    if (d < 0) throw ContractError("division_lemma: d >= 0 required");
    VarAlphabet za = z_alphabet(ctx.k);
    std::vector<Poly> roots;
    for (int h = 1; h < ctx.k; ++h) roots.push_back(Poly::variable(za, h));
    ZetaPoly pik = ZetaPoly::from_roots(za, roots);
    ZetaPoly num = ZetaPoly::constant(Poly::constant(za, 1)).shifted(d + ctx.k - 1);
    auto [quot, rem] = num.divmod(pik);
    Poly at_zk = quot.eval(Poly::variable(za, ctx.k));
    bool check = rem.degree() <= ctx.k - 2 &&
                 at_zk == realize(ctx, m_poly(ctx, d));
    return {quot, rem, check};
}

}  // namespace weylsym
