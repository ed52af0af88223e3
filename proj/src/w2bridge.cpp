#include "weylsym/w2bridge.hpp"

#include <algorithm>
#include <sstream>

#include "weylsym/detail/normal_order.hpp"
#include "weylsym/detail/serialize.hpp"

namespace weylsym {

namespace {

Exponents unit(int k, int j, int e = 1) {
    Exponents v(k, 0);
    v[j - 1] = e;
    return v;
}

// all β with |β| ≤ bound, ascending graded-lex
std::vector<Exponents> indices_up_to(int k, int bound) {
    std::vector<Exponents> out;
    for (int d = 0; d <= bound; ++d) {
        Poly basis = complete_homogeneous(k, d);
        for (const auto& [e, c] : basis.terms()) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

bool leq_componentwise(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

W2Element W2Element::one(int k) {
    return monomial(k, Exponents(k, 0), Exponents(k, 0), 1);
}

W2Element W2Element::monomial(int k, Exponents gamma, Exponents beta,
                              const Rational& c) {
    if (int(gamma.size()) != k || int(beta.size()) != k)
        throw ContractError("exponent length != k");
    W2Element e(k);
    if (c != 0) e.terms_.emplace(OpMonomial{std::move(gamma), std::move(beta)}, c);
    return e;
}

W2Element W2Element::d_var(int k, int h) {
    return monomial(k, Exponents(k, 0), unit(k, h), 1);
}

W2Element W2Element::from_sigma(const SigmaPoly& g) {
    W2Element e(g.k());
    Exponents none(g.k(), 0);
    for (const auto& [gamma, c] : g.poly().terms())
        e.terms_.emplace(OpMonomial{gamma, none}, c);
    return e;
}

int W2Element::order() const {
    int o = -1;
    for (const auto& [m, c] : terms_) o = std::max(o, total_degree(m.d));
    return o;
}

SigmaPoly W2Element::coeff_of(const Exponents& beta) const {
    Poly p(sigma_alphabet(k_));
    for (const auto& [m, c] : terms_)
        if (m.d == beta) p.add_term(m.z, c);
    return SigmaPoly(p);
}

std::vector<Exponents> W2Element::d_supports() const {
    std::vector<Exponents> out;
    for (const auto& [m, c] : terms_)
        if (std::find(out.begin(), out.end(), m.d) == out.end())
            out.push_back(m.d);
    return out;
}

void W2Element::add_term(const OpMonomial& m, const Rational& c) {
    detail::op_add_term(terms_, m, c);
}

W2Element W2Element::operator-() const {
    W2Element r(k_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

W2Element operator+(const W2Element& a, const W2Element& b) {
    if (a.k_ != b.k_) throw ContractError("k mismatch");
    W2Element r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

W2Element operator-(const W2Element& a, const W2Element& b) { return a + (-b); }

W2Element operator*(const W2Element& a, const W2Element& b) {
    if (a.k_ != b.k_) throw ContractError("k mismatch");
    W2Element r(a.k_);
    detail::normal_product_into(r.terms_, a.terms_, b.terms_, a.k_);
    return r;
}

W2Element operator*(const W2Element& a, const Rational& c) {
    W2Element r(a.k_);
    if (c == 0) return r;
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, cc * c);
    return r;
}

SigmaPoly W2Element::apply(const SigmaPoly& g) const {
    if (g.k() != k_) throw ContractError("k mismatch");
    Poly acc(sigma_alphabet(k_));
    for (const auto& [m, c] : terms_) {
        Poly t = g.poly();
        for (int i = 0; i < k_ && !t.is_zero(); ++i)
            for (int r = 0; r < m.d[i]; ++r) t = t.partial(i + 1);
        if (t.is_zero()) continue;
        acc += Poly::monomial(sigma_alphabet(k_), m.z, c) * t;
    }
    return SigmaPoly(acc);
}

W2Element W2Element::parity_flip() const {
    W2Element r(k_);
    for (const auto& [m, c] : terms_) {
        int flips = 0;
        for (int h = 0; h < k_; ++h) flips += m.d[h] * h;
        r.terms_.emplace(m, (flips % 2 == 0) ? c : -c);
    }
    return r;
}

std::string W2Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = detail::monomial_string(sigma_alphabet(k_), m.z);
        std::string dmono;
        for (int i = 0; i < k_; ++i) {
            if (m.d[i] == 0) continue;
            if (!dmono.empty()) dmono += "*";
            dmono += detail::power_string("Ds" + std::to_string(i + 1), m.d[i]);
        }
        if (!dmono.empty()) mono = mono.empty() ? dmono : mono + "*" + dmono;
        detail::render_term(out, c, mono, first);
        first = false;
    }
    return out.str();
}

std::string TwistedElement::to_string() const {
    std::string s = "(" + g.to_string() + ")";
    if (m > 0) s += " * Delta^-" + std::to_string(m);
    return s + " * delta";
}

TwistedElement make_twisted(const OperatorCatalog& cat, SigmaPoly g, int m) {
    if (m < 0) throw ContractError("negative Delta power");
    if (g.is_zero()) return {SigmaPoly::zero(cat.k()), 0};
    while (m > 0) {
        auto q = g.try_exact_div(cat.Delta());
        if (!q) break;
        g = std::move(*q);
        --m;
    }
    return {std::move(g), m};
}

W2Element pushforward(const OperatorCatalog& cat, const WeylElement& P) {
    const SymContext& ctx = cat.ctx();
    int k = cat.k();
    if (P.denom_power() != 0)
        throw ContractError("pushforward: operand must lie in W1");
    if (P.classify() != Symmetry::Symmetric)
        throw NotSymmetricError("pushforward: operand is not symmetric");
    int m = std::max(P.order(), 0);
    std::vector<Exponents> betas = indices_up_to(k, m);
    std::vector<SigmaPoly> coeffs;
    coeffs.reserve(betas.size());
    W2Element q(k);
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        const Exponents& beta = betas[bi];
        SigmaPoly smono(
            Poly::monomial(sigma_alphabet(k), beta, 1));
        SigmaPoly g = to_sigma(ctx, P.apply(realize(ctx, smono)).num);
        for (std::size_t pi = 0; pi < bi; ++pi) {
            const Exponents& prev = betas[pi];
            if (!leq_componentwise(prev, beta)) continue;
            if (coeffs[pi].is_zero()) continue;
            Integer ff = 1;
            Exponents diff(k);
            for (int i = 0; i < k; ++i) {
                ff *= falling_factorial(beta[i], prev[i]);
                diff[i] = beta[i] - prev[i];
            }
            g -= coeffs[pi] *
                 SigmaPoly(Poly::monomial(sigma_alphabet(k), diff, Rational(ff)));
        }
        Integer bf = 1;
        for (int i = 0; i < k; ++i) bf *= factorial(beta[i]);
        SigmaPoly c = g * make_rational(Integer(1), bf);
        coeffs.push_back(c);
        for (const auto& [gamma, cc] : c.poly().terms())
            q.add_term(OpMonomial{gamma, beta}, cc);
    }
    // runtime certificate: the reconstructed operator must act like P on
    // random σ-monomials beyond the triangular construction set
    Rng rng(0x5eed0001ULL + std::uint64_t(k));
    for (int t = 0; t < 10; ++t) {
        Exponents gamma(k, 0);
        for (int i = 0; i < k; ++i) gamma[i] = int(rng.range(0, 2));
        SigmaPoly smono(Poly::monomial(sigma_alphabet(k), gamma, 1));
        SigmaPoly lhs = to_sigma(ctx, P.apply(realize(ctx, smono)).num);
        if (!(lhs == q.apply(smono)))
            throw VerificationFailedError(
                "pushforward: re-application check failed on s^" +
                smono.to_string());
    }
    return q;
}

WeylElement pullback(const OperatorCatalog& cat, const W2Element& Q) {
    const SymContext& ctx = cat.ctx();
    int k = cat.k();
    // D_h = δ^{-1}·Σ_j (−1)^{h−1}(−1)^{j−1} z_j^{k−h} ϑ(j) ∂_{z_j},
    // using δ = (−1)^{j−1} P'(z_j) ϑ(j)
    std::vector<WeylElement> dh;
    dh.reserve(k);
    std::vector<Poly> pprime, theta;
    {
        std::vector<Poly> roots;
        for (int j = 1; j <= k; ++j)
            roots.push_back(Poly::variable(z_alphabet(k), j));
        ZetaPoly pz = ZetaPoly::from_roots(z_alphabet(k), roots);
        ZetaPoly pd = pz.derivative();
        for (int j = 1; j <= k; ++j) {
            pprime.push_back(pd.eval(Poly::variable(z_alphabet(k), j)));
            Poly num = (j % 2 == 1) ? ctx.delta : -ctx.delta;
            theta.push_back(num.exact_div(pprime.back()));
        }
    }
    for (int h = 1; h <= k; ++h) {
        WeylElement num(k);
        for (int j = 1; j <= k; ++j) {
            Poly coeff = Poly::monomial(z_alphabet(k), unit(k, j, k - h), 1) *
                         theta[j - 1];
            int sgn = ((h - 1) + (j - 1)) % 2;
            if (sgn == 1) coeff = -coeff;
            num += WeylElement::from_poly(coeff) *
                   WeylElement::monomial(k, Exponents(k, 0), unit(k, j, 1), 1);
        }
        dh.push_back(WeylElement::localized(1, num));
    }
    WeylElement out(k);
    for (const auto& [m, c] : Q.terms()) {
        WeylElement acc = cat.mult(SigmaPoly(
                              Poly::monomial(sigma_alphabet(k), m.z, c)));
        for (int h = 1; h <= k; ++h)
            for (int t = 0; t < m.d[h - 1]; ++t) acc = acc * dh[h - 1];
        out += acc;
    }
    return out;
}

W2Element delta_factor(const OperatorCatalog& cat, const WeylElement& A) {
    if (A.denom_power() != 0)
        throw ContractError("delta_factor: operand must lie in W1");
    if (A.classify() != Symmetry::Antisymmetric)
        throw NotAntisymmetricError("delta_factor: operand is not antisymmetric");
    W2Element s = pushforward(cat, cat.delta_op() * A);
    W2Element q(cat.k());
    for (const Exponents& beta : s.d_supports()) {
        SigmaPoly c = s.coeff_of(beta);
        auto divided = c.try_exact_div(cat.Delta());
        if (!divided)
            throw IdentityViolationError(
                "delta_factor: transported coefficient is not divisible by "
                "Delta (would falsify the factorization theorem)",
                c.to_string(), cat.Delta().to_string());
        for (const auto& [gamma, cc] : divided->poly().terms())
            q.add_term(OpMonomial{gamma, beta}, cc);
    }
    return q;
}

bool lemma_14_8_check(const OperatorCatalog& cat, const W2Element& Q,
                      std::string* witness) {
    int q = Q.order();
    if (q < 1)
        throw ContractError("lemma_14_8_check: order >= 1 required");
    WeylElement w = pullback(cat, Q);
    WeylElement cleared =
        WeylElement::from_poly(cat.ctx().delta.pow(2 * q - 1)) * w;
    if (cleared.denom_power() != 0) {
        if (witness)
            *witness = "denominator power " +
                       std::to_string(cleared.denom_power()) +
                       " after clearing delta^" + std::to_string(2 * q - 1);
        return false;
    }
    if (cleared.classify() != Symmetry::Antisymmetric) {
        if (witness) *witness = "cleared operator is not antisymmetric";
        return false;
    }
    return true;
}

TwistedElement twisted_apply(const OperatorCatalog& cat, const W2Element& Q,
                             const TwistedElement& x) {
    int k = cat.k();
    if (Q.k() != k || x.g.k() != k) throw ContractError("k mismatch");
    const SigmaPoly& Delta = cat.Delta();
    auto d_action = [&](int h, const TwistedElement& t) -> TwistedElement {
        // ∂_h(g Δ^{-m} δ) = (Δ ∂_h(g) + (1/2 − m) g ∂_h(Δ)) Δ^{-m-1} δ
        SigmaPoly gprime = Delta * t.g.partial(h) +
                           t.g * Delta.partial(h) *
                               (make_rational(1, 2) - Rational(t.m));
        return make_twisted(cat, gprime, t.m + 1);
    };
    auto add = [&](const TwistedElement& a,
                   const TwistedElement& b) -> TwistedElement {
        int m = std::max(a.m, b.m);
        SigmaPoly g = a.g;
        for (int i = a.m; i < m; ++i) g = g * Delta;
        SigmaPoly gb = b.g;
        for (int i = b.m; i < m; ++i) gb = gb * Delta;
        return make_twisted(cat, g + gb, m);
    };
    TwistedElement out{SigmaPoly::zero(k), 0};
    for (const auto& [m, c] : Q.terms()) {
        TwistedElement t = x;
        for (int h = 1; h <= k; ++h)
            for (int r = 0; r < m.d[h - 1]; ++r) t = d_action(h, t);
        SigmaPoly scale(Poly::monomial(sigma_alphabet(k), m.z, c));
        t = make_twisted(cat, t.g * scale, t.m);
        out = add(out, t);
    }
    return out;
}

W2Element bernstein_witness(const OperatorCatalog& cat) {
    if (cat.k() < 2) throw ContractError("bernstein_witness: k >= 2");
    W2Element q1 = delta_factor(cat, cat.check_delta());
    Rational ck = dual_pairing(cat);
    W2Element p = q1 * make_rational(Integer(1), ck.get_num());
    TwistedElement deltaelt{SigmaPoly::constant(cat.k(), 1), 0};
    TwistedElement want{SigmaPoly::constant(cat.k(), 1), 1};
    TwistedElement got = twisted_apply(cat, p, deltaelt);
    if (!(got == want))
        throw VerificationFailedError(
            "bernstein_witness: P(delta) != Delta^-1 delta; got " +
            got.to_string());
    return p;
}

// ---------------------------------------------------------------------------
// identity items

namespace {

// equality of W2 elements with the two recorded orientations: global sign
// and the per-generator flip ∂_h ↦ (−1)^{h−1}∂_h
ItemResult check_w2_oriented(std::string id, const W2Element& got,
                             const W2Element& expected) {
    ItemResult r;
    r.item_id = std::move(id);
    r.lhs = got.to_string();
    r.rhs = expected.to_string();
    if (got == expected) {
        r.status = Status::Pass;
        return r;
    }
    if (got == -expected) {
        r.status = Status::PassSignFlip;
        r.witness = "matches with a global sign flip";
        return r;
    }
    W2Element flipped = expected.parity_flip();
    if (got == flipped) {
        r.status = Status::PassSignFlip;
        r.witness = "matches under Ds_h -> (-1)^(h-1) Ds_h";
        return r;
    }
    if (got == -flipped) {
        r.status = Status::PassSignFlip;
        r.witness =
            "matches under Ds_h -> (-1)^(h-1) Ds_h with a global sign flip";
        return r;
    }
    r.status = Status::Fail;
    return r;
}

WeylElement antisymmetrize(const WeylElement& e) {
    WeylElement acc(e.k());
    Permutation tau = Permutation::identity(e.k());
    std::sort(tau.images.begin(), tau.images.end());
    do {
        WeylElement p = e.permute(tau);
        acc += (tau.sign() > 0) ? p : -p;
    } while (std::next_permutation(tau.images.begin(), tau.images.end()));
    return acc;
}

}  // namespace

std::vector<ItemResult> items_transport_invariants(const OperatorCatalog& cat,
                                                   std::uint64_t seed) {
    std::vector<ItemResult> out;
    const SymContext& ctx = cat.ctx();
    int k = cat.k();
    out.push_back(timed_item([&] {
        // to_sigma(P(realize(g))) == pushforward(P)(g) on 20 fixed-seed pairs
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tr.faithful"));
        for (int t = 0; t < 20 && ok; ++t) {
            WeylElement P = random_symmetric_op(cat, rng, 2, 3, 2);
            SigmaPoly g = random_sigma_poly(k, rng, 2, 2);
            W2Element q = pushforward(cat, P);
            SigmaPoly lhs = to_sigma(ctx, P.apply(realize(ctx, g)).num);
            if (!(lhs == q.apply(g))) {
                ok = false;
                w = "pair " + std::to_string(t);
            }
        }
        return check_true("tr.faithful", ok, "P acting on C[sigma]",
                          "pushforward(P) acting on C[sigma]", w);
    }));
    out.push_back(timed_item([&] {
        // apply(pullback(Q), realize(g)) == realize(Q(g))
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tr.roundtrip"));
        for (int t = 0; t < 6 && ok; ++t) {
            W2Element q(k);
            int parts = 1 + int(rng.range(0, 1));
            for (int i = 0; i < parts; ++i) {
                Exponents gamma(k, 0), beta(k, 0);
                for (int j = 0; j < k; ++j) gamma[j] = int(rng.range(0, 1));
                int ord = 1 + int(rng.range(0, 1));
                for (int j = 0; j < ord; ++j) ++beta[rng.range(0, k - 1)];
                q.add_term({gamma, beta}, rng.coeff());
            }
            if (q.is_zero()) continue;
            WeylElement lifted = pullback(cat, q);
            SigmaPoly g = random_sigma_poly(k, rng, 2, 2);
            LocalizedPoly lhs = lifted.apply(realize(ctx, g));
            Poly rhs = realize(ctx, q.apply(g));
            if (!(lhs.denom_power == 0 && lhs.num == rhs)) {
                ok = false;
                w = "sample " + std::to_string(t);
            }
        }
        return check_true("tr.roundtrip", ok, "pullback(Q) on realize(g)",
                          "realize(Q(g))", w);
    }));
    out.push_back(timed_item([&] {
        // pushforward is an algebra morphism
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tr.morphism"));
        for (int t = 0; t < 4 && ok; ++t) {
            WeylElement A = random_symmetric_op(cat, rng, 2, 2, 2);
            WeylElement B = random_symmetric_op(cat, rng, 2, 2, 2);
            if (!(pushforward(cat, A * B) ==
                  pushforward(cat, A) * pushforward(cat, B))) {
                ok = false;
                w = "pair " + std::to_string(t);
            }
        }
        return check_true("tr.morphism", ok, "pushforward(AB)",
                          "pushforward(A)*pushforward(B)", w);
    }));
    return out;
}

std::vector<ItemResult> items_factorization(const OperatorCatalog& cat,
                                            std::uint64_t seed) {
    std::vector<ItemResult> out;
    int k = cat.k();
    if (k == 2) {
        // the three displayed k=2 identities, orientation recorded
        out.push_back(timed_item([&] {
            WeylElement a =
                WeylElement::monomial(2, {0, 0}, {1, 0}, 1) -
                WeylElement::monomial(2, {0, 0}, {0, 1}, 1);
            return check_w2_oriented("fact.display1.da_db",
                                     delta_factor(cat, a),
                                     W2Element::d_var(2, 2));
        }));
        out.push_back(timed_item([&] {
            WeylElement a =
                WeylElement::monomial(2, {1, 0}, {1, 0}, 1) -
                WeylElement::monomial(2, {0, 1}, {0, 1}, 1);
            return check_w2_oriented("fact.display2.euler",
                                     delta_factor(cat, a),
                                     W2Element::d_var(2, 1));
        }));
        out.push_back(timed_item([&] {
            WeylElement a =
                WeylElement::monomial(2, {0, 1}, {1, 0}, 1) -
                WeylElement::monomial(2, {1, 0}, {0, 1}, 1);
            W2Element expected =
                -(W2Element::d_var(2, 1) -
                  W2Element::from_sigma(SigmaPoly::variable(2, 1)) *
                      W2Element::d_var(2, 2));
            return check_w2_oriented("fact.display3.cross",
                                     delta_factor(cat, a), expected);
        }));
    }
    // δA = ΔQ on all antisymmetrized monomials in the grid
    out.push_back(timed_item([&] {
        int bound = (k == 2) ? 3 : 2;
        int tried = 0, okcount = 0;
        std::string w;
        std::vector<Exponents> zs, ds;
        for (int d = 0; d <= bound; ++d) {
            Poly basis = complete_homogeneous(k, d);
            for (const auto& [e, c] : basis.terms()) {
                zs.push_back(e);
                ds.push_back(e);
            }
        }
        for (const Exponents& a : zs)
            for (const Exponents& b : ds) {
                WeylElement anti =
                    antisymmetrize(WeylElement::monomial(k, a, b, 1));
                if (anti.is_zero()) continue;
                ++tried;
                try {
                    (void)delta_factor(cat, anti);
                    ++okcount;
                } catch (const Error& err) {
                    if (w.empty()) w = err.what();
                }
            }
        return check_true("fact.monomial_grid", okcount == tried,
                          std::to_string(okcount), std::to_string(tried), w);
    }));
    // δ^{-1} W1^sym δ ⊂ W2 (remark after the factorization theorem)
    out.push_back(timed_item([&] {
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "fact.conjugation"));
        for (int t = 0; t < 3 && ok; ++t) {
            WeylElement P = random_symmetric_op(cat, rng, 2, 2, 2);
            WeylElement a = P * cat.delta_op();
            if (a.is_zero()) continue;
            if (a.classify() != Symmetry::Antisymmetric) {
                ok = false;
                w = "P*delta not antisymmetric";
                break;
            }
            try {
                (void)delta_factor(cat, a);
            } catch (const Error& err) {
                ok = false;
                w = err.what();
            }
        }
        return check_true("fact.conjugation", ok, "delta^-1 P delta", "in W2",
                          w);
    }));
    // Lemma 14/8 on the monomial grid: order q ≤ 2, coefficient degree ≤ 2
    out.push_back(timed_item([&] {
        int tried = 0, okcount = 0;
        std::string w;
        std::vector<Exponents> gammas, betas;
        for (int d = 0; d <= 2; ++d) {
            Poly basis = complete_homogeneous(k, d);
            for (const auto& [e, c] : basis.terms()) gammas.push_back(e);
        }
        for (int d = 1; d <= 2; ++d) {
            Poly basis = complete_homogeneous(k, d);
            for (const auto& [e, c] : basis.terms()) betas.push_back(e);
        }
        for (const Exponents& g : gammas)
            for (const Exponents& b : betas) {
                ++tried;
                std::string why;
                if (lemma_14_8_check(cat, W2Element::monomial(k, g, b, 1), &why))
                    ++okcount;
                else if (w.empty())
                    w = why;
            }
        return check_true("fact.lemma148_grid", okcount == tried,
                          std::to_string(okcount), std::to_string(tried), w);
    }));
    out.push_back(timed_item([&] {
        // q = 0 must be rejected
        bool ok = false;
        try {
            lemma_14_8_check(
                cat, W2Element::from_sigma(SigmaPoly::variable(k, 1)));
        } catch (const ContractError&) {
            ok = true;
        }
        return check_true("fact.lemma148_order0_rejected", ok, "order 0",
                          "precondition rejected");
    }));
    if (k == 2) {
        // the worked k=2 example: P := −(∂_a−∂_b)³(a∂_a −b∂_b) is symmetric,
        // its ∂_a⁴ coefficient is −a, and δ^{-1}P is antisymmetric but stays
        // outside W1
        out.push_back(timed_item([&] {
            WeylElement e3 =
                WeylElement::monomial(2, {0, 0}, {1, 0}, 1) -
                WeylElement::monomial(2, {0, 0}, {0, 1}, 1);
            e3 = e3 * e3 * e3;
            WeylElement f = WeylElement::monomial(2, {1, 0}, {1, 0}, 1) -
                            WeylElement::monomial(2, {0, 1}, {0, 1}, 1);
            WeylElement p0 = -(e3 * f);
            bool ok = p0.classify() == Symmetry::Symmetric;
            Poly da4(z_alphabet(2));
            for (const auto& [m, c] : p0.terms())
                if (m.d == Exponents{4, 0}) da4.add_term(m.z, c);
            ok = ok && da4 == -Poly::variable(z_alphabet(2), 1);
            return check_true("fact.ex32.da4_coeff", ok, da4.to_string(),
                              "-z1");
        }));
        out.push_back(timed_item([&] {
            WeylElement e3 =
                WeylElement::monomial(2, {0, 0}, {1, 0}, 1) -
                WeylElement::monomial(2, {0, 0}, {0, 1}, 1);
            e3 = e3 * e3 * e3;
            WeylElement f = WeylElement::monomial(2, {1, 0}, {1, 0}, 1) -
                            WeylElement::monomial(2, {0, 1}, {0, 1}, 1);
            WeylElement p0 = -(e3 * f);
            WeylElement loc =
                WeylElement::localized(1, p0);
            bool ok = loc.denom_power() == 1 &&
                      loc.classify() == Symmetry::Antisymmetric;
            return check_true("fact.ex32.not_in_w1", ok,
                              "denom_power = " +
                                  std::to_string(loc.denom_power()),
                              "positive denom, antisymmetric");
        }));
        out.push_back(timed_item([&] {
            // Δ(6∂₂² − Δ∂₂³) pulled back equals ±δ(∂_a−∂_b)³; the validated
            // sign is recorded
            const SigmaPoly& Delta = cat.Delta();
            W2Element d2 = W2Element::d_var(2, 2);
            W2Element inner =
                W2Element::from_sigma(Delta) * (d2 * d2) * Rational(6) -
                W2Element::from_sigma(Delta * Delta) * (d2 * d2 * d2);
            WeylElement got = pullback(cat, inner);
            WeylElement e = WeylElement::monomial(2, {0, 0}, {1, 0}, 1) -
                            WeylElement::monomial(2, {0, 0}, {0, 1}, 1);
            WeylElement expected = -(cat.delta_op() * (e * e * e));
            ItemResult r;
            r.item_id = "fact.ex32.bracket";
            r.lhs = got.to_string();
            r.rhs = expected.to_string();
            if (got == expected)
                r.status = Status::Pass;
            else if (got == -expected) {
                r.status = Status::PassSignFlip;
                r.witness = "matches with a global sign flip";
            } else
                r.status = Status::Fail;
            return r;
        }));
        out.push_back(timed_item([&] {
            // pullback of Δ(6∂₂² − Δ∂₂³)∂₁ keeps a genuine δ-denominator;
            // in its normal form δ^{-m}T the ∂_a⁴ slice of T equals ∓a·δ^m,
            // i.e. the operator's ∂_a⁴ coefficient is −a up to the recorded
            // sign
            const SigmaPoly& Delta = cat.Delta();
            W2Element d2 = W2Element::d_var(2, 2);
            W2Element op =
                (W2Element::from_sigma(Delta) * (d2 * d2) * Rational(6) -
                 W2Element::from_sigma(Delta * Delta) * (d2 * d2 * d2)) *
                W2Element::d_var(2, 1);
            WeylElement got = pullback(cat, op);
            int m = got.denom_power();
            Poly da4(z_alphabet(2));
            for (const auto& [mono, c] : got.terms())
                if (mono.d == Exponents{4, 0}) da4.add_term(mono.z, c);
            Poly want = -Poly::variable(z_alphabet(2), 1) *
                        cat.ctx().delta.pow(m);
            ItemResult r;
            r.item_id = "fact.ex32.pullback_da4";
            r.lhs = da4.to_string();
            r.rhs = want.to_string();
            if (da4 == want)
                r.status = Status::Pass;
            else if (da4 == -want) {
                r.status = Status::PassSignFlip;
                r.witness = "coefficient is +a under the chain-rule "
                            "orientation (recorded)";
            } else
                r.status = Status::Fail;
            if (!r.witness.empty()) r.witness += "; ";
            r.witness += "denom_power = " + std::to_string(m);
            return r;
        }));
    }
    return out;
}

std::vector<ItemResult> items_twisted(const OperatorCatalog& cat,
                                      std::uint64_t seed) {
    std::vector<ItemResult> out;
    int k = cat.k();
    if (k == 2) {
        out.push_back(timed_item([&] {
            // ∂₂(δ) = −2·Δ^{-1}·δ since ∂₂(Δ) = −4
            TwistedElement got = twisted_apply(
                cat, W2Element::d_var(2, 2),
                TwistedElement{SigmaPoly::constant(2, 1), 0});
            TwistedElement want{SigmaPoly::constant(2, -2), 1};
            return check_equal("tw.d2_delta", got, want);
        }));
    }
    out.push_back(timed_item([&] {
        TwistedElement x{SigmaPoly::variable(k, 1), 0};
        TwistedElement got = twisted_apply(
            cat, W2Element::from_sigma(SigmaPoly::variable(k, 1)), x);
        TwistedElement want{
            SigmaPoly::variable(k, 1) * SigmaPoly::variable(k, 1), 0};
        return check_equal("tw.sigma_mult", got, want);
    }));
    out.push_back(timed_item([&] {
        Rng rng(derive_seed(seed, "tw.identity"));
        TwistedElement x =
            make_twisted(cat, random_sigma_poly(k, rng, 2, 2),
                         int(rng.range(0, 2)));
        return check_equal("tw.identity",
                           twisted_apply(cat, W2Element::one(k), x), x);
    }));
    out.push_back(timed_item([&] {
        // connection integrability: ∂_i ∂_j = ∂_j ∂_i on random elements
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tw.integrability"));
        for (int i = 1; i <= k && ok; ++i)
            for (int j = i + 1; j <= k && ok; ++j) {
                TwistedElement x =
                    make_twisted(cat, random_sigma_poly(k, rng, 2, 2),
                                 int(rng.range(0, 2)));
                TwistedElement a = twisted_apply(
                    cat, W2Element::d_var(k, i),
                    twisted_apply(cat, W2Element::d_var(k, j), x));
                TwistedElement b = twisted_apply(
                    cat, W2Element::d_var(k, j),
                    twisted_apply(cat, W2Element::d_var(k, i), x));
                if (!(a == b)) {
                    ok = false;
                    w = "i=" + std::to_string(i) + ", j=" + std::to_string(j);
                }
            }
        return check_true("tw.integrability", ok, "d_i d_j x", "d_j d_i x", w);
    }));
    out.push_back(timed_item([&] {
        // the two definitions of the W₂-action agree:
        // pushforward(P) acting on δ equals φ(P)·δ
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tw.consistency"));
        for (int t = 0; t < 4 && ok; ++t) {
            WeylElement P = random_symmetric_op(cat, rng, 2, 2, 2);
            TwistedElement got =
                twisted_apply(cat, pushforward(cat, P),
                              TwistedElement{SigmaPoly::constant(k, 1), 0});
            TwistedElement want = make_twisted(cat, phi(cat, P), 0);
            if (!(got == want)) {
                ok = false;
                w = "sample " + std::to_string(t);
            }
        }
        return check_true("tw.consistency", ok, "pushforward(P)(delta)",
                          "phi(P) delta", w);
    }));
    out.push_back(timed_item([&] {
        // multiplicativity: (Q1 Q2)(x) = Q1(Q2(x))
        bool ok = true;
        std::string w;
        Rng rng(derive_seed(seed, "tw.multiplicative"));
        for (int t = 0; t < 4 && ok; ++t) {
            auto rnd_w2 = [&] {
                W2Element q(k);
                for (int i = 0; i < 2; ++i) {
                    Exponents g(k, 0), b(k, 0);
                    for (int j = 0; j < k; ++j) g[j] = int(rng.range(0, 1));
                    for (int j = 0; j < int(rng.range(0, 2)); ++j)
                        ++b[rng.range(0, k - 1)];
                    q.add_term({g, b}, rng.coeff());
                }
                return q;
            };
            W2Element q1 = rnd_w2(), q2 = rnd_w2();
            TwistedElement x =
                make_twisted(cat, random_sigma_poly(k, rng, 1, 2),
                             int(rng.range(0, 1)));
            TwistedElement a = twisted_apply(cat, q1 * q2, x);
            TwistedElement b =
                twisted_apply(cat, q1, twisted_apply(cat, q2, x));
            if (!(a == b)) {
                ok = false;
                w = "sample " + std::to_string(t);
            }
        }
        return check_true("tw.multiplicative", ok, "(Q1*Q2)(x)", "Q1(Q2(x))",
                          w);
    }));
    return out;
}

std::vector<ItemResult> items_bernstein(const OperatorCatalog& cat) {
    std::vector<ItemResult> out;
    int k = cat.k();
    out.push_back(timed_item([&] {
        W2Element p = bernstein_witness(cat);
        TwistedElement got = twisted_apply(
            cat, p, TwistedElement{SigmaPoly::constant(k, 1), 0});
        TwistedElement want{SigmaPoly::constant(k, 1), 1};
        return check_equal("bw.value", got, want,
                           "witness operator: " + p.to_string());
    }));
    out.push_back(timed_item([&] {
        W2Element p = bernstein_witness(cat);
        W2Element dp = W2Element::from_sigma(cat.Delta()) * p;
        TwistedElement got = twisted_apply(
            cat, dp, TwistedElement{SigmaPoly::constant(k, 1), 0});
        TwistedElement want{SigmaPoly::constant(k, 1), 0};
        return check_equal("bw.sanity_delta_p", got, want);
    }));
    if (k == 2) {
        out.push_back(timed_item([&] {
            // P = ∓(1/2)∂₂ at k = 2
            W2Element p = bernstein_witness(cat);
            W2Element half_d2 = W2Element::d_var(2, 2) * make_rational(1, 2);
            return check_equal_upto_sign("bw.k2_shape", p, half_d2);
        }));
    }
    return out;
}

}  // namespace weylsym
