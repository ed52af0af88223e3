#include "weylsym/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "weylsym/detail/normal_order.hpp"
#include "weylsym/detail/serialize.hpp"

namespace weylsym {

namespace {

using detail::for_each_below;

// ∏_i C(β_i, ν_i)
Rational multi_binomial(const Exponents& beta, const Exponents& nu) {
    Integer r = 1;
    for (std::size_t i = 0; i < beta.size(); ++i)
        r *= binomial(beta[i], nu[i]);
    return Rational(r);
}

}  // namespace

const Poly& delta_of(int k) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, vandermonde_delta(k)).first;
    return it->second;
}

LocalizedPoly make_localized(Poly f, int denom_power) {
    if (f.is_zero()) return {std::move(f), 0};
    const Poly& delta = delta_of(f.k());
    while (denom_power > 0) {
        auto q = f.try_exact_div(delta);
        if (!q) break;
        f = std::move(*q);
        --denom_power;
    }
    return {std::move(f), denom_power};
}

std::string LocalizedPoly::to_string() const {
    if (denom_power == 0) return num.to_string();
    return "(1/delta^" + std::to_string(denom_power) + ") * ( " + num.to_string() +
           " )";
}

Permutation Permutation::identity(int k) {
    Permutation p;
    p.images.resize(k);
    for (int i = 0; i < k; ++i) p.images[i] = i + 1;
    return p;
}

Permutation Permutation::transposition(int k, int i, int j) {
    Permutation p = identity(k);
    if (i < 1 || j < 1 || i > k || j > k) throw ContractError("transposition out of range");
    std::swap(p.images[i - 1], p.images[j - 1]);
    return p;
}

void Permutation::validate() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > int(images.size()) || seen[v - 1])
            throw ContractError("not a bijection of 1..k");
        seen[v - 1] = true;
    }
}

int Permutation::sign() const {
    std::vector<bool> seen(images.size(), false);
    int sgn = 1;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = images[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sgn = -sgn;
    }
    return sgn;
}

WeylElement WeylElement::one(int k) {
    return monomial(k, Exponents(k, 0), Exponents(k, 0), 1);
}

WeylElement WeylElement::monomial(int k, Exponents alpha, Exponents beta,
                                  const Rational& c) {
    if (int(alpha.size()) != k || int(beta.size()) != k)
        throw ContractError("exponent length != k");
    WeylElement e(k);
    if (c != 0) e.terms_.emplace(OpMonomial{std::move(alpha), std::move(beta)}, c);
    return e;
}

WeylElement WeylElement::from_poly(const Poly& f) {
    if (f.alphabet().kind != VarKind::Z)
        throw ContractError("multiplication operators take z-polynomials");
    WeylElement e(f.k());
    Exponents none(f.k(), 0);
    for (const auto& [a, c] : f.terms()) e.terms_.emplace(OpMonomial{a, none}, c);
    return e;
}

WeylElement WeylElement::localized(int m, const WeylElement& numerator) {
    if (m < 0) throw ContractError("negative denominator power");
    if (numerator.denom_power_ != 0)
        throw ContractError("localized(): numerator already carries a denominator");
    WeylElement e = numerator;
    e.denom_power_ = m;
    e.reduce_();
    return e;
}

int WeylElement::order() const {
    int o = -1;
    for (const auto& [m, c] : terms_) o = std::max(o, total_degree(m.d));
    return o;
}

std::optional<int> WeylElement::pure_weight() const {
    if (terms_.empty()) return 0;
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        int wt = total_degree(m.z) - total_degree(m.d);
        if (w && *w != wt) return std::nullopt;
        w = wt;
    }
    return *w - denom_power_ * (k_ * (k_ - 1) / 2);
}

void WeylElement::add_term_(const OpMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void WeylElement::reduce_() {
    if (terms_.empty()) {
        denom_power_ = 0;
        return;
    }
    const Poly& delta = delta_of(k_);
    while (denom_power_ > 0) {
        // collect β-slices and attempt a global δ division
        std::map<Exponents, Poly> slices;
        for (const auto& [m, c] : terms_) {
            auto it = slices.find(m.d);
            if (it == slices.end())
                it = slices.emplace(m.d, Poly(z_alphabet(k_))).first;
            it->second.add_term(m.z, c);
        }
        std::map<Exponents, Poly> divided;
        bool ok = true;
        for (auto& [beta, f] : slices) {
            auto q = f.try_exact_div(delta);
            if (!q) {
                ok = false;
                break;
            }
            divided.emplace(beta, std::move(*q));
        }
        if (!ok) break;
        terms_.clear();
        for (const auto& [beta, f] : divided)
            for (const auto& [a, c] : f.terms())
                terms_.emplace(OpMonomial{a, beta}, c);
        --denom_power_;
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(k_);
    r.denom_power_ = denom_power_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    if (a.k_ != b.k_) throw ContractError("k mismatch");
    // common denominator δ^{-max(ma,mb)}: multiply term maps by δ-powers
    int m = std::max(a.denom_power_, b.denom_power_);
    const Poly& delta = delta_of(a.k_);
    auto lift = [&](const WeylElement& e, WeylElement& into) {
        Poly dp = delta.pow(m - e.denom_power_);
        for (const auto& [mono, c] : e.terms_)
            for (const auto& [de, dc] : dp.terms()) {
                Exponents z = mono.z;
                for (int i = 0; i < a.k_; ++i) z[i] += de[i];
                into.add_term_({z, mono.d}, c * dc);
            }
    };
    WeylElement r(a.k_);
    r.denom_power_ = m;
    lift(a, r);
    lift(b, r);
    r.reduce_();
    return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
    return a + (-b);
}

WeylElement operator*(const WeylElement& a, const Rational& c) {
    WeylElement r(a.k_);
    if (c == 0) return r;
    r.denom_power_ = a.denom_power_;
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, cc * c);
    return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.k_ != b.k_) throw ContractError("k mismatch");
    int k = a.k_;
    WeylElement r(k);

    // Step 1: commute a's term map past δ^{-mb}:
    //   z^α ∂^β ∘ δ^{-m} = Σ_{ν≤β} C(β,ν) z^α ∂^ν(δ^{-m}) ∂^{β-ν}
    // where ∂^ν(δ^{-m}) = δ^{-m-|ν|} q_ν.  With o = order(a) this yields a
    // uniform prefix δ^{-(m+o)} in front of a polynomial term map.
    WeylElement::TermMap left;
    int extra = 0;
    if (b.denom_power_ == 0 || a.terms_.empty()) {
        left = a.terms_;
    } else {
        const Poly& delta = delta_of(k);
        int mb = b.denom_power_;
        int o = std::max(a.order(), 0);
        extra = o;
        std::vector<Poly> dpow{Poly::constant(z_alphabet(k), 1)};
        for (int i = 1; i <= o; ++i) dpow.push_back(dpow.back() * delta);
        // q_ν table, built on demand in increasing |ν|
        std::map<Exponents, Poly> q;
        q.emplace(Exponents(k, 0), Poly::constant(z_alphabet(k), 1));
        auto q_of = [&](auto&& self, const Exponents& nu) -> const Poly& {
            auto it = q.find(nu);
            if (it != q.end()) return it->second;
            int j = 0;
            while (nu[j] == 0) ++j;
            Exponents prev = nu;
            --prev[j];
            const Poly& qp = self(self, prev);
            int r_ = mb + total_degree(prev);
            Poly val = delta * qp.partial(j + 1) -
                       Rational(r_) * (qp * delta.partial(j + 1));
            return q.emplace(nu, std::move(val)).first->second;
        };
        for (const auto& [mono, c] : a.terms_) {
            for_each_below(mono.d, [&](const Exponents& nu) {
                int nv = total_degree(nu);
                Rational factor = c * multi_binomial(mono.d, nu);
                Poly zpart = dpow[o - nv] * q_of(q_of, nu);
                Exponents dnew(k);
                for (int i = 0; i < k; ++i) dnew[i] = mono.d[i] - nu[i];
                for (const auto& [ze, zc] : zpart.terms()) {
                    Exponents znew = ze;
                    for (int i = 0; i < k; ++i) znew[i] += mono.z[i];
                    detail::op_add_term(left, {znew, dnew}, factor * zc);
                }
            });
        }
    }

    r.denom_power_ = a.denom_power_ + b.denom_power_ + extra;
    detail::normal_product_into(r.terms_, left, b.terms_, k);
    r.reduce_();
    return r;
}

LocalizedPoly WeylElement::apply(const Poly& f) const {
    if (f.alphabet().kind != VarKind::Z || f.k() != k_)
        throw ContractError("apply: operand must be a z-polynomial over the same k");
    Poly acc(z_alphabet(k_));
    for (const auto& [m, c] : terms_) {
        Poly g = f;
        for (int i = 0; i < k_ && !g.is_zero(); ++i)
            for (int t = 0; t < m.d[i]; ++t) g = g.partial(i + 1);
        if (g.is_zero()) continue;
        acc += Poly::monomial(z_alphabet(k_), m.z, c) * g;
    }
    return make_localized(std::move(acc), denom_power_);
}

WeylElement WeylElement::permute(const Permutation& tau) const {
    if (tau.k() != k_) throw ContractError("k mismatch");
    tau.validate();
    WeylElement r(k_);
    r.denom_power_ = denom_power_;
    Rational scale = (denom_power_ % 2 == 1 && tau.sign() < 0) ? -1 : 1;
    Exponents z(k_), d(k_);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < k_; ++i) {
            z[tau.images[i] - 1] = m.z[i];
            d[tau.images[i] - 1] = m.d[i];
        }
        r.terms_.emplace(OpMonomial{z, d}, c * scale);
    }
    return r;
}

WeylElement WeylElement::symmetrize() const {
    if (denom_power_ != 0)
        throw ContractError("symmetrize: localized input rejected");
    WeylElement acc(k_);
    Permutation tau = Permutation::identity(k_);
    std::sort(tau.images.begin(), tau.images.end());
    do {
        acc += permute(tau);
    } while (std::next_permutation(tau.images.begin(), tau.images.end()));
    return acc;
}

Symmetry WeylElement::classify() const {
    bool sym = true, anti = true;
    for (int i = 1; i < k_ && (sym || anti); ++i) {
        WeylElement p = permute(Permutation::transposition(k_, i, i + 1));
        if (!(p == *this)) sym = false;
        if (!(p == -*this)) anti = false;
    }
    if (is_zero() || sym) return Symmetry::Symmetric;
    if (anti) return Symmetry::Antisymmetric;
    return Symmetry::Neither;
}

std::string WeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    std::ostringstream body;
    for (const auto& [m, c] : terms_) {
        std::string mono = detail::monomial_string(z_alphabet(k_), m.z);
        std::string dmono;
        for (int i = 0; i < k_; ++i) {
            if (m.d[i] == 0) continue;
            if (!dmono.empty()) dmono += "*";
            dmono += detail::power_string("Dz" + std::to_string(i + 1), m.d[i]);
        }
        if (!dmono.empty()) mono = mono.empty() ? dmono : mono + "*" + dmono;
        detail::render_term(body, c, mono, first);
        first = false;
    }
    if (denom_power_ > 0)
        out << "(1/delta^" << denom_power_ << ") * ( " << body.str() << " )";
    else
        out << body.str();
    return out.str();
}

}  // namespace weylsym
