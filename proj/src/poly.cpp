#include "weylsym/poly.hpp"

#include <algorithm>
#include <sstream>

#include "weylsym/detail/serialize.hpp"

namespace weylsym {

std::string VarAlphabet::var_name(int i) const {
    switch (kind) {
        case VarKind::Z:
            return "z" + std::to_string(i);
        case VarKind::Sigma:
            return "s" + std::to_string(i);
        case VarKind::Zeta:
            return "zeta";
    }
    return "?";
}

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool lex_less(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool graded_lex_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return lex_less(a, b);
}

void Poly::check_same_alphabet_(const Poly& other) const {
    if (!(alpha_ == other.alpha_))
        throw ContractError("polynomial alphabets differ");
}

Poly Poly::constant(VarAlphabet a, const Rational& c) {
    return monomial(a, Exponents(a.k, 0), c);
}

Poly Poly::monomial(VarAlphabet a, Exponents e, const Rational& c) {
    if (int(e.size()) != a.k) throw ContractError("exponent length != k");
    Poly p(a);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

Poly Poly::variable(VarAlphabet a, int index) {
    if (index < 1 || index > a.k) throw ContractError("variable index out of range");
    Exponents e(a.k, 0);
    e[index - 1] = 1;
    return monomial(a, std::move(e), 1);
}

int Poly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw ContractError("polynomial is not constant");
    return terms_.begin()->second;
}

Rational Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>& Poly::leading() const {
    if (terms_.empty()) throw ContractError("zero polynomial has no leading term");
    return *terms_.begin();
}

std::pair<Exponents, Rational> Poly::lex_leading() const {
    if (terms_.empty()) throw ContractError("zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (lex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Poly& Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Poly& Poly::operator+=(const Poly& q) {
    check_same_alphabet_(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    check_same_alphabet_(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(alpha_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    r += q;
    return r;
}

Poly operator-(const Poly& p, const Poly& q) {
    Poly r = p;
    r -= q;
    return r;
}

Poly operator*(const Poly& p, const Poly& q) {
    p.check_same_alphabet_(q);
    Poly r(p.alpha_);
    Exponents e(p.alpha_.k);
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            for (int i = 0; i < p.alpha_.k; ++i) e[i] = ep[i] + eq[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

Poly operator*(const Poly& p, const Rational& c) {
    Poly r(p.alpha_);
    if (c == 0) return r;
    for (const auto& [e, cp] : p.terms_) r.terms_.emplace(e, cp * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw ContractError("negative exponent");
    Poly r = constant(alpha_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::partial(int var_index) const {
    if (var_index < 1 || var_index > alpha_.k)
        throw ContractError("partial: variable index out of range");
    Poly r(alpha_);
    for (const auto& [e, c] : terms_) {
        int ei = e[var_index - 1];
        if (ei == 0) continue;
        Exponents f = e;
        f[var_index - 1] = ei - 1;
        r.add_term(f, c * Rational(ei));
    }
    return r;
}

// Single-divisor long division in the graded-lex order.  When the division
// is exact this always terminates with zero remainder: leading terms
// multiply, so each reduction step cancels the current leading term and the
// quotient property is preserved.
std::optional<Poly> Poly::try_exact_div(const Poly& den) const {
    check_same_alphabet_(den);
    if (den.is_zero()) throw ContractError("division by zero polynomial");
    Poly quot(alpha_);
    Poly rem = *this;
    const auto& dlead = den.leading();
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        Exponents q(alpha_.k);
        for (int i = 0; i < alpha_.k; ++i) {
            q[i] = rlead.first[i] - dlead.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational c = rlead.second / dlead.second;
        Poly qmono = Poly::monomial(alpha_, q, c);
        quot += qmono;
        rem -= qmono * den;
    }
    return quot;
}

Poly Poly::exact_div(const Poly& den) const {
    // Track the remainder at the failing step for the error witness.
    check_same_alphabet_(den);
    if (den.is_zero()) throw ContractError("division by zero polynomial");
    Poly quot(alpha_);
    Poly rem = *this;
    const auto& dlead = den.leading();
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        Exponents q(alpha_.k);
        for (int i = 0; i < alpha_.k; ++i) {
            q[i] = rlead.first[i] - dlead.first[i];
            if (q[i] < 0)
                throw NotDivisibleError("division is not exact", rem.to_string());
        }
        Rational c = rlead.second / dlead.second;
        Poly qmono = Poly::monomial(alpha_, q, c);
        quot += qmono;
        rem -= qmono * den;
    }
    return quot;
}

Poly Poly::permute_vars(const std::vector<int>& images) const {
    if (int(images.size()) != alpha_.k) throw ContractError("permutation size != k");
    Poly r(alpha_);
    Exponents f(alpha_.k);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < alpha_.k; ++i) f[images[i] - 1] = e[i];
        r.add_term(f, c);
    }
    return r;
}

bool Poly::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    if (deg) *deg = d;
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono = detail::monomial_string(alpha_, e);
        detail::render_term(out, c, mono, first);
        first = false;
    }
    return out.str();
}

Poly vandermonde_delta(int k) {
    VarAlphabet a = z_alphabet(k);
    Poly d = Poly::constant(a, 1);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            d = d * (Poly::variable(a, i) - Poly::variable(a, j));
    return d;
}

Poly elementary_symmetric(int k, int h) {
    VarAlphabet a = z_alphabet(k);
    if (h < 0 || h > k) return Poly::zero(a);
    if (h == 0) return Poly::constant(a, 1);
    // dynamic programming over ∏ (1 + z_i t), tracking coefficients of t^j
    std::vector<Poly> e(h + 1, Poly::zero(a));
    e[0] = Poly::constant(a, 1);
    for (int i = 1; i <= k; ++i) {
        Poly zi = Poly::variable(a, i);
        for (int j = std::min(h, i); j >= 1; --j) e[j] += e[j - 1] * zi;
    }
    return e[h];
}

Poly complete_homogeneous(int k, int d) {
    VarAlphabet a = z_alphabet(k);
    if (d < 0) return Poly::zero(a);
    Poly r(a);
    Exponents e(k, 0);
    // enumerate all exponent vectors of total degree d
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            e[pos] = rest;
            r.add_term(e, 1);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            e[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, d);
    return r;
}

}  // namespace weylsym
