#include "weylsym/zeta_poly.hpp"

#include <sstream>

namespace weylsym {

void ZetaPoly::trim_() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

ZetaPoly ZetaPoly::constant(const Poly& c) {
    ZetaPoly p(c.alphabet());
    if (!c.is_zero()) p.coeff_.push_back(c);
    return p;
}

ZetaPoly ZetaPoly::zeta(VarAlphabet base) {
    ZetaPoly p(base);
    p.coeff_.push_back(Poly::zero(base));
    p.coeff_.push_back(Poly::constant(base, 1));
    return p;
}

ZetaPoly ZetaPoly::from_roots(VarAlphabet base, const std::vector<Poly>& roots) {
    ZetaPoly p = constant(Poly::constant(base, 1));
    for (const Poly& r : roots) p = p * (zeta(base) - constant(r));
    return p;
}

Poly ZetaPoly::coeff(int i) const {
    if (i < 0 || i >= int(coeff_.size())) return Poly::zero(base_);
    return coeff_[i];
}

bool ZetaPoly::is_monic() const {
    return !coeff_.empty() && coeff_.back() == Poly::constant(base_, 1);
}

ZetaPoly ZetaPoly::operator-() const {
    ZetaPoly r(base_);
    r.coeff_.reserve(coeff_.size());
    for (const Poly& c : coeff_) r.coeff_.push_back(-c);
    return r;
}

ZetaPoly operator+(const ZetaPoly& p, const ZetaPoly& q) {
    if (!(p.base_ == q.base_)) throw ContractError("zeta-poly base alphabets differ");
    ZetaPoly r(p.base_);
    std::size_t n = std::max(p.coeff_.size(), q.coeff_.size());
    r.coeff_.assign(n, Poly::zero(p.base_));
    for (std::size_t i = 0; i < n; ++i) {
        if (i < p.coeff_.size()) r.coeff_[i] += p.coeff_[i];
        if (i < q.coeff_.size()) r.coeff_[i] += q.coeff_[i];
    }
    r.trim_();
    return r;
}

ZetaPoly operator-(const ZetaPoly& p, const ZetaPoly& q) { return p + (-q); }

ZetaPoly operator*(const ZetaPoly& p, const ZetaPoly& q) {
    if (!(p.base_ == q.base_)) throw ContractError("zeta-poly base alphabets differ");
    ZetaPoly r(p.base_);
    if (p.is_zero() || q.is_zero()) return r;
    r.coeff_.assign(p.coeff_.size() + q.coeff_.size() - 1, Poly::zero(p.base_));
    for (std::size_t i = 0; i < p.coeff_.size(); ++i)
        for (std::size_t j = 0; j < q.coeff_.size(); ++j)
            r.coeff_[i + j] += p.coeff_[i] * q.coeff_[j];
    r.trim_();
    return r;
}

ZetaPoly operator*(const ZetaPoly& p, const Poly& c) {
    return p * ZetaPoly::constant(c);
}

ZetaPoly ZetaPoly::shifted(int by) const {
    if (by < 0) throw ContractError("negative zeta shift");
    if (is_zero()) return *this;
    ZetaPoly r(base_);
    r.coeff_.assign(coeff_.size() + by, Poly::zero(base_));
    for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i + by] = coeff_[i];
    return r;
}

ZetaPoly ZetaPoly::derivative() const {
    ZetaPoly r(base_);
    for (std::size_t i = 1; i < coeff_.size(); ++i)
        r.coeff_.push_back(coeff_[i] * Rational(long(i)));
    r.trim_();
    return r;
}

Poly ZetaPoly::eval(const Poly& value) const {
    Poly acc = Poly::zero(base_);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        acc = acc * value + *it;
    return acc;
}

ZetaDivMod ZetaPoly::divmod(const ZetaPoly& den) const {
    if (!den.is_monic())
        throw NonMonicDenominatorError("zeta division requires a monic denominator");
    ZetaPoly quot(base_), rem = *this;
    int d = den.degree();
    quot.coeff_.assign(std::max(0, degree() - d + 1), Poly::zero(base_));
    while (rem.degree() >= d) {
        int shift = rem.degree() - d;
        Poly lead = rem.coeff_.back();
        quot.coeff_[shift] += lead;
        rem = rem - den.shifted(shift) * lead;
    }
    quot.trim_();
    return {quot, rem};
}

std::string ZetaPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeff_[i].is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << coeff_[i].to_string() << ")";
        if (i > 0) out << "*zeta";
        if (i > 1) out << "^" << i;
        first = false;
    }
    return out.str();
}

Poly residue_at_infinity(const ZetaPoly& num, const ZetaPoly& den) {
    if (!den.is_monic())
        throw NonMonicDenominatorError("residue denominator must be monic in zeta");
    VarAlphabet base = num.base();
    if (!(base == den.base())) throw ContractError("zeta-poly base alphabets differ");
    if (num.is_zero()) return Poly::zero(base);
    int n = num.degree(), d = den.degree();
    // num/den = Σ_{i≥0} c_i ζ^{n-d-i};  c_i = a_i − Σ_{j=1}^{min(i,d)} b_j c_{i-j}
    // with a_i = coeff of ζ^{n-i} in num, b_j = coeff of ζ^{d-j} in den.
    int want = n - d + 1;  // index of the ζ^{-1} coefficient
    if (want < 0) return Poly::zero(base);
    std::vector<Poly> c;
    c.reserve(want + 1);
    for (int i = 0; i <= want; ++i) {
        Poly ci = num.coeff(n - i);
        for (int j = 1; j <= std::min(i, d); ++j)
            ci -= den.coeff(d - j) * c[i - j];
        c.push_back(ci);
    }
    return c[want];
}

}  // namespace weylsym
