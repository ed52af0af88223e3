#pragma once

#include <string>
#include <vector>

#include "weylsym/poly.hpp"

namespace weylsym {

struct ZetaDivMod;

// Univariate polynomial in the contour variable ζ whose coefficients are
// Polys over a base alphabet.  The substrate for the residue-at-infinity
// formula and for the one-variable division producing the M_d polynomials.
class ZetaPoly {
  public:
    explicit ZetaPoly(VarAlphabet base) : base_(base) {}

    static ZetaPoly zero(VarAlphabet base) { return ZetaPoly(base); }
    static ZetaPoly constant(const Poly& c);
    static ZetaPoly zeta(VarAlphabet base);
    // ∏_j (ζ − roots[j])
    static ZetaPoly from_roots(VarAlphabet base, const std::vector<Poly>& roots);

    const VarAlphabet& base() const { return base_; }
    int degree() const { return int(coeff_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeff_.empty(); }
    // coefficient of ζ^i (zero Poly when out of range)
    Poly coeff(int i) const;
    bool is_monic() const;

    ZetaPoly operator-() const;
    friend ZetaPoly operator+(const ZetaPoly& p, const ZetaPoly& q);
    friend ZetaPoly operator-(const ZetaPoly& p, const ZetaPoly& q);
    friend ZetaPoly operator*(const ZetaPoly& p, const ZetaPoly& q);
    friend ZetaPoly operator*(const ZetaPoly& p, const Poly& c);
    friend bool operator==(const ZetaPoly& p, const ZetaPoly& q) {
        return p.base_ == q.base_ && p.coeff_ == q.coeff_;
    }

    ZetaPoly shifted(int by) const;  // multiply by ζ^by
    ZetaPoly derivative() const;     // d/dζ
    Poly eval(const Poly& value) const;  // substitute ζ := value (Horner)

    // long division by a monic divisor
    ZetaDivMod divmod(const ZetaPoly& den) const;

    std::string to_string() const;

  private:
    void trim_();

    VarAlphabet base_;
    std::vector<Poly> coeff_;  // coeff_[i] multiplies ζ^i; back() nonzero
};

struct ZetaDivMod {
    ZetaPoly quotient, remainder;
};

// Coefficient of ζ^{-1} in the Laurent expansion of num/den at infinity,
// i.e. (1/2πi)∮_{|ζ|=R} num/den dζ for R large.  den must be monic in ζ;
// the expansion is truncated after deg(num) − deg(den) + 2 coefficients,
// which provably suffices for the ζ^{-1} coefficient.
Poly residue_at_infinity(const ZetaPoly& num, const ZetaPoly& den);

}  // namespace weylsym
