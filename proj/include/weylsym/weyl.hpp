#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylsym/poly.hpp"

namespace weylsym {

struct Permutation {
    std::vector<int> images;  // 1-based: i ↦ images[i-1]

    static Permutation identity(int k);
    static Permutation transposition(int k, int i, int j);

    int k() const { return int(images.size()); }
    int sign() const;
    void validate() const;  // throws ContractError unless a bijection of 1..k
};

enum class Symmetry { Symmetric, Antisymmetric, Neither };

// δ^{-m}·f with m minimal (δ does not divide f when m > 0; m = 0 for f = 0)
struct LocalizedPoly {
    Poly num;
    int denom_power = 0;

    bool is_zero() const { return num.is_zero(); }
    friend bool operator==(const LocalizedPoly& a, const LocalizedPoly& b) {
        return a.denom_power == b.denom_power && a.num == b.num;
    }
    std::string to_string() const;
};

// Normal-ordered monomial z^α ∂^β (all z factors left of all ∂ factors).
struct OpMonomial {
    Exponents z, d;
    friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
};

// Canonical term order: graded-lex descending on the pair (β, α).
struct OpMonomialDesc {
    bool operator()(const OpMonomial& a, const OpMonomial& b) const {
        int ta = total_degree(a.d) + total_degree(a.z);
        int tb = total_degree(b.d) + total_degree(b.z);
        if (ta != tb) return ta > tb;
        if (a.d != b.d) return lex_less(b.d, a.d);
        return lex_less(b.z, a.z);
    }
};

// Element of W₁ = ℂ⟨z_1..z_k, ∂_1..∂_k⟩ or of its δ-localization: the value
// is δ^{-m} · Σ c_{α,β} z^α ∂^β with the δ-power on the left.  Elements are
// kept reduced: while m > 0 and δ divides every β-slice of the term map,
// the common δ factor is divided out.  Two elements are equal iff their
// reduced (m, term map) pairs are equal.
class WeylElement {
  public:
    using TermMap = std::map<OpMonomial, Rational, OpMonomialDesc>;

    explicit WeylElement(int k) : k_(k) {
        if (k < 1) throw ContractError("k must be positive");
    }

    static WeylElement zero(int k) { return WeylElement(k); }
    static WeylElement one(int k);
    static WeylElement monomial(int k, Exponents alpha, Exponents beta,
                                const Rational& c);
    // multiplication operator by a z-polynomial
    static WeylElement from_poly(const Poly& f);
    // δ^{-m} · numerator (numerator must itself have denom_power 0)
    static WeylElement localized(int m, const WeylElement& numerator);

    int k() const { return k_; }
    int denom_power() const { return denom_power_; }
    bool in_w1() const { return denom_power_ == 0; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    // max |β| over terms; -1 for zero
    int order() const;
    // |α| − |β| − m·k(k−1)/2 when every term agrees; nullopt otherwise
    std::optional<int> pure_weight() const;

    WeylElement operator-() const;
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const WeylElement& a, const Rational& c);
    friend WeylElement operator*(const Rational& c, const WeylElement& a) {
        return a * c;
    }
    WeylElement& operator+=(const WeylElement& b) { return *this = *this + b; }
    WeylElement& operator-=(const WeylElement& b) { return *this = *this - b; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.k_ == b.k_ && a.denom_power_ == b.denom_power_ &&
               a.terms_ == b.terms_;
    }

    // z^α ∂^β (f) = z^α · ∂^β(f); a δ-denominator is carried through and
    // reduced when δ divides the result.
    LocalizedPoly apply(const Poly& f) const;

    // simultaneous relabeling of z and ∂ indices; an algebra automorphism
    // (the δ^{-m} prefix contributes sign(τ)^m)
    WeylElement permute(const Permutation& tau) const;

    // Σ_{τ ∈ S_k} permute(·, τ); stabilizer multiplicity included
    WeylElement symmetrize() const;

    Symmetry classify() const;

    std::string to_string() const;
    static WeylElement parse(int k, std::string_view text);

  private:
    friend class WeylBuilder;
    void add_term_(const OpMonomial& m, const Rational& c);
    void reduce_();

    int k_;
    int denom_power_ = 0;
    TermMap terms_;
};

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

// reduced δ^{-m}·f
LocalizedPoly make_localized(Poly f, int denom_power);

// cached Vandermonde δ_k (shared, immutable)
const Poly& delta_of(int k);

}  // namespace weylsym
