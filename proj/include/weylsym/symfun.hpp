#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylsym/poly.hpp"
#include "weylsym/zeta_poly.hpp"

namespace weylsym {

// Polynomial in the quotient coordinates σ_1..σ_k.  Assigning weight h to
// σ_h, the weight of a term equals the z-degree of its realization.
class SigmaPoly {
  public:
    explicit SigmaPoly(int k) : poly_(sigma_alphabet(k)) {}
    explicit SigmaPoly(Poly p) : poly_(std::move(p)) {
        if (poly_.alphabet().kind != VarKind::Sigma)
            throw ContractError("SigmaPoly requires the sigma alphabet");
    }

    static SigmaPoly zero(int k) { return SigmaPoly(k); }
    static SigmaPoly constant(int k, const Rational& c) {
        return SigmaPoly(Poly::constant(sigma_alphabet(k), c));
    }
    static SigmaPoly variable(int k, int h) {  // σ_h; σ_0 = 1
        if (h == 0) return constant(k, 1);
        return SigmaPoly(Poly::variable(sigma_alphabet(k), h));
    }

    int k() const { return poly_.k(); }
    bool is_zero() const { return poly_.is_zero(); }
    bool is_constant() const { return poly_.is_constant(); }
    Rational constant_value() const { return poly_.constant_value(); }
    const Poly& poly() const { return poly_; }

    // weight of a term γ is Σ h·γ_h; nullopt when terms disagree
    std::optional<int> pure_weight() const;

    SigmaPoly partial(int h) const { return SigmaPoly(poly_.partial(h)); }
    SigmaPoly exact_div(const SigmaPoly& d) const {
        return SigmaPoly(poly_.exact_div(d.poly_));
    }
    std::optional<SigmaPoly> try_exact_div(const SigmaPoly& d) const {
        auto q = poly_.try_exact_div(d.poly_);
        if (!q) return std::nullopt;
        return SigmaPoly(std::move(*q));
    }

    SigmaPoly operator-() const { return SigmaPoly(-poly_); }
    friend SigmaPoly operator+(const SigmaPoly& a, const SigmaPoly& b) {
        return SigmaPoly(a.poly_ + b.poly_);
    }
    friend SigmaPoly operator-(const SigmaPoly& a, const SigmaPoly& b) {
        return SigmaPoly(a.poly_ - b.poly_);
    }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
        return SigmaPoly(a.poly_ * b.poly_);
    }
    friend SigmaPoly operator*(const SigmaPoly& a, const Rational& c) {
        return SigmaPoly(a.poly_ * c);
    }
    SigmaPoly& operator+=(const SigmaPoly& b) { return *this = *this + b; }
    SigmaPoly& operator-=(const SigmaPoly& b) { return *this = *this - b; }
    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
        return a.poly_ == b.poly_;
    }

    std::string to_string() const { return poly_.to_string(); }
    static SigmaPoly parse(int k, std::string_view text) {
        return SigmaPoly(Poly::parse(sigma_alphabet(k), text));
    }

  private:
    Poly poly_;
};

// Immutable per-k data shared by the symmetric-function machinery.
struct SymContext {
    int k;
    std::vector<Poly> elementary;  // e_0..e_k over z
    Poly delta;                    // δ_k
    Poly delta_sq;                 // δ_k² (the discriminant on the z side)

    explicit SymContext(int k);
};

bool is_symmetric_poly(const Poly& f);
bool is_antisymmetric_poly(const Poly& f);

// substitute σ_h ↦ σ_h(z)
Poly realize(const SymContext& ctx, const SigmaPoly& g);

// rewrite a symmetric z-polynomial in σ by lex-leading Gauss reduction
SigmaPoly to_sigma(const SymContext& ctx, const Poly& f);

// g with g·δ = f, for antisymmetric f
SigmaPoly antisym_factor(const SymContext& ctx, const Poly& f);

// M_d by the recurrence M_d = Σ_{h=1}^k (−1)^{h−1} σ_h M_{d−h};
// M_0 = 1, M_d = 0 on the hole d ∈ [−k+1, −1]; d < −k+1 rejected.
SigmaPoly m_poly(const SymContext& ctx, int d);

// Newton power sum N_p in σ; N_0 = k
SigmaPoly newton_in_sigma(const SymContext& ctx, int p);

// Σ_1 acting on ℂ[σ] as Σ_{h=0}^{k−1} (k−h) σ_h ∂_{h+1}
SigmaPoly sigma1_on(const SymContext& ctx, const SigmaPoly& g);

struct DivisionLemmaResult {
    ZetaPoly quotient;   // Q_d
    ZetaPoly remainder;  // R_d, degree ≤ k−2
    bool check;          // Q_d(z_k) == M_d realized in z
};

// divide z^{d+k−1} by Π_k(z) = ∏_{h<k}(z − z_h) and compare Q_d(z_k) with M_d
DivisionLemmaResult division_lemma(const SymContext& ctx, int d);

}  // namespace weylsym
