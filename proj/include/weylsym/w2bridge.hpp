#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weylsym/check.hpp"
#include "weylsym/discops.hpp"
#include "weylsym/symfun.hpp"
#include "weylsym/weyl.hpp"

namespace weylsym {

// Normal-ordered element of W₂ = ℂ⟨σ_1..σ_k, ∂_1..∂_k⟩: terms σ^γ ∂_σ^β.
// Same canonical order as WeylElement, with σ in the z slot and ∂_σ in the
// d slot.
class W2Element {
  public:
    using TermMap = std::map<OpMonomial, Rational, OpMonomialDesc>;

    explicit W2Element(int k) : k_(k) {
        if (k < 1) throw ContractError("k must be positive");
    }

    static W2Element zero(int k) { return W2Element(k); }
    static W2Element one(int k);
    static W2Element monomial(int k, Exponents gamma, Exponents beta,
                              const Rational& c);
    static W2Element d_var(int k, int h);  // ∂_h
    static W2Element from_sigma(const SigmaPoly& g);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int order() const;
    // coefficient of ∂^β as a polynomial in σ
    SigmaPoly coeff_of(const Exponents& beta) const;
    std::vector<Exponents> d_supports() const;

    void add_term(const OpMonomial& m, const Rational& c);

    W2Element operator-() const;
    friend W2Element operator+(const W2Element& a, const W2Element& b);
    friend W2Element operator-(const W2Element& a, const W2Element& b);
    friend W2Element operator*(const W2Element& a, const W2Element& b);
    friend W2Element operator*(const W2Element& a, const Rational& c);
    W2Element& operator+=(const W2Element& b) { return *this = *this + b; }
    friend bool operator==(const W2Element& a, const W2Element& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }

    SigmaPoly apply(const SigmaPoly& g) const;

    // ∂_h ↦ (−1)^{h−1} ∂_h: the alternative orientation of the pullback
    // generators seen in parts of the source identities
    W2Element parity_flip() const;

    std::string to_string() const;
    static W2Element parse(int k, std::string_view text);

  private:
    int k_;
    TermMap terms_;
};

// Element g·Δ^{−m}·δ of the twisted module ℂ[σ][Δ^{-1}]δ.
// Canonical form: Δ does not divide g when m > 0; the zero element is (0, 0).
struct TwistedElement {
    SigmaPoly g;
    int m = 0;

    bool is_zero() const { return g.is_zero(); }
    friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
        return a.m == b.m && a.g == b.g;
    }
    std::string to_string() const;
};

// normalized constructor (divides out Δ while possible)
TwistedElement make_twisted(const OperatorCatalog& cat, SigmaPoly g, int m);

// Transport of a symmetric operator to the σ coordinates: the unique
// Q = Σ_β c_β(σ) ∂^β with |β| ≤ order(P) acting like P on ℂ[σ], recovered
// by triangular coefficient reconstruction and post-verified on fixed-seed
// random σ-monomials.
W2Element pushforward(const OperatorCatalog& cat, const WeylElement& P);

// Substitution σ_h ↦ σ_h(z), ∂_h ↦ (−1)^{h−1} Σ_j z_j^{k−h}/P'(z_j) ∂_{z_j},
// realized with δ-denominators.
WeylElement pullback(const OperatorCatalog& cat, const W2Element& Q);

// For antisymmetric A ∈ W₁: the unique Q ∈ W₂ with δA = ΔQ.
W2Element delta_factor(const OperatorCatalog& cat, const WeylElement& A);

// δ^{2q−1}·pullback(Q) lies in W₁ and is antisymmetric (order q ≥ 1).
bool lemma_14_8_check(const OperatorCatalog& cat, const W2Element& Q,
                      std::string* witness = nullptr);

// Action on the twisted module generated by ∂_i(δ) = (∂_iΔ/2Δ)·δ.
TwistedElement twisted_apply(const OperatorCatalog& cat, const W2Element& Q,
                             const TwistedElement& x);

// P with twisted_apply(P, δ) = Δ^{-1}δ, certifying b(−1/2) ≠ 0.
W2Element bernstein_witness(const OperatorCatalog& cat);

// --- identity-check item groups --------------------------------------------

std::vector<ItemResult> items_transport_invariants(const OperatorCatalog& cat,
                                                   std::uint64_t seed);
std::vector<ItemResult> items_factorization(const OperatorCatalog& cat,
                                            std::uint64_t seed);
std::vector<ItemResult> items_twisted(const OperatorCatalog& cat,
                                      std::uint64_t seed);
std::vector<ItemResult> items_bernstein(const OperatorCatalog& cat);

}  // namespace weylsym
