#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "weylsym/check.hpp"
#include "weylsym/rng.hpp"
#include "weylsym/symfun.hpp"
#include "weylsym/weyl.hpp"

namespace weylsym {

// Per-k cache of the named operators: δ_k, č_k, and builders for V_{p,q},
// Σ_h, 𝒩_q and N_p.  Construction is pure; the catalog is immutable.
class OperatorCatalog {
  public:
    explicit OperatorCatalog(int k);

    int k() const { return ctx_.k; }
    const SymContext& ctx() const { return ctx_; }
    const WeylElement& delta_op() const { return delta_op_; }
    const WeylElement& check_delta() const { return check_delta_; }
    // Δ = δ² in σ-coordinates; computed on first use (costly for large k)
    const SigmaPoly& Delta() const;
    SigmaPoly Delta_partial(int h) const { return Delta().partial(h); }

    // V_{p,q} = Σ_j z_j^p ∂_j^q
    WeylElement v(int p, int q) const;
    // Σ_h = e_h(∂_1..∂_k)
    WeylElement sigma_op(int h) const;
    // 𝒩_q = Σ_j ∂_j^q  (𝒩_0 = k)
    WeylElement newton_d(int q) const;
    // N_p = Σ_j z_j^p as a multiplication operator (N_0 = k)
    WeylElement n_mult(int p) const;
    WeylElement mult(const Poly& f) const { return WeylElement::from_poly(f); }
    WeylElement mult(const SigmaPoly& g) const {
        return WeylElement::from_poly(realize(ctx_, g));
    }

  private:
    SymContext ctx_;
    WeylElement delta_op_, check_delta_;
    mutable std::once_flag delta_sigma_once_;
    mutable std::optional<SigmaPoly> delta_sigma_;
};

// φ(P) with P(δ) = φ(P)·δ
SigmaPoly phi(const OperatorCatalog& cat, const WeylElement& P);

enum class UMethod { Direct, ClosedForm, Residue, Roots };

SigmaPoly u_pq(const OperatorCatalog& cat, int p, int q, UMethod method);
// all four methods; throws IdentityViolationError if any two disagree
SigmaPoly u_pq_all(const OperatorCatalog& cat, int p, int q);

// the (k+1)·k generators V_{p,q} − u_{p,q}, p ∈ [0,k], q ∈ [1,k]
std::vector<WeylElement> annihilator_generators(const OperatorCatalog& cat);

bool in_annihilator(const OperatorCatalog& cat, const WeylElement& P);

// coefficients f_0..f_{k-1} with V = Σ_p f_p·V_{p,1}
std::vector<SigmaPoly> decompose_vector_field(const OperatorCatalog& cat,
                                              const WeylElement& V);

// č_k(δ_k), a constant
Rational dual_pairing(const OperatorCatalog& cat);
Rational dual_pairing(int k);

// dim over ℚ of { f homogeneous of degree d : Σ_h[fδ] = 0 ∀h }
int sigma_kernel_dimension(const OperatorCatalog& cat, int d);

// ∏_j P'(z_j) as a z-polynomial (equals (−1)^{k(k−1)/2}·δ², observed not assumed)
Poly pprime_product(const OperatorCatalog& cat);

// --- identity-check item groups --------------------------------------------
// Individually consumable by the suite runner; identity_suite() concatenates
// the full (a)–(l) catalog in its fixed order.

std::vector<ItemResult> items_generator_relations(const OperatorCatalog& cat);
std::vector<ItemResult> items_phi_properties(const OperatorCatalog& cat,
                                             std::uint64_t seed);
std::vector<ItemResult> items_sigma_delta_lemmas(const OperatorCatalog& cat);
std::vector<ItemResult> items_annihilator_remarks(const OperatorCatalog& cat);
std::vector<ItemResult> items_annihilator_core(const OperatorCatalog& cat);
std::vector<ItemResult> items_upq(const OperatorCatalog& cat);
std::vector<ItemResult> items_mpoly(const OperatorCatalog& cat);
std::vector<ItemResult> items_vectorfields(const OperatorCatalog& cat,
                                           std::uint64_t seed);
std::vector<ItemResult> items_import_kernel(const OperatorCatalog& cat);
std::vector<ItemResult> identity_suite(const OperatorCatalog& cat,
                                       std::uint64_t seed);

// deterministic generators for randomized checks
WeylElement random_symmetric_op(const OperatorCatalog& cat, Rng& rng,
                                int max_z, int max_d, int parts);
SigmaPoly random_sigma_poly(int k, Rng& rng, int max_exp, int parts);
WeylElement random_symmetric_vf(const OperatorCatalog& cat, Rng& rng);

}  // namespace weylsym
