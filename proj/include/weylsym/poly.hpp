#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylsym/errors.hpp"
#include "weylsym/rational.hpp"

namespace weylsym {

enum class VarKind { Z, Sigma, Zeta };

// A declared variable alphabet.  Polynomials over distinct alphabets never
// mix in one value; every binary operation checks this.
struct VarAlphabet {
    VarKind kind = VarKind::Z;
    int k = 1;

    std::string var_name(int i) const;  // 1-based: z1..zk, s1..sk, zeta

    friend bool operator==(const VarAlphabet& a, const VarAlphabet& b) {
        return a.kind == b.kind && a.k == b.k;
    }
};

inline VarAlphabet z_alphabet(int k) { return {VarKind::Z, k}; }
inline VarAlphabet sigma_alphabet(int k) { return {VarKind::Sigma, k}; }

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// true iff a < b in graded lexicographic order (degree first, then lex)
bool graded_lex_less(const Exponents& a, const Exponents& b);
bool lex_less(const Exponents& a, const Exponents& b);

// Map comparator giving the global canonical iteration order:
// graded lexicographic, descending.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return graded_lex_less(b, a);
    }
};

// Exact multivariate polynomial over ℚ in a declared alphabet.  No stored
// coefficient is zero; the zero polynomial has an empty term map; iteration
// follows the global graded-lex descending order.
class Poly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

    explicit Poly(VarAlphabet a) : alpha_(a) {}

    static Poly zero(VarAlphabet a) { return Poly(a); }
    static Poly constant(VarAlphabet a, const Rational& c);
    static Poly monomial(VarAlphabet a, Exponents e, const Rational& c);
    static Poly variable(VarAlphabet a, int index);  // 1-based

    const VarAlphabet& alphabet() const { return alpha_; }
    int k() const { return alpha_.k; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // total degree; -1 for the zero polynomial
    int degree() const;
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    Rational coeff(const Exponents& e) const;

    // leading term in the global (graded-lex descending) order
    const std::pair<const Exponents, Rational>& leading() const;
    // leading term in plain lex descending order (used by Gauss reduction)
    std::pair<Exponents, Rational> lex_leading() const;

    Poly& add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Rational& c);
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q) { return *this = *this * q; }
    Poly pow(int e) const;

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.alpha_ == q.alpha_ && p.terms_ == q.terms_;
    }

    // formal partial derivative with respect to variable `var_index` (1-based)
    Poly partial(int var_index) const;

    // exact division: returns q with q·den == *this, or throws NotDivisibleError
    Poly exact_div(const Poly& den) const;
    std::optional<Poly> try_exact_div(const Poly& den) const;

    // simultaneous variable relabeling z_i ↦ z_{images[i-1]}
    Poly permute_vars(const std::vector<int>& images) const;

    bool is_homogeneous(int* deg = nullptr) const;

    std::string to_string() const;
    static Poly parse(VarAlphabet a, std::string_view text);

  private:
    void check_same_alphabet_(const Poly& other) const;

    VarAlphabet alpha_;
    TermMap terms_;
};

// δ_k = ∏_{i<j} (z_i − z_j), over the Z alphabet with k variables.
Poly vandermonde_delta(int k);

// elementary symmetric polynomial e_h(z_1..z_k), h in [0, k]
Poly elementary_symmetric(int k, int h);

// sum of all degree-d monomials in k variables (complete homogeneous h_d)
Poly complete_homogeneous(int k, int d);

}  // namespace weylsym
