#pragma once

#include <algorithm>

#include "weylsym/weyl.hpp"

namespace weylsym::detail {

using OpTermMap = std::map<OpMonomial, Rational, OpMonomialDesc>;

inline void op_add_term(OpTermMap& tm, const OpMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = tm.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) tm.erase(it);
    }
}

template <typename F>
void for_each_below(const Exponents& bound, F&& f) {
    Exponents nu(bound.size(), 0);
    while (true) {
        f(nu);
        std::size_t i = 0;
        while (i < nu.size() && nu[i] == bound[i]) nu[i++] = 0;
        if (i == nu.size()) return;
        ++nu[i];
    }
}

// Normal-ordered product of two term maps over any canonically conjugate
// pair (the Leibniz exchange ∂ x = x ∂ + 1 in each slot):
//   x^α ∂^β · x^γ ∂^ε = Σ_{ν ≤ min(β,γ)} ∏_i C(β_i,ν_i) C(γ_i,ν_i) ν_i!
//                        · x^{α+γ-ν} ∂^{β+ε-ν}
inline void normal_product_into(OpTermMap& out, const OpTermMap& A,
                                const OpTermMap& B, int k) {
    Exponents minimum(k), znew(k), dnew(k);
    for (const auto& [ma, ca] : A) {
        for (const auto& [mb, cb] : B) {
            for (int i = 0; i < k; ++i) minimum[i] = std::min(ma.d[i], mb.z[i]);
            for_each_below(minimum, [&](const Exponents& nu) {
                Integer f = 1;
                for (int i = 0; i < k; ++i)
                    f *= binomial(ma.d[i], nu[i]) * binomial(mb.z[i], nu[i]) *
                         factorial(nu[i]);
                for (int i = 0; i < k; ++i) {
                    znew[i] = ma.z[i] + mb.z[i] - nu[i];
                    dnew[i] = ma.d[i] + mb.d[i] - nu[i];
                }
                op_add_term(out, {znew, dnew}, ca * cb * Rational(f));
            });
        }
    }
}

}  // namespace weylsym::detail
