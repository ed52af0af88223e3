#pragma once

#include <ostream>
#include <string>

#include "weylsym/poly.hpp"

namespace weylsym::detail {

inline std::string power_string(const std::string& name, int e) {
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

inline std::string monomial_string(const VarAlphabet& a, const Exponents& e) {
    std::string s;
    for (int i = 0; i < a.k; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += power_string(a.var_name(i + 1), e[i]);
    }
    return s;
}

// Renders one `c * monomial` summand with canonical spacing:
//   leading term: "mono", "-mono", "3*mono", "c"
//   later terms:  " + mono", " - 2/3*mono", ...
inline void render_term(std::ostream& out, const Rational& c,
                        const std::string& mono, bool first) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
        if (neg) out << "-";
    } else {
        out << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
        out << mag.get_str();
    } else {
        if (mag != 1) out << mag.get_str() << "*";
        out << mono;
    }
}

}  // namespace weylsym::detail
