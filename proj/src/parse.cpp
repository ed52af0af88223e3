#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "weylsym/poly.hpp"
#include "weylsym/w2bridge.hpp"
#include "weylsym/weyl.hpp"

namespace weylsym {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos));
    }
    bool accept_literal(std::string_view lit) {
        skip_ws();
        if (text.substr(pos, lit.size()) == lit) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    Integer number() {
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
            digits += text[pos++];
        if (digits.empty())
            throw ParseError("expected a number at offset " + std::to_string(pos));
        return Integer(digits);
    }
    std::string ident() {
        skip_ws();
        std::string name;
        while (pos < text.size() && (std::isalnum((unsigned char)text[pos])))
            name += text[pos++];
        if (name.empty() || std::isdigit((unsigned char)name[0]))
            throw ParseError("expected an identifier at offset " +
                             std::to_string(pos));
        return name;
    }
};

struct Summand {
    Rational coeff = 1;
    std::vector<std::pair<std::string, int>> powers;  // ident -> exponent
};

// sum := ['-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := number ['/' number] | ident ['^' number]
std::vector<Summand> parse_sum(Cursor& cur) {
    std::vector<Summand> out;
    bool neg = cur.accept('-');
    while (true) {
        Summand s;
        if (neg) s.coeff = -1;
        bool more = true;
        while (more) {
            cur.skip_ws();
            if (cur.pos < cur.text.size() &&
                std::isdigit((unsigned char)cur.text[cur.pos])) {
                Integer num = cur.number();
                Integer den = 1;
                if (cur.accept('/')) den = cur.number();
                s.coeff *= make_rational(num, den);
            } else {
                std::string name = cur.ident();
                int e = 1;
                if (cur.accept('^')) e = int(cur.number().get_si());
                s.powers.emplace_back(name, e);
            }
            more = cur.accept('*');
        }
        out.push_back(std::move(s));
        if (cur.accept('+'))
            neg = false;
        else if (cur.accept('-'))
            neg = true;
        else
            break;
    }
    return out;
}

int var_index(const VarAlphabet& a, const std::string& name) {
    for (int i = 1; i <= a.k; ++i)
        if (a.var_name(i) == name) return i;
    return 0;
}

}  // namespace

Poly Poly::parse(VarAlphabet a, std::string_view text) {
    Cursor cur{text};
    Poly p(a);
    for (const Summand& s : parse_sum(cur)) {
        Exponents e(a.k, 0);
        Rational c = s.coeff;
        for (const auto& [name, pow] : s.powers) {
            int i = var_index(a, name);
            if (i == 0) throw ParseError("unknown variable '" + name + "'");
            e[i - 1] += pow;
        }
        p.add_term(e, c);
    }
    if (!cur.eof()) throw ParseError("trailing input at offset " +
                                     std::to_string(cur.pos));
    return p;
}

namespace {

// shared body for WeylElement / W2Element term lists; zprefix/dprefix name
// the multiplication and derivative variables ("z"/"Dz" or "s"/"Ds")
template <typename AddTerm>
void parse_op_terms(Cursor& cur, int k, const std::string& zprefix,
                    const std::string& dprefix, AddTerm&& add) {
    for (const Summand& s : parse_sum(cur)) {
        Exponents alpha(k, 0), beta(k, 0);
        for (const auto& [name, pow] : s.powers) {
            bool is_d = name.size() > dprefix.size() &&
                        name.compare(0, dprefix.size(), dprefix) == 0;
            const std::string& prefix = is_d ? dprefix : zprefix;
            Exponents& slot = is_d ? beta : alpha;
            if (name.size() <= prefix.size() ||
                name.compare(0, prefix.size(), prefix) != 0)
                throw ParseError("unknown variable '" + name + "'");
            int idx = std::stoi(name.substr(prefix.size()));
            if (idx < 1 || idx > k) throw ParseError("variable index out of range");
            slot[idx - 1] += pow;
        }
        add(alpha, beta, s.coeff);
    }
}

}  // namespace

WeylElement WeylElement::parse(int k, std::string_view text) {
    Cursor cur{text};
    int m = 0;
    if (cur.accept_literal("(1/delta^")) {
        m = int(cur.number().get_si());
        cur.expect(')');
        cur.expect('*');
        cur.expect('(');
        WeylElement num(k);
        parse_op_terms(cur, k, "z", "Dz",
                       [&](const Exponents& a, const Exponents& b, const Rational& c) {
                           num.add_term_({a, b}, c);
                       });
        cur.expect(')');
        if (!cur.eof()) throw ParseError("trailing input");
        return WeylElement::localized(m, num);
    }
    WeylElement e(k);
    parse_op_terms(cur, k, "z", "Dz",
                   [&](const Exponents& a, const Exponents& b, const Rational& c) {
                       e.add_term_({a, b}, c);
                   });
    if (!cur.eof()) throw ParseError("trailing input");
    return e;
}

W2Element W2Element::parse(int k, std::string_view text) {
    Cursor cur{text};
    W2Element e(k);
    parse_op_terms(cur, k, "s", "Ds",
                   [&](const Exponents& a, const Exponents& b, const Rational& c) {
                       e.add_term({a, b}, c);
                   });
    if (!cur.eof()) throw ParseError("trailing input");
    return e;
}

}  // namespace weylsym
