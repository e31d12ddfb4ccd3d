#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tatecalc/field.hpp"

namespace tate {

/// Exponent vector; one entry per ring variable.
struct Monomial {
    std::vector<std::uint32_t> exps;

    explicit Monomial(std::size_t nvars = 0) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t nvars() const { return exps.size(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
        return r;
    }

    /// Quotient this / m; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i)
            r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    bool operator==(const Monomial& m) const { return exps == m.exps; }
    bool operator!=(const Monomial& m) const { return exps != m.exps; }
    bool operator<(const Monomial& m) const { return exps < m.exps; }  // storage order only

    std::string str(const std::vector<std::string>& vars) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (!exps[i]) continue;
            if (!first) os << "*";
            os << vars[i];
            if (exps[i] > 1) os << "^" << exps[i];
            first = false;
        }
        if (first) os << "1";
        return os.str();
    }
};

enum class OrderKind { degrevlex, lex };

/// Total order on monomials refining divisibility. Variable precedence
/// is x1 > x2 > ... (input order).
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;

    bool less(const Monomial& a, const Monomial& b) const {
        if (kind == OrderKind::lex) {
            for (std::size_t i = 0; i < a.exps.size(); ++i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
            return false;
        }
        std::uint64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.exps.size(); i-- > 0;)
            if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

/// Polynomial over F_p in a fixed number of variables. Zero coefficients
/// are never stored.
class Polynomial {
public:
    Polynomial(PrimeField f, std::size_t nvars) : f_(f), nvars_(nvars) {}

    static Polynomial zero(PrimeField f, std::size_t nvars) { return Polynomial(f, nvars); }

    static Polynomial term(PrimeField f, Monomial m, std::uint32_t c) {
        Polynomial p(f, m.nvars());
        p.add_term(m, c);
        return p;
    }

    static Polynomial variable(PrimeField f, std::size_t nvars, std::size_t v) {
        Monomial m(nvars);
        m.exps[v] = 1;
        return term(f, m, 1);
    }

    static Polynomial constant(PrimeField f, std::size_t nvars, std::uint32_t c) {
        return term(f, Monomial(nvars), c % f.modulus());
    }

    const PrimeField& field() const { return f_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }

    void add_term(const Monomial& m, std::uint32_t c) {
        c %= f_.modulus();
        if (!c) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = f_.add(it->second, c);
            if (!it->second) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, f_.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r(f_, nvars_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, f_.mul(c1, c2));
        return r;
    }

    Polynomial scaled(std::uint32_t c) const {
        Polynomial r(f_, nvars_);
        for (const auto& [m, co] : terms_) r.add_term(m, f_.mul(co, c));
        return r;
    }

    Polynomial times_monomial(const Monomial& m, std::uint32_t c) const {
        Polynomial r(f_, nvars_);
        for (const auto& [mo, co] : terms_) r.add_term(mo * m, f_.mul(co, c));
        return r;
    }

    /// Leading term under the given order; polynomial must be nonzero.
    std::pair<Monomial, std::uint32_t> leading_term(const MonomialOrder& ord) const {
        TATE_CHECK(!terms_.empty(), "leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            if (c != 1 || m.is_one()) {
                os << c;
                if (!m.is_one()) os << "*";
            }
            if (!m.is_one()) os << m.str(vars);
            first = false;
        }
        return os.str();
    }

private:
    PrimeField f_;
    std::size_t nvars_;
    std::map<Monomial, std::uint32_t> terms_;
};

namespace detail {

/// Recursive-descent parser for the polynomial grammar:
///   poly   := term (("+"|"-") term)* | "-" term (("+"|"-") term)*
///   term   := coeff ("*" factor)* | factor ("*" factor)*
///   factor := var ("^" nat)?
///   coeff  := nat
/// Whitespace is insignificant; unary minus negates the whole term.
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars, PrimeField f)
        : text_(text), vars_(vars), f_(f) {}

    Polynomial parse() {
        Polynomial acc(f_, vars_.size());
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        acc = acc + parse_term(negate);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                acc = acc + parse_term(c == '-');
                skip_ws();
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
            }
        }
        return acc;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (1ull << 40)) throw ParseError("number too large", pos_);
            ++pos_;
        }
        return v;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("expected a variable name", pos_);
        std::size_t start = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek()))) name += text_[pos_++];
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
        std::size_t v = static_cast<std::size_t>(it - vars_.begin());
        std::uint64_t e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            e = parse_nat();
            if (e > 100000) throw ParseError("exponent too large", pos_);
        }
        Monomial m(vars_.size());
        m.exps[v] = static_cast<std::uint32_t>(e);
        return Polynomial::term(f_, m, 1);
    }

    Polynomial parse_term(bool negate) {
        skip_ws();
        Polynomial t = Polynomial::constant(f_, vars_.size(), 1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t c = parse_nat();
            t = Polynomial::constant(f_, vars_.size(),
                                     static_cast<std::uint32_t>(c % f_.modulus()));
        } else {
            t = t * parse_factor();
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            t = t * parse_factor();
            skip_ws();
        }
        return negate ? t.scaled(f_.neg(1)) : t;
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    PrimeField f_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a polynomial string; throws ParseError with the offending position.
inline Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars,
                             PrimeField f) {
    return detail::PolyParser(text, vars, f).parse();
}

}  // namespace tate
