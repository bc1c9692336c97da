#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidchain {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[q, q^-1]: finite map exponent -> nonzero integer coefficient.
/// Canonical form holds by construction; zero is the empty map.
class Laurent {
public:
    using TermMap = std::map<std::int64_t, Integer>;

    Laurent() = default;
    Laurent(int c) { if (c != 0) terms_[0] = c; }
    explicit Laurent(Integer c) { if (c != 0) terms_[0] = std::move(c); }

    static Laurent monomial(Integer coeff, std::int64_t exp) {
        Laurent r;
        if (coeff != 0) r.terms_[exp] = std::move(coeff);
        return r;
    }
    static Laurent q(std::int64_t exp = 1) { return monomial(1, exp); }
    static Laurent one() { return Laurent(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    const TermMap& terms() const { return terms_; }

    std::int64_t min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero");
        return terms_.begin()->first;
    }
    std::int64_t max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero");
        return terms_.rbegin()->first;
    }
    const Integer& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading_coeff of zero");
        return terms_.rbegin()->second;
    }
    /// true iff exactly one term (a unit times q^k counts; zero does not)
    bool is_monomial() const { return terms_.size() == 1; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // arbitrary total order, for use as container key
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

    /// multiply by q^k
    Laurent shifted(std::int64_t k) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    Laurent pow(unsigned n) const {
        Laurent r = one(), b = *this;
        for (; n; n >>= 1) {
            if (n & 1) r *= b;
            if (n > 1) b *= b;
        }
        return r;
    }

    /// gcd of the integer coefficients (positive; 0 for the zero polynomial)
    Integer content() const {
        Integer g = 0;
        for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
        return g < 0 ? Integer(-g) : g;
    }

    Rational eval(const Rational& q0) const {
        if (q0 == 0 && !is_zero() && min_exp() < 0)
            throw std::domain_error("evaluation of negative q-power at q0 = 0");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational p = 1;
            std::int64_t n = e < 0 ? -e : e;
            for (std::int64_t i = 0; i < n; ++i) p *= q0;
            if (e < 0) p = 1 / p;
            acc += Rational(c) * p;
        }
        return acc;
    }

    std::string str() const;

private:
    void add_term(std::int64_t e, const Integer& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

/// Exact division in Z[q,q^-1]; throws if b does not divide a.
inline Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Laurent();
    Laurent rem = a, quot;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= b.max_exp() - b.min_exp()) {
        Integer lc = rem.leading_coeff();
        if (lc % b.leading_coeff() != 0) throw std::domain_error("inexact polynomial division");
        Integer c = lc / b.leading_coeff();
        std::int64_t k = rem.max_exp() - b.max_exp();
        Laurent t = Laurent::monomial(c, k);
        quot += t;
        rem -= t * b;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot;
}

namespace detail {

/// primitive part: divide by content, normalize leading coefficient positive
inline Laurent primitive_part(const Laurent& a) {
    if (a.is_zero()) return a;
    Integer ct = a.content();
    if (a.leading_coeff() < 0) ct = -ct;
    Laurent r;
    for (const auto& [e, c] : a.terms()) r += Laurent::monomial(c / ct, e);
    return r;
}

/// pseudo-remainder of primitive a by primitive b (both shifted to min_exp 0)
inline Laurent pseudo_rem(Laurent a, const Laurent& b) {
    std::int64_t db = b.max_exp();
    while (!a.is_zero() && a.max_exp() >= db) {
        Laurent scaled;
        for (const auto& [e, c] : a.terms()) scaled += Laurent::monomial(c * b.leading_coeff(), e);
        a = scaled - Laurent::monomial(a.leading_coeff(), a.max_exp() - db) * b;
    }
    return a;
}

} // namespace detail

/// gcd in Z[q,q^-1], normalized: min_exp 0, positive leading coefficient.
/// Unique up to that normalization (the units of the ring are +-q^k).
inline Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero()) {
        Laurent r = b.shifted(-b.min_exp());
        return r.leading_coeff() < 0 ? -r : r;
    }
    if (b.is_zero()) return laurent_gcd(b, a);

    Integer cg = boost::multiprecision::gcd(a.content(), b.content());
    Laurent u = detail::primitive_part(a.shifted(-a.min_exp()));
    Laurent v = detail::primitive_part(b.shifted(-b.min_exp()));
    if (u.max_exp() < v.max_exp()) std::swap(u, v);
    // primitive PRS
    while (!v.is_zero()) {
        Laurent r = detail::pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? r : detail::primitive_part(r.shifted(-r.min_exp()));
    }
    Laurent g;
    for (const auto& [e, c] : u.terms()) g += Laurent::monomial(c * cg, e);
    return g;
}

inline std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        Integer ac = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += ac.str();
        } else {
            if (ac != 1) out += ac.str();
            out += "q";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

/// Parse the canonical rendering produced by Laurent::str().
inline Laurent parse_laurent(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    auto parse_int = [&]() -> Integer {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("expected integer at position " + std::to_string(start));
        return Integer(s.substr(start, pos - start));
    };

    Laurent result;
    bool first = true;
    for (;;) {
        skip_ws();
        int sign = 1;
        if (!first) {
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (pos < s.size() && s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        first = false;

        Integer coeff = 1;
        bool have_coeff = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
        if (have_coeff) coeff = parse_int();
        std::int64_t exp = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = static_cast<std::int64_t>(parse_int());
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("expected term at position " + std::to_string(pos));
        }
        result += Laurent::monomial(sign * coeff, exp);
    }
    return result;
}

inline Laurent parse_laurent(const std::string& s) {
    std::size_t pos = 0;
    Laurent r = parse_laurent(s, pos);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing input in polynomial: " + s);
    return r;
}

} // namespace braidchain
