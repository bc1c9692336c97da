#pragma once

#include <stdexcept>
#include <string>

#include "braidchain/laurent.hpp"

namespace braidchain {

/// Element of Q(q) as a reduced fraction of Laurent polynomials.
/// Canonical form: gcd(num, den) is a unit, den has min_exp 0 and positive
/// leading coefficient. Equality is then plain structural equality, so all
/// verification downstream is exact with no tolerance anywhere.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(int c) : num_(c) {}
    RatFunc(Laurent n) : num_(std::move(n)) {}
    RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        normalize();
    }

    static RatFunc q(std::int64_t exp = 1) { return RatFunc(Laurent::q(exp)); }
    static RatFunc one() { return RatFunc(1); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ - b.num_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(q)");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// Exact value at q = q0; throws on a pole.
    Rational eval(const Rational& q0) const {
        Rational d = den_.eval(q0);
        if (d == 0) throw std::domain_error("pole at q0");
        return num_.eval(q0) / d;
    }

    /// Sign of the value for real q slightly above 1. Well defined only for
    /// nonzero monomial/monomial fractions (+-q^k), which is all the spectra
    /// ever need; throws otherwise.
    int sign_near_one() const {
        if (is_zero()) throw std::domain_error("sign of zero");
        if (!num_.is_monomial() || !den_.is_monomial())
            throw std::domain_error("sign_near_one requires a unit +-q^k");
        int s = num_.leading_coeff() < 0 ? -1 : 1;
        return den_.leading_coeff() < 0 ? -s : s;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Laurent::one();
            return;
        }
        Laurent g = laurent_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        std::int64_t k = den_.min_exp();
        num_ = num_.shifted(-k);
        den_ = den_.shifted(-k);
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    Laurent num_;
    Laurent den_ = Laurent::one();
};

inline RatFunc parse_ratfunc(const std::string& s) {
    // either a bare polynomial or "(num)/(den)"
    if (!s.empty() && s.front() == '(') {
        std::size_t depth = 0, split = std::string::npos;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')') {
                --depth;
                if (depth == 0 && i + 1 < s.size() && s[i + 1] == '/') {
                    split = i + 1;
                    break;
                }
            }
        }
        if (split != std::string::npos) {
            std::string ns = s.substr(1, split - 2);
            std::string ds = s.substr(split + 2, s.size() - split - 3);
            if (s[split + 1] != '(' || s.back() != ')')
                throw std::invalid_argument("malformed fraction: " + s);
            return RatFunc(parse_laurent(ns), parse_laurent(ds));
        }
    }
    return RatFunc(parse_laurent(s));
}

/// q - q^-1, ubiquitous deformation factor
inline RatFunc q_minus_qinv() { return RatFunc(Laurent::q(1) - Laurent::q(-1)); }
/// q + q^-1
inline RatFunc q_plus_qinv() { return RatFunc(Laurent::q(1) + Laurent::q(-1)); }

} // namespace braidchain
