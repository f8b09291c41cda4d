#pragma once

/*
 * Exact rational arithmetic over arbitrary-precision integers.
 *
 * Values are kept reduced at all times: gcd(num, den) = 1, den > 0,
 * and zero is stored as 0/1.  All operations are exact; there is no
 * floating-point anywhere in the arithmetic.  A decimal rendering is
 * available for display only and is clearly a truncation.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace scalcurv {

using Integer = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        reduce();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // Parses "a" or "a/b" with optional leading minus signs on either part.
    static Rational parse(std::string_view s) {
        auto bad = [&] {
            return std::invalid_argument("invalid rational literal '" + std::string(s) + "'");
        };
        if (s.empty()) throw bad();
        auto is_int = [](std::string_view t) {
            if (!t.empty() && t.front() == '-') t.remove_prefix(1);
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                if (!is_int(s)) throw bad();
                return Rational(Integer(std::string(s)));
            }
            std::string_view num = s.substr(0, slash);
            std::string_view den = s.substr(slash + 1);
            if (!is_int(num) || !is_int(den)) throw bad();
            return Rational(Integer(std::string(num)), Integer(std::string(den)));
        } catch (const std::domain_error&) {
            throw;  // zero denominator
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    // Decimal rendering for display, truncated toward zero after `digits`
    // fractional places.  Display only; never used in computations.
    std::string decimal_string(unsigned digits = 6) const {
        Integer n = num_ < 0 ? Integer(-num_) : num_;
        std::string out = num_ < 0 ? "-" : "";
        out += Integer(n / den_).str();
        Integer rem = n % den_;
        if (digits == 0) return out;
        out += '.';
        for (unsigned i = 0; i < digits; ++i) {
            rem *= 10;
            out += char('0' + (rem / den_).convert_to<int>());
            rem %= den_;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_;
    Integer den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

}  // namespace scalcurv
