#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "hankel/errors.hpp"

namespace hankel {

using BigInt = mpz_class;

// Arbitrary-precision exact rational, the universal scalar of this library.
// Invariant: canonical form after every operation, i.e. denominator > 0 and
// gcd(|numerator|, denominator) = 1. No floating point anywhere.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(const BigInt& n) : q_(n) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    // Accepts "p" or "p/q" (optional leading '-' on p, and on q for
    // lenience; the result is canonicalized either way).
    static Rat parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rat(parse_int(text), BigInt(1));
        const BigInt num = parse_int(text.substr(0, slash));
        const std::string den_text = text.substr(slash + 1);
        const BigInt den = parse_int(den_text);
        if (den == 0)
            throw ParseError("rational with zero denominator: '" + text + "'");
        return Rat(num, den);
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Canonical serialization: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    static BigInt parse_int(const std::string& s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        if (i == s.size())
            throw ParseError("not an integer: '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("not an integer: '" + s + "'");
        return BigInt(s, 10);
    }

    mpq_class q_;
};

// base^e with the empty-product convention 0^0 = 1, so that beta = 0 and
// r = 0 are legal parameters everywhere. Negative exponents require a
// nonzero base.
inline Rat pow(const Rat& base, long e) {
    if (e == 0)
        return Rat(1);
    if (base.is_zero()) {
        if (e < 0)
            throw std::domain_error("Rat: 0 raised to a negative power");
        return Rat(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), a);
    return e > 0 ? Rat(num, den) : Rat(den, num);
}

} // namespace hankel
