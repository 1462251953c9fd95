#ifndef STABENV_RATIONAL_HPP
#define STABENV_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace stabenv {

/// Arbitrary-precision rational number.
///
/// Always kept canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
/// Every operation is pure; values are freely copyable and shareable.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    /// Parses "p", "-p" or "p/q".
    explicit Rational(const std::string& text);

    static Rational from_mpq(mpq_class v);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string str() const;

    Rational operator-() const { return from_canonical(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational from_canonical(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }
    mpq_class v_;
};

Rational abs(const Rational& r);

/// Deterministic pseudo-random stream (splitmix64) used for the random-point
/// pre-checks; seeded explicitly so identical runs give identical output.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    /// Uniform-ish small rational p/q with 1 <= q <= den_bound, |p| <= num_bound.
    Rational next_rational(long num_bound = 1000, long den_bound = 7);
    /// Nonzero variant.
    Rational next_nonzero_rational(long num_bound = 1000, long den_bound = 7);

private:
    std::uint64_t state_;
};

}  // namespace stabenv

#endif
