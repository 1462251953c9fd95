#include "stabenv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stabenv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    // mpq_class(string) accepts "p/q" but not surrounding junk; validate charset first.
    for (char c : text) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("Rational: bad character in '" + text + "'");
    }
    try {
        v_ = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
    v_.canonicalize();
}

Rational Rational::from_mpq(mpq_class v) {
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::uint64_t RandomStream::next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational RandomStream::next_rational(long num_bound, long den_bound) {
    const std::uint64_t a = next_u64();
    const std::uint64_t b = next_u64();
    long num = static_cast<long>(a % static_cast<std::uint64_t>(2 * num_bound + 1)) - num_bound;
    long den = static_cast<long>(b % static_cast<std::uint64_t>(den_bound)) + 1;
    return Rational(num, den);
}

Rational RandomStream::next_nonzero_rational(long num_bound, long den_bound) {
    for (;;) {
        Rational r = next_rational(num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

}  // namespace stabenv
