#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qspace {

/// Exact rational value. All distance arithmetic in the library is exact;
/// equality and max are load-bearing everywhere, so there is no floating
/// point anywhere in the public surface.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "p" with optional sign. Throws Error on junk.
    static Rational parse(const std::string& text);

    /// Renders "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }

    const mpq_class& raw() const { return v_; }

    /// 2^-k, exact.
    static Rational pow2(unsigned k);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace qspace
