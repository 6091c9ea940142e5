#include "qspace/rational.hpp"

#include "qspace/error.hpp"

#include <ostream>

namespace qspace {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("Rational: empty string");
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw Error("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::pow2(unsigned k) {
    mpz_class den = 1;
    den <<= k;
    return Rational(mpq_class(mpz_class(1), den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace qspace
