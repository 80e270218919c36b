#include "sfs/rational.hpp"

#include <ostream>

#include "sfs/error.hpp"

namespace sfs {

Rational::Rational(long long num, long long den)
    : value_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw Error(ErrorCode::Precondition, "rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw Error(ErrorCode::Precondition, "rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error(ErrorCode::Precondition, "rational division by zero");
    return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0 || text.empty())
        throw Error(ErrorCode::Parse, "malformed rational '" + text + "'");
    if (v.get_den() == 0)
        throw Error(ErrorCode::Parse, "rational with zero denominator '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace sfs
