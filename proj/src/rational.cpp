#include "knightlab/rational.hpp"

#include <stdexcept>

namespace knightlab {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q_.canonicalize();
}

Rational Rational::from_integers(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    return Rational(std::move(q));
}

Rational abs(const Rational& v) { return v < Rational(0) ? -v : v; }

}  // namespace knightlab
