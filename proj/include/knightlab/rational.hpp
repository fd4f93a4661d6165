#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace knightlab {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design of arithmetic
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    static Rational from_integers(const mpz_class& num, const mpz_class& den);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    double to_double() const { return q_.get_d(); }
    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    // Parses "p/q" or "p"; throws std::invalid_argument otherwise.
    static Rational parse(const std::string& text);

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational l, const Rational& r) { return l += r; }
    friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
    friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
    friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
    friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.q_)); }

    friend bool operator==(const Rational& l, const Rational& r) { return l.q_ == r.q_; }
    friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
        int c = cmp(l.q_, r.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

Rational abs(const Rational& v);

}  // namespace knightlab
