#ifndef ASEPGF_RATIONAL_HPP
#define ASEPGF_RATIONAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace asepgf {

// Exact rational number in canonical form: positive denominator, reduced,
// zero stored as 0/1. Every constructor and operator canonicalizes.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const mpz_class& value) : value_(value) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    Rational(long numerator, long denominator)
        : Rational(mpz_class(numerator), mpz_class(denominator)) {}

    // Accepts "p/q", "p" and an optional leading sign. Throws
    // std::invalid_argument on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Always "num/den", also for integers.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

// Exact square root when both numerator and denominator are perfect squares.
// Returns the nonnegative root.
std::optional<Rational> exact_sqrt(const Rational& r);

} // namespace asepgf

#endif // ASEPGF_RATIONAL_HPP
