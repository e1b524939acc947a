#include "asepgf/rational.hpp"

#include <stdexcept>

namespace asepgf {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (digits.size() == start)
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    if (digits[0] == '+')
        digits.erase(0, 1);
    return mpz_class(digits, 10);
}

} // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
    if (denominator == 0)
        throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0)
        return std::nullopt;
    const mpz_class num = r.numerator();
    const mpz_class den = r.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
}

} // namespace asepgf
