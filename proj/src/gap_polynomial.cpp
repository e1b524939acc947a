#include "asepgf/gap_polynomial.hpp"

#include <string>

#include "asepgf/errors.hpp"

namespace asepgf {

GapPolynomial::GapPolynomial(Terms terms) {
    for (auto& [e, c] : terms) {
        if (!c.is_zero())
            terms_.emplace(e, std::move(c));
    }
}

GapPolynomial GapPolynomial::monomial(const Rational& c, Exponent exponent) {
    GapPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void GapPolynomial::add_term(Exponent exponent, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational GapPolynomial::coefficient(Exponent exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational() : it->second;
}

bool GapPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<GapPolynomial::Exponent> GapPolynomial::min_exponent() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

std::optional<GapPolynomial::Exponent> GapPolynomial::max_exponent() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

bool GapPolynomial::supported_in(Exponent lo, Exponent hi) const {
    return terms_.empty() || (*min_exponent() >= lo && *max_exponent() <= hi);
}

Rational GapPolynomial::evaluate_at_one() const {
    Rational sum;
    for (const auto& [e, c] : terms_)
        sum += c;
    return sum;
}

GapPolynomial GapPolynomial::shifted(Exponent k) const {
    GapPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

GapPolynomial GapPolynomial::reflected(Exponent L) const {
    GapPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(L - e, c);
    return out;
}

GapPolynomial GapPolynomial::divided_by_monomial(const GapPolynomial& monomial) const {
    if (!monomial.is_monomial())
        throw NonInvertibleLeadingTerm("divisor is not a single nonzero monomial");
    const auto& [k, c] = *monomial.terms_.begin();
    GapPolynomial out;
    for (const auto& [e, a] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e - k, a / c);
    return out;
}

GapPolynomial GapPolynomial::with_homogeneous_degree(std::optional<Exponent> L) const {
    GapPolynomial out = *this;
    out.homogeneous_degree_ = L;
    return out;
}

GapPolynomial GapPolynomial::operator-() const {
    GapPolynomial out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

GapPolynomial& GapPolynomial::operator+=(const GapPolynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    homogeneous_degree_.reset();
    return *this;
}

GapPolynomial& GapPolynomial::operator-=(const GapPolynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    homogeneous_degree_.reset();
    return *this;
}

GapPolynomial& GapPolynomial::operator*=(const Rational& c) {
    homogeneous_degree_.reset();
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, a] : terms_)
        a *= c;
    return *this;
}

GapPolynomial operator*(const GapPolynomial& a, const GapPolynomial& b) {
    GapPolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea + eb, ca * cb);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GapPolynomial& p) {
    if (p.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        if (e != 0)
            os << "*x^" << e;
    }
    return os;
}

} // namespace asepgf
