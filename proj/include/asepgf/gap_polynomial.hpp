#ifndef ASEPGF_GAP_POLYNOMIAL_HPP
#define ASEPGF_GAP_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <ostream>

#include "asepgf/rational.hpp"

namespace asepgf {

// Laurent polynomial in the position marker x with exact rational
// coefficients. The second endpoint marker y is eliminated by setting y = 1:
// when homogeneous_degree() is L, the monomial x^a stands for x^a y^(L-a).
//
// Zero coefficients are never stored. Arithmetic results do not carry the
// homogeneous degree; it is attached explicitly to final walk-count
// coefficients with with_homogeneous_degree(). Equality compares terms only.
class GapPolynomial {
public:
    using Exponent = long;
    using Terms = std::map<Exponent, Rational>;

    GapPolynomial() = default;
    explicit GapPolynomial(Terms terms);

    static GapPolynomial constant(const Rational& c) { return monomial(c, 0); }
    static GapPolynomial monomial(const Rational& c, Exponent exponent);

    const Terms& terms() const { return terms_; }
    Rational coefficient(Exponent exponent) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // Zero or a pure x^0 term.
    bool is_constant() const;
    std::optional<Exponent> min_exponent() const;
    std::optional<Exponent> max_exponent() const;
    bool supported_in(Exponent lo, Exponent hi) const;

    Rational evaluate_at_one() const;
    // Multiply by x^k.
    GapPolynomial shifted(Exponent k) const;
    // Reflect x^a to x^(L-a); the lattice symmetry (u, v) -> (v, u).
    GapPolynomial reflected(Exponent L) const;

    // Exact division by a single nonzero monomial c*x^k.
    // Throws NonInvertibleLeadingTerm otherwise.
    GapPolynomial divided_by_monomial(const GapPolynomial& monomial) const;

    std::optional<Exponent> homogeneous_degree() const { return homogeneous_degree_; }
    GapPolynomial with_homogeneous_degree(std::optional<Exponent> L) const;

    GapPolynomial operator-() const;
    GapPolynomial& operator+=(const GapPolynomial& o);
    GapPolynomial& operator-=(const GapPolynomial& o);
    GapPolynomial& operator*=(const Rational& c);

    friend GapPolynomial operator+(GapPolynomial a, const GapPolynomial& b) { return a += b; }
    friend GapPolynomial operator-(GapPolynomial a, const GapPolynomial& b) { return a -= b; }
    friend GapPolynomial operator*(const GapPolynomial& a, const GapPolynomial& b);
    friend GapPolynomial operator*(GapPolynomial a, const Rational& c) { return a *= c; }
    friend GapPolynomial operator*(const Rational& c, GapPolynomial a) { return a *= c; }

    friend bool operator==(const GapPolynomial& a, const GapPolynomial& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const GapPolynomial& p);

private:
    void add_term(Exponent exponent, const Rational& c);

    Terms terms_;
    std::optional<Exponent> homogeneous_degree_;
};

} // namespace asepgf

#endif // ASEPGF_GAP_POLYNOMIAL_HPP
