#ifndef ASEPGF_ERRORS_HPP
#define ASEPGF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asepgf {

// Algebra failures. These indicate either bad input to a series operation or,
// when raised from closed-form code, an inconsistency in the computation.

class NonInvertibleLeadingTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotASquare : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonzeroLowOrderTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A generating function that must be free of the position marker x was not.
class XDependenceViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A walk-count coefficient carried an x-exponent outside [0, L].
class SupportViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An oracle enumeration produced a state the model forbids.
class OracleInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SingularChain : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CorrespondenceViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace asepgf

#endif // ASEPGF_ERRORS_HPP
