#pragma once

#include <stdexcept>
#include <string>

namespace commord {

/// Input outside an operation's domain (bad order, nonzero trace, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operands live in different rings (e.g. Z/4 vs Z/6, or Q(zeta_3) vs Q(zeta_6)).
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAUnit : public std::domain_error {
public:
    explicit NotAUnit(const std::string& ring)
        : std::domain_error("element is not a unit in " + ring), ring_(ring) {}
    const std::string& ring() const noexcept { return ring_; }

private:
    std::string ring_;
};

class NotInWeightSet : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OracleTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A named hypothesis of a construction failed; `hypothesis()` is the
/// machine-readable name (e.g. "omega^i-omega^j unit").
class HypothesisNotSatisfied : public std::domain_error {
public:
    HypothesisNotSatisfied(std::string hypothesis, const std::string& detail)
        : std::domain_error("hypothesis not satisfied: " + hypothesis +
                            (detail.empty() ? "" : " (" + detail + ")")),
          hypothesis_(std::move(hypothesis)), detail_(detail) {}
    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string hypothesis_;
    std::string detail_;
};

class NotACyclicConjugator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity that must hold by construction failed: an implementation bug,
/// never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace commord
