#pragma once

#include <stdexcept>
#include <string>

namespace qortho {

// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter or argument outside the validity domain of an operation.
class DomainViolation : public Error {
  using Error::Error;
};

// A denominator q-shifted factorial hit (or got too close to) zero.
class DenominatorPole : public Error {
  using Error::Error;
};

// A nonterminating series failed its convergence condition or term budget.
class NonConvergent : public Error {
  using Error::Error;
};

// Requested a recurrence evaluation for a family that has none.
class NoRecurrence : public Error {
  using Error::Error;
};

// Degree above the configured cap.
class DegreeOverflow : public Error {
  using Error::Error;
};

// Generating-function argument outside the convergence disc.
class OutsideDisc : public Error {
  using Error::Error;
};

// The normalizing constant of an attached measure vanished.
class PoleInNormalizer : public Error {
  using Error::Error;
};

// A discrete sum could not establish its tail bound within budget.
class TailBoundFailure : public Error {
  using Error::Error;
};

// A real-line integrand failed to decay while expanding the domain.
class NonDecayingIntegrand : public Error {
  using Error::Error;
};

class MaxPanelsExceeded : public Error {
  using Error::Error;
};

class MaxNodesExceeded : public Error {
  using Error::Error;
};

// Check id not present in the verification catalog.
class UnknownCheckId : public Error {
  using Error::Error;
};

}  // namespace qortho
