#ifndef RATGENUS_ERRORS_HPP
#define RATGENUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratgenus {

// Base class for all declared failure modes. Each subclass corresponds to a
// contract violation or an unsupported combination that is reported rather
// than guessed around.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two certified bounds exclude each other: one of them was derived from a
// theorem whose hypotheses do not hold, or there is a bug upstream.
class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

// A knot-spec combination for which no implemented formula applies.
class UnsupportedComposition : public Error {
 public:
  using Error::Error;
};

// Connect-sum formula selection needs the triviality status of both summands.
class UnknownTriviality : public Error {
 public:
  using Error::Error;
};

class IdentityMonodromy : public Error {
 public:
  using Error::Error;
};

class NotParabolic : public Error {
 public:
  using Error::Error;
};

// Monodromy with zero lower-left entry and trace -2: the fiber curve bounds
// with an annulus and the horizontal-surface equations do not apply.
class VerticalCase : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class MonogonPresent : public Error {
 public:
  using Error::Error;
};

class OddIndexCount : public Error {
 public:
  using Error::Error;
};

class NoCaps : public Error {
 public:
  using Error::Error;
};

class NonzeroGenus : public Error {
 public:
  using Error::Error;
};

class ParameterConstraintViolated : public Error {
 public:
  using Error::Error;
};

// Raised if a closed-form bound that must hold by arithmetic fails; indicates
// a transcription bug, never a data error.
class InternalBoundViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ratgenus

#endif  // RATGENUS_ERRORS_HPP
