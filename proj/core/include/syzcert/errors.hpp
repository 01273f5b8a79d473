#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syz {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is out of its documented domain (p not prime, n < 2, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation restricted to a particular theorem case was called outside it.
class CaseNotApplicable : public Error {
 public:
  using Error::Error;
};

/// The standing hypothesis of a lemma does not hold for the given input.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class EnumerationOverflow : public Error {
 public:
  explicit EnumerationOverflow(std::uint64_t cap)
      : Error("support enumeration exceeded cap " + std::to_string(cap)), cap_(cap) {}
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

class ScanLimitExceeded : public Error {
 public:
  explicit ScanLimitExceeded(std::uint64_t limit)
      : Error("threshold scan found no stable degree below " + std::to_string(limit)),
        limit_(limit) {}
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace syz
