#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace iecp {

/// Exact arbitrary-precision rational; every feasibility decision is made in
/// this type, never in floating point.
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", an integer, or a decimal literal such as "0.125" or "2.5e-3".
/// Decimals are converted exactly (0.1 is 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace iecp
