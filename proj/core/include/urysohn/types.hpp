#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace urysohn {

/// Distances are stored as integers over a per-space scale denominator.
using Dist = std::int64_t;

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (exit code 2 at the tool level).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computed object failed its own verification (exit code 4).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace urysohn
