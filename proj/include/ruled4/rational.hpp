// Exact scalars shared by every module.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace ruled4 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

/// Raised when an input lies outside the parameter domain of an operation.
/// The message names the violated condition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Accepts "p/q", integers and finite decimals ("0.25", "-1.5").
/// Anything else, including repeating-decimal notations such as "0.(3)"
/// or "0.333...", is rejected with DomainError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "n" for integers.
std::string format_rational(const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Narrowing that throws instead of wrapping.
std::int64_t to_int64(const Integer& x);

}  // namespace ruled4
