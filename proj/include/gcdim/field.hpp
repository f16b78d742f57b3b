#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gcdim {

/// Raised for malformed input: bad dimensions, unknown names, non-prime moduli.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal consistency identity fails. Always a bug upstream.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using Scalar = mpq_class;

/// The base field: either Q or F_p for a word-sized prime p.
///
/// Scalars over F_p are stored as integers in [0, p) inside an mpq_class, so
/// one matrix type serves both fields. Every arithmetic entry point below
/// returns a normalized value.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long v) const;
  Scalar from_rational(const Scalar& q) const;

  void normalize(Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Parses "p", "-p", "p/q" (decimal). Over F_p the value is reduced mod p.
  Scalar parse(const std::string& text) const;
  /// Canonical text form: "p" when integral, otherwise "p/q".
  std::string format(const Scalar& a) const;
  std::string describe() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace gcdim
