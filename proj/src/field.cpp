#include "gcdim/field.hpp"

#include <limits>

namespace gcdim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  // Elimination kernels multiply residues in 128-bit, so p must fit in 63 bits.
  if (p > (std::numeric_limits<std::uint64_t>::max() >> 1)) {
    throw InputError("prime modulus too large: " + std::to_string(p));
  }
  if (!is_prime(p)) throw InputError("field modulus is not prime: " + std::to_string(p));
  return Field(p);
}

void Field::normalize(Scalar& a) const {
  if (p_ == 0) {
    a.canonicalize();
    return;
  }
  mpz_class mod(static_cast<unsigned long>(p_));
  if (a.get_den() != 1) {
    mpz_class den = a.get_den() % mod;
    if (den == 0) throw InputError("denominator divisible by the field characteristic");
    mpz_class inv_den;
    mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class num = a.get_num() * inv_den;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    a = Scalar(num);
    return;
  }
  mpz_class num = a.get_num();
  if (num >= 0 && num < mod) return;
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  a = Scalar(num);
}

Scalar Field::from_int(long long v) const {
  Scalar s(static_cast<long>(v));
  normalize(s);
  return s;
}

Scalar Field::from_rational(const Scalar& q) const {
  Scalar s = q;
  normalize(s);
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0) normalize(r);
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0) normalize(r);
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (p_ != 0) normalize(r);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar r = -a;
  if (p_ != 0) normalize(r);
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw InternalError("inverse of zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class mod(static_cast<unsigned long>(p_)), r;
  mpz_class num = a.get_num();
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
  return Scalar(r);
}

Scalar Field::parse(const std::string& text) const {
  Scalar s;
  try {
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty() || t.find_first_not_of("-0123456789/") != std::string::npos) {
      throw InputError("not a rational number: '" + text + "'");
    }
    s.set_str(t, 10);
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational number: '" + text + "'");
  }
  if (s.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  normalize(s);
  return s;
}

std::string Field::format(const Scalar& a) const {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string Field::describe() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

}  // namespace gcdim
