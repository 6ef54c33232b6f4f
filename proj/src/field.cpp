#include "frobsat/field.hpp"

#include <string>

namespace frobsat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::InvalidQ: return "invalid-q";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Inhomogeneous: return "inhomogeneous";
    case ErrorKind::NotArtinian: return "not-artinian";
    case ErrorKind::UnitIdeal: return "unit-ideal";
    case ErrorKind::NotMPrimary: return "not-m-primary";
    case ErrorKind::NoCandidates: return "no-candidates";
    case ErrorKind::GenericityFailure: return "genericity-failure";
    case ErrorKind::InvalidElements: return "invalid-elements";
    case ErrorKind::InvalidCertificate: return "invalid-certificate";
    case ErrorKind::MissingAssertion: return "missing-assertion";
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::UnknownName: return "unknown-name";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Io: return "io";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > 0x7fffffffu || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument,
                "characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in F_p");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace frobsat
