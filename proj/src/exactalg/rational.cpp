#include "skein/exactalg/rational.hpp"

#include <deque>
#include <mutex>

#include "skein/error.hpp"

namespace skein {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonParallelComponents: return "NonParallelComponents";
    case ErrorCode::MalformedDiagram: return "MalformedDiagram";
    case ErrorCode::StateOutsideMarkedSet: return "StateOutsideMarkedSet";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::NonPrimitiveClass: return "NonPrimitiveClass";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::UnsupportedSuperposition: return "UnsupportedSuperposition";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotRealDiagram: return "NotRealDiagram";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

const BigInt& factorial(unsigned n) {
  // deque keeps references stable while the table grows
  static std::deque<BigInt> table{BigInt(1)};
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const auto next = static_cast<unsigned long>(table.size());
    table.push_back(table.back() * next);
  }
  return table[n];
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt int_pow(std::int64_t x, unsigned e) {
  BigInt base(static_cast<long>(x));
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace skein
