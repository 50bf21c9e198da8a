#include "hav/rational.hpp"

#include <cctype>

#include "hav/errors.hpp"

namespace hav {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::BadAutomorphism: return "BadAutomorphism";
    case ErrorKind::BasisNotUnimodular: return "BasisNotUnimodular";
    case ErrorKind::NotGalois: return "NotGalois";
    case ErrorKind::ValuationUnavailable: return "ValuationUnavailable";
    case ErrorKind::AntisymmetryViolated: return "AntisymmetryViolated";
    case ErrorKind::JacobiViolated: return "JacobiViolated";
    case ErrorKind::EmbeddingInvalid: return "EmbeddingInvalid";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::ActionNotChainMap: return "ActionNotChainMap";
    case ErrorKind::NotBorelShape: return "NotBorelShape";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::optional<long> padic_valuation(const Rational& x, long p) {
  if (is_zero(x)) return std::nullopt;
  Integer num = x.get_num();
  Integer den = x.get_den();
  Integer pp(p);
  long v = 0;
  while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
    num /= pp;
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
    den /= pp;
    --v;
  }
  return v;
}

long padic_valuation(long n, long p) {
  long v = 0;
  if (n == 0) return 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hav
