#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hav {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Parses "n", "-n" or "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// Canonical text: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& x);

bool is_prime(long p);

/// p-adic valuation of a nonzero rational; nullopt stands for +infinity.
std::optional<long> padic_valuation(const Rational& x, long p);

/// v_p of a positive integer given as a long.
long padic_valuation(long n, long p);

/// A norm value stored as log_p(norm), exactly. The empty state is -infinity,
/// which is the norm of zero.
class LogNorm {
 public:
  LogNorm() = default;
  explicit LogNorm(Rational value) : value_(std::move(value)) {}

  static LogNorm neg_inf() { return LogNorm(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const LogNorm& a, const LogNorm& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() == b.is_neg_inf();
    return *a.value_ == *b.value_;
  }
  friend std::strong_ordering operator<=>(const LogNorm& a, const LogNorm& b) {
    if (a.is_neg_inf() && b.is_neg_inf()) return std::strong_ordering::equal;
    if (a.is_neg_inf()) return std::strong_ordering::less;
    if (b.is_neg_inf()) return std::strong_ordering::greater;
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// log of a product of norms.
  friend LogNorm operator+(const LogNorm& a, const LogNorm& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return LogNorm(Rational(*a.value_ + *b.value_));
  }

  std::string to_string() const { return is_neg_inf() ? "-inf" : format_rational(*value_); }

 private:
  std::optional<Rational> value_;
};

inline std::ostream& operator<<(std::ostream& os, const LogNorm& n) { return os << n.to_string(); }

/// Binomial coefficient C(n, k) as a plain count; 0 outside 0 <= k <= n.
long long binomial(int n, int k);

}  // namespace hav
