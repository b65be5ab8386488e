#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

#include "poscomm/errors.hpp"

namespace poscomm {

namespace detail {
struct BigRatBox;  // arbitrary-precision state, defined in rational.cpp
using int128 = __int128;
using uint128 = unsigned __int128;

// Values kept inline are restricted to [-INT64_MAX, INT64_MAX] so that
// negation and absolute value never overflow.
constexpr long long kSmallMax = 0x7fffffffffffffffLL;

inline bool fits_small(int128 v) {
  return v >= -static_cast<int128>(kSmallMax) && v <= static_cast<int128>(kSmallMax);
}

inline uint128 gcd_u128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long gcd_ll(long long a, long long b) {
  unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                : static_cast<unsigned long long>(a);
  unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                : static_cast<unsigned long long>(b);
  return static_cast<long long>(std::gcd(ua, ub));
}
}  // namespace detail

// Exact rational scalar. Stored in lowest terms with positive denominator.
// Values whose numerator and denominator fit in 64 bits live inline; anything
// larger spills into an arbitrary-precision fallback and is demoted back as
// soon as it fits again.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long n) {  // NOLINT: implicit by design (3 * x, Rational(0), ...)
    if (n == INT64_MIN) {
      *this = slow_from_ll(n);
    } else {
      num_ = n;
    }
  }
  Rational(long long num, long long den);
  Rational(int n) : Rational(static_cast<long long>(n)) {}

  ~Rational();
  Rational(const Rational& o);
  Rational(Rational&& o) noexcept;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept;

  static Rational from_string(std::string_view s);  // "p/q" or "p"
  static Rational from_double_exact(double x);      // exact binary64 value

  bool is_small() const { return big_ == nullptr; }
  bool is_zero() const { return big_ == nullptr && num_ == 0; }
  bool is_one() const { return big_ == nullptr && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  // Valid only when is_small(); used by fast paths and formatting.
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ == nullptr && b.big_ == nullptr) {
      return a.num_ == b.num_ && a.den_ == b.den_;
    }
    return eq_big(a, b);
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  static int cmp(const Rational& a, const Rational& b);

  std::string str() const;  // lowest terms, "p" or "p/q"
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<detail::BigRatBox> big_;

  Rational(long long num, long long den, std::nullptr_t) : num_(num), den_(den) {}
  static Rational make_small_reduced(detail::int128 n, detail::int128 d);

  // Out-of-line slow paths (rational.cpp).
  static Rational slow_from_ll(long long n);
  static Rational slow_make(detail::int128 n, detail::int128 d);
  static Rational big_add(const Rational& a, const Rational& b);
  static Rational big_sub(const Rational& a, const Rational& b);
  static Rational big_mul(const Rational& a, const Rational& b);
  static Rational big_div(const Rational& a, const Rational& b);
  static bool eq_big(const Rational& a, const Rational& b);
  static int cmp_big(const Rational& a, const Rational& b);
  static Rational big_negate(const Rational& a);
  int sign_big() const;
  bool is_integer_big() const;
  std::string str_big() const;
  double to_double_big() const;
  static Rational from_bigratbox(detail::BigRatBox&& box);

  friend struct detail::BigRatBox;
};

inline Rational Rational::make_small_reduced(detail::int128 n, detail::int128 d) {
  // d > 0, gcd(|n|, d) == 1, both within the small range.
  return Rational(static_cast<long long>(n), static_cast<long long>(d), nullptr);
}

inline Rational& Rational::operator+=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    detail::int128 n = static_cast<detail::int128>(num_) * o.den_ +
                       static_cast<detail::int128>(o.num_) * den_;
    detail::int128 d = static_cast<detail::int128>(den_) * o.den_;
    detail::uint128 un = n < 0 ? static_cast<detail::uint128>(-n) : static_cast<detail::uint128>(n);
    detail::uint128 g = detail::gcd_u128(un, static_cast<detail::uint128>(d));
    if (g > 1) {
      n /= static_cast<detail::int128>(g);
      d /= static_cast<detail::int128>(g);
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    *this = slow_make(n, d);
    return *this;
  }
  *this = big_add(*this, o);
  return *this;
}

inline Rational& Rational::operator-=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    detail::int128 n = static_cast<detail::int128>(num_) * o.den_ -
                       static_cast<detail::int128>(o.num_) * den_;
    detail::int128 d = static_cast<detail::int128>(den_) * o.den_;
    detail::uint128 un = n < 0 ? static_cast<detail::uint128>(-n) : static_cast<detail::uint128>(n);
    detail::uint128 g = detail::gcd_u128(un, static_cast<detail::uint128>(d));
    if (g > 1) {
      n /= static_cast<detail::int128>(g);
      d /= static_cast<detail::int128>(g);
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    *this = slow_make(n, d);
    return *this;
  }
  *this = big_sub(*this, o);
  return *this;
}

inline Rational& Rational::operator*=(const Rational& o) {
  if (big_ == nullptr && o.big_ == nullptr) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    long long g1 = detail::gcd_ll(num_, o.den_);
    long long g2 = detail::gcd_ll(den_, o.num_);
    detail::int128 n = static_cast<detail::int128>(num_ / g1) * (o.num_ / g2);
    detail::int128 d = static_cast<detail::int128>(den_ / g2) * (o.den_ / g1);
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    *this = slow_make(n, d);
    return *this;
  }
  *this = big_mul(*this, o);
  return *this;
}

inline Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  if (big_ == nullptr && o.big_ == nullptr) {
    long long g1 = detail::gcd_ll(num_, o.num_);
    long long g2 = detail::gcd_ll(den_, o.den_);
    detail::int128 n = static_cast<detail::int128>(num_ / g1) * (o.den_ / g2);
    detail::int128 d = static_cast<detail::int128>(den_ / g2) * (o.num_ / g1);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (detail::fits_small(n) && detail::fits_small(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      return *this;
    }
    *this = slow_make(n, d);
    return *this;
  }
  *this = big_div(*this, o);
  return *this;
}

inline Rational Rational::operator-() const {
  if (big_ == nullptr) return Rational(-num_, den_, nullptr);
  return big_negate(*this);
}

inline int Rational::sign() const {
  if (big_ == nullptr) return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0);
  return sign_big();
}

inline bool Rational::is_integer() const {
  if (big_ == nullptr) return den_ == 1;
  return is_integer_big();
}

inline int Rational::cmp(const Rational& a, const Rational& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) {
    detail::int128 l = static_cast<detail::int128>(a.num_) * b.den_;
    detail::int128 r = static_cast<detail::int128>(b.num_) * a.den_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return cmp_big(a, b);
}

}  // namespace poscomm
