#include "poscomm/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <ostream>

namespace poscomm {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using BigRat = mp::cpp_rational;

namespace detail {
struct BigRatBox {
  BigRat v;
};
}  // namespace detail

namespace {

BigInt int128_to_big(detail::int128 v) {
  bool neg = v < 0;
  detail::uint128 u = neg ? static_cast<detail::uint128>(-v) : static_cast<detail::uint128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt lo = static_cast<std::uint64_t>(u & 0xffffffffffffffffULL);
  BigInt r = (hi << 64) | lo;
  if (neg) r = -r;
  return r;
}

}  // namespace

Rational::~Rational() = default;

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<detail::BigRatBox>(*o.big_);
}

Rational::Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(std::move(o.big_)) {
  o.num_ = 0;
  o.den_ = 1;
}

Rational& Rational::operator=(const Rational& o) {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<detail::BigRatBox>(*o.big_) : nullptr;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
  if (this != &o) {
    num_ = o.num_;
    den_ = o.den_;
    big_ = std::move(o.big_);
    o.num_ = 0;
    o.den_ = 1;
  }
  return *this;
}

Rational Rational::from_bigratbox(detail::BigRatBox&& box) {
  const BigInt& n = mp::numerator(box.v);
  const BigInt& d = mp::denominator(box.v);
  if (n >= -detail::kSmallMax && n <= detail::kSmallMax && d <= detail::kSmallMax) {
    return Rational(n.convert_to<long long>(), d.convert_to<long long>(), nullptr);
  }
  Rational r;
  r.big_ = std::make_unique<detail::BigRatBox>(std::move(box));
  return r;
}

namespace {
BigRat big_value(const Rational& r, const detail::BigRatBox* box) {
  if (box != nullptr) return box->v;
  return BigRat(BigInt(r.small_num()), BigInt(r.small_den()));
}
}  // namespace

Rational Rational::slow_from_ll(long long n) {
  return from_bigratbox(detail::BigRatBox{BigRat(BigInt(n))});
}

Rational Rational::slow_make(detail::int128 n, detail::int128 d) {
  return from_bigratbox(detail::BigRatBox{BigRat(int128_to_big(n), int128_to_big(d))});
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw Error("Rational: zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    *this = from_bigratbox(detail::BigRatBox{BigRat(BigInt(num), BigInt(den))});
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = detail::gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::big_add(const Rational& a, const Rational& b) {
  return from_bigratbox(
      detail::BigRatBox{BigRat(big_value(a, a.big_.get()) + big_value(b, b.big_.get()))});
}

Rational Rational::big_sub(const Rational& a, const Rational& b) {
  return from_bigratbox(
      detail::BigRatBox{BigRat(big_value(a, a.big_.get()) - big_value(b, b.big_.get()))});
}

Rational Rational::big_mul(const Rational& a, const Rational& b) {
  return from_bigratbox(
      detail::BigRatBox{BigRat(big_value(a, a.big_.get()) * big_value(b, b.big_.get()))});
}

Rational Rational::big_div(const Rational& a, const Rational& b) {
  return from_bigratbox(
      detail::BigRatBox{BigRat(big_value(a, a.big_.get()) / big_value(b, b.big_.get()))});
}

bool Rational::eq_big(const Rational& a, const Rational& b) {
  // A canonical big value never fits the small range, so small == big is
  // impossible.
  if (a.is_small() != b.is_small()) return false;
  return a.big_->v == b.big_->v;
}

int Rational::cmp_big(const Rational& a, const Rational& b) {
  BigRat va = big_value(a, a.big_.get());
  BigRat vb = big_value(b, b.big_.get());
  return va < vb ? -1 : (va > vb ? 1 : 0);
}

Rational Rational::big_negate(const Rational& a) {
  return from_bigratbox(detail::BigRatBox{BigRat(-a.big_->v)});
}

int Rational::sign_big() const { return big_->v.sign(); }

bool Rational::is_integer_big() const { return mp::denominator(big_->v) == 1; }

Rational Rational::from_string(std::string_view s) {
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  s = s.substr(begin, end - begin);
  if (s.empty()) throw ParseError("Rational: empty string");

  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw ParseError("Rational: bad integer");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("Rational: bad integer");
    for (size_t j = i; j < t.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) {
        throw ParseError("Rational: bad character in '" + std::string(t) + "'");
      }
    }
    return BigInt(std::string(t));
  };

  size_t slash = s.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    num = parse_int(s);
    den = 1;
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("Rational: zero denominator");
  }
  return from_bigratbox(detail::BigRatBox{BigRat(num, den)});
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw Error("Rational: non-finite double");
  if (x == 0.0) return Rational();
  int e = 0;
  double m = std::frexp(x, &e);                          // x = m * 2^e, |m| in [0.5, 1)
  auto sig = static_cast<long long>(std::ldexp(m, 53));  // integral, |sig| <= 2^53
  int k = e - 53;                                        // x = sig * 2^k
  BigInt n = sig;
  BigInt d = 1;
  if (k >= 0) {
    n <<= k;
  } else {
    d <<= -k;
  }
  return from_bigratbox(detail::BigRatBox{BigRat(n, d)});
}

std::string Rational::str_big() const {
  const BigInt& n = mp::numerator(big_->v);
  const BigInt& d = mp::denominator(big_->v);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string Rational::str() const {
  if (big_) return str_big();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double_big() const { return big_->v.convert_to<double>(); }

double Rational::to_double() const {
  if (big_) return to_double_big();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace poscomm
