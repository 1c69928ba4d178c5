// Exact scalars: rational numbers with overflow-checked 128-bit integer
// parts, or elements of a prime field F_p. No floating point anywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmod {

using int128 = __int128;

namespace detail {

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("scalar: addition overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("scalar: multiplication overflow");
  return r;
}

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string int128_str(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    if (digit < 0) digit = -digit;
    s += static_cast<char>('0' + digit);
    v /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("scalar: element not invertible mod p");
  return ((t % p) + p) % p;
}

}  // namespace detail

/// Which field a scalar lives in: p == 0 means the rationals, p > 0 means F_p.
struct FieldTag {
  std::int64_t p = 0;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const FieldTag& a, const FieldTag& b) { return a.p == b.p; }
  friend bool operator!=(const FieldTag& a, const FieldTag& b) { return a.p != b.p; }

  std::string text() const { return is_rational() ? "Q" : "Fp:" + std::to_string(p); }
};

class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(int128 num, int128 den = 1) {
    Scalar s;
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
  }

  static Scalar fp(std::int64_t value, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("scalar: prime must be >= 2");
    Scalar s;
    s.p_ = p;
    s.num_ = ((value % p) + p) % p;
    return s;
  }

  static Scalar of_int(const FieldTag& f, std::int64_t n) {
    return f.is_rational() ? rational(n) : fp(n, f.p);
  }
  static Scalar zero(const FieldTag& f) { return of_int(f, 0); }
  static Scalar one(const FieldTag& f) { return of_int(f, 1); }

  FieldTag field() const { return FieldTag{p_}; }
  bool is_zero() const { return num_ == 0; }
  int128 num() const { return num_; }
  int128 den() const { return den_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    Scalar r;
    r.p_ = a.p_;
    if (a.p_) {
      r.num_ = (static_cast<std::int64_t>(a.num_) + static_cast<std::int64_t>(b.num_)) % a.p_;
    } else {
      r.num_ = detail::checked_add(detail::checked_mul(a.num_, b.den_),
                                   detail::checked_mul(b.num_, a.den_));
      r.den_ = detail::checked_mul(a.den_, b.den_);
      r.normalize();
    }
    return r;
  }

  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    if (r.p_)
      r.num_ = (r.p_ - r.num_) % r.p_;
    else
      r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    Scalar r;
    r.p_ = a.p_;
    if (a.p_) {
      r.num_ = (static_cast<std::int64_t>(a.num_) * static_cast<std::int64_t>(b.num_)) % a.p_;
    } else {
      r.num_ = detail::checked_mul(a.num_, b.num_);
      r.den_ = detail::checked_mul(a.den_, b.den_);
      r.normalize();
    }
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("scalar: division by zero");
    Scalar r;
    r.p_ = p_;
    if (p_) {
      r.num_ = detail::mod_inverse(static_cast<std::int64_t>(num_), p_);
    } else {
      r.num_ = num_ < 0 ? -den_ : den_;
      r.den_ = num_ < 0 ? -num_ : num_;
    }
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    a.same_field(b);
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    if (p_) return detail::int128_str(num_);
    if (den_ == 1) return detail::int128_str(num_);
    return detail::int128_str(num_) + "/" + detail::int128_str(den_);
  }

  /// Parses "n", "-n" or "n/m" into the given field.
  static Scalar parse(const FieldTag& f, const std::string& text) {
    const auto slash = text.find('/');
    auto to_int = [](const std::string& s) -> std::int64_t {
      std::size_t pos = 0;
      const std::int64_t v = std::stoll(s, &pos);
      if (pos != s.size()) throw std::invalid_argument("scalar: bad integer '" + s + "'");
      return v;
    };
    if (slash == std::string::npos) return of_int(f, to_int(text));
    const std::int64_t num = to_int(text.substr(0, slash));
    const std::int64_t den = to_int(text.substr(slash + 1));
    if (f.is_rational()) return rational(num, den);
    return fp(num, f.p) / fp(den, f.p);
  }

 private:
  void same_field(const Scalar& other) const {
    if (p_ != other.p_) throw std::invalid_argument("scalar: field mismatch");
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("scalar: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ != 1) {
      const int128 g = detail::gcd128(num_, den_);
      num_ /= g;
      den_ /= g;
    }
  }

  int128 num_ = 0;
  int128 den_ = 1;       // rationals only; 1 in F_p
  std::int64_t p_ = 0;   // 0 = rationals
};

}  // namespace qmod
