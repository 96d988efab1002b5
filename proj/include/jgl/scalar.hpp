#pragma once

// Exact scalars over the rationals or a prime field F_p (p >= 5).

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Scalar;

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t checked_narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("rational arithmetic overflow (exceeds 64-bit numerator/denominator)");
  }
  return static_cast<std::int64_t>(v);
}

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// The base ring: either Q (characteristic 0) or F_p with p prime and p >= 5.
class Ring {
 public:
  Ring() = default;

  static Ring rational() { return Ring(0); }

  static Ring prime_field(std::uint32_t p) {
    if (!detail::is_prime(p)) throw Error("F_p requires a prime modulus, got " + std::to_string(p));
    if (p < 5) throw Error("F_p requires p >= 5 so that 2 and 3 are invertible, got " + std::to_string(p));
    if (p > 65521) throw Error("prime modulus too large (limit 65521)");
    return Ring(p);
  }

  /// Parses "q" or "f<p>" (e.g. "f5").
  static Ring parse(std::string_view name) {
    if (name == "q" || name == "Q") return rational();
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
      std::uint32_t p = 0;
      for (char c : name.substr(1)) {
        if (c < '0' || c > '9') throw Error("unknown ring '" + std::string(name) + "'");
        p = p * 10 + static_cast<std::uint32_t>(c - '0');
        if (p > 1000000) throw Error("unknown ring '" + std::string(name) + "'");
      }
      return prime_field(p);
    }
    throw Error("unknown ring '" + std::string(name) + "'");
  }

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }

  /// True iff the integers 2, 3, ..., n are all invertible.
  bool inverts_up_to(int n) const { return p_ == 0 || n < static_cast<int>(p_); }

  void require_invertible_up_to(int n, std::string_view what) const {
    if (!inverts_up_to(n)) {
      throw Error(std::string(what) + ": ring " + name() + " does not invert 2.." + std::to_string(n));
    }
  }

  inline Scalar zero() const;
  inline Scalar one() const;
  inline Scalar from_int(long long n) const;
  inline Scalar from_fraction(long long num, long long den) const;
  /// Parses "n" or "a/b"; F_p elements must be written as 0 <= n < p.
  inline Scalar parse_scalar(std::string_view text) const;
  /// All elements 0, 1, ..., p-1 of a prime field.
  inline std::vector<Scalar> elements() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  friend class Scalar;
  explicit Ring(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of a Ring. Rationals are kept in lowest terms with positive
/// denominator; F_p elements are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar rational(long long num, long long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Scalar s;
    s.p_ = 0;
    s.set_rational(num, den);
    return s;
  }

  static Scalar modular(long long v, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    s.num_ = r;
    s.den_ = 1;
    return s;
  }

  Ring ring() const { return Ring(p_); }
  std::uint32_t modulus() const { return p_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const {
    Scalar r = *this;
    if (p_ == 0) {
      r.num_ = -num_;
    } else if (num_ != 0) {
      r.num_ = p_ - num_;
    }
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    same_ring(o);
    if (p_ != 0) {
      num_ += o.num_;
      if (num_ >= p_) num_ -= p_;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      set_int(static_cast<__int128>(num_) + o.num_);
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_reduced(n, d);
    return *this;
  }

  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    same_ring(o);
    if (p_ != 0) {
      num_ = (num_ * o.num_) % p_;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      set_int(static_cast<__int128>(num_) * o.num_);
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_reduced(n, d);
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (p_ == 0) {
      Scalar r;
      r.p_ = 0;
      r.num_ = num_ < 0 ? -den_ : den_;
      r.den_ = num_ < 0 ? -num_ : num_;
      return r;
    }
    // Fermat: a^(p-2).
    std::int64_t base = num_, result = 1;
    std::uint32_t e = p_ - 2;
    while (e > 0) {
      if (e & 1u) result = (result * base) % p_;
      base = (base * base) % p_;
      e >>= 1u;
    }
    Scalar r;
    r.p_ = p_;
    r.num_ = result;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Total order: numeric for Q, by representative in [0, p) for F_p.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return a.p_ <=> b.p_;
    if (a.p_ != 0 || (a.den_ == 1 && b.den_ == 1)) return a.num_ <=> b.num_;
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" or "a/b" in lowest terms.
  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void same_ring(const Scalar& o) const {
    if (p_ != o.p_) throw Error("mixed-ring scalar arithmetic");
  }
  void set_int(__int128 v) {
    num_ = detail::checked_narrow(v);
    den_ = 1;
  }
  void set_rational(long long n, long long d) { set_reduced(n, d); }
  void set_reduced(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    num_ = detail::checked_narrow(n);
    den_ = detail::checked_narrow(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
};

inline Scalar Ring::zero() const { return p_ == 0 ? Scalar::rational(0) : Scalar::modular(0, p_); }
inline Scalar Ring::one() const { return p_ == 0 ? Scalar::rational(1) : Scalar::modular(1, p_); }
inline Scalar Ring::from_int(long long n) const { return p_ == 0 ? Scalar::rational(n) : Scalar::modular(n, p_); }

inline Scalar Ring::from_fraction(long long num, long long den) const {
  if (den == 0) throw Error("zero denominator");
  if (p_ == 0) return Scalar::rational(num, den);
  return from_int(num) / from_int(den);
}

inline Scalar Ring::parse_scalar(std::string_view text) const {
  auto parse_int = [&](std::string_view s, bool allow_sign) -> long long {
    if (s.empty()) throw Error("malformed scalar '" + std::string(text) + "'");
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      if (!allow_sign) throw Error("malformed scalar '" + std::string(text) + "'");
      neg = s[0] == '-';
      s.remove_prefix(1);
      if (s.empty()) throw Error("malformed scalar '" + std::string(text) + "'");
    }
    long long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw Error("malformed scalar '" + std::string(text) + "'");
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) throw Error("scalar out of range '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
  };
  if (p_ != 0) {
    long long v = parse_int(text, false);
    if (v >= static_cast<long long>(p_)) {
      throw Error("F_" + std::to_string(p_) + " scalar '" + std::string(text) + "' out of range [0, p)");
    }
    return Scalar::modular(v, p_);
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar::rational(parse_int(text, true));
  long long n = parse_int(text.substr(0, slash), true);
  long long d = parse_int(text.substr(slash + 1), false);
  if (d == 0) throw Error("malformed scalar '" + std::string(text) + "': zero denominator");
  Scalar s = Scalar::rational(n, d);
  if (s.numerator() != n || s.denominator() != d) {
    throw Error("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return s;
}

inline std::vector<Scalar> Ring::elements() const {
  if (p_ == 0) throw Error("cannot enumerate the elements of Q");
  std::vector<Scalar> out;
  out.reserve(p_);
  for (std::uint32_t i = 0; i < p_; ++i) out.push_back(Scalar::modular(i, p_));
  return out;
}

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Ring& ring, std::size_t n) { return Vector(n, ring.zero()); }

inline Vector unit_vector(const Ring& ring, std::size_t n, std::size_t i) {
  Vector v(n, ring.zero());
  v.at(i) = ring.one();
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

inline Vector add(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector sub(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector scale(const Scalar& c, Vector v) {
  for (auto& s : v) s *= c;
  return v;
}

/// Iterates all vectors of F_p^n in lexicographic order (first coordinate most significant).
class FpVectorOdometer {
 public:
  FpVectorOdometer(const Ring& ring, std::size_t n) : ring_(ring), digits_(n, 0), current_(n, ring.zero()) {
    if (!ring.is_prime_field()) throw Error("enumeration requires a prime field");
  }
  const Vector& value() const { return current_; }
  /// Advances; returns false after the last vector.
  bool next() {
    const auto p = ring_.characteristic();
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < p) {
        current_[i] = Scalar::modular(digits_[i], p);
        return true;
      }
      digits_[i] = 0;
      current_[i] = ring_.zero();
    }
    return false;
  }

 private:
  Ring ring_;
  std::vector<std::uint32_t> digits_;
  Vector current_;
};

}  // namespace jgl
