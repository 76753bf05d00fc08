#ifndef YX_RATIONAL_HPP
#define YX_RATIONAL_HPP

// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and a
// machine-word prime field.  Everything downstream is templated over one of
// these two scalar types; both are exact, there is no floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace yx {

using Rat = mpq_class;

inline Rat ratFrom(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool isZero(const Rat& r) { return sgn(r) == 0; }

inline std::string toString(const Rat& r) { return r.get_str(); }

// Integer power with signed exponent (used by argument-shift binomials).
inline Rat ratPow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat acc(1);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) {
    if (isZero(acc)) throw std::domain_error("ratPow: negative power of zero");
    acc = Rat(1) / acc;
  }
  return acc;
}

// Binomial coefficient C(n, k) for n >= 0.
inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat acc(1);
  for (long i = 0; i < k; ++i) acc *= Rat(n - i, i + 1);
  acc.canonicalize();
  return acc;
}

// ---------------------------------------------------------------------------
// Prime field F_p.
//
// Each element carries its modulus so that generic ring code can default-
// construct zeros without a global context; modulus 0 marks an "unattached"
// small integer (the additive/multiplicative neutrals produced by templated
// code), which attaches itself to the other operand's modulus on first use.
// ---------------------------------------------------------------------------

struct BadPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t prime) : p_(prime) {
    if (prime == 0) throw std::invalid_argument("Fp: zero modulus");
    v_ = value % prime;
  }

  // Unattached small integer (neutral element); becomes modular on contact.
  static Fp neutral(long value) {
    Fp f;
    f.v_ = static_cast<std::uint64_t>(value < 0 ? -value : value);
    f.neg_ = value < 0;
    return f;
  }

  static Fp fromRat(const Rat& r, std::uint64_t prime);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool zero() const { return v_ == 0; }

  Fp operator-() const {
    Fp r = *this;
    if (r.p_ == 0) {
      r.neg_ = !r.neg_;
    } else if (r.v_ != 0) {
      r.v_ = r.p_ - r.v_;
    }
    return r;
  }

  friend Fp operator+(Fp a, Fp b) {
    unify(a, b);
    if (a.p_ == 0) return neutralOp(a, b, /*mul=*/false);
    std::uint64_t s = a.v_ + b.v_;  // p < 2^63 so no overflow
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Fp operator-(Fp a, const Fp& b) { return a + (-b); }
  friend Fp operator*(Fp a, Fp b) {
    unify(a, b);
    if (a.p_ == 0) return neutralOp(a, b, /*mul=*/true);
    unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
    return raw(static_cast<std::uint64_t>(m % a.p_), a.p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1) return *this;
      throw std::domain_error("Fp: inverse of unattached element");
    }
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // Extended Euclid.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      std::int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (r != 1) throw BadPrime("Fp: modulus not prime for inverse");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0) return a.p_ == b.p_ && a.v_ == b.v_;
    Fp x = a, y = b;
    unify(x, y);
    if (x.p_ != 0) return x.v_ == y.v_;
    return x.v_ == y.v_ && (x.neg_ == y.neg_ || x.v_ == 0);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  static void unify(Fp& a, Fp& b) {
    if (a.p_ == 0 && b.p_ != 0) a = attach(a, b.p_);
    else if (b.p_ == 0 && a.p_ != 0) b = attach(b, a.p_);
    else if (a.p_ != 0 && a.p_ != b.p_)
      throw std::invalid_argument("Fp: mixed moduli");
  }
  static Fp attach(const Fp& a, std::uint64_t p) {
    Fp f = raw(a.v_ % p, p);
    return a.neg_ ? -f : f;
  }
  static Fp neutralOp(const Fp& a, const Fp& b, bool mul) {
    // Both unattached: small signed integer arithmetic.
    long x = static_cast<long>(a.v_) * (a.neg_ ? -1 : 1);
    long y = static_cast<long>(b.v_) * (b.neg_ ? -1 : 1);
    return neutral(mul ? x * y : x + y);
  }

  std::uint64_t v_;
  std::uint64_t p_;
  bool neg_ = false;  // only meaningful while unattached
};

inline Fp Fp::fromRat(const Rat& r, std::uint64_t prime) {
  const mpz_class num = r.get_num();
  const mpz_class den = r.get_den();
  mpz_class p(static_cast<unsigned long>(prime));
  mpz_class nm = num % p;
  if (nm < 0) nm += p;
  mpz_class dm = den % p;
  if (dm == 0) throw BadPrime("Fp::fromRat: denominator divisible by modulus");
  Fp n(nm.get_ui(), prime);
  Fp d(dm.get_ui(), prime);
  return n * d.inverse();
}

inline bool isZero(const Fp& f) { return f.zero(); }

inline std::string toString(const Fp& f) {
  return std::to_string(f.value()) + " (mod " + std::to_string(f.modulus()) + ")";
}

}  // namespace yx

#endif  // YX_RATIONAL_HPP
