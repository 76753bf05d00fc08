#ifndef YX_SERIES_HPP
#define YX_SERIES_HPP

// Truncated formal series in u^{-1} (TruncSeries) and in up to four
// variables with signed exponents (MultiSeries).
//
// Window discipline: a MultiSeries carries, per variable, the largest index
// r for which the coefficient of x^{-r} is fully determined ("trusted
// order").  Rational-function prefactors are never expanded; relations are
// cleared to polynomial form, and multiplying by a variable is an exponent
// shift that lowers the trusted order.  Products propagate
//   ord(fg) = min(ord(f) + minexp(g), ord(g) + minexp(f)),
// and coefficients beyond the trusted order are dropped eagerly, so a zero
// test over the retained window is sound.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "yx/matrix.hpp"
#include "yx/rational.hpp"

namespace yx {

// ---------------------------------------------------------------------------
// TruncSeries: sum_{r=0..ord} c_r u^{-r}.
// ---------------------------------------------------------------------------

template <class C>
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int ord) : c_(static_cast<std::size_t>(ord + 1)) {}

  bool wildcardZero() const { return c_.empty(); }
  int ord() const { return static_cast<int>(c_.size()) - 1; }

  C& at(int r) { return c_[static_cast<std::size_t>(r)]; }
  const C& at(int r) const { return c_[static_cast<std::size_t>(r)]; }
  const C& coeff(int r) const {
    static const C zero{};
    return (r >= 0 && r <= ord()) ? c_[static_cast<std::size_t>(r)] : zero;
  }

  static TruncSeries one(int ord, const C& oneC) {
    TruncSeries s(ord);
    s.at(0) = oneC;
    return s;
  }

  void truncate(int newOrd) {
    if (newOrd < ord()) c_.resize(static_cast<std::size_t>(newOrd + 1));
  }

  // Zeroes coefficients with r < k (the "ring accent" drops r = 0, 1).
  TruncSeries droppedBelow(int k) const {
    TruncSeries r = *this;
    for (int i = 0; i < k && i <= r.ord(); ++i) r.at(i) = C{};
    return r;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    if (a.wildcardZero()) return b;
    if (b.wildcardZero()) return a;
    TruncSeries r(std::min(a.ord(), b.ord()));
    for (int i = 0; i <= r.ord(); ++i) r.at(i) = a.at(i) + b.at(i);
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.wildcardZero() || b.wildcardZero()) return TruncSeries();
    TruncSeries r(std::min(a.ord(), b.ord()));
    for (int i = 0; i <= r.ord(); ++i)
      for (int j = 0; i + j <= r.ord(); ++j) r.at(i + j) += a.at(i) * b.at(j);
    return r;
  }

  template <class S>
  TruncSeries scaled(const S& s) const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

 private:
  std::vector<C> c_;
};

// f(u + a) from f(u): coefficient of u^{-p} in (u+a)^{-r} is
// (-1)^{p-r} C(p-1, p-r) a^{p-r}.  Trusted order is preserved.
template <class C>
TruncSeries<C> shift(const TruncSeries<C>& f, const Rat& a) {
  if (f.wildcardZero()) return f;
  TruncSeries<C> g(f.ord());
  g.at(0) = f.at(0);
  for (int r = 1; r <= f.ord(); ++r)
    for (int p = r; p <= f.ord(); ++p) {
      Rat coef = binomial(p - 1, p - r) * ratPow(a, p - r);
      if ((p - r) % 2 == 1) coef = -coef;
      g.at(p) += f.at(r) * coef;
    }
  return g;
}

// Two-sided inverse of f, assuming the constant term is ring-invertible:
// g_0 = c_0^{-1}, g_p = -c_0^{-1} sum_{q=1..p} c_q g_{p-q}.
template <class C>
TruncSeries<C> invert(const TruncSeries<C>& f) {
  if (f.wildcardZero()) throw SingularMatrix("invert: zero series");
  C c0inv = ringInvert(f.at(0));
  TruncSeries<C> g(f.ord());
  g.at(0) = c0inv;
  for (int p = 1; p <= f.ord(); ++p) {
    C s{};
    for (int q = 1; q <= p; ++q) s += f.at(q) * g.at(p - q);
    g.at(p) = -(c0inv * s);
  }
  return g;
}

template <class C>
TruncSeries<C> ringInvert(const TruncSeries<C>& f) {
  return invert(f);
}

template <class C>
bool isZero(const TruncSeries<C>& f) {
  for (int r = 0; r <= f.ord(); ++r)
    if (!isZero(f.at(r))) return false;
  return true;
}

template <class C>
TruncSeries<C> oneLike(const TruncSeries<C>& f) {
  return TruncSeries<C>::one(f.wildcardZero() ? 0 : f.ord(), oneLike(f.at(0)));
}

// ---------------------------------------------------------------------------
// MultiSeries: up to four variables, signed exponents (entry key e means
// x^{-e}); per-variable trusted order.
// ---------------------------------------------------------------------------

constexpr int kOrdInf = 1 << 20;
inline int capAdd(int a, int b) {
  long s = static_cast<long>(a) + b;
  return s >= kOrdInf ? kOrdInf : static_cast<int>(s);
}

using MExp = std::array<std::int16_t, 4>;

template <class T>
class MultiSeries {
 public:
  MultiSeries() { ord_.fill(kOrdInf); }

  std::array<int, 4>& ord() { return ord_; }
  const std::array<int, 4>& ord() const { return ord_; }
  const std::map<MExp, T>& entries() const { return c_; }
  bool structurallyZero() const { return c_.empty(); }

  void add(const MExp& e, const T& v) {
    for (int k = 0; k < 4; ++k)
      if (e[static_cast<std::size_t>(k)] > ord_[static_cast<std::size_t>(k)]) return;
    auto it = c_.find(e);
    if (it == c_.end())
      c_.emplace(e, v);
    else
      it->second += v;
  }

  static MultiSeries monomial(const MExp& e, const T& v) {
    MultiSeries s;
    s.add(e, v);
    return s;
  }

  MultiSeries operator-() const {
    MultiSeries r;
    r.ord_ = ord_;
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r;
    for (std::size_t k = 0; k < 4; ++k) r.ord_[k] = std::min(a.ord_[k], b.ord_[k]);
    for (const auto& [k, v] : a.c_) r.add(k, v);
    for (const auto& [k, v] : b.c_) r.add(k, v);
    return r;
  }
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }
  MultiSeries& operator+=(const MultiSeries& o) { return *this = *this + o; }
  MultiSeries& operator-=(const MultiSeries& o) { return *this = *this - o; }

  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r;
    std::array<int, 4> minA{}, minB{};
    a.minExponents(minA);
    b.minExponents(minB);
    for (std::size_t k = 0; k < 4; ++k)
      r.ord_[k] = std::min(capAdd(a.ord_[k], minB[k]), capAdd(b.ord_[k], minA[k]));
    for (const auto& [ka, va] : a.c_) {
      for (const auto& [kb, vb] : b.c_) {
        MExp e;
        for (std::size_t k = 0; k < 4; ++k)
          e[k] = static_cast<std::int16_t>(ka[k] + kb[k]);
        r.add(e, va * vb);
      }
    }
    return r;
  }

  template <class S>
  MultiSeries scaled(const S& s) const {
    MultiSeries r;
    r.ord_ = ord_;
    for (const auto& [k, v] : c_) r.c_.emplace(k, v.scaled(s));
    return r;
  }

  // Structural prune with a caller-supplied zero test (e.g. after normal
  // forms have been taken).
  template <class Pred>
  void prune(Pred&& zero) {
    for (auto it = c_.begin(); it != c_.end();) {
      if (zero(it->second)) it = c_.erase(it);
      else ++it;
    }
  }

 private:
  void minExponents(std::array<int, 4>& out) const {
    // Structural minimum exponent per variable; an empty series acts as an
    // exact zero (infinite order), which capAdd saturates correctly.
    out.fill(0);
    bool first = true;
    for (const auto& [k, v] : c_) {
      for (std::size_t j = 0; j < 4; ++j)
        out[j] = first ? k[j] : std::min<int>(out[j], k[j]);
      first = false;
    }
  }

  std::array<int, 4> ord_;
  std::map<MExp, T> c_;
};

// Multiply by the linear form (x_vi - x_vj - c).  Either variable slot may
// be -1 (absent); c may be zero.  Implemented as a product with an exact
// polynomial so the window bookkeeping is handled by operator*.
template <class T, class S>
MultiSeries<T> mulLinearForm(const MultiSeries<T>& f, int vi, int vj, const S& c, const T& protoOne) {
  MultiSeries<T> poly;
  if (vi >= 0) {
    MExp e{};
    e[static_cast<std::size_t>(vi)] = -1;
    poly.add(e, protoOne);
  }
  if (vj >= 0) {
    MExp e{};
    e[static_cast<std::size_t>(vj)] = -1;
    poly.add(e, -protoOne);
  }
  if (!yx::isZero(c)) poly.add(MExp{}, protoOne.scaled(-c));
  return f * poly;
}

// ---------------------------------------------------------------------------
// clear_and_compare: residual check over the trusted window.
// Both sides must already be cleared of denominators; the residual's
// retained coefficients are tested with a caller-supplied zero test (which
// may normal-form noncommutative coefficients).  Failures carry the
// exponent tuple and a caller-readable description of the offending entry.
// ---------------------------------------------------------------------------

struct CompareFailure {
  std::array<int, 4> exponents{};
  std::string what;
};

struct CompareResult {
  bool ok = true;
  std::vector<CompareFailure> failures;
  std::array<int, 4> window{};  // trusted order per variable at comparison
};

template <class T, class ZeroDescribe>
CompareResult clear_and_compare(const MultiSeries<T>& lhs, const MultiSeries<T>& rhs,
                                ZeroDescribe&& describeNonzero) {
  MultiSeries<T> res = lhs - rhs;
  CompareResult out;
  for (std::size_t k = 0; k < 4; ++k)
    out.window[k] = res.ord()[k] >= kOrdInf ? -1 : res.ord()[k];
  for (const auto& [e, v] : res.entries()) {
    std::string why = describeNonzero(v);
    if (why.empty()) continue;
    out.ok = false;
    CompareFailure f;
    for (std::size_t k = 0; k < 4; ++k) f.exponents[k] = e[k];
    f.what = why;
    out.failures.push_back(std::move(f));
  }
  return out;
}

}  // namespace yx

#endif  // YX_SERIES_HPP
