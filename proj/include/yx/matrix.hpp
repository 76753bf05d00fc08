#ifndef YX_MATRIX_HPP
#define YX_MATRIX_HPP

// Dense rectangular matrices over an arbitrary (possibly noncommutative)
// ring C.  Sizes here are tiny (at most N x N with N <= 8, or block sizes),
// so everything is straightforward dense arithmetic.  Inversion is
// Gauss-Jordan with ring-invertible pivots; `ringInvert` is the ADL
// customization point each scalar ring provides.

#include <stdexcept>
#include <utility>
#include <vector>

#include "yx/rational.hpp"

namespace yx {

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat ringInvert(const Rat& x) {
  if (isZero(x)) throw SingularMatrix("ringInvert: zero rational");
  return Rat(1) / x;
}

inline Fp ringInvert(const Fp& x) {
  if (x.zero()) throw SingularMatrix("ringInvert: zero field element");
  return x.inverse();
}

inline Rat oneLike(const Rat&) { return Rat(1); }
inline Fp oneLike(const Fp& x) {
  return x.modulus() ? Fp(1, x.modulus()) : Fp::neutral(1);
}

template <class C>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  C& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const C& at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  static Mat identity(int n, const C& one) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    requireShape(a, b);
    Mat r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return Mat();
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const C& aik = a.at(i, k);
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  Mat& operator+=(const Mat& o) { return *this = *this + o; }
  Mat& operator-=(const Mat& o) { return *this = *this - o; }

  template <class S>
  Mat scaled(const S& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  Mat transposedPlain() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  C trace() const {
    C s{};
    for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
  }

  template <class Pred>
  bool allOf(Pred&& pred) const {
    for (const auto& x : a_)
      if (!pred(x)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  static void requireShape(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }

  int rows_, cols_;
  std::vector<C> a_;
};

// Gauss-Jordan inverse over the ring C.  Rows are only ever left-multiplied
// by ring elements, which is what makes this valid over noncommutative C.
// Pivot search tries lower rows when a pivot is not invertible.
template <class C>
Mat<C> matInvert(Mat<C> a, const C& one) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matInvert: not square");
  const int n = a.rows();
  Mat<C> b = Mat<C>::identity(n, one);
  for (int k = 0; k < n; ++k) {
    int pivotRow = -1;
    C pinv{};
    for (int r = k; r < n; ++r) {
      try {
        pinv = ringInvert(a.at(r, k));
        pivotRow = r;
        break;
      } catch (const SingularMatrix&) {
      }
    }
    if (pivotRow < 0) throw SingularMatrix("matInvert: no invertible pivot");
    if (pivotRow != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivotRow, j), a.at(k, j));
        std::swap(b.at(pivotRow, j), b.at(k, j));
      }
    }
    for (int j = 0; j < n; ++j) {
      a.at(k, j) = pinv * a.at(k, j);
      b.at(k, j) = pinv * b.at(k, j);
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      C f = a.at(i, k);
      if (isZero(f)) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        b.at(i, j) -= f * b.at(k, j);
      }
    }
  }
  return b;
}

// Entrywise right-multiplication by a ring scalar (used when matrices are
// themselves coefficients inside tensors/series).
template <class C>
Mat<C> operator*(const Mat<C>& m, const C& s) {
  return m.scaled(s);
}

template <class C>
bool isZero(const Mat<C>& m) {
  return m.allOf([](const C& x) { return isZero(x); });
}

template <class C>
Mat<C> ringInvert(const Mat<C>& m) {
  // Field-matrix entries inside a larger elimination: invert as a matrix.
  if (m.empty()) throw SingularMatrix("ringInvert: empty matrix");
  return matInvert(m, oneLike(m.at(0, 0)));
}

template <class C>
Mat<C> oneLike(const Mat<C>& m) {
  return Mat<C>::identity(m.rows(), oneLike(m.at(0, 0)));
}

}  // namespace yx

#endif  // YX_MATRIX_HPP
