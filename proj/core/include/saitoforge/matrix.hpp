#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "saitoforge/cycnum.hpp"
#include "saitoforge/mpoly.hpp"
#include "saitoforge/ratfn.hpp"

namespace sf {

// Zero and one in the ring of a prototype element.
inline CycNum zero_like(const CycNum&) { return CycNum(); }
inline CycNum one_like(const CycNum&) { return CycNum(1); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.ring()); }
inline MPoly one_like(const MPoly& p) { return MPoly(p.ring(), CycNum(1)); }
inline RatFn zero_like(const RatFn& p) { return RatFn(MPoly(p.ring())); }
inline RatFn one_like(const RatFn& p) { return RatFn::constant(p.ring(), CycNum(1)); }

inline std::string to_text(const CycNum& c) { return c.to_string(); }
inline std::string to_text(const MPoly& p) { return p.to_string(); }
inline std::string to_text(const RatFn& f) { return f.to_string(); }

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  static Matrix zero(int n, const T& proto) { return Matrix(n, n, zero_like(proto)); }
  static Matrix identity(int n, const T& proto) {
    Matrix m(n, n, zero_like(proto));
    for (int i = 0; i < n; ++i) m(i, i) = one_like(proto);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), zero_like(d.at(0)));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const T& proto() const { return data_.at(0); }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!v.is_zero()) return false;
    }
    return true;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_, f(data_.at(0)));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_like(proto()));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& v : out.data_) v = -v;
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_, zero_like(a.proto()));
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v = s * v;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += to_text((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("matrix shape mismatch");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class T>
Matrix<T> minor_of(const Matrix<T>& a, int row, int col) {
  int n = a.rows();
  Matrix<T> m(n - 1, n - 1, zero_like(a.proto()));
  for (int i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (int j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

// Laplace expansion; the matrices met here are at most 3x3.
template <class T>
T det(const Matrix<T>& a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) return T();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  T sum = zero_like(a.proto());
  for (int j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    T term = a(0, j) * det(minor_of(a, 0, j));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("adjugate of non-square matrix");
  if (n == 1) return Matrix<T>::identity(1, a.proto());
  Matrix<T> adj(n, n, zero_like(a.proto()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      T c = det(minor_of(a, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return adj;
}

inline Matrix<RatFn> to_ratfn(const Matrix<MPoly>& m) {
  return m.map([](const MPoly& p) { return RatFn(p); });
}

inline Matrix<MPoly> to_poly(const Matrix<RatFn>& m) {
  return m.map([](const RatFn& f) { return f.to_poly(); });
}

inline bool is_polynomial(const Matrix<RatFn>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_polynomial()) return false;
    }
  }
  return true;
}

// Entrywise partial derivative.
inline Matrix<MPoly> diff(const Matrix<MPoly>& m, int var) {
  return m.map([var](const MPoly& p) { return p.diff(var); });
}
inline Matrix<RatFn> diff(const Matrix<RatFn>& m, int var) {
  return m.map([var](const RatFn& p) { return p.diff(var); });
}

// Inverse through adjugate and determinant.
Matrix<RatFn> inverse(const Matrix<RatFn>& m);

}  // namespace sf
