#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace penner {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  T* row(std::size_t i) { return a_.data() + i * c_; }
  const T* row(std::size_t i) const { return a_.data() + i * c_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.r_, b.c_);
    T tmp;
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          tmp = aik * b(k, j);
          out(i, j) += tmp;
        }
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using ExactMatrix = RatMatrix;

bool is_integral(const RatMatrix& m);
// Throws NotIntegral when an entry has a denominator.
IntMatrix to_integer(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

// Fraction-free determinant (Bareiss).
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
// Fraction-free rank (Bareiss after clearing row denominators).
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

// Gauss-Jordan inverse over Q; throws DivisionFailed when singular.
RatMatrix inverse(const RatMatrix& m);

std::string to_string(const RatMatrix& m);
Rational parse_rational(const std::string& s);

}  // namespace penner
