#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "penner/matrix.hpp"

namespace penner {

// Symmetric, nonnegative, zero-diagonal matrix of intersection numbers.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;

  std::size_t n() const { return m_.rows(); }
  // 0-based access.
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RatMatrix& matrix() const { return m_; }
  bool integral() const { return integral_; }
  bool is_zero() const;

  friend bool operator==(const IntersectionMatrix& a, const IntersectionMatrix& b) { return a.m_ == b.m_; }

 private:
  friend IntersectionMatrix validate_omega(const RatMatrix& raw);
  RatMatrix m_;
  bool integral_ = true;
};

IntersectionMatrix validate_omega(const RatMatrix& raw);
// Accepts ragged input so that NotSquare can be reported.
IntersectionMatrix validate_omega(const std::vector<std::vector<Rational>>& raw);

// Closed path (i_1 ... i_K i_1) with positive exponents; indices are 1-based.
class TwistWord {
 public:
  TwistWord() = default;
  // Strict: rejects equal neighbours (including i_K == i_1 when K >= 2).
  TwistWord(std::vector<int> gamma, std::vector<long> powers);
  // Unit powers.
  explicit TwistWord(std::vector<int> gamma);
  // Merges adjacent equal indices by summing exponents first.
  static TwistWord normalized(const std::vector<int>& gamma, const std::vector<long>& powers);

  const std::vector<int>& gamma() const { return gamma_; }
  const std::vector<long>& powers() const { return powers_; }
  std::size_t size() const { return gamma_.size(); }
  long p_max() const;
  long p_min() const;
  // Throws IndexOutOfRange unless every index lies in 1..n.
  void check_dimension(std::size_t n) const;
  TwistWord scaled(long k) const;
  std::string to_string() const;

 private:
  std::vector<int> gamma_;
  std::vector<long> powers_;
};

// Q_i = I + D_i Omega.
ExactMatrix generator(const IntersectionMatrix& omega, int i);
// M = Q_{i_K}^{p_K} ... Q_{i_1}^{p_1}.
ExactMatrix twist_product(const IntersectionMatrix& omega, const TwistWord& word);
// Same product over Z; Omega must be integral.
IntMatrix twist_product_int(const IntersectionMatrix& omega, const TwistWord& word);
IntersectionMatrix scale(const IntersectionMatrix& omega, const Rational& k);

// Left multiplication by Q_i^p in place: row i += p * (row i of Omega) * M.
template <class T>
void apply_generator(Matrix<T>& m, const IntersectionMatrix& omega, std::size_t i0, long p) {
  const std::size_t n = m.rows();
  std::vector<T> add(m.cols());
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& w = omega(i0, j);
    if (w == 0) continue;
    T wj;
    if constexpr (std::is_same_v<T, Integer>)
      wj = w.get_num() * p;
    else
      wj = w * p;
    const T* rj = m.row(j);
    for (std::size_t c = 0; c < m.cols(); ++c) add[c] += wj * rj[c];
  }
  T* ri = m.row(i0);
  for (std::size_t c = 0; c < m.cols(); ++c) ri[c] += add[c];
}

}  // namespace penner
