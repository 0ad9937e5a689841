#include "penner/penner.hpp"

#include <algorithm>
#include <sstream>

#include "penner/error.hpp"

namespace penner {

namespace {
std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}
}  // namespace

bool IntersectionMatrix::is_zero() const {
  for (const auto& x : m_.data())
    if (x != 0) return false;
  return true;
}

IntersectionMatrix validate_omega(const RatMatrix& raw) {
  if (!raw.square())
    throw Error(ErrorKind::NotSquare, std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
  const std::size_t n = raw.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && raw(i, i) != 0)
        throw Error(ErrorKind::NonzeroDiagonal, "entry " + pair_str(i, i) + " = " + raw(i, i).get_str());
      if (raw(i, j) < 0)
        throw Error(ErrorKind::NegativeEntry, "entry " + pair_str(i, j) + " = " + raw(i, j).get_str());
      if (j > i && raw(i, j) != raw(j, i))
        throw Error(ErrorKind::NotSymmetric, "entries " + pair_str(i, j) + " and " + pair_str(j, i) + " differ");
    }
  IntersectionMatrix out;
  out.m_ = raw;
  out.integral_ = is_integral(raw);
  return out;
}

IntersectionMatrix validate_omega(const std::vector<std::vector<Rational>>& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i + 1) + " has " + std::to_string(raw[i].size()) +
                                            " entries, expected " + std::to_string(n));
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = raw[i][j];
  return validate_omega(m);
}

TwistWord::TwistWord(std::vector<int> gamma, std::vector<long> powers)
    : gamma_(std::move(gamma)), powers_(std::move(powers)) {
  if (gamma_.empty()) throw Error(ErrorKind::InvalidWord, "empty path");
  if (gamma_.size() != powers_.size())
    throw Error(ErrorKind::InvalidWord, "path has " + std::to_string(gamma_.size()) + " vertices but " +
                                            std::to_string(powers_.size()) + " powers");
  for (std::size_t t = 0; t < gamma_.size(); ++t) {
    if (gamma_[t] < 1) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(gamma_[t]));
    if (powers_[t] < 1)
      throw Error(ErrorKind::InvalidWord, "power " + std::to_string(powers_[t]) + " at position " +
                                              std::to_string(t + 1) + " is not positive");
  }
  const std::size_t k = gamma_.size();
  if (k >= 2)
    for (std::size_t t = 0; t < k; ++t)
      if (gamma_[t] == gamma_[(t + 1) % k])
        throw Error(ErrorKind::InvalidWord, "consecutive vertices " + std::to_string(t + 1) + " and " +
                                                std::to_string((t + 1) % k + 1) + " are both " +
                                                std::to_string(gamma_[t]));
}

TwistWord::TwistWord(std::vector<int> gamma)
    : TwistWord(gamma, std::vector<long>(gamma.size(), 1)) {}

TwistWord TwistWord::normalized(const std::vector<int>& gamma, const std::vector<long>& powers) {
  if (gamma.size() != powers.size())
    throw Error(ErrorKind::InvalidWord, "path and powers differ in length");
  std::vector<int> g;
  std::vector<long> p;
  for (std::size_t t = 0; t < gamma.size(); ++t) {
    if (!g.empty() && g.back() == gamma[t])
      p.back() += powers[t];
    else {
      g.push_back(gamma[t]);
      p.push_back(powers[t]);
    }
  }
  return TwistWord(std::move(g), std::move(p));
}

long TwistWord::p_max() const { return *std::max_element(powers_.begin(), powers_.end()); }
long TwistWord::p_min() const { return *std::min_element(powers_.begin(), powers_.end()); }

void TwistWord::check_dimension(std::size_t n) const {
  for (int i : gamma_)
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

TwistWord TwistWord::scaled(long k) const {
  std::vector<long> p = powers_;
  for (auto& x : p) x *= k;
  return TwistWord(gamma_, std::move(p));
}

std::string TwistWord::to_string() const {
  std::ostringstream os;
  for (std::size_t t = gamma_.size(); t-- > 0;) {
    os << "T" << gamma_[t];
    if (powers_[t] != 1) os << "^" << powers_[t];
    if (t) os << ' ';
  }
  return os.str();
}

ExactMatrix generator(const IntersectionMatrix& omega, int i) {
  const std::size_t n = omega.n();
  if (i < 1 || static_cast<std::size_t>(i) > n)
    throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  ExactMatrix q = ExactMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) q(i - 1, j) += omega(i - 1, j);
  return q;
}

ExactMatrix twist_product(const IntersectionMatrix& omega, const TwistWord& word) {
  word.check_dimension(omega.n());
  ExactMatrix m = ExactMatrix::identity(omega.n());
  for (std::size_t t = 0; t < word.size(); ++t)
    apply_generator(m, omega, word.gamma()[t] - 1, word.powers()[t]);
  return m;
}

IntMatrix twist_product_int(const IntersectionMatrix& omega, const TwistWord& word) {
  if (!omega.integral()) throw Error(ErrorKind::NotIntegral, "intersection matrix has non-integer entries");
  word.check_dimension(omega.n());
  IntMatrix m = IntMatrix::identity(omega.n());
  for (std::size_t t = 0; t < word.size(); ++t)
    apply_generator(m, omega, word.gamma()[t] - 1, word.powers()[t]);
  return m;
}

IntersectionMatrix scale(const IntersectionMatrix& omega, const Rational& k) {
  if (k <= 0) throw Error(ErrorKind::NonpositiveScale, "scale " + k.get_str());
  return validate_omega(k * omega.matrix());
}

}  // namespace penner
