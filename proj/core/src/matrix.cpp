#include "penner/matrix.hpp"

#include <sstream>

#include "penner/error.hpp"

namespace penner {

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1)
        throw Error(ErrorKind::NotIntegral, "entry (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") = " + m(i, j).get_str());
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

namespace {

// In-place Bareiss elimination; returns rank and, for square input, the
// signed determinant in `det`.
std::size_t bareiss(IntMatrix& a, Integer* det) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) swap(a(piv, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) {
    if (rows == cols && r == rows)
      *det = sign * prev;
    else
      *det = 0;
  }
  return r;
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  Integer d;
  bareiss(a, &d);
  return d;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  Rational scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= Rational(l);
  }
  Rational d(determinant(clear_row_denominators(m)));
  d /= scale;
  return d;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareiss(a, nullptr);
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = clear_row_denominators(m);
  return bareiss(a, nullptr);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::DivisionFailed, "matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        swap(a(piv, j), a(c, j));
        swap(inv(piv, j), inv(c, j));
      }
    Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  std::string t;
  for (char ch : s)
    if (ch != ' ') t.push_back(ch);
  if (t.empty() || q.set_str(t, 10) != 0)
    throw Error(ErrorKind::ParseError, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace penner
