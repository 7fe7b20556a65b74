#include "cvq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cvq {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::permutation(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  RatMatrix m(n);
  // Row-vector action a -> a * m sends a to its relabeling pullback:
  // (a m)_i = a_{sigma(i)}.
  for (int i = 0; i < n; ++i) m.at(sigma[static_cast<size_t>(i)], i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

Rational RatMatrix::det() const {
  RatMatrix m = *this;
  Rational result(1);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      result = -result;
    }
    result *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      Rational factor = m.at(r, col) * inv;
      if (factor == 0) continue;
      for (int j = col; j < n_; ++j) m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return result;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix m = *this;
  RatMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular");
    if (pivot != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational scale = Rational(1) / m.at(col, col);
    for (int j = 0; j < n_; ++j) {
      m.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col) continue;
      Rational factor = m.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) {
        m.at(r, j) -= factor * m.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

std::string RatMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    out << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < n_; ++j) out << (j ? " " : "") << to_string(at(i, j));
    out << "]" << (i + 1 == n_ ? "]" : "\n");
  }
  return out.str();
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const RatMatrix& m) {
  int n = m.size();
  std::vector<Rational> out(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * m.at(i, j);
  return out;
}

std::vector<Rational> times_col(const RatMatrix& m, const std::vector<Rational>& v) {
  int n = m.size();
  std::vector<Rational> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

}  // namespace cvq
