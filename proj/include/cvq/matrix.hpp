#pragma once

#include <vector>

#include "cvq/rational.hpp"

namespace cvq {

/// Dense exact rational matrix, sized for low-rank operator bookkeeping.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static RatMatrix identity(int n);
  static RatMatrix permutation(const std::vector<int>& sigma);

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix&) const = default;

  Rational det() const;
  RatMatrix inverse() const;
  bool is_identity() const;

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

/// Row vector times matrix.
std::vector<Rational> row_times(const std::vector<Rational>& v, const RatMatrix& m);
/// Matrix times column vector.
std::vector<Rational> times_col(const RatMatrix& m, const std::vector<Rational>& v);

}  // namespace cvq
