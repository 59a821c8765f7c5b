#pragma once

#include <random>

#include "trialg/algebra.hpp"
#include "trialg/matrix.hpp"
#include "trialg/subspace.hpp"

namespace trialg::testutil {

// small rationals with a fixed seed keep the property tests reproducible
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Scalar rational(long max_num = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Scalar(num(gen_), den(gen_));
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational();
    return m;
  }
  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  std::size_t index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(gen_);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace trialg::testutil
