#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trialg/scalar.hpp"

namespace trialg {

/// Row vector of exact rationals. Throughout the library vectors are rows and
/// linear maps act on the right: x -> x * M.
using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
std::string to_string(const Vec& v);

/// Dense matrix of exact rationals with immutable dimensions.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const;
  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Linear map in the right-action convention; must be square and match the
/// dimension of the space it acts on.
using LinearMap = Matrix;

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);
Matrix transpose(const Matrix& m);
Vec operator*(const Vec& x, const Matrix& m);  // row vector times matrix
Scalar trace(const Matrix& m);

/// Reduced row-echelon form; the row space is preserved. Pivots are chosen by
/// smallest bit size to limit coefficient growth.
Matrix rref(const Matrix& m);

/// rref together with the pivot column of each nonzero row, zero rows dropped.
struct RrefResult {
  Matrix reduced;   // nonzero rows only
  std::vector<std::size_t> pivots;
};
RrefResult rref_nonzero(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution x (length m.cols) of m * x^T = rhs^T, or nullopt when
/// the system is inconsistent. Unsolvable is a value, not a fault.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

/// Coordinates c with c * basis_rows = v, if v lies in the row space.
std::optional<Vec> solve_in_rows(const Matrix& basis_rows, const Vec& v);

/// vec() flattening of a square map, row-major; used to span spaces of maps.
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace trialg
