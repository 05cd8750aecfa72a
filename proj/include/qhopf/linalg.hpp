#pragma once

#include <optional>
#include <vector>

#include "qhopf/linear_map.hpp"

namespace qhopf {

/// Row-major dense matrix of exact scalars, used only for linear solves.
class DenseMatrix {
 public:
  DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Columns are the images of source basis keys.
  static DenseMatrix from_map(const LinearMap& m);
  LinearMap to_map(Shape source, Shape target) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Row echelon data: pivot column per pivot row.
struct EchelonForm {
  DenseMatrix matrix;
  std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) elimination over Z for rational input, ordinary
/// Gaussian elimination for prime fields. Pivots are searched only in the
/// first `pivot_cols` columns (all columns when 0).
EchelonForm row_echelon(const DenseMatrix& a, std::size_t pivot_cols = 0);

std::size_t rank(const DenseMatrix& a);
/// Pivot columns of a, i.e. a maximal independent set of columns.
std::vector<std::size_t> independent_columns(const DenseMatrix& a);

/// Some X with A·X = B, or nullopt when inconsistent. Free variables are 0.
std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& a);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Inverse of a map between spaces of equal size; nullopt when singular.
std::optional<LinearMap> invert_map(const LinearMap& m);
std::size_t map_rank(const LinearMap& m);

}  // namespace qhopf
