#include "qhopf/linalg.hpp"

#include <utility>

#include "qhopf/errors.hpp"

namespace qhopf {

DenseMatrix::DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

DenseMatrix DenseMatrix::from_map(const LinearMap& m) {
  DenseMatrix d(m.field(), shape_size(m.target()), shape_size(m.source()));
  for (std::size_t c = 0; c < d.cols_; ++c) {
    for (const auto& [k, v] : m.column(c).entries()) d.at(k, c) = v;
  }
  return d;
}

LinearMap DenseMatrix::to_map(Shape source, Shape target) const {
  if (shape_size(source) != cols_ || shape_size(target) != rows_) throw DimensionMismatch("to_map shape mismatch");
  return LinearMap::from_function(field_, source, target, [&](Key c) {
    std::vector<TensorElement::Entry> e;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!at(r, c).is_zero()) e.emplace_back(r, at(r, c));
    }
    return TensorElement::from_entries(field_, target, std::move(e));
  });
}

namespace {

EchelonForm bareiss_rational(const DenseMatrix& a, std::size_t pivot_cols) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<mpz_class> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.at(r, c).rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = a.at(r, c).rational();
      m[r * cols + c] = q.get_num() * (den / q.get_den());
    }
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1, t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(m[p * cols + col]) == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[p * cols + c], m[row * cols + c]);
    }
    const mpz_class& piv = m[row * cols + col];
    for (std::size_t i = row + 1; i < rows; ++i) {
      mpz_class lead = m[i * cols + col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class& x = m[i * cols + j];
        x *= piv;
        t = lead * m[row * cols + j];
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m[i * cols + col] = 0;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  EchelonForm out{DenseMatrix(a.field(), rows, cols), std::move(pivots)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(m[r * cols + c]) != 0) out.matrix.at(r, c) = Scalar(mpq_class(m[r * cols + c]));
    }
  }
  return out;
}

EchelonForm gauss_prime(const DenseMatrix& a, std::size_t pivot_cols) {
  DenseMatrix m = a;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m.at(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const Scalar inv = m.at(row, col).inverse();
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Scalar factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

}  // namespace

EchelonForm row_echelon(const DenseMatrix& a, std::size_t pivot_cols) {
  if (pivot_cols == 0 || pivot_cols > a.cols()) pivot_cols = a.cols();
  return a.field().is_rational() ? bareiss_rational(a, pivot_cols) : gauss_prime(a, pivot_cols);
}

std::size_t rank(const DenseMatrix& a) { return row_echelon(a).pivots.size(); }

std::vector<std::size_t> independent_columns(const DenseMatrix& a) { return row_echelon(a).pivots; }

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  DenseMatrix aug(a.field(), a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < k; ++c) aug.at(r, n + c) = b.at(r, c);
  }
  EchelonForm ef = row_echelon(aug, n);
  const std::size_t rk = ef.pivots.size();
  for (std::size_t r = rk; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!ef.matrix.at(r, n + c).is_zero()) return std::nullopt;
    }
  }
  DenseMatrix x(a.field(), n, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = rk; i-- > 0;) {
      const std::size_t pc = ef.pivots[i];
      Scalar acc = ef.matrix.at(i, n + c);
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!ef.matrix.at(i, j).is_zero() && !x.at(j, c).is_zero()) acc -= ef.matrix.at(i, j) * x.at(j, c);
      }
      x.at(pc, c) = acc / ef.matrix.at(i, pc);
    }
  }
  return x;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  DenseMatrix id(a.field(), a.rows(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) id.at(i, i) = a.field().one();
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, id);
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  DenseMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a.at(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b.at(l, j).is_zero()) c.at(i, j) += a.at(i, l) * b.at(l, j);
      }
    }
  }
  return c;
}

std::optional<LinearMap> invert_map(const LinearMap& m) {
  auto inv = inverse(DenseMatrix::from_map(m));
  if (!inv) return std::nullopt;
  return inv->to_map(m.target(), m.source());
}

std::size_t map_rank(const LinearMap& m) { return rank(DenseMatrix::from_map(m)); }

}  // namespace qhopf
