#pragma once

#include <vector>

#include "qhopf/tensor.hpp"

namespace qhopf {

/// A linear map between tensor spaces, stored column by column: the image of
/// every source basis tuple (indexed by its flat key).
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(FieldSpec field, Shape source, Shape target, std::vector<TensorElement> columns);

  static LinearMap identity(FieldSpec field, Shape shape);
  static LinearMap zero(FieldSpec field, Shape source, Shape target);
  /// Builds a map from a callback giving the image of each source basis key.
  template <class F>
  static LinearMap from_function(FieldSpec field, Shape source, Shape target, F&& image) {
    const std::uint64_t n = shape_size(source);
    std::vector<TensorElement> cols;
    cols.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) cols.push_back(image(k));
    return LinearMap(field, std::move(source), std::move(target), std::move(cols));
  }

  FieldSpec field() const { return field_; }
  const Shape& source() const { return source_; }
  const Shape& target() const { return target_; }
  std::size_t source_degree() const { return source_.size(); }
  std::size_t target_degree() const { return target_.size(); }

  const TensorElement& column(Key k) const { return columns_[k]; }
  const std::vector<TensorElement>& columns() const { return columns_; }

  TensorElement apply(const TensorElement& x) const;

  /// (this ∘ inner)
  LinearMap after(const LinearMap& inner) const;
  /// this ⊗ other acting on concatenated legs.
  LinearMap tensor(const LinearMap& other) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }
  LinearMap operator-(const LinearMap& o) const;

 private:
  FieldSpec field_;
  Shape source_;
  Shape target_;
  std::vector<TensorElement> columns_;
};

}  // namespace qhopf
