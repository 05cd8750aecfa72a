#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/field.hpp"

namespace qhopf {

/// Per-leg dimensions of a tensor space V_1 ⊗ ... ⊗ V_k.
using Shape = std::vector<std::uint32_t>;
/// Flat mixed-radix position; the first leg is the most significant digit, so
/// numeric order of keys is lexicographic order of index tuples.
using Key = std::uint64_t;

constexpr std::size_t kMaxDegree = 24;
using IndexBuf = std::array<std::uint32_t, kMaxDegree>;

Shape uniform_shape(std::uint32_t dim, std::size_t degree);
std::uint64_t shape_size(const Shape& shape);
std::string shape_string(const Shape& shape);

/// Exact sparse element of V_1 ⊗ ... ⊗ V_k in canonical form: entries sorted by
/// key, no stored zero. Degree 0 is a single scalar stored under key 0.
class TensorElement {
 public:
  using Entry = std::pair<Key, Scalar>;

  TensorElement() = default;
  TensorElement(FieldSpec field, Shape shape);

  static TensorElement scalar(const Scalar& c);
  static TensorElement basis(FieldSpec field, Shape shape, std::span<const std::uint32_t> indices,
                             const Scalar& coeff);
  static TensorElement basis(FieldSpec field, Shape shape, std::initializer_list<std::uint32_t> indices);
  /// Takes ownership of unsorted entries; duplicates are summed, zeros dropped.
  static TensorElement from_entries(FieldSpec field, Shape shape, std::vector<Entry> entries);

  FieldSpec field() const { return field_; }
  const Shape& shape() const { return shape_; }
  std::size_t degree() const { return shape_.size(); }
  /// Common leg dimension; throws DimensionMismatch for mixed shapes.
  std::uint32_t dim() const;
  /// Bit k set means leg k lives in the dual space.
  std::uint32_t dual_mask() const { return dual_mask_; }
  TensorElement with_dual_mask(std::uint32_t mask) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Key encode(std::span<const std::uint32_t> indices) const;
  void decode(Key key, std::span<std::uint32_t> out) const;
  Scalar coeff(std::span<const std::uint32_t> indices) const;
  Scalar coeff_key(Key key) const;
  /// Value of a degree-0 element.
  Scalar scalar_value() const;

  TensorElement operator-() const;
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& c, const TensorElement& t);

  /// Same entries, different shape of equal total size.
  TensorElement reshaped(Shape shape) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  /// Indices of the lexicographically first entry where a and b differ, or
  /// empty when equal.
  static std::vector<std::uint32_t> first_difference(const TensorElement& a, const TensorElement& b);

  std::string to_string() const;

 private:
  void compute_strides();
  void check_compatible(const TensorElement& o) const;

  FieldSpec field_;
  Shape shape_;
  std::vector<std::uint64_t> strides_;
  std::uint32_t dual_mask_ = 0;
  std::vector<Entry> entries_;
};

/// Accumulates terms into a sparse tensor.
class TensorBuilder {
 public:
  TensorBuilder(FieldSpec field, Shape shape);

  void add(Key key, const Scalar& c);
  void add_product(Key key, const Scalar& a, const Scalar& b);
  Key encode(std::span<const std::uint32_t> indices) const;
  const Shape& shape() const { return shape_; }
  TensorElement finish();

 private:
  FieldSpec field_;
  Shape shape_;
  std::vector<std::uint64_t> strides_;
  std::unordered_map<Key, Scalar> acc_;
  Scalar scratch_;
};

/// a ⊗ b with legs concatenated.
TensorElement outer(const TensorElement& a, const TensorElement& b);
/// Result leg j is source leg perm[j].
TensorElement permute_legs(const TensorElement& t, std::span<const std::size_t> perm);

}  // namespace qhopf
