#include "qhopf/linear_map.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

LinearMap::LinearMap(FieldSpec field, Shape source, Shape target, std::vector<TensorElement> columns)
    : field_(field), source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (columns_.size() != shape_size(source_)) throw DimensionMismatch("column count does not match source space");
  for (auto& c : columns_) {
    if (c.shape() != target_) throw DimensionMismatch("column shape " + shape_string(c.shape()) +
                                                      " does not match target " + shape_string(target_));
    if (c.field() != field_) throw FieldMismatch("column over a different field");
    if (c.dual_mask() != 0) c = c.with_dual_mask(0);
  }
}

LinearMap LinearMap::identity(FieldSpec field, Shape shape) {
  return from_function(field, shape, shape, [&](Key k) {
    TensorElement t(field, shape);
    return TensorElement::from_entries(field, shape, {{k, field.one()}});
  });
}

LinearMap LinearMap::zero(FieldSpec field, Shape source, Shape target) {
  return from_function(field, source, target, [&](Key) { return TensorElement(field, target); });
}

TensorElement LinearMap::apply(const TensorElement& x) const {
  if (x.shape() != source_) throw DimensionMismatch("map applied to wrong shape " + shape_string(x.shape()));
  TensorBuilder b(field_, target_);
  for (const auto& [k, c] : x.entries()) {
    for (const auto& [kt, ct] : columns_[k].entries()) b.add_product(kt, c, ct);
  }
  return b.finish();
}

LinearMap LinearMap::after(const LinearMap& inner) const {
  if (inner.target_ != source_) throw DimensionMismatch("composition shape mismatch");
  return from_function(field_, inner.source_, target_, [&](Key k) { return apply(inner.column(k)); });
}

LinearMap LinearMap::tensor(const LinearMap& other) const {
  Shape src = source_;
  src.insert(src.end(), other.source_.begin(), other.source_.end());
  Shape tgt = target_;
  tgt.insert(tgt.end(), other.target_.begin(), other.target_.end());
  const std::uint64_t inner = shape_size(other.source_);
  return from_function(field_, src, tgt, [&](Key k) { return outer(columns_[k / inner], other.columns_[k % inner]); });
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.field_ == b.field_ && a.source_ == b.source_ && a.target_ == b.target_ && a.columns_ == b.columns_;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (o.source_ != source_ || o.target_ != target_) throw DimensionMismatch("map difference shape mismatch");
  return from_function(field_, source_, target_, [&](Key k) { return columns_[k] - o.columns_[k]; });
}

}  // namespace qhopf
