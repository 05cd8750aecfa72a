#include "qhopf/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

std::vector<std::uint64_t> strides_for(const Shape& shape) {
  if (shape.size() > kMaxDegree) throw DimensionMismatch("tensor degree exceeds " + std::to_string(kMaxDegree));
  std::vector<std::uint64_t> strides(shape.size());
  unsigned __int128 s = 1;
  for (std::size_t k = shape.size(); k-- > 0;) {
    strides[k] = static_cast<std::uint64_t>(s);
    if (shape[k] == 0) throw DimensionMismatch("zero-dimensional leg");
    s *= shape[k];
    if (s >> 63) throw DimensionMismatch("tensor space too large: " + shape_string(shape));
  }
  return strides;
}

}  // namespace

Shape uniform_shape(std::uint32_t dim, std::size_t degree) { return Shape(degree, dim); }

std::uint64_t shape_size(const Shape& shape) {
  std::uint64_t s = 1;
  for (auto d : shape) s *= d;
  return s;
}

std::string shape_string(const Shape& shape) {
  std::string s = "(";
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(shape[k]);
  }
  return s + ")";
}

TensorElement::TensorElement(FieldSpec field, Shape shape) : field_(field), shape_(std::move(shape)) {
  compute_strides();
}

void TensorElement::compute_strides() { strides_ = strides_for(shape_); }

TensorElement TensorElement::scalar(const Scalar& c) {
  TensorElement t(c.field(), {});
  if (!c.is_zero()) t.entries_.emplace_back(0, c);
  return t;
}

TensorElement TensorElement::basis(FieldSpec field, Shape shape, std::span<const std::uint32_t> indices,
                                   const Scalar& coeff) {
  TensorElement t(field, std::move(shape));
  if (indices.size() != t.degree()) throw DimensionMismatch("basis index count mismatch");
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= t.shape_[k]) throw DimensionMismatch("basis index out of range");
  }
  if (!coeff.is_zero()) t.entries_.emplace_back(t.encode(indices), coeff);
  return t;
}

TensorElement TensorElement::basis(FieldSpec field, Shape shape, std::initializer_list<std::uint32_t> indices) {
  std::vector<std::uint32_t> idx(indices);
  return basis(field, std::move(shape), idx, field.one());
}

TensorElement TensorElement::from_entries(FieldSpec field, Shape shape, std::vector<Entry> entries) {
  TensorElement t(field, std::move(shape));
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!t.entries_.empty() && t.entries_.back().first == e.first) {
      t.entries_.back().second += e.second;
    } else {
      t.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(t.entries_, [](const Entry& e) { return e.second.is_zero(); });
  const std::uint64_t total = shape_size(t.shape_);
  for (const auto& e : t.entries_) {
    if (e.first >= total) throw DimensionMismatch("entry key outside tensor space");
    if (e.second.field() != field) throw FieldMismatch("entry from a different field");
  }
  return t;
}

std::uint32_t TensorElement::dim() const {
  if (shape_.empty()) throw DimensionMismatch("degree-0 tensor has no leg dimension");
  for (auto d : shape_) {
    if (d != shape_[0]) throw DimensionMismatch("mixed leg dimensions " + shape_string(shape_));
  }
  return shape_[0];
}

TensorElement TensorElement::with_dual_mask(std::uint32_t mask) const {
  TensorElement t = *this;
  t.dual_mask_ = mask;
  return t;
}

Key TensorElement::encode(std::span<const std::uint32_t> indices) const {
  Key k = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) k += indices[i] * strides_[i];
  return k;
}

void TensorElement::decode(Key key, std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(key / strides_[i]);
    key -= out[i] * strides_[i];
  }
}

Scalar TensorElement::coeff_key(Key key) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, Key k) { return e.first < k; });
  if (it != entries_.end() && it->first == key) return it->second;
  return field_.zero();
}

Scalar TensorElement::coeff(std::span<const std::uint32_t> indices) const { return coeff_key(encode(indices)); }

Scalar TensorElement::scalar_value() const {
  if (!shape_.empty()) throw DimensionMismatch("scalar_value on tensor of degree " + std::to_string(degree()));
  return entries_.empty() ? field_.zero() : entries_.front().second;
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (shape_ != o.shape_) {
    throw DimensionMismatch("shape mismatch " + shape_string(shape_) + " vs " + shape_string(o.shape_));
  }
  if (field_ != o.field_) throw FieldMismatch("tensors over different fields");
}

TensorElement TensorElement::operator-() const {
  TensorElement t = *this;
  for (auto& e : t.entries_) e.second = -e.second;
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_compatible(o);
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) { return *this += -o; }

TensorElement operator*(const Scalar& c, const TensorElement& t) {
  TensorElement r(t.field_, t.shape_);
  r.dual_mask_ = t.dual_mask_;
  if (c.is_zero()) return r;
  r.entries_.reserve(t.entries_.size());
  for (const auto& e : t.entries_) r.entries_.emplace_back(e.first, c * e.second);
  return r;
}

TensorElement TensorElement::reshaped(Shape shape) const {
  if (shape_size(shape) != shape_size(shape_)) throw DimensionMismatch("reshape changes total size");
  TensorElement t(field_, std::move(shape));
  t.entries_ = entries_;
  return t;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.field_ == b.field_ && a.shape_ == b.shape_ && a.dual_mask_ == b.dual_mask_ && a.entries_ == b.entries_;
}

std::vector<std::uint32_t> TensorElement::first_difference(const TensorElement& a, const TensorElement& b) {
  a.check_compatible(b);
  TensorElement d = a - b;
  std::vector<std::uint32_t> idx;
  if (d.entries_.empty()) return idx;
  idx.resize(d.degree());
  d.decode(d.entries_.front().first, idx);
  return idx;
}

std::string TensorElement::to_string() const {
  std::ostringstream os;
  IndexBuf idx{};
  os << "[";
  bool first = true;
  for (const auto& [key, c] : entries_) {
    if (!first) os << ", ";
    first = false;
    decode(key, idx);
    os << "[";
    for (std::size_t k = 0; k < degree(); ++k) os << idx[k] << ",";
    os << c.to_string() << "]";
  }
  os << "]";
  return os.str();
}

TensorBuilder::TensorBuilder(FieldSpec field, Shape shape)
    : field_(field), shape_(std::move(shape)), strides_(strides_for(shape_)), scratch_(field.zero()) {}

Key TensorBuilder::encode(std::span<const std::uint32_t> indices) const {
  Key k = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) k += indices[i] * strides_[i];
  return k;
}

void TensorBuilder::add(Key key, const Scalar& c) {
  auto [it, inserted] = acc_.try_emplace(key, c);
  if (!inserted) it->second += c;
}

void TensorBuilder::add_product(Key key, const Scalar& a, const Scalar& b) {
  scratch_ = a;
  scratch_ *= b;
  add(key, scratch_);
}

TensorElement TensorBuilder::finish() {
  std::vector<TensorElement::Entry> entries;
  entries.reserve(acc_.size());
  for (auto& [k, v] : acc_) {
    if (!v.is_zero()) entries.emplace_back(k, std::move(v));
  }
  acc_.clear();
  return TensorElement::from_entries(field_, shape_, std::move(entries));
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
  if (a.field() != b.field()) throw FieldMismatch("outer product over different fields");
  Shape shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  const std::uint64_t scale = shape_size(b.shape());
  std::vector<TensorElement::Entry> entries;
  entries.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a.entries()) {
    for (const auto& [kb, cb] : b.entries()) entries.emplace_back(ka * scale + kb, ca * cb);
  }
  TensorElement t = TensorElement::from_entries(a.field(), std::move(shape), std::move(entries));
  return t.with_dual_mask(a.dual_mask() | (b.dual_mask() << a.degree()));
}

TensorElement permute_legs(const TensorElement& t, std::span<const std::size_t> perm) {
  if (perm.size() != t.degree()) throw DimensionMismatch("permutation size mismatch");
  Shape shape(perm.size());
  std::uint32_t mask = 0;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= perm.size() || seen[perm[j]]) throw DimensionMismatch("not a permutation");
    seen[perm[j]] = true;
    shape[j] = t.shape()[perm[j]];
    if (t.dual_mask() >> perm[j] & 1U) mask |= 1U << j;
  }
  TensorBuilder b(t.field(), shape);
  IndexBuf src{}, dst{};
  for (const auto& [key, c] : t.entries()) {
    t.decode(key, src);
    for (std::size_t j = 0; j < perm.size(); ++j) dst[j] = src[perm[j]];
    b.add(b.encode(std::span(dst.data(), perm.size())), c);
  }
  return b.finish().with_dual_mask(mask);
}

}  // namespace qhopf
