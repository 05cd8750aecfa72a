#include "qhopf/leg_expr.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

LegExpr::LegExpr(TensorElement t, std::vector<std::string> names) : t_(std::move(t)), names_(std::move(names)) {
  if (names_.size() != t_.degree()) throw DimensionMismatch("leg name count does not match tensor degree");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw DimensionMismatch("duplicate leg name " + names_[i]);
    }
  }
}

LegExpr LegExpr::scalar(const Scalar& c) { return LegExpr(TensorElement::scalar(c), {}); }

LegExpr operator*(const LegExpr& a, const LegExpr& b) {
  std::vector<std::string> names = a.names_;
  names.insert(names.end(), b.names_.begin(), b.names_.end());
  return LegExpr(outer(a.t_, b.t_).with_dual_mask(0), std::move(names));
}

std::size_t LegExpr::position(const std::string& leg) const {
  auto it = std::find(names_.begin(), names_.end(), leg);
  if (it == names_.end()) throw DimensionMismatch("no leg named " + leg);
  return static_cast<std::size_t>(it - names_.begin());
}

LegExpr& LegExpr::apply(const LinearMap& m, const std::vector<std::string>& in, const std::vector<std::string>& out) {
  if (m.source_degree() != in.size() || m.target_degree() != out.size()) {
    throw DimensionMismatch("map arity does not match leg lists");
  }
  std::vector<std::size_t> in_pos;
  for (std::size_t j = 0; j < in.size(); ++j) {
    in_pos.push_back(position(in[j]));
    if (t_.shape()[in_pos.back()] != m.source()[j]) {
      throw DimensionMismatch("leg " + in[j] + " has dimension " + std::to_string(t_.shape()[in_pos.back()]) +
                              ", map expects " + std::to_string(m.source()[j]));
    }
  }
  std::vector<std::size_t> rest;
  std::vector<std::string> names;
  Shape shape;
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (std::find(in_pos.begin(), in_pos.end(), k) == in_pos.end()) {
      rest.push_back(k);
      names.push_back(names_[k]);
      shape.push_back(t_.shape()[k]);
    }
  }
  for (const auto& o : out) {
    if (std::find(names.begin(), names.end(), o) != names.end()) throw DimensionMismatch("duplicate leg name " + o);
    names.push_back(o);
  }
  shape.insert(shape.end(), m.target().begin(), m.target().end());

  const std::uint64_t tsize = shape_size(m.target());
  std::vector<std::uint64_t> src_strides(in.size());
  {
    std::uint64_t s = 1;
    for (std::size_t j = in.size(); j-- > 0;) {
      src_strides[j] = s;
      s *= m.source()[j];
    }
  }
  TensorBuilder b(t_.field(), shape);
  IndexBuf idx{};
  for (const auto& [key, c] : t_.entries()) {
    t_.decode(key, idx);
    Key src = 0;
    for (std::size_t j = 0; j < in.size(); ++j) src += idx[in_pos[j]] * src_strides[j];
    Key base = 0;
    for (std::size_t r : rest) base = base * t_.shape()[r] + idx[r];
    base *= tsize;
    for (const auto& [ck, cc] : m.column(src).entries()) b.add_product(base + ck, c, cc);
  }
  t_ = b.finish();
  names_ = std::move(names);
  return *this;
}

LegExpr& LegExpr::merge(const LinearMap& mult, const std::string& out, const std::vector<std::string>& legs) {
  if (legs.empty()) throw DimensionMismatch("merge of no legs");
  std::string acc = legs.front();
  for (std::size_t j = 1; j < legs.size(); ++j) {
    std::string tmp = "\x01merge" + std::to_string(j);
    apply(mult, {acc, legs[j]}, {tmp});
    acc = tmp;
  }
  if (acc != out) rename(acc, out);
  return *this;
}

LegExpr& LegExpr::rename(const std::string& from, const std::string& to) {
  if (from == to) return *this;
  if (std::find(names_.begin(), names_.end(), to) != names_.end()) throw DimensionMismatch("duplicate leg name " + to);
  names_[position(from)] = to;
  return *this;
}

LegExpr& LegExpr::left_multiply(const TensorElement& t, const LinearMap& mult, const std::vector<std::string>& legs) {
  if (t.degree() != legs.size()) throw DimensionMismatch("left_multiply: degree does not match leg list");
  std::vector<std::string> tmp;
  for (std::size_t j = 0; j < legs.size(); ++j) tmp.push_back("\x02lm" + std::to_string(j));
  *this = LegExpr(t.with_dual_mask(0), tmp) * *this;
  for (std::size_t j = 0; j < legs.size(); ++j) apply(mult, {tmp[j], legs[j]}, {legs[j]});
  return *this;
}

LegExpr& LegExpr::right_multiply(const std::vector<std::string>& legs, const TensorElement& t, const LinearMap& mult) {
  if (t.degree() != legs.size()) throw DimensionMismatch("right_multiply: degree does not match leg list");
  std::vector<std::string> tmp;
  for (std::size_t j = 0; j < legs.size(); ++j) tmp.push_back("\x02rm" + std::to_string(j));
  *this = *this * LegExpr(t.with_dual_mask(0), tmp);
  for (std::size_t j = 0; j < legs.size(); ++j) apply(mult, {legs[j], tmp[j]}, {legs[j]});
  return *this;
}

LegExpr& LegExpr::fuse(const std::string& out, const std::vector<std::string>& legs) {
  Shape src;
  for (const auto& l : legs) src.push_back(t_.shape()[position(l)]);
  const Shape tgt{static_cast<std::uint32_t>(shape_size(src))};
  FieldSpec f = t_.field();
  auto m = LinearMap::from_function(f, src, tgt, [&](Key k) { return TensorElement::from_entries(f, tgt, {{k, f.one()}}); });
  return apply(m, legs, {out});
}

TensorElement LegExpr::take(const std::vector<std::string>& order) const {
  if (order.size() != names_.size()) {
    std::string all;
    for (const auto& n : names_) all += " " + n;
    throw DimensionMismatch("take() must list every leg; present:" + all);
  }
  std::vector<std::size_t> perm;
  for (const auto& n : order) perm.push_back(position(n));
  return permute_legs(t_, perm);
}

}  // namespace qhopf
