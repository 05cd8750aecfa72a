#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qhopf/linear_map.hpp"

namespace qhopf {

/// A tensor whose legs carry names, so that Sweedler-style expressions such as
/// Σ X¹_(1,1) y¹ x¹ ⊗ ... can be written leg by leg. Legs are produced by outer
/// products of factors, transformed by linear maps, and finally read out in a
/// chosen order with take().
class LegExpr {
 public:
  LegExpr(TensorElement t, std::vector<std::string> names);
  static LegExpr scalar(const Scalar& c);

  friend LegExpr operator*(const LegExpr& a, const LegExpr& b);

  /// Replaces the input legs by the output legs of `m`; the map's source shape
  /// must match the inputs and its target shape the outputs.
  LegExpr& apply(const LinearMap& m, const std::vector<std::string>& in, const std::vector<std::string>& out);
  LegExpr& map(const LinearMap& m, const std::string& leg) { return apply(m, {leg}, {leg}); }
  LegExpr& split(const LinearMap& comult, const std::string& leg, const std::string& first, const std::string& second) {
    return apply(comult, {leg}, {first, second});
  }
  /// Replaces `legs` by their product (in the listed order) under `mult`.
  LegExpr& merge(const LinearMap& mult, const std::string& out, const std::vector<std::string>& legs);
  /// Evaluates a functional on a leg, removing it.
  LegExpr& contract(const LinearMap& functional, const std::string& leg) { return apply(functional, {leg}, {}); }
  LegExpr& rename(const std::string& from, const std::string& to);
  /// legs[j] ↦ t^j · legs[j] for the components of t (degree = legs.size()).
  LegExpr& left_multiply(const TensorElement& t, const LinearMap& mult, const std::vector<std::string>& legs);
  /// legs[j] ↦ legs[j] · t^j.
  LegExpr& right_multiply(const std::vector<std::string>& legs, const TensorElement& t, const LinearMap& mult);
  /// Combines legs into one leg of the product dimension (row-major).
  LegExpr& fuse(const std::string& out, const std::vector<std::string>& legs);

  TensorElement take(const std::vector<std::string>& order) const;
  const TensorElement& tensor() const { return t_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t position(const std::string& leg) const;

  TensorElement t_;
  std::vector<std::string> names_;
};

}  // namespace qhopf
