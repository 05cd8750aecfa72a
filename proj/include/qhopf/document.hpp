#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

inline constexpr int kFormatVersion = 1;

/// An algebra as stored on disk, with the optional extras a double carries.
struct AlgebraDocument {
  QuasiHopfAlgebra algebra;
  std::optional<TensorElement> r_matrix;
  /// Inclusion of the base algebra, present on documents written by `double`.
  std::optional<LinearMap> inclusion;
  std::vector<std::string> notes;
};

/// Parses a JSON document. Throws ParseError naming the offending field;
/// a missing Φ⁻¹ is computed from Φ.
AlgebraDocument parse_document(const std::string& text);
AlgebraDocument load_document(const std::string& path);

/// Canonical form: sorted keys, entries in key order, one-space indent.
std::string serialize_document(const AlgebraDocument& doc);
void save_document(const AlgebraDocument& doc, const std::string& path);

std::string serialize_tensor(const TensorElement& t);

}  // namespace qhopf
