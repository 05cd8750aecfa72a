#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/biproduct.hpp"

namespace qhopf {

/// Stage reports in order; the first failing stage ends the run.
struct PipelineResult {
  std::vector<ValidationReport> stages;
  std::optional<std::string> aborted_at;

  bool passed() const { return !aborted_at; }
};

/// Axioms, derived identities and (when given) the R-matrix certificate.
PipelineResult run_validation(const QuasiHopfAlgebra& h, const TensorElement* R);

/// double, pi, bi, braided_dual, transport, biproduct, chi.
PipelineResult run_projection(const QuasiHopfAlgebra& h, const TensorElement& R);

/// braided_dual and transport only; the closed forms are returned too.
struct BraidedDualResult {
  PipelineResult result;
  std::optional<BraidedHopfAlgebra> closed_form;
};
BraidedDualResult run_braided_dual(const QuasiHopfAlgebra& h, const TensorElement& R);

/// Builds D(H) K times, validating each stage (double suites and R_D).
struct TowerResult {
  PipelineResult result;
  std::vector<std::uint32_t> dims;
  std::optional<DoubleAlgebra> top;
};
TowerResult run_tower(const QuasiHopfAlgebra& h, unsigned levels);

/// Environment override QHOPF_DIM_CAP, default 32.
std::uint64_t dimension_cap();
/// dim^(2^K) as a saturating product.
std::uint64_t tower_dimension(std::uint64_t dim, unsigned levels);

std::string report_json(const PipelineResult& r);
std::string report_text(const PipelineResult& r);

}  // namespace qhopf
