#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhopf/linear_map.hpp"

namespace qhopf {

/// Outcome of one axiom or identity check. The witness is the first failing
/// basis tuple: input indices followed by the first differing output index.
struct CheckResult {
  std::string stage;
  std::string label;
  bool passed = true;
  std::vector<std::uint32_t> witness;
  std::string detail;
};

class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string stage) : stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

  void pass(const std::string& label, std::string detail = {});
  void fail(const std::string& label, std::vector<std::uint32_t> witness, std::string detail);
  /// Records a single check; keeps only the first failure per label.
  void record(const std::string& label, bool ok, std::vector<std::uint32_t> witness = {}, std::string detail = {});
  /// Compares lhs and rhs, recording the label. `input` is prepended to the
  /// witness. Repeated calls with the same label fold into one entry.
  bool expect_equal(const std::string& label, const TensorElement& lhs, const TensorElement& rhs,
                    std::vector<std::uint32_t> input = {});

  void append(const ValidationReport& other);

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& label) const;
  /// Labels of all failing checks.
  std::vector<std::string> failures() const;

 private:
  CheckResult& entry(const std::string& label);

  std::string stage_;
  std::vector<CheckResult> checks_;
};

std::string witness_string(const std::vector<std::uint32_t>& w);

/// Compares two maps column by column; the witness is the first source
/// tuple whose images differ.
void compare_maps(ValidationReport& r, const std::string& label, const LinearMap& a, const LinearMap& b);

/// Throws ValidationFailed with the first failing label and witness.
void require_valid(const ValidationReport& r);

}  // namespace qhopf
