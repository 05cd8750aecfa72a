#include "qhopf/report.hpp"

#include "qhopf/errors.hpp"

#include <algorithm>

namespace qhopf {

CheckResult& ValidationReport::entry(const std::string& label) {
  for (auto& c : checks_) {
    if (c.label == label) return c;
  }
  checks_.push_back(CheckResult{stage_, label, true, {}, {}});
  return checks_.back();
}

void ValidationReport::pass(const std::string& label, std::string detail) {
  CheckResult& c = entry(label);
  if (c.passed && !detail.empty()) c.detail = std::move(detail);
}

void ValidationReport::fail(const std::string& label, std::vector<std::uint32_t> witness, std::string detail) {
  CheckResult& c = entry(label);
  if (!c.passed) return;
  c.passed = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

void ValidationReport::record(const std::string& label, bool ok, std::vector<std::uint32_t> witness,
                              std::string detail) {
  if (ok) {
    pass(label);
  } else {
    fail(label, std::move(witness), std::move(detail));
  }
}

bool ValidationReport::expect_equal(const std::string& label, const TensorElement& lhs, const TensorElement& rhs,
                                    std::vector<std::uint32_t> input) {
  if (lhs.shape() == rhs.shape() && lhs.field() == rhs.field() && lhs.entries() == rhs.entries()) {
    pass(label);
    return true;
  }
  std::string detail;
  if (lhs.shape() != rhs.shape()) {
    detail = "shape " + shape_string(lhs.shape()) + " vs " + shape_string(rhs.shape());
  } else {
    auto diff = TensorElement::first_difference(lhs, rhs);
    detail = "entry " + witness_string(diff) + ": " + lhs.coeff(diff).to_string() + " vs " +
             rhs.coeff(diff).to_string();
    input.insert(input.end(), diff.begin(), diff.end());
  }
  fail(label, std::move(input), std::move(detail));
  return false;
}

void ValidationReport::append(const ValidationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool ValidationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& label) const {
  for (const auto& c : checks_) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (!c.passed) out.push_back(c.label);
  }
  return out;
}

std::string witness_string(const std::vector<std::uint32_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

void require_valid(const ValidationReport& r) {
  for (const auto& c : r.checks()) {
    if (!c.passed) throw ValidationFailed(c.label, witness_string(c.witness) + (c.detail.empty() ? "" : " " + c.detail));
  }
}

void compare_maps(ValidationReport& r, const std::string& label, const LinearMap& a, const LinearMap& b) {
  TensorElement probe(a.field(), a.source());
  std::vector<std::uint32_t> idx(a.source().size());
  for (Key k = 0; k < shape_size(a.source()); ++k) {
    if (a.column(k) == b.column(k)) continue;
    probe.decode(k, idx);
    r.expect_equal(label, a.column(k), b.column(k), idx);
    return;
  }
  r.pass(label);
}

}  // namespace qhopf
