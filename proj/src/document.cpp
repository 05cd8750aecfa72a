#include "qhopf/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

using json = nlohmann::json;

/// Source legs followed by target legs.
TensorElement graph_of(const LinearMap& m) {
  Shape shape = m.source();
  shape.insert(shape.end(), m.target().begin(), m.target().end());
  const std::uint64_t tsize = shape_size(m.target());
  std::vector<TensorElement::Entry> e;
  for (std::uint64_t k = 0; k < m.columns().size(); ++k) {
    for (const auto& [key, c] : m.column(k).entries()) e.emplace_back(k * tsize + key, c);
  }
  return TensorElement::from_entries(m.field(), std::move(shape), std::move(e));
}

LinearMap map_of(const TensorElement& g, const Shape& source, const Shape& target) {
  const std::uint64_t tsize = shape_size(target);
  std::vector<std::vector<TensorElement::Entry>> cols(shape_size(source));
  for (const auto& [key, c] : g.entries()) cols[key / tsize].emplace_back(key % tsize, c);
  std::vector<TensorElement> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.push_back(TensorElement::from_entries(g.field(), target, std::move(c)));
  return LinearMap(g.field(), source, target, std::move(out));
}

json tensor_json(const TensorElement& t) {
  json out = json::array();
  std::vector<std::uint32_t> idx(t.degree());
  for (const auto& [key, c] : t.entries()) {
    t.decode(key, idx);
    json rec = json::array();
    for (auto i : idx) rec.push_back(i);
    rec.push_back(c.to_string());
    out.push_back(std::move(rec));
  }
  return out;
}

TensorElement tensor_from(const json& j, const std::string& field, FieldSpec f, const Shape& shape) {
  if (!j.is_array()) throw ParseError(field, "expected an array of entries");
  std::vector<TensorElement::Entry> e;
  std::vector<std::uint32_t> idx(shape.size());
  TensorElement probe(f, shape);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& rec = j[r];
    const std::string where = field + "[" + std::to_string(r) + "]";
    if (!rec.is_array() || rec.size() != shape.size() + 1) {
      throw ParseError(where, "expected " + std::to_string(shape.size()) + " indices and a scalar");
    }
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (!rec[k].is_number_unsigned() || rec[k].get<std::uint64_t>() >= shape[k]) {
        throw ParseError(where, "index " + std::to_string(k) + " out of range");
      }
      idx[k] = rec[k].get<std::uint32_t>();
    }
    if (!rec.back().is_string()) throw ParseError(where, "scalar must be a string");
    Scalar c;
    try {
      c = f.parse(rec.back().get<std::string>());
    } catch (const Error& ex) {
      throw ParseError(where, ex.what());
    }
    e.emplace_back(probe.encode(idx), std::move(c));
  }
  return TensorElement::from_entries(f, shape, std::move(e));
}

const json& require(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(key, "missing");
  return *it;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("document", "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document", "top level must be an object");
  const json& ver = require(doc, "format_version");
  if (!ver.is_number_integer() || ver.get<int>() != kFormatVersion) {
    throw ParseError("format_version", "unsupported version");
  }
  const json& fj = require(doc, "field");
  if (!fj.is_string()) throw ParseError("field", "expected a string");
  FieldSpec f;
  try {
    f = FieldSpec::from_name(fj.get<std::string>());
  } catch (const Error& e) {
    throw ParseError("field", e.what());
  }
  const json& dj = require(doc, "dim");
  if (!dj.is_number_unsigned() || dj.get<std::uint64_t>() == 0 || dj.get<std::uint64_t>() > 4096) {
    throw ParseError("dim", "expected a positive integer");
  }
  const std::uint32_t n = dj.get<std::uint32_t>();
  const json& bj = require(doc, "basis");
  if (!bj.is_array() || bj.size() != n) throw ParseError("basis", "expected " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (const auto& l : bj) {
    if (!l.is_string()) throw ParseError("basis", "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  auto t = [&](const std::string& key, std::size_t degree) {
    return tensor_from(require(doc, key), key, f, uniform_shape(n, degree));
  };
  auto m = [&](const std::string& key, std::size_t sd, std::size_t td) {
    return map_of(t(key, sd + td), uniform_shape(n, sd), uniform_shape(n, td));
  };
  std::optional<TensorElement> phi_inv;
  if (doc.contains("phi_inv")) phi_inv = t("phi_inv", 3);
  AlgebraDocument out;
  try {
    out.algebra = make_quasi_hopf(f, std::move(labels), m("mult", 2, 1), t("unit", 1), m("comult", 1, 2),
                                  m("counit", 1, 0), t("phi", 3), phi_inv, m("antipode", 1, 1), t("alpha", 1),
                                  t("beta", 1));
  } catch (const NotInvertible& e) {
    throw ValidationFailed("phi_invertible", e.what());
  }
  if (doc.contains("r_matrix")) out.r_matrix = t("r_matrix", 2);
  if (doc.contains("inclusion")) {
    const json& ij = doc["inclusion"];
    if (!ij.is_object() || !ij.contains("source_dim") || !ij["source_dim"].is_number_unsigned()) {
      throw ParseError("inclusion", "expected {source_dim, entries}");
    }
    const std::uint32_t s = ij["source_dim"].get<std::uint32_t>();
    if (s == 0 || s > n) throw ParseError("inclusion.source_dim", "out of range");
    out.inclusion = map_of(tensor_from(require(ij, "entries"), "inclusion.entries", f, {s, n}), {s}, {n});
  }
  if (doc.contains("notes")) {
    const json& nj = doc["notes"];
    if (!nj.is_array()) throw ParseError("notes", "expected an array of strings");
    for (const auto& s : nj) {
      if (!s.is_string()) throw ParseError("notes", "expected an array of strings");
      out.notes.push_back(s.get<std::string>());
    }
  }
  return out;
}

AlgebraDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("document", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string serialize_tensor(const TensorElement& t) { return tensor_json(t).dump(); }

std::string serialize_document(const AlgebraDocument& d) {
  const QuasiHopfAlgebra& h = d.algebra;
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["field"] = h.field.name();
  doc["dim"] = h.dim;
  doc["basis"] = h.labels;
  doc["mult"] = tensor_json(graph_of(h.mult));
  doc["unit"] = tensor_json(h.unit);
  doc["comult"] = tensor_json(graph_of(h.comult));
  doc["counit"] = tensor_json(graph_of(h.counit));
  doc["phi"] = tensor_json(h.phi);
  doc["phi_inv"] = tensor_json(h.phi_inv);
  doc["antipode"] = tensor_json(graph_of(h.antipode));
  doc["alpha"] = tensor_json(h.alpha);
  doc["beta"] = tensor_json(h.beta);
  if (d.r_matrix) doc["r_matrix"] = tensor_json(*d.r_matrix);
  if (d.inclusion) {
    doc["inclusion"] = {{"source_dim", d.inclusion->source()[0]}, {"entries", tensor_json(graph_of(*d.inclusion))}};
  }
  if (!d.notes.empty()) doc["notes"] = d.notes;
  return doc.dump(1) + "\n";
}

void save_document(const AlgebraDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("output", "cannot write " + path);
  out << serialize_document(doc);
  if (!out) throw ParseError("output", "write failed for " + path);
}

}  // namespace qhopf
