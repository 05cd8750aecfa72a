#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhopf/document.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/instances.hpp"
#include "qhopf/pipeline.hpp"
#include "qhopf/quasitriangular.hpp"

using namespace qhopf;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  unsigned levels = 1;
};

/// "builtin:NAME" selects a bundled instance, anything else is a path.
AlgebraDocument load_input(const std::string& input) {
  const std::string prefix = "builtin:";
  if (input.rfind(prefix, 0) == 0) {
    NamedInstance i = bundled_instance(input.substr(prefix.size()));
    AlgebraDocument d;
    d.algebra = std::move(i.algebra);
    d.r_matrix = std::move(i.r_matrix);
    d.notes = {i.description};
    return d;
  }
  return load_document(input);
}

int emit(const PipelineResult& r, const Options& o, nlohmann::json extra = {}) {
  if (o.format == "json") {
    nlohmann::json doc = nlohmann::json::parse(report_json(r));
    for (auto& [k, v] : extra.items()) doc[k] = v;
    std::cout << doc.dump(1) << "\n";
  } else {
    for (auto& [k, v] : extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    std::cout << report_text(r);
  }
  return r.passed() ? kExitPass : kExitFail;
}

int refuse(const Options& o, const std::string& what) {
  PipelineResult r;
  ValidationReport rep("guard");
  rep.fail("dimension_cap", {}, what);
  r.stages.push_back(rep);
  r.aborted_at = "guard";
  return emit(r, o);
}

bool over_cap(std::uint64_t dim) { return dim > dimension_cap(); }

nlohmann::json tensor_value(const TensorElement& t) { return nlohmann::json::parse(serialize_tensor(t)); }

int cmd_validate(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  return emit(run_validation(d.algebra, d.r_matrix ? &*d.r_matrix : nullptr), o);
}

int cmd_derive(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  const PipelineResult r = run_validation(d.algebra, d.r_matrix ? &*d.r_matrix : nullptr);
  nlohmann::json el;
  if (r.stages.size() > 1 && r.stages[1].passed()) {
    const DerivedElements dv = derive_all(d.algebra);
    el["gamma"] = tensor_value(dv.gamma);
    el["delta"] = tensor_value(dv.delta);
    el["f"] = tensor_value(dv.f);
    el["f_inv"] = tensor_value(dv.f_inv);
    el["p_R"] = tensor_value(dv.p_R);
    el["q_R"] = tensor_value(dv.q_R);
    if (d.r_matrix) {
      const QTCertificate c = validate_r_matrix(d.algebra, *d.r_matrix, dv);
      if (c.u) el["u"] = tensor_value(*c.u);
      if (c.u_inv) el["u_inv"] = tensor_value(*c.u_inv);
    }
  }
  return emit(r, o, {{"elements", el}});
}

int cmd_double(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  if (over_cap(d.algebra.dim)) return refuse(o, "base dimension exceeds the cap");
  PipelineResult r = run_validation(d.algebra, nullptr);
  if (!r.passed()) return emit(r, o);
  const DoubleAlgebra dd = build_double_unchecked(d.algebra);
  ValidationReport rep = verify_double(dd);
  rep.set_stage("double");
  r.stages.push_back(rep);
  if (!rep.passed()) {
    r.aborted_at = "double";
    return emit(r, o);
  }
  if (!o.output.empty()) {
    AlgebraDocument out;
    out.algebra = dd.inner;
    out.r_matrix = dd.R.R;
    out.inclusion = dd.inclusion;
    out.notes = {"quantum double of a " + std::to_string(d.algebra.dim) + "-dimensional algebra"};
    save_document(out, o.output);
  }
  return emit(r, o, {{"dim", dd.inner.dim}});
}

int cmd_project(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  if (!d.r_matrix) throw ParseError("r_matrix", "the project command needs an R-matrix");
  if (over_cap(d.algebra.dim)) return refuse(o, "base dimension exceeds the cap");
  return emit(run_projection(d.algebra, *d.r_matrix), o);
}

int cmd_braided_dual(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  if (!d.r_matrix) throw ParseError("r_matrix", "the braided-dual command needs an R-matrix");
  if (over_cap(d.algebra.dim)) return refuse(o, "base dimension exceeds the cap");
  const BraidedDualResult res = run_braided_dual(d.algebra, *d.r_matrix);
  nlohmann::json tables;
  if (res.closed_form) {
    const BraidedHopfAlgebra& b = *res.closed_form;
    auto graph = [](const LinearMap& m) {
      nlohmann::json cols = nlohmann::json::array();
      for (const auto& c : m.columns()) cols.push_back(tensor_value(c));
      return cols;
    };
    tables["action"] = graph(b.module.action);
    tables["coaction"] = graph(b.module.coaction);
    tables["mult"] = graph(b.mult);
    tables["unit"] = tensor_value(b.unit);
    tables["comult"] = graph(b.comult);
    tables["counit"] = graph(b.counit);
    tables["antipode"] = graph(b.antipode);
  }
  if (o.format != "json") return emit(res.result, o);
  return emit(res.result, o, {{"tables", tables}});
}

int cmd_tower(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  if (tower_dimension(d.algebra.dim, o.levels) > dimension_cap()) {
    return refuse(o, "dim^(2^K) = " + std::to_string(tower_dimension(d.algebra.dim, o.levels)) + " exceeds the cap " +
                         std::to_string(dimension_cap()));
  }
  const TowerResult t = run_tower(d.algebra, o.levels);
  if (t.result.passed() && t.top && !o.output.empty()) {
    AlgebraDocument out;
    out.algebra = t.top->inner;
    out.r_matrix = t.top->R.R;
    out.inclusion = t.top->inclusion;
    save_document(out, o.output);
  }
  return emit(t.result, o, {{"dims", t.dims}});
}

int cmd_report(const Options& o) {
  const AlgebraDocument d = load_input(o.input);
  if (d.r_matrix && !over_cap(d.algebra.dim)) return emit(run_projection(d.algebra, *d.r_matrix), o);
  return emit(run_validation(d.algebra, d.r_matrix ? &*d.r_matrix : nullptr), o);
}

int cmd_export(const Options& o) {
  const AlgebraDocument d = load_input("builtin:" + o.input);
  if (o.output.empty()) {
    std::cout << serialize_document(d);
  } else {
    save_document(d, o.output);
  }
  return kExitPass;
}

int cmd_list() {
  for (const auto& i : bundled_instances()) std::cout << i.name << "\t" << i.algebra.dim << "\t" << i.description << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite-dimensional quasi-Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;
  bool list = false;

  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const Options&), bool output) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("document", o.input, "algebra document, or builtin:NAME")->required();
    c->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
    if (output) c->add_option("-o,--output", o.output, "output document");
    c->callback([&run, fn] { run = fn; });
    return c;
  };
  add("validate", "full axiom report", cmd_validate, false);
  add("derive", "derived elements and their identities", cmd_derive, false);
  add("double", "build and verify the quantum double", cmd_double, true);
  add("project", "projection pipeline through the biproduct isomorphism", cmd_project, false);
  add("braided-dual", "braided Hopf structure on the dual and its transport check", cmd_braided_dual, false);
  add("tower", "iterate the double construction", cmd_tower, true)->add_option("-n,--levels", o.levels, "K")->required();
  add("report", "every applicable verification", cmd_report, false);
  add("export", "write a bundled instance as a document", cmd_export, true);
  app.add_subcommand("list", "bundled instances")->callback([&] { list = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }
  try {
    if (list) return cmd_list();
    return run(o);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationFailed& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
