// Acceptance run: one PASS/FAIL line per criterion, exact checks only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/pipeline.hpp"
#include "qhopf/tensor_ops.hpp"
#include "qhopf/yetter_drinfeld.hpp"

using namespace qhopf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects the outcome of one criterion.
struct Outcome {
  bool ok = true;
  std::string note;
  double slowest = 0;  // longest single timed unit, seconds
  int units = 0;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
  void require(const ValidationReport& r, const std::string& what) {
    if (!r.passed()) {
      const auto f = r.failures();
      require(false, what + ": " + (f.empty() ? std::string("?") : f.front()));
    }
  }
  /// Runs `body` and checks it against a per-unit limit.
  void timed(const std::string& what, double limit, const std::function<void()>& body) {
    ++units;
    const auto t0 = Clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      require(false, what + " threw: " + e.what());
    }
    const double s = since(t0);
    slowest = std::max(slowest, s);
    require(s < limit, what + " exceeded " + std::to_string(limit) + " s");
  }
};

struct Certified {
  std::string name;
  QuasiHopfAlgebra h;
  TensorElement R;
};

std::vector<Certified> certified_instances() {
  std::vector<Certified> out;
  for (const auto& i : bundled_instances()) {
    if (i.r_matrix) out.push_back({i.name, i.algebra, *i.r_matrix});
  }
  const DoubleAlgebra d = build_double(bundled_instance("fZ2w").algebra);
  out.push_back({"D(fZ2w)", d.inner, d.R.R});
  return out;
}

int failures = 0;

void report(int n, const std::string& title, double limit, const std::function<Outcome()>& run) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("threw: ") + e.what();
  }
  const double s = since(t0);
  if (s >= limit) o.require(false, "total time over " + std::to_string(limit) + " s");
  if (!o.ok) ++failures;
  std::printf("criterion %2d: %s  %-48s %3d units %8.2f s (limit %.0f s)%s%s\n", n, o.ok ? "PASS" : "FAIL",
              title.c_str(), o.units, s, limit, o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<std::string> axiom_names = {"kZ2", "kZ3", "kZ2xZ2", "fZ2", "fZ2w", "sweedler",
                                                "semion", "fZ3w", "fZ2xZ2w"};
  const auto instances = bundled_instances();

  report(1, "axiom suites on bundled instances", 60, [&] {
    Outcome o;
    o.require(instances.size() == axiom_names.size(), "bundled set changed");
    for (const auto& i : instances) {
      o.timed(i.name, 1.0, [&] { o.require(validate_all(i.algebra), i.name); });
    }
    return o;
  });

  report(2, "derived identities", 60, [&] {
    Outcome o;
    const std::vector<std::string> labels = {"twist_antipode", "twist_gamma_delta", "twist_reassociator",
                                             "pq_intertwine",  "pq_inverse",        "q_reassociator",
                                             "p_reassociator", "q_phi_relation",    "p_phi_relation"};
    for (const auto& i : instances) {
      o.timed(i.name, 5.0, [&] {
        const ValidationReport r = verify_derived(i.algebra, derive_all(i.algebra));
        o.require(r, i.name);
        for (const auto& l : labels) o.require(r.find(l) != nullptr, i.name + " missing " + l);
      });
    }
    return o;
  });

  report(3, "double construction, dim <= 4", 600, [&] {
    Outcome o;
    for (const auto& i : instances) {
      if (i.algebra.dim > 4) continue;
      o.timed(i.name, 60.0, [&] {
        const DoubleAlgebra d = build_double_unchecked(i.algebra);
        const ValidationReport r = verify_double(d);
        o.require(r, i.name);
        for (const char* l : {"dcomult_generating", "dantipode_generating", "dcounit_generating", "r_comult_left",
                              "r_comult_right", "r_quasi_cocommutative", "r_counit"}) {
          o.require(r.find(l) != nullptr, i.name + std::string(" missing ") + l);
        }
      });
    }
    return o;
  });

  report(4, "classical double oracle", 30, [&] {
    Outcome o;
    for (const char* name : {"kZ2", "kZ3", "sweedler"}) {
      o.timed(name, 30.0, [&] {
        const QuasiHopfAlgebra h = bundled_instance(name).algebra;
        const DoubleAlgebra d = build_double_unchecked(h);
        o.require(d.inner.mult == oracle::double_mult(h), std::string(name) + " multiplication");
        o.require(d.inner.comult == oracle::double_comult(h), std::string(name) + " comultiplication");
      });
    }
    return o;
  });

  const auto cert = certified_instances();

  report(5, "projection is a quasitriangular morphism", 300, [&] {
    Outcome o;
    for (const auto& c : cert) {
      o.timed(c.name, 300.0, [&] {
        const DoubleAlgebra d = build_double_unchecked(c.h);
        const QuasiHopfProjection p = make_projection(c.h, d.inner, d.inclusion, projection_pi(d, c.R));
        const ValidationReport r = verify_projection(p, &d.R.R, &c.R);
        o.require(r, c.name);
        o.require(r.find("pi_section") && r.find("pi_r_matrix"), c.name + " incomplete");
      });
    }
    return o;
  });

  report(6, "quasitriangular invariants", 60, [&] {
    Outcome o;
    for (const auto& c : cert) {
      o.timed(c.name, 5.0, [&] {
        const QTCertificate q = validate_r_matrix(c.h, c.R);
        o.require(q.report, c.name);
        o.require(q.u && q.u_inv, c.name + " u");
        if (!q.u || !q.u_inv) return;
        o.require(c.h.mul(*q.u, *q.u_inv) == c.h.unit && c.h.mul(*q.u_inv, *q.u) == c.h.unit, c.name + " u inverse");
        o.require(c.h.eps(*q.u).is_one(), c.name + " eps(u)");
        const LinearMap s2 = c.h.antipode.after(c.h.antipode);
        const LinearMap conj = LinearMap::from_function(c.h.field, {c.h.dim}, {c.h.dim}, [&](Key k) {
          return c.h.mul(c.h.mul(*q.u, c.h.basis(static_cast<std::uint32_t>(k))), *q.u_inv);
        });
        o.require(s2 == conj, c.name + " S^2");
        o.require(q.holds("r_antipode_twist"), c.name + " ext");
      });
    }
    return o;
  });

  report(7, "biproduct isomorphism", 120, [&] {
    Outcome o;
    for (const auto& c : cert) {
      o.timed(c.name, 120.0, [&] {
        const DoubleAlgebra d = build_double_unchecked(c.h);
        const BraidedHopfAlgebra b = braided_dual(d, c.R);
        const QuasiHopfAlgebra bp = build_biproduct_unchecked(c.h, b);
        o.require(validate_all(bp), c.name + " biproduct");
        const LinearMap chi = chi_iso(d, c.R);
        o.require(verify_chi(bp, d, chi), c.name + " chi");
      });
    }
    return o;
  });

  report(8, "closed forms equal transported structures", 120, [&] {
    Outcome o;
    for (const auto& c : cert) {
      o.timed(c.name, 120.0, [&] {
        const DoubleAlgebra d = build_double_unchecked(c.h);
        const Extraction x = bi_extract(d, c.R);
        o.require(x.report, c.name + " extraction");
        o.require(x.report.find("circ_projection") != nullptr, c.name + " rPi missing");
        const BraidedHopfAlgebra b = braided_dual(d, c.R);
        o.require(compare_braided(x.B, b), c.name + " transport");
      });
    }
    return o;
  });

  report(9, "Yetter-Drinfeld category", 60, [&] {
    Outcome o;
    for (const auto& c : cert) {
      if (c.h.dim > 4) continue;
      o.timed(c.name, 60.0, [&] {
        const DoubleAlgebra d = build_double_unchecked(c.h);
        const BraidedHopfAlgebra b = braided_dual(d, c.R);
        const YDModule& m = b.module;
        const YDModule mm = yd_tensor(c.h, m, m);
        const YDModule triv = trivial_yd(c.h);
        const YDModule reg = module_from_qt(c.h, c.R, regular_module(c.h));
        o.require(validate_yd(c.h, m), c.name + " dual");
        o.require(validate_yd(c.h, mm), c.name + " square");
        o.require(check_braiding_inverse(c.h, m, m), c.name + " c inverse");
        o.require(check_braiding_inverse(c.h, m, reg), c.name + " c inverse mixed");
        o.require(check_hexagons(c.h, m, triv, m), c.name + " hexagon B,k,B");
        o.require(check_hexagons(c.h, reg, m, reg), c.name + " hexagon H,B,H");
        if (c.h.dim <= 2) o.require(check_hexagons(c.h, m, m, m), c.name + " hexagon B,B,B");
        o.require(module_from_qt(c.h, c.R, m.module()).coaction == m.coaction, c.name + " functor");
      });
    }
    return o;
  });

  report(10, "tower over the twisted function algebra, K = 2", 600, [&] {
    Outcome o;
    o.timed("tower", 600.0, [&] {
      const TowerResult t = run_tower(bundled_instance("fZ2w").algebra, 2);
      for (const auto& s : t.result.stages) o.require(s, s.stage());
      o.require(t.dims == std::vector<std::uint32_t>{2, 4, 16}, "dimensions");
    });
    return o;
  });

  report(11, "negative instances", 60, [&] {
    Outcome o;
    const auto neg = negative_instances();
    o.require(neg.size() == 4, "negative set changed");
    for (const auto& n : neg) {
      const ValidationReport r = validate_all(n.algebra);
      const CheckResult* c = r.find(n.expected_label);
      o.require(c && !c->passed, n.name + " not rejected by " + n.expected_label);
      o.require(c && !c->witness.empty(), n.name + " without witness");
    }
    const Group z2 = cyclic_group(2);
    ThreeCocycle w = trivial_cocycle(z2, FieldSpec::rationals());
    w.values[7] = FieldSpec::rationals().from_int(2);
    bool threw = false;
    try {
      function_algebra(z2, w);
    } catch (const CocycleInvalid&) {
      threw = true;
    }
    o.require(threw, "non-cocycle accepted by the constructor");
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
