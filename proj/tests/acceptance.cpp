// One PASS/FAIL line per acceptance criterion, with wall-clock time against its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gradedsusy/builders.hpp"
#include "gradedsusy/clifford.hpp"
#include "gradedsusy/coupling.hpp"
#include "gradedsusy/ladder.hpp"
#include "gradedsusy/osp12.hpp"
#include "gradedsusy/parallel.hpp"
#include "gradedsusy/spectrum.hpp"
#include "gradedsusy/verify.hpp"

using namespace gradedsusy;
using G = GaussianRational;

namespace {

unsigned threads() { return resolve_threads(std::nullopt); }

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_s) o.require(false, "over time limit");
  if (!o.ok) ++failures;
  std::printf("%s %2d  %-40s %8.3f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, s, limit_s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

bool structure_ok(GradedModel& m, std::size_t count, Outcome& o) {
  o.require(m.basis.size() == count, "generator count " + std::to_string(m.basis.size()));
  const ClosureReport c = verify_closure(m, threads());
  o.require(c.passed(), "closure");
  if (!c.passed()) return false;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t j = 0; j < m.basis.size(); ++j)
      for (const auto& e : c.table.cell(i, j))
        o.require(m.basis[e.k].degree == m.basis[i].degree + m.basis[j].degree, "degree slice");
  m.table = c.table;
  const JacobiReport jr = verify_jacobi(m, {false, threads()});
  const std::size_t n = count;
  o.require(jr.passed(), "Jacobi");
  o.require(jr.triples_checked == n * (n + 1) * (n + 2) / 6, "triple count");
  return o.ok;
}

}  // namespace

int main() {
  std::printf("threads: %u\n", threads());

  criterion(1, "Clifford relations m=2,3", 1, [](Outcome& o) {
    for (int m : {2, 3}) {
      const CliffordReport r = verify_clifford(m);
      o.require(r.passed(), "relations fail for m=" + std::to_string(m));
      o.require(r.pairs_checked == static_cast<std::size_t>(m * (2 * m + 1)), "pair count");
    }
  });

  criterion(2, "osp(1|2) relations", 1, [](Outcome& o) {
    const Osp12Report r = verify_osp12(build_osp12());
    o.require(r.passed(), "relation mismatch");
    o.require(r.checks.size() == 15, "expected 10 relations and 5 vanishing brackets");
  });

  criterion(3, "Cl(4) model: 20 generators", 60, [](Outcome& o) {
    GradedModel m = build_model("cl4");
    structure_ok(m, 20, o);
    o.require(verify_hermiticity(m).passed(), "Hermiticity");
  });

  criterion(4, "Cl(6) model: 40 generators, f/g/h", 600, [](Outcome& o) {
    GradedModel m = build_model("cl6b");
    o.require(m.dim == 16, "dimension");
    if (!structure_ok(m, 40, o)) return;
    const GreekConstants c = extract_greek_constants(m, *m.table);
    const std::map<std::string, G> f{{"0123", G(1)}, {"1023", G(1)}, {"3012", G(1)}, {"2013", G(-1)}};
    const std::map<std::string, G> g{{"0123", G(1)}, {"0312", G(1)},  {"1203", G(1)},
                                     {"2301", G(1)}, {"0213", G(-1)}, {"1302", G(-1)}};
    const std::map<std::string, G> h{{"0123", G(1)}, {"0231", G(1)}, {"1230", G(1)}, {"0132", G(-1)}};
    o.require(c.f == f, "f table");
    o.require(c.g == g, "g table");
    o.require(c.h == h, "h table");
  });

  criterion(5, "reducibility witness", 5, [](Outcome& o) {
    const auto comps = coupling_graph(build_model("cl2n"));
    o.require(comps.size() == 2, "cl2n component count");
    if (comps.size() == 2) {
      o.require(comps[0] == std::vector<std::size_t>{0, 2, 4, 6, 9, 11, 13, 15}, "first subspace");
      o.require(comps[1] == std::vector<std::size_t>{1, 3, 5, 7, 8, 10, 12, 14}, "second subspace");
    }
    o.require(coupling_graph(build_model("cl4")).size() == 1, "cl4 disconnected");
    o.require(coupling_graph(build_model("cl6b")).size() == 1, "cl6b disconnected");
  });

  criterion(6, "Cl(4) and Cl(2n) tables coincide", 60, [](Outcome& o) {
    GradedModel a = build_model("cl4"), b = build_model("cl2n");
    for (std::size_t k = 0; k < a.basis.size(); ++k) o.require(a.basis[k].name == b.basis[k].name, "basis order");
    o.require(ensure_table(a, threads()) == ensure_table(b, threads()), "coefficients differ");
  });

  criterion(7, "Klein oscillator identities", 30, [](Outcome& o) {
    for (const char* kind : {"cl4", "cl6b"}) {
      const GradedModel m = build_model(kind);
      const LadderSet l = build_ladder(m);
      const OscillatorReport r = verify_oscillator(m, l, std::string(kind) == "cl4" ? 4 : 2);
      o.require(r.passed(), std::string(kind) + " identity fails");
      std::size_t flagged = 0;
      for (const auto& c : r.checks)
        if (c.name == "[R,a+] = c a+" && c.status == "computed" && c.detail == "c = 1 (printed: -1)") ++flagged;
      o.require(flagged == l.ops.size(), std::string(kind) + " [R,a+] sign not flagged");
    }
  });

  criterion(8, "component grading", 1, [](Outcome& o) {
    auto grades = [](const char* kind) {
      std::vector<std::string> out;
      for (const auto& d : grade_components(build_model(kind))) out.push_back(d.str());
      return out;
    };
    o.require(grades("cl4") == std::vector<std::string>{"000", "001", "110", "111", "011", "010", "101", "100"},
              "cl4 ordering");
    o.require(grades("cl6b") == std::vector<std::string>{"000", "111", "110", "001", "011", "100", "101", "010",
                                                         "110", "001", "000", "111", "101", "010", "011", "100"},
              "cl6b ordering");
  });

  criterion(9, "spectrum at beta = 2", 60, [](Outcome& o) {
    const Rational beta(2);
    for (const auto& [kind, deg] : std::vector<std::pair<const char*, std::size_t>>{{"cl4", 4}, {"cl6b", 8}}) {
      const SpectrumReport r = excited_levels(build_ladder(build_model(kind)), beta, 4);
      o.require(r.levels.size() == 5, "level count");
      for (const auto& lv : r.levels) {
        o.require(lv.energy == Rational(5, 2) + Rational(lv.n), std::string(kind) + " energy");
        o.require(lv.degeneracy == deg, std::string(kind) + " degeneracy");
      }
      o.require(r.rejected_energy == Rational(-3, 2), "rejected branch energy");
    }
    const GradedModel m = build_model("cl4");
    const LadderSet l = build_ladder(m);
    const auto comp = grade_components(m);
    const GroundStates g = ground_states(l, beta);
    const WaveVector *p001 = nullptr, *p111 = nullptr;
    for (const auto& s : g.states) {
      if (wave_degree(comp, s).str() == "001") p001 = &s;
      if (wave_degree(comp, s).str() == "111") p111 = &s;
    }
    o.require(p001 && p111, "ground states of degree 001 and 111");
    if (!p001 || !p111) return;
    const Proportionality p = proportionality_check(l, comp, beta, "100", *p001, "010", *p111, LadderSide::kCreation);
    o.require(p.ratio && !p.ratio->is_zero(), "no exact ratio");
  });

  criterion(10, "Z2^4 lift: closure and Jacobi", 900, [](Outcome& o) {
    GradedModel m = build_cl2nm2(build_osp12().as_super(), 4);
    structure_ok(m, 40, o);
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : "SOME CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
