#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gradedsusy/parallel.hpp"
#include "gradedsusy/serialize.hpp"

using namespace gradedsusy;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned threads = 0;
  bool timing = false;
  unsigned resolved() const { return resolve_threads(threads ? std::optional<unsigned>(threads) : std::nullopt); }
};

class Timer {
 public:
  void mark(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    phases_.push_back({phase, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }
  json to_json() const {
    json o = json::object();
    for (const auto& [k, v] : phases_) o[k] = v;
    return o;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> phases_;
};

void emit(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

GradedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return model_from_json(j);
}

std::string model_kind(const std::string& k) {
  if (k == "cl4" || k == "cl2nm2" || k == "cl2n" || k == "cl6b") return k;
  throw UsageError("unknown kind " + k);
}

PhaseRule phase_rule(const std::string& s) {
  if (s == "printed") return PhaseRule::kPrinted;
  if (s == "hermitian") return PhaseRule::kHermitian;
  throw UsageError("unknown phase rule " + s);
}

json model_summary(const GradedModel& m) {
  return {{"kind", m.kind}, {"n", m.n}, {"dim", m.dim}, {"generators", m.basis.size()}};
}

json check(const std::string& name, bool ok, json details = json::object()) {
  return {{"name", name}, {"status", ok ? "pass" : "fail"}, {"details", std::move(details)}};
}

// --- commands -------------------------------------------------------------

int cmd_gamma(int m, int j, bool verify) {
  if (verify) {
    const CliffordReport r = verify_clifford(m);
    emit(to_json(r), "");
    return r.passed() ? kOk : kFail;
  }
  std::cout << build_gamma(m, j).str();
  return kOk;
}

int cmd_model_build(const std::string& kind, int n, const std::string& algebra, const std::string& phase,
                    const std::string& out) {
  if (algebra != "osp12") throw UsageError("only --algebra osp12 is available");
  emit(model_to_json(build_model(model_kind(kind), n, phase_rule(phase))), out);
  return kOk;
}

int cmd_verify(const std::string& what, const std::string& model_path, bool exhaustive, const std::string& out,
               const Common& c) {
  GradedModel m = load_model(model_path);
  const unsigned threads = c.resolved();
  json rep = {{"command", "verify " + what}, {"model", model_summary(m)}};
  bool ok = true;
  if (what == "closure") {
    const ClosureReport r = verify_closure(m, threads);
    rep["closure"] = closure_to_json(r, m);
    ok = r.passed();
  } else if (what == "jacobi") {
    const ClosureReport cr = verify_closure(m, threads);
    if (!cr.passed()) {
      rep["closure"] = closure_to_json(cr, m);
      ok = false;
    } else {
      const JacobiReport r = verify_jacobi(m, {exhaustive, threads});
      rep["jacobi"] = to_json(r, m);
      ok = r.passed();
    }
  } else if (what == "hermiticity") {
    const HermiticityReport r = verify_hermiticity(m);
    rep["hermiticity"] = to_json(r, m);
    ok = r.passed();
  } else if (what == "gamma") {
    if (!m.realization || !m.realization->gamma) throw UsageError("model carries no grading involution");
    const GammaReport r = verify_gamma_condition(*m.realization);
    rep["gamma"] = to_json(r);
    ok = r.passed();
  } else {
    throw UsageError("unknown check " + what);
  }
  emit(rep, out);
  return ok ? kOk : kFail;
}

int cmd_scqm_build(const std::string& kind, const std::string& out) {
  const GradedModel m = build_model(model_kind(kind));
  emit(model_to_json(m), out);
  return kOk;
}

int cmd_scqm_oscillator(const std::string& kind, const std::string& out) {
  const GradedModel m = build_model(model_kind(kind));
  const LadderSet l = build_ladder(m);
  const OscillatorReport r = verify_oscillator(m, l, kind == "cl6b" ? 2 : 4);
  json rep = {{"command", "scqm verify-oscillator"}, {"model", model_summary(m)}, {"oscillator", to_json(r)}};
  emit(rep, out);
  return r.passed() ? kOk : kFail;
}

int cmd_spectrum(const std::string& kind, const std::string& beta_text, int levels, const std::string& out) {
  if (kind != "cl4" && kind != "cl6b") throw UsageError("spectrum: --kind must be cl4 or cl6b");
  Rational beta;
  try {
    beta = Rational::parse(beta_text);
  } catch (const std::exception&) {
    throw UsageError("bad --beta " + beta_text);
  }
  if (!(beta > Rational(1))) throw UsageError("spectrum: --beta must exceed 1");
  if (levels < 0) throw UsageError("spectrum: --levels must be nonnegative");
  const GradedModel m = build_model(kind);
  const SpectrumReport r = excited_levels(build_ladder(m), beta, levels);
  emit(to_json(r), out);
  return kOk;
}

int cmd_verify_all(const std::string& kind, int n, bool exhaustive, const std::string& out, const Common& c) {
  Timer timer;
  const unsigned threads = c.resolved();
  const bool z4 = n == 4;
  if (n != 3 && !z4) throw UsageError("verify-all: --n must be 3 or 4");
  if (z4 && kind != "cl4" && kind != "cl2nm2") throw UsageError("verify-all: --n 4 is the Cl(6) lift, use --kind cl4");
  GradedModel m = build_model(model_kind(kind), n);
  timer.mark("build");
  json checks = json::array();
  bool ok = true;
  auto add = [&](json ch) {
    if (ch["status"] == "fail") ok = false;
    checks.push_back(std::move(ch));
  };

  if (!z4) {
    const Osp12Report osp = verify_osp12(build_osp12());
    add(check("osp12 relations", osp.passed(), to_json(osp)));
    if (m.kind == "cl2nm2") {
      const GammaReport g = verify_gamma_condition(*m.realization);
      add(check("gamma condition", g.passed(), to_json(g)));
    }
  }
  const ClosureReport cr = verify_closure(m, threads);
  add(check("closure", cr.passed(), closure_to_json(cr, m)));
  timer.mark("closure");
  if (cr.passed()) {
    m.table = cr.table;
    const JacobiReport jr = verify_jacobi(m, {exhaustive, threads});
    add(check("jacobi", jr.passed(), to_json(jr, m)));
  } else {
    add(check("jacobi", false, {{"skipped", "closure failed"}}));
  }
  timer.mark("jacobi");
  if (!z4) {
    const HermiticityReport hr = verify_hermiticity(m);
    add(check("hermiticity", hr.passed(), to_json(hr, m)));
    const auto comps = coupling_graph(m);
    json cj = {{"components", comps}, {"reducible", comps.size() > 1}};
    // The Cl(2n) model is the reducible example; two blocks is the expected outcome there.
    add(check("coupling graph", m.kind == "cl2n" ? comps.size() == 2 : comps.size() == 1, cj));
    if (m.kind != "cl2n") {
      const LadderSet l = build_ladder(m);
      const OscillatorReport osc = verify_oscillator(m, l, m.kind == "cl6b" ? 2 : 4);
      add(check("oscillator", osc.passed(), to_json(osc)));
    }
    timer.mark("identities");
  }
  json rep = {{"command", "verify-all"}, {"model", model_summary(m)}, {"checks", checks}};
  if (c.timing) rep["timing"] = timer.to_json();
  emit(rep, out);
  return ok ? kOk : kFail;
}

int cmd_structure_constants(const std::string& kind, const std::string& format, const std::string& out,
                            const Common& c) {
  if (format != "json" && format != "text") throw UsageError("--format must be json or text");
  GradedModel m = build_model(model_kind(kind));
  const BracketTable& t = ensure_table(m, c.resolved());
  if (format == "json") {
    json rep = {{"model", model_summary(m)}, {"table", table_to_json(m, t)}};
    if (m.kind == "cl6b") rep["greek"] = to_json(extract_greek_constants(m, t));
    emit(rep, out);
  } else {
    std::string text = table_to_text(m, t);
    if (m.kind == "cl6b") text += "\n" + greek_to_text(extract_greek_constants(m, t));
    emit_text(text, out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Z2^n-graded extensions of osp(1|2) superconformal mechanics"};
  app.require_subcommand(1);
  // Global flags may follow any subcommand.
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: GRADEDSUSY_THREADS or all cores)");
  app.add_flag("--timing", common.timing, "Include wall-clock timing in reports");

  int gm = 2, gj = 1;
  bool gverify = false;
  auto* gamma = app.add_subcommand("gamma", "Print a Clifford generator or verify Cl(2m)");
  gamma->add_option("--m", gm, "Half the Clifford rank")->required()->check(CLI::Range(1, 8));
  gamma->add_option("--j", gj, "Generator index 1..2m");
  gamma->add_flag("--verify", gverify, "Check the defining relations instead");

  std::string kind = "cl4", algebra = "osp12", phase = "printed", out, model_path, beta = "2", format = "json";
  int n = 3, levels = 4;
  bool exhaustive = false;

  auto* model = app.add_subcommand("model", "Graded model files");
  model->require_subcommand(1);
  auto* mbuild = model->add_subcommand("build", "Build a model and write it as JSON");
  mbuild->add_option("--kind", kind, "cl2nm2 | cl4 | cl2n | cl6b")->required();
  mbuild->add_option("--n", n, "Grading rank")->check(CLI::Range(2, 6));
  mbuild->add_option("--algebra", algebra, "Input superalgebra");
  mbuild->add_option("--phase", phase, "printed | hermitian (Cl(2(n-1)) lift only)");
  mbuild->add_option("--json", out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a saved model");
  std::string what;
  verify->add_option("check", what, "closure | jacobi | hermiticity | gamma")->required();
  verify->add_option("--model", model_path, "Model JSON file")->required();
  verify->add_flag("--exhaustive", exhaustive, "Jacobi over all ordered triples");
  verify->add_option("--json", out, "Report path (default stdout)");

  auto* scqm = app.add_subcommand("scqm", "Superconformal mechanics models");
  scqm->require_subcommand(1);
  auto* sbuild = scqm->add_subcommand("build", "Build a model and write it as JSON");
  sbuild->add_option("--kind", kind, "cl4 | cl2n | cl6b")->required();
  sbuild->add_option("--json", out, "Output path (default stdout)");
  auto* sosc = scqm->add_subcommand("verify-oscillator", "Check the ladder-operator identities");
  sosc->add_option("--kind", kind, "cl4 | cl2n | cl6b")->required();
  sosc->add_option("--json", out, "Report path (default stdout)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact spectrum of R_000");
  spectrum_cmd->add_option("--kind", kind, "cl4 | cl6b")->required();
  spectrum_cmd->add_option("--beta", beta, "Coupling p/q, must exceed 1");
  spectrum_cmd->add_option("--levels", levels, "Highest level");
  spectrum_cmd->add_option("--json", out, "Report path (default stdout)");

  auto* all = app.add_subcommand("verify-all", "Run every check for one model");
  all->add_option("--kind", kind, "cl4 | cl2n | cl6b")->required();
  all->add_option("--n", n, "3, or 4 for the Z2^4 lift (closure and Jacobi only)");
  all->add_flag("--exhaustive", exhaustive, "Jacobi over all ordered triples");
  all->add_option("--json", out, "Report path (default stdout)");

  auto* sc = app.add_subcommand("structure-constants", "Export the bracket table");
  sc->add_option("--kind", kind, "cl4 | cl2n | cl6b")->required();
  sc->add_option("--format", format, "json | text");
  sc->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gamma) {
      if (!gverify && (gj < 1 || gj > 2 * gm)) throw UsageError("--j must be in 1..2m");
      return cmd_gamma(gm, gj, gverify);
    }
    if (*mbuild) return cmd_model_build(kind, n, algebra, phase, out);
    if (*verify) return cmd_verify(what, model_path, exhaustive, out, common);
    if (*sbuild) return cmd_scqm_build(kind, out);
    if (*sosc) return cmd_scqm_oscillator(kind, out);
    if (*spectrum_cmd) return cmd_spectrum(kind, beta, levels, out);
    if (*all) return cmd_verify_all(kind, n, exhaustive, out, common);
    if (*sc) return cmd_structure_constants(kind, format, out, common);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClosureViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const NoNormalizableSolution& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
