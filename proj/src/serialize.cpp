#include "gradedsusy/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace gradedsusy {
namespace {

constexpr const char* kModelFormat = "gradedsusy-model";
constexpr int kModelVersion = 1;

std::string bracket_symbol(const GradedModel& m, std::size_t i, std::size_t j) {
  return bracket_kind(m.basis[i].degree, m.basis[j].degree) == BracketKind::kAnticommutator ? "{}" : "[]";
}

json ops_to_json(const std::vector<NamedOp>& ops) {
  json a = json::array();
  for (const auto& o : ops) a.push_back({{"name", o.name}, {"scale_exp", o.scale_exp}, {"op", to_json(o.op)}});
  return a;
}

std::vector<NamedOp> ops_from_json(const json& j) {
  std::vector<NamedOp> out;
  for (const auto& o : j) out.push_back({o.at("name"), matrix_op_from_json(o.at("op")), o.at("scale_exp")});
  return out;
}

}  // namespace

json to_json(const GaussianRational& z) { return {{"re", z.re.str()}, {"im", z.im.str()}}; }

GaussianRational gaussian_from_json(const json& j) {
  return {Rational::parse(j.at("re").get<std::string>()), Rational::parse(j.at("im").get<std::string>())};
}

json to_json(const BetaPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

BetaPoly beta_poly_from_json(const json& j) {
  std::vector<GaussianRational> c;
  for (const auto& e : j) c.push_back(gaussian_from_json(e));
  return BetaPoly(std::move(c));
}

json to_json(const DiffOp& d) {
  json a = json::array();
  for (const auto& t : d.terms()) a.push_back({{"x", t.xpow}, {"d", t.dpow}, {"c", to_json(t.coeff)}});
  return a;
}

DiffOp diffop_from_json(const json& j) {
  std::vector<WeylTerm> terms;
  for (const auto& t : j) terms.push_back({t.at("x"), t.at("d"), beta_poly_from_json(t.at("c"))});
  return DiffOp(std::move(terms));
}

json to_json(const MatrixOp& m) {
  json e = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (!m(r, c).is_zero()) e.push_back({{"r", r}, {"c", c}, {"op", to_json(m(r, c))}});
  return {{"dim", m.dim()}, {"entries", e}};
}

MatrixOp matrix_op_from_json(const json& j) {
  MatrixOp m(j.at("dim").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const std::size_t r = e.at("r"), c = e.at("c");
    if (r >= m.dim() || c >= m.dim()) throw std::invalid_argument("matrix_op_from_json: index out of range");
    m(r, c) = diffop_from_json(e.at("op"));
  }
  return m;
}

json to_json(const ConstMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ConstMatrix const_matrix_from_json(const json& j) {
  ConstMatrix m(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (j[r].size() != j.size()) throw std::invalid_argument("const_matrix_from_json: not square");
    for (std::size_t c = 0; c < j.size(); ++c) m(r, c) = gaussian_from_json(j[r][c]);
  }
  return m;
}

json model_to_json(const GradedModel& m) {
  json gens = json::array();
  for (const auto& g : m.basis)
    gens.push_back({{"name", g.name},
                    {"family", g.family},
                    {"label", g.label},
                    {"degree", g.degree.str()},
                    {"scale_exp", g.scale_exp},
                    {"op", to_json(g.op)}});
  json j = {{"format", kModelFormat}, {"version", kModelVersion}, {"kind", m.kind}, {"n", m.n}, {"dim", m.dim}};
  j["algebra"] = m.metadata.count("algebra") ? m.metadata.at("algebra") : "";
  j["metadata"] = m.metadata;
  j["generators"] = gens;
  if (m.realization) {
    json r = {{"even", ops_to_json(m.realization->even)}, {"odd", ops_to_json(m.realization->odd)}};
    r["gamma"] = m.realization->gamma ? to_json(*m.realization->gamma) : json(nullptr);
    j["realization"] = r;
  } else {
    j["realization"] = nullptr;
  }
  return j;
}

GradedModel model_from_json(const json& j) {
  if (j.value("format", "") != kModelFormat) throw std::invalid_argument("model_from_json: not a model file");
  if (j.value("version", 0) != kModelVersion) throw std::invalid_argument("model_from_json: unsupported version");
  GradedModel m;
  m.kind = j.at("kind");
  m.n = j.at("n");
  m.dim = j.at("dim");
  m.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
  for (const auto& g : j.at("generators")) {
    const DegreeVector d = DegreeVector::parse(g.at("degree").get<std::string>());
    if (d.rank() != m.n) throw std::invalid_argument("model_from_json: degree rank mismatch");
    MatrixOp op = matrix_op_from_json(g.at("op"));
    if (op.dim() != m.dim) throw std::invalid_argument("model_from_json: generator dimension mismatch");
    m.basis.push_back({g.at("name"), g.at("family"), g.at("label"), d, op.with_degree(d), g.at("scale_exp")});
  }
  if (j.contains("realization") && !j.at("realization").is_null()) {
    const json& r = j.at("realization");
    SuperRealization s;
    s.even = ops_from_json(r.at("even"));
    s.odd = ops_from_json(r.at("odd"));
    if (!r.at("gamma").is_null()) s.gamma = const_matrix_from_json(r.at("gamma"));
    m.realization = std::move(s);
  }
  return m;
}

json to_json(const CliffordReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"j", x.j}, {"k", x.k}, {"relation", x.relation}});
  return {{"m", r.m},
          {"dim", r.dim},
          {"pairs_checked", r.pairs_checked},
          {"hermitian_checked", r.hermitian_checked},
          {"passed", r.passed()},
          {"violations", v}};
}

json to_json(const GammaReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"generator", x.generator}, {"relation", x.relation}});
  return {{"checked", r.checked}, {"passed", r.passed()}, {"violations", v}};
}

json to_json(const Osp12Report& r) {
  json c = json::array();
  for (const auto& x : r.checks)
    c.push_back({{"name", x.name},
                 {"status", x.passed ? "pass" : "fail"},
                 {"expected", x.expected},
                 {"computed", x.computed}});
  return {{"passed", r.passed()}, {"checks", c}};
}

json to_json(const OscillatorReport& r) {
  json c = json::array();
  for (const auto& x : r.checks)
    c.push_back({{"name", x.name}, {"label", x.label}, {"status", x.status}, {"details", x.detail}});
  return {{"passed", r.passed()}, {"checks", c}};
}

json to_json(const HermiticityReport& r, const GradedModel&) {
  return {{"checked", r.checked}, {"passed", r.passed()}, {"failures", r.failures}};
}

json to_json(const JacobiReport& r, const GradedModel& m) {
  json f = json::array();
  for (const auto& x : r.failures)
    f.push_back({{"triple", {m.basis[x.i].name, m.basis[x.j].name, m.basis[x.k].name}}, {"residual", x.residual}});
  return {{"triples_checked", r.triples_checked},
          {"exhaustive", r.exhaustive},
          {"passed", r.passed()},
          {"failures", f}};
}

json closure_to_json(const ClosureReport& r, const GradedModel& m) {
  json f = json::array();
  for (const auto& x : r.failures)
    f.push_back({{"pair", {m.basis[x.i].name, m.basis[x.j].name}}, {"residual", x.residual}});
  json a = json::array();
  for (const auto& [i, j] : r.antisymmetry_failures) a.push_back({m.basis[i].name, m.basis[j].name});
  return {{"pairs_checked", r.pairs_checked},
          {"passed", r.passed()},
          {"failures", f},
          {"antisymmetry_failures", a}};
}

json table_to_json(const GradedModel& m, const BracketTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.cell(i, j).empty()) continue;
      json terms = json::array();
      for (const auto& e : t.cell(i, j))
        terms.push_back({{"target", m.basis[e.k].name}, {"coeff", to_json(conventional_coefficient(m, i, j, e))}});
      rows.push_back({{"left", m.basis[i].name},
                      {"right", m.basis[j].name},
                      {"bracket", bracket_symbol(m, i, j)},
                      {"terms", terms}});
    }
  return rows;
}

std::string table_to_text(const GradedModel& m, const BracketTable& t) {
  struct Row {
    std::string l, r, b, c, k;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      for (const auto& e : t.cell(i, j))
        rows.push_back({m.basis[i].name, m.basis[j].name, bracket_symbol(m, i, j),
                        conventional_coefficient(m, i, j, e).str(), m.basis[e.k].name});
  std::size_t w[4] = {4, 5, 7, 5};
  for (const auto& r : rows) {
    w[0] = std::max(w[0], r.l.size());
    w[1] = std::max(w[1], r.r.size());
    w[3] = std::max(w[3], r.c.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n - s.size() + 2, ' '); };
  os << pad("left", w[0]) << pad("right", w[1]) << pad("bracket", w[2]) << pad("coeff", w[3]) << "target\n";
  for (const auto& r : rows)
    os << pad(r.l, w[0]) << pad(r.r, w[1]) << pad(r.b, w[2]) << pad(r.c, w[3]) << r.k << "\n";
  return os.str();
}

json to_json(const GreekConstants& g) {
  auto one = [](const std::map<std::string, GaussianRational>& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[k] = v.str();
    return o;
  };
  return {{"f", one(g.f)}, {"g", one(g.g)}, {"h", one(g.h)}};
}

std::string greek_to_text(const GreekConstants& g) {
  std::ostringstream os;
  for (const auto& [name, table] : {std::pair{"f", &g.f}, std::pair{"g", &g.g}, std::pair{"h", &g.h}})
    for (const auto& [k, v] : *table) os << name << k << "  " << v.str() << "\n";
  return os.str();
}

json to_json(const SpectrumReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    json o = {{"energy", l.energy.str()}, {"degeneracy", l.degeneracy}};
    if (l.lplus_in_span) o["lplus_in_span"] = *l.lplus_in_span;
    levels.push_back(o);
  }
  return {{"beta", r.beta.str()},
          {"branch", std::string(1, r.branch)},
          {"rejected_energy", r.rejected_energy.str()},
          {"levels", levels}};
}

}  // namespace gradedsusy
