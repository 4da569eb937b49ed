#include "gradedsusy/builders.hpp"

#include <algorithm>

#include "gradedsusy/clifford.hpp"

namespace gradedsusy {
namespace {

std::string family_name(const std::string& name, const std::string& label) { return name + "_" + label; }

void check_dims(const SuperRealization& r) {
  const std::size_t d = r.dim();
  for (const auto* list : {&r.even, &r.odd})
    for (const auto& g : *list)
      if (g.op.dim() != d) throw std::invalid_argument("SuperRealization: generators differ in dimension");
}

}  // namespace

int f_exponent(const DegreeVector& a, PhaseRule rule) {
  const int n = a.rank();
  int w = 0;
  for (int l = 0; l < n - 1; ++l) w += a[l];
  const int parity = a.parity();
  int f = parity * w;
  if (rule == PhaseRule::kHermitian) {
    f += w * (w - 1) / 2;
  } else {
    for (int k = 0; k + 2 < n; ++k) {
      int prod = a[k];
      for (int l = k + 1; l < n - 1; ++l) prod *= a[l];
      f += prod;
    }
  }
  return f & 1;
}

GammaReport verify_gamma_condition(const SuperRealization& r) {
  if (!r.gamma) throw GammaMissing("verify_gamma_condition: no grading involution");
  GammaReport rep;
  const MatrixOp g = MatrixOp::from_const(*r.gamma);
  if (!(g * g == MatrixOp::identity(g.dim()))) rep.violations.push_back({"G", "G^2=I"});
  ++rep.checked;
  for (const auto& x : r.even) {
    ++rep.checked;
    if (!bracket(x.op, g, BracketKind::kCommutator).is_zero()) rep.violations.push_back({x.name, "[X0,G]=0"});
  }
  for (const auto& x : r.odd) {
    ++rep.checked;
    if (!bracket(x.op, g, BracketKind::kAnticommutator).is_zero()) rep.violations.push_back({x.name, "{X1,G}=0"});
  }
  return rep;
}

GradedModel build_cl2nm2(const SuperRealization& r, int n, PhaseRule rule) {
  if (n < 2) throw std::invalid_argument("build_cl2nm2: n must be at least 2");
  check_dims(r);
  if (!r.gamma) throw GammaMissing("build_cl2nm2: the realization has no grading involution");
  if (!verify_gamma_condition(r).passed()) throw GammaConditionFailed("build_cl2nm2: gamma condition fails");

  const int m = n - 1;
  const MatrixOp g = MatrixOp::from_const(*r.gamma);
  GradedModel model;
  model.kind = "cl2nm2";
  model.n = n;
  model.dim = (std::size_t{1} << m) * r.dim();
  model.metadata["clifford"] = "Cl(" + std::to_string(2 * m) + ")";
  model.metadata["phase_rule"] = rule == PhaseRule::kPrinted ? "printed" : "hermitian";
  model.realization = r;

  for (const auto& a : DegreeVector::all(n)) {
    std::vector<int> idx;
    int gpow = 0;
    for (int j = 0; j < m; ++j)
      if (a[j]) {
        idx.push_back(j + 1);
        ++gpow;
      }
    ConstMatrix c = gamma_product(m, idx);
    c *= GaussianRational::i_pow(f_exponent(a, rule));
    for (const auto& x : a.parity() ? r.odd : r.even) {
      MatrixOp inner = gpow % 2 ? x.op * g : x.op;
      model.basis.push_back({family_name(x.name, a.str()), x.name, a.str(), a, tensor(c, inner).with_degree(a),
                             x.scale_exp});
    }
  }
  return model;
}

GradedModel build_cl2n(const SuperRealization& r, int n) {
  if (n < 2) throw std::invalid_argument("build_cl2n: n must be at least 2");
  check_dims(r);
  GradedModel model;
  model.kind = "cl2n";
  model.n = n;
  model.dim = (std::size_t{1} << n) * r.dim();
  model.metadata["clifford"] = "Cl(" + std::to_string(2 * n) + ")";
  model.realization = r;

  for (const auto& a : DegreeVector::all(n)) {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (a[j]) idx.push_back(j + 1);
    const int w = static_cast<int>(idx.size());
    ConstMatrix c = gamma_product(n, idx);
    c *= GaussianRational::i_pow((w * (w - 1) / 2) % 2);
    for (const auto& x : a.parity() ? r.odd : r.even)
      model.basis.push_back({family_name(x.name, a.str()), x.name, a.str(), a, tensor(c, x.op).with_degree(a),
                             x.scale_exp});
  }
  return model;
}

DegreeVector greek_degree(int mu) {
  switch (mu) {
    case 0: return DegreeVector::parse("111");
    case 1: return DegreeVector::parse("100");
    case 2: return DegreeVector::parse("010");
    case 3: return DegreeVector::parse("001");
    default: throw std::invalid_argument("greek_degree: index must be 0..3");
  }
}

GradedModel build_cl6b(const SuperRealization& r) {
  check_dims(r);
  constexpr int m = 3;
  GradedModel model;
  model.kind = "cl6b";
  model.n = 3;
  model.dim = (std::size_t{1} << m) * r.dim();
  model.metadata["clifford"] = "Cl(6)";
  model.realization = r;

  auto gamma_of = [](const std::vector<int>& greek) {
    std::vector<int> idx;
    for (int mu : greek)
      if (mu != 0) idx.push_back(mu);
    return gamma_product(m, idx);
  };
  auto add = [&](const std::vector<NamedOp>& gens, const std::string& label, const DegreeVector& d,
                 const ConstMatrix& c) {
    for (const auto& x : gens)
      model.basis.push_back({family_name(x.name, label), x.name, label, d, tensor(c, x.op).with_degree(d),
                             x.scale_exp});
  };
  auto label_of = [](const std::vector<int>& greek) {
    std::string s;
    for (int mu : greek) s.push_back(static_cast<char>('0' + mu));
    return s;
  };
  auto degree_of = [](const std::vector<int>& greek) {
    DegreeVector d = DegreeVector::zero(3);
    for (int mu : greek) d = d + greek_degree(mu);
    return d;
  };

  add(r.even, "000", DegreeVector::zero(3), ConstMatrix::identity(std::size_t{1} << m));
  for (int mu = 0; mu < 4; ++mu) add(r.odd, label_of({mu}), greek_degree(mu), gamma_of({mu}));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      ConstMatrix c = gamma_of({mu, nu});
      c *= GaussianRational::i_pow(1 - greek_degree(mu).dot(greek_degree(nu)));
      add(r.even, label_of({mu, nu}), degree_of({mu, nu}), c);
    }
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      for (int rho = nu + 1; rho < 4; ++rho) {
        ConstMatrix c = gamma_of({mu, nu, rho});
        c *= GaussianRational::i();
        add(r.odd, label_of({mu, nu, rho}), degree_of({mu, nu, rho}), c);
      }
  ConstMatrix c = gamma_of({1, 2, 3});
  c *= GaussianRational::i();
  add(r.even, "0123", DegreeVector::zero(3), c);
  return model;
}

}  // namespace gradedsusy
