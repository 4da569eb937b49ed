#include "gradedsusy/ladder.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradedsusy/clifford.hpp"

namespace gradedsusy {
namespace {

const MatrixOp& op_of(const GradedModel& m, const std::string& name) { return m.basis[m.require(name)].op; }

// Coefficient c with lhs = c * basis, or nullopt.
std::optional<BetaPoly> ratio(const MatrixOp& lhs, const MatrixOp& basis) {
  const MatrixOp* b[] = {&basis};
  try {
    return decompose(lhs, std::span<const MatrixOp* const>(b)).front();
  } catch (const NotInSpan&) {
    return std::nullopt;
  }
}

}  // namespace

const LadderOp& LadderSet::find(std::string_view label) const {
  for (const auto& o : ops)
    if (o.label == label) return o;
  throw std::out_of_range("LadderSet: no ladder label " + std::string(label));
}

LadderSet build_ladder(const GradedModel& m) {
  for (const char* name : {"H_000", "K_000", "D_000"})
    if (!m.index_of(name)) throw std::invalid_argument("build_ladder: model lacks " + std::string(name));
  const GaussianRational i = GaussianRational::i();
  LadderSet l;
  l.dim = m.dim;
  const MatrixOp& h = op_of(m, "H_000");
  const MatrixOp& k = op_of(m, "K_000");
  const MatrixOp& d = op_of(m, "D_000");
  l.R = h + k;
  const MatrixOp half_kh = BetaPoly(Rational(1, 2)) * (k - h);
  l.Lplus = half_kh + BetaPoly(i) * d;
  l.Lminus = half_kh - BetaPoly(i) * d;
  for (const auto& g : m.basis) {
    if (g.family != "S") continue;
    auto q = m.index_of("Q_" + g.label);
    if (!q) continue;
    const MatrixOp iq = BetaPoly(i) * m.basis[*q].op;
    l.ops.push_back({g.label, g.degree, g.op + iq, g.op - iq});
  }
  if (l.ops.empty()) throw std::invalid_argument("build_ladder: model has no S/Q pairs");
  l.F = kron(ConstMatrix::identity(m.dim / 2), pauli(3));
  return l;
}

bool OscillatorReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OscillatorCheck& c) { return c.status != "fail"; });
}

OscillatorReport verify_oscillator(const GradedModel& m, const LadderSet& l, int printed_pair_coeff) {
  OscillatorReport rep;
  const std::size_t n = l.dim;
  const MatrixOp id = MatrixOp::identity(n);
  const MatrixOp f = MatrixOp::from_const(l.F);
  // I - 2 beta F
  const MatrixOp deform = id - BetaPoly::monomial(GaussianRational(2), 1) * f;

  auto check = [&](const std::string& name, const std::string& label, const MatrixOp& residual) {
    rep.checks.push_back({name, label, residual.is_zero() ? "pass" : "fail", residual.is_zero() ? "" : residual.str()});
  };

  check("F^2 = I", "", f * f - id);
  check("[R,L+] = 2L+", "", bracket(l.R, l.Lplus, BracketKind::kCommutator) - BetaPoly(2) * l.Lplus);
  check("[R,L-] = -2L-", "", bracket(l.R, l.Lminus, BracketKind::kCommutator) + BetaPoly(2) * l.Lminus);
  {
    std::string bad;
    for (const auto& g : m.basis) {
      const BracketKind kind = g.degree.parity() ? BracketKind::kAnticommutator : BracketKind::kCommutator;
      if (!bracket(f, g.op, kind).is_zero()) bad += g.name + " ";
    }
    rep.checks.push_back({"F grades the generators", "", bad.empty() ? "pass" : "fail", bad});
  }

  // Internal a = sqrt 2 * conventional a, so products of two ladder
  // operators carry an extra factor 2 relative to the conventional identity.
  for (const auto& o : l.ops) {
    check("a^dagger = a+", o.label, o.ann.adjoint() - o.cre);
    check("[a,a+] = I - 2bF", o.label, bracket(o.ann, o.cre, BracketKind::kCommutator) - BetaPoly(2) * deform);
    check("{a,a+} = 2R", o.label, bracket(o.ann, o.cre, BracketKind::kAnticommutator) - BetaPoly(4) * l.R);
    check("{F,a} = 0", o.label, bracket(f, o.ann, BracketKind::kAnticommutator));
    check("{F,a+} = 0", o.label, bracket(f, o.cre, BracketKind::kAnticommutator));
    check("R = a+a + (I - 2bF)/2", o.label, BetaPoly(2) * l.R - (o.cre * o.ann + deform));
    check("[R,a] = -a", o.label, bracket(l.R, o.ann, BracketKind::kCommutator) + o.ann);

    auto sign = ratio(bracket(l.R, o.cre, BracketKind::kCommutator), o.cre);
    const bool plus = sign && *sign == BetaPoly(1);
    rep.checks.push_back({"[R,a+] = c a+", o.label, plus ? "computed" : "fail",
                          "c = " + (sign ? sign->str() : std::string("not proportional")) + " (printed: -1)"});

    auto pair_coeff = [&](const MatrixOp& x, const MatrixOp& target, const std::string& name, int printed) {
      auto c = ratio(bracket(x, x, BracketKind::kAnticommutator), target);
      // Conventional coefficient is half the internal one.
      std::optional<BetaPoly> conv;
      if (c) conv = *c * GaussianRational(Rational(1, 2));
      const bool four = conv && *conv == BetaPoly(4);
      rep.checks.push_back({name, o.label, four ? "computed" : "fail",
                            "c = " + (conv ? conv->str() : std::string("not proportional")) +
                                " (printed: " + std::to_string(printed) + ")"});
    };
    pair_coeff(o.cre, l.Lplus, "{a+,a+} = c L+", printed_pair_coeff);
    pair_coeff(o.ann, l.Lminus, "{a,a} = c L-", printed_pair_coeff);
  }
  return rep;
}

}  // namespace gradedsusy
