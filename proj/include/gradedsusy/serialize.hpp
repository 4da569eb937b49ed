#pragma once

#include <string>

#include <json.hpp>

#include "gradedsusy/builders.hpp"
#include "gradedsusy/clifford.hpp"
#include "gradedsusy/graded_model.hpp"
#include "gradedsusy/ladder.hpp"
#include "gradedsusy/osp12.hpp"
#include "gradedsusy/spectrum.hpp"
#include "gradedsusy/verify.hpp"

namespace gradedsusy {

using json = nlohmann::ordered_json;

// {"re":"p/q","im":"r/s"}
json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);
// One scalar object per power of beta, lowest first.
json to_json(const BetaPoly& p);
BetaPoly beta_poly_from_json(const json& j);
// [{"x":m,"d":k,"c":<beta poly>}, ...] in (x, d) order.
json to_json(const DiffOp& d);
DiffOp diffop_from_json(const json& j);
// {"dim":n,"entries":[{"r":..,"c":..,"op":..}, ...]} listing nonzero entries.
json to_json(const MatrixOp& m);
MatrixOp matrix_op_from_json(const json& j);
json to_json(const ConstMatrix& m);
ConstMatrix const_matrix_from_json(const json& j);

// Model file: format, version, kind, n, algebra, dim, metadata, generators,
// realization.
json model_to_json(const GradedModel& m);
GradedModel model_from_json(const json& j);

json to_json(const CliffordReport& r);
json to_json(const GammaReport& r);
json to_json(const Osp12Report& r);
json to_json(const OscillatorReport& r);
json to_json(const HermiticityReport& r, const GradedModel& m);
json to_json(const JacobiReport& r, const GradedModel& m);
json closure_to_json(const ClosureReport& r, const GradedModel& m);
// Full bracket table in conventional normalization.
json table_to_json(const GradedModel& m, const BracketTable& t);
// Aligned columns: left, right, bracket, coefficient, target.
std::string table_to_text(const GradedModel& m, const BracketTable& t);
json to_json(const GreekConstants& g);
std::string greek_to_text(const GreekConstants& g);
json to_json(const SpectrumReport& r);

}  // namespace gradedsusy
