#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gradedsusy/graded_model.hpp"

namespace gradedsusy {

// Connected components of the graph on matrix indices with an edge (r, c)
// whenever some generator has a nonzero (r, c) entry. Components are sorted
// and listed in order of their smallest index.
std::vector<std::vector<std::size_t>> coupling_graph(const GradedModel& m);

struct InconsistentGrading : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Breadth-first degree propagation from a seeded index: a nonzero (r, c)
// entry of a generator of degree d forces deg(r) = deg(c) + d. Indices not
// reachable from the seed stay unset.
std::vector<std::optional<DegreeVector>> assign_component_degrees(const GradedModel& m, std::size_t seed_index,
                                                                  const DegreeVector& seed_degree);

}  // namespace gradedsusy
