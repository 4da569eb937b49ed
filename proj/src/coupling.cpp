#include "gradedsusy/coupling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace gradedsusy {

std::vector<std::vector<std::size_t>> coupling_graph(const GradedModel& m) {
  std::vector<std::size_t> parent(m.dim);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : m.basis)
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c)
        if (r != c && !g.op(r, c).is_zero()) {
          const std::size_t a = find(r), b = find(c);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < m.dim; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::optional<DegreeVector>> assign_component_degrees(const GradedModel& m, std::size_t seed_index,
                                                                  const DegreeVector& seed_degree) {
  if (seed_index >= m.dim) throw std::out_of_range("assign_component_degrees: seed index out of range");
  std::vector<std::optional<DegreeVector>> deg(m.dim);
  for (const auto& g : m.basis)
    if (g.degree != DegreeVector::zero(g.degree.rank()))
      for (std::size_t r = 0; r < m.dim; ++r)
        if (!g.op(r, r).is_zero())
          throw InconsistentGrading("generator " + g.name + " has a diagonal entry but nonzero degree");

  deg[seed_index] = seed_degree;
  std::queue<std::size_t> todo;
  todo.push(seed_index);
  while (!todo.empty()) {
    const std::size_t c = todo.front();
    todo.pop();
    for (const auto& g : m.basis)
      for (std::size_t r = 0; r < m.dim; ++r) {
        if (r == c) continue;
        if (g.op(r, c).is_zero() && g.op(c, r).is_zero()) continue;
        const DegreeVector d = *deg[c] + g.degree;
        if (!deg[r]) {
          deg[r] = d;
          todo.push(r);
        } else if (*deg[r] != d) {
          throw InconsistentGrading("index " + std::to_string(r) + " reached with degrees " + deg[r]->str() +
                                    " and " + d.str() + " via " + g.name);
        }
      }
  }
  return deg;
}

}  // namespace gradedsusy
