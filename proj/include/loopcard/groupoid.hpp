#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "loopcard/caps.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/group.hpp"
#include "loopcard/rational.hpp"

namespace loopcard {

// A skeletal finite groupoid: one automorphism group per isomorphism class
// of objects. Models an arbitrary pi-finite 1-type; may be empty.
struct FiniteGroupoid {
  std::vector<GroupPtr> components;
};

inline FiniteGroupoid classifying_groupoid(FiniteGroup G) {
  FiniteGroupoid A;
  A.components.push_back(std::make_shared<const FiniteGroup>(std::move(G)));
  return A;
}

inline FiniteGroupoid classifying_groupoid(GroupPtr G) {
  FiniteGroupoid A;
  A.components.push_back(std::move(G));
  return A;
}

inline std::uint64_t pi0_count(const FiniteGroupoid& A) { return A.components.size(); }

// Free loop space of a 1-type: one component per conjugacy class of each
// input component, with automorphism group the centralizer of the class
// representative. Outer order follows the input components, inner order the
// class representatives.
inline FiniteGroupoid loop_groupoid(const FiniteGroupoid& A,
                                    std::uint64_t component_budget =
                                        global_caps().component_budget) {
  std::uint64_t total = 0;
  std::vector<ConjugacyClassTable> tables;
  tables.reserve(A.components.size());
  for (const auto& comp : A.components) {
    tables.push_back(conjugacy_classes(*comp));
    total += tables.back().count();
    if (total > component_budget) throw ComponentBudgetExceeded(component_budget);
  }
  FiniteGroupoid L;
  L.components.reserve(total);
  for (std::size_t i = 0; i < A.components.size(); ++i)
    for (Index rep : tables[i].representatives)
      L.components.push_back(centralizer_shared(A.components[i], rep).group);
  return L;
}

inline FiniteGroupoid iterated_loop_groupoid(const FiniteGroupoid& A, unsigned n,
                                             std::uint64_t component_budget =
                                                 global_caps().component_budget) {
  FiniteGroupoid cur = A;
  for (unsigned i = 0; i < n; ++i) cur = loop_groupoid(cur, component_budget);
  return cur;
}

// Baez-Dolan homotopy cardinality: sum over components of 1/|Aut|.
inline Rational homotopy_cardinality(const FiniteGroupoid& A) {
  Rational total = 0;
  for (const auto& comp : A.components) total += Rational(1, comp->order());
  return total;
}

inline FiniteGroupoid groupoid_product(const FiniteGroupoid& A, const FiniteGroupoid& B,
                                       std::uint64_t component_budget =
                                           global_caps().component_budget,
                                       std::uint64_t order_cap = global_caps().order_cap) {
  const std::uint64_t total = std::uint64_t(A.components.size()) * B.components.size();
  if (total > component_budget) throw ComponentBudgetExceeded(component_budget);
  FiniteGroupoid P;
  P.components.reserve(total);
  for (const auto& a : A.components)
    for (const auto& b : B.components)
      P.components.push_back(
          std::make_shared<const FiniteGroup>(direct_product(*a, *b, order_cap)));
  return P;
}

inline FiniteGroupoid disjoint_union(const FiniteGroupoid& A, const FiniteGroupoid& B) {
  FiniteGroupoid U;
  U.components.reserve(A.components.size() + B.components.size());
  U.components.insert(U.components.end(), A.components.begin(), A.components.end());
  U.components.insert(U.components.end(), B.components.begin(), B.components.end());
  return U;
}

}  // namespace loopcard
