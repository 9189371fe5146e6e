#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopcard/caps.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/group.hpp"
#include "loopcard/space.hpp"

namespace loopcard {

enum class CountMethod { recursion, brute_force };

inline const char* to_string(CountMethod m) {
  return m == CountMethod::recursion ? "recursion" : "brute_force";
}

// Number of n-tuples of pairwise commuting elements of G up to simultaneous
// conjugation; equals |pi_0 Map((S^1)^n, BG)|.
struct CommutingTupleClassCount {
  std::string group_label;
  unsigned n = 0;
  BigInt count;
  CountMethod method = CountMethod::recursion;
};

namespace detail {

struct TableNKey {
  std::vector<Index> table;
  unsigned n;
  bool operator==(const TableNKey& o) const { return n == o.n && table == o.table; }
};

struct TableNKeyHash {
  std::size_t operator()(const TableNKey& k) const {
    return std::size_t(hash_indices(k.table, k.n + 0x51ed270b));
  }
};

// k_n(G) = sum over conjugacy classes [g] of k_{n-1}(C_G(g)), k_0 = 1.
// Memoized on the exact table bytes: iterated centralizers repeat as
// subgroups with identical labelings, and for abelian groups every
// centralizer is the group itself.
inline BigInt commuting_class_count_rec(const GroupPtr& G, unsigned n) {
  if (n == 0) return 1;
  static std::unordered_map<TableNKey, BigInt, TableNKeyHash> memo;
  TableNKey key{G->table(), n};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  const ConjugacyClassTable classes = conjugacy_classes(*G);
  for (Index rep : classes.representatives)
    total += commuting_class_count_rec(centralizer_shared(G, rep).group, n - 1);
  memo.emplace(std::move(key), total);
  return total;
}

// hcard(L^n BG) = sum over classes [g] of hcard(L^{n-1} B C_G(g)), with
// hcard(L^0 BG) = 1/|G|. This walks the component tree of the iterated loop
// groupoid and sums reciprocal automorphism orders at the leaves without
// materializing the components.
inline Rational hcard_iterated_loop_rec(const GroupPtr& G, unsigned n) {
  if (n == 0) return Rational(1, G->order());
  static std::unordered_map<TableNKey, Rational, TableNKeyHash> memo;
  TableNKey key{G->table(), n};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational total = 0;
  const ConjugacyClassTable classes = conjugacy_classes(*G);
  for (Index rep : classes.representatives)
    total += hcard_iterated_loop_rec(centralizer_shared(G, rep).group, n - 1);
  memo.emplace(std::move(key), total);
  return total;
}

// Counts commuting n-tuples with every coordinate drawn from the given
// member list (assumed closed under multiplication).
inline std::uint64_t count_commuting_tuples_within(const FiniteGroup& G,
                                                   const std::vector<Index>& members,
                                                   unsigned n) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  std::vector<Index> prefix;
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      ++total;
      return;
    }
    for (Index g : members) {
      bool ok = true;
      for (Index h : prefix)
        if (!G.commutes(g, h)) {
          ok = false;
          break;
        }
      if (ok) {
        prefix.push_back(g);
        self(self);
        prefix.pop_back();
      }
    }
  };
  extend(extend);
  return total;
}

}  // namespace detail

inline CommutingTupleClassCount commuting_classes_recursive(const GroupPtr& G, unsigned n) {
  return CommutingTupleClassCount{G->label(), n, detail::commuting_class_count_rec(G, n),
                                  CountMethod::recursion};
}

inline CommutingTupleClassCount commuting_classes_recursive(const FiniteGroup& G, unsigned n) {
  return commuting_classes_recursive(std::make_shared<const FiniteGroup>(G), n);
}

// Independent oracle: enumerate all pairwise-commuting n-tuples, then count
// orbits of simultaneous conjugation by explicit union-find partition.
// Burnside's lemma runs as a secondary cross-check when it fits in the same
// work cap; a mismatch means a bug and throws.
inline CommutingTupleClassCount commuting_classes_bruteforce(
    const FiniteGroup& G, unsigned n, std::uint64_t work_cap = global_caps().work_cap) {
  const std::uint64_t order = G.order();
  std::uint64_t raw = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (raw > work_cap / order) throw WorkCapExceeded(work_cap);
    raw *= order;
  }

  if (n == 0)
    return CommutingTupleClassCount{G.label(), 0, 1, CountMethod::brute_force};

  // enumerate in lexicographic order, so tuple ids are just sorted positions
  std::vector<std::vector<Index>> tuples;
  {
    std::vector<Index> prefix;
    auto extend = [&](auto&& self) -> void {
      if (prefix.size() == n) {
        tuples.push_back(prefix);
        return;
      }
      for (Index g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Index h : prefix)
          if (!G.commutes(g, h)) {
            ok = false;
            break;
          }
        if (ok) {
          prefix.push_back(g);
          self(self);
          prefix.pop_back();
        }
      }
    };
    extend(extend);
  }

  auto tuple_id = [&tuples](const std::vector<Index>& t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    return std::size_t(it - tuples.begin());
  };

  std::vector<std::size_t> parent(tuples.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<Index> image(n);
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    for (Index g = 0; g < G.order(); ++g) {
      for (unsigned i = 0; i < n; ++i) image[i] = G.conj(g, tuples[ti][i]);
      const std::size_t a = find(ti), b = find(tuple_id(image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  BigInt orbits = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++orbits;

  // Burnside: |orbits| * |G| = sum over g of #commuting n-tuples in C_G(g)
  std::uint64_t burnside_work = 0;
  bool burnside_fits = true;
  std::vector<std::vector<Index>> centralizer_members(G.order());
  for (Index g = 0; g < G.order() && burnside_fits; ++g) {
    for (Index h = 0; h < G.order(); ++h)
      if (G.commutes(g, h)) centralizer_members[g].push_back(h);
    std::uint64_t w = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (w > work_cap / centralizer_members[g].size()) {
        burnside_fits = false;
        break;
      }
      w *= centralizer_members[g].size();
    }
    burnside_work += w;
    if (burnside_work > work_cap) burnside_fits = false;
  }
  if (burnside_fits) {
    BigInt fixed_total = 0;
    for (Index g = 0; g < G.order(); ++g)
      fixed_total += detail::count_commuting_tuples_within(G, centralizer_members[g], n);
    if (fixed_total != orbits * order)
      throw IntegralityViolation("Burnside count " + fixed_total.str() +
                                 " disagrees with orbit partition " + orbits.str() + " * " +
                                 std::to_string(order) + " on " +
                                 (G.label().empty() ? "an unnamed group" : G.label()));
  }

  return CommutingTupleClassCount{G.label(), n, orbits, CountMethod::brute_force};
}

// |A|_{E_n}: the homotopy cardinality of the n-fold free loop space.
// Groupoids take the centralizer-tree recursion; order lists take the
// binomial product formula. Requires a p-space; results at n >= 1 are
// asserted integral before return.
inline Rational en_cardinality(const Space& A, unsigned n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("en_cardinality: p must be prime");
  std::string witness;
  if (!is_p_space(A, p, &witness)) throw NotAPSpace(p, witness);

  Rational value;
  if (is_groupoid(A)) {
    const auto& groupoid = std::get<FiniteGroupoid>(A);
    if (n == 0) {
      value = homotopy_cardinality(groupoid);
    } else {
      value = 0;
      for (const auto& comp : groupoid.components)
        value += detail::hcard_iterated_loop_rec(comp, n);
    }
  } else {
    value = loop_formula_cardinality(std::get<PostnikovOrders>(A), n);
  }

  if (n >= 1 && !is_integer(value))
    throw IntegralityViolation("E_" + std::to_string(n) + "-cardinality of a " +
                               std::to_string(p) + "-space came out " +
                               rational_to_string(value));
  return value;
}

// The Remark's route: |A|_{E_n} = |pi_0(L^{n-1} A)| for n >= 1. Genuinely
// materializes the iterated loop groupoid (the last level is counted
// classwise instead of stored), staying independent of the reciprocal-sum
// path above.
inline BigInt en_cardinality_pi0_path(const FiniteGroupoid& A, unsigned n,
                                      std::uint64_t component_budget =
                                          global_caps().component_budget) {
  if (n < 1) throw std::invalid_argument("en_cardinality_pi0_path: n must be >= 1");
  if (n == 1) return pi0_count(A);
  const FiniteGroupoid B = iterated_loop_groupoid(A, n - 2, component_budget);
  BigInt total = 0;
  for (const auto& comp : B.components) total += conjugacy_classes(*comp).count();
  return total;
}

// Morava-Euler characteristic chi_n(A) = |pi_0 Map((S^1)^n, A)|. Defined for
// any accepted space; the paper's identity is stated for p-spaces, which the
// report layer flags.
inline BigInt morava_euler(const Space& A, unsigned n) {
  if (is_groupoid(A)) {
    BigInt total = 0;
    for (const auto& comp : std::get<FiniteGroupoid>(A).components)
      total += detail::commuting_class_count_rec(comp, n);
    return total;
  }
  PostnikovOrders cur = std::get<PostnikovOrders>(A);
  for (unsigned i = 0; i < n; ++i) cur = stable_loop(cur);
  return cur.order_at(0);
}

// |A|_{E_{n+1}} = |LA|_{E_n}, both sides computed through the public entry
// points on the representation-appropriate loop functor.
inline bool one_step_reduction_check(const Space& A, unsigned n, std::uint64_t p) {
  const Rational lhs = en_cardinality(A, n + 1, p);
  const Rational rhs = en_cardinality(loop_space(A), n, p);
  return lhs == rhs;
}

}  // namespace loopcard
