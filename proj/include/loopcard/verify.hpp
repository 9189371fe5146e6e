#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "loopcard/catalog.hpp"
#include "loopcard/group.hpp"
#include "loopcard/groupoid.hpp"
#include "loopcard/invariants.hpp"
#include "loopcard/postnikov.hpp"
#include "loopcard/rational.hpp"

namespace loopcard {

// Extra families used only to span the verification space: they are not
// catalog names, but they are honest constructions with independent
// multiplication rules.

// C_m x| C_k with the generator of C_k acting by i -> u*i; needs u^k = 1 mod m.
inline FiniteGroup semidirect_cyclic(Index m, Index k, Index u, std::string label = "") {
  std::uint64_t power = 1;
  for (Index i = 0; i < k; ++i) power = power * u % m;
  if (power != 1 % m) throw std::invalid_argument("semidirect_cyclic: u^k != 1 mod m");
  const Index n = m * k;
  std::vector<std::uint64_t> upow(k, 1);
  for (Index j = 1; j < k; ++j) upow[j] = upow[j - 1] * u % m;
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    const Index ai = a % m, aj = a / m;
    for (Index b = 0; b < n; ++b) {
      const Index bi = b % m, bj = b / m;
      const Index i = Index((ai + upow[aj] * bi) % m);
      const Index j = (aj + bj) % k;
      flat[std::size_t(a) * n + b] = i + m * j;
    }
  }
  if (label.empty())
    label = "C" + std::to_string(m) + ":C" + std::to_string(k) + "u" + std::to_string(u);
  return FiniteGroup::unchecked(n, std::move(flat), std::move(label));
}

// Heisenberg group of order p^3 and exponent p (p odd): triples (a, b, c)
// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline FiniteGroup heisenberg_group(Index p) {
  const Index n = p * p * p;
  auto enc = [p](Index a, Index b, Index c) { return (a * p + b) * p + c; };
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index x = 0; x < n; ++x) {
    const Index xa = x / (p * p), xb = (x / p) % p, xc = x % p;
    for (Index y = 0; y < n; ++y) {
      const Index ya = y / (p * p), yb = (y / p) % p, yc = y % p;
      flat[std::size_t(x) * n + y] =
          enc((xa + ya) % p, (xb + yb) % p, (xc + yc + xa * yb) % p);
    }
  }
  return FiniteGroup::unchecked(n, std::move(flat), "H" + std::to_string(n));
}

// Generalized quaternion group of order 4m: <a, b | a^{2m}, b^2 = a^m,
// b a b^{-1} = a^{-1}>, elements a^i b^j with i < 2m, j < 2.
inline FiniteGroup generalized_quaternion(Index order) {
  if (order < 8 || order % 4 != 0)
    throw std::invalid_argument("generalized_quaternion: order must be 4m >= 8");
  const Index two_m = order / 2, m = order / 4;
  const Index n = order;
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    const Index ai = a % two_m, aj = a / two_m;
    for (Index b = 0; b < n; ++b) {
      const Index bi = b % two_m, bj = b / two_m;
      Index i = aj == 0 ? (ai + bi) % two_m : (ai + two_m - bi) % two_m;
      const Index j = (aj + bj) % 2;
      if (aj == 1 && bj == 1) i = (i + m) % two_m;  // b^2 = a^m
      flat[std::size_t(a) * n + b] = i + two_m * j;
    }
  }
  return FiniteGroup::unchecked(n, std::move(flat), "Q" + std::to_string(order));
}

// Every abelian p-group of order <= max_order, one per partition of each
// exponent, ordered deterministically.
inline std::vector<GroupPtr> abelian_p_groups(std::uint64_t p, std::uint64_t max_order) {
  std::vector<GroupPtr> out;
  std::vector<std::vector<unsigned>> partitions{{}};
  for (std::uint64_t order = 1; order <= max_order; order *= p) {
    for (const auto& part : partitions) {
      FiniteGroup g = cyclic_group(1);
      std::string label;
      for (unsigned e : part) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < e; ++i) q *= p;
        g = part.size() == 1 ? cyclic_group(q) : direct_product(g, cyclic_group(q));
        if (!label.empty()) label += "x";
        label += "C" + std::to_string(q);
      }
      if (part.empty()) label = "C1";
      out.push_back(std::make_shared<const FiniteGroup>(g.with_label(label)));
    }
    // next exponent's partitions (descending parts)
    unsigned k = 0;
    for (std::uint64_t o = 1; o < order * p; o *= p) ++k;
    std::vector<std::vector<unsigned>> next;
    std::vector<unsigned> cur;
    auto gen = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
      if (remaining == 0) {
        next.push_back(cur);
        return;
      }
      for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        self(self, remaining - part, part);
        cur.pop_back();
      }
    };
    gen(gen, k, k);
    partitions = std::move(next);
    if (order > max_order / p) break;
  }
  return out;
}

// The p-group 1-types the reduction suite runs over: all abelian p-groups up
// to max_order plus the constructible nonabelian families and their cyclic
// paddings.
inline std::vector<GroupPtr> p_group_catalog(std::uint64_t p, std::uint64_t max_order) {
  std::vector<GroupPtr> out = abelian_p_groups(p, max_order);
  std::vector<FiniteGroup> nonab;
  if (p == 2) {
    for (std::uint64_t o = 8; o <= max_order; o *= 2) {
      nonab.push_back(dihedral_group(o));
      nonab.push_back(generalized_quaternion(Index(o)));
    }
    if (max_order >= 16) {
      nonab.push_back(semidirect_cyclic(8, 2, 3, "SD16"));
      nonab.push_back(semidirect_cyclic(8, 2, 5, "M16"));
    }
  } else if (p == 3) {
    if (max_order >= 27) {
      nonab.push_back(heisenberg_group(3));
      nonab.push_back(semidirect_cyclic(9, 3, 4, "M27"));
    }
    if (max_order >= 81) nonab.push_back(semidirect_cyclic(27, 3, 10, "M81"));
  }
  for (const auto& g : nonab) {
    out.push_back(std::make_shared<const FiniteGroup>(g));
    for (std::uint64_t pad = p; g.order() * pad <= max_order; pad *= p)
      out.push_back(std::make_shared<const FiniteGroup>(
          direct_product(g, cyclic_group(pad))));
  }
  return out;
}

// Small-group catalog for the oracle suite: every catalog-expressible group
// of order <= max_order.
inline std::vector<GroupPtr> oracle_catalog(std::uint64_t max_order) {
  std::vector<GroupPtr> out;
  auto add = [&out](FiniteGroup g) {
    out.push_back(std::make_shared<const FiniteGroup>(std::move(g)));
  };
  for (std::uint64_t m = 1; m <= max_order; ++m) add(cyclic_group(m));
  for (std::uint64_t o = 4; o <= max_order; o += 2) add(dihedral_group(o));
  for (std::uint64_t m = 2; m <= 5; ++m) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i <= m; ++i) fact *= i;
    if (fact <= max_order) add(symmetric_group(m));
    if (m >= 3 && fact / 2 <= max_order) add(alternating_group(m));
  }
  if (max_order >= 8) add(quaternion_group());
  return out;
}

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;

  bool passed() const { return failures == 0; }

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_counterexample.empty()) first_counterexample = what;
    }
  }
};

// Eilenberg-MacLane formula: |B^d C_p|_{E_n} = p^binom(n-1, d), with the
// d = 1 case reproduced independently through the groupoid pipeline.
inline SuiteResult verify_em_suite() {
  SuiteResult r{"em"};
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned d = 0; d <= 4; ++d) {
      for (unsigned n = 1; n <= 6; ++n) {
        const BigInt expected = pow_big(BigInt(p), binomial(n - 1, d).convert_to<std::uint64_t>());
        const Rational got = en_cardinality(em_space(d, BigInt(p)), n, p);
        r.record(got == Rational(expected),
                 "B^" + std::to_string(d) + "(C" + std::to_string(p) + ") at n=" +
                     std::to_string(n) + ": got " + rational_to_string(got) + ", want " +
                     expected.str());
        if (d == 1) {
          const Rational via_groupoid =
              en_cardinality(classifying_groupoid(cyclic_group(p)), n, p);
          r.record(via_groupoid == Rational(expected),
                   "groupoid pipeline B(C" + std::to_string(p) + ") at n=" +
                       std::to_string(n) + ": got " + rational_to_string(via_groupoid));
        }
      }
    }
  }
  return r;
}

// Theorem-level reduction |A|_{E_{n+1}} = |LA|_{E_n} across the p-group
// catalog and the stable test spaces; also asserts positive integrality.
inline SuiteResult verify_loopred_suite(std::uint64_t max_group_order = 81,
                                        unsigned max_n = 5) {
  SuiteResult r{"loopred"};
  for (std::uint64_t p : {2, 3}) {
    const std::uint64_t cap = p == 2 ? std::min<std::uint64_t>(64, max_group_order)
                                     : std::min<std::uint64_t>(81, max_group_order);
    for (const auto& G : p_group_catalog(p, cap)) {
      const Space A = classifying_groupoid(G);
      for (unsigned n = 0; n <= max_n; ++n) {
        bool ok = one_step_reduction_check(A, n, p);
        const Rational v = en_cardinality(A, n + 1, p);
        ok = ok && is_integer(v) && v > 0;
        r.record(ok, "B(" + G->label() + ") at n=" + std::to_string(n) + ", p=" +
                         std::to_string(p));
      }
    }
    // all order lists with <= 4 entries, each a p-power <= 27
    std::vector<BigInt> powers{1};
    for (BigInt q = p; q <= 27; q *= p) powers.push_back(q);
    std::vector<BigInt> orders(4, BigInt(1));
    auto sweep = [&](auto&& self, unsigned pos) -> void {
      if (pos == 4) {
        const PostnikovOrders A{std::vector<BigInt>(orders)};
        for (unsigned n = 0; n <= max_n; ++n) {
          bool ok = one_step_reduction_check(A, n, p);
          const Rational v = en_cardinality(A, n + 1, p);
          ok = ok && is_integer(v) && v > 0;
          r.record(ok, "stable " + orders_to_string(A) + " at n=" + std::to_string(n) +
                           ", p=" + std::to_string(p));
        }
        return;
      }
      for (const BigInt& q : powers) {
        orders[pos] = q;
        self(self, pos + 1);
      }
    };
    sweep(sweep, 0);
  }
  return r;
}

// Commuting-tuple class counts: the memoized centralizer recursion against
// the explicit orbit-partition brute force.
inline SuiteResult verify_oracle_suite(std::uint64_t max_order = 60, unsigned max_n = 3) {
  SuiteResult r{"oracle"};
  for (const auto& G : oracle_catalog(max_order)) {
    for (unsigned n = 0; n <= max_n; ++n) {
      const auto fast = commuting_classes_recursive(G, n);
      const auto slow = commuting_classes_bruteforce(*G, n);
      r.record(fast.count == slow.count,
               G->label() + " at n=" + std::to_string(n) + ": recursion " +
                   fast.count.str() + " vs brute force " + slow.count.str());
    }
  }
  return r;
}

inline std::vector<SuiteResult> run_verify_suites(const std::string& which) {
  std::vector<SuiteResult> out;
  if (which == "em" || which == "all") out.push_back(verify_em_suite());
  if (which == "loopred" || which == "all") out.push_back(verify_loopred_suite());
  if (which == "oracle" || which == "all") out.push_back(verify_oracle_suite());
  return out;
}

}  // namespace loopcard
