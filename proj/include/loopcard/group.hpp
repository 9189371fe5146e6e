#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loopcard/caps.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/rational.hpp"

namespace loopcard {

using Index = std::uint32_t;

// A finite group as a dense multiplication table. Element index 0 is always
// the identity; constructors relabel if needed. Immutable after construction.
class FiniteGroup {
 public:
  static constexpr Index identity = 0;

  Index order() const { return order_; }
  Index mul(Index a, Index b) const { return table_[std::size_t(a) * order_ + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index conj(Index g, Index x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<Index>& table() const { return table_; }
  const std::string& label() const { return label_; }

  bool is_abelian() const {
    for (Index a = 0; a < order_; ++a)
      for (Index b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  Index element_order(Index a) const {
    Index x = a, n = 1;
    while (x != identity) {
      x = mul(x, a);
      ++n;
    }
    return n;
  }

  bool commutes(Index a, Index b) const { return mul(a, b) == mul(b, a); }

  // Trusted constructor for builders that guarantee the group axioms and
  // identity at index 0 (closure, subgroups, products). User-supplied tables
  // go through group_from_table, which validates.
  static FiniteGroup unchecked(Index order, std::vector<Index> flat_table, std::string label) {
    return FiniteGroup(order, std::move(flat_table), std::move(label));
  }

  FiniteGroup with_label(std::string label) const {
    FiniteGroup g = *this;
    g.label_ = std::move(label);
    return g;
  }

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup(Index order, std::vector<Index> flat_table, std::string label)
      : order_(order), table_(std::move(flat_table)), label_(std::move(label)) {
    inv_.resize(order_);
    for (Index a = 0; a < order_; ++a) {
      for (Index b = 0; b < order_; ++b) {
        if (mul(a, b) == identity && mul(b, a) == identity) {
          inv_[a] = b;
          break;
        }
      }
    }
  }

  Index order_;
  std::vector<Index> table_;  // row-major: table_[a*order+b] = a*b
  std::vector<Index> inv_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupElement {
  const FiniteGroup* group = nullptr;
  Index index = 0;
};

// One object per isomorphism class; class_of is total on element indices.
// Representatives are the minimal index in each class and classes are sorted
// by representative, so the table is byte-stable across runs.
struct ConjugacyClassTable {
  std::vector<std::vector<Index>> classes;
  std::vector<Index> representatives;
  std::vector<Index> class_of;

  std::size_t count() const { return classes.size(); }
};

// A subgroup repackaged as a standalone group. embedding[i] is the index in
// the ambient group of the subgroup's element i.
struct Subgroup {
  GroupPtr group;
  std::vector<Index> embedding;
};

namespace detail {

inline std::uint64_t hash_indices(const std::vector<Index>& v, std::uint64_t seed) {
  for (Index x : v) seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

struct TableRepKey {
  std::vector<Index> table;
  Index rep;
  bool operator==(const TableRepKey& o) const { return rep == o.rep && table == o.table; }
};

struct TableRepKeyHash {
  std::size_t operator()(const TableRepKey& k) const {
    return std::size_t(hash_indices(k.table, k.rep + 1));
  }
};

}  // namespace detail

// Validates a user-supplied square table and normalizes the identity to
// index 0. Associativity is checked exhaustively up to order 256 and on a
// deterministic sample of one million triples above that.
inline FiniteGroup group_from_table(const std::vector<std::vector<Index>>& table,
                                    std::string label = "") {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedTable("table is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw MalformedTable("row " + std::to_string(r) + " has " +
                           std::to_string(table[r].size()) + " entries, expected " +
                           std::to_string(n));
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n)
        throw MalformedTable("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                             ") = " + std::to_string(table[r][c]) + " is out of range");
  }

  auto mul = [&](Index a, Index b) { return table[a][b]; };

  // locate the two-sided identity
  Index e = Index(n);
  for (Index cand = 0; cand < Index(n); ++cand) {
    bool ok = true;
    for (Index x = 0; x < Index(n) && ok; ++x)
      ok = mul(cand, x) == x && mul(x, cand) == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e == Index(n)) throw NoIdentity();

  for (Index g = 0; g < Index(n); ++g) {
    bool found = false;
    for (Index h = 0; h < Index(n) && !found; ++h)
      found = mul(g, h) == e && mul(h, g) == e;
    if (!found) throw NoInverse(g);
  }

  if (n <= 256) {
    for (Index a = 0; a < Index(n); ++a)
      for (Index b = 0; b < Index(n); ++b)
        for (Index c = 0; c < Index(n); ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw NotAssociative(a, b, c);
  } else {
    std::uint64_t state = 0x243f6a8885a308d3ULL;  // fixed seed: same sample every run
    auto next = [&state, n]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return Index((state >> 33) % n);
    };
    for (int i = 0; i < 1000000; ++i) {
      Index a = next(), b = next(), c = next();
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw NotAssociative(a, b, c);
    }
  }

  // relabel so the identity sits at index 0
  std::vector<Index> relabel(n);
  for (Index i = 0; i < Index(n); ++i) relabel[i] = i;
  relabel[0] = e;
  relabel[e] = 0;
  std::vector<Index> flat(n * n);
  for (Index a = 0; a < Index(n); ++a)
    for (Index b = 0; b < Index(n); ++b)
      flat[std::size_t(relabel[a]) * n + relabel[b]] = relabel[mul(a, b)];
  return FiniteGroup::unchecked(Index(n), std::move(flat), std::move(label));
}

// Breadth-first closure of permutation generators under composition
// ((a*b)(x) = a(b(x))). Indices are assigned in discovery order with the
// identity at index 0, so the resulting table is reproducible.
inline FiniteGroup group_from_permutations(Index degree,
                                           const std::vector<std::vector<Index>>& generators,
                                           std::string label = "",
                                           std::uint64_t order_cap = global_caps().order_cap) {
  if (degree == 0) throw NotAPermutation("degree must be positive");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& g = generators[gi];
    if (g.size() != degree)
      throw NotAPermutation("generator " + std::to_string(gi) + " has length " +
                            std::to_string(g.size()) + ", expected " + std::to_string(degree));
    std::vector<bool> hit(degree, false);
    for (Index v : g) {
      if (v >= degree || hit[v])
        throw NotAPermutation("generator " + std::to_string(gi) + " is not a bijection");
      hit[v] = true;
    }
  }

  std::vector<Index> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);

  std::vector<std::vector<Index>> elems{ident};
  std::unordered_map<std::vector<Index>, Index,
                     decltype([](const std::vector<Index>& v) {
                       return std::size_t(detail::hash_indices(v, v.size()));
                     })>
      seen;
  seen.emplace(ident, 0);

  std::queue<Index> todo;
  todo.push(0);
  while (!todo.empty()) {
    const Index ai = todo.front();
    todo.pop();
    for (const auto& g : generators) {
      std::vector<Index> c(degree);
      for (Index x = 0; x < degree; ++x) c[x] = elems[ai][g[x]];
      if (seen.emplace(c, Index(elems.size())).second) {
        if (elems.size() + 1 > order_cap) throw OrderCapExceeded(order_cap);
        elems.push_back(std::move(c));
        todo.push(Index(elems.size() - 1));
      }
    }
  }

  const Index n = Index(elems.size());
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      std::vector<Index> c(degree);
      for (Index x = 0; x < degree; ++x) c[x] = elems[a][elems[b][x]];
      flat[std::size_t(a) * n + b] = seen.at(c);
    }
  }
  return FiniteGroup::unchecked(n, std::move(flat), std::move(label));
}

inline ConjugacyClassTable conjugacy_classes(const FiniteGroup& G) {
  const Index n = G.order();
  ConjugacyClassTable t;
  t.class_of.assign(n, Index(-1));
  for (Index x = 0; x < n; ++x) {
    if (t.class_of[x] != Index(-1)) continue;  // minimal elements come first
    std::vector<Index> orbit;
    const Index id = Index(t.classes.size());
    for (Index g = 0; g < n; ++g) {
      const Index y = G.conj(g, x);
      if (t.class_of[y] == Index(-1)) {
        t.class_of[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    t.representatives.push_back(orbit.front());
    t.classes.push_back(std::move(orbit));
  }
  return t;
}

// The subgroup {h : hg = gh}, elements in ascending ambient index (so the
// identity keeps index 0).
inline Subgroup centralizer(const FiniteGroup& G, Index g) {
  std::vector<Index> members;
  for (Index h = 0; h < G.order(); ++h)
    if (G.commutes(h, g)) members.push_back(h);

  std::vector<Index> pos(G.order(), Index(-1));
  for (Index i = 0; i < Index(members.size()); ++i) pos[members[i]] = i;

  const Index m = Index(members.size());
  std::vector<Index> flat(std::size_t(m) * m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      flat[std::size_t(a) * m + b] = pos[G.mul(members[a], members[b])];

  std::string label =
      G.label().empty() ? "" : G.label() + ".Z" + std::to_string(g);
  auto group = std::make_shared<const FiniteGroup>(
      FiniteGroup::unchecked(m, std::move(flat), std::move(label)));
  return Subgroup{std::move(group), std::move(members)};
}

inline Subgroup centralizer(const GroupElement& g) {
  return centralizer(*g.group, g.index);
}

// Memoized variant keyed on (table bytes, element). Iterated loop functors
// revisit the same centralizers constantly; when the centralizer is the whole
// group the parent pointer is reused outright.
inline Subgroup centralizer_shared(const GroupPtr& G, Index g) {
  if (g == FiniteGroup::identity) {
    std::vector<Index> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{G, std::move(all)};
  }
  static std::unordered_map<detail::TableRepKey, Subgroup, detail::TableRepKeyHash> memo;
  detail::TableRepKey key{G->table(), g};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Subgroup sub = centralizer(*G, g);
  if (sub.group->order() == G->order()) sub.group = G;
  memo.emplace(std::move(key), sub);
  return sub;
}

inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                                  std::uint64_t order_cap = global_caps().order_cap) {
  const std::uint64_t n64 = std::uint64_t(G.order()) * H.order();
  if (n64 > order_cap) throw OrderCapExceeded(order_cap);
  const Index n = Index(n64);
  const Index ho = H.order();
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    const Index ag = a / ho, ah = a % ho;
    for (Index b = 0; b < n; ++b) {
      const Index bg = b / ho, bh = b % ho;
      flat[std::size_t(a) * n + b] = G.mul(ag, bg) * ho + H.mul(ah, bh);
    }
  }
  std::string label;
  if (!G.label().empty() && !H.label().empty()) label = G.label() + "x" + H.label();
  return FiniteGroup::unchecked(n, std::move(flat), std::move(label));
}

inline bool is_p_group(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("is_p_group: " + std::to_string(p) + " is not prime");
  std::uint64_t n = G.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace loopcard
