#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "loopcard/caps.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/group.hpp"

namespace loopcard {

// Built-in groups addressable by name: C<m>, S<m>, D<2m> (order 2m), Q8,
// A<m>. Underscores are ignored, so "C_3" and "C3" resolve identically.

inline FiniteGroup cyclic_group(std::uint64_t m,
                                std::uint64_t order_cap = global_caps().order_cap) {
  if (m == 0) throw UnknownName("C0");
  if (m > order_cap) throw OrderCapExceeded(order_cap);
  const Index n = Index(m);
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) flat[std::size_t(a) * n + b] = Index((a + b) % n);
  return FiniteGroup::unchecked(n, std::move(flat), "C" + std::to_string(m));
}

// Dihedral group of order 2m: elements r^i s^j with index i + m*j.
inline FiniteGroup dihedral_group(std::uint64_t order,
                                  std::uint64_t order_cap = global_caps().order_cap) {
  if (order == 0 || order % 2 != 0) throw UnknownName("D" + std::to_string(order));
  if (order > order_cap) throw OrderCapExceeded(order_cap);
  const Index m = Index(order / 2);
  const Index n = Index(order);
  std::vector<Index> flat(std::size_t(n) * n);
  for (Index a = 0; a < n; ++a) {
    const Index ai = a % m, aj = a / m;
    for (Index b = 0; b < n; ++b) {
      const Index bi = b % m, bj = b / m;
      // r^ai s^aj * r^bi s^bj = r^(ai + (-1)^aj bi) s^(aj+bj)
      const Index i = aj == 0 ? Index((ai + bi) % m) : Index((ai + m - bi % m) % m);
      const Index j = (aj + bj) % 2;
      flat[std::size_t(a) * n + b] = i + m * j;
    }
  }
  return FiniteGroup::unchecked(n, std::move(flat), "D" + std::to_string(order));
}

inline FiniteGroup quaternion_group() {
  // elements 0..7 = 1, -1, i, -i, j, -j, k, -k
  auto axis = [](Index e) { return e / 2; };          // 0:unit 1:i 2:j 3:k
  auto sign = [](Index e) { return int(e % 2); };     // 0:+ 1:-
  auto make = [](Index ax, int sg) { return ax * 2 + Index(sg); };
  // product of pure axes i,j,k: result axis and sign
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b]: extra minus from multiplying axes a*b (i*i=-1, j*i=-k, ...)
  std::vector<Index> flat(64);
  for (Index a = 0; a < 8; ++a)
    for (Index b = 0; b < 8; ++b) {
      const Index ax = Index(axis_mul[axis(a)][axis(b)]);
      const int sg = (sign(a) + sign(b) + sign_mul[axis(a)][axis(b)]) % 2;
      flat[std::size_t(a) * 8 + b] = make(ax, sg);
    }
  return FiniteGroup::unchecked(8, std::move(flat), "Q8");
}

inline FiniteGroup symmetric_group(std::uint64_t m,
                                   std::uint64_t order_cap = global_caps().order_cap) {
  if (m == 0) throw UnknownName("S0");
  std::string label = "S" + std::to_string(m);
  if (m == 1) return cyclic_group(1, order_cap).with_label(label);
  std::vector<std::vector<Index>> gens;
  std::vector<Index> t(m);
  for (Index i = 0; i < m; ++i) t[i] = i;
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (m >= 3) {
    std::vector<Index> c(m);
    for (Index i = 0; i < m; ++i) c[i] = Index((i + 1) % m);
    gens.push_back(c);
  }
  return group_from_permutations(Index(m), gens, label, order_cap);
}

inline FiniteGroup alternating_group(std::uint64_t m,
                                     std::uint64_t order_cap = global_caps().order_cap) {
  if (m == 0) throw UnknownName("A0");
  std::string label = "A" + std::to_string(m);
  if (m <= 2) return cyclic_group(1, order_cap).with_label(label);
  // consecutive 3-cycles (i, i+1, i+2)
  std::vector<std::vector<Index>> gens;
  for (Index i = 0; i + 2 < m; ++i) {
    std::vector<Index> g(m);
    for (Index x = 0; x < m; ++x) g[x] = x;
    g[i] = i + 1;
    g[i + 1] = i + 2;
    g[i + 2] = i;
    gens.push_back(std::move(g));
  }
  return group_from_permutations(Index(m), gens, label, order_cap);
}

inline bool is_catalog_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '_') s.push_back(c);
  if (s.size() < 2) return false;
  if (s[0] != 'C' && s[0] != 'S' && s[0] != 'D' && s[0] != 'A' && s[0] != 'Q') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline FiniteGroup catalog_group(const std::string& raw,
                                 std::uint64_t order_cap = global_caps().order_cap) {
  std::string s;
  for (char c : raw)
    if (c != '_') s.push_back(c);
  if (!is_catalog_name(s)) throw UnknownName(raw);
  const std::uint64_t m = std::stoull(s.substr(1));
  switch (s[0]) {
    case 'C': return cyclic_group(m, order_cap);
    case 'S': return symmetric_group(m, order_cap);
    case 'D': return dihedral_group(m, order_cap);
    case 'A': return alternating_group(m, order_cap);
    case 'Q':
      if (m == 8) return quaternion_group();
      throw UnknownName(raw);
  }
  throw UnknownName(raw);
}

}  // namespace loopcard
