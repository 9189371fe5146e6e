#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "loopcard/groupoid.hpp"
#include "loopcard/postnikov.hpp"

namespace loopcard {

// The two space representations: a finite groupoid for arbitrary 1-types, a
// list of homotopy-group orders for loop spaces.
using Space = std::variant<FiniteGroupoid, PostnikovOrders>;

inline bool is_groupoid(const Space& s) { return std::holds_alternative<FiniteGroupoid>(s); }

// Representation-appropriate free loop space.
inline Space loop_space(const Space& s,
                        std::uint64_t component_budget = global_caps().component_budget) {
  if (is_groupoid(s)) return loop_groupoid(std::get<FiniteGroupoid>(s), component_budget);
  return stable_loop(std::get<PostnikovOrders>(s));
}

inline Rational space_hcard(const Space& s) {
  if (is_groupoid(s)) return homotopy_cardinality(std::get<FiniteGroupoid>(s));
  return stable_hcard(std::get<PostnikovOrders>(s));
}

// True iff every group order / homotopy-group order is a power of p.
inline bool is_p_space(const Space& s, std::uint64_t p, std::string* witness = nullptr) {
  if (!is_groupoid(s)) return orders_are_p_powers(std::get<PostnikovOrders>(s), p, witness);
  const auto& A = std::get<FiniteGroupoid>(s);
  for (std::size_t i = 0; i < A.components.size(); ++i) {
    if (!is_power_of(BigInt(A.components[i]->order()), p)) {
      if (witness)
        *witness = "component " + std::to_string(i) + " has automorphism group of order " +
                   std::to_string(A.components[i]->order()) + ", not a power of " +
                   std::to_string(p);
      return false;
    }
  }
  return true;
}

// The unique prime p for which this is a p-space, when one exists. Returns
// nullopt if orders mix primes; returns 0 if every order is 1 (a p-space for
// every p).
inline std::optional<std::uint64_t> p_space_prime(const Space& s) {
  std::uint64_t p = 0;
  // Accepts n iff all its prime factors equal the one running prime p
  // (setting p on first contact). Trial division is plenty: constructed
  // orders only ever have small prime factors.
  auto feed = [&p](BigInt n) -> bool {
    if (p != 0) {
      while (n > 1 && n % p == 0) n /= p;
      return n == 1;
    }
    for (std::uint64_t d = 2; n > 1 && BigInt(d) * d <= n; ++d) {
      if (n % d == 0) {
        p = d;
        while (n % d == 0) n /= d;
        return n == 1;
      }
    }
    if (n > 1) {  // n itself is prime
      if (n > BigInt(UINT64_MAX)) return false;
      p = n.convert_to<std::uint64_t>();
    }
    return true;
  };
  if (is_groupoid(s)) {
    for (const auto& c : std::get<FiniteGroupoid>(s).components)
      if (!feed(BigInt(c->order()))) return std::nullopt;
  } else {
    const auto& A = std::get<PostnikovOrders>(s);
    for (std::size_t k = 0; k < A.length(); ++k)
      if (!feed(A.order_at(k))) return std::nullopt;
  }
  return p;
}

inline std::string space_to_string(const Space& s) {
  if (!is_groupoid(s)) return "orders " + orders_to_string(std::get<PostnikovOrders>(s));
  const auto& A = std::get<FiniteGroupoid>(s);
  std::string out = "groupoid with " + std::to_string(A.components.size()) + " component" +
                    (A.components.size() == 1 ? "" : "s") + " of orders [";
  for (std::size_t i = 0; i < A.components.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(A.components[i]->order());
  }
  out += "]";
  return out;
}

}  // namespace loopcard
