#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "loopcard/rational.hpp"

namespace loopcard {

// A pi-finite loop space described by its homotopy-group orders
// (o_0, o_1, ..., o_d) with o_k = |pi_k|. Canonical form trims trailing 1s;
// the empty list is the point. Only valid for loop spaces: every formula in
// this module reads nothing but the orders.
class PostnikovOrders {
 public:
  PostnikovOrders() = default;

  explicit PostnikovOrders(std::vector<BigInt> orders) : orders_(std::move(orders)) {
    for (const auto& o : orders_)
      if (o < 1) throw std::invalid_argument("homotopy-group orders must be >= 1");
    while (!orders_.empty() && orders_.back() == 1) orders_.pop_back();
  }

  const std::vector<BigInt>& orders() const { return orders_; }
  std::size_t length() const { return orders_.size(); }

  // o_k, with implicit 1 past the end.
  BigInt order_at(std::size_t k) const { return k < orders_.size() ? orders_[k] : BigInt(1); }

  bool operator==(const PostnikovOrders& o) const { return orders_ == o.orders_; }
  bool operator!=(const PostnikovOrders& o) const { return !(*this == o); }

 private:
  std::vector<BigInt> orders_;
};

// B^d C_m: single order m in degree d (d = 0 is the discrete space of m
// points).
inline PostnikovOrders em_space(unsigned d, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("em_space: m must be >= 1");
  std::vector<BigInt> orders(d + 1, BigInt(1));
  orders[d] = m;
  return PostnikovOrders(std::move(orders));
}

// LA = A x Omega(A) on orders: entry k of the result is o_k * o_{k+1}.
inline PostnikovOrders stable_loop(const PostnikovOrders& A) {
  std::vector<BigInt> out;
  out.reserve(A.length());
  for (std::size_t k = 0; k < A.length(); ++k) out.push_back(A.order_at(k) * A.order_at(k + 1));
  return PostnikovOrders(std::move(out));
}

// Homotopy cardinality of a loop space: even-index orders over odd-index
// orders. o_0 enters as a factor since all components of a loop space are
// equivalent.
inline Rational stable_hcard(const PostnikovOrders& A) {
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < A.length(); ++k) {
    if (k % 2 == 0)
      num *= A.order_at(k);
    else
      den *= A.order_at(k);
  }
  return Rational(num, den);
}

inline PostnikovOrders stable_product(const PostnikovOrders& A, const PostnikovOrders& B) {
  std::vector<BigInt> out;
  const std::size_t len = std::max(A.length(), B.length());
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(A.order_at(k) * B.order_at(k));
  return PostnikovOrders(std::move(out));
}

// |A|_{E_n} for a loop space: prod_k o_k^binom(n-1, k). n = 0 is homotopy
// cardinality.
inline Rational loop_formula_cardinality(const PostnikovOrders& A, unsigned n) {
  if (n == 0) return stable_hcard(A);
  BigInt acc = 1;
  for (std::size_t k = 0; k < A.length(); ++k) {
    const BigInt e = binomial(n - 1, k);
    if (e == 0 || A.order_at(k) == 1) continue;
    if (e > BigInt(UINT64_MAX)) throw std::overflow_error("loop_formula_cardinality: exponent too large");
    acc *= pow_big(A.order_at(k), e.convert_to<std::uint64_t>());
  }
  return Rational(acc);
}

// True iff every order is a power of p; otherwise returns the first
// offending (index, order) as a witness string via the out-parameter.
inline bool orders_are_p_powers(const PostnikovOrders& A, std::uint64_t p,
                                std::string* witness = nullptr) {
  for (std::size_t k = 0; k < A.length(); ++k) {
    if (!is_power_of(A.order_at(k), p)) {
      if (witness)
        *witness = "|pi_" + std::to_string(k) + "| = " + A.order_at(k).str() +
                   " is not a power of " + std::to_string(p);
      return false;
    }
  }
  return true;
}

inline std::string orders_to_string(const PostnikovOrders& A) {
  std::string s = "(";
  for (std::size_t k = 0; k < A.length(); ++k) {
    if (k) s += ", ";
    s += A.order_at(k).str();
  }
  s += ")";
  return s;
}

}  // namespace loopcard
