#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "loopcard/catalog.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/json_io.hpp"
#include "loopcard/space.hpp"

namespace loopcard {

// Space expressions:
//
//   expr     := product ('+' product)*            disjoint union
//   product  := term ('x' term)*                  'x' binds tighter than '+'
//   term     := 'pt'
//            | 'L' '(' expr ')'
//            | 'stable' '(' expr ')'
//            | 'Discrete' '(' nat ')'
//            | 'B' ('^' nat)? '(' groupref ')'
//            | name                               catalog group, read as B(name)
//   groupref := gatom ('x' gatom)*                direct product of groups
//   gatom    := name | '@' '...json...'           inline group via JSON escape
//
// Whitespace-insensitive; underscores in catalog names are ignored. B^d with
// d >= 2 demands an abelian group and becomes an order-only node, since only
// |pi_d| survives into any in-scope formula.

struct SpaceExpr;
using ExprPtr = std::shared_ptr<const SpaceExpr>;

struct SpaceExpr {
  enum class Kind { Point, Discrete, B, EM, Loop, Stable, Product, DisjointUnion, Named };

  Kind kind;
  std::uint64_t discrete_count = 0;  // Discrete
  unsigned em_degree = 0;            // EM
  std::uint64_t em_order = 0;        // EM
  GroupPtr group;                    // B, Named (resolved during parse)
  std::string group_src;             // B, EM, Named: canonical spelling
  ExprPtr child;                     // Loop, Stable
  ExprPtr lhs, rhs;                  // Product, DisjointUnion
};

// Routed result: which representation the expression landed in, plus the
// routing decisions that fired along the way.
struct SpaceValue {
  Space space;
  std::vector<std::string> provenance;
};

namespace detail {

enum class Tok { End, LParen, RParen, Plus, Caret, Ident, Nat, JsonLit };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint64_t value = 0;
  std::size_t line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string src) : src_(std::move(src)) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) step();
    cur_ = Token{};
    cur_.line = line_;
    cur_.column = col_;
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::End;
      cur_.text = "end of input";
      return;
    }
    const char c = src_[pos_];
    if (c == '(') { cur_ = simple(Tok::LParen, "("); return; }
    if (c == ')') { cur_ = simple(Tok::RParen, ")"); return; }
    if (c == '+') { cur_ = simple(Tok::Plus, "+"); return; }
    if (c == '^') { cur_ = simple(Tok::Caret, "^"); return; }
    if (c == '@') {
      step();
      if (pos_ >= src_.size() || src_[pos_] != '\'')
        throw SyntaxError(cur_.line, cur_.column, "' after @", std::string(1, c));
      step();
      std::string body;
      while (pos_ < src_.size() && src_[pos_] != '\'') {
        body.push_back(src_[pos_]);
        step();
      }
      if (pos_ >= src_.size())
        throw SyntaxError(cur_.line, cur_.column, "closing ' for inline JSON", "end of input");
      step();  // consume closing quote
      cur_.kind = Tok::JsonLit;
      cur_.text = body;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits.push_back(src_[pos_]);
        step();
      }
      cur_.kind = Tok::Nat;
      cur_.text = digits;
      cur_.value = std::stoull(digits);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        name.push_back(src_[pos_]);
        step();
      }
      cur_.kind = Tok::Ident;
      cur_.text = name;
      return;
    }
    throw SyntaxError(line_, col_, "a token", "'" + std::string(1, c) + "'");
  }

  Token simple(Tok k, const char* text) {
    Token t;
    t.kind = k;
    t.text = text;
    t.line = line_;
    t.column = col_;
    step();
    return t;
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string src, std::uint64_t order_cap)
      : lex_(std::move(src)), order_cap_(order_cap) {}

  ExprPtr parse() {
    ExprPtr e = parse_union();
    expect(Tok::End, "end of input, 'x', or '+'");
    return e;
  }

 private:
  static bool is_product_op(const Token& t) { return t.kind == Tok::Ident && t.text == "x"; }

  ExprPtr parse_union() {
    ExprPtr e = parse_product();
    while (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      auto node = std::make_shared<SpaceExpr>();
      node->kind = SpaceExpr::Kind::DisjointUnion;
      node->lhs = e;
      node->rhs = parse_product();
      e = node;
    }
    return e;
  }

  ExprPtr parse_product() {
    ExprPtr e = parse_term();
    while (is_product_op(lex_.peek())) {
      lex_.take();
      auto node = std::make_shared<SpaceExpr>();
      node->kind = SpaceExpr::Kind::Product;
      node->lhs = e;
      node->rhs = parse_term();
      e = node;
    }
    return e;
  }

  ExprPtr parse_term() {
    const Token t = lex_.peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "pt") {
        lex_.take();
        auto node = std::make_shared<SpaceExpr>();
        node->kind = SpaceExpr::Kind::Point;
        return node;
      }
      if (t.text == "L" || t.text == "stable") {
        lex_.take();
        expect(Tok::LParen, "'('");
        auto node = std::make_shared<SpaceExpr>();
        node->kind = t.text == "L" ? SpaceExpr::Kind::Loop : SpaceExpr::Kind::Stable;
        node->child = parse_union();
        expect(Tok::RParen, "')'");
        return node;
      }
      if (t.text == "Discrete") {
        lex_.take();
        expect(Tok::LParen, "'('");
        const Token m = expect(Tok::Nat, "a positive integer");
        if (m.value == 0)
          throw SyntaxError(m.line, m.column, "a positive integer", "0");
        expect(Tok::RParen, "')'");
        auto node = std::make_shared<SpaceExpr>();
        node->kind = SpaceExpr::Kind::Discrete;
        node->discrete_count = m.value;
        return node;
      }
      if (t.text == "B") {
        lex_.take();
        unsigned degree = 1;
        if (lex_.peek().kind == Tok::Caret) {
          lex_.take();
          const Token d = expect(Tok::Nat, "a degree");
          degree = unsigned(d.value);
        }
        expect(Tok::LParen, "'('");
        auto [group, src] = parse_groupref();
        expect(Tok::RParen, "')'");
        auto node = std::make_shared<SpaceExpr>();
        node->group_src = src;
        if (degree == 1) {
          node->kind = SpaceExpr::Kind::B;
          node->group = group;
        } else {
          if (degree >= 2 && !group->is_abelian()) throw NonAbelianHigherB(src);
          node->kind = SpaceExpr::Kind::EM;
          node->em_degree = degree;
          node->em_order = group->order();
        }
        return node;
      }
      // bare catalog name, read as its classifying space
      lex_.take();
      auto node = std::make_shared<SpaceExpr>();
      node->kind = SpaceExpr::Kind::Named;
      node->group = resolve_name(t);
      node->group_src = node->group->label();
      return node;
    }
    throw SyntaxError(t.line, t.column,
                      "'pt', 'L', 'B', 'Discrete', 'stable', or a group name", describe(t));
  }

  std::pair<GroupPtr, std::string> parse_groupref() {
    auto [g, src] = parse_gatom();
    while (is_product_op(lex_.peek())) {
      lex_.take();
      auto [h, hsrc] = parse_gatom();
      g = std::make_shared<const FiniteGroup>(direct_product(*g, *h, order_cap_));
      src += " x " + hsrc;
    }
    return {g, src};
  }

  std::pair<GroupPtr, std::string> parse_gatom() {
    const Token t = lex_.peek();
    if (t.kind == Tok::Ident) return {resolve_name(lex_.take()), normalize_name(t.text)};
    if (t.kind == Tok::JsonLit) {
      lex_.take();
      Json j;
      try {
        j = Json::parse(t.text);
      } catch (const Json::parse_error& e) {
        throw SyntaxError(t.line, t.column, "valid JSON after @", e.what());
      }
      auto g = std::make_shared<const FiniteGroup>(group_from_json(j, order_cap_));
      return {g, "@'" + t.text + "'"};
    }
    throw SyntaxError(t.line, t.column, "a group name or @'...' JSON", describe(t));
  }

  GroupPtr resolve_name(const Token& t) {
    return std::make_shared<const FiniteGroup>(catalog_group(t.text, order_cap_));
  }

  static std::string normalize_name(const std::string& raw) {
    std::string s;
    for (char c : raw)
      if (c != '_') s.push_back(c);
    return s;
  }

  Token expect(Tok kind, const std::string& what) {
    const Token t = lex_.peek();
    if (t.kind != kind) throw SyntaxError(t.line, t.column, what, describe(t));
    return lex_.take();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  Lexer lex_;
  std::uint64_t order_cap_;
};

}  // namespace detail

inline ExprPtr parse(const std::string& source,
                     std::uint64_t order_cap = global_caps().order_cap) {
  return detail::Parser(source, order_cap).parse();
}

inline std::string expr_to_string(const SpaceExpr& e) {
  using Kind = SpaceExpr::Kind;
  auto paren_if_union = [](const SpaceExpr& c) {
    std::string s = expr_to_string(c);
    if (c.kind == Kind::DisjointUnion) return "(" + s + ")";
    return s;
  };
  switch (e.kind) {
    case Kind::Point: return "pt";
    case Kind::Discrete: return "Discrete(" + std::to_string(e.discrete_count) + ")";
    case Kind::B: return "B(" + e.group_src + ")";
    case Kind::EM:
      return "B^" + std::to_string(e.em_degree) + "(" + e.group_src + ")";
    case Kind::Loop: return "L(" + expr_to_string(*e.child) + ")";
    case Kind::Stable: return "stable(" + expr_to_string(*e.child) + ")";
    case Kind::Product: return paren_if_union(*e.lhs) + " x " + paren_if_union(*e.rhs);
    case Kind::DisjointUnion:
      return expr_to_string(*e.lhs) + " + " + expr_to_string(*e.rhs);
    case Kind::Named: return e.group_src;
  }
  return "";
}

namespace detail {

inline bool stable_is_discrete(const PostnikovOrders& A) { return A.length() <= 1; }

inline FiniteGroupoid lift_discrete(const PostnikovOrders& A, std::uint64_t component_budget) {
  const BigInt m = A.order_at(0);
  if (m > BigInt(component_budget)) throw ComponentBudgetExceeded(component_budget);
  FiniteGroupoid out;
  auto point = std::make_shared<const FiniteGroup>(cyclic_group(1));
  for (BigInt i = 0; i < m; ++i) out.components.push_back(point);
  return out;
}

inline Space eval_node(const SpaceExpr& e, std::vector<std::string>& notes,
                       std::uint64_t component_budget, std::uint64_t order_cap);

inline Space eval_product(const SpaceExpr& e, std::vector<std::string>& notes,
                          std::uint64_t component_budget, std::uint64_t order_cap) {
  Space a = eval_node(*e.lhs, notes, component_budget, order_cap);
  Space b = eval_node(*e.rhs, notes, component_budget, order_cap);
  if (is_groupoid(a) == is_groupoid(b)) {
    if (is_groupoid(a)) {
      notes.push_back("x: groupoid product");
      return groupoid_product(std::get<FiniteGroupoid>(a), std::get<FiniteGroupoid>(b),
                              component_budget, order_cap);
    }
    notes.push_back("x: stable entrywise product");
    return stable_product(std::get<PostnikovOrders>(a), std::get<PostnikovOrders>(b));
  }
  // one groupoid, one stable: the stable factor may cross over only while it
  // is purely discrete (nothing above pi_0)
  const auto& stable = std::get<PostnikovOrders>(is_groupoid(a) ? b : a);
  const auto& groupoid = std::get<FiniteGroupoid>(is_groupoid(a) ? a : b);
  if (!stable_is_discrete(stable))
    throw MixedRepresentation(
        "cannot form the product of a groupoid and the stable space " +
        orders_to_string(stable) +
        "; wrap the groupoid side with stable(...) or keep both sides as groupoids");
  notes.push_back("x: lifted discrete stable factor into the groupoid representation");
  FiniteGroupoid lifted = lift_discrete(stable, component_budget);
  return is_groupoid(a)
             ? groupoid_product(groupoid, lifted, component_budget, order_cap)
             : groupoid_product(lifted, groupoid, component_budget, order_cap);
}

inline Space eval_union(const SpaceExpr& e, std::vector<std::string>& notes,
                        std::uint64_t component_budget, std::uint64_t order_cap) {
  Space a = eval_node(*e.lhs, notes, component_budget, order_cap);
  Space b = eval_node(*e.rhs, notes, component_budget, order_cap);
  if (is_groupoid(a) && is_groupoid(b)) {
    notes.push_back("+: groupoid disjoint union");
    return disjoint_union(std::get<FiniteGroupoid>(a), std::get<FiniteGroupoid>(b));
  }
  if (!is_groupoid(a) && !is_groupoid(b)) {
    const auto& oa = std::get<PostnikovOrders>(a);
    const auto& ob = std::get<PostnikovOrders>(b);
    // a union of loop spaces stays expressible by orders only when every
    // component looks alike, i.e. the parts agree above pi_0
    bool same_tail = true;
    for (std::size_t k = 1; k < std::max(oa.length(), ob.length()); ++k)
      if (oa.order_at(k) != ob.order_at(k)) {
        same_tail = false;
        break;
      }
    if (!same_tail)
      throw MixedRepresentation(
          "disjoint union of stable spaces " + orders_to_string(oa) + " and " +
          orders_to_string(ob) +
          " is not a loop space; build both sides as groupoids instead");
    std::vector<BigInt> out;
    out.push_back(oa.order_at(0) + ob.order_at(0));
    for (std::size_t k = 1; k < std::max(oa.length(), ob.length()); ++k)
      out.push_back(oa.order_at(k));
    notes.push_back("+: stable pi_0 sum (equal parts above pi_0)");
    return PostnikovOrders(std::move(out));
  }
  // mixed: lift a purely discrete stable side, mirroring the product rule
  const auto& stable = std::get<PostnikovOrders>(is_groupoid(a) ? b : a);
  if (!stable_is_discrete(stable))
    throw MixedRepresentation(
        "cannot form the disjoint union of a groupoid and the stable space " +
        orders_to_string(stable) + "; keep both sides in one representation");
  notes.push_back("+: lifted discrete stable summand into the groupoid representation");
  FiniteGroupoid lifted = lift_discrete(stable, component_budget);
  return is_groupoid(a)
             ? disjoint_union(std::get<FiniteGroupoid>(a), lifted)
             : disjoint_union(lifted, std::get<FiniteGroupoid>(b));
}

inline Space eval_stable_coercion(const SpaceExpr& e, std::vector<std::string>& notes,
                                  std::uint64_t component_budget, std::uint64_t order_cap) {
  Space inner = eval_node(*e.child, notes, component_budget, order_cap);
  if (!is_groupoid(inner)) {
    notes.push_back("stable: already in the stable representation");
    return inner;
  }
  const auto& A = std::get<FiniteGroupoid>(inner);
  bool all_trivial = true;
  for (const auto& c : A.components)
    if (c->order() != 1) {
      all_trivial = false;
      break;
    }
  if (all_trivial) {
    notes.push_back("stable: coerced a discrete groupoid to orders");
    return PostnikovOrders({BigInt(A.components.size())});
  }
  if (A.components.size() != 1)
    throw CoercionRefused(
        "stable(...) needs a connected space or a discrete one; got a groupoid with " +
        std::to_string(A.components.size()) + " components");
  const auto& G = *A.components.front();
  if (!G.is_abelian())
    throw CoercionRefused("stable(B(G)) needs an abelian G; " +
                          (G.label().empty() ? std::string("the group") : G.label()) +
                          " of order " + std::to_string(G.order()) + " is not abelian");
  notes.push_back("stable: coerced B(abelian) to orders (1, |G|)");
  return PostnikovOrders({BigInt(1), BigInt(G.order())});
}

inline Space eval_node(const SpaceExpr& e, std::vector<std::string>& notes,
                       std::uint64_t component_budget, std::uint64_t order_cap) {
  using Kind = SpaceExpr::Kind;
  switch (e.kind) {
    case Kind::Point:
      notes.push_back("pt: stable ()");
      return PostnikovOrders(std::vector<BigInt>{});
    case Kind::Discrete:
      notes.push_back("Discrete: stable orders (" + std::to_string(e.discrete_count) + ")");
      return PostnikovOrders({BigInt(e.discrete_count)});
    case Kind::B:
    case Kind::Named:
      notes.push_back((e.kind == Kind::B ? "B(" : "") + e.group_src +
                      (e.kind == Kind::B ? ")" : "") + ": groupoid");
      return classifying_groupoid(e.group);
    case Kind::EM:
      notes.push_back("B^" + std::to_string(e.em_degree) + ": stable");
      return em_space(e.em_degree, BigInt(e.em_order));
    case Kind::Loop: {
      Space inner = eval_node(*e.child, notes, component_budget, order_cap);
      notes.push_back(is_groupoid(inner) ? "L: groupoid loop functor" : "L: stable shift-product");
      return loop_space(inner, component_budget);
    }
    case Kind::Stable: return eval_stable_coercion(e, notes, component_budget, order_cap);
    case Kind::Product: return eval_product(e, notes, component_budget, order_cap);
    case Kind::DisjointUnion: return eval_union(e, notes, component_budget, order_cap);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace detail

inline SpaceValue evaluate(const SpaceExpr& e,
                           std::uint64_t component_budget = global_caps().component_budget,
                           std::uint64_t order_cap = global_caps().order_cap) {
  SpaceValue v;
  v.space = detail::eval_node(e, v.provenance, component_budget, order_cap);
  return v;
}

inline SpaceValue evaluate_source(const std::string& source,
                                  std::uint64_t component_budget = global_caps().component_budget,
                                  std::uint64_t order_cap = global_caps().order_cap) {
  return evaluate(*parse(source, order_cap), component_budget, order_cap);
}

}  // namespace loopcard
