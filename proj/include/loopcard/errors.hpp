#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace loopcard {

// Base for everything a caller can trigger with bad input or by blowing a
// configured cap. kind() is a stable machine-readable tag; what() carries the
// witness (first offending triple, element, token position, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct MalformedTable : Error {
  explicit MalformedTable(const std::string& detail) : Error("MalformedTable", detail) {}
};

struct NotAssociative : Error {
  std::uint32_t a, b, c;
  NotAssociative(std::uint32_t a_, std::uint32_t b_, std::uint32_t c_)
      : Error("NotAssociative",
              "multiplication is not associative: witness triple (" + std::to_string(a_) + ", " +
                  std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct NoIdentity : Error {
  NoIdentity() : Error("NoIdentity", "table has no two-sided identity element") {}
};

struct NoInverse : Error {
  std::uint32_t element;
  explicit NoInverse(std::uint32_t g)
      : Error("NoInverse", "element " + std::to_string(g) + " has no two-sided inverse"),
        element(g) {}
};

struct NotAPermutation : Error {
  explicit NotAPermutation(const std::string& detail) : Error("NotAPermutation", detail) {}
};

struct OrderCapExceeded : Error {
  std::uint64_t cap;
  explicit OrderCapExceeded(std::uint64_t cap_)
      : Error("OrderCapExceeded",
              "group order exceeds the configured cap of " + std::to_string(cap_)),
        cap(cap_) {}
};

struct ComponentBudgetExceeded : Error {
  std::uint64_t budget;
  explicit ComponentBudgetExceeded(std::uint64_t budget_)
      : Error("ComponentBudgetExceeded",
              "groupoid would exceed the component budget of " + std::to_string(budget_)),
        budget(budget_) {}
};

struct WorkCapExceeded : Error {
  std::uint64_t cap;
  explicit WorkCapExceeded(std::uint64_t cap_)
      : Error("WorkCapExceeded",
              "brute-force enumeration exceeds the work cap of " + std::to_string(cap_)),
        cap(cap_) {}
};

struct NotAPSpace : Error {
  std::uint64_t p;
  NotAPSpace(std::uint64_t p_, const std::string& witness)
      : Error("NotAPSpace", "not a " + std::to_string(p_) + "-space: " + witness), p(p_) {}
};

struct UnknownName : Error {
  std::string name;
  explicit UnknownName(const std::string& name_)
      : Error("UnknownName", "unknown catalog name '" + name_ + "'"), name(name_) {}
};

struct NonAbelianHigherB : Error {
  explicit NonAbelianHigherB(const std::string& group)
      : Error("NonAbelianHigherB", "B^d with d >= 2 requires an abelian group; '" + group +
                                       "' is not abelian") {}
};

struct SyntaxError : Error {
  std::size_t line, column;
  std::string expected;
  SyntaxError(std::size_t line_, std::size_t column_, const std::string& expected_,
              const std::string& found)
      : Error("SyntaxError", "syntax error at " + std::to_string(line_) + ":" +
                                 std::to_string(column_) + ": expected " + expected_ +
                                 ", found " + found),
        line(line_), column(column_), expected(expected_) {}
};

struct MixedRepresentation : Error {
  explicit MixedRepresentation(const std::string& detail)
      : Error("MixedRepresentation", detail) {}
};

struct CoercionRefused : Error {
  explicit CoercionRefused(const std::string& detail) : Error("CoercionRefused", detail) {}
};

// Internal consistency failure (a computed E_n-cardinality of a p-space came
// out non-integral). This is a bug indicator, not an input error, so it is
// deliberately not an Error.
struct IntegralityViolation : std::logic_error {
  explicit IntegralityViolation(const std::string& detail)
      : std::logic_error("integrality violation (implementation bug): " + detail) {}
};

}  // namespace loopcard
