#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "rqwl/graph.hpp"

namespace rqwl {

enum class Op {
  kEq,           // z = w
  kEdge,         // E(z, w)
  kColor,        // U_c(z)
  kNot,
  kAnd,
  kOr,
  kImplies,
  kCountExists,  // exists>=k z body
  kExists,       // exists z body    (sugar for exists>=1)
  kForall,       // forall z body    (sugar for !exists>=1 z !body)
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node. Variables are indices into [x_1..x_k1, y_1..y_k2]
/// (0..k1-1 are x, k1..k1+k2-1 are y).
struct Formula {
  Op op = Op::kEq;
  int var = -1;       // first atom variable, or the quantified variable
  int var2 = -1;      // second atom variable
  ColorId color = 0;  // kColor
  std::string color_name;  // spelling used in U_<name>
  int threshold = 0;  // kCountExists
  FormulaPtr lhs;     // unary body or left operand
  FormulaPtr rhs;     // right operand
};

FormulaPtr make_eq(int z, int w);
FormulaPtr make_edge(int z, int w);
FormulaPtr make_color(ColorId c, int z, std::string name = {});
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr make_count(int k, int z, FormulaPtr body);
FormulaPtr make_exists(int z, FormulaPtr body);
FormulaPtr make_forall(int z, FormulaPtr body);

/// Structural identity (sugar nodes are distinct from their expansions).
bool structurally_equal(const Formula& a, const Formula& b);

/// Color legend from "0=red,1=blue" (color id = name).
struct Legend {
  std::map<std::string, ColorId> by_name;
  std::map<ColorId, std::string> by_id;
};
Legend parse_legend(const std::string& text);

/// Syntax error with a 0-based character offset.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Grammar (loosest first): implication `->` (right-assoc), `|`, `&`
/// (left-assoc), then unary: `!u`, `exists>=k z u`, `exists z u`,
/// `forall z u`, `E(z,w)`, `z=w`, `U_<name>(z)`, `( formula )`.
/// Variables are x1..x{k1}, y1..y{k2}. U_<int> always works; other names go
/// through the legend.
FormulaPtr parse_formula(const std::string& text, int k1, int k2,
                         const Legend* legend = nullptr);

/// Inverse of parse_formula up to whitespace. Binary operands that are
/// themselves binary are parenthesized, as are binary bodies of `!` and of
/// quantifiers.
std::string format_formula(const Formula& f, int k1);

struct FormulaReport {
  std::uint32_t free = 0;          // bit per variable
  std::uint32_t bound = 0;         // variables that are quantified somewhere
  std::uint32_t requantified = 0;
  int quantifier_rank = 0;
  bool in_logic = false;           // no y-variable requantified
  bool in_fragment(int r) const { return in_logic && quantifier_rank <= r; }
};

FormulaReport analyze(const Formula& f, int k1, int k2);

/// Counting-logic semantics. Throws DomainError if a free variable of `f` is
/// unassigned or out of range for `a`.
bool evaluate(const ColoredGraph& g, const PartialAssignment& a, const Formula& f);

/// Truth values for all (n+1)^(k1+k2) assignments, indexed by
/// AssignmentIndexer(n, k1+k2). Entries where a free variable is unassigned
/// are unspecified.
std::vector<std::uint8_t> evaluate_table(const ColoredGraph& g, int k1, int k2,
                                         const Formula& f);

struct RandomFormulaOptions {
  int k1 = 1;
  int k2 = 1;
  int max_rank = 2;
  int max_threshold = 3;     // thresholds drawn from [0, max_threshold]
  int num_colors = 2;        // colors drawn from [0, num_colors)
  std::uint32_t free_x = 0;  // bit i: x_{i+1} may occur free
  std::uint32_t free_y = 0;  // bit j: y_{j+1} may occur free (never bound)
  int max_size = 12;         // soft cap on node count
};

/// Random formula in C^(k1,k2) with quantifier rank <= max_rank. y-variables
/// in free_y are never quantified; other y-variables are quantified at most
/// once along any branch and never occur free.
FormulaPtr random_formula(std::mt19937_64& rng, const RandomFormulaOptions& options);

}  // namespace rqwl
