#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lbc/procmodel.hpp"

namespace lbc {

enum class ArithOp { Add, Sub, Mul, Div };
enum class CmpOp { Lt, Gt, Le, Ge };

struct ValueExpr;
using ValuePtr = std::shared_ptr<const ValueExpr>;

/// Arithmetic over concentrations: constants, [S], [S]' and binary nodes.
struct ValueExpr {
  enum class Kind { Constant, Concentration, Derivative, Binary };

  Kind kind = Kind::Constant;
  double constant = 0.0;
  std::string species;
  ArithOp op = ArithOp::Add;
  ValuePtr lhs;
  ValuePtr rhs;

  static ValuePtr number(double v);
  static ValuePtr conc(std::string species);
  static ValuePtr deriv(std::string species);
  static ValuePtr binary(ArithOp op, ValuePtr lhs, ValuePtr rhs);
};

struct Atom {
  enum class Kind { True, False, Compare };

  Kind kind = Kind::True;
  CmpOp cmp = CmpOp::Lt;
  ValuePtr lhs;
  ValuePtr rhs;

  static Atom truth(bool value) { return Atom{value ? Kind::True : Kind::False, CmpOp::Lt, nullptr, nullptr}; }
  static Atom compare(ValuePtr lhs, CmpOp cmp, ValuePtr rhs) {
    return Atom{Kind::Compare, cmp, std::move(lhs), std::move(rhs)};
  }
};

/// Closed time window [lo, hi] of a temporal operator.
struct TimeWindow {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;
using ProcessPtr = std::shared_ptr<const Process>;

/// LBC formula. Eventually and Always are first-class nodes; Or and Implies
/// are kept as written and evaluated through the usual dualities.
struct Formula {
  enum class Kind { Atom, Not, And, Or, Implies, Until, Eventually, Always, Context };

  Kind kind = Kind::Atom;
  Atom atom;
  FormulaPtr lhs;  // operand of unary nodes
  FormulaPtr rhs;
  TimeWindow window;
  std::string context_name;
  ProcessPtr context;

  [[nodiscard]] bool is_temporal() const {
    return kind == Kind::Until || kind == Kind::Eventually || kind == Kind::Always;
  }

  static FormulaPtr make_atom(Atom a);
  static FormulaPtr make_not(FormulaPtr f);
  static FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_until(FormulaPtr a, TimeWindow w, FormulaPtr b);
  static FormulaPtr make_eventually(TimeWindow w, FormulaPtr f);
  static FormulaPtr make_always(TimeWindow w, FormulaPtr f);
  static FormulaPtr make_context(std::string name, ProcessPtr q, FormulaPtr f);
};

class FormulaError : public std::runtime_error {
 public:
  FormulaError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Names a formula may refer to: species and named context processes.
struct FormulaEnv {
  std::set<std::string, std::less<>> species;
  std::map<std::string, ProcessPtr, std::less<>> contexts;
};

/// Parses the ASCII concrete syntax. Temporal operators written without a
/// window get [0, horizon].
FormulaPtr parse_formula(std::string_view text, const FormulaEnv& env, double horizon);

/// Canonical text form; parse_formula(to_string(f)) rebuilds the same tree.
std::string to_string(const Formula& f);
std::string to_string(const ValueExpr& v);
std::string to_string(const Atom& a);

/// Structural equality; contexts compare by name.
bool same_formula(const Formula& a, const Formula& b);

/// Time span a formula refers to: |Atom| = 0, boolean nodes take the max of
/// their children, |Q |> f| = 0 and temporal nodes add their upper bound.
double duration(const Formula& f);

/// Total simulated time budget: like duration, but a context node counts its
/// subformula's duration.
double horizon(const Formula& f);

bool uses_derivative(const ValueExpr& v);
bool uses_derivative(const Atom& a);

}  // namespace lbc
