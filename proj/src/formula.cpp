#include "lbc/formula.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace lbc {

ValuePtr ValueExpr::number(double v) {
  auto e = std::make_shared<ValueExpr>();
  e->kind = Kind::Constant;
  e->constant = v;
  return e;
}

ValuePtr ValueExpr::conc(std::string species) {
  auto e = std::make_shared<ValueExpr>();
  e->kind = Kind::Concentration;
  e->species = std::move(species);
  return e;
}

ValuePtr ValueExpr::deriv(std::string species) {
  auto e = std::make_shared<ValueExpr>();
  e->kind = Kind::Derivative;
  e->species = std::move(species);
  return e;
}

ValuePtr ValueExpr::binary(ArithOp op, ValuePtr lhs, ValuePtr rhs) {
  auto e = std::make_shared<ValueExpr>();
  e->kind = Kind::Binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

namespace {

FormulaPtr node(Formula::Kind kind, FormulaPtr lhs, FormulaPtr rhs = nullptr, TimeWindow w = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  f->window = w;
  return f;
}

void check_window(TimeWindow w) {
  if (!(w.lo >= 0.0) || !(w.lo <= w.hi)) {
    throw std::invalid_argument("time window must satisfy 0 <= lo <= hi");
  }
}

}  // namespace

FormulaPtr Formula::make_atom(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->atom = std::move(a);
  return f;
}

FormulaPtr Formula::make_not(FormulaPtr f) { return node(Kind::Not, std::move(f)); }
FormulaPtr Formula::make_and(FormulaPtr a, FormulaPtr b) { return node(Kind::And, std::move(a), std::move(b)); }
FormulaPtr Formula::make_or(FormulaPtr a, FormulaPtr b) { return node(Kind::Or, std::move(a), std::move(b)); }
FormulaPtr Formula::make_implies(FormulaPtr a, FormulaPtr b) {
  return node(Kind::Implies, std::move(a), std::move(b));
}

FormulaPtr Formula::make_until(FormulaPtr a, TimeWindow w, FormulaPtr b) {
  check_window(w);
  return node(Kind::Until, std::move(a), std::move(b), w);
}

FormulaPtr Formula::make_eventually(TimeWindow w, FormulaPtr f) {
  check_window(w);
  return node(Kind::Eventually, std::move(f), nullptr, w);
}

FormulaPtr Formula::make_always(TimeWindow w, FormulaPtr f) {
  check_window(w);
  return node(Kind::Always, std::move(f), nullptr, w);
}

FormulaPtr Formula::make_context(std::string name, ProcessPtr q, FormulaPtr f) {
  auto out = std::make_shared<Formula>();
  out->kind = Kind::Context;
  out->context_name = std::move(name);
  out->context = std::move(q);
  out->lhs = std::move(f);
  return out;
}

namespace {

std::string format_number(double v) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string window_text(TimeWindow w) {
  return "[" + format_number(w.lo) + "," + format_number(w.hi) + "]";
}

const char* arith_text(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return " + ";
    case ArithOp::Sub: return " - ";
    case ArithOp::Mul: return " * ";
    default: return " / ";
  }
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return " < ";
    case CmpOp::Gt: return " > ";
    case CmpOp::Le: return " <= ";
    default: return " >= ";
  }
}

bool same_value(const ValueExpr& a, const ValueExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ValueExpr::Kind::Constant: return a.constant == b.constant;
    case ValueExpr::Kind::Concentration:
    case ValueExpr::Kind::Derivative: return a.species == b.species;
    default: return a.op == b.op && same_value(*a.lhs, *b.lhs) && same_value(*a.rhs, *b.rhs);
  }
}

bool same_atom(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Atom::Kind::Compare) return true;
  return a.cmp == b.cmp && same_value(*a.lhs, *b.lhs) && same_value(*a.rhs, *b.rhs);
}

}  // namespace

std::string to_string(const ValueExpr& v) {
  switch (v.kind) {
    case ValueExpr::Kind::Constant: return format_number(v.constant);
    case ValueExpr::Kind::Concentration: return "[" + v.species + "]";
    case ValueExpr::Kind::Derivative: return "[" + v.species + "]'";
    default: return "(" + to_string(*v.lhs) + arith_text(v.op) + to_string(*v.rhs) + ")";
  }
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::True: return "true";
    case Atom::Kind::False: return "false";
    default: return to_string(*a.lhs) + cmp_text(a.cmp) + to_string(*a.rhs);
  }
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return to_string(f.atom);
    case K::Not: return "!" + to_string(*f.lhs);
    case K::And: return "(" + to_string(*f.lhs) + " & " + to_string(*f.rhs) + ")";
    case K::Or: return "(" + to_string(*f.lhs) + " | " + to_string(*f.rhs) + ")";
    case K::Implies: return "(" + to_string(*f.lhs) + " => " + to_string(*f.rhs) + ")";
    case K::Until:
      return "(" + to_string(*f.lhs) + " U" + window_text(f.window) + " " + to_string(*f.rhs) + ")";
    case K::Eventually: return "F" + window_text(f.window) + " " + to_string(*f.lhs);
    case K::Always: return "G" + window_text(f.window) + " " + to_string(*f.lhs);
    case K::Context: return f.context_name + " |> " + to_string(*f.lhs);
  }
  return {};
}

bool same_formula(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  using K = Formula::Kind;
  switch (a.kind) {
    case K::Atom: return same_atom(a.atom, b.atom);
    case K::Not: return same_formula(*a.lhs, *b.lhs);
    case K::And:
    case K::Or:
    case K::Implies: return same_formula(*a.lhs, *b.lhs) && same_formula(*a.rhs, *b.rhs);
    case K::Until:
      return a.window == b.window && same_formula(*a.lhs, *b.lhs) && same_formula(*a.rhs, *b.rhs);
    case K::Eventually:
    case K::Always: return a.window == b.window && same_formula(*a.lhs, *b.lhs);
    case K::Context: return a.context_name == b.context_name && same_formula(*a.lhs, *b.lhs);
  }
  return false;
}

namespace {

double span(const Formula& f, bool count_context) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return 0.0;
    case K::Not: return span(*f.lhs, count_context);
    case K::And:
    case K::Or:
    case K::Implies: return std::max(span(*f.lhs, count_context), span(*f.rhs, count_context));
    case K::Until:
      return std::max(span(*f.lhs, count_context), span(*f.rhs, count_context)) + f.window.hi;
    case K::Eventually:
    case K::Always: return span(*f.lhs, count_context) + f.window.hi;
    case K::Context: return count_context ? span(*f.lhs, count_context) : 0.0;
  }
  return 0.0;
}

}  // namespace

double duration(const Formula& f) { return span(f, false); }

double horizon(const Formula& f) { return span(f, true); }

bool uses_derivative(const ValueExpr& v) {
  switch (v.kind) {
    case ValueExpr::Kind::Derivative: return true;
    case ValueExpr::Kind::Binary: return uses_derivative(*v.lhs) || uses_derivative(*v.rhs);
    default: return false;
  }
}

bool uses_derivative(const Atom& a) {
  return a.kind == Atom::Kind::Compare && (uses_derivative(*a.lhs) || uses_derivative(*a.rhs));
}

}  // namespace lbc
