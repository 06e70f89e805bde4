#include "lbc/evaluate.hpp"

namespace lbc {

bool eval_atom(const Atom& a, const SpeciesIndex& species, const Vector& x, const Vector& dx) {
  switch (a.kind) {
    case Atom::Kind::True: return true;
    case Atom::Kind::False: return false;
    case Atom::Kind::Compare: break;
  }
  const double lhs = eval_value<double>(*a.lhs, species, x, dx);
  const double rhs = eval_value<double>(*a.rhs, species, x, dx);
  switch (a.cmp) {
    case CmpOp::Lt: return lhs < rhs;
    case CmpOp::Gt: return lhs > rhs;
    case CmpOp::Le: return lhs <= rhs;
    case CmpOp::Ge: return lhs >= rhs;
  }
  return false;
}

bool eval_atom(const Atom& a, const Network& net, const Vector& x) {
  if (a.kind != Atom::Kind::Compare) return a.kind == Atom::Kind::True;
  const Vector dx = uses_derivative(a) ? Vector(vector_field(net, x)) : Vector::Zero(x.size());
  return eval_atom(a, net.species(), x, dx);
}

Truth compare_range(const Interval& lhs, CmpOp cmp, const Interval& rhs) {
  switch (cmp) {
    case CmpOp::Lt:
      if (lhs.hi() < rhs.lo()) return Truth::True;
      if (lhs.lo() >= rhs.hi()) return Truth::False;
      break;
    case CmpOp::Gt:
      if (lhs.lo() > rhs.hi()) return Truth::True;
      if (lhs.hi() <= rhs.lo()) return Truth::False;
      break;
    case CmpOp::Le:
      if (lhs.hi() <= rhs.lo()) return Truth::True;
      if (lhs.lo() > rhs.hi()) return Truth::False;
      break;
    case CmpOp::Ge:
      if (lhs.lo() >= rhs.hi()) return Truth::True;
      if (lhs.hi() < rhs.lo()) return Truth::False;
      break;
  }
  return Truth::Unknown;
}

Truth atom_range(const Atom& a, const Network& net, const Ball& ball) {
  switch (a.kind) {
    case Atom::Kind::True: return Truth::True;
    case Atom::Kind::False: return Truth::False;
    case Atom::Kind::Compare: break;
  }
  const VectorX<Interval> box = enclosing_box(ball);
  const VectorX<Interval> dbox =
      uses_derivative(a) ? VectorX<Interval>(vector_field(net, box))
                         : VectorX<Interval>::Constant(box.size(), Interval(0.0));
  const Interval lhs = eval_value<Interval>(*a.lhs, net.species(), box, dbox);
  const Interval rhs = eval_value<Interval>(*a.rhs, net.species(), box, dbox);
  return compare_range(lhs, a.cmp, rhs);
}

}  // namespace lbc
