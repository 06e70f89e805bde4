#pragma once

#include <stdexcept>
#include <type_traits>

#include "lbc/formula.hpp"
#include "lbc/procmodel.hpp"
#include "lbc/truth.hpp"

namespace lbc {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// value(v, x): [S] reads the state, [S]' reads the derivative vector.
/// Species absent from the index read as 0 with zero rate. Generic over the
/// scalar; with Interval it encloses the value over a box.
template <typename Scalar>
Scalar eval_value(const ValueExpr& v, const SpeciesIndex& species, const VectorX<Scalar>& x,
                  const VectorX<Scalar>& dx) {
  switch (v.kind) {
    case ValueExpr::Kind::Constant: return Scalar(v.constant);
    case ValueExpr::Kind::Concentration: {
      const auto i = species.find(v.species);
      return i ? x(static_cast<Eigen::Index>(*i)) : Scalar(0.0);
    }
    case ValueExpr::Kind::Derivative: {
      const auto i = species.find(v.species);
      return i ? dx(static_cast<Eigen::Index>(*i)) : Scalar(0.0);
    }
    case ValueExpr::Kind::Binary: break;
  }
  const Scalar a = eval_value(*v.lhs, species, x, dx);
  const Scalar b = eval_value(*v.rhs, species, x, dx);
  switch (v.op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if constexpr (std::is_same_v<Scalar, double>) {
        if (b == 0.0) throw EvaluationError("division by zero in '" + to_string(v) + "'");
      }
      return a / b;
  }
  return a;
}

/// Atom in Props(x), with dx = vector_field(net, x).
bool eval_atom(const Atom& a, const SpeciesIndex& species, const Vector& x, const Vector& dx);

/// Convenience overload computing the derivative from the network.
bool eval_atom(const Atom& a, const Network& net, const Vector& x);

/// Sound three-valued range test of an atom over a ball: True only if the
/// atom holds at every point of the ball, False only if it fails at every
/// point. Uses interval evaluation over the ball's bounding box.
Truth atom_range(const Atom& a, const Network& net, const Ball& ball);

/// Compares two enclosures: definite only when the intervals are separated.
Truth compare_range(const Interval& lhs, CmpOp cmp, const Interval& rhs);

}  // namespace lbc
