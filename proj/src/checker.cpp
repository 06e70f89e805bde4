#include "lbc/checker.hpp"

#include <chrono>
#include <cmath>
#include <functional>

namespace lbc {

void CheckConfig::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be > 0");
  if (!(theta > 0.0) || !std::isfinite(theta)) throw std::invalid_argument("theta must be > 0");
  if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be >= 0");
}

Checker::Checker(CheckConfig cfg) : cfg_(cfg) { cfg_.validate(); }

namespace {

// Value over [times[i], end of sample i) for i in [lo, hi].
void assign(std::vector<Piece>& pieces, const std::vector<double>& times, double rho, std::size_t lo,
            std::size_t hi, Truth v) {
  pieces.push_back({times[lo], sample_end(times, hi, rho), v});
}

double signal_length(const std::vector<double>& times, double rho) {
  return sample_end(times, times.size() - 1, rho);
}

}  // namespace

const Composition& Checker::composition(const NetworkPtr& base, const Formula& node) {
  const auto key = std::make_pair(base.get(), node.context.get());
  auto it = compositions_.find(key);
  if (it == compositions_.end()) {
    CachedComposition entry{base, node.context, compose_networks(base, node.context->network)};
    it = compositions_.emplace(key, std::move(entry)).first;
  }
  return it->second.comp;
}

Trace Checker::run_trace(const Process& p, double t) {
  if (t > 0.0) ++stats_.solver_calls;
  return trace(p, t, cfg_.integrator());
}

CheckReport Checker::check(const Process& p, const Formula& f) {
  const auto start = std::chrono::steady_clock::now();
  reset_stats();
  CheckReport report;
  report.signal = signal_of(p, duration(f), f);
  report.verdict = report.signal.value_at(0.0);
  report.solver_calls = stats_.solver_calls;
  report.tube_calls = stats_.tube_calls;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool Checker::sat(const Process& p, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return eval_atom(f.atom, *p.network, p.conc);
    case K::Not: return !sat(p, *f.lhs);
    case K::And: return sat(p, *f.lhs) && sat(p, *f.rhs);
    case K::Or: return sat(p, *f.lhs) || sat(p, *f.rhs);
    case K::Implies: return !sat(p, *f.lhs) || sat(p, *f.rhs);
    case K::Context: {
      const Composition& comp = composition(p.network, f);
      return sat(Process(comp.network, embed(comp, p.conc, f.context->conc)), *f.lhs);
    }
    case K::Until:
    case K::Eventually:
    case K::Always: return signal_of(p, duration(f), f).value_at(0.0) == Truth::True;
  }
  return false;
}

Signal Checker::signal_of(const Process& p, double t, const Formula& f) {
  return signal_on_trace(p.network, run_trace(p, t), f);
}

Signal Checker::basic_signal(const Process& p, double t, const Atom& atom) {
  return signal_on_trace(p.network, run_trace(p, t), *Formula::make_atom(atom));
}

Signal Checker::context_signal(const Process& p, double t, const Formula& node) {
  return context_on_trace(p.network, run_trace(p, t), node, cfg_.mode);
}

Signal Checker::context_signal_pointwise(const Process& p, double t, const Formula& node) {
  return context_on_trace(p.network, run_trace(p, t), node, Mode::Pointwise);
}

Signal Checker::context_signal_sensitive(const Process& p, double t, const Formula& node) {
  return context_on_trace(p.network, run_trace(p, t), node, Mode::Sensitive);
}

Signal Checker::signal_on_trace(const NetworkPtr& net, const Trace& tr, const Formula& f) {
  using K = Formula::Kind;
  const double length = signal_length(tr.times, tr.rho);
  switch (f.kind) {
    case K::Atom: {
      std::vector<Piece> pieces;
      pieces.reserve(tr.size());
      for (std::size_t i = 0; i < tr.size(); ++i) {
        assign(pieces, tr.times, tr.rho, i, i, to_truth(eval_atom(f.atom, *net, tr.states[i])));
      }
      return Signal::make(length, std::move(pieces));
    }
    case K::Not: return negate(signal_on_trace(net, tr, *f.lhs));
    case K::And:
      return conjoin(signal_on_trace(net, tr, *f.lhs), signal_on_trace(net, tr, *f.rhs), cfg_.logic);
    case K::Or:
      return disjoin(signal_on_trace(net, tr, *f.lhs), signal_on_trace(net, tr, *f.rhs), cfg_.logic);
    case K::Implies:
      return implies(signal_on_trace(net, tr, *f.lhs), signal_on_trace(net, tr, *f.rhs), cfg_.logic);
    case K::Until:
      return until(signal_on_trace(net, tr, *f.lhs), signal_on_trace(net, tr, *f.rhs), f.window.lo,
                   f.window.hi, cfg_.logic);
    case K::Eventually: return eventually(signal_on_trace(net, tr, *f.lhs), f.window.lo, f.window.hi);
    case K::Always: return always(signal_on_trace(net, tr, *f.lhs), f.window.lo, f.window.hi);
    case K::Context: return context_on_trace(net, tr, f, cfg_.mode);
  }
  return {};
}

Signal Checker::context_on_trace(const NetworkPtr& net, const Trace& tr, const Formula& node, Mode mode) {
  const Composition& comp = composition(net, node);
  const Vector& q = node.context->conc;
  const Formula& inner = *node.lhs;
  const double length = signal_length(tr.times, tr.rho);
  std::vector<Piece> pieces;

  const auto point_value = [&](std::size_t i) {
    return to_truth(sat(Process(comp.network, embed(comp, tr.states[i], q)), inner));
  };

  if (mode == Mode::Pointwise) {
    for (std::size_t i = 0; i < tr.size(); ++i) assign(pieces, tr.times, tr.rho, i, i, point_value(i));
    return Signal::make(length, std::move(pieces));
  }

  // Sensitive: one ball per contiguous run of samples, bisected on Unknown.
  std::function<void(std::size_t, std::size_t)> resolve = [&](std::size_t lo, std::size_t hi) {
    const std::vector<Vector> points(tr.states.begin() + static_cast<std::ptrdiff_t>(lo),
                                     tr.states.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    const Ball ball = translate_ball(bounding_ball(points), comp, q);
    Truth v = satB(comp.network, ball, inner);
    if (!is_definite(v)) {
      if (lo == hi) {
        v = point_value(lo);
      } else {
        const std::size_t mid = lo + (hi - lo) / 2;
        resolve(lo, mid);
        resolve(mid + 1, hi);
        return;
      }
    }
    assign(pieces, tr.times, tr.rho, lo, hi, v);
  };
  resolve(0, tr.size() - 1);
  return Signal::make(length, std::move(pieces));
}

Truth Checker::satB(const NetworkPtr& net, const Ball& ball, const Formula& f) {
  ++stats_.satb_calls;
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Atom: return atom_range(f.atom, *net, ball);
    case K::Not: return truth_not(satB(net, ball, *f.lhs));
    case K::And: return truth_and(satB(net, ball, *f.lhs), satB(net, ball, *f.rhs), cfg_.logic);
    case K::Or: return truth_or(satB(net, ball, *f.lhs), satB(net, ball, *f.rhs), cfg_.logic);
    case K::Implies: return truth_implies(satB(net, ball, *f.lhs), satB(net, ball, *f.rhs), cfg_.logic);
    case K::Context: {
      const Composition& comp = composition(net, f);
      return satB(comp.network, translate_ball(ball, comp, f.context->conc), *f.lhs);
    }
    case K::Until:
    case K::Eventually:
    case K::Always: {
      if (ball.radius > cfg_.theta) return Truth::Unknown;
      const double span = duration(f);
      if (span > 0.0) ++stats_.solver_calls;
      ++stats_.tube_calls;
      const TubeTrace t = tube(*net, ball, span, cfg_.integrator());
      return signalT(net, t, f).value_at(0.0);
    }
  }
  return Truth::Unknown;
}

Signal Checker::signalT(const NetworkPtr& net, const TubeTrace& tb, const Formula& f) {
  using K = Formula::Kind;
  const double length = signal_length(tb.times, tb.rho);
  switch (f.kind) {
    case K::Atom: {
      std::vector<Piece> pieces;
      pieces.reserve(tb.size());
      for (std::size_t i = 0; i < tb.size(); ++i) {
        assign(pieces, tb.times, tb.rho, i, i, atom_range(f.atom, *net, tb.balls[i]));
      }
      return Signal::make(length, std::move(pieces));
    }
    case K::Not: return negate(signalT(net, tb, *f.lhs));
    case K::And: return conjoin(signalT(net, tb, *f.lhs), signalT(net, tb, *f.rhs), cfg_.logic);
    case K::Or: return disjoin(signalT(net, tb, *f.lhs), signalT(net, tb, *f.rhs), cfg_.logic);
    case K::Implies: return implies(signalT(net, tb, *f.lhs), signalT(net, tb, *f.rhs), cfg_.logic);
    case K::Until:
      return until(signalT(net, tb, *f.lhs), signalT(net, tb, *f.rhs), f.window.lo, f.window.hi, cfg_.logic);
    case K::Eventually: return eventually(signalT(net, tb, *f.lhs), f.window.lo, f.window.hi);
    case K::Always: return always(signalT(net, tb, *f.lhs), f.window.lo, f.window.hi);
    case K::Context: return context_signalT(net, tb, f);
  }
  return {};
}

Signal Checker::context_signalT(const NetworkPtr& net, const TubeTrace& tb, const Formula& node) {
  const Composition& comp = composition(net, node);
  const Vector& q = node.context->conc;
  const Formula& inner = *node.lhs;
  std::vector<Piece> pieces;

  std::function<void(std::size_t, std::size_t)> resolve = [&](std::size_t lo, std::size_t hi) {
    const std::vector<Ball> balls(tb.balls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  tb.balls.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    const Truth v = satB(comp.network, translate_ball(bounding_ball_of_balls(balls), comp, q), inner);
    if (!is_definite(v) && lo != hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      resolve(lo, mid);
      resolve(mid + 1, hi);
      return;
    }
    // A single undetermined ball stays Unknown.
    assign(pieces, tb.times, tb.rho, lo, hi, v);
  };
  resolve(0, tb.size() - 1);
  return Signal::make(signal_length(tb.times, tb.rho), std::move(pieces));
}

}  // namespace lbc
