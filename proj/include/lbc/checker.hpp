#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "lbc/evaluate.hpp"
#include "lbc/formula.hpp"
#include "lbc/numerics.hpp"
#include "lbc/signal.hpp"

namespace lbc {

enum class Mode { Pointwise, Sensitive };

struct CheckConfig {
  double rho = 0.01;      // time resolution of traces, tubes and basic signals
  double theta = 0.05;    // largest ball radius trusted for tube extrapolation
  double horizon = 10.0;  // bound substituted for unbounded temporal windows
  double h_max = 0.0;     // RK4 step cap; <= 0 means rho
  Mode mode = Mode::Sensitive;
  Logic logic = Logic::Kleene;

  void validate() const;
  [[nodiscard]] IntegratorOptions integrator() const { return {rho, h_max}; }
};

struct CheckStats {
  std::size_t solver_calls = 0;  // trajectory, sensitivity and tube integrations
  std::size_t tube_calls = 0;
  std::size_t satb_calls = 0;
};

struct CheckReport {
  Truth verdict = Truth::Unknown;
  Signal signal;
  std::size_t solver_calls = 0;
  std::size_t tube_calls = 0;
  double wall_ms = 0.0;
};

/// Model checker for LBC over mass-action processes.
///
/// Pointwise mode checks a context modality by integrating P^t || Q from
/// every trace sample. Sensitive mode groups trace samples into bounding
/// balls, decides them with satB over flow tubes, and bisects only where the
/// ball verdict is undetermined.
///
/// A Checker carries a per-instance composition cache and call counters, so
/// one instance must not be shared between threads.
class Checker {
 public:
  explicit Checker(CheckConfig cfg);

  [[nodiscard]] const CheckConfig& config() const { return cfg_; }
  [[nodiscard]] const CheckStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

  /// Top-level check: the satisfaction signal over duration(f) and its
  /// value at time 0.
  CheckReport check(const Process& p, const Formula& f);

  /// Boolean satisfaction, by structural recursion; temporal formulas are
  /// read off their satisfaction signal at 0.
  bool sat(const Process& p, const Formula& f);

  /// Satisfaction signal of f along P's trajectory over [0, t_n + rho).
  Signal signal_of(const Process& p, double t, const Formula& f);

  Signal basic_signal(const Process& p, double t, const Atom& atom);

  /// Context node signal with the configured mode's construction.
  Signal context_signal(const Process& p, double t, const Formula& context_node);
  Signal context_signal_pointwise(const Process& p, double t, const Formula& context_node);
  Signal context_signal_sensitive(const Process& p, double t, const Formula& context_node);

  /// Three-valued satisfaction over every point of a ball.
  Truth satB(const NetworkPtr& net, const Ball& ball, const Formula& f);

  /// Three-valued satisfaction signal along a flow tube.
  Signal signalT(const NetworkPtr& net, const TubeTrace& tube, const Formula& f);
  Signal context_signalT(const NetworkPtr& net, const TubeTrace& tube, const Formula& context_node);

 private:
  Trace run_trace(const Process& p, double t);
  Signal signal_on_trace(const NetworkPtr& net, const Trace& tr, const Formula& f);
  Signal context_on_trace(const NetworkPtr& net, const Trace& tr, const Formula& node, Mode mode);
  const Composition& composition(const NetworkPtr& base, const Formula& context_node);

  CheckConfig cfg_;
  CheckStats stats_;
  struct CachedComposition {
    NetworkPtr base;  // held so the keyed addresses stay unique
    ProcessPtr context;
    Composition comp;
  };
  std::map<std::pair<const Network*, const Process*>, CachedComposition> compositions_;
};

}  // namespace lbc
