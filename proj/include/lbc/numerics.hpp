#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lbc/procmodel.hpp"

namespace lbc {

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double time)
      : std::runtime_error(what + " at t=" + std::to_string(time)), time_(time) {}
  [[nodiscard]] double time() const { return time_; }

 private:
  double time_;
};

struct IntegratorOptions {
  double rho = 0.01;   // sampling resolution
  double h_max = 0.0;  // largest RK4 step; <= 0 means "use rho"

  [[nodiscard]] double step_limit() const { return h_max > 0.0 ? std::min(h_max, rho) : rho; }
};

/// Sample times 0, rho, 2 rho, ... up to and including t. The last sample is
/// exactly t, even when t is not a multiple of rho.
std::vector<double> sample_times(double t, double rho);

/// End of the piece a sample owns: the next sample time, or t_n + rho for
/// the last one.
double sample_end(const std::vector<double>& times, std::size_t i, double rho);

struct Trace {
  std::vector<double> times;
  std::vector<Vector> states;
  double rho = 0.0;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

struct SensTrace {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<Matrix> sensitivities;  // d xi(t_i) / d x0
  double rho = 0.0;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

struct TubeTrace {
  std::vector<double> times;
  std::vector<Ball> balls;
  double rho = 0.0;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

/// Fixed-step classical RK4 trajectory of the mass-action system.
Trace trace(const Network& net, const Vector& x0, double t, const IntegratorOptions& opts);
Trace trace(const Process& p, double t, const IntegratorOptions& opts);

/// Trajectory together with the variational solution S' = J(x) S, S(0) = I.
SensTrace sensitivity_trace(const Network& net, const Vector& x0, double t,
                            const IntegratorOptions& opts);

/// Largest singular value by power iteration on S^T S.
double spectral_norm(const Matrix& s);

struct ExpansionSample {
  double time;
  double delta;
};

/// First-order expansion function: delta_i = eps * sigma_max(S(t_i)).
std::vector<ExpansionSample> expansion(const Network& net, const Vector& x0, double eps, double t,
                                       const IntegratorOptions& opts);

/// Flow tube from a ball: spine from the centre, radii from the expansion.
TubeTrace tube(const Network& net, const Ball& ball, double t, const IntegratorOptions& opts);

/// Ball containing every point (Ritter's two-pass construction, never worse
/// than twice the optimal radius).
Ball bounding_ball(const std::vector<Vector>& points);

/// Ball containing every input ball.
Ball bounding_ball_of_balls(const std::vector<Ball>& balls);

}  // namespace lbc
