#include "lbc/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace lbc {

std::vector<double> sample_times(double t, double rho) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("trace length must be finite and >= 0");
  if (!(rho > 0.0)) throw std::invalid_argument("resolution rho must be > 0");
  std::vector<double> times{0.0};
  if (t == 0.0) return times;
  const auto steps = static_cast<long>(std::floor(t / rho + 1e-9));
  for (long i = 1; i <= steps; ++i) times.push_back(static_cast<double>(i) * rho);
  if (std::abs(times.back() - t) <= 1e-9 * std::max(1.0, t)) {
    times.back() = t;
  } else {
    times.push_back(t);
  }
  return times;
}

double sample_end(const std::vector<double>& times, std::size_t i, double rho) {
  return i + 1 < times.size() ? times[i + 1] : times[i] + rho;
}

namespace {

template <typename State, typename Rhs>
State rk4_step(const State& y, double h, Rhs&& rhs) {
  const State k1 = rhs(y);
  const State k2 = rhs(State(y + 0.5 * h * k1));
  const State k3 = rhs(State(y + 0.5 * h * k2));
  const State k4 = rhs(State(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// Integrates `y` across [t0, t1] in equal RK4 steps no longer than h_max.
template <typename State, typename Rhs>
State advance(const State& y0, double t0, double t1, double h_max, Rhs&& rhs) {
  const double span = t1 - t0;
  const auto steps = std::max<long>(1, static_cast<long>(std::ceil(span / h_max - 1e-9)));
  const double h = span / static_cast<double>(steps);
  State y = y0;
  for (long k = 0; k < steps; ++k) {
    y = rk4_step(y, h, rhs);
    if (!y.allFinite()) throw IntegrationError("integration produced a non-finite state", t0 + (k + 1) * h);
  }
  return y;
}

}  // namespace

Trace trace(const Network& net, const Vector& x0, double t, const IntegratorOptions& opts) {
  if (x0.size() != static_cast<Eigen::Index>(net.dim())) {
    throw std::invalid_argument("initial state length does not match species count");
  }
  Trace out;
  out.rho = opts.rho;
  out.times = sample_times(t, opts.rho);
  out.states.reserve(out.times.size());
  out.states.push_back(x0);
  const auto field = [&net](const Vector& x) -> Vector { return vector_field(net, x); };
  for (std::size_t i = 1; i < out.times.size(); ++i) {
    out.states.push_back(advance(out.states.back(), out.times[i - 1], out.times[i], opts.step_limit(), field));
  }
  return out;
}

Trace trace(const Process& p, double t, const IntegratorOptions& opts) {
  return trace(*p.network, p.conc, t, opts);
}

SensTrace sensitivity_trace(const Network& net, const Vector& x0, double t, const IntegratorOptions& opts) {
  const auto n = static_cast<Eigen::Index>(net.dim());
  if (x0.size() != n) throw std::invalid_argument("initial state length does not match species count");

  // Column 0 carries the state, columns 1..n the sensitivity matrix.
  Matrix y(n, n + 1);
  y.col(0) = x0;
  y.rightCols(n).setIdentity();
  const auto rhs = [&net, n](const Matrix& z) -> Matrix {
    Matrix dz(n, n + 1);
    const Vector x = z.col(0);
    dz.col(0) = vector_field(net, x);
    dz.rightCols(n).noalias() = jacobian(net, x) * z.rightCols(n);
    return dz;
  };

  SensTrace out;
  out.rho = opts.rho;
  out.times = sample_times(t, opts.rho);
  out.states.reserve(out.times.size());
  out.sensitivities.reserve(out.times.size());
  out.states.emplace_back(y.col(0));
  out.sensitivities.emplace_back(y.rightCols(n));
  for (std::size_t i = 1; i < out.times.size(); ++i) {
    y = advance(y, out.times[i - 1], out.times[i], opts.step_limit(), rhs);
    out.states.emplace_back(y.col(0));
    out.sensitivities.emplace_back(y.rightCols(n));
  }
  return out;
}

double spectral_norm(const Matrix& s) {
  if (s.size() == 0) return 0.0;
  if (s.rows() == 1 && s.cols() == 1) return std::abs(s(0, 0));
  const Matrix gram = s.transpose() * s;

  // Start from the Gram column of largest norm; it cannot be orthogonal to
  // the dominant eigenvector unless the matrix is zero.
  Eigen::Index best = 0;
  gram.colwise().norm().maxCoeff(&best);
  Vector v = gram.col(best);
  double lambda = v.norm();
  if (lambda == 0.0) return 0.0;
  v /= lambda;

  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-10;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Vector w = gram * v;
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (std::abs(next - lambda) <= kTolerance * next) return std::sqrt(next);
    lambda = next;
  }
  // Nearly repeated top singular values converge slowly; settle it exactly.
  Eigen::JacobiSVD<Matrix> svd(s);
  return svd.singularValues()(0);
}

std::vector<ExpansionSample> expansion(const Network& net, const Vector& x0, double eps, double t,
                                       const IntegratorOptions& opts) {
  if (!(eps >= 0.0)) throw std::invalid_argument("expansion radius must be >= 0");
  const SensTrace st = sensitivity_trace(net, x0, t, opts);
  std::vector<ExpansionSample> out;
  out.reserve(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) {
    out.push_back({st.times[i], eps == 0.0 ? 0.0 : eps * spectral_norm(st.sensitivities[i])});
  }
  return out;
}

TubeTrace tube(const Network& net, const Ball& ball, double t, const IntegratorOptions& opts) {
  TubeTrace out;
  out.rho = opts.rho;
  if (ball.radius == 0.0) {
    Trace spine = trace(net, ball.center, t, opts);
    out.times = std::move(spine.times);
    out.balls.reserve(out.times.size());
    for (auto& x : spine.states) out.balls.push_back(Ball{std::move(x), 0.0});
    return out;
  }
  const SensTrace st = sensitivity_trace(net, ball.center, t, opts);
  out.times = st.times;
  out.balls.reserve(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) {
    out.balls.push_back(Ball{st.states[i], ball.radius * spectral_norm(st.sensitivities[i])});
  }
  return out;
}

namespace {

std::size_t farthest_from(const std::vector<Vector>& points, const Vector& from) {
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = (points[i] - from).squaredNorm();
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double max_distance(const std::vector<Vector>& points, const Vector& center) {
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, (p - center).norm());
  return r;
}

}  // namespace

Ball bounding_ball(const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("bounding ball of an empty set");
  if (points.size() == 1) return Ball{points.front(), 0.0};

  // Ritter: seed with an approximately diametral pair, then grow.
  const std::size_t y = farthest_from(points, points.front());
  const std::size_t z = farthest_from(points, points[y]);
  Vector center = 0.5 * (points[y] + points[z]);
  double radius = 0.5 * (points[y] - points[z]).norm();
  for (const auto& p : points) {
    const double d = (p - center).norm();
    if (d > radius) {
      const double grown = 0.5 * (radius + d);
      center += ((grown - radius) / d) * (p - center);
      radius = grown;
    }
  }
  // Recompute so containment holds for the rounded centre exactly.
  radius = max_distance(points, center);

  // A ball centred on an input point has radius at most the diameter, i.e.
  // at most twice optimal; keep whichever is smaller.
  const double seeded = max_distance(points, points[y]);
  if (seeded < radius) return Ball{points[y], seeded};
  return Ball{std::move(center), radius};
}

Ball bounding_ball_of_balls(const std::vector<Ball>& balls) {
  if (balls.empty()) throw std::invalid_argument("bounding ball of an empty set");
  if (balls.size() == 1) return balls.front();
  std::vector<Vector> centers;
  centers.reserve(balls.size());
  for (const auto& b : balls) centers.push_back(b.center);
  Ball out = bounding_ball(centers);
  double radius = 0.0;
  for (const auto& b : balls) radius = std::max(radius, (b.center - out.center).norm() + b.radius);
  out.radius = radius;
  return out;
}

}  // namespace lbc
