#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fl {

using cplx = std::complex<double>;

/// omega = sum_i (lambda_i + b_i(x)) dx_i / x_i on the polydisc of radius delta.
struct LinearModel {
  std::vector<cplx> lambda;
  double delta = 1.0;
  std::vector<std::function<cplx(std::span<const cplx>)>> b;  // empty or one per coordinate

  /// sum_{i<k} r_i dx_i/x_i - sum_{i>=k} r_i dx_i/x_i, all r_i > 0 and 1 <= k < tau.
  static LinearModel nodal(const std::vector<double>& r, int k, double delta = 1.0);
  /// dx/x + lambda dy/y.
  static LinearModel planar(cplx lambda, double delta = 1.0);

  int tau() const { return static_cast<int>(lambda.size()); }
  bool real() const;
};

struct NumericConfig {
  double step = 1e-3;             // RK4 step per unit of log-length
  double tolerance = 1e-9;
  double max_path_length = 100.0;
};

/// A segment x_i(s) = x_i(0) exp(s w_i), s in [0, 1], of every base coordinate.
struct PathLeg {
  std::vector<cplx> w;
};

/// Path in the base coordinates (all coordinates except the fiber one), as log-linear legs.
struct BasePath {
  std::vector<cplx> start;
  std::vector<PathLeg> legs;

  static BasePath circle(std::vector<cplx> start, int coord, double turns);
  static BasePath radial(std::vector<cplx> start, int coord, double ratio);
  double length() const;
  std::vector<cplx> end() const;
};

/// exp(-2 pi i turns / lambda), the holonomy of dx/x + lambda dy/y around x = 0.
cplx loop_multiplier(cplx lambda, int turns);

/// Fiber value at the end of the lift of `path` starting at `fiber_start`; `fiber` indexes the lifted coordinate.
cplx lift_path(const LinearModel& model, int fiber, const BasePath& path, cplx fiber_start,
               const NumericConfig& cfg = {});

/// Maximum of |log I(t) - log I(0)| along the lift, with I = prod |x_i|^{lambda_i}.
double nodal_first_integral_drift(const LinearModel& model, int fiber, const BasePath& path, cplx fiber_start,
                                  const NumericConfig& cfg = {});

/// Log of prod |x_i|^{lambda_i} for a real model.
double log_first_integral(const LinearModel& model, std::span<const cplx> x);

/// epsilon exp(-2((pi + 1) rho + lambda) / rho^2).
double lemma4_constant(double lambda, double rho, double epsilon);

/// Samples (alpha', beta') with |beta'| < c and lifts the radial-then-angular path to x = alpha.
///
/// The model is dx/x + (lambda + f) dy/y. Returns the number of samples whose
/// lift stays in the polydisc and ends with |y| < epsilon.
int lemma4_reach_count(double lambda, double rho, double epsilon, double delta, cplx alpha,
                       std::function<cplx(std::span<const cplx>)> f, int samples, std::uint64_t seed,
                       const NumericConfig& cfg = {});

/// Delta_l(mu; eps): x_i = mu_i for i != l and |x_l| < eps.
struct Transversal {
  int ell = 1;
  std::vector<cplx> mu;
  double epsilon = 0.5;
};

struct SampleGrid {
  int n = 20;
  double base_max = 0.0;   // defaults to delta
  double fiber_max = 0.0;  // defaults to delta
};

struct ProbePoint {
  std::vector<cplx> x;
  bool reached = false;
  double first_integral = 0.0;  // prod |x_i|^{lambda_i}, NaN for non-real models
};

struct ProbeResult {
  std::vector<ProbePoint> points;
  double reached_fraction = 0.0;
  std::vector<std::size_t> unreached;  // indices into points
};

/// Searches angular/radial lifting paths from every grid point to the transversal.
ProbeResult saturation_probe(const LinearModel& model, const Transversal& delta_l, const SampleGrid& grid,
                             const NumericConfig& cfg = {});

std::string to_csv(const ProbeResult& r);

}  // namespace fl
