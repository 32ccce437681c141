#include "foliationlab/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "foliationlab/errors.hpp"

namespace fl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxStep = 0.1;

void check_model(const LinearModel& m, int fiber) {
  if (m.tau() < 2 || m.tau() > 3) throw Error(ErrorCode::BadParameters, "models have two or three coordinates");
  for (const auto& l : m.lambda) {
    if (l == cplx(0.0)) throw Error(ErrorCode::ZeroLambda, "every residue must be nonzero");
  }
  if (!(m.delta > 0)) throw Error(ErrorCode::BadParameters, "polydisc radius must be positive");
  if (!m.b.empty() && static_cast<int>(m.b.size()) != m.tau()) {
    throw Error(ErrorCode::BadParameters, "one perturbation per coordinate");
  }
  if (fiber < 0 || fiber >= m.tau()) throw Error(ErrorCode::BadParameters, "fiber index out of range");
}

void check_config(const NumericConfig& cfg) {
  if (!(cfg.step > 0) || cfg.step > kMaxStep) {
    throw Error(ErrorCode::StepTooLarge, "step must lie in (0, " + std::to_string(kMaxStep) + "]");
  }
  if (!(cfg.tolerance > 0) || !(cfg.max_path_length > 0)) {
    throw Error(ErrorCode::BadParameters, "tolerance and path length bound must be positive");
  }
}

cplx coefficient(const LinearModel& m, int i, std::span<const cplx> x) {
  if (m.b.empty() || !m.b[i]) return m.lambda[i];
  cplx bi = m.b[i](x);
  if (std::abs(bi) >= std::abs(m.lambda[i])) {
    throw Error(ErrorCode::BadParameters, "perturbation exceeds its residue on the path");
  }
  return m.lambda[i] + bi;
}

void check_domain(const LinearModel& m, std::span<const cplx> x) {
  for (const auto& xi : x) {
    double a = std::abs(xi);
    if (!(a < m.delta) || !(a > 0) || !std::isfinite(a)) {
      throw Error(ErrorCode::LeftDomain, "lift left the punctured polydisc");
    }
  }
}

/// Integrates every leg of the lift; `observe` sees the full point after each step.
template <class Observe>
cplx integrate(const LinearModel& m, int fiber, const BasePath& path, cplx start, const NumericConfig& cfg,
               Observe&& observe) {
  check_model(m, fiber);
  check_config(cfg);
  const int tau = m.tau();
  if (static_cast<int>(path.start.size()) != tau - 1) {
    throw Error(ErrorCode::BadParameters, "base path needs " + std::to_string(tau - 1) + " coordinates");
  }
  if (path.length() > cfg.max_path_length) throw Error(ErrorCode::BadParameters, "path longer than allowed");

  std::vector<int> base;
  for (int i = 0; i < tau; ++i) {
    if (i != fiber) base.push_back(i);
  }
  std::vector<cplx> x(tau);
  for (std::size_t k = 0; k < base.size(); ++k) x[base[k]] = path.start[k];
  x[fiber] = start;
  check_domain(m, x);
  observe(std::span<const cplx>(x));

  std::vector<cplx> origin(tau), probe(tau);
  for (const auto& leg : path.legs) {
    double len = 0;
    for (const auto& w : leg.w) len += std::abs(w);
    if (len == 0) continue;
    const int steps = static_cast<int>(std::ceil(len / cfg.step));
    const double h = 1.0 / steps;
    origin = x;
    auto at = [&](double s, cplx y) -> std::span<const cplx> {
      for (std::size_t k = 0; k < base.size(); ++k) probe[base[k]] = origin[base[k]] * std::exp(s * leg.w[k]);
      probe[fiber] = y;
      return probe;
    };
    auto rhs = [&](double s, cplx y) {
      auto pt = at(s, y);
      check_domain(m, pt);
      cplx num = 0;
      for (std::size_t k = 0; k < base.size(); ++k) num += coefficient(m, base[k], pt) * leg.w[k];
      return -y * num / coefficient(m, fiber, pt);
    };
    cplx y = x[fiber];
    for (int s = 0; s < steps; ++s) {
      double t = s * h;
      cplx k1 = rhs(t, y);
      cplx k2 = rhs(t + h / 2, y + h / 2 * k1);
      cplx k3 = rhs(t + h / 2, y + h / 2 * k2);
      cplx k4 = rhs(t + h, y + h * k3);
      cplx next = y + h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      if (std::abs(std::log(std::abs(next) / std::abs(y))) > 1.0) {
        throw Error(ErrorCode::StepTooLarge, "one step changed log|fiber| by more than 1");
      }
      y = next;
      auto pt = at(t + h, y);
      check_domain(m, pt);
      observe(pt);
    }
    x.assign(probe.begin(), probe.end());
  }
  return x[fiber];
}

double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  return a < 0 ? a + 2 * kPi : a;
}

}  // namespace

LinearModel LinearModel::nodal(const std::vector<double>& r, int k, double delta) {
  if (r.size() < 2 || r.size() > 3 || k < 1 || k >= static_cast<int>(r.size())) {
    throw Error(ErrorCode::BadParameters, "nodal models need 1 <= k < tau <= 3");
  }
  LinearModel m;
  m.delta = delta;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0)) throw Error(ErrorCode::BadParameters, "nodal weights must be positive");
    m.lambda.emplace_back(static_cast<int>(i) < k ? r[i] : -r[i]);
  }
  return m;
}

LinearModel LinearModel::planar(cplx lambda, double delta) {
  LinearModel m;
  m.lambda = {cplx(1.0), lambda};
  m.delta = delta;
  return m;
}

bool LinearModel::real() const {
  for (const auto& l : lambda) {
    if (l.imag() != 0) return false;
  }
  return b.empty();
}

BasePath BasePath::circle(std::vector<cplx> start, int coord, double turns) {
  BasePath p{std::move(start), {}};
  PathLeg leg{std::vector<cplx>(p.start.size())};
  leg.w.at(coord) = cplx(0, 2 * kPi * turns);
  p.legs.push_back(leg);
  return p;
}

BasePath BasePath::radial(std::vector<cplx> start, int coord, double ratio) {
  if (!(ratio > 0)) throw Error(ErrorCode::BadParameters, "radial ratio must be positive");
  BasePath p{std::move(start), {}};
  PathLeg leg{std::vector<cplx>(p.start.size())};
  leg.w.at(coord) = std::log(ratio);
  p.legs.push_back(leg);
  return p;
}

double BasePath::length() const {
  double len = 0;
  for (const auto& leg : legs) {
    for (const auto& w : leg.w) len += std::abs(w);
  }
  return len;
}

std::vector<cplx> BasePath::end() const {
  std::vector<cplx> x = start;
  for (const auto& leg : legs) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] *= std::exp(leg.w[k]);
  }
  return x;
}

cplx loop_multiplier(cplx lambda, int turns) {
  if (lambda == cplx(0.0)) throw Error(ErrorCode::ZeroLambda, "lambda = 0");
  return std::exp(cplx(0, -2 * kPi * turns) / lambda);
}

cplx lift_path(const LinearModel& model, int fiber, const BasePath& path, cplx fiber_start, const NumericConfig& cfg) {
  return integrate(model, fiber, path, fiber_start, cfg, [](std::span<const cplx>) {});
}

double log_first_integral(const LinearModel& model, std::span<const cplx> x) {
  if (!model.real()) throw Error(ErrorCode::BadParameters, "first integral needs a real unperturbed model");
  double s = 0;
  for (int i = 0; i < model.tau(); ++i) s += model.lambda[i].real() * std::log(std::abs(x[i]));
  return s;
}

double nodal_first_integral_drift(const LinearModel& model, int fiber, const BasePath& path, cplx fiber_start,
                                  const NumericConfig& cfg) {
  if (!model.real()) throw Error(ErrorCode::BadParameters, "first integral needs a real unperturbed model");
  bool first = true;
  double i0 = 0, drift = 0;
  integrate(model, fiber, path, fiber_start, cfg, [&](std::span<const cplx> x) {
    double v = log_first_integral(model, x);
    if (first) {
      i0 = v;
      first = false;
    }
    drift = std::max(drift, std::abs(v - i0));
  });
  return drift;
}

double lemma4_constant(double lambda, double rho, double epsilon) {
  if (!(lambda > 0) || !(rho > 0) || !(epsilon > 0)) {
    throw Error(ErrorCode::BadParameters, "lambda, rho and epsilon must be positive");
  }
  return epsilon * std::exp(-2 * ((kPi + 1) * rho + lambda) / (rho * rho));
}

int lemma4_reach_count(double lambda, double rho, double epsilon, double delta, cplx alpha,
                       std::function<cplx(std::span<const cplx>)> f, int samples, std::uint64_t seed,
                       const NumericConfig& cfg) {
  const double c = lemma4_constant(lambda, rho, epsilon);
  if (!(std::abs(alpha) > delta / 2 && std::abs(alpha) < delta) || !(epsilon < delta)) {
    throw Error(ErrorCode::BadParameters, "need delta/2 < |alpha| < delta and epsilon < delta");
  }
  LinearModel m = LinearModel::planar(lambda, delta);
  if (f) m.b = {nullptr, std::move(f)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int reached = 0;
  for (int s = 0; s < samples; ++s) {
    cplx a1 = std::polar(delta * (0.01 + 0.98 * unit(rng)), 2 * kPi * unit(rng));
    cplx b1 = std::polar(c * (0.01 + 0.98 * unit(rng)), 2 * kPi * unit(rng));
    BasePath p{{a1}, {}};
    p.legs.push_back({{cplx(std::log(std::abs(alpha) / std::abs(a1)))}});
    p.legs.push_back({{cplx(0, wrap_angle(std::arg(alpha) - std::arg(a1)))}});
    try {
      if (std::abs(lift_path(m, 1, p, b1, cfg)) < epsilon) ++reached;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LeftDomain) throw;
    }
  }
  return reached;
}

ProbeResult saturation_probe(const LinearModel& model, const Transversal& t, const SampleGrid& grid,
                             const NumericConfig& cfg) {
  check_model(model, t.ell);
  if (model.tau() != 2) throw Error(ErrorCode::BadParameters, "the saturation probe handles two coordinates");
  if (grid.n < 1) throw Error(ErrorCode::BadParameters, "grid needs at least one point per side");
  const int base = 1 - t.ell;
  if (t.mu.size() != 2 || std::abs(t.mu[base]) == 0 || !(std::abs(t.mu[base]) < model.delta)) {
    throw Error(ErrorCode::BadParameters, "transversal base point must lie in the punctured disc");
  }
  const double base_max = grid.base_max > 0 ? grid.base_max : model.delta;
  const double fiber_max = grid.fiber_max > 0 ? grid.fiber_max : model.delta;
  const cplx target = t.mu[base];
  // Angular legs do not change moduli in a real unperturbed model.
  const int turns_max = model.real() ? 0 : 8;
  // Deterministic phases from the golden-ratio sequence.
  auto phase = [](int k, double g) { return 2 * kPi * std::fmod(k * g, 1.0); };

  ProbeResult out;
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      ProbePoint pt;
      pt.x.resize(2);
      pt.x[base] = std::polar(base_max * (i + 1) / (grid.n + 1), phase(i + 1, 0.6180339887498949));
      pt.x[t.ell] = std::polar(fiber_max * (j + 1) / (grid.n + 1), phase(j + 1, 0.4142135623730951));
      pt.first_integral = model.real() ? std::exp(log_first_integral(model, pt.x)) : std::nan("");
      const cplx radial(std::log(std::abs(target) / std::abs(pt.x[base])));
      const double angle = wrap_angle(std::arg(target) - std::arg(pt.x[base]));
      for (int k = 0; k <= 2 * turns_max && !pt.reached; ++k) {
        int turns = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
        cplx angular(0, angle + 2 * kPi * turns);
        for (bool radial_first : {true, false}) {
          BasePath p{{pt.x[base]}, {}};
          p.legs.push_back({{radial_first ? radial : angular}});
          p.legs.push_back({{radial_first ? angular : radial}});
          try {
            if (std::abs(lift_path(model, t.ell, p, pt.x[t.ell], cfg)) < t.epsilon) {
              pt.reached = true;
              break;
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::LeftDomain) throw;
          }
        }
      }
      if (!pt.reached) out.unreached.push_back(out.points.size());
      out.points.push_back(std::move(pt));
    }
  }
  out.reached_fraction = 1.0 - static_cast<double>(out.unreached.size()) / static_cast<double>(out.points.size());
  return out;
}

std::string to_csv(const ProbeResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "x0_re,x0_im,x1_re,x1_im,reached,first_integral\n";
  for (const auto& p : r.points) {
    os << p.x[0].real() << ',' << p.x[0].imag() << ',' << p.x[1].real() << ',' << p.x[1].imag() << ','
       << (p.reached ? 1 : 0) << ',' << p.first_integral << '\n';
  }
  return os.str();
}

}  // namespace fl
