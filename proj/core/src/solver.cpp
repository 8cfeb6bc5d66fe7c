#include "alphadisk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "alphadisk/quadrature.hpp"

namespace alphadisk {

namespace {

constexpr std::size_t kProbeRings = 64;
constexpr std::size_t kProbeAngles = 64;

struct GrowthProbe {
  double max_abs = 0.0;
  double beta_hat = 0.0;  // growth exponent of max|g| against 1 - |z|^2
};

GrowthProbe run_probe(const DiskField& g) {
  GrowthProbe p;
  std::vector<double> ring_max(kProbeRings, 0.0);
  for (std::size_t i = 0; i < kProbeRings; ++i) {
    const double r = static_cast<double>(i + 1) / static_cast<double>(kProbeRings + 1);
    for (std::size_t j = 0; j < kProbeAngles; ++j) {
      const double theta = two_pi * static_cast<double>(j) / static_cast<double>(kProbeAngles);
      const double m = std::abs(g(DiskPoint(std::polar(r, theta))));
      if (!std::isfinite(m)) throw NonFiniteError("source field is not finite on the probe grid");
      ring_max[i] = std::max(ring_max[i], m);
    }
  }
  p.max_abs = *std::max_element(ring_max.begin(), ring_max.end());
  // two-point log-log fit of the outer growth against d = 1 - r^2
  const std::size_t lo = (3 * kProbeRings) / 4 - 1;
  const std::size_t hi = kProbeRings - 1;
  const auto d_of = [](std::size_t i) {
    const double r = static_cast<double>(i + 1) / static_cast<double>(kProbeRings + 1);
    return (1.0 - r) * (1.0 + r);
  };
  if (ring_max[lo] > 0.0 && ring_max[hi] > 0.0) {
    p.beta_hat = std::log(ring_max[hi] / ring_max[lo]) / std::log(d_of(lo) / d_of(hi));
  }
  return p;
}

}  // namespace

double probe_growth_exponent(const DiskField& g) { return run_probe(g).beta_hat; }

DirichletProblem DirichletProblem::make(AlphaWeight alpha, BoundarySignal f, DiskField g,
                                        QuadratureSpec spec) {
  spec.validate();
  const GrowthProbe probe = run_probe(g);
  if (probe.max_abs > 0.0) {
    std::ostringstream os;
    if (g.envelope_exponent()) {
      const double beta = *g.envelope_exponent();
      if (probe.beta_hat > beta + 0.25) {
        os << "declared growth exponent " << beta << " understates the observed growth "
           << probe.beta_hat;
        throw IntegrabilityError(os.str());
      }
      if (beta >= alpha.alpha() + 2.0) {
        os << "declared growth exponent " << beta << " >= alpha + 2 = " << alpha.alpha() + 2.0
           << "; the weighted source is not integrable";
        throw IntegrabilityError(os.str());
      }
    }
    if (probe.beta_hat >= alpha.alpha() + 2.0 - 0.05) {
      os << "observed growth exponent " << probe.beta_hat << " reaches alpha + 2 = "
         << alpha.alpha() + 2.0 << "; the weighted source is not integrable";
      throw IntegrabilityError(os.str());
    }
  }
  return DirichletProblem(alpha, std::move(f), std::move(g), spec);
}

cplx boundary_part(const DirichletProblem& problem, const DiskPoint& w) {
  const BoundarySignal& f = problem.f();
  const bool use_rule = f.has_rule();
  const std::size_t n = use_rule ? std::max(problem.spec().circle_nodes, f.size()) : f.size();
  cplx acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = two_pi * static_cast<double>(k) / static_cast<double>(n);
    const cplx sample = use_rule ? f.rule_at(theta) : f.sample(k);
    acc += v_kernel(w, BoundaryAngle(theta), problem.alpha()) * sample;
  }
  return acc / static_cast<double>(n);
}

cplx green_potential_of(const DiskField& g, const AlphaWeight& alpha, const DiskPoint& w,
                        const QuadratureSpec& spec) {
  QuadratureSpec eff = spec;
  if (w.abs() >= 0.95) {
    eff.singular_ring_levels += 4;
    eff.circle_nodes *= 2;
  }
  const auto integrand = [&g, &alpha, &w](const DiskPoint& z) {
    return green_alpha(z, w, alpha) * g(z);
  };
  return kGreenPotentialScale * quadrature::integrate_disk_recentered(integrand, w, eff);
}

cplx green_potential(const DirichletProblem& problem, const DiskPoint& w) {
  return green_potential_of(problem.g(), problem.alpha(), w, problem.spec());
}

SolveReport solve(const DirichletProblem& problem, const std::vector<DiskPoint>& eval_points) {
  SolveReport rep;
  rep.points.reserve(eval_points.size());
  for (const DiskPoint& w : eval_points) {
    SolveReport::PointResult pr;
    pr.w = w;
    try {
      pr.v = boundary_part(problem, w);
      pr.potential = green_potential(problem, w);
      pr.u = pr.v + pr.potential;
      pr.ok = true;
    } catch (const Error& e) {
      pr.ok = false;
      pr.error = e.what();
      ++rep.failures;
    }
    rep.points.push_back(std::move(pr));
  }

  const DiskField u_field = DiskField::from_rule([&problem](const DiskPoint& z) {
    return boundary_part(problem, z) + green_potential(problem, z);
  });
  std::size_t probes = 0;
  std::ostringstream notes;
  for (const DiskPoint& z : eval_points) {
    if (probes >= 4) break;
    if (z.abs() > 0.8) continue;
    ++probes;
    SolveReport::ResidualProbe rp;
    rp.z = z;
    try {
      rp.lhs = -apply_lbar_alpha(u_field, z, problem.alpha(), default_fd_step(z));
      rp.rhs = problem.g()(z);
      rp.abs_err = std::abs(rp.lhs - rp.rhs);
      rp.rel_err = rp.abs_err / std::max(1.0, std::abs(rp.rhs));
      rep.max_residual_rel = std::max(rep.max_residual_rel, rp.rel_err);
      rep.residuals.push_back(rp);
    } catch (const Error& e) {
      // probe trouble is diagnostic, not a per-point failure
      notes << "residual probe at (" << z.re() << ", " << z.im() << ") failed: " << e.what()
            << "; ";
    }
  }
  notes << rep.residuals.size() << " residual probes";
  rep.notes = notes.str();
  return rep;
}

namespace {

struct Stencil {
  cplx center, px, mx, py, my;
};

Stencil sample_stencil(const DiskField& u, const DiskPoint& z, double step) {
  if (!(step > 0.0) || step >= (1.0 - z.abs()) / 4.0) {
    std::ostringstream os;
    os << "finite-difference step " << step << " must lie in (0, " << (1.0 - z.abs()) / 4.0
       << ") at |z| = " << z.abs();
    throw StepError(os.str());
  }
  const cplx c = z.value();
  Stencil s;
  s.center = u(z);
  s.px = u(DiskPoint(c + step));
  s.mx = u(DiskPoint(c - step));
  s.py = u(DiskPoint(c + cplx(0.0, step)));
  s.my = u(DiskPoint(c - cplx(0.0, step)));
  return s;
}

}  // namespace

cplx apply_lbar_alpha(const DiskField& u, const DiskPoint& z, const AlphaWeight& a, double step) {
  const Stencil s = sample_stencil(u, z, step);
  const cplx uz = ((s.px - s.mx) - cplx(0.0, 1.0) * (s.py - s.my)) / (4.0 * step);
  const cplx uzbz = (s.px + s.mx + s.py + s.my - 4.0 * s.center) / (4.0 * step * step);
  const double d = z.one_minus_abs2();
  const double al = a.alpha();
  return al * std::pow(d, -al - 1.0) * z.value() * uz + std::pow(d, -al) * uzbz;
}

cplx apply_l_alpha(const DiskField& u, const DiskPoint& z, const AlphaWeight& a, double step) {
  const Stencil s = sample_stencil(u, z, step);
  const cplx uzb = ((s.px - s.mx) + cplx(0.0, 1.0) * (s.py - s.my)) / (4.0 * step);
  const cplx uzbz = (s.px + s.mx + s.py + s.my - 4.0 * s.center) / (4.0 * step * step);
  const double d = z.one_minus_abs2();
  const double al = a.alpha();
  return al * std::pow(d, -al - 1.0) * std::conj(z.value()) * uzb + std::pow(d, -al) * uzbz;
}

double default_fd_step(const DiskPoint& z) { return std::min(5e-3, (1.0 - z.abs()) / 8.0); }

}  // namespace alphadisk
