#include "alphadisk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace alphadisk::quadrature {

// --- Gauss-Legendre ----------------------------------------------------------

namespace {

GaussLegendre make_gauss_legendre(std::size_t n) {
  GaussLegendre rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Newton iteration on P_n from the classic initial guess
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendre> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
  return it->second;
}

// --- CircleRule ---------------------------------------------------------------

CircleRule::CircleRule(std::size_t n) : n_(n) {
  if (n < 4) throw DomainError("circle rule needs at least 4 nodes");
}

cplx integrate_circle(const std::function<cplx(double)>& f, const QuadratureSpec& spec) {
  spec.validate();
  const CircleRule rule(spec.circle_nodes);
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    const cplx v = f(rule.node(j));
    if (!finite(v)) {
      std::ostringstream os;
      os << "circle integrand not finite at theta = " << rule.node(j);
      throw NonFiniteError(os.str());
    }
    acc += v;
  }
  return acc * rule.weight();
}

// --- DiskRule -----------------------------------------------------------------

namespace {

// chord length from `center` along direction e^{it} to the unit circle:
// positive root of rho^2 + 2 rho Re(conj(center) e^{it}) + |center|^2 = 1
double ray_length(cplx center, double cos_t, double sin_t) {
  const double b = center.real() * cos_t + center.imag() * sin_t;
  const double c2 = center.real() * center.real() + center.imag() * center.imag();
  return -b + std::sqrt(b * b + (1.0 - c2));
}

struct Panel {
  double a, b;       // rho-range (inner panels) or u-range (mapped panels)
  bool mapped;       // true: rho = R - (R-m)(1-u)^2 with u in [a,b]
};

// radial panel layout for one ray of length R: geometric panels toward 0 on
// [0, R/2], then a sqrt-clustering map toward R on [R/2, R] subdivided
// geometrically in the mapped coordinate
void build_panels(double R, std::size_t levels, std::vector<Panel>& out) {
  out.clear();
  const double m = 0.5 * R;
  double lo = 0.0;
  for (std::size_t j = 0; j < levels; ++j) {
    const double hi = m * std::pow(4.0, -static_cast<double>(levels - 1 - j));
    out.push_back({lo, hi, false});
    lo = hi;
  }
  double ulo = 0.0;
  for (std::size_t j = 1; j < levels; ++j) {
    const double uhi = 1.0 - std::pow(2.0, -static_cast<double>(j));
    out.push_back({ulo, uhi, true});
    ulo = uhi;
  }
  out.push_back({ulo, 1.0, true});
}

}  // namespace

double DiskRule::total_weight() const {
  double acc = 0.0;
  for (const Node& n : nodes) acc += n.weight;
  return acc;
}

DiskRule DiskRule::centered(cplx center, const QuadratureSpec& spec) {
  spec.validate();
  const std::size_t nt = spec.circle_nodes;
  const std::size_t levels = spec.singular_ring_levels;
  const GaussLegendre& gl = gauss_legendre(spec.radial_nodes);

  DiskRule rule;
  rule.ray_offsets.reserve(nt + 1);
  rule.nodes.reserve(nt * 2 * levels * spec.radial_nodes);
  const double dt = two_pi / static_cast<double>(nt);

  std::vector<Panel> panels;
  for (std::size_t i = 0; i < nt; ++i) {
    rule.ray_offsets.push_back(rule.nodes.size());
    const double t = dt * static_cast<double>(i);
    const double ct = std::cos(t), st = std::sin(t);
    const double R = ray_length(center, ct, st);
    const double m = 0.5 * R;
    build_panels(R, levels, panels);

    for (const Panel& p : panels) {
      const double mid = 0.5 * (p.a + p.b);
      const double halfwidth = 0.5 * (p.b - p.a);
      for (std::size_t g = 0; g < gl.nodes.size(); ++g) {
        const double x = mid + halfwidth * gl.nodes[g];
        double rho, drho;
        if (p.mapped) {
          const double omu = 1.0 - x;
          rho = R - (R - m) * omu * omu;
          drho = 2.0 * (R - m) * omu;
        } else {
          rho = x;
          drho = 1.0;
        }
        const cplx z = center + cplx(rho * ct, rho * st);
        // guard against rim round-off; a skipped node carries weight ~1e-14
        if (one_minus_abs2(z) <= 5e-16) continue;
        const double w = dt * gl.weights[g] * halfwidth * drho * rho;
        rule.nodes.push_back({z, w});
      }
    }
  }
  rule.ray_offsets.push_back(rule.nodes.size());
  return rule;
}

DiskRule DiskRule::mobius_pulled(const DiskPoint& w, const QuadratureSpec& spec) {
  const DiskRule base = centered(cplx(0.0, 0.0), spec);
  const cplx wv = w.value();
  const double dw = w.one_minus_abs2();
  DiskRule rule;
  rule.nodes.reserve(base.nodes.size());
  rule.ray_offsets.reserve(base.ray_offsets.size());
  for (std::size_t i = 0; i + 1 < base.ray_offsets.size(); ++i) {
    rule.ray_offsets.push_back(rule.nodes.size());
    for (std::size_t k = base.ray_offsets[i]; k < base.ray_offsets[i + 1]; ++k) {
      const cplx denom = 1.0 - std::conj(wv) * base.nodes[k].z;
      const double d2 = std::norm(denom);
      const cplx zeta = (wv - base.nodes[k].z) / denom;
      // the map can push rim-adjacent nodes onto the rim in floating point
      if (one_minus_abs2(zeta) <= 5e-16) continue;
      rule.nodes.push_back({zeta, base.nodes[k].weight * (dw * dw) / (d2 * d2)});
    }
  }
  rule.ray_offsets.push_back(rule.nodes.size());
  return rule;
}

// --- disk integrals with a coarse/fine agreement check ------------------------

namespace {

cplx eval_rule(const DiskRule& rule, const std::function<cplx(const DiskPoint&)>& f) {
  const std::size_t rays = rule.ray_offsets.size() - 1;
  std::vector<cplx> partial(rays, cplx(0.0, 0.0));
  std::vector<std::size_t> bad(rays, 0);
  parallel_fill(rays, [&](std::size_t i) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = rule.ray_offsets[i]; k < rule.ray_offsets[i + 1]; ++k) {
      const DiskRule::Node& n = rule.nodes[k];
      const cplx v = f(DiskPoint(n.z));
      if (!finite(v)) {
        bad[i] = k + 1;
        return;
      }
      acc += v * n.weight;
    }
    partial[i] = acc;
  });
  for (std::size_t i = 0; i < rays; ++i) {
    if (bad[i]) {
      const cplx z = rule.nodes[bad[i] - 1].z;
      std::ostringstream os;
      os << "disk integrand not finite at (" << z.real() << ", " << z.imag() << ")";
      throw NonFiniteError(os.str());
    }
  }
  cplx total(0.0, 0.0);
  for (std::size_t i = 0; i < rays; ++i) total += partial[i];
  return total;
}

QuadratureSpec coarsened(const QuadratureSpec& spec) {
  QuadratureSpec c = spec;
  c.circle_nodes = std::max<std::size_t>(4, spec.circle_nodes / 2);
  c.radial_nodes = std::max<std::size_t>(4, spec.radial_nodes - 2);
  c.singular_ring_levels = std::max<std::size_t>(4, spec.singular_ring_levels - 1);
  return c;
}

cplx checked_integral(const std::function<cplx(const DiskPoint&)>& f, const QuadratureSpec& spec,
                      const std::function<DiskRule(const QuadratureSpec&)>& build) {
  const cplx fine = eval_rule(build(spec), f);
  const cplx coarse = eval_rule(build(coarsened(spec)), f);
  const double diff = std::abs(fine - coarse);
  const double allowed = std::max(spec.abs_tol, spec.rel_tol * std::abs(fine));
  if (diff > allowed) {
    std::ostringstream os;
    os << "refinement levels disagree: " << diff << " > " << allowed
       << " (fine " << fine.real() << "+" << fine.imag() << "i, coarse "
       << coarse.real() << "+" << coarse.imag() << "i)";
    throw ToleranceError(os.str());
  }
  return fine;
}

}  // namespace

cplx integrate_disk(const std::function<cplx(const DiskPoint&)>& f, const QuadratureSpec& spec) {
  spec.validate();
  return checked_integral(f, spec, [](const QuadratureSpec& s) {
    return DiskRule::centered(cplx(0.0, 0.0), s);
  });
}

cplx integrate_disk_recentered(const std::function<cplx(const DiskPoint&)>& f, const DiskPoint& w,
                               const QuadratureSpec& spec) {
  spec.validate();
  const cplx c = w.value();
  return checked_integral(f, spec, [c](const QuadratureSpec& s) {
    return DiskRule::centered(c, s);
  });
}

cplx integrate_disk_mobius(const std::function<cplx(const DiskPoint&)>& f, const DiskPoint& w,
                           const QuadratureSpec& spec) {
  spec.validate();
  return checked_integral(f, spec, [&w](const QuadratureSpec& s) {
    return DiskRule::mobius_pulled(w, s);
  });
}

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
  if (!(abs_tol > 0.0)) throw DomainError("interval tolerance must be positive");
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw DomainError("interval bounds out of order");
  }
  double error = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 20, 1e-13, &error);
  if (!std::isfinite(v)) throw NonFiniteError("interval integral is not finite");
  if (error > std::max(abs_tol, 1e-12 * std::abs(v))) {
    std::ostringstream os;
    os << "interval integral error estimate " << error << " exceeds tolerance " << abs_tol;
    throw ToleranceError(os.str());
  }
  return v;
}

}  // namespace alphadisk::quadrature
