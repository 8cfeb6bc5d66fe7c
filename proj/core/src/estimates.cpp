#include "alphadisk/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "alphadisk/quadrature.hpp"
#include "alphadisk/solver.hpp"

namespace alphadisk {

namespace {

// widen the angular resolution when the evaluation point squeezes the
// integrand's rim peak; the scale follows the peak width ~ sqrt(1 - |w|)
QuadratureSpec rim_boosted(const QuadratureSpec& spec, double abs_w) {
  QuadratureSpec eff = spec;
  const double gap = 1.0 - abs_w;
  if (gap < 0.05) {
    const double factor = std::ceil(std::sqrt(0.05 / gap));
    eff.circle_nodes *= static_cast<std::size_t>(factor);
    eff.singular_ring_levels += 2;
  }
  return eff;
}

}  // namespace

CirclePowerResult circle_power_integral(double r, double rho, double beta,
                                        const QuadratureSpec& spec) {
  spec.validate();
  if (!(r > 0.0 && r < 1.0 && rho > 0.0 && rho < 1.0)) {
    throw DomainError("r and rho must lie in (0, 1)");
  }
  if (!(beta > 1.0)) throw DomainError("the circle power integral requires beta > 1");
  const double rr = r * rho;
  std::size_t n = std::max<std::size_t>(spec.circle_nodes,
                                        static_cast<std::size_t>(std::ceil(30.0 / (1.0 - rr))));
  n += n % 2;
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = two_pi * static_cast<double>(k) / static_cast<double>(n);
    const double d2 = 1.0 - 2.0 * rr * std::cos(t) + rr * rr;  // |1 - r rho e^{it}|^2
    acc += std::pow(d2, -0.5 * beta);
  }
  CirclePowerResult res;
  res.value = acc * two_pi / static_cast<double>(n);
  res.ratio = res.value * std::pow(1.0 - rr, beta - 1.0);
  return res;
}

double compute_M1(double r, const QuadratureSpec& spec) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("M1 requires r in (0, 1)");
  // radial integration along each ray is exact here; the residual error is the
  // angular trapezoid acting on the ray-length profile, whose analyticity strip
  // shrinks like sqrt(1 - r)
  const QuadratureSpec eff = rim_boosted(spec, r);
  const DiskPoint w(r, 0.0);
  const auto integrand = [&w](const DiskPoint& z) {
    return cplx(1.0 / std::abs(z.value() - w.value()), 0.0);
  };
  return quadrature::integrate_disk_recentered(integrand, w, eff).real();
}

double compute_I1(const DiskPoint& w, const AlphaWeight& a, const QuadratureSpec& spec) {
  if (a.alpha() < 0.0) throw DomainError("I1 requires alpha >= 0");
  const QuadratureSpec eff = rim_boosted(spec, w.abs());
  const double al = a.alpha();
  const double wfac = std::pow(w.one_minus_abs2(), al);
  const cplx wv = w.value();
  const auto integrand = [al, wfac, wv](const DiskPoint& z) {
    const double num = std::pow(z.one_minus_abs2(), al + 1.0) * wfac;
    const double den = 2.0 * std::pow(std::abs(1.0 - std::conj(z.value()) * wv), al + 1.0) *
                       std::abs(z.value() - wv);
    return cplx(num / den, 0.0);
  };
  return quadrature::integrate_disk_recentered(integrand, w, eff).real();
}

double compute_I2(const DiskPoint& w, const AlphaWeight& a, const QuadratureSpec& spec) {
  if (!(a.alpha() > 0.0)) throw DomainError("I2 requires alpha > 0");
  // the automorphism swapping 0 and w leaves this integrand's shape invariant,
  // turning |zeta| into the pseudo-hyperbolic distance; written this way the
  // log singularity sits at w, where the recentered rule's ring grading also
  // absorbs the near-rim peak of the denominator
  const double al = a.alpha();
  const double pref = std::pow(w.one_minus_abs2(), al + 1.0);
  const cplx wv = w.value();
  const auto integrand = [al, pref, wv, &w](const DiskPoint& z) {
    const double q = pseudo_hyperbolic(z, w);
    const double num =
        pref * std::pow(z.one_minus_abs2(), al + 1.0) * (1.0 - 2.0 * std::log(q));
    const double den = std::pow(std::abs(1.0 - std::conj(wv) * z.value()), al + 3.0);
    return cplx(num / den, 0.0);
  };
  return quadrature::integrate_disk_recentered(integrand, w, spec).real();
}

BoundReport verify_green_derivative_bounds(const DiskPoint& z, const DiskPoint& w,
                                           const AlphaWeight& a, const GreenEvalConfig& cfg,
                                           double step) {
  cfg.validate();
  if (!(step > 0.0) || std::abs(z.value() - w.value()) <= 10.0 * step ||
      step >= (1.0 - w.abs()) / 4.0) {
    std::ostringstream os;
    os << "step " << step << " unusable at separation " << std::abs(z.value() - w.value())
       << " and rim gap " << 1.0 - w.abs();
    throw StepError(os.str());
  }
  const cplx wc = w.value();
  const cplx gp = green_alpha(z, DiskPoint(wc + step), a);
  const cplx gm = green_alpha(z, DiskPoint(wc - step), a);
  const cplx gip = green_alpha(z, DiskPoint(wc + cplx(0.0, step)), a);
  const cplx gim = green_alpha(z, DiskPoint(wc - cplx(0.0, step)), a);
  const cplx dw = ((gp - gm) - cplx(0.0, 1.0) * (gip - gim)) / (4.0 * step);
  const cplx dwbar = ((gp - gm) + cplx(0.0, 1.0) * (gip - gim)) / (4.0 * step);

  BoundReport report;
  report.name = "green-derivative-bounds";
  report.ratio_limit = 1.0 + 1e-3;
  report.add("dw", std::abs(dw), green_dw_bound(z, w, a, cfg));
  report.add("dwbar", std::abs(dwbar), green_dwbar_bound(z, w, a));
  std::ostringstream notes;
  notes << "central differences, step " << step;
  report.notes = notes.str();
  return report;
}

double lipschitz_quotient(const std::function<cplx(const DiskPoint&)>& field,
                          const std::vector<std::pair<DiskPoint, DiskPoint>>& pairs) {
  if (pairs.empty()) throw DomainError("need at least one pair");
  double worst = 0.0;
  for (const auto& [z1, z2] : pairs) {
    const double sep = std::abs(z1.value() - z2.value());
    if (sep == 0.0) throw DegeneratePairError("coincident pair in Lipschitz sweep");
    const cplx v1 = field(z1);
    const cplx v2 = field(z2);
    if (!finite(v1) || !finite(v2)) throw NonFiniteError("field value is not finite");
    worst = std::max(worst, std::abs(v1 - v2) / sep);
  }
  return worst;
}

BoundReport grin_lip_sweep(const AlphaWeight& a, const DiskField& g,
                           const std::vector<double>& radii, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a.alpha() > 0.0)) throw DomainError("the bounded-derivative sweep requires alpha > 0");
  if (radii.size() < 2) throw DomainError("need at least two radii");
  std::vector<double> rs = radii;
  std::sort(rs.begin(), rs.end());
  if (!(rs.front() > 0.0 && rs.back() < 1.0)) throw DomainError("radii must lie in (0, 1)");

  if (g.envelope_exponent()) {
    if (*g.envelope_exponent() > a.alpha() + 1e-12) {
      std::ostringstream os;
      os << "declared growth exponent " << *g.envelope_exponent() << " exceeds alpha = "
         << a.alpha();
      throw EnvelopeError(os.str());
    }
  } else {
    const double beta_hat = probe_growth_exponent(g);
    if (beta_hat > a.alpha() + 0.25) {
      std::ostringstream os;
      os << "observed growth exponent " << beta_hat << " exceeds alpha = " << a.alpha();
      throw EnvelopeError(os.str());
    }
  }

  constexpr std::size_t kAngles = 8;
  std::vector<double> max_dw(rs.size(), 0.0), max_dwbar(rs.size(), 0.0);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double r = rs[i];
    const double step = (1.0 - r) / 16.0;
    for (std::size_t k = 0; k < kAngles; ++k) {
      const cplx w = std::polar(r, two_pi * static_cast<double>(k) / kAngles);
      const cplx gp = green_potential_of(g, a, DiskPoint(w + step), spec);
      const cplx gm = green_potential_of(g, a, DiskPoint(w - step), spec);
      const cplx gip = green_potential_of(g, a, DiskPoint(w + cplx(0.0, step)), spec);
      const cplx gim = green_potential_of(g, a, DiskPoint(w - cplx(0.0, step)), spec);
      const cplx dw = ((gp - gm) - cplx(0.0, 1.0) * (gip - gim)) / (4.0 * step);
      const cplx dwbar = ((gp - gm) + cplx(0.0, 1.0) * (gip - gim)) / (4.0 * step);
      max_dw[i] = std::max(max_dw[i], std::abs(dw));
      max_dwbar[i] = std::max(max_dwbar[i], std::abs(dwbar));
    }
  }

  double mid_dw = 0.0, mid_dwbar = 0.0;
  for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
    mid_dw = std::max(mid_dw, max_dw[i]);
    mid_dwbar = std::max(mid_dwbar, max_dwbar[i]);
  }

  BoundReport report;
  report.name = "grin-lip";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    std::ostringstream ldw, ldwb;
    ldw << "dw max, r = " << rs[i];
    ldwb << "dwbar max, r = " << rs[i];
    report.add(ldw.str(), max_dw[i], 2.0 * mid_dw);
    report.add(ldwb.str(), max_dwbar[i], 2.0 * mid_dwbar);
  }
  std::ostringstream notes;
  notes << kAngles << " angles per circle, potential-difference step (1-r)/16";
  report.notes = notes.str();
  return report;
}

}  // namespace alphadisk
