#include "alphadisk/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

namespace alphadisk {

// --- AlphaWeight -----------------------------------------------------------

AlphaWeight::AlphaWeight(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || !(alpha > -1.0)) {
    std::ostringstream os;
    os << "weight parameter must satisfy alpha > -1, got " << alpha;
    throw DomainError(os.str());
  }
}

double AlphaWeight::rho(const DiskPoint& z) const {
  return std::pow(z.one_minus_abs2(), -alpha_);
}

AlphaWeight validate_alpha(double alpha) { return AlphaWeight(alpha); }

double weight_rho(const DiskPoint& z, const AlphaWeight& a) { return a.rho(z); }

// --- DiskPoint ---------------------------------------------------------------

DiskPoint::DiskPoint(cplx z) : z_(z), abs_(std::hypot(z.real(), z.imag())) {
  if (!finite(z) || abs_ >= 1.0) {
    std::ostringstream os;
    os << "point (" << z.real() << ", " << z.imag() << ") is not strictly inside the unit disk";
    throw DomainError(os.str());
  }
}

// --- BoundaryAngle -----------------------------------------------------------

BoundaryAngle::BoundaryAngle(double theta) {
  if (!std::isfinite(theta)) throw DomainError("boundary angle must be finite");
  theta_ = std::fmod(theta, two_pi);
  if (theta_ < 0.0) theta_ += two_pi;
}

// --- BoundarySignal ----------------------------------------------------------

namespace {

void check_signal_size(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    std::ostringstream os;
    os << "boundary signal needs an even node count >= 4, got " << n;
    throw DomainError(os.str());
  }
}

}  // namespace

BoundarySignal::BoundarySignal(std::vector<cplx> samples, std::function<cplx(double)> rule)
    : samples_(std::move(samples)), rule_(std::move(rule)) {}

BoundarySignal BoundarySignal::from_samples(std::vector<cplx> samples) {
  check_signal_size(samples.size());
  for (const cplx& v : samples)
    if (!finite(v)) throw NonFiniteError("boundary sample is not finite");
  return BoundarySignal(std::move(samples), nullptr);
}

BoundarySignal BoundarySignal::from_rule(std::function<cplx(double)> rule, std::size_t n) {
  check_signal_size(n);
  if (!rule) throw DomainError("boundary rule must be callable");
  std::vector<cplx> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    samples[k] = rule(two_pi * static_cast<double>(k) / static_cast<double>(n));
    if (!finite(samples[k])) throw NonFiniteError("boundary rule produced a non-finite sample");
  }
  return BoundarySignal(std::move(samples), std::move(rule));
}

BoundarySignal BoundarySignal::from_samples_and_rule(std::vector<cplx> samples,
                                                     std::function<cplx(double)> rule,
                                                     double agreement_tol) {
  check_signal_size(samples.size());
  if (!rule) throw DomainError("boundary rule must be callable");
  const std::size_t n = samples.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = two_pi * static_cast<double>(k) / static_cast<double>(n);
    if (std::abs(samples[k] - rule(theta)) > agreement_tol) {
      std::ostringstream os;
      os << "samples and rule disagree at node " << k << " beyond " << agreement_tol;
      throw DomainError(os.str());
    }
  }
  return BoundarySignal(std::move(samples), std::move(rule));
}

cplx BoundarySignal::rule_at(double theta) const {
  if (!rule_) throw DomainError("boundary signal has no closed-form rule");
  return rule_(theta);
}

cplx BoundarySignal::mean() const {
  cplx acc(0.0, 0.0);
  for (const cplx& v : samples_) acc += v;
  return acc / static_cast<double>(samples_.size());
}

// --- DiskField ---------------------------------------------------------------

DiskField DiskField::from_rule(std::function<cplx(const DiskPoint&)> rule,
                               std::optional<double> envelope_exponent) {
  if (!rule) throw DomainError("disk field rule must be callable");
  DiskField f;
  f.rule_ = std::move(rule);
  f.envelope_ = envelope_exponent;
  return f;
}

DiskField DiskField::from_grid(PolarGrid grid, std::optional<double> envelope_exponent) {
  if (grid.radii.empty() || grid.angular < 4)
    throw DomainError("polar grid needs at least one radius and four angles");
  if (grid.values.size() != grid.radii.size() * grid.angular)
    throw DomainError("polar grid value count does not match radii x angular");
  double prev = -1.0;
  for (double r : grid.radii) {
    if (!(r >= 0.0) || r >= 1.0 || r <= prev)
      throw DomainError("polar grid radii must be strictly increasing within [0, 1)");
    prev = r;
  }
  for (const cplx& v : grid.values)
    if (!finite(v)) throw NonFiniteError("polar grid sample is not finite");
  DiskField f;
  f.grid_ = std::move(grid);
  f.envelope_ = envelope_exponent;
  return f;
}

cplx DiskField::operator()(const DiskPoint& z) const {
  if (rule_) return rule_(z);
  const PolarGrid& g = *grid_;

  // clamp the radius into the sampled band, then bilinear in (r, theta)
  double r = std::clamp(z.abs(), g.radii.front(), g.radii.back());
  auto hi = std::lower_bound(g.radii.begin(), g.radii.end(), r);
  std::size_t i1 = static_cast<std::size_t>(std::distance(g.radii.begin(), hi));
  std::size_t i0 = i1;
  double tr = 0.0;
  if (i1 == 0) {
    i1 = (g.radii.size() > 1) ? 1 : 0;
  } else if (i1 >= g.radii.size()) {
    i0 = i1 = g.radii.size() - 1;
  } else {
    i0 = i1 - 1;
  }
  if (i0 != i1) tr = (r - g.radii[i0]) / (g.radii[i1] - g.radii[i0]);

  double theta = std::atan2(z.im(), z.re());
  if (theta < 0.0) theta += two_pi;
  const double step = two_pi / static_cast<double>(g.angular);
  const double pos = theta / step;
  std::size_t j0 = static_cast<std::size_t>(pos) % g.angular;
  std::size_t j1 = (j0 + 1) % g.angular;
  const double tt = pos - std::floor(pos);

  auto at = [&](std::size_t i, std::size_t j) { return g.values[i * g.angular + j]; };
  const cplx low = at(i0, j0) * (1.0 - tt) + at(i0, j1) * tt;
  const cplx high = at(i1, j0) * (1.0 - tt) + at(i1, j1) * tt;
  return low * (1.0 - tr) + high * tr;
}

// --- QuadratureSpec ----------------------------------------------------------

void QuadratureSpec::validate() const {
  if (circle_nodes < 4 || radial_nodes < 4 || singular_ring_levels < 4)
    throw DomainError("quadrature spec needs all node counts >= 4");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
}

QuadratureSpec QuadratureSpec::checked(std::size_t circle_nodes, std::size_t radial_nodes,
                                       std::size_t singular_ring_levels, double abs_tol,
                                       double rel_tol) {
  QuadratureSpec s{circle_nodes, radial_nodes, singular_ring_levels, abs_tol, rel_tol};
  s.validate();
  return s;
}

// --- BoundReport -------------------------------------------------------------

void BoundReport::add(std::string label, double lhs, double rhs, double ratio) {
  BoundSample s;
  s.label = std::move(label);
  s.lhs = lhs;
  s.rhs = rhs;
  s.ratio = ratio;
  s.pass = std::isfinite(ratio) && ratio <= ratio_limit;
  pass = pass && s.pass;
  samples.push_back(std::move(s));
}

void BoundReport::add(std::string label, double lhs, double rhs) {
  // 0 <= 0 holds; report it as ratio 0 instead of 0/0
  double ratio;
  if (rhs != 0.0) {
    ratio = lhs / rhs;
  } else {
    ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  add(std::move(label), lhs, rhs, ratio);
}

namespace {

double fold(const std::vector<BoundSample>& v, double init,
            const std::function<double(double, const BoundSample&)>& f) {
  double acc = init;
  for (const BoundSample& s : v) acc = f(acc, s);
  return acc;
}

}  // namespace

double BoundReport::max_ratio() const {
  return fold(samples, -std::numeric_limits<double>::infinity(),
              [](double a, const BoundSample& s) { return std::max(a, s.ratio); });
}
double BoundReport::min_ratio() const {
  return fold(samples, std::numeric_limits<double>::infinity(),
              [](double a, const BoundSample& s) { return std::min(a, s.ratio); });
}
double BoundReport::max_lhs() const {
  return fold(samples, -std::numeric_limits<double>::infinity(),
              [](double a, const BoundSample& s) { return std::max(a, s.lhs); });
}
double BoundReport::min_lhs() const {
  return fold(samples, std::numeric_limits<double>::infinity(),
              [](double a, const BoundSample& s) { return std::min(a, s.lhs); });
}

// --- helpers -----------------------------------------------------------------

cplx powc(cplx base, double exponent) {
  if (exponent == 0.0) return cplx(1.0, 0.0);
  if (exponent == 1.0) return base;
  if (exponent == 2.0) return base * base;
  const double rounded = std::nearbyint(exponent);
  if (rounded == exponent && std::abs(rounded) <= 8.0) {
    // exact small integer exponent: repeated multiplication is faster than
    // exp/log and keeps the principal branch trivially
    long n = static_cast<long>(rounded);
    const bool invert = n < 0;
    n = std::labs(n);
    cplx acc(1.0, 0.0);
    cplx p = base;
    while (n > 0) {
      if (n & 1) acc *= p;
      p *= p;
      n >>= 1;
    }
    return invert ? 1.0 / acc : acc;
  }
  return std::pow(base, exponent);
}

unsigned thread_count() {
  static const unsigned cached = [] {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ALPHA_DISK_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1 && v <= 256) n = static_cast<unsigned>(v);
    }
    return n;
  }();
  return cached;
}

void parallel_fill(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const unsigned threads = thread_count();
  if (threads <= 1 || count < 2 * threads) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t end = count * (t + 1) / threads;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
    begin = end;
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace alphadisk
