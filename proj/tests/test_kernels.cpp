#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alphadisk/kernels.hpp"

#include <cmath>
#include <complex>

#include "oracles.hpp"

using namespace alphadisk;

namespace {

DiskPoint sample_point(oracle::DiskSampler& s, double rmax = 0.9) {
  auto [x, y] = s.next(rmax);
  return DiskPoint(x, y);
}

// 4-point complex-step derivatives of G in the second argument
struct GreenDerivs {
  cplx dw;
  cplx dwbar;
};

GreenDerivs fd_green(const DiskPoint& z, const DiskPoint& w, const AlphaWeight& a, double h) {
  const cplx px = green_alpha(z, DiskPoint(w.value() + cplx(h, 0.0)), a);
  const cplx mx = green_alpha(z, DiskPoint(w.value() - cplx(h, 0.0)), a);
  const cplx py = green_alpha(z, DiskPoint(w.value() + cplx(0.0, h)), a);
  const cplx my = green_alpha(z, DiskPoint(w.value() - cplx(0.0, h)), a);
  const cplx du_dx = (px - mx) / (2.0 * h);
  const cplx du_dy = (py - my) / (2.0 * h);
  return {0.5 * (du_dx - cplx(0.0, 1.0) * du_dy), 0.5 * (du_dx + cplx(0.0, 1.0) * du_dy)};
}

}  // namespace

TEST_CASE("pseudo-hyperbolic distance closed values") {
  CHECK(pseudo_hyperbolic(DiskPoint(0.3, 0.4), DiskPoint(0.3, 0.4)) == 0.0);
  CHECK(pseudo_hyperbolic(DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.7)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(pseudo_hyperbolic(DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0)) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("pseudo-hyperbolic distance is Moebius invariant and symmetric") {
  oracle::DiskSampler s(21);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint z = sample_point(s, 0.95);
    const DiskPoint w = sample_point(s, 0.95);
    const DiskPoint a = sample_point(s, 0.8);
    const double q = pseudo_hyperbolic(z, w);
    CHECK(q >= 0.0);
    CHECK(q < 1.0);
    CHECK(pseudo_hyperbolic(w, z) == doctest::Approx(q).epsilon(1e-13));
    CHECK(pseudo_hyperbolic(mobius(a, z), mobius(a, w)) == doctest::Approx(q).epsilon(1e-11));
  }
}

TEST_CASE("disk automorphism closed values and involution") {
  const DiskPoint w(0.5, 0.0);
  CHECK(std::abs(mobius(w, w).value()) < 1e-15);
  CHECK(mobius(w, DiskPoint(0.0, 0.0)).value() == cplx(0.5, 0.0));
  CHECK(mobius(w, DiskPoint(0.2, 0.0)).value().real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  oracle::DiskSampler s(22);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint a = sample_point(s, 0.9);
    const DiskPoint z = sample_point(s, 0.95);
    const DiskPoint back = mobius(a, mobius(a, z));
    CHECK(std::abs(back.value() - z.value()) < 1e-12);
  }
}

TEST_CASE("automorphism identities used by the pulled-back quadrature") {
  oracle::DiskSampler s(23);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint w = sample_point(s, 0.9);
    const DiskPoint zeta = sample_point(s, 0.95);
    const DiskPoint z = mobius(w, zeta);
    const cplx denom = 1.0 - std::conj(w.value()) * zeta.value();
    // 1 - conj(w) z = (1 - |w|^2) / (1 - conj(w) zeta)
    CHECK(std::abs((1.0 - std::conj(w.value()) * z.value()) - w.one_minus_abs2() / denom) < 1e-13);
    // 1 - |z|^2 = (1-|w|^2)(1-|zeta|^2)/|1 - conj(w) zeta|^2
    CHECK(z.one_minus_abs2() ==
          doctest::Approx(w.one_minus_abs2() * zeta.one_minus_abs2() / std::norm(denom))
              .epsilon(1e-11));
    // lower bounds that keep fractional powers tame
    CHECK(std::abs(denom) >= (1.0 - w.abs()) * (1.0 - 1e-14));
    CHECK(std::abs(denom) >= (1.0 - zeta.abs()) * (1.0 - 1e-14));
  }
}

TEST_CASE("radial profile closed values") {
  const AlphaWeight a0(0.0), a1(1.0), a2(2.0);
  CHECK(h_alpha(1.0, a0) == 0.0);
  CHECK(h_alpha(1.0, a1) == 0.0);
  CHECK(h_alpha(0.5, a0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(h_alpha(0.5, a1) == doctest::Approx(0.3181471805599453).epsilon(1e-14));
  CHECK_THROWS_AS(h_alpha(0.0, a1), DomainError);
  CHECK_THROWS_AS(h_alpha(-0.5, a1), DomainError);
  CHECK_THROWS_AS(h_alpha(1.2, a1), DomainError);
}

TEST_CASE("radial profile matches closed forms across the radius range") {
  const AlphaWeight a0(0.0), a1(1.0), a2(2.0);
  for (double r = 0.02; r < 1.0; r += 0.035) {
    CHECK(h_alpha(r, a0) == doctest::Approx(oracle::h_profile_a0(r)).epsilon(1e-13));
    CHECK(h_alpha(r, a1) == doctest::Approx(oracle::h_profile_a1(r)).epsilon(1e-13));
    CHECK(h_alpha(r, a2) == doctest::Approx(oracle::h_profile_a2(r)).epsilon(1e-13));
  }
}

TEST_CASE("radial profile matches the defining integral at fractional alpha") {
  for (double alpha : {-0.5, 0.3, 1.7}) {
    const AlphaWeight a(alpha);
    for (double r : {0.05, 0.2, 0.45, 0.7071, 0.9, 0.99}) {
      const double want = oracle::h_profile(r, alpha);
      CHECK(h_alpha(r, a) == doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("radial profile is strictly decreasing") {
  const AlphaWeight a(0.8);
  double prev = h_alpha(1e-3, a);
  for (double r = 0.05; r <= 1.0; r += 0.05) {
    const double cur = h_alpha(std::min(r, 1.0), a);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("log offset of the radial profile") {
  CHECK(h_alpha_log_offset(AlphaWeight(0.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(h_alpha_log_offset(AlphaWeight(1.0)) == doctest::Approx(-0.5).epsilon(1e-14));
  for (double alpha : {-0.4, 0.6, 2.3}) {
    const double want =
        0.5 * oracle::integral(
                  [alpha](double t) { return (std::pow(t, alpha) - 1.0) / (1.0 - t); }, 0.0, 1.0);
    CHECK(h_alpha_log_offset(AlphaWeight(alpha)) == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("weighted Poisson kernel closed values") {
  const AlphaWeight a0(0.0), a1(1.0);
  CHECK(poisson_kernel_alpha(DiskPoint(0.0, 0.0), a1) == cplx(1.0, 0.0));
  CHECK(poisson_kernel_alpha(DiskPoint(0.5, 0.0), a0).real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(poisson_kernel_alpha(DiskPoint(0.5, 0.0), a0).imag()) < 1e-15);

  // independent arithmetic for a complex case
  const cplx z(0.0, 0.5);
  const cplx want = 0.5625 / ((1.0 - z) * (1.0 + z) * (1.0 + z));  // conj(z) = -z here
  const cplx got = poisson_kernel_alpha(DiskPoint(0.0, 0.5), a1);
  CHECK(std::abs(got - want) < 1e-14);
}

TEST_CASE("weighted Poisson kernel reduces to the classical one at alpha 0") {
  oracle::DiskSampler s(31);
  const AlphaWeight a0(0.0);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint z = sample_point(s, 0.95);
    const double classical = z.one_minus_abs2() / std::norm(1.0 - z.value());
    const cplx got = poisson_kernel_alpha(z, a0);
    CHECK(got.real() == doctest::Approx(classical).epsilon(1e-12));
    CHECK(std::abs(got.imag()) < 1e-12 * classical + 1e-15);
  }
}

TEST_CASE("conjugate boundary kernel closed values and symmetry") {
  const AlphaWeight a1(1.0);
  CHECK(v_kernel(DiskPoint(0.5, 0.0), BoundaryAngle(0.0), a1).real() == doctest::Approx(4.5).epsilon(1e-14));
  for (double t : {0.0, 1.0, 2.5, 4.0}) {
    CHECK(std::abs(v_kernel(DiskPoint(0.0, 0.0), BoundaryAngle(t), a1) - cplx(1.0, 0.0)) < 1e-15);
  }

  oracle::DiskSampler s(32);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint w = sample_point(s, 0.95);
    const double t = s.uniform(0.0, 2.0 * oracle::pi);
    const cplx rotated = w.value() * std::polar(1.0, -t);
    const cplx want = std::conj(poisson_kernel_alpha(DiskPoint(rotated), AlphaWeight(0.7)));
    const cplx got = v_kernel(w, BoundaryAngle(t), AlphaWeight(0.7));
    CHECK(std::abs(got - want) < 1e-12 * std::abs(want) + 1e-14);
  }
}

TEST_CASE("Green function reduces to the classical logarithm at alpha 0") {
  oracle::DiskSampler s(33);
  const AlphaWeight a0(0.0);
  for (int i = 0; i < 200; ++i) {
    const DiskPoint z = sample_point(s, 0.98);
    const DiskPoint w = sample_point(s, 0.98);
    const double q = pseudo_hyperbolic(z, w);
    if (q < 1e-6) continue;
    const cplx g = green_alpha(z, w, a0);
    CHECK(std::abs(g.imag()) < 1e-15);
    CHECK(std::abs(g.real() - std::log(1.0 / q) / (2.0 * oracle::pi)) < 1e-12);
  }
}

TEST_CASE("Green function closed value and basic shape") {
  const AlphaWeight a1(1.0);
  // z = 0, w = 0.5: prefactor 1, q = 0.5
  const double want = (0.5 * (0.25 - 1.0) - std::log(0.5) * 1.0) / (2.0 * oracle::pi);
  CHECK(green_alpha(DiskPoint(0.0, 0.0), DiskPoint(0.5, 0.0), a1).real() ==
        doctest::Approx(want).epsilon(1e-13));

  CHECK_THROWS_AS(green_alpha(DiskPoint(0.5, 0.0), DiskPoint(0.5, 0.0), a1), SingularityError);
  CHECK_THROWS_AS(
      green_alpha(DiskPoint(0.5, 0.0), DiskPoint(0.5 + 1e-15, 0.0), a1), SingularityError);

  // vanishing toward the rim in the first argument
  double prev = std::abs(green_alpha(DiskPoint(0.5, 0.0), DiskPoint(-0.2, 0.1), a1));
  for (double r : {0.9, 0.99, 0.999, 0.99999}) {
    const double cur = std::abs(green_alpha(DiskPoint(r, 0.0), DiskPoint(-0.2, 0.1), a1));
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prev < 1e-4);
}

TEST_CASE("Green function is Hermitian in its arguments") {
  oracle::DiskSampler s(34);
  const AlphaWeight a(1.4);
  for (int i = 0; i < 64; ++i) {
    const DiskPoint z = sample_point(s, 0.9);
    const DiskPoint w = sample_point(s, 0.9);
    if (std::abs(z.value() - w.value()) < 1e-3) continue;
    const cplx gzw = green_alpha(z, w, a);
    const cplx gwz = green_alpha(w, z, a);
    CHECK(std::abs(gzw - std::conj(gwz)) < 1e-13 * std::max(1.0, std::abs(gzw)));
  }
}

TEST_CASE("derivative estimate right-hand sides: closed values and gates") {
  const AlphaWeight a1(1.0);
  const DiskPoint z(0.0, 0.0), w(0.5, 0.0);
  CHECK(green_dwbar_bound(z, w, a1) ==
        doctest::Approx(0.75 / (2.0 * oracle::pi)).epsilon(1e-14));

  // dw bound at the same pair, c_alpha = 1, assembled independently
  const double log_part = 1.0 * 1.0 * 0.5625 * (1.0 - 2.0 * std::log(0.5));
  const double cauchy_part = 0.75;
  CHECK(green_dw_bound(z, w, a1, GreenEvalConfig{}) ==
        doctest::Approx((log_part + cauchy_part) / (2.0 * oracle::pi)).epsilon(1e-13));

  CHECK_THROWS_AS(green_dw_bound(z, w, AlphaWeight(-0.5), GreenEvalConfig{}), DomainError);
  CHECK_THROWS_AS(green_dwbar_bound(w, w, a1), SingularityError);
  GreenEvalConfig bad;
  bad.c_alpha = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);

  // at alpha = 0 the logarithmic summand drops out
  oracle::DiskSampler s(35);
  const AlphaWeight a0(0.0);
  for (int i = 0; i < 32; ++i) {
    const DiskPoint za = sample_point(s, 0.9);
    const DiskPoint wa = sample_point(s, 0.9);
    if (std::abs(za.value() - wa.value()) < 1e-3) continue;
    CHECK(green_dw_bound(za, wa, a0, GreenEvalConfig{}) ==
          doctest::Approx(green_dwbar_bound(za, wa, a0)).epsilon(1e-14));
  }
}

TEST_CASE("the dwbar estimate is attained: finite differences match it") {
  oracle::DiskSampler s(36);
  for (double alpha : {0.0, 0.5, 1.0, 2.0}) {
    const AlphaWeight a(alpha);
    int tested = 0;
    while (tested < 20) {
      const DiskPoint z = sample_point(s, 0.7);
      const DiskPoint w = sample_point(s, 0.6);
      if (std::abs(z.value() - w.value()) < 0.3) continue;
      ++tested;
      const GreenDerivs d = fd_green(z, w, a, 1e-5);
      const double want = green_dwbar_bound(z, w, a);
      CHECK(std::abs(d.dwbar) == doctest::Approx(want).epsilon(1e-6));
      // and the dw derivative stays below its estimate
      CHECK(std::abs(d.dw) <= green_dw_bound(z, w, a, GreenEvalConfig{}) * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("principal-branch bases stay in the right half-plane") {
  oracle::DiskSampler s(37);
  for (int i = 0; i < 128; ++i) {
    const DiskPoint z = sample_point(s, 0.999);
    const DiskPoint w = sample_point(s, 0.999);
    CHECK((1.0 - std::conj(z.value()) * w.value()).real() > 0.0);
  }
}
