#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alphadisk/core.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "oracles.hpp"

using namespace alphadisk;

TEST_CASE("alpha validation gates the weight family at -1") {
  CHECK(validate_alpha(1.5).alpha() == 1.5);
  CHECK(validate_alpha(0.0).alpha() == 0.0);
  CHECK(validate_alpha(-0.999).alpha() == doctest::Approx(-0.999));
  CHECK_THROWS_AS(validate_alpha(-1.0), DomainError);
  CHECK_THROWS_AS(validate_alpha(-2.0), DomainError);
  CHECK_THROWS_AS(validate_alpha(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(validate_alpha(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("weight closed values") {
  CHECK(weight_rho(DiskPoint(0.0, 0.0), AlphaWeight(2.0)) == 1.0);
  CHECK(weight_rho(DiskPoint(0.6, 0.0), AlphaWeight(1.0)) == doctest::Approx(1.5625).epsilon(1e-14));
  CHECK(weight_rho(DiskPoint(0.0, 0.6), AlphaWeight(-0.5)) == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("weight is radial and flat at alpha 0") {
  oracle::DiskSampler sampler(11);
  const AlphaWeight a0(0.0);
  const AlphaWeight a(1.3);
  for (int i = 0; i < 32; ++i) {
    auto [x, y] = sampler.next(0.99);
    const DiskPoint z(x, y);
    CHECK(weight_rho(z, a0) == 1.0);
    const double c = std::cos(0.7), s = std::sin(0.7);
    const DiskPoint rotated(x * c - y * s, x * s + y * c);
    CHECK(weight_rho(rotated, a) == doctest::Approx(weight_rho(z, a)).epsilon(1e-12));
  }
}

TEST_CASE("disk points stay inside the open disk") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.8), DomainError);
  CHECK_THROWS_AS(DiskPoint(std::numeric_limits<double>::quiet_NaN(), 0.0), DomainError);
  CHECK_NOTHROW(DiskPoint(0.0, -0.999999999999));
  const DiskPoint z(0.3, -0.4);
  CHECK(z.abs() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(z.abs2() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(z.value() == cplx(0.3, -0.4));
}

TEST_CASE("one_minus_abs2 keeps precision near the rim") {
  const double r = 1.0 - 1e-12;
  const DiskPoint z(r, 0.0);
  const long double exact = (1.0L - static_cast<long double>(r)) * (1.0L + static_cast<long double>(r));
  CHECK(z.one_minus_abs2() == doctest::Approx(static_cast<double>(exact)).epsilon(1e-12));
}

TEST_CASE("boundary angles normalize into [0, 2pi)") {
  CHECK(BoundaryAngle(0.0).theta() == 0.0);
  CHECK(BoundaryAngle(-oracle::pi / 2).theta() == doctest::Approx(1.5 * oracle::pi));
  CHECK(BoundaryAngle(5.0 * oracle::pi).theta() == doctest::Approx(oracle::pi));
  const cplx p = BoundaryAngle(oracle::pi / 3).point();
  CHECK(p.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(p) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(BoundaryAngle(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("boundary signals validate their sampling") {
  CHECK_THROWS_AS(BoundarySignal::from_samples(std::vector<cplx>(2, cplx(1.0, 0.0))), DomainError);
  CHECK_THROWS_AS(BoundarySignal::from_samples(std::vector<cplx>(5, cplx(1.0, 0.0))), DomainError);
  std::vector<cplx> with_nan(8, cplx(1.0, 0.0));
  with_nan[3] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(BoundarySignal::from_samples(with_nan), NonFiniteError);

  const auto s = BoundarySignal::from_rule([](double t) { return cplx(std::cos(t), 0.0); }, 8);
  CHECK(s.size() == 8);
  CHECK(s.has_rule());
  CHECK(s.node(2) == doctest::Approx(oracle::pi / 2));
  CHECK(std::abs(s.sample(2)) < 1e-15);
  CHECK(std::abs(s.mean()) < 1e-15);
  CHECK(s.rule_at(0.0) == cplx(1.0, 0.0));

  std::vector<cplx> flat(8, cplx(0.5, 0.0));
  CHECK_THROWS_AS(
      BoundarySignal::from_samples_and_rule(flat, [](double) { return cplx(0.0, 0.0); }),
      DomainError);
  CHECK_NOTHROW(
      BoundarySignal::from_samples_and_rule(flat, [](double) { return cplx(0.5, 1e-12); }));
}

TEST_CASE("disk field grids validate and interpolate") {
  PolarGrid bad;
  bad.radii = {0.5, 0.4};
  bad.angular = 8;
  bad.values.assign(16, cplx(0.0, 0.0));
  CHECK_THROWS_AS(DiskField::from_grid(bad), DomainError);

  PolarGrid narrow;
  narrow.radii = {0.5};
  narrow.angular = 3;
  narrow.values.assign(3, cplx(0.0, 0.0));
  CHECK_THROWS_AS(DiskField::from_grid(narrow), DomainError);

  PolarGrid miscount;
  miscount.radii = {0.2, 0.5};
  miscount.angular = 8;
  miscount.values.assign(15, cplx(0.0, 0.0));
  CHECK_THROWS_AS(DiskField::from_grid(miscount), DomainError);

  PolarGrid nonfinite;
  nonfinite.radii = {0.5};
  nonfinite.angular = 4;
  nonfinite.values.assign(4, cplx(0.0, 0.0));
  nonfinite.values[2] = cplx(0.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(DiskField::from_grid(nonfinite), NonFiniteError);

  // a smooth rule sampled on a dense grid comes back to within bilinear error
  auto f = [](const DiskPoint& z) { return cplx(z.re() + 0.5 * z.im(), z.re() * z.im()); };
  PolarGrid grid;
  const std::size_t nr = 64, na = 96;
  for (std::size_t i = 0; i < nr; ++i)
    grid.radii.push_back(static_cast<double>(i + 1) / static_cast<double>(nr + 1));
  grid.angular = na;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const double t = 2.0 * oracle::pi * static_cast<double>(j) / static_cast<double>(na);
      const double r = grid.radii[i];
      grid.values.push_back(f(DiskPoint(r * std::cos(t), r * std::sin(t))));
    }
  const DiskField fld = DiskField::from_grid(grid, 0.0);
  CHECK(!fld.has_rule());
  CHECK(fld.envelope_exponent().has_value());
  oracle::DiskSampler sampler(5);
  for (int k = 0; k < 64; ++k) {
    auto [x, y] = sampler.next(0.9);
    const DiskPoint z(x, y);
    CHECK(std::abs(fld(z) - f(z)) < 5e-3);
  }
}

TEST_CASE("quadrature spec validation") {
  CHECK_NOTHROW(QuadratureSpec{}.validate());
  CHECK_THROWS_AS(QuadratureSpec::checked(3, 12, 8, 1e-8, 1e-6), DomainError);
  CHECK_THROWS_AS(QuadratureSpec::checked(256, 2, 8, 1e-8, 1e-6), DomainError);
  CHECK_THROWS_AS(QuadratureSpec::checked(256, 12, 1, 1e-8, 1e-6), DomainError);
  CHECK_THROWS_AS(QuadratureSpec::checked(256, 12, 8, 0.0, 1e-6), DomainError);
  CHECK_THROWS_AS(QuadratureSpec::checked(256, 12, 8, 1e-8, -1.0), DomainError);
}

TEST_CASE("bound reports track per-sample verdicts") {
  BoundReport rep;
  rep.name = "demo";
  rep.ratio_limit = 2.0;
  rep.add("within", 1.0, 1.0);
  rep.add("beyond", 3.0, 1.0);
  CHECK(rep.samples[0].pass);
  CHECK(!rep.samples[1].pass);
  CHECK(!rep.pass);
  CHECK(rep.max_ratio() == 3.0);
  CHECK(rep.min_ratio() == 1.0);
  CHECK(rep.max_lhs() == 3.0);
  CHECK(rep.min_lhs() == 1.0);

  BoundReport trivial;
  trivial.add("zero against zero", 0.0, 0.0);
  CHECK(trivial.pass);
  CHECK(trivial.samples[0].ratio == 0.0);

  BoundReport violated;
  violated.add("positive against zero", 1.0, 0.0);
  CHECK(!violated.pass);
}

TEST_CASE("powc follows the principal branch") {
  oracle::DiskSampler sampler(7);
  for (int i = 0; i < 64; ++i) {
    auto [x, y] = sampler.next(0.9);
    const cplx base = cplx(1.0, 0.0) - cplx(x, y);  // right half-plane
    for (double e : {-8.0, -3.0, -1.0, 0.0, 1.0, 2.0, 5.0, 8.0, 0.5, -1.5, 2.75}) {
      const cplx got = powc(base, e);
      const cplx want = std::pow(base, cplx(e, 0.0));
      CHECK(std::abs(got - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("parallel_fill covers every index once") {
  std::vector<int> marks(1337, 0);
  parallel_fill(marks.size(), [&](std::size_t i) { marks[i] += 1; });
  for (int m : marks) CHECK(m == 1);
  CHECK(thread_count() >= 1u);

  std::vector<int> tiny(3, 0);  // below the parallel threshold: serial path
  parallel_fill(tiny.size(), [&](std::size_t i) { tiny[i] += 1; });
  CHECK(tiny == std::vector<int>({1, 1, 1}));
}
