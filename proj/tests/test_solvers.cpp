#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "weno3/boundary.hpp"
#include "weno3/euler.hpp"
#include "weno3/solver1d.hpp"
#include "weno3/solver2d.hpp"
#include "weno3/time_integration.hpp"

using namespace weno3;

namespace {

const WeightScheme kChi1 = scheme::Limiter{LimiterKind::simple(LimiterTag::chi1)};
const WeightScheme kChi5 = scheme::Limiter{LimiterKind::chi5(3.0)};
constexpr BoundaryPair kPeriodic{Boundary::periodic, Boundary::periodic};
constexpr BoundaryPair kOpen{Boundary::zero_gradient, Boundary::zero_gradient};

}  // namespace

// --- boundary conditions ---------------------------------------------------

TEST(FillGhosts, AllKinds) {
  std::vector<double> v = {0, 0, 1, 2, 3, 4, 0, 0};
  fill_ghosts(v, 4, kPeriodic);
  EXPECT_EQ(v, (std::vector<double>{3, 4, 1, 2, 3, 4, 1, 2}));
  fill_ghosts(v, 4, kOpen);
  EXPECT_EQ(v, (std::vector<double>{1, 1, 1, 2, 3, 4, 4, 4}));
  fill_ghosts(v, 4, {Boundary::reflecting, Boundary::reflecting}, -1.0);
  EXPECT_EQ(v, (std::vector<double>{-2, -1, 1, 2, 3, 4, -4, -3}));
  const std::vector<double> frozen = {9, 8, 0, 0, 0, 0, 7, 6};
  fill_ghosts(v, 4, {Boundary::dirichlet, Boundary::zero_gradient}, 1.0, frozen);
  EXPECT_EQ(v, (std::vector<double>{9, 8, 1, 2, 3, 4, 4, 4}));
  EXPECT_THROW((BoundaryPair{Boundary::periodic, Boundary::reflecting}.validate()),
               std::invalid_argument);
}

// --- wave speeds -----------------------------------------------------------

TEST(WaveSpeed, Examples) {
  const std::vector<double> u = {-2.0, 1.0};
  EXPECT_EQ(max_wave_speed_scalar(u, {ScalarLaw::Kind::burgers, 0.0}), 2.0);
  EXPECT_EQ(max_wave_speed_scalar(u, {ScalarLaw::Kind::advection, -3.0}), 3.0);

  EulerState1D s(1, 1.4);
  s.set(0, {1.0, 0.0, 1.0});
  EXPECT_NEAR(max_wave_speed_euler(s), std::sqrt(1.4), 1e-15);
  s.set(0, {1.0, 0.0, -1.0});
  EXPECT_THROW((void)max_wave_speed_euler(s), SolverError);
}

TEST(EulerState, PrimitiveRoundTrip) {
  EulerState2D s(2, 1, 1.4);
  s.set(1, 0, {0.5, -0.3, 0.7, 2.0});
  const auto w = s.primitive(1, 0);
  EXPECT_NEAR(w.rho, 0.5, 1e-15);
  EXPECT_NEAR(w.u, -0.3, 1e-15);
  EXPECT_NEAR(w.v, 0.7, 1e-15);
  EXPECT_NEAR(w.p, 2.0, 1e-14);
  EXPECT_NEAR(s.energy()[1], 2.0 / 0.4 + 0.5 * 0.5 * (0.09 + 0.49), 1e-14);
}

// --- time integration ------------------------------------------------------

TEST(SspRk3, LinearDecayExample) {
  const double h = 0.1;
  auto rhs = [](std::span<const double> u, std::span<double> out) { out[0] = -u[0]; };
  const auto u = ssp_rk3_step({1.0}, rhs, h);
  EXPECT_NEAR(u[0], 1.0 - h + h * h / 2.0 - h * h * h / 6.0, 1e-15);
  EXPECT_NEAR(u[0], 0.9048333333333334, 1e-15);
  EXPECT_THROW((void)ssp_rk3_step({1.0}, rhs, 0.0), std::invalid_argument);
}

TEST(SspRk3, MatchesConvexCombinationForm) {
  // nonlinear rhs to make the comparison non-trivial
  auto L = [](double u) { return -u * u + std::sin(u); };
  auto rhs = [&](std::span<const double> u, std::span<double> out) { out[0] = L(u[0]); };
  for (double u0 : {0.3, -1.7, 2.5}) {
    const double h = 0.07;
    const double u1 = u0 + h * L(u0);
    const double u2 = 0.75 * u0 + 0.25 * (u1 + h * L(u1));
    const double u3 = u0 / 3.0 + 2.0 / 3.0 * (u2 + h * L(u2));
    EXPECT_NEAR(ssp_rk3_step({u0}, rhs, h)[0], u3, 1e-15);
  }
}

TEST(TimeControls, Validation) {
  EXPECT_THROW((TimeControls{0.0, 1.0}.validate()), ConfigError);
  EXPECT_THROW((TimeControls{1.5, 1.0}.validate()), ConfigError);
  EXPECT_THROW((TimeControls{0.5, -1.0}.validate()), ConfigError);
  EXPECT_THROW((TimeControls{0.5, 1.0, -0.5}.validate()), ConfigError);
  EXPECT_NO_THROW((TimeControls{0.5, 1.0, 0.5}.validate()));
}

TEST(Advance, LandsOnFinalTime) {
  const Grid1D g{-1.0, 1.0, 40};
  std::vector<double> u(40);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(std::numbers::pi * g.x(i));
  ScalarSystem1D sys({ScalarLaw::Kind::advection, 1.0}, g, kPeriodic, kChi1);
  TimeControls tc{0.5, 0.33};
  tc.dt_over_dx = 0.4;
  const auto d = advance(sys, u, tc);
  EXPECT_EQ(d.t, 0.33);
  // dt = 0.02: 16 full steps and one clipped step of 0.01
  EXPECT_EQ(d.steps, 17u);
  tc.max_steps = 3;
  EXPECT_THROW((void)advance(sys, u, tc), SolverError);
}

TEST(Advance, ZeroFinalTimeIsANoop) {
  const Grid1D g{0.0, 1.0, 10};
  std::vector<double> u(10, 0.25);
  ScalarSystem1D sys({ScalarLaw::Kind::burgers, 0.0}, g, kPeriodic, kChi1);
  const auto d = advance(sys, u, {0.5, 0.0});
  EXPECT_EQ(d.steps, 0u);
  EXPECT_EQ(u, std::vector<double>(10, 0.25));
}

// --- scalar systems --------------------------------------------------------

TEST(ScalarSystem, ConstantStateIsPreserved) {
  for (const auto& bc : {kPeriodic, kOpen}) {
    const Grid1D g{0.0, 1.0, 32};
    std::vector<double> u(32, 0.6);
    ScalarSystem1D sys({ScalarLaw::Kind::burgers, 0.0}, g, bc, kChi5);
    (void)advance(sys, u, {0.5, 0.2});
    for (double v : u) EXPECT_EQ(v, 0.6);
  }
}

TEST(ScalarSystem, PeriodicConservation) {
  const Grid1D g{-1.0, 1.0, 64};
  std::vector<double> u(64);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::abs(g.x(i)) < 1.0 / 3.0 ? 1.0 : -1.0;
  for (const auto& ws : {kChi1, kChi5, WeightScheme{scheme::Js3{}}}) {
    auto v = u;
    ScalarSystem1D sys({ScalarLaw::Kind::burgers, 0.0}, g, kPeriodic, ws);
    const auto d = advance(sys, v, {0.5, 0.3});
    EXPECT_LE(std::abs(d.conservation_drift[0]), 1e-14);
    EXPECT_LE(std::abs(d.boundary_inflow[0]), 1e-14);
  }
}

TEST(ScalarSystem, OpenBoundaryInflowIsAudited) {
  const Grid1D g{0.0, 1.0, 50};
  std::vector<double> u(50);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = 1.0 + 0.5 * std::sin(6.0 * g.x(i));
  ScalarSystem1D sys({ScalarLaw::Kind::burgers, 0.0}, g, kOpen, kChi5);
  const auto d = advance(sys, u, {0.5, 0.2});
  EXPECT_GT(std::abs(d.boundary_inflow[0]), 1e-3);
  EXPECT_LE(std::abs(d.conservation_drift[0]), 1e-13);
}

TEST(ScalarSystem, TranslationEquivariance) {
  // shifting periodic data by whole cells shifts the solution identically
  const std::size_t n = 48;
  const Grid1D g{0.0, 1.0, n};
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::exp(-40.0 * std::pow(g.x(i) - 0.4, 2));
  const std::size_t shift = 7;
  std::vector<double> us(n);
  for (std::size_t i = 0; i < n; ++i) us[(i + shift) % n] = u[i];
  TimeControls tc{0.5, 0.1};
  ScalarSystem1D a({ScalarLaw::Kind::burgers, 0.0}, g, kPeriodic, kChi5);
  ScalarSystem1D b({ScalarLaw::Kind::burgers, 0.0}, g, kPeriodic, kChi5);
  (void)advance(a, u, tc);
  (void)advance(b, us, tc);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(us[(i + shift) % n], u[i]);
}

TEST(ScalarSystem, DirichletNeedsInitialState) {
  const Grid1D g{0.0, 1.0, 8};
  EXPECT_THROW(ScalarSystem1D({ScalarLaw::Kind::burgers, 0.0}, g,
                              {Boundary::dirichlet, Boundary::dirichlet}, kChi1),
               ConfigError);
}

// --- Euler -----------------------------------------------------------------

TEST(EulerSystem1D, ConstantStateIsPreserved) {
  const Grid1D g{0.0, 1.0, 30};
  EulerState1D s(30, 1.4);
  for (std::size_t i = 0; i < 30; ++i) s.set(i, {0.8, 0.4, 1.3});
  const auto before = s.data();
  EulerSystem1D sys(g, 1.4, kPeriodic, kChi1);
  (void)advance(sys, s.data(), {0.5, 0.1});
  for (std::size_t k = 0; k < before.size(); ++k) EXPECT_NEAR(s.data()[k], before[k], 1e-14);
}

TEST(EulerSystem1D, ReportsNonPositivePressure) {
  const Grid1D g{0.0, 1.0, 10};
  EulerState1D s(10, 1.4);
  for (std::size_t i = 0; i < 10; ++i) s.set(i, {1.0, 0.0, 1.0});
  s.energy()[4] = -1.0;
  EulerSystem1D sys(g, 1.4, kOpen, kChi1);
  try {
    (void)advance(sys, s.data(), {0.5, 0.1});
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.cell(), 4u);
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(EulerSystem1D, ReflectingWallsConserveMassAndEnergy) {
  const std::size_t n = 60;
  const Grid1D g{0.0, 1.0, n};
  EulerState1D s(n, 1.4);
  for (std::size_t i = 0; i < n; ++i) {
    s.set(i, g.x(i) < 0.5 ? Primitive1D{1.0, 0.0, 1.0} : Primitive1D{0.125, 0.0, 0.1});
  }
  EulerSystem1D sys(g, 1.4, {Boundary::reflecting, Boundary::reflecting}, kChi5);
  const auto d = advance(sys, s.data(), {0.5, 0.2});
  EXPECT_LE(std::abs(d.total_final[0] - d.total_initial[0]), 1e-14);
  EXPECT_LE(std::abs(d.total_final[2] - d.total_initial[2]), 1e-14);
}

namespace {

EulerState2D embed_y_invariant(const EulerState1D& s1, std::size_t ny) {
  const std::size_t nx = s1.size();
  EulerState2D s2(nx, ny, s1.gamma());
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      s2.rho()[j * nx + i] = s1.rho()[i];
      s2.mom_x()[j * nx + i] = s1.mom()[i];
      s2.mom_y()[j * nx + i] = 0.0;
      s2.energy()[j * nx + i] = s1.energy()[i];
    }
  }
  return s2;
}

}  // namespace

TEST(EulerSystem2D, YInvariantRunMatches1D) {
  const std::size_t nx = 100, ny = 4;
  const Grid1D gx{-5.0, 5.0, nx};
  EulerState1D s1(nx, 1.4);
  for (std::size_t i = 0; i < nx; ++i) {
    s1.set(i, gx.x(i) < 0.0 ? Primitive1D{1.0, 0.0, 1.0} : Primitive1D{0.125, 0.0, 0.1});
  }
  auto s2 = embed_y_invariant(s1, ny);
  EulerSystem1D sys1(gx, 1.4, kOpen, kChi5);
  // dy chosen so that the y-direction never limits dt
  EulerSystem2D sys2({gx, {0.0, 10.0, ny}}, 1.4, kOpen, kPeriodic, kChi5);
  TimeControls tc{0.4, 0.5};
  (void)advance(sys1, s1.data(), tc);
  (void)advance(sys2, s2.data(), tc);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      ASSERT_NEAR(s2.rho()[j * nx + i], s1.rho()[i], 1e-12);
      ASSERT_NEAR(s2.mom_x()[j * nx + i], s1.mom()[i], 1e-12);
      ASSERT_NEAR(s2.energy()[j * nx + i], s1.energy()[i], 1e-12);
      ASSERT_EQ(s2.mom_y()[j * nx + i], 0.0);
    }
  }
}

TEST(EulerSystem2D, TransposedDataGivesTransposedSolution) {
  const std::size_t n = 24;
  const Grid1D g{0.0, 1.0, n};
  EulerState2D a(n, n, 1.4), b(n, n, 1.4);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = g.x(i), y = g.x(j);
      const double rho = 1.0 + 0.3 * std::exp(-30.0 * ((x - 0.4) * (x - 0.4) + (y - 0.6) * (y - 0.6)));
      const double u = 0.2 * std::sin(2.0 * std::numbers::pi * y);
      const double v = -0.1 * x;
      const double p = 1.0 + 0.1 * x * y;
      a.set(i, j, {rho, u, v, p});
      b.set(j, i, {rho, v, u, p});
    }
  }
  const BoundaryPair bc{Boundary::reflecting, Boundary::zero_gradient};
  EulerSystem2D sa({g, g}, 1.4, bc, bc, kChi5);
  EulerSystem2D sb({g, g}, 1.4, bc, bc, kChi5);
  TimeControls tc{0.4, 0.05};
  (void)advance(sa, a.data(), tc);
  (void)advance(sb, b.data(), tc);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto wa = a.primitive(i, j);
      const auto wb = b.primitive(j, i);
      ASSERT_NEAR(wa.rho, wb.rho, 1e-12);
      ASSERT_NEAR(wa.u, wb.v, 1e-12);
      ASSERT_NEAR(wa.v, wb.u, 1e-12);
      ASSERT_NEAR(wa.p, wb.p, 1e-12);
    }
  }
}

TEST(EulerSystem2D, PeriodicConservation) {
  const std::size_t n = 20;
  const Grid1D g{0.0, 1.0, n};
  EulerState2D s(n, n, 1.4);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool in = std::abs(g.x(i) - 0.5) + std::abs(g.x(j) - 0.5) < 0.2;
      s.set(i, j, in ? Primitive2D{1.0, 0.1, 0.2, 1.0} : Primitive2D{0.2, 0.0, 0.0, 0.15});
    }
  }
  EulerSystem2D sys({g, g}, 1.4, kPeriodic, kPeriodic, kChi1);
  const auto d = advance(sys, s.data(), {0.4, 0.1});
  for (std::size_t c = 0; c < 4; ++c) EXPECT_LE(std::abs(d.conservation_drift[c]), 1e-14);
}

TEST(EulerSystem2D, MinFormTimeStep) {
  const Grid1D gx{0.0, 1.0, 10}, gy{0.0, 2.0, 10};
  EulerState2D s(10, 10, 1.4);
  for (std::size_t j = 0; j < 10; ++j)
    for (std::size_t i = 0; i < 10; ++i) s.set(i, j, {1.4, 1.0, 0.0, 1.0});  // c = 1
  EulerSystem2D sys({gx, gy}, 1.4, kPeriodic, kPeriodic, kChi1);
  // alpha_x = 2, alpha_y = 1: min(0.1 / 2, 0.2 / 1) = 0.05
  EXPECT_NEAR(sys.stable_dt(s.data(), 0.5), 0.025, 1e-15);
}
