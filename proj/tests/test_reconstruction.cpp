#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "weno3/reconstruction.hpp"

using namespace weno3;

namespace {

WeightScheme chi(LimiterTag t) { return scheme::Limiter{LimiterKind::simple(t)}; }

std::vector<WeightScheme> schemes() {
  return {scheme::Js3{},
          scheme::Z3{},
          scheme::N3{},
          scheme::PPlus3{},
          chi(LimiterTag::chi1),
          chi(LimiterTag::chi2),
          chi(LimiterTag::chi3),
          chi(LimiterTag::chi4),
          scheme::Limiter{LimiterKind::chi5(1.0)},
          scheme::Limiter{LimiterKind::chi5(3.0)}};
}

}  // namespace

TEST(LaxFriedrichsSplit, Example) {
  const std::vector<double> u = {1.0, 2.0};
  const std::vector<double> f = {1.0, 2.0};
  const auto s = lax_friedrichs_split(f, u, 1.0);
  EXPECT_EQ(s.f_plus, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(s.f_minus, (std::vector<double>{0.0, 0.0}));
}

TEST(LaxFriedrichsSplit, SumsToFluxAndRejectsBadInput) {
  const std::vector<double> u = {0.3, -1.2, 4.0};
  const std::vector<double> f = {0.045, 0.72, 8.0};
  const auto s = lax_friedrichs_split(f, u, 4.0);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(s.f_plus[i] + s.f_minus[i], f[i], 1e-15);
  EXPECT_THROW((void)lax_friedrichs_split(f, u, 0.0), std::invalid_argument);
  EXPECT_THROW((void)lax_friedrichs_split(f, u, -1.0), std::invalid_argument);
  EXPECT_THROW((void)lax_friedrichs_split(f, std::vector<double>{1.0}, 1.0), std::invalid_argument);
}

TEST(CandidateFluxes, Examples) {
  const auto [up, cent] = candidate_fluxes({0.0, 1.0, 2.0});
  EXPECT_EQ(up, 1.5);
  EXPECT_EQ(cent, 1.5);
}

TEST(InterfaceFlux, LinearDataIsExactForEveryScheme) {
  for (const auto& ws : schemes()) {
    EXPECT_DOUBLE_EQ(interface_flux({0.0, 1.0, 2.0}, ws, 0.1), 1.5) << ws.index();
  }
}

TEST(InterfaceFlux, QuadraticDataGivesTheCenteredValueUnderIdealWeights) {
  // f = x^2 at -1, 0, 1: upwind -1/2, centered 1/2, ideal mix 1/6
  const StencilValues s{1.0, 0.0, 1.0};
  const double ideal = kIdealUpwind * -0.5 + kIdealCentered * 0.5;
  EXPECT_NEAR(ideal, 1.0 / 6.0, 1e-16);
  // r = -1 so every limiter is at chi = 1
  for (LimiterTag t : {LimiterTag::chi1, LimiterTag::chi2, LimiterTag::chi3, LimiterTag::chi4}) {
    EXPECT_NEAR(interface_flux(s, chi(t), 0.1), 1.0 / 6.0, 1e-15);
  }
  // JS3: beta0 == beta1
  EXPECT_NEAR(interface_flux(s, scheme::Js3{}, 0.1), 1.0 / 6.0, 1e-15);
}

TEST(InterfaceFlux, StepDataWithChi1) {
  // (0, 0, 1): r = 0, chi1 = 0, w0 = 1, upwind candidate 0
  EXPECT_NEAR(interface_flux({0.0, 0.0, 1.0}, chi(LimiterTag::chi1), 0.1), 0.0, 1e-15);
  // (0, 1, 1): r = huge, chi1 -> 3/2, w0 -> 0, centered 1
  EXPECT_NEAR(interface_flux({0.0, 1.0, 1.0}, chi(LimiterTag::chi1), 0.1), 1.0, 1e-12);
  // (0, 0.5, 1) r = 1: ideal; linear -> 0.75
  EXPECT_NEAR(interface_flux({0.0, 0.5, 1.0}, chi(LimiterTag::chi1), 0.1), 0.75, 1e-15);
}

TEST(InterfaceFlux, MatchesOracleComposition) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 20000; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const auto o = oracle::js3(a, b, c, 1e-6, 2);
    EXPECT_NEAR(interface_flux({a, b, c}, scheme::Js3{}, 0.1),
                oracle::weno_flux(a, b, c, o.first, o.second), 1e-13);
  }
}

TEST(ReconstructLine, ValidatesInput) {
  std::vector<double> v(7, 0.0);
  const Line1D ok{v, 3, 2, 0.1};
  EXPECT_NO_THROW((void)reconstruct_line(ok, ok, scheme::Js3{}));
  EXPECT_THROW((void)reconstruct_line({v, 4, 2, 0.1}, {v, 4, 2, 0.1}, scheme::Js3{}),
               std::invalid_argument);
  std::vector<double> w(5, 0.0);
  EXPECT_THROW((void)reconstruct_line({w, 3, 1, 0.1}, {w, 3, 1, 0.1}, scheme::Js3{}),
               std::invalid_argument);
  EXPECT_THROW((void)reconstruct_line({v, 3, 2, 0.0}, {v, 3, 2, 0.0}, scheme::Js3{}),
               std::invalid_argument);
  EXPECT_EQ(reconstruct_line(ok, ok, scheme::Js3{}).size(), 4u);
}

TEST(ReconstructLine, MirrorSymmetry) {
  // reflecting the data x -> -x and swapping the split halves mirrors the fluxes
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 20;
  std::vector<double> fp(n + 4), fm(n + 4);
  for (auto& v : fp) v = u(rng);
  for (auto& v : fm) v = u(rng);
  std::vector<double> fp_m(fm.rbegin(), fm.rend());
  std::vector<double> fm_m(fp.rbegin(), fp.rend());
  for (const auto& ws : schemes()) {
    const auto a = reconstruct_line({fp, n, 2, 0.05}, {fm, n, 2, 0.05}, ws);
    const auto b = reconstruct_line({fp_m, n, 2, 0.05}, {fm_m, n, 2, 0.05}, ws);
    for (std::size_t j = 0; j <= n; ++j) {
      ASSERT_DOUBLE_EQ(a[j], b[n - j]) << "scheme " << ws.index() << " interface " << j;
    }
  }
}

TEST(SemidiscreteRhs, TelescopesToBoundaryFluxes) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> F(41);
  for (auto& v : F) v = u(rng);
  const double dx = 0.025;
  const auto rhs = semidiscrete_rhs(F, dx);
  ASSERT_EQ(rhs.size(), 40u);
  double sum = 0.0;
  for (double r : rhs) sum += r * dx;
  EXPECT_NEAR(sum, F.front() - F.back(), 1e-14);
  std::vector<double> bad(3);
  EXPECT_THROW(semidiscrete_rhs(F, dx, bad), std::invalid_argument);
}

TEST(SemidiscreteRhs, PeriodicConstantStateIsSteady) {
  for (const auto& ws : schemes()) {
    const std::size_t n = 16;
    std::vector<double> f(n + 4, 0.7), zero(n + 4, 0.0);
    const auto F = reconstruct_line({f, n, 2, 0.1}, {zero, n, 2, 0.1}, ws);
    for (double r : semidiscrete_rhs(F, 0.1)) EXPECT_EQ(r, 0.0);
  }
}

// h satisfies f(x) = (1/dx) int_{x-dx/2}^{x+dx/2} h; for f = sin this is
// h = sin(x) (dx/2) / sin(dx/2). The quadrature check below confirms it.
TEST(InterfaceFlux, ThirdOrderAgainstPrimitiveFunctionOracle) {
  auto h_of = [](double dx) {
    return [dx](double x) { return std::sin(x) * (0.5 * dx) / std::sin(0.5 * dx); };
  };
  {
    const double dx = 0.1;
    const auto h = h_of(dx);
    for (double x : {-0.9, 0.0, 0.37, 1.0}) {
      const double avg = oracle::gauss_legendre(h, x - dx / 2, x + dx / 2) / dx;
      ASSERT_NEAR(avg, std::sin(x), 1e-14);
    }
  }
  const WeightScheme ws = scheme::Limiter{LimiterKind::chi5(3.0)};
  std::vector<double> errs;
  for (double dx : {0.1, 0.05, 0.025, 0.0125}) {
    const auto h = h_of(dx);
    double e = 0.0;
    // interfaces x_{i+1/2} in [-1, 1], far from the extrema of sin
    const int m = static_cast<int>(std::lround(1.0 / dx));
    for (int i = -m; i < m; ++i) {
      const double x = i * dx;
      const StencilValues s{std::sin(x - dx), std::sin(x), std::sin(x + dx)};
      const double r = gradient_ratio(s);
      ASSERT_GE(r, 1.0 / 3.0);  // inside the chi5 plateau: ideal weights
      ASSERT_LE(r, 3.0);
      e = std::max(e, std::abs(interface_flux(s, ws, dx) - h(x + 0.5 * dx)));
    }
    errs.push_back(e);
  }
  for (std::size_t j = 1; j < errs.size(); ++j) {
    EXPECT_GE(std::log2(errs[j - 1] / errs[j]), 2.7) << "refinement " << j;
  }
}
