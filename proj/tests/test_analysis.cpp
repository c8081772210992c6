#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "weno3/analysis.hpp"
#include "weno3/scheme_descriptor.hpp"

using namespace weno3;

TEST(ErrorNorms, Example) {
  const std::vector<double> a = {1.0, 2.0};
  const std::vector<double> b = {1.5, 2.0};
  const auto e = error_norms(a, b, 0.5);
  EXPECT_EQ(e.l1, 0.25);
  EXPECT_EQ(e.linf, 0.5);
  EXPECT_THROW((void)error_norms(a, std::vector<double>{1.0}, 0.5), std::invalid_argument);
}

TEST(ConvergenceReport, RatesAndCsv) {
  ConvergenceReport r;
  r.rows = {{80, 1e-3, 0, 8e-3, 0}, {160, 1.25e-4, 0, 1e-3, 0}};
  fill_rates(r);
  EXPECT_TRUE(std::isinf(r.rows[0].rate_l1));
  EXPECT_NEAR(r.rows[1].rate_linf, 3.0, 1e-12);
  EXPECT_NEAR(r.rows[1].rate_l1, 3.0, 1e-12);
  EXPECT_EQ(r.to_csv(),
            "N,Linf,rate_Linf,L1,rate_L1\n"
            "80,1.00000e-03,-Inf,8.00000e-03,-Inf\n"
            "160,1.25000e-04,3.00,1.00000e-03,3.00\n");
}

TEST(ConvergenceReport, ResolutionsMustDouble) {
  const std::array<std::size_t, 3> ok = {80, 160, 320};
  const std::array<std::size_t, 2> bad = {80, 200};
  EXPECT_NO_THROW(validate_resolutions(ok));
  EXPECT_THROW(validate_resolutions(bad), ConfigError);
  EXPECT_THROW(validate_resolutions(std::span<const std::size_t>{}), ConfigError);
}

// chi5 with a huge k pins the weights to the ideal pair everywhere, which
// isolates the linear third-order scheme from the limiter.
TEST(ConvergenceStudy, IdealWeightsAreThirdOrder) {
  const auto p = find_problem("advection_sin");
  const std::array<std::size_t, 3> ns = {80, 160, 320};
  const auto rep = convergence_study(p, scheme::Limiter{LimiterKind::chi5(1e9, true)}, ns, p.controls);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_GT(rep.rows[2].rate_l1, 2.8);
  EXPECT_GT(rep.rows[2].rate_linf, 2.8);
}

// The limiter moves the weights off the ideal pair next to smooth extrema, so
// only monotone decrease is asserted here; rates are the acceptance suite's job.
TEST(ConvergenceStudy, LimiterErrorsDecrease) {
  const auto p = find_problem("advection_sin");
  const std::array<std::size_t, 3> ns = {80, 160, 320};
  const auto rep = convergence_study(p, scheme::Limiter{LimiterKind::chi5(1.0)}, ns, p.controls);
  ASSERT_EQ(rep.rows.size(), 3u);
  for (std::size_t j = 1; j < rep.rows.size(); ++j) {
    EXPECT_LT(rep.rows[j].l1, rep.rows[j - 1].l1);
    EXPECT_LT(rep.rows[j].linf, rep.rows[j - 1].linf);
  }
}

TEST(ConvergenceStudy, RejectsProblemsWithoutReference) {
  const auto p = find_problem("shu_osher");
  const std::array<std::size_t, 1> ns = {50};
  EXPECT_THROW((void)convergence_study(p, scheme::Js3{}, ns, p.controls), ConfigError);
}

TEST(OscillationMetrics, Example) {
  const std::vector<double> f = {0.0, 1.02, 1.0, -0.01, 0.0};
  const auto m = oscillation_metrics(f, 0.0, 1.0);
  EXPECT_NEAR(m.overshoot, 0.02, 1e-15);
  EXPECT_NEAR(m.undershoot, 0.01, 1e-15);
  EXPECT_NEAR(m.total_variation, 1.02 + 0.02 + 1.01 + 0.01, 1e-14);
  const auto flat = oscillation_metrics(std::vector<double>{0.5, 0.5}, 0.0, 1.0);
  EXPECT_EQ(flat.overshoot, 0.0);
  EXPECT_EQ(flat.undershoot, 0.0);
}

// --- scheme descriptors ----------------------------------------------------

TEST(SchemeDescriptor, ParsesEveryFamily) {
  EXPECT_EQ(parse_scheme("js3"), WeightScheme{scheme::Js3{}});
  EXPECT_EQ(parse_scheme("js3:eps=1e-40:p=1"), (WeightScheme{scheme::Js3{1e-40, 1}}));
  EXPECT_EQ(parse_scheme("z3"), WeightScheme{scheme::Z3{}});
  EXPECT_EQ(parse_scheme("n3:eps=1e-10"), WeightScheme{scheme::N3{1e-10}});
  EXPECT_EQ(parse_scheme("pplus3"), WeightScheme{scheme::PPlus3{}});
  EXPECT_EQ(parse_scheme("limiter:chi2"),
            WeightScheme{scheme::Limiter{LimiterKind::simple(LimiterTag::chi2)}});
  EXPECT_EQ(parse_scheme("limiter:chi5:k=1.5"),
            WeightScheme{scheme::Limiter{LimiterKind::chi5(1.5)}});
}

TEST(SchemeDescriptor, RejectsMalformedText) {
  for (const char* bad : {"", "weno5", "js3:eps=0", "js3:eps=abc", "js3:p=1.5", "z3:p=2",
                          "limiter", "limiter:chi6", "limiter:chi5", "limiter:chi5:k=0.5",
                          "limiter:chi5:k=4", "limiter:chi1:k=2", "js3:extra", "limiter:chi1:eps=1"}) {
    EXPECT_THROW((void)parse_scheme(bad), ConfigError) << bad;
  }
  EXPECT_NO_THROW((void)parse_scheme("limiter:chi5:k=4", /*allow_unsafe_k=*/true));
}

TEST(SchemeDescriptor, RoundTrip) {
  const std::vector<WeightScheme> all = {
      scheme::Js3{},        scheme::Js3{3.7e-9, 3}, scheme::Z3{0.1},
      scheme::N3{},         scheme::PPlus3{1e-40},  scheme::Limiter{LimiterKind::simple(LimiterTag::chi1)},
      scheme::Limiter{LimiterKind::simple(LimiterTag::chi4)},
      scheme::Limiter{LimiterKind::chi5(1.0 / 3.0 + 1.0)},
      scheme::Limiter{LimiterKind::chi5(4.0, true)}};
  for (const auto& ws : all) {
    const auto text = format_scheme(ws);
    EXPECT_EQ(parse_scheme(text, true), ws) << text;
    EXPECT_EQ(format_scheme(parse_scheme(text, true)), text);
  }
  EXPECT_EQ(format_scheme(scheme::Js3{}), "js3:eps=1e-06:p=2");
  EXPECT_EQ(format_scheme(scheme::Limiter{LimiterKind::chi5(3.0)}), "limiter:chi5:k=3");
}

TEST(SchemeDescriptor, DisplayNames) {
  EXPECT_EQ(display_name(scheme::Js3{}), "WENO-JS3");
  EXPECT_EQ(display_name(scheme::Limiter{LimiterKind::simple(LimiterTag::chi1)}), "WENO3-w0^1");
  EXPECT_EQ(display_name(scheme::Limiter{LimiterKind::chi5(3.0)}), "WENO3-w0,5^3");
}
