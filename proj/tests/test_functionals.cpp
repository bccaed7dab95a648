#include <gtest/gtest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "oalpha/error.hpp"
#include "oalpha/functionals.hpp"
#include "oalpha/harness.hpp"
#include "oracle.hpp"

using namespace oalpha;
using boost::math::digamma;
using boost::math::tgamma;

namespace {

const GridSpec kGrid = GridSpec::centered(4096, 16.0);

SampledSignal gaussian(double beta, double chirp = 0.0, const GridSpec& grid = kGrid) {
  return gen_chirped_gaussian(1.0, beta, chirp, grid);
}

// int |t|^(s-1) exp(-b t^2) over the real line.
double gaussian_mellin(double s, double b) { return tgamma(s / 2) / std::pow(b, s / 2); }

}  // namespace

TEST(LpNorm, GaussianClosedForms) {
  const SampledSignal f = gaussian(1.0);
  EXPECT_NEAR(lp_norm(f, 2.0), std::pow(kPi / 2, 0.25), 1e-13);
  EXPECT_NEAR(lp_norm(f, 1.0), std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(lp_norm(f, 3.0), std::pow(std::sqrt(kPi / 3), 1.0 / 3), 1e-13);
  EXPECT_DOUBLE_EQ(lp_norm(f, kInfNorm), 1.0);
  EXPECT_THROW(lp_norm(f, 0.5), DomainError);
}

TEST(WeightedMoment, DispersionOfNormalizedGaussian) {
  const SampledSignal f = gen_chirped_gaussian(std::sqrt(2 / kPi), 1.0, 0.0, kGrid);
  EXPECT_NEAR(weighted_moment(f, WeightSpec::abs_power(2.0)), 1 / (2 * std::sqrt(2 * kPi)), 1e-12);
}

TEST(WeightedMoment, SingularWeightsAtOriginNode) {
  const SampledSignal f = gaussian(1.0);
  ASSERT_NE(f.grid.zero_index(), GridSpec::npos);
  // |f|^2 = exp(-2 t^2).
  const double log_ref = -(std::sqrt(kPi) / (2 * std::sqrt(2.0))) * (oracle::euler_gamma + std::log(8.0));
  EXPECT_NEAR(weighted_moment(f, WeightSpec::log_abs()), log_ref, 1e-9);
  for (double p : {-0.75, -0.5, -0.1, 0.25, 0.5, 1.5}) {
    EXPECT_NEAR(weighted_moment(f, WeightSpec::abs_power(p)), gaussian_mellin(1 + p, 2.0), 1e-8) << p;
    const double dlog = 0.5 * gaussian_mellin(1 + p, 2.0) * (digamma((1 + p) / 2) - std::log(2.0));
    EXPECT_NEAR(weighted_moment(f, WeightSpec::abs_power_log(p)), dlog, 1e-8) << p;
  }
}

TEST(WeightedMoment, OffsetGridNeedsNoCorrection) {
  const GridSpec shifted{4096, -16.0 + 1.0 / 256, 1.0 / 128};
  ASSERT_EQ(shifted.zero_index(), GridSpec::npos);
  const SampledSignal f = gaussian(1.0, 0.0, shifted);
  EXPECT_NEAR(weighted_moment(f, WeightSpec::abs_power(2.0)), gaussian_mellin(3.0, 2.0), 1e-12);
}

TEST(WeightedMoment, NonIntegrableWeightRejected) {
  EXPECT_THROW(weighted_moment(gaussian(1.0), WeightSpec::abs_power(-1.0)), SingularWeightError);
  EXPECT_THROW(weighted_moment(gaussian(1.0), WeightSpec::abs_power_log(-1.2)), SingularWeightError);
}

TEST(FunctionalSpectrum, RefinesSpacing) {
  const AngleParams p = make_params(kPi / 3, ZChoice::plus_i);
  const Spectrum g = functional_spectrum(gaussian(1.0), p, {});
  EXPECT_LE(g.grid.dx, 0.05);
  EXPECT_TRUE(is_power_of_two(g.size()));
  for (std::size_t m = 0; m < g.size(); m += 997) {
    EXPECT_NEAR(std::abs(g.values[m] - oracle::oalpha_gaussian(g.grid.at(m), kPi / 3, p.z(), 1.0, 0.0)), 0.0, 1e-11);
  }
}

TEST(Heisenberg, ExtremalChirpedGaussianAttainsSharpConstant) {
  for (double alpha : {kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
    const AngleParams p = make_params(alpha, ZChoice::plus_i);
    for (double beta : {0.5, 1.0, 2.0}) {
      const FunctionalRecord r = uncertainty_product(gaussian(beta, -p.a()), p);
      EXPECT_NEAR(r.aux.at("observed_ratio"), std::sin(alpha) / (2 * std::sqrt(2.0)), 1e-9);
      EXPECT_NEAR(r.rhs, std::sin(alpha) / std::sqrt(2.0) * r.aux.at("norm_f_sq"), 1e-12);
      EXPECT_LT(r.margin, 0.0);
    }
  }
}

TEST(Heisenberg, HermiteRatio) {
  const AngleParams p = make_params(kPi / 4, ZChoice::minus_i);
  for (int n : {1, 3}) {
    const FunctionalRecord r = uncertainty_product(gen_hermite(n, kGrid), p);
    EXPECT_NEAR(r.aux.at("observed_ratio"), (n + 0.5) / std::sqrt(2.0), 1e-8) << n;
  }
}

TEST(Pitt, ZeroExponentIsParseval) {
  const AngleParams p = make_params(kPi / 5, ZChoice::plus_i);
  const SampledSignal f = gen_random_smooth(1, 1, 3.0, kGrid).front();
  const FunctionalRecord r = pitt_functional(f, p, 0.0);
  EXPECT_NEAR(r.aux.at("M"), 0.0, 1e-9 * r.aux.at("norm_f_sq"));
}

TEST(Pitt, QuarterTurnGaussianClosedForm) {
  const AngleParams p = make_params(kPi / 2, ZChoice::plus_i);
  const SampledSignal f = gaussian(0.5);
  for (double lambda : {0.1, 0.25, 0.5, 0.75}) {
    const FunctionalRecord r = pitt_functional(f, p, lambda);
    EXPECT_NEAR(r.aux.at("observed_constant"), tgamma((1 - lambda) / 2) / tgamma((1 + lambda) / 2), 1e-6) << lambda;
    EXPECT_GT(r.margin, 0.0);
    EXPECT_NEAR(r.aux.at("C_lambda"), pitt_constant(lambda), 1e-12);
  }
}

TEST(Pitt, HoldsOnRandomSignals) {
  for (double alpha : {kPi / 6, kPi / 2}) {
    const AngleParams p = make_params(alpha, ZChoice::minus_i);
    for (const SampledSignal& f : gen_random_smooth(7, 4, 4.0, kGrid)) {
      for (double lambda : {0.25, 0.75}) EXPECT_LT(pitt_functional(f, p, lambda).aux.at("M"), 0.0);
    }
  }
}

TEST(LogUncertainty, ChirpedGaussianValue) {
  for (double alpha : {kPi / 3, kPi / 2}) {
    const AngleParams p = make_params(alpha, ZChoice::plus_i);
    const double gauss = 0.5 * (digamma(0.5) + std::log(std::sin(alpha)));
    for (double beta : {0.3, 1.0, 3.0}) {
      const FunctionalRecord r = log_uncertainty_gap(gaussian(beta, -p.a()), p);
      EXPECT_NEAR(r.aux.at("normalized"), gauss, 1e-7) << beta;
      EXPECT_NEAR(r.margin / r.aux.at("norm_f_sq"), 0.5 * (kPi / 2 + std::log(2 * kPi)), 1e-7);
      EXPECT_GT(r.aux.at("normalized"), r.aux.at("sharp_constant"));
    }
  }
}

TEST(LogUncertainty, UnchirpedGaussianIsNotOptimal) {
  const AngleParams p = make_params(kPi / 4, ZChoice::minus_i);
  const double chirped = log_uncertainty_gap(gaussian(1.0, -p.a()), p).aux.at("normalized");
  EXPECT_GT(log_uncertainty_gap(gaussian(1.0), p).aux.at("normalized"), chirped);
}

TEST(LocalConcentration, QuarterTurnGaussian) {
  const AngleParams p = make_params(kPi / 2, ZChoice::plus_i);
  const SampledSignal f = gaussian(0.5);
  const double lambda = 0.25;
  const FunctionalRecord r = local_concentration(f, p, IntervalSet{{{-1.0, 1.0}}}, lambda);
  const double conc = 0.5 * std::sqrt(kPi) * boost::math::erf(1.0);
  EXPECT_NEAR(r.aux.at("concentration"), conc, 1e-3);
  EXPECT_NEAR(r.lhs, gaussian_mellin(1 + 2 * lambda, 1.0), 1e-8);
  EXPECT_NEAR(r.rhs, conc * std::pow(2.0, -2 * lambda), 1e-3);
  EXPECT_NEAR(r.margin, r.lhs / r.rhs, 1e-12);
}

TEST(LocalConcentration, IntervalValidation) {
  const AngleParams p = make_params(1.0, ZChoice::plus_i);
  EXPECT_THROW(local_concentration(gaussian(1.0), p, IntervalSet{}, 0.25), EmptySetError);
  EXPECT_THROW(local_concentration(gaussian(1.0), p, IntervalSet{{{0.0, 1.0}, {0.5, 2.0}}}, 0.25), DomainError);
  EXPECT_THROW(local_concentration(gaussian(1.0), p, IntervalSet{{{1.0, 1.0}}}, 0.25), DomainError);
  EXPECT_DOUBLE_EQ((IntervalSet{{{-1.0, 0.0}, {2.0, 2.5}}}.measure()), 1.5);
}

TEST(LocalConcentration, InterpolatesAcrossIntervalEnds) {
  Spectrum flat{GridSpec::centered(64, 4.0), std::vector<cplx>(64, cplx(0.0, 1.0))};
  EXPECT_NEAR(concentration_on(flat, IntervalSet{{{-0.33, 0.77}}}), 1.1, 1e-14);
  EXPECT_NEAR(concentration_on(flat, IntervalSet{{{-0.33, 0.0}, {0.1, 0.2}}}), 0.43, 1e-14);
}

TEST(HausdorffYoung, ParsevalEndpoint) {
  const AngleParams p = make_params(kPi / 3, ZChoice::plus_i);
  const FunctionalRecord r = hausdorff_young_ratio(gen_random_smooth(3, 1, 2.0, kGrid).front(), p, 2.0);
  EXPECT_NEAR(r.aux.at("observed_ratio"), 1 / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(r.aux.at("theta"), 0.0, 1e-15);
}

TEST(HausdorffYoung, ShiftedPulseExceedsEndpointConstant) {
  const AngleParams p = make_params(kPi / 2, ZChoice::plus_i);
  const SampledSignal centred = gaussian(0.5);
  const FunctionalRecord r0 = hausdorff_young_ratio(centred, p, 1.0);
  EXPECT_NEAR(r0.aux.at("observed_ratio"), 1 / (2 * std::sqrt(kPi)), 1e-6);

  const SampledSignal shifted = sample(kGrid, [](double t) { return std::exp(-0.5 * (t - 5) * (t - 5)); });
  const FunctionalRecord r = hausdorff_young_ratio(shifted, p, 1.0);
  EXPECT_LT(r.margin, 0.0);
  EXPECT_GT(r.aux.at("observed_ratio"), 0.37);
  EXPECT_LE(r.aux.at("observed_ratio"), 1 / std::sqrt(2 * kPi) + 1e-9);
  EXPECT_LE(r.lhs, r.aux.at("interpolated_bound") + 1e-9);
}

TEST(HausdorffYoung, InterpolatedBoundHolds) {
  const AngleParams p = make_params(kPi / 4, ZChoice::minus_i);
  for (const SampledSignal& f : gen_random_smooth(9, 3, 4.0, kGrid)) {
    for (double q : {1.0, 1.25, 1.5, 2.0}) {
      const FunctionalRecord r = hausdorff_young_ratio(f, p, q);
      EXPECT_LE(r.lhs, r.aux.at("interpolated_bound") * (1 + 1e-9)) << q;
    }
  }
  EXPECT_THROW(hausdorff_young_ratio(gaussian(1.0), p, 2.5), DomainError);
}

TEST(HardyFit, GaussianRates) {
  const SampledSignal f = sample(kGrid, [](double t) { return std::exp(-kPi * t * t); });
  const DecayFit fit = hardy_decay_fit(f, {0.0, 100.0});
  EXPECT_NEAR(fit.rate, kPi, 0.01 * kPi);
  EXPECT_LT(fit.residual, 1e-6);
  EXPECT_GE(fit.points, 8u);

  const double alpha = kPi / 4, beta = 1.0;
  const AngleParams p = make_params(alpha, ZChoice::plus_i);
  const SampledSignal g = gen_chirped_gaussian(1.0, kPi * beta, -p.a(), kGrid);
  const DecayFit spec = hardy_decay_fit(functional_spectrum(g, p), {0.0, 1e9});
  const double csc = 1 / std::sin(alpha);
  EXPECT_NEAR(spec.rate, csc * csc / (4 * kPi * beta), 0.01 * csc * csc / (4 * kPi * beta));
}

TEST(HardyFit, LorentzianHasLargeResidual) {
  const SampledSignal f = sample(GridSpec::centered(4096, 64.0), [](double t) { return 1.0 / (1.0 + t * t); });
  const DecayFit fit = hardy_decay_fit(f, {2.0, 64.0});
  EXPECT_GT(fit.residual, 0.1);
}

TEST(HardyFit, TooFewPoints) {
  EXPECT_THROW(hardy_decay_fit(gaussian(1.0), {20.0, 30.0}), WindowError);
}

TEST(Beurling, QuarterTurnClosedForm) {
  const AngleParams p = make_params(kPi / 2, ZChoice::plus_i);
  const SampledSignal f = gaussian(0.5);
  for (double radius : {1.0, 2.0, 3.0}) {
    const double inner = 2 * (radius * std::sqrt(kPi / 2) * boost::math::erf(radius / std::sqrt(2.0)) -
                              (1 - std::exp(-radius * radius / 2)));
    const double ref = 4 / std::sqrt(2.0) * inner;
    EXPECT_NEAR(beurling_truncated(f, p, radius), ref, 2e-2 * ref) << radius;
  }
}

TEST(Beurling, MonotoneAndZeroSignal) {
  const AngleParams p = make_params(kPi / 4, ZChoice::plus_i);
  const SampledSignal f = gaussian(0.5);
  double prev = 0.0;
  for (double radius : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
    const double v = beurling_truncated(f, p, radius);
    EXPECT_GT(v, prev);
    prev = v;
  }
  const SampledSignal zero{kGrid, std::vector<cplx>(kGrid.n)};
  EXPECT_EQ(beurling_truncated(zero, p, 4.0), 0.0);
  EXPECT_THROW(beurling_truncated(f, p, 0.0), DomainError);
  EXPECT_THROW(beurling_truncated(f, p, 40.0), GridError);
}

TEST(Beurling, OverflowSentinel) {
  const AngleParams p = make_params(kPi / 4, ZChoice::plus_i);
  const GridSpec wide = GridSpec::centered(4096, 64.0);
  const SampledSignal f = gen_chirped_gaussian(1.0, 0.02, 0.0, wide);
  EXPECT_TRUE(std::isinf(beurling_truncated(f, p, 40.0)));
}
