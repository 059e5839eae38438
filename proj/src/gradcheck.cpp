/* Copyright 2026 The Spanscope Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "spanscope/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "spanscope/core_types.hpp"
#include "spanscope/losses.hpp"

namespace spanscope {
namespace {

// Points closer than this to a kink are resampled, so the +-step probes
// never straddle one.
constexpr double kKinkMargin = 1e-3;

// mt19937_64 output is fixed by the standard; the distribution classes are
// not, so uniforms are drawn from the raw bits.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int bit() { return static_cast<int>(engine_() >> 63); }

 private:
  std::mt19937_64 engine_;
};

template <typename F>
double central_difference(F&& f, double x) {
  return (f(x + kGradCheckStep) - f(x - kGradCheckStep)) / (2.0 * kGradCheckStep);
}

bool near_kink(const Span1D& pred, const Span1D& gt) {
  const double values[] = {
      pred.center() - gt.center(),
      pred.width() - gt.width(),
      pred.start() - gt.start(),
      pred.end() - gt.end(),
      std::min(pred.end(), gt.end()) - std::max(pred.start(), gt.start()),
  };
  return std::any_of(std::begin(values), std::end(values),
                     [](double v) { return std::abs(v) < kKinkMargin; });
}

double check_moment(Uniform& rng, const LossWeights& w) {
  for (;;) {
    const Span1D gt(rng(0.2, 0.8), rng(0.05, 0.5));
    const Span1D pred(rng(0.0, 1.0), rng(0.02, 1.0));
    if (near_kink(pred, gt)) continue;
    const SpanGradient g = moment_loss_grad(pred, gt, w);
    const double nc = central_difference(
        [&](double c) { return moment_loss(Span1D(c, pred.width()), gt, w); },
        pred.center());
    const double nw = central_difference(
        [&](double width) { return moment_loss(Span1D(pred.center(), width), gt, w); },
        pred.width());
    return std::max(relative_deviation(g.center, nc), relative_deviation(g.width, nw));
  }
}

double check_bce(Uniform& rng, double w_p) {
  const auto n = static_cast<std::size_t>(1 + std::floor(rng(0.0, 8.0)));
  std::vector<double> p(n);
  std::vector<int> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = rng(0.01, 0.99);
    z[i] = rng.bit();
  }
  const std::vector<double> g = weighted_bce_grad(p, z, w_p);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> probe = p;
    const double numeric = central_difference(
        [&](double x) {
          probe[i] = x;
          return weighted_bce(probe, z, w_p);
        },
        p[i]);
    worst = std::max(worst, relative_deviation(g[i], numeric));
  }
  return worst;
}

double check_hinge(Uniform& rng) {
  for (;;) {
    const double delta = rng(0.0, 0.5);
    const double high = rng(0.0, 1.0);
    const double low = rng(0.0, 1.0);
    const double in = rng(0.0, 1.0);
    const double out = rng(0.0, 1.0);
    if (std::abs(delta + low - high) < kKinkMargin ||
        std::abs(delta + out - in) < kKinkMargin) {
      continue;
    }
    const HingeGradient g = highlight_hinge_grad(high, low, in, out, delta);
    const double nh = central_difference(
        [&](double x) { return highlight_hinge(x, low, in, out, delta); }, high);
    const double nl = central_difference(
        [&](double x) { return highlight_hinge(high, x, in, out, delta); }, low);
    const double ni = central_difference(
        [&](double x) { return highlight_hinge(high, low, x, out, delta); }, in);
    const double no = central_difference(
        [&](double x) { return highlight_hinge(high, low, in, x, delta); }, out);
    return std::max({relative_deviation(g.high, nh), relative_deviation(g.low, nl),
                     relative_deviation(g.in, ni), relative_deviation(g.out, no)});
  }
}

}  // namespace

double GradCheckReport::max_deviation() const {
  return std::max({moment_loss, weighted_bce, highlight_hinge});
}

double relative_deviation(double analytic, double numeric) {
  const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-6});
  return std::abs(analytic - numeric) / scale;
}

GradCheckReport run_gradient_check(std::size_t trials, std::uint64_t seed) {
  Uniform rng(seed);
  GradCheckReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    LossWeights w;
    w.lambda_l1 = rng(0.5, 20.0);
    w.lambda_iou = rng(0.5, 5.0);
    w.w_p = rng(0.5, 20.0);
    report.moment_loss = std::max(report.moment_loss, check_moment(rng, w));
    report.weighted_bce = std::max(report.weighted_bce, check_bce(rng, w.w_p));
    report.highlight_hinge = std::max(report.highlight_hinge, check_hinge(rng));
  }
  return report;
}

}  // namespace spanscope
