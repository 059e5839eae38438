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
#include "spanscope/losses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

struct Overlap {
  double inter;
  double uni;
  double enclose;
};

// Lengths come from the widths wherever possible, so that identical spans
// give exactly IoU 1 and loss 0.
Overlap overlap(const Span1D& a, const Span1D& b) {
  const bool a_in_b = a.start() >= b.start() && a.end() <= b.end();
  const bool b_in_a = b.start() >= a.start() && b.end() <= a.end();
  double inter = 0.0;
  double enclose = 0.0;
  if (a_in_b || b_in_a) {
    inter = a_in_b ? a.width() : b.width();
    enclose = a_in_b ? b.width() : a.width();
    if (a_in_b && b_in_a) enclose = inter = std::min(a.width(), b.width());
  } else {
    inter = std::max(0.0, std::min(a.end(), b.end()) - std::max(a.start(), b.start()));
    enclose = std::max(a.end(), b.end()) - std::min(a.start(), b.start());
  }
  const double uni = a.width() + b.width() - inter;
  return {inter, uni, enclose};
}

void check_binary_inputs(std::span<const double> p, std::span<const int> z) {
  if (p.size() != z.size()) {
    throw ValidationError("weighted_bce: length mismatch (" +
                          std::to_string(p.size()) + " probabilities, " +
                          std::to_string(z.size()) + " labels)");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0 && p[i] <= 1.0)) {
      throw ValidationError("weighted_bce: probability " + std::to_string(i) +
                            " outside [0,1]");
    }
    if (z[i] != 0 && z[i] != 1) {
      throw ValidationError("weighted_bce: label " + std::to_string(i) +
                            " is not 0 or 1");
    }
  }
}

}  // namespace

Span1D::Span1D(double center, double width) : center_(center), width_(width) {
  if (!std::isfinite(center_)) throw ValidationError("Span1D.center: not finite");
  if (!std::isfinite(width_) || width_ <= 0.0) {
    throw ValidationError("Span1D.width: must be positive");
  }
}

double temporal_iou(const Span1D& a, const Span1D& b) {
  const Overlap o = overlap(a, b);
  return o.inter / o.uni;
}

double giou_loss_1d(const Span1D& a, const Span1D& b) {
  const Overlap o = overlap(a, b);
  const double giou = o.inter / o.uni - (o.enclose - o.uni) / o.enclose;
  return 1.0 - giou;
}

SpanGradient giou_loss_1d_grad(const Span1D& pred, const Span1D& gt) {
  const Overlap o = overlap(pred, gt);
  // Derivatives with respect to the predicted start and end.
  double di_ds = 0.0;
  double di_de = 0.0;
  if (o.inter > 0.0) {
    di_ds = pred.start() > gt.start() ? -1.0 : 0.0;
    di_de = pred.end() < gt.end() ? 1.0 : 0.0;
  }
  const double du_ds = -1.0 - di_ds;
  const double du_de = 1.0 - di_de;
  const double dc_ds = pred.start() < gt.start() ? -1.0 : 0.0;
  const double dc_de = pred.end() > gt.end() ? 1.0 : 0.0;

  // loss = 2 - I/U - U/C
  auto d_loss = [&](double di, double du, double dc) {
    const double d_iou = (di * o.uni - o.inter * du) / (o.uni * o.uni);
    const double d_ratio = (du * o.enclose - o.uni * dc) / (o.enclose * o.enclose);
    return -d_iou - d_ratio;
  };
  const double g_start = d_loss(di_ds, du_ds, dc_ds);
  const double g_end = d_loss(di_de, du_de, dc_de);
  // start = c - w/2, end = c + w/2
  return {g_start + g_end, 0.5 * (g_end - g_start)};
}

double moment_loss(const Span1D& pred, const Span1D& gt, const LossWeights& w) {
  const double l1 = std::abs(pred.center() - gt.center()) +
                    std::abs(pred.width() - gt.width());
  return w.lambda_l1 * l1 + w.lambda_iou * giou_loss_1d(pred, gt);
}

SpanGradient moment_loss_grad(const Span1D& pred, const Span1D& gt,
                              const LossWeights& w) {
  const SpanGradient g = giou_loss_1d_grad(pred, gt);
  return {w.lambda_l1 * sign(pred.center() - gt.center()) + w.lambda_iou * g.center,
          w.lambda_l1 * sign(pred.width() - gt.width()) + w.lambda_iou * g.width};
}

double weighted_bce(std::span<const double> p, std::span<const int> z, double w_p) {
  check_binary_inputs(p, z);
  double loss = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double q = std::clamp(p[i], kProbabilityEpsilon, 1.0 - kProbabilityEpsilon);
    loss -= z[i] == 1 ? w_p * std::log(q) : std::log(1.0 - q);
  }
  return loss;
}

std::vector<double> weighted_bce_grad(std::span<const double> p,
                                      std::span<const int> z, double w_p) {
  check_binary_inputs(p, z);
  std::vector<double> grad(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < kProbabilityEpsilon || p[i] > 1.0 - kProbabilityEpsilon) continue;
    grad[i] = z[i] == 1 ? -w_p / p[i] : 1.0 / (1.0 - p[i]);
  }
  return grad;
}

double highlight_hinge(double h_high, double h_low, double h_in, double h_out,
                       double delta) {
  return std::max(0.0, delta + h_low - h_high) +
         std::max(0.0, delta + h_out - h_in);
}

HingeGradient highlight_hinge_grad(double h_high, double h_low, double h_in,
                                   double h_out, double delta) {
  HingeGradient g;
  if (delta + h_low - h_high > 0.0) {
    g.low = 1.0;
    g.high = -1.0;
  }
  if (delta + h_out - h_in > 0.0) {
    g.out = 1.0;
    g.in = -1.0;
  }
  return g;
}

double total_loss(const LossParts& parts, const LossWeights& w) {
  return parts.moment + w.lambda_cls * parts.cls + w.lambda_h * parts.hinge;
}

}  // namespace spanscope
