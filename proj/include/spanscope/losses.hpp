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
#ifndef SPANSCOPE_LOSSES_HPP_
#define SPANSCOPE_LOSSES_HPP_

#include <span>
#include <vector>

#include "spanscope/core_types.hpp"

namespace spanscope {

// Probabilities handed to weighted_bce are clamped into [eps, 1 - eps].
inline constexpr double kProbabilityEpsilon = 1e-7;

// A moment in normalized (center, width) form; the interval is
// [center - width / 2, center + width / 2].
class Span1D {
 public:
  Span1D(double center, double width);

  double center() const { return center_; }
  double width() const { return width_; }
  double start() const { return center_ - 0.5 * width_; }
  double end() const { return center_ + 0.5 * width_; }

  friend bool operator==(const Span1D&, const Span1D&) = default;

 private:
  double center_;
  double width_;
};

// Partial derivatives with respect to the predicted span.
struct SpanGradient {
  double center = 0.0;
  double width = 0.0;
};

struct HingeGradient {
  double high = 0.0;
  double low = 0.0;
  double in = 0.0;
  double out = 0.0;
};

double temporal_iou(const Span1D& a, const Span1D& b);

// 1 - gIoU, in [0, 2).
double giou_loss_1d(const Span1D& a, const Span1D& b);
SpanGradient giou_loss_1d_grad(const Span1D& pred, const Span1D& gt);

// lambda_l1 * (|dc| + |dw|) + lambda_iou * giou_loss_1d.
double moment_loss(const Span1D& pred, const Span1D& gt, const LossWeights& w);
SpanGradient moment_loss_grad(const Span1D& pred, const Span1D& gt,
                              const LossWeights& w);

// -sum(w_p * z * log p + (1 - z) * log(1 - p)). Labels must be 0 or 1;
// probabilities must lie in [0, 1] and are clamped by kProbabilityEpsilon.
double weighted_bce(std::span<const double> p, std::span<const int> z, double w_p);
std::vector<double> weighted_bce_grad(std::span<const double> p,
                                      std::span<const int> z, double w_p);

double highlight_hinge(double h_high, double h_low, double h_in, double h_out,
                       double delta);
HingeGradient highlight_hinge_grad(double h_high, double h_low, double h_in,
                                   double h_out, double delta);

struct LossParts {
  double moment = 0.0;
  double cls = 0.0;
  double hinge = 0.0;
};

// moment + lambda_cls * cls + lambda_h * hinge.
double total_loss(const LossParts& parts, const LossWeights& w);

}  // namespace spanscope

#endif  // SPANSCOPE_LOSSES_HPP_
