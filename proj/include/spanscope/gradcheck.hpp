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
#ifndef SPANSCOPE_GRADCHECK_HPP_
#define SPANSCOPE_GRADCHECK_HPP_

#include <cstddef>
#include <cstdint>

namespace spanscope {

inline constexpr double kGradCheckStep = 1e-5;
inline constexpr double kGradCheckTolerance = 1e-4;
inline constexpr std::uint64_t kDefaultGradCheckSeed = 7;

// Worst relative deviation between analytic and central-difference gradients
// for each loss, over `trials` random points kept away from kinks.
struct GradCheckReport {
  std::size_t trials = 0;
  double moment_loss = 0.0;
  double weighted_bce = 0.0;
  double highlight_hinge = 0.0;

  double max_deviation() const;
  bool passed(double tolerance = kGradCheckTolerance) const {
    return max_deviation() <= tolerance;
  }
};

// |a - n| / max(|a|, |n|, 1e-6).
double relative_deviation(double analytic, double numeric);

GradCheckReport run_gradient_check(std::size_t trials,
                                   std::uint64_t seed = kDefaultGradCheckSeed);

}  // namespace spanscope

#endif  // SPANSCOPE_GRADCHECK_HPP_
