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
#ifndef SPANSCOPE_PREDICTOR_HPP_
#define SPANSCOPE_PREDICTOR_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "spanscope/core_types.hpp"

namespace spanscope {

inline constexpr std::size_t kDefaultTopK = 10;

// How an anchor's confidence is derived.
//   kMean           mean score over the anchor (gap frames included)
//   kMax            highest frame score inside the anchor
//   kLengthWeighted mean score times the fraction of the video covered
enum class ConfidenceMode { kMean, kMax, kLengthWeighted };

ConfidenceMode parse_confidence_mode(std::string_view name);
std::string_view confidence_mode_name(ConfidenceMode mode);

// Anchors ranked by mean score, ties to the earlier start, truncated to top_k.
std::vector<MomentPrediction> predict_moments(std::span<const SpanAnchor> anchors,
                                              std::size_t top_k = kDefaultTopK);

// Same ranking with a configurable confidence; `profile` supplies the frame
// scores for kMax and the video length for kLengthWeighted.
std::vector<MomentPrediction> predict_moments(std::span<const SpanAnchor> anchors,
                                              const SimilarityProfile& profile,
                                              ConfidenceMode mode,
                                              std::size_t top_k = kDefaultTopK);

// Min-max rescale of the profile scores to [0, 1]; a constant profile maps to
// 0.5 everywhere.
std::vector<double> predict_highlights(const SimilarityProfile& profile);
std::vector<double> predict_highlights(std::span<const double> scores);

}  // namespace spanscope

#endif  // SPANSCOPE_PREDICTOR_HPP_
