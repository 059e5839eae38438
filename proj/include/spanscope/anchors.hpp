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
#ifndef SPANSCOPE_ANCHORS_HPP_
#define SPANSCOPE_ANCHORS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spanscope/core_types.hpp"

namespace spanscope {

inline constexpr double kDefaultQuantization = 0.01;
inline constexpr std::size_t kDefaultMaxGap = 5;

/// Adaptive threshold of a score profile.
///
/// Scores are rounded to the nearest multiple of `quantization` and
/// histogrammed. Bins are ranked by frequency (descending), ties going to the
/// higher value, and the value of the third-ranked bin is returned. With
/// fewer than three distinct bins the last-ranked bin is returned instead.
double select_threshold(std::span<const double> scores,
                        double quantization = kDefaultQuantization);

/// marks[i] = scores[i] > threshold.
std::vector<bool> mark(std::span<const double> scores, double threshold);

/// Groups marked frames into anchors. Runs of marked frames separated by at
/// most `max_gap` unmarked frames are merged; each region [first, last]
/// spans [first * stride, (last + 1) * stride) and carries the mean score of
/// every frame in it, gap frames included.
std::vector<SpanAnchor> extract_anchors(const std::vector<bool>& marks,
                                        std::span<const double> scores,
                                        double stride_s,
                                        std::size_t max_gap = kDefaultMaxGap);

// Anchor-stage output for one (video, query) pair.
struct AnchorRecord {
  QueryId qid;
  std::string video_id;
  double clip_stride_s = kDefaultClipStride;
  double duration_s = 0.0;
  double threshold = 0.0;
  std::size_t max_gap = kDefaultMaxGap;
  std::vector<SpanAnchor> anchors;
};

// Threshold + marks for a full profile.
SimilarityProfile make_profile(std::string video_id, QueryId qid,
                               double clip_stride_s, double duration_s,
                               std::vector<double> scores,
                               double quantization = kDefaultQuantization);

}  // namespace spanscope

#endif  // SPANSCOPE_ANCHORS_HPP_
