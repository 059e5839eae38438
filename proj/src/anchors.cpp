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
#include "spanscope/anchors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

// Value of bin `k`. For decimal grids such as 0.01 the division form gives the
// correctly rounded decimal (31 / 100 == 0.31), which k * 0.01 does not.
double bin_value(std::int64_t k, double quantization) {
  const double inverse = 1.0 / quantization;
  const double rounded = std::round(inverse);
  if (rounded >= 1.0 && std::abs(inverse - rounded) <= 1e-9 * rounded) {
    return static_cast<double>(k) / rounded;
  }
  return static_cast<double>(k) * quantization;
}

}  // namespace

double select_threshold(std::span<const double> scores, double quantization) {
  if (scores.empty()) throw ValidationError("select_threshold: empty score vector");
  if (!std::isfinite(quantization) || quantization <= 0.0) {
    throw ValidationError("select_threshold: quantization must be positive");
  }
  std::map<std::int64_t, std::size_t> histogram;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw ValidationError("select_threshold: score " + std::to_string(i) +
                            " is not finite");
    }
    ++histogram[std::llround(scores[i] / quantization)];
  }
  std::vector<std::pair<std::int64_t, std::size_t>> bins(histogram.begin(),
                                                         histogram.end());
  std::sort(bins.begin(), bins.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  const std::size_t rank = std::min<std::size_t>(3, bins.size());
  return bin_value(bins[rank - 1].first, quantization);
}

std::vector<bool> mark(std::span<const double> scores, double threshold) {
  std::vector<bool> marks(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw ValidationError("mark: score " + std::to_string(i) + " is not finite");
    }
    marks[i] = scores[i] > threshold;
  }
  return marks;
}

std::vector<SpanAnchor> extract_anchors(const std::vector<bool>& marks,
                                        std::span<const double> scores,
                                        double stride_s, std::size_t max_gap) {
  if (marks.size() != scores.size()) {
    throw ValidationError("extract_anchors: marks length " +
                          std::to_string(marks.size()) + " != scores length " +
                          std::to_string(scores.size()));
  }
  if (!std::isfinite(stride_s) || stride_s <= 0.0) {
    throw ValidationError("extract_anchors: stride_s must be positive");
  }

  std::vector<SpanAnchor> anchors;
  auto emit = [&](std::size_t first, std::size_t last) {
    double sum = 0.0;
    for (std::size_t i = first; i <= last; ++i) sum += scores[i];
    const double mean = sum / static_cast<double>(last - first + 1);
    anchors.emplace_back(static_cast<double>(first) * stride_s,
                         static_cast<double>(last + 1) * stride_s,
                         std::clamp(mean, -1.0, 1.0));
  };

  bool open = false;
  std::size_t first = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (!marks[i]) continue;
    if (open && i - last - 1 <= max_gap) {
      last = i;
      continue;
    }
    if (open) emit(first, last);
    open = true;
    first = last = i;
  }
  if (open) emit(first, last);
  return anchors;
}

SimilarityProfile make_profile(std::string video_id, QueryId qid,
                               double clip_stride_s, double duration_s,
                               std::vector<double> scores,
                               double quantization) {
  const double threshold = select_threshold(scores, quantization);
  std::vector<bool> marks = mark(scores, threshold);
  return SimilarityProfile(std::move(video_id), std::move(qid), clip_stride_s,
                           duration_s, std::move(scores), threshold,
                           std::move(marks));
}

}  // namespace spanscope
