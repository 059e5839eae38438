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
#include "spanscope/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

std::vector<MomentPrediction> rank(std::vector<MomentPrediction> preds,
                                   std::size_t top_k) {
  std::stable_sort(preds.begin(), preds.end(),
                   [](const MomentPrediction& a, const MomentPrediction& b) {
                     if (a.confidence() != b.confidence()) {
                       return a.confidence() > b.confidence();
                     }
                     return a.start_s() < b.start_s();
                   });
  if (preds.size() > top_k) preds.erase(preds.begin() + static_cast<std::ptrdiff_t>(top_k), preds.end());
  return preds;
}

}  // namespace

ConfidenceMode parse_confidence_mode(std::string_view name) {
  if (name == "mean") return ConfidenceMode::kMean;
  if (name == "max") return ConfidenceMode::kMax;
  if (name == "length-weighted") return ConfidenceMode::kLengthWeighted;
  throw ValidationError("confidence: expected mean, max or length-weighted, got '" +
                        std::string(name) + "'");
}

std::string_view confidence_mode_name(ConfidenceMode mode) {
  switch (mode) {
    case ConfidenceMode::kMax: return "max";
    case ConfidenceMode::kLengthWeighted: return "length-weighted";
    case ConfidenceMode::kMean: break;
  }
  return "mean";
}

std::vector<MomentPrediction> predict_moments(std::span<const SpanAnchor> anchors,
                                              std::size_t top_k) {
  std::vector<MomentPrediction> preds;
  preds.reserve(anchors.size());
  for (const auto& a : anchors) preds.emplace_back(a.start_s(), a.end_s(), a.mean_score());
  return rank(std::move(preds), top_k);
}

std::vector<MomentPrediction> predict_moments(std::span<const SpanAnchor> anchors,
                                              const SimilarityProfile& profile,
                                              ConfidenceMode mode,
                                              std::size_t top_k) {
  if (mode == ConfidenceMode::kMean) return predict_moments(anchors, top_k);

  const auto scores = profile.scores();
  const double stride = profile.clip_stride_s();
  const double span_s = std::max(profile.duration_s(),
                                 static_cast<double>(scores.size()) * stride);
  std::vector<MomentPrediction> preds;
  preds.reserve(anchors.size());
  for (const auto& a : anchors) {
    double confidence = a.mean_score();
    if (mode == ConfidenceMode::kMax) {
      const auto first = static_cast<std::size_t>(std::llround(a.start_s() / stride));
      const auto last = static_cast<std::size_t>(std::llround(a.end_s() / stride));
      if (last > scores.size() || first >= last) {
        throw ValidationError("predict_moments: anchor [" + std::to_string(a.start_s()) +
                              ", " + std::to_string(a.end_s()) +
                              "] does not fit the profile of " +
                              std::to_string(scores.size()) + " frames");
      }
      confidence = *std::max_element(scores.begin() + first, scores.begin() + last);
    } else if (span_s > 0.0) {
      confidence = a.mean_score() * (a.end_s() - a.start_s()) / span_s;
    }
    preds.emplace_back(a.start_s(), a.end_s(), confidence);
  }
  return rank(std::move(preds), top_k);
}

std::vector<double> predict_highlights(std::span<const double> scores) {
  std::vector<double> out(scores.size(), 0.5);
  if (scores.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(scores.begin(), scores.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) return out;
  const double range = hi - lo;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    double v = (scores[i] - lo) / range;
    // Only true maxima may reach 1.0, so the argmax survives rounding.
    if (scores[i] < hi && v >= 1.0) v = std::nextafter(1.0, 0.0);
    out[i] = v;
  }
  return out;
}

std::vector<double> predict_highlights(const SimilarityProfile& profile) {
  return predict_highlights(profile.scores());
}

}  // namespace spanscope
