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
#include "spanscope/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

// Dividing by the integer 1/resolution (1e9 for the default) yields the
// correctly rounded decimal, so a snapped 0.2 equals the literal 0.2.
double snap(double value, double resolution) {
  if (resolution <= 0.0) return value;
  const double steps = std::nearbyint(value / resolution);
  const double inverse = std::round(1.0 / resolution);
  if (inverse >= 1.0 && std::abs(1.0 / resolution - inverse) <= 1e-9 * inverse) {
    return steps / inverse;
  }
  return steps * resolution;
}

}  // namespace

Aggregation parse_aggregation(std::string_view name) {
  if (name == "mean") return Aggregation::kMean;
  if (name == "max") return Aggregation::kMax;
  throw ValidationError("aggregation: expected mean or max, got '" +
                        std::string(name) + "'");
}

std::string_view aggregation_name(Aggregation aggregation) {
  return aggregation == Aggregation::kMax ? "max" : "mean";
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ValidationError("cosine: dimension mismatch (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
      throw ValidationError("cosine: non-finite component at " +
                            std::to_string(i));
    }
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0) throw ValidationError("cosine: first argument is a zero vector");
  if (norm_b == 0.0) throw ValidationError("cosine: second argument is a zero vector");
  const double c = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::clamp(c, -1.0, 1.0);
}

std::vector<double> score_profile(const VideoFeatureSet& video,
                                  const QueryBundle& query,
                                  const ScoreOptions& options) {
  if (video.frame_count() == 0) {
    throw ValidationError("score_profile: video '" + video.video_id() +
                          "' has no frames");
  }
  std::vector<std::span<const double>> pool;
  if (options.include_original && !query.original_embedding().empty()) {
    pool.push_back(query.original_embedding());
  }
  for (const auto& rewrite : query.rewrites()) pool.push_back(rewrite.embedding());
  if (pool.empty()) {
    throw ValidationError("score_profile: query " + query.qid().to_string() +
                          " has no usable embedding");
  }
  for (const auto& e : pool) {
    if (e.size() != video.dim()) {
      throw ValidationError(
          "score_profile: query " + query.qid().to_string() +
          " embedding dimension " + std::to_string(e.size()) +
          " != video '" + video.video_id() + "' dimension " +
          std::to_string(video.dim()));
    }
  }

  std::vector<double> scores;
  scores.reserve(video.frame_count());
  for (const auto& frame : video.frames()) {
    double acc = options.aggregation == Aggregation::kMax ? -1.0 : 0.0;
    for (const auto& e : pool) {
      const double c = cosine(frame.embedding(), e);
      if (options.aggregation == Aggregation::kMax) {
        acc = std::max(acc, c);
      } else {
        acc += c;
      }
    }
    if (options.aggregation == Aggregation::kMean) {
      acc /= static_cast<double>(pool.size());
    }
    scores.push_back(std::clamp(snap(acc, options.resolution), -1.0, 1.0));
  }
  return scores;
}

double rewrite_quality(double logp_paraphrase_given_q, double logp_q_given_q) {
  if (!std::isfinite(logp_paraphrase_given_q) || !std::isfinite(logp_q_given_q)) {
    throw ValidationError("rewrite_quality: log-probabilities must be finite");
  }
  return std::min(1.0, std::exp(logp_paraphrase_given_q - logp_q_given_q));
}

}  // namespace spanscope
