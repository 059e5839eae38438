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
#ifndef SPANSCOPE_SIMILARITY_HPP_
#define SPANSCOPE_SIMILARITY_HPP_

#include <span>
#include <string_view>
#include <vector>

#include "spanscope/core_types.hpp"

namespace spanscope {

enum class Aggregation { kMean, kMax };

Aggregation parse_aggregation(std::string_view name);
std::string_view aggregation_name(Aggregation aggregation);

struct ScoreOptions {
  Aggregation aggregation = Aggregation::kMean;
  // Whether the original query embedding joins the rewrite pool.
  bool include_original = true;
  // Scores are snapped to this grid so that results do not depend on
  // last-bit rounding of rescaled embeddings. Zero disables snapping.
  double resolution = 1e-9;
};

/// Cosine of the angle between `a` and `b`, clamped to [-1, 1].
///
/// Throws ValidationError when the dimensions differ, when either vector is
/// all-zero, or when a component is not finite.
double cosine(std::span<const double> a, std::span<const double> b);

/// Per-frame similarity of `video` against the query's embedding pool.
/// Entry i aggregates cosine(frame_i, e) over the pool.
std::vector<double> score_profile(const VideoFeatureSet& video,
                                  const QueryBundle& query,
                                  const ScoreOptions& options = {});

/// min(1, P(paraphrase | q) / P(q | q)) from log-probabilities.
double rewrite_quality(double logp_paraphrase_given_q, double logp_q_given_q);

}  // namespace spanscope

#endif  // SPANSCOPE_SIMILARITY_HPP_
