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
#ifndef SPANSCOPE_PIPELINE_HPP_
#define SPANSCOPE_PIPELINE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "spanscope/anchors.hpp"
#include "spanscope/core_types.hpp"
#include "spanscope/metrics.hpp"
#include "spanscope/predictor.hpp"
#include "spanscope/similarity.hpp"

// Batch stages: score -> anchors -> predict. Each stage fans out over
// (video, query) pairs on `jobs` threads and returns records sorted by
// (qid, video id), so output never depends on scheduling.
namespace spanscope {

struct ProfileOptions {
  ScoreOptions score;
  double quantization = kDefaultQuantization;
  std::size_t jobs = 1;
};

// A query naming a video is paired with it; a query without one is paired
// with the single video given, and is an error if several are given.
std::vector<SimilarityProfile> compute_profiles(std::span<const VideoFeatureSet> videos,
                                                std::span<const QueryBundle> queries,
                                                const ProfileOptions& options = {});

struct AnchorOptions {
  double quantization = kDefaultQuantization;
  std::size_t max_gap = kDefaultMaxGap;
  std::size_t jobs = 1;
};

// Recomputes threshold and marks at `quantization`, then extracts anchors.
std::vector<AnchorRecord> extract_anchor_records(
    std::span<const SimilarityProfile> profiles, const AnchorOptions& options = {});

struct PredictOptions {
  std::size_t top_k = kDefaultTopK;
  ConfidenceMode confidence = ConfidenceMode::kMean;
  std::size_t jobs = 1;
};

// Joins anchors and profiles on (qid, video id), one prediction per query.
std::vector<QueryPrediction> predict_all(std::span<const AnchorRecord> anchors,
                                         std::span<const SimilarityProfile> profiles,
                                         const PredictOptions& options = {});

}  // namespace spanscope

#endif  // SPANSCOPE_PIPELINE_HPP_
