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
#ifndef SPANSCOPE_METRICS_HPP_
#define SPANSCOPE_METRICS_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanscope/core_types.hpp"

namespace spanscope {

inline constexpr int kDefaultVeryGoodCut = 3;

// Model output for one query: ranked moments plus per-clip highlight scores.
struct QueryPrediction {
  QueryId qid;
  std::vector<MomentPrediction> windows;
  std::vector<double> saliency;
};

// A query left out of a metric, and why.
struct Exclusion {
  QueryId qid;
  std::string reason;
};

double interval_iou(double a_start, double a_end, double b_start, double b_end);

// The IoU thresholds 0.50, 0.55, ..., 0.95.
std::vector<double> default_iou_grid();

/// Non-interpolated AP of one ranked list against a set of GT windows.
///
/// Predictions are visited by confidence (descending, ties to the earlier
/// start). Each one claims the still-unmatched window of highest IoU, provided
/// that IoU reaches `iou_threshold`. AP is the sum of the precision values at
/// every hit, divided by the number of windows.
double average_precision(std::span<const MomentPrediction> preds,
                         std::span<const TimeWindow> gt_windows,
                         double iou_threshold);

struct RecallResult {
  double value = 0.0;
  std::vector<Exclusion> excluded;
};

// Fraction of queries whose top-ranked moment reaches `iou_threshold` with
// some GT window. Queries without GT windows are excluded.
RecallResult recall_at_1(std::span<const QueryPrediction> preds,
                         std::span<const GroundTruth> gts, double iou_threshold);

struct MapResult {
  std::vector<std::pair<double, double>> per_threshold;
  double average = 0.0;
  std::vector<Exclusion> excluded;
};

MapResult map_over_grid(std::span<const QueryPrediction> preds,
                        std::span<const GroundTruth> gts,
                        const std::vector<double>& grid = default_iou_grid());

// AP of clips ranked by score (ties to the lower index), relevance being
// label >= very_good_cut. Zero when no clip is relevant.
double highlight_average_precision(std::span<const double> scores,
                                   std::span<const int> labels, int very_good_cut);

struct HighlightResult {
  double map = 0.0;
  double hit1 = 0.0;
  std::vector<Exclusion> excluded;
};

HighlightResult hd_map_and_hit1(std::span<const QueryPrediction> preds,
                                std::span<const GroundTruth> gts,
                                int very_good_cut = kDefaultVeryGoodCut);

struct EvalOptions {
  int very_good_cut = kDefaultVeryGoodCut;
};

struct EvalReport {
  double mr_r1_05 = 0.0;
  double mr_r1_07 = 0.0;
  double mr_map_05 = 0.0;
  double mr_map_075 = 0.0;
  double mr_map_avg = 0.0;
  double hd_map = 0.0;
  double hd_hit1 = 0.0;
  std::vector<std::pair<double, double>> mr_map_by_iou;
  std::size_t num_queries = 0;
  std::vector<Exclusion> mr_excluded;
  std::vector<Exclusion> hd_excluded;
};

// Full MR + HD report. Every prediction must refer to an annotated query;
// annotated queries without a prediction count as empty predictions.
EvalReport evaluate(std::span<const QueryPrediction> preds,
                    std::span<const GroundTruth> gts,
                    const EvalOptions& options = {});

}  // namespace spanscope

#endif  // SPANSCOPE_METRICS_HPP_
