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
#include "spanscope/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

using PredictionIndex = std::map<QueryId, const QueryPrediction*>;

PredictionIndex index_predictions(std::span<const QueryPrediction> preds,
                                  std::span<const GroundTruth> gts) {
  std::map<QueryId, bool> known;
  for (const auto& gt : gts) {
    if (!known.emplace(gt.qid(), true).second) {
      throw ValidationError("annotations: duplicate qid " + gt.qid().to_string());
    }
  }
  PredictionIndex index;
  for (const auto& p : preds) {
    if (!known.contains(p.qid)) {
      throw ValidationError("predictions: qid " + p.qid.to_string() +
                            " has no ground truth");
    }
    if (!index.emplace(p.qid, &p).second) {
      throw ValidationError("predictions: duplicate qid " + p.qid.to_string());
    }
  }
  return index;
}

std::vector<MomentPrediction> ranked(std::span<const MomentPrediction> preds) {
  std::vector<MomentPrediction> out(preds.begin(), preds.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const MomentPrediction& a, const MomentPrediction& b) {
                     if (a.confidence() != b.confidence()) {
                       return a.confidence() > b.confidence();
                     }
                     return a.start_s() < b.start_s();
                   });
  return out;
}

std::span<const MomentPrediction> windows_of(const PredictionIndex& index,
                                             const QueryId& qid) {
  const auto it = index.find(qid);
  if (it == index.end()) return {};
  return it->second->windows;
}

double mean(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

}  // namespace

double interval_iou(double a_start, double a_end, double b_start, double b_end) {
  const double inter = std::max(0.0, std::min(a_end, b_end) - std::max(a_start, b_start));
  const double uni = (a_end - a_start) + (b_end - b_start) - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

std::vector<double> default_iou_grid() {
  std::vector<double> grid;
  for (int k = 50; k <= 95; k += 5) grid.push_back(k / 100.0);
  return grid;
}

double average_precision(std::span<const MomentPrediction> preds,
                         std::span<const TimeWindow> gt_windows,
                         double iou_threshold) {
  if (gt_windows.empty()) return 0.0;
  const std::vector<MomentPrediction> order = ranked(preds);
  std::vector<bool> taken(gt_windows.size(), false);
  std::size_t hits = 0;
  double precision_sum = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::size_t best = gt_windows.size();
    double best_iou = -1.0;
    for (std::size_t g = 0; g < gt_windows.size(); ++g) {
      if (taken[g]) continue;
      const double iou = interval_iou(order[k].start_s(), order[k].end_s(),
                                      gt_windows[g].start_s(), gt_windows[g].end_s());
      if (iou >= iou_threshold && iou > best_iou) {
        best = g;
        best_iou = iou;
      }
    }
    if (best == gt_windows.size()) continue;
    taken[best] = true;
    ++hits;
    precision_sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return precision_sum / static_cast<double>(gt_windows.size());
}

RecallResult recall_at_1(std::span<const QueryPrediction> preds,
                         std::span<const GroundTruth> gts, double iou_threshold) {
  const PredictionIndex index = index_predictions(preds, gts);
  RecallResult result;
  std::size_t counted = 0;
  std::size_t hits = 0;
  for (const auto& gt : gts) {
    if (gt.relevant_windows().empty()) {
      result.excluded.push_back({gt.qid(), "no relevant windows"});
      continue;
    }
    ++counted;
    const std::vector<MomentPrediction> order = ranked(windows_of(index, gt.qid()));
    if (order.empty()) continue;
    const auto& top = order.front();
    const bool hit = std::any_of(
        gt.relevant_windows().begin(), gt.relevant_windows().end(),
        [&](const TimeWindow& w) {
          return interval_iou(top.start_s(), top.end_s(), w.start_s(), w.end_s()) >=
                 iou_threshold;
        });
    if (hit) ++hits;
  }
  result.value = counted == 0 ? 0.0
                              : static_cast<double>(hits) / static_cast<double>(counted);
  return result;
}

MapResult map_over_grid(std::span<const QueryPrediction> preds,
                        std::span<const GroundTruth> gts,
                        const std::vector<double>& grid) {
  if (grid.empty()) throw ValidationError("map_over_grid: empty IoU grid");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw ValidationError("map_over_grid: IoU grid must be ascending");
  }
  const PredictionIndex index = index_predictions(preds, gts);
  MapResult result;
  std::vector<const GroundTruth*> counted;
  for (const auto& gt : gts) {
    if (gt.relevant_windows().empty()) {
      result.excluded.push_back({gt.qid(), "no relevant windows"});
    } else {
      counted.push_back(&gt);
    }
  }
  std::vector<double> per_threshold;
  for (double t : grid) {
    std::vector<double> aps;
    aps.reserve(counted.size());
    for (const GroundTruth* gt : counted) {
      aps.push_back(average_precision(windows_of(index, gt->qid()),
                                      gt->relevant_windows(), t));
    }
    per_threshold.push_back(mean(aps));
    result.per_threshold.emplace_back(t, per_threshold.back());
  }
  result.average = mean(per_threshold);
  return result;
}

double highlight_average_precision(std::span<const double> scores,
                                   std::span<const int> labels, int very_good_cut) {
  if (scores.size() != labels.size()) {
    throw ValidationError("highlight_average_precision: " +
                          std::to_string(scores.size()) + " scores for " +
                          std::to_string(labels.size()) + " clips");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::size_t relevant = 0;
  double precision_sum = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (labels[order[k]] < very_good_cut) continue;
    ++relevant;
    precision_sum += static_cast<double>(relevant) / static_cast<double>(k + 1);
  }
  return relevant == 0 ? 0.0 : precision_sum / static_cast<double>(relevant);
}

HighlightResult hd_map_and_hit1(std::span<const QueryPrediction> preds,
                                std::span<const GroundTruth> gts, int very_good_cut) {
  const PredictionIndex index = index_predictions(preds, gts);
  HighlightResult result;
  std::vector<double> aps;
  std::vector<double> hits;
  for (const auto& gt : gts) {
    const auto& labels = gt.saliency();
    if (labels.empty()) {
      result.excluded.push_back({gt.qid(), "no saliency labels"});
      continue;
    }
    if (std::none_of(labels.begin(), labels.end(),
                     [&](int l) { return l >= very_good_cut; })) {
      result.excluded.push_back({gt.qid(), "no clip reaches the very-good level"});
      continue;
    }
    const auto it = index.find(gt.qid());
    if (it == index.end() || it->second->saliency.empty()) {
      result.excluded.push_back({gt.qid(), "no predicted saliency"});
      continue;
    }
    const auto& scores = it->second->saliency;
    if (scores.size() != labels.size()) {
      throw ValidationError("qid " + gt.qid().to_string() + ": " +
                            std::to_string(scores.size()) +
                            " predicted saliency scores for " +
                            std::to_string(labels.size()) + " annotated clips");
    }
    aps.push_back(highlight_average_precision(scores, labels, very_good_cut));
    const auto top = static_cast<std::size_t>(
        std::max_element(scores.begin(), scores.end()) - scores.begin());
    hits.push_back(labels[top] >= very_good_cut ? 1.0 : 0.0);
  }
  result.map = mean(aps);
  result.hit1 = mean(hits);
  return result;
}

EvalReport evaluate(std::span<const QueryPrediction> preds,
                    std::span<const GroundTruth> gts, const EvalOptions& options) {
  EvalReport report;
  report.num_queries = gts.size();
  const RecallResult r05 = recall_at_1(preds, gts, 0.5);
  const RecallResult r07 = recall_at_1(preds, gts, 0.7);
  const MapResult map = map_over_grid(preds, gts);
  const HighlightResult hd = hd_map_and_hit1(preds, gts, options.very_good_cut);

  report.mr_r1_05 = r05.value;
  report.mr_r1_07 = r07.value;
  report.mr_map_by_iou = map.per_threshold;
  for (const auto& [t, v] : map.per_threshold) {
    if (t == 0.5) report.mr_map_05 = v;
    if (t == 0.75) report.mr_map_075 = v;
  }
  report.mr_map_avg = map.average;
  report.hd_map = hd.map;
  report.hd_hit1 = hd.hit1;
  report.mr_excluded = map.excluded;
  report.hd_excluded = hd.excluded;
  return report;
}

}  // namespace spanscope
