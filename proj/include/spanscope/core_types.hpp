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
#ifndef SPANSCOPE_CORE_TYPES_HPP_
#define SPANSCOPE_CORE_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace spanscope {

inline constexpr double kDefaultClipStride = 2.0;

// Query identifier as found in annotation files: either an integer or a
// string. Integers order before strings so that output ordering is canonical.
class QueryId {
 public:
  QueryId() : value_(std::int64_t{0}) {}
  QueryId(std::int64_t id) : value_(id) {}  // NOLINT: implicit by intent
  QueryId(std::string id) : value_(std::move(id)) {}  // NOLINT
  QueryId(const char* id) : value_(std::string(id)) {}  // NOLINT

  bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  const std::string& as_string() const { return std::get<std::string>(value_); }
  std::string to_string() const;

  friend bool operator==(const QueryId&, const QueryId&) = default;
  friend std::strong_ordering operator<=>(const QueryId& a, const QueryId& b);

 private:
  std::variant<std::int64_t, std::string> value_;
};

// One sampled frame: its description text and the description embedding.
class FrameRecord {
 public:
  FrameRecord(std::size_t index, std::string description,
              std::vector<double> embedding);

  std::size_t index() const { return index_; }
  const std::string& description() const { return description_; }
  std::span<const double> embedding() const { return embedding_; }

 private:
  std::size_t index_;
  std::string description_;
  std::vector<double> embedding_;
};

// Frame i covers the half-open interval [i * stride, (i + 1) * stride).
class VideoFeatureSet {
 public:
  VideoFeatureSet(std::string video_id, double duration_s, double clip_stride_s,
                  std::vector<FrameRecord> frames);

  const std::string& video_id() const { return video_id_; }
  double duration_s() const { return duration_s_; }
  double clip_stride_s() const { return clip_stride_s_; }
  const std::vector<FrameRecord>& frames() const { return frames_; }
  std::size_t frame_count() const { return frames_.size(); }
  // Zero for an empty set.
  std::size_t dim() const;

 private:
  std::string video_id_;
  double duration_s_;
  double clip_stride_s_;
  std::vector<FrameRecord> frames_;
};

class QueryRewrite {
 public:
  QueryRewrite(std::string text, std::vector<double> embedding,
               std::optional<double> quality = std::nullopt);

  const std::string& text() const { return text_; }
  std::span<const double> embedding() const { return embedding_; }
  std::optional<double> quality() const { return quality_; }

 private:
  std::string text_;
  std::vector<double> embedding_;
  std::optional<double> quality_;
};

// The original query plus its rewrites. `video_id` is the video the query is
// posed against, empty when unknown.
class QueryBundle {
 public:
  QueryBundle(QueryId qid, std::string video_id, std::string original_text,
              std::vector<double> original_embedding,
              std::vector<QueryRewrite> rewrites);

  const QueryId& qid() const { return qid_; }
  const std::string& video_id() const { return video_id_; }
  const std::string& original_text() const { return original_text_; }
  std::span<const double> original_embedding() const {
    return original_embedding_;
  }
  const std::vector<QueryRewrite>& rewrites() const { return rewrites_; }

 private:
  QueryId qid_;
  std::string video_id_;
  std::string original_text_;
  std::vector<double> original_embedding_;
  std::vector<QueryRewrite> rewrites_;
};

// Per-frame scores for one (video, query) pair together with the adaptive
// threshold and the marks derived from it.
class SimilarityProfile {
 public:
  SimilarityProfile(std::string video_id, QueryId qid, double clip_stride_s,
                    double duration_s, std::vector<double> scores,
                    double threshold, std::vector<bool> marks);

  const std::string& video_id() const { return video_id_; }
  const QueryId& qid() const { return qid_; }
  double clip_stride_s() const { return clip_stride_s_; }
  double duration_s() const { return duration_s_; }
  std::span<const double> scores() const { return scores_; }
  double threshold() const { return threshold_; }
  const std::vector<bool>& marks() const { return marks_; }

 private:
  std::string video_id_;
  QueryId qid_;
  double clip_stride_s_;
  double duration_s_;
  std::vector<double> scores_;
  double threshold_;
  std::vector<bool> marks_;
};

class SpanAnchor {
 public:
  SpanAnchor(double start_s, double end_s, double mean_score);

  double start_s() const { return start_s_; }
  double end_s() const { return end_s_; }
  double mean_score() const { return mean_score_; }

  friend bool operator==(const SpanAnchor&, const SpanAnchor&) = default;

 private:
  double start_s_;
  double end_s_;
  double mean_score_;
};

// Checks the list-level anchor invariants: sorted, disjoint, and no anchor
// ends more than one stride past the video end.
void validate_anchor_list(std::span<const SpanAnchor> anchors,
                          double duration_s, double clip_stride_s);

class MomentPrediction {
 public:
  MomentPrediction(double start_s, double end_s, double confidence);

  double start_s() const { return start_s_; }
  double end_s() const { return end_s_; }
  double confidence() const { return confidence_; }

  friend bool operator==(const MomentPrediction&,
                         const MomentPrediction&) = default;

 private:
  double start_s_;
  double end_s_;
  double confidence_;
};

class TimeWindow {
 public:
  TimeWindow(double start_s, double end_s);

  double start_s() const { return start_s_; }
  double end_s() const { return end_s_; }
  double length() const { return end_s_ - start_s_; }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;

 private:
  double start_s_;
  double end_s_;
};

// Annotated moments and per-clip saliency for one query. An empty saliency
// vector means the entry carries no highlight labels.
class GroundTruth {
 public:
  GroundTruth(QueryId qid, std::string video_id, std::string query,
              double duration_s, double clip_stride_s,
              std::vector<TimeWindow> relevant_windows,
              std::vector<int> saliency);

  const QueryId& qid() const { return qid_; }
  const std::string& video_id() const { return video_id_; }
  const std::string& query() const { return query_; }
  double duration_s() const { return duration_s_; }
  double clip_stride_s() const { return clip_stride_s_; }
  const std::vector<TimeWindow>& relevant_windows() const {
    return relevant_windows_;
  }
  const std::vector<int>& saliency() const { return saliency_; }

 private:
  QueryId qid_;
  std::string video_id_;
  std::string query_;
  double duration_s_;
  double clip_stride_s_;
  std::vector<TimeWindow> relevant_windows_;
  std::vector<int> saliency_;
};

// Weights of the training losses; delta is the hinge margin.
struct LossWeights {
  double lambda_l1 = 10.0;
  double lambda_iou = 1.0;
  double lambda_cls = 4.0;
  double lambda_h = 1.0;
  double w_p = 10.0;
  double delta = 0.2;

  // Throws ValidationError naming the first offending field.
  void validate() const;
};

}  // namespace spanscope

#endif  // SPANSCOPE_CORE_TYPES_HPP_
