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
#include "spanscope/core_types.hpp"

#include <cmath>
#include <sstream>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

// Slack for comparisons between derived time quantities.
constexpr double kTimeSlack = 1e-9;

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  throw ValidationError(field + ": " + why);
}

void require_finite_vector(const std::string& field, std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) {
      reject(field, "component " + std::to_string(i) + " is not finite");
    }
  }
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string QueryId::to_string() const {
  return is_integer() ? std::to_string(as_integer()) : as_string();
}

std::strong_ordering operator<=>(const QueryId& a, const QueryId& b) {
  if (a.is_integer() != b.is_integer()) {
    return a.is_integer() ? std::strong_ordering::less
                          : std::strong_ordering::greater;
  }
  if (a.is_integer()) return a.as_integer() <=> b.as_integer();
  return a.as_string().compare(b.as_string()) <=> 0;
}

FrameRecord::FrameRecord(std::size_t index, std::string description,
                         std::vector<double> embedding)
    : index_(index),
      description_(std::move(description)),
      embedding_(std::move(embedding)) {
  if (embedding_.empty()) reject("FrameRecord.embedding", "empty vector");
  require_finite_vector("FrameRecord.embedding", embedding_);
  bool all_zero = true;
  for (double x : embedding_) all_zero = all_zero && x == 0.0;
  if (all_zero) reject("FrameRecord.embedding", "all-zero vector");
}

VideoFeatureSet::VideoFeatureSet(std::string video_id, double duration_s,
                                 double clip_stride_s,
                                 std::vector<FrameRecord> frames)
    : video_id_(std::move(video_id)),
      duration_s_(duration_s),
      clip_stride_s_(clip_stride_s),
      frames_(std::move(frames)) {
  if (!std::isfinite(clip_stride_s_) || clip_stride_s_ <= 0.0) {
    reject("VideoFeatureSet.clip_stride_s", "must be positive, got " +
                                                number(clip_stride_s_));
  }
  if (!std::isfinite(duration_s_) || duration_s_ < 0.0) {
    reject("VideoFeatureSet.duration_s",
           "must be nonnegative, got " + number(duration_s_));
  }
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    if (frames_[i].index() != i) {
      reject("VideoFeatureSet.frames",
             "frame at position " + std::to_string(i) + " has index " +
                 std::to_string(frames_[i].index()) +
                 " (indices must run 0, 1, 2, ...)");
    }
    if (frames_[i].embedding().size() != frames_[0].embedding().size()) {
      reject("VideoFeatureSet.frames",
             "frame " + std::to_string(i) + " has dimension " +
                 std::to_string(frames_[i].embedding().size()) +
                 ", expected " + std::to_string(frames_[0].embedding().size()));
    }
  }
  const double covered = static_cast<double>(frames_.size()) * clip_stride_s_;
  if (covered < duration_s_ - clip_stride_s_ - kTimeSlack) {
    reject("VideoFeatureSet.frames",
           std::to_string(frames_.size()) + " frames cover " + number(covered) +
               " s, duration " + number(duration_s_) +
               " s leaves more than one clip uncovered");
  }
}

std::size_t VideoFeatureSet::dim() const {
  return frames_.empty() ? 0 : frames_.front().embedding().size();
}

QueryRewrite::QueryRewrite(std::string text, std::vector<double> embedding,
                           std::optional<double> quality)
    : text_(std::move(text)),
      embedding_(std::move(embedding)),
      quality_(quality) {
  if (embedding_.empty()) reject("QueryRewrite.embedding", "empty vector");
  require_finite_vector("QueryRewrite.embedding", embedding_);
  if (quality_ && !(*quality_ >= 0.0 && *quality_ <= 1.0)) {
    reject("QueryRewrite.quality", "must lie in [0,1], got " + number(*quality_));
  }
}

QueryBundle::QueryBundle(QueryId qid, std::string video_id,
                         std::string original_text,
                         std::vector<double> original_embedding,
                         std::vector<QueryRewrite> rewrites)
    : qid_(std::move(qid)),
      video_id_(std::move(video_id)),
      original_text_(std::move(original_text)),
      original_embedding_(std::move(original_embedding)),
      rewrites_(std::move(rewrites)) {
  require_finite_vector("QueryBundle.original_embedding", original_embedding_);
}

SimilarityProfile::SimilarityProfile(std::string video_id, QueryId qid,
                                     double clip_stride_s, double duration_s,
                                     std::vector<double> scores,
                                     double threshold, std::vector<bool> marks)
    : video_id_(std::move(video_id)),
      qid_(std::move(qid)),
      clip_stride_s_(clip_stride_s),
      duration_s_(duration_s),
      scores_(std::move(scores)),
      threshold_(threshold),
      marks_(std::move(marks)) {
  if (!std::isfinite(clip_stride_s_) || clip_stride_s_ <= 0.0) {
    reject("SimilarityProfile.clip_stride_s", "must be positive");
  }
  if (!std::isfinite(duration_s_) || duration_s_ < 0.0) {
    reject("SimilarityProfile.duration_s", "must be nonnegative");
  }
  if (!std::isfinite(threshold_)) {
    reject("SimilarityProfile.threshold", "not finite");
  }
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    if (!(scores_[i] >= -1.0 && scores_[i] <= 1.0)) {
      reject("SimilarityProfile.scores",
             "entry " + std::to_string(i) + " = " + number(scores_[i]) +
                 " outside [-1,1]");
    }
  }
  if (marks_.size() != scores_.size()) {
    reject("SimilarityProfile.marks",
           "length " + std::to_string(marks_.size()) + " != scores length " +
               std::to_string(scores_.size()));
  }
  for (std::size_t i = 0; i < scores_.size(); ++i) {
    if (marks_[i] != (scores_[i] > threshold_)) {
      reject("SimilarityProfile.marks",
             "entry " + std::to_string(i) +
                 " disagrees with score > threshold");
    }
  }
}

SpanAnchor::SpanAnchor(double start_s, double end_s, double mean_score)
    : start_s_(start_s), end_s_(end_s), mean_score_(mean_score) {
  if (!std::isfinite(start_s_) || start_s_ < 0.0) {
    reject("SpanAnchor.start_s", "must be finite and >= 0, got " + number(start_s_));
  }
  if (!std::isfinite(end_s_) || end_s_ <= start_s_) {
    reject("SpanAnchor.end_s", "must exceed start_s, got " + number(end_s_));
  }
  if (!(mean_score_ >= -1.0 && mean_score_ <= 1.0)) {
    reject("SpanAnchor.mean_score", "outside [-1,1]: " + number(mean_score_));
  }
}

void validate_anchor_list(std::span<const SpanAnchor> anchors,
                          double duration_s, double clip_stride_s) {
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (anchors[i].end_s() > duration_s + clip_stride_s + kTimeSlack) {
      reject("SpanAnchor.end_s", "anchor " + std::to_string(i) + " ends at " +
                                     number(anchors[i].end_s()) +
                                     ", past duration + stride");
    }
    if (i > 0 && anchors[i].start_s() < anchors[i - 1].end_s()) {
      reject("SpanAnchor.start_s", "anchor " + std::to_string(i) +
                                       " overlaps or precedes its predecessor");
    }
  }
}

MomentPrediction::MomentPrediction(double start_s, double end_s,
                                   double confidence)
    : start_s_(start_s), end_s_(end_s), confidence_(confidence) {
  if (!std::isfinite(start_s_)) reject("MomentPrediction.start_s", "not finite");
  if (!std::isfinite(end_s_) || end_s_ <= start_s_) {
    reject("MomentPrediction.end_s", "must exceed start_s, got " + number(end_s_));
  }
  if (!std::isfinite(confidence_)) {
    reject("MomentPrediction.confidence", "not finite");
  }
}

TimeWindow::TimeWindow(double start_s, double end_s)
    : start_s_(start_s), end_s_(end_s) {
  if (!std::isfinite(start_s_) || start_s_ < 0.0) {
    reject("TimeWindow.start_s", "must be finite and >= 0, got " + number(start_s_));
  }
  if (!std::isfinite(end_s_) || end_s_ <= start_s_) {
    reject("TimeWindow.end_s", "must exceed start_s, got " + number(end_s_));
  }
}

GroundTruth::GroundTruth(QueryId qid, std::string video_id, std::string query,
                         double duration_s, double clip_stride_s,
                         std::vector<TimeWindow> relevant_windows,
                         std::vector<int> saliency)
    : qid_(std::move(qid)),
      video_id_(std::move(video_id)),
      query_(std::move(query)),
      duration_s_(duration_s),
      clip_stride_s_(clip_stride_s),
      relevant_windows_(std::move(relevant_windows)),
      saliency_(std::move(saliency)) {
  if (!std::isfinite(duration_s_) || duration_s_ < 0.0) {
    reject("GroundTruth.duration", "must be nonnegative, got " + number(duration_s_));
  }
  if (!std::isfinite(clip_stride_s_) || clip_stride_s_ <= 0.0) {
    reject("GroundTruth.clip_stride_s", "must be positive");
  }
  for (std::size_t i = 0; i < relevant_windows_.size(); ++i) {
    if (relevant_windows_[i].end_s() >
        duration_s_ + clip_stride_s_ + kTimeSlack) {
      reject("GroundTruth.relevant_windows",
             "window " + std::to_string(i) + " ends at " +
                 number(relevant_windows_[i].end_s()) +
                 ", past duration + stride");
    }
  }
  for (std::size_t i = 0; i < saliency_.size(); ++i) {
    if (saliency_[i] < 0) {
      reject("GroundTruth.saliency",
             "clip " + std::to_string(i) + " has negative label");
    }
  }
}

void LossWeights::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"LossWeights.lambda_l1", lambda_l1}, {"LossWeights.lambda_iou", lambda_iou},
      {"LossWeights.lambda_cls", lambda_cls}, {"LossWeights.lambda_h", lambda_h},
      {"LossWeights.w_p", w_p}, {"LossWeights.delta", delta},
  };
  for (const auto& [name, value] : fields) {
    if (!std::isfinite(value) || value < 0.0) {
      reject(name, "must be finite and nonnegative, got " + number(value));
    }
  }
}

}  // namespace spanscope
