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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

// Runs `fn` and checks that it throws a ValidationError mentioning `field`.
void ExpectRejects(const std::function<void()>& fn, const std::string& field) {
  try {
    fn();
    ADD_FAILURE() << "expected a ValidationError naming " << field;
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  }
}

std::vector<FrameRecord> frames(std::size_t n) {
  std::vector<FrameRecord> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(i, "f", std::vector<double>{1.0, 0.0});
  return out;
}

TEST(QueryId, IntegersOrderBeforeStrings) {
  EXPECT_LT(QueryId(5), QueryId(7));
  EXPECT_LT(QueryId(1000), QueryId("a"));
  EXPECT_LT(QueryId("a"), QueryId("b"));
  EXPECT_EQ(QueryId(42).to_string(), "42");
  EXPECT_EQ(QueryId("q7").to_string(), "q7");
  EXPECT_NE(QueryId(42), QueryId("42"));
}

TEST(FrameRecord, RejectsDegenerateEmbeddings) {
  ExpectRejects([] { FrameRecord(0, "x", {}); }, "FrameRecord.embedding");
  ExpectRejects([] { FrameRecord(0, "x", {0.0, 0.0}); }, "FrameRecord.embedding");
  ExpectRejects([] { FrameRecord(0, "x", {std::nan(""), 1.0}); },
                "FrameRecord.embedding");
}

TEST(VideoFeatureSet, AcceptsWellFormedInput) {
  const VideoFeatureSet v("vid", 10.0, 2.0, frames(5));
  EXPECT_EQ(v.frame_count(), 5u);
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_EQ(VideoFeatureSet("empty", 0.0, 2.0, {}).dim(), 0u);
}

TEST(VideoFeatureSet, RejectsBadFields) {
  ExpectRejects([] { VideoFeatureSet("v", 10.0, 0.0, frames(5)); },
                "VideoFeatureSet.clip_stride_s");
  ExpectRejects([] { VideoFeatureSet("v", -1.0, 2.0, frames(5)); },
                "VideoFeatureSet.duration_s");
  // Too few frames for the duration.
  ExpectRejects([] { VideoFeatureSet("v", 20.0, 2.0, frames(5)); },
                "VideoFeatureSet.frames");
}

TEST(VideoFeatureSet, RejectsOutOfOrderIndices) {
  std::vector<FrameRecord> f;
  f.emplace_back(0, "a", std::vector<double>{1.0});
  f.emplace_back(2, "b", std::vector<double>{1.0});
  ExpectRejects([&] { VideoFeatureSet("v", 4.0, 2.0, f); }, "VideoFeatureSet.frames");
}

TEST(VideoFeatureSet, RejectsMixedDimensions) {
  std::vector<FrameRecord> f;
  f.emplace_back(0, "a", std::vector<double>{1.0, 0.0});
  f.emplace_back(1, "b", std::vector<double>{1.0});
  ExpectRejects([&] { VideoFeatureSet("v", 4.0, 2.0, f); }, "VideoFeatureSet.frames");
}

TEST(QueryRewrite, QualityMustBeProbability) {
  ExpectRejects([] { QueryRewrite("r", {1.0}, 1.5); }, "QueryRewrite.quality");
  ExpectRejects([] { QueryRewrite("r", {}, 0.5); }, "QueryRewrite.embedding");
  EXPECT_EQ(QueryRewrite("r", {1.0}, 0.5).quality(), 0.5);
}

TEST(SimilarityProfile, MarksMustAgreeWithThreshold) {
  EXPECT_NO_THROW(SimilarityProfile("v", 1, 2.0, 6.0, {0.1, 0.5, 0.2}, 0.3,
                                    {false, true, false}));
  ExpectRejects(
      [] { SimilarityProfile("v", 1, 2.0, 6.0, {0.1, 0.5, 0.2}, 0.3, {true, true, false}); },
      "SimilarityProfile.marks");
  ExpectRejects([] { SimilarityProfile("v", 1, 2.0, 6.0, {0.1, 0.5}, 0.3, {false}); },
                "SimilarityProfile.marks");
  ExpectRejects([] { SimilarityProfile("v", 1, 2.0, 6.0, {1.5}, 0.3, {true}); },
                "SimilarityProfile.scores");
}

TEST(SpanAnchor, RejectsBadIntervals) {
  ExpectRejects([] { SpanAnchor(-1.0, 2.0, 0.5); }, "SpanAnchor.start_s");
  ExpectRejects([] { SpanAnchor(4.0, 4.0, 0.5); }, "SpanAnchor.end_s");
  ExpectRejects([] { SpanAnchor(0.0, 2.0, 1.5); }, "SpanAnchor.mean_score");
}

TEST(AnchorList, MustBeSortedDisjointAndInsideVideo) {
  const std::vector<SpanAnchor> ok = {SpanAnchor(0, 4, 0.5), SpanAnchor(4, 8, 0.4)};
  EXPECT_NO_THROW(validate_anchor_list(ok, 8.0, 2.0));
  const std::vector<SpanAnchor> overlap = {SpanAnchor(0, 4, 0.5), SpanAnchor(2, 8, 0.4)};
  ExpectRejects([&] { validate_anchor_list(overlap, 8.0, 2.0); }, "SpanAnchor.start_s");
  const std::vector<SpanAnchor> past = {SpanAnchor(0, 12, 0.5)};
  ExpectRejects([&] { validate_anchor_list(past, 8.0, 2.0); }, "SpanAnchor.end_s");
}

TEST(MomentPrediction, RejectsEmptyOrNonFinite) {
  ExpectRejects([] { MomentPrediction(3.0, 3.0, 0.1); }, "MomentPrediction.end_s");
  ExpectRejects([] { MomentPrediction(0.0, 3.0, std::numeric_limits<double>::infinity()); },
                "MomentPrediction.confidence");
}

TEST(TimeWindow, RejectsEmptyWindow) {
  ExpectRejects([] { TimeWindow(5.0, 5.0); }, "TimeWindow.end_s");
  ExpectRejects([] { TimeWindow(-2.0, 5.0); }, "TimeWindow.start_s");
  EXPECT_EQ(TimeWindow(2.0, 5.0).length(), 3.0);
}

TEST(GroundTruth, RejectsInconsistentFields) {
  ExpectRejects([] { GroundTruth(1, "v", "q", -1.0, 2.0, {}, {}); }, "GroundTruth.duration");
  ExpectRejects([] { GroundTruth(1, "v", "q", 10.0, 2.0, {TimeWindow(0, 40)}, {}); },
                "GroundTruth.relevant_windows");
  ExpectRejects([] { GroundTruth(1, "v", "q", 10.0, 2.0, {}, {1, -1}); },
                "GroundTruth.saliency");
}

TEST(LossWeights, DefaultsAndValidation) {
  const LossWeights w;
  EXPECT_EQ(w.lambda_l1, 10.0);
  EXPECT_EQ(w.lambda_iou, 1.0);
  EXPECT_EQ(w.lambda_cls, 4.0);
  EXPECT_EQ(w.lambda_h, 1.0);
  EXPECT_EQ(w.w_p, 10.0);
  EXPECT_EQ(w.delta, 0.2);
  EXPECT_NO_THROW(w.validate());
  LossWeights bad;
  bad.w_p = -1.0;
  ExpectRejects([&] { bad.validate(); }, "LossWeights.w_p");
}

}  // namespace
}  // namespace spanscope
