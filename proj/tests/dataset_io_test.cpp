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
#include "spanscope/dataset_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "spanscope/error.hpp"
#include "spanscope/pipeline.hpp"
#include "test_support.hpp"

namespace spanscope {
namespace {

namespace fs = std::filesystem;

// Fresh scratch directory, removed on destruction.
class ScratchDir {
 public:
  ScratchDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("spanscope_io_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

std::vector<GroundTruth> annotations_from(const std::string& text) {
  std::istringstream in(text);
  return parse_annotations(in, "mem.jsonl");
}

constexpr const char* kSampleLine =
    R"({"qid": 8737, "query": "A family is playing basketball together on a green court outside.", )"
    R"("duration": 126, "vid": "bP5KfdFJzC4_660.0_810.0", "relevant_windows": [[0, 16]], )"
    R"("relevant_clip_ids": [0, 1, 2, 3, 4, 5, 6, 7], )"
    R"("saliency_scores": [[4, 1, 1], [4, 1, 1], [4, 2, 1], [4, 3, 2], [4, 3, 2], [4, 3, 3], [4, 3, 3], [4, 3, 2]]})";

TEST(Annotations, ParsesBenchmarkLayout) {
  const auto gts = annotations_from(kSampleLine);
  ASSERT_EQ(gts.size(), 1u);
  const GroundTruth& gt = gts[0];
  EXPECT_EQ(gt.qid(), QueryId(8737));
  EXPECT_EQ(gt.video_id(), "bP5KfdFJzC4_660.0_810.0");
  EXPECT_EQ(gt.duration_s(), 126.0);
  ASSERT_EQ(gt.relevant_windows().size(), 1u);
  EXPECT_EQ(gt.relevant_windows()[0], TimeWindow(0, 16));
  ASSERT_EQ(gt.saliency().size(), 63u);
  // Mean of the three annotators, rounded.
  const std::vector<int> head = {2, 2, 2, 3, 3, 3, 3, 3};
  for (std::size_t i = 0; i < head.size(); ++i) EXPECT_EQ(gt.saliency()[i], head[i]) << i;
  for (std::size_t i = head.size(); i < 63; ++i) EXPECT_EQ(gt.saliency()[i], 0);
}

TEST(Annotations, MissingDurationNamesFieldAndLine) {
  const std::string text =
      std::string(kSampleLine) + "\n" +
      R"({"qid": 2, "query": "q", "vid": "v", "relevant_windows": [[0, 2]]})" + "\n";
  const std::string msg = error_of([&] { annotations_from(text); });
  EXPECT_NE(msg.find("mem.jsonl:2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("duration"), std::string::npos) << msg;
}

TEST(Annotations, RejectsMalformedInput) {
  EXPECT_NE(error_of([] { annotations_from("{not json"); }).find("mem.jsonl:1"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              annotations_from(
                  R"({"qid": 1, "query": "q", "vid": "v", "duration": 10, "relevant_windows": [[4, 2]]})");
            }).find("relevant_windows"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              annotations_from(
                  R"({"qid": 1, "query": "q", "vid": "v", "duration": 10, "relevant_windows": [[0, 2]], )"
                  R"("relevant_clip_ids": [0, 1], "saliency_scores": [[1, 1, 1]]})");
            }).find("relevant_clip_ids"),
            std::string::npos);
}

TEST(Annotations, BlankLinesAndStringIdsAreAccepted) {
  const auto gts = annotations_from(
      "\n" R"({"qid": "q-1", "query": "q", "vid": "v", "duration": 10, "relevant_windows": []})"
      "\n\n");
  ASSERT_EQ(gts.size(), 1u);
  EXPECT_EQ(gts[0].qid(), QueryId("q-1"));
  EXPECT_TRUE(gts[0].relevant_windows().empty());
  EXPECT_TRUE(gts[0].saliency().empty());
}

// Replaces, deletes, or inserts random characters of a valid document.
std::string mutate(std::string text, std::mt19937_64& rng) {
  static const std::string kAlphabet = "{}[]\",:0123456789.-eE truefalsnul\\";
  std::uniform_int_distribution<int> edits(1, 4);
  std::uniform_int_distribution<int> op(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  for (int k = edits(rng); k > 0 && !text.empty(); --k) {
    std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
    const std::size_t at = pos(rng);
    switch (op(rng)) {
      case 0: text[at] = kAlphabet[pick(rng)]; break;
      case 1: text.erase(at, 1); break;
      default: text.insert(at, 1, kAlphabet[pick(rng)]); break;
    }
  }
  return text;
}

// Parsing a mutated document either succeeds or fails with a located
// ValidationError; any other exception escapes and fails the test.
template <typename Parse>
void ExpectOnlyLocatedErrors(const std::string& valid, const char* source, Parse parse) {
  std::mt19937_64 rng(std::hash<std::string>{}(valid));
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string text = mutate(valid, rng);
    std::istringstream in(text);
    try {
      parse(in);
    } catch (const ValidationError& e) {
      EXPECT_EQ(std::string(e.what()).rfind(std::string(source) + ":", 0), 0u)
          << e.what() << "\n" << text;
    }
  }
}

TEST(Loaders, MutatedInputOnlyRaisesLocatedValidationErrors) {
  ExpectOnlyLocatedErrors(kSampleLine, "a.jsonl",
                          [](std::istream& in) { parse_annotations(in, "a.jsonl"); });
  ExpectOnlyLocatedErrors(
      R"({"kind": "query", "dim": 2, "qid": 4})"
      "\n"
      R"({"role": "original", "text": "q", "embedding": [1, 0]})"
      "\n"
      R"({"role": "rewrite", "text": "r", "embedding": [0.5, 0.5], "quality": 0.5})",
      "f.jsonl", [](std::istream& in) { parse_features(in, "f.jsonl", "f"); });
  ExpectOnlyLocatedErrors(
      R"({"qid": 1, "vid": "v", "stride_s": 2, "duration_s": 4, "threshold": 0.5, )"
      R"("max_gap": 5, "anchors": [[0, 2, 0.9]]})",
      "x.jsonl", [](std::istream& in) { parse_anchors(in, "x.jsonl"); });
  ExpectOnlyLocatedErrors(
      R"({"qid": 1, "pred_relevant_windows": [[0, 2, 0.9]], "pred_saliency_scores": [0.1, 0.2]})",
      "p.jsonl", [](std::istream& in) { parse_predictions(in, "p.jsonl"); });
}

TEST(Annotations, RoundTripThroughFile) {
  ScratchDir dir;
  const auto gts = annotations_from(kSampleLine);
  save_annotations(gts, dir.path() / "a.jsonl");
  const auto back = load_annotations(dir.path() / "a.jsonl");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].qid(), gts[0].qid());
  EXPECT_EQ(back[0].relevant_windows(), gts[0].relevant_windows());
  EXPECT_EQ(back[0].saliency(), gts[0].saliency());
}

TEST(Annotations, MissingFileIsAnIoError) {
  EXPECT_THROW(load_annotations("/nonexistent/annotations.jsonl"), IoError);
}

TEST(Features, VideoDimensionMismatchNamesBothDims) {
  std::istringstream in(
      R"({"kind": "video", "dim": 4, "stride_s": 2.0})"
      "\n"
      R"({"index": 0, "text": "a", "embedding": [1, 0, 0]})"
      "\n");
  const std::string msg = error_of([&] { parse_features(in, "v.jsonl", "v"); });
  EXPECT_NE(msg.find("v.jsonl:2"), std::string::npos) << msg;
  EXPECT_NE(msg.find('3'), std::string::npos) << msg;
  EXPECT_NE(msg.find('4'), std::string::npos) << msg;
}

TEST(Features, IdsDefaultToFileStem) {
  std::istringstream video(R"({"kind": "video", "dim": 2})"
                           "\n"
                           R"({"index": 0, "embedding": [1, 0]})");
  const auto v = std::get<VideoFeatureSet>(parse_features(video, "clip.jsonl", "clip"));
  EXPECT_EQ(v.video_id(), "clip");
  EXPECT_EQ(v.clip_stride_s(), 2.0);
  EXPECT_EQ(v.duration_s(), 2.0);

  std::istringstream query(R"({"kind": "query", "dim": 2})"
                           "\n"
                           R"({"role": "original", "text": "q", "embedding": [1, 0]})");
  const auto q = std::get<QueryBundle>(parse_features(query, "77.jsonl", "77"));
  EXPECT_EQ(q.qid(), QueryId(77));
  EXPECT_TRUE(q.video_id().empty());
}

TEST(Features, RejectsUnknownKindAndRole) {
  std::istringstream bad_kind(R"({"kind": "audio", "dim": 2})");
  EXPECT_NE(error_of([&] { parse_features(bad_kind, "x", "x"); }).find("kind"),
            std::string::npos);
  std::istringstream bad_role(R"({"kind": "query", "dim": 1})"
                              "\n"
                              R"({"role": "other", "text": "q", "embedding": [1]})");
  EXPECT_NE(error_of([&] { parse_features(bad_role, "x", "x"); }).find("role"),
            std::string::npos);
}

TEST(Features, RoundTripThroughFile) {
  ScratchDir dir;
  const auto video = testing::make_video({{0.1, 0.2}, {0.3, -0.4}, {1e-3, 5.0}}, "vv");
  save_features(video, dir.path() / "vv.jsonl");
  const auto v = load_video_features(dir.path() / "vv.jsonl");
  EXPECT_EQ(serialize_features(v), serialize_features(video));

  std::vector<QueryRewrite> rewrites;
  rewrites.emplace_back("r", std::vector<double>{0.5, 0.25}, 0.75);
  const QueryBundle query("q9", "vv", "orig", {1.0, 2.0}, std::move(rewrites));
  save_features(query, dir.path() / "q9.jsonl");
  const auto q = load_query_features(dir.path() / "q9.jsonl");
  EXPECT_EQ(serialize_features(q), serialize_features(query));
  EXPECT_EQ(q.rewrites().at(0).quality(), 0.75);
  EXPECT_THROW(load_video_features(dir.path() / "q9.jsonl"), ValidationError);
}

TEST(Features, HeaderOnlyFileIsValidAndEmpty) {
  std::istringstream in(R"({"kind": "video", "dim": 8, "vid": "none", "duration_s": 0})");
  const auto v = std::get<VideoFeatureSet>(parse_features(in, "none.jsonl", "none"));
  EXPECT_EQ(v.frame_count(), 0u);
  EXPECT_EQ(serialize_features(v), serialize_features(VideoFeatureSet("none", 0.0, 2.0, {})));
}

TEST(Features, ExternallyWrittenFixturesLoad) {
  // The fixture files are produced by a separate Python writer.
  std::size_t count = 0;
  for (const char* sub : {"toy/videos", "toy/queries", "toy_shuffled/videos"}) {
    for (const auto& entry : fs::directory_iterator(fs::path(SPANSCOPE_FIXTURE_DIR) / sub)) {
      EXPECT_NO_THROW(load_features(entry.path())) << entry.path();
      ++count;
    }
  }
  EXPECT_EQ(count, 9u);
}

TEST(Stages, ProfilesAnchorsPredictionsRoundTrip) {
  ScratchDir dir;
  const auto profile = make_profile("v", 5, 2.0, 8.0, {0.1, 0.5, 0.6, 0.2});
  save_profiles({profile}, dir.path() / "p.jsonl");
  const auto profiles = load_profiles(dir.path() / "p.jsonl");
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(serialize_profiles(profiles), serialize_profiles({profile}));

  const auto records = extract_anchor_records(profiles);
  save_anchors(records, dir.path() / "a.jsonl");
  const auto anchors = load_anchors(dir.path() / "a.jsonl");
  EXPECT_EQ(serialize_anchors(anchors), serialize_anchors(records));

  const auto preds = predict_all(anchors, profiles);
  save_predictions(preds, dir.path() / "pred.jsonl");
  const auto back = load_predictions(dir.path() / "pred.jsonl");
  EXPECT_EQ(serialize_predictions(back), serialize_predictions(preds));
}

TEST(Stages, ProfileMarksMustAgreeWithThreshold) {
  std::istringstream in(
      R"({"qid": 1, "vid": "v", "stride_s": 2, "duration_s": 4, "threshold": 0.5, )"
      R"("scores": [0.1, 0.9], "marks": [true, true]})");
  EXPECT_NE(error_of([&] { parse_profiles(in, "p"); }).find("marks"), std::string::npos);
}

TEST(Predictions, EmptyListGivesEmptyFile) {
  ScratchDir dir;
  save_predictions({}, dir.path() / "empty.jsonl");
  EXPECT_EQ(fs::file_size(dir.path() / "empty.jsonl"), 0u);
  EXPECT_TRUE(load_predictions(dir.path() / "empty.jsonl").empty());
}

TEST(Predictions, FileEvaluationEqualsInMemory) {
  ScratchDir dir;
  const auto gts = annotations_from(kSampleLine);
  std::vector<double> saliency(63, 0.1);
  saliency[5] = 0.9;
  const std::vector<QueryPrediction> preds = {
      {8737, {MomentPrediction(0, 14, 0.8), MomentPrediction(20, 40, 0.3)}, saliency}};
  save_predictions(preds, dir.path() / "p.jsonl");
  const auto loaded = load_predictions(dir.path() / "p.jsonl");
  EXPECT_EQ(report_to_json(evaluate(loaded, gts)), report_to_json(evaluate(preds, gts)));
}

TEST(Report, JsonHasHeadlineKeysAndTextIsKeyValue) {
  EvalReport r;
  r.mr_map_avg = 0.25;
  r.hd_hit1 = 1.0;
  const std::string json = report_to_json(r);
  for (const char* key : {"\"mr_r1_0.5\"", "\"mr_r1_0.7\"", "\"mr_map_0.5\"", "\"mr_map_0.75\"",
                          "\"mr_map_avg\"", "\"hd_map\"", "\"hd_hit1\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
  const std::string text = report_to_text(r);
  EXPECT_NE(text.find("mr_map_avg=0.25\n"), std::string::npos) << text;
  EXPECT_NE(text.find("hd_hit1=1.0\n"), std::string::npos) << text;
}

}  // namespace
}  // namespace spanscope
