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
#ifndef SPANSCOPE_DATASET_IO_HPP_
#define SPANSCOPE_DATASET_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spanscope/anchors.hpp"
#include "spanscope/core_types.hpp"
#include "spanscope/metrics.hpp"

// All interchange files are JSON Lines. Parse failures throw ValidationError
// carrying "<source>:<line>: ..." and naming the offending field; files that
// cannot be opened or written throw IoError.
namespace spanscope {

using FeatureFile = std::variant<VideoFeatureSet, QueryBundle>;

// Annotation lines follow the QVHighlights layout:
//   {"qid", "vid", "query", "duration", "relevant_windows",
//    "saliency_scores"?, "relevant_clip_ids"?}
// Multi-annotator saliency is reduced per clip by mean-then-round. Clips not
// listed in relevant_clip_ids get label 0.
std::vector<GroundTruth> parse_annotations(std::istream& in, std::string_view source,
                                           double clip_stride_s = kDefaultClipStride);
std::vector<GroundTruth> load_annotations(const std::filesystem::path& path,
                                          double clip_stride_s = kDefaultClipStride);
void save_annotations(const std::vector<GroundTruth>& gts,
                      const std::filesystem::path& path);

// Feature files start with a header line
//   {"kind": "video"|"query", "dim": d, "stride_s": s, "vid": ..., ...}
// followed by one record per frame or per query text. The video id and qid
// default to the file stem.
FeatureFile parse_features(std::istream& in, std::string_view source,
                           std::string_view default_id);
FeatureFile load_features(const std::filesystem::path& path);
VideoFeatureSet load_video_features(const std::filesystem::path& path);
QueryBundle load_query_features(const std::filesystem::path& path);
std::string serialize_features(const VideoFeatureSet& video);
std::string serialize_features(const QueryBundle& query);
void save_features(const VideoFeatureSet& video, const std::filesystem::path& path);
void save_features(const QueryBundle& query, const std::filesystem::path& path);

std::string serialize_profiles(const std::vector<SimilarityProfile>& profiles);
std::vector<SimilarityProfile> parse_profiles(std::istream& in, std::string_view source);
void save_profiles(const std::vector<SimilarityProfile>& profiles,
                   const std::filesystem::path& path);
std::vector<SimilarityProfile> load_profiles(const std::filesystem::path& path);

std::string serialize_anchors(const std::vector<AnchorRecord>& records);
std::vector<AnchorRecord> parse_anchors(std::istream& in, std::string_view source);
void save_anchors(const std::vector<AnchorRecord>& records,
                  const std::filesystem::path& path);
std::vector<AnchorRecord> load_anchors(const std::filesystem::path& path);

// {"qid", "pred_relevant_windows": [[s, e, conf], ...], "pred_saliency_scores"}
std::string serialize_predictions(const std::vector<QueryPrediction>& preds);
std::vector<QueryPrediction> parse_predictions(std::istream& in, std::string_view source);
void save_predictions(const std::vector<QueryPrediction>& preds,
                      const std::filesystem::path& path);
std::vector<QueryPrediction> load_predictions(const std::filesystem::path& path);

std::string report_to_json(const EvalReport& report);
// One "key=value" line per headline metric.
std::string report_to_text(const EvalReport& report);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace spanscope

#endif  // SPANSCOPE_DATASET_IO_HPP_
