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
#include "spanscope/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "spanscope/error.hpp"

namespace spanscope {
namespace {

using PairKey = std::pair<QueryId, std::string>;

template <typename T, typename KeyFn>
std::vector<std::size_t> canonical_order(const std::vector<T>& items, KeyFn key) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(items[a]) < key(items[b]); });
  return order;
}

}  // namespace

std::vector<SimilarityProfile> compute_profiles(std::span<const VideoFeatureSet> videos,
                                                std::span<const QueryBundle> queries,
                                                const ProfileOptions& options) {
  std::map<std::string, const VideoFeatureSet*> by_id;
  for (const auto& v : videos) {
    if (!by_id.emplace(v.video_id(), &v).second) {
      throw ValidationError("duplicate video id '" + v.video_id() + "'");
    }
  }
  std::map<QueryId, bool> seen;
  std::vector<std::pair<const QueryBundle*, const VideoFeatureSet*>> pairs;
  for (const auto& q : queries) {
    if (!seen.emplace(q.qid(), true).second) {
      throw ValidationError("duplicate qid " + q.qid().to_string());
    }
    const VideoFeatureSet* video = nullptr;
    if (!q.video_id().empty()) {
      const auto it = by_id.find(q.video_id());
      if (it == by_id.end()) {
        throw ValidationError("query " + q.qid().to_string() + " refers to unknown video '" +
                              q.video_id() + "'");
      }
      video = it->second;
    } else if (videos.size() == 1) {
      video = &videos.front();
    } else {
      throw ValidationError("query " + q.qid().to_string() +
                            " names no video and " + std::to_string(videos.size()) +
                            " videos were given");
    }
    pairs.emplace_back(&q, video);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.first->qid() < b.first->qid();
  });

  std::vector<std::optional<SimilarityProfile>> slots(pairs.size());
  internal::parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const auto& [query, video] = pairs[i];
    slots[i].emplace(make_profile(video->video_id(), query->qid(), video->clip_stride_s(),
                                  video->duration_s(),
                                  score_profile(*video, *query, options.score),
                                  options.quantization));
  });
  std::vector<SimilarityProfile> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<AnchorRecord> extract_anchor_records(
    std::span<const SimilarityProfile> profiles, const AnchorOptions& options) {
  std::vector<SimilarityProfile> items(profiles.begin(), profiles.end());
  const auto order = canonical_order(items, [](const SimilarityProfile& p) {
    return PairKey(p.qid(), p.video_id());
  });
  std::vector<AnchorRecord> out(items.size());
  internal::parallel_for(order.size(), options.jobs, [&](std::size_t i) {
    const SimilarityProfile& p = items[order[i]];
    const double threshold = select_threshold(p.scores(), options.quantization);
    AnchorRecord& r = out[i];
    r.qid = p.qid();
    r.video_id = p.video_id();
    r.clip_stride_s = p.clip_stride_s();
    r.duration_s = p.duration_s();
    r.threshold = threshold;
    r.max_gap = options.max_gap;
    r.anchors = extract_anchors(mark(p.scores(), threshold), p.scores(),
                                p.clip_stride_s(), options.max_gap);
  });
  return out;
}

std::vector<QueryPrediction> predict_all(std::span<const AnchorRecord> anchors,
                                         std::span<const SimilarityProfile> profiles,
                                         const PredictOptions& options) {
  if (options.top_k == 0) throw ValidationError("top_k must be positive");
  std::map<QueryId, const SimilarityProfile*> profile_by_qid;
  for (const auto& p : profiles) {
    if (!profile_by_qid.emplace(p.qid(), &p).second) {
      throw ValidationError("profiles: duplicate qid " + p.qid().to_string());
    }
  }
  std::map<QueryId, const AnchorRecord*> anchors_by_qid;
  for (const auto& a : anchors) {
    if (!anchors_by_qid.emplace(a.qid, &a).second) {
      throw ValidationError("anchors: duplicate qid " + a.qid.to_string());
    }
    const auto it = profile_by_qid.find(a.qid);
    if (it == profile_by_qid.end() || it->second->video_id() != a.video_id) {
      throw ValidationError("anchors for qid " + a.qid.to_string() + " / video '" +
                            a.video_id + "' have no matching profile");
    }
  }
  if (anchors_by_qid.size() != profile_by_qid.size()) {
    for (const auto& [qid, p] : profile_by_qid) {
      if (!anchors_by_qid.contains(qid)) {
        throw ValidationError("profile for qid " + qid.to_string() + " has no anchors record");
      }
    }
  }

  std::vector<const AnchorRecord*> ordered;
  for (const auto& [qid, a] : anchors_by_qid) ordered.push_back(a);
  std::vector<QueryPrediction> out(ordered.size());
  internal::parallel_for(ordered.size(), options.jobs, [&](std::size_t i) {
    const AnchorRecord& a = *ordered[i];
    const SimilarityProfile& p = *profile_by_qid.at(a.qid);
    out[i].qid = a.qid;
    out[i].windows = predict_moments(a.anchors, p, options.confidence, options.top_k);
    out[i].saliency = predict_highlights(p);
  });
  return out;
}

}  // namespace spanscope
