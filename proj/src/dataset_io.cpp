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

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "spanscope/error.hpp"

namespace spanscope {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Location of the line being parsed, for diagnostics.
class Where {
 public:
  Where(std::string_view source, std::size_t line) : source_(source), line_(line) {}

  [[noreturn]] void fail(std::string_view field, const std::string& why) const {
    throw ValidationError(prefix() + "field '" + std::string(field) + "': " + why);
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError(prefix() + why);
  }
  std::string prefix() const {
    return std::string(source_) + ":" + std::to_string(line_) + ": ";
  }

 private:
  std::string_view source_;
  std::size_t line_;
};

struct Line {
  std::size_t number;
  Json value;
};

// Non-blank lines of a JSONL stream, each parsed as a JSON object.
std::vector<Line> read_jsonl(std::istream& in, std::string_view source) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    const Where where(source, number);
    Json value = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) where.fail("malformed JSON");
    if (!value.is_object()) where.fail("expected a JSON object");
    lines.push_back({number, std::move(value)});
  }
  if (in.bad()) throw IoError(std::string(source) + ": read error");
  return lines;
}

const Json& require(const Json& obj, std::string_view field, const Where& where) {
  const auto it = obj.find(field);
  if (it == obj.end()) where.fail(field, "missing");
  return *it;
}

double as_number(const Json& value, std::string_view field, const Where& where) {
  if (!value.is_number()) where.fail(field, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) where.fail(field, "not finite");
  return v;
}

double number_field(const Json& obj, std::string_view field, const Where& where) {
  return as_number(require(obj, field, where), field, where);
}

std::optional<double> optional_number(const Json& obj, std::string_view field,
                                      const Where& where) {
  const auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return as_number(*it, field, where);
}

std::string string_field(const Json& obj, std::string_view field, const Where& where,
                         bool required = true) {
  const auto it = obj.find(field);
  if (it == obj.end()) {
    if (required) where.fail(field, "missing");
    return {};
  }
  if (!it->is_string()) where.fail(field, "expected a string");
  return it->get<std::string>();
}

std::int64_t integer_value(const Json& value, std::string_view field,
                           const Where& where) {
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      where.fail(field, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!value.is_number_integer()) where.fail(field, "expected an integer");
  return value.get<std::int64_t>();
}

QueryId qid_value(const Json& value, std::string_view field, const Where& where) {
  if (value.is_string()) return QueryId(value.get<std::string>());
  if (value.is_number_integer()) return QueryId(integer_value(value, field, where));
  where.fail(field, "expected an integer or a string");
}

Json qid_json(const QueryId& qid) {
  return qid.is_integer() ? Json(qid.as_integer()) : Json(qid.as_string());
}

std::vector<double> number_array(const Json& value, std::string_view field,
                                 const Where& where) {
  if (!value.is_array()) where.fail(field, "expected an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      where.fail(field, "element " + std::to_string(i) + " is not a number");
    }
    const double v = value[i].get<double>();
    if (!std::isfinite(v)) {
      where.fail(field, "element " + std::to_string(i) + " is not finite");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<double>> tuple_array(const Json& value, std::string_view field,
                                             std::size_t arity, const Where& where) {
  if (!value.is_array()) where.fail(field, "expected an array");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    std::vector<double> item = number_array(value[i], field, where);
    if (item.size() != arity) {
      where.fail(field, "entry " + std::to_string(i) + " has " +
                            std::to_string(item.size()) + " numbers, expected " +
                            std::to_string(arity));
    }
    out.push_back(std::move(item));
  }
  return out;
}

// Runs a constructor, prefixing any validation error with the location.
template <typename F>
auto located(const Where& where, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const ValidationError& e) {
    where.fail(e.what());
  }
}

// Same, naming the JSON field the value came from.
template <typename F>
auto located(const Where& where, std::string_view field, F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const ValidationError& e) {
    where.fail(field, e.what());
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::string jsonl(const std::vector<OrderedJson>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

QueryId id_from_stem(std::string_view stem) {
  if (!stem.empty() && stem.size() < 19 &&
      stem.find_first_not_of("0123456789") == std::string_view::npos) {
    return QueryId(std::stoll(std::string(stem)));
  }
  return QueryId(std::string(stem));
}

int reduce_saliency(const Json& value, const Where& where) {
  if (value.is_number()) return static_cast<int>(integer_value(value, "saliency_scores", where));
  if (!value.is_array() || value.empty()) {
    where.fail("saliency_scores", "expected a nonempty array of annotator scores");
  }
  double sum = 0.0;
  for (const auto& v : value) sum += static_cast<double>(integer_value(v, "saliency_scores", where));
  return static_cast<int>(std::lround(sum / static_cast<double>(value.size())));
}

VideoFeatureSet parse_video(const std::vector<Line>& lines, std::string_view source,
                            std::string_view default_id, std::size_t dim) {
  const Json& header = lines.front().value;
  const Where header_where(source, lines.front().number);
  const double stride = optional_number(header, "stride_s", header_where)
                            .value_or(kDefaultClipStride);
  std::string vid = string_field(header, "vid", header_where, false);
  if (vid.empty()) vid = std::string(default_id);

  std::vector<FrameRecord> frames;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Where where(source, lines[r].number);
    const Json& rec = lines[r].value;
    const std::int64_t index = integer_value(require(rec, "index", where), "index", where);
    if (index < 0) where.fail("index", "must be nonnegative");
    std::vector<double> embedding =
        number_array(require(rec, "embedding", where), "embedding", where);
    if (embedding.size() != dim) {
      where.fail("embedding", "record " + std::to_string(r - 1) + " has dimension " +
                                  std::to_string(embedding.size()) +
                                  ", header declares " + std::to_string(dim));
    }
    std::string text = string_field(rec, "text", where, false);
    frames.push_back(located(where, [&] {
      return FrameRecord(static_cast<std::size_t>(index), std::move(text),
                         std::move(embedding));
    }));
  }
  const double duration = optional_number(header, "duration_s", header_where)
                              .value_or(static_cast<double>(frames.size()) * stride);
  return located(header_where, [&] {
    return VideoFeatureSet(std::move(vid), duration, stride, std::move(frames));
  });
}

QueryBundle parse_query(const std::vector<Line>& lines, std::string_view source,
                        std::string_view default_id, std::size_t dim) {
  const Json& header = lines.front().value;
  const Where header_where(source, lines.front().number);
  const auto qid_it = header.find("qid");
  QueryId qid = qid_it == header.end() ? id_from_stem(default_id)
                                       : qid_value(*qid_it, "qid", header_where);
  std::string vid = string_field(header, "vid", header_where, false);

  bool have_original = false;
  std::string original_text;
  std::vector<double> original_embedding;
  std::vector<QueryRewrite> rewrites;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Where where(source, lines[r].number);
    const Json& rec = lines[r].value;
    const std::string role = string_field(rec, "role", where);
    std::string text = string_field(rec, "text", where, false);
    std::vector<double> embedding;
    if (const auto it = rec.find("embedding"); it != rec.end()) {
      embedding = number_array(*it, "embedding", where);
    } else if (role != "original") {
      where.fail("embedding", "missing");
    }
    if (!embedding.empty() && embedding.size() != dim) {
      where.fail("embedding", "record " + std::to_string(r - 1) + " has dimension " +
                                  std::to_string(embedding.size()) +
                                  ", header declares " + std::to_string(dim));
    }
    if (role == "original") {
      if (have_original) where.fail("role", "second 'original' record");
      have_original = true;
      original_text = std::move(text);
      original_embedding = std::move(embedding);
    } else if (role == "rewrite") {
      const std::optional<double> quality = optional_number(rec, "quality", where);
      rewrites.push_back(located(where, [&] {
        return QueryRewrite(std::move(text), std::move(embedding), quality);
      }));
    } else {
      where.fail("role", "expected 'original' or 'rewrite', got '" + role + "'");
    }
  }
  return located(header_where, [&] {
    return QueryBundle(std::move(qid), std::move(vid), std::move(original_text),
                       std::move(original_embedding), std::move(rewrites));
  });
}

OrderedJson embedding_json(std::span<const double> e) {
  return OrderedJson(std::vector<double>(e.begin(), e.end()));
}

}  // namespace

std::vector<GroundTruth> parse_annotations(std::istream& in, std::string_view source,
                                           double clip_stride_s) {
  std::vector<GroundTruth> out;
  for (const Line& line : read_jsonl(in, source)) {
    const Where where(source, line.number);
    const Json& rec = line.value;
    QueryId qid = qid_value(require(rec, "qid", where), "qid", where);
    std::string vid = string_field(rec, "vid", where);
    std::string query = string_field(rec, "query", where);
    const double duration = number_field(rec, "duration", where);

    std::vector<TimeWindow> windows;
    for (const auto& w : tuple_array(require(rec, "relevant_windows", where),
                                     "relevant_windows", 2, where)) {
      windows.push_back(
          located(where, "relevant_windows", [&] { return TimeWindow(w[0], w[1]); }));
    }

    std::vector<int> saliency;
    const auto scores_it = rec.find("saliency_scores");
    const auto ids_it = rec.find("relevant_clip_ids");
    if (scores_it != rec.end() && !scores_it->is_null()) {
      if (!scores_it->is_array()) where.fail("saliency_scores", "expected an array");
      std::vector<int> labels;
      for (const auto& s : *scores_it) labels.push_back(reduce_saliency(s, where));
      if (ids_it != rec.end() && !ids_it->is_null()) {
        if (!ids_it->is_array()) where.fail("relevant_clip_ids", "expected an array");
        if (ids_it->size() != labels.size()) {
          where.fail("relevant_clip_ids",
                     std::to_string(ids_it->size()) + " ids for " +
                         std::to_string(labels.size()) + " saliency entries");
        }
        std::size_t clips = 0;
        if (std::isfinite(clip_stride_s) && clip_stride_s > 0.0) {
          clips = static_cast<std::size_t>(std::ceil(duration / clip_stride_s - 1e-9));
        }
        std::vector<std::size_t> ids;
        for (const auto& id : *ids_it) {
          const std::int64_t v = integer_value(id, "relevant_clip_ids", where);
          if (v < 0 || v > 1'000'000) where.fail("relevant_clip_ids", "id out of range");
          ids.push_back(static_cast<std::size_t>(v));
          clips = std::max(clips, ids.back() + 1);
        }
        saliency.assign(clips, 0);
        for (std::size_t i = 0; i < ids.size(); ++i) saliency[ids[i]] = labels[i];
      } else {
        saliency = std::move(labels);
      }
    }
    out.push_back(located(where, [&] {
      return GroundTruth(std::move(qid), std::move(vid), std::move(query), duration,
                         clip_stride_s, std::move(windows), std::move(saliency));
    }));
  }
  return out;
}

std::vector<GroundTruth> load_annotations(const std::filesystem::path& path,
                                          double clip_stride_s) {
  std::ifstream in = open_input(path);
  return parse_annotations(in, path.string(), clip_stride_s);
}

void save_annotations(const std::vector<GroundTruth>& gts,
                      const std::filesystem::path& path) {
  std::vector<OrderedJson> records;
  for (const auto& gt : gts) {
    OrderedJson rec;
    rec["qid"] = qid_json(gt.qid());
    rec["query"] = gt.query();
    rec["duration"] = gt.duration_s();
    rec["vid"] = gt.video_id();
    OrderedJson windows = OrderedJson::array();
    for (const auto& w : gt.relevant_windows()) {
      windows.push_back({w.start_s(), w.end_s()});
    }
    rec["relevant_windows"] = std::move(windows);
    if (!gt.saliency().empty()) {
      OrderedJson scores = OrderedJson::array();
      for (int label : gt.saliency()) scores.push_back(OrderedJson::array({label}));
      rec["saliency_scores"] = std::move(scores);
    }
    records.push_back(std::move(rec));
  }
  write_text_file(path, jsonl(records));
}

FeatureFile parse_features(std::istream& in, std::string_view source,
                           std::string_view default_id) {
  const std::vector<Line> lines = read_jsonl(in, source);
  if (lines.empty()) throw ValidationError(std::string(source) + ": missing header line");
  const Json& header = lines.front().value;
  const Where where(source, lines.front().number);
  const std::string kind = string_field(header, "kind", where);
  const std::int64_t dim = integer_value(require(header, "dim", where), "dim", where);
  if (dim < 1) where.fail("dim", "must be at least 1");
  if (kind == "video") {
    return parse_video(lines, source, default_id, static_cast<std::size_t>(dim));
  }
  if (kind == "query") {
    return parse_query(lines, source, default_id, static_cast<std::size_t>(dim));
  }
  where.fail("kind", "expected 'video' or 'query', got '" + kind + "'");
}

FeatureFile load_features(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_features(in, path.string(), path.stem().string());
}

VideoFeatureSet load_video_features(const std::filesystem::path& path) {
  FeatureFile f = load_features(path);
  if (auto* v = std::get_if<VideoFeatureSet>(&f)) return std::move(*v);
  throw ValidationError(path.string() + ": expected a video feature file");
}

QueryBundle load_query_features(const std::filesystem::path& path) {
  FeatureFile f = load_features(path);
  if (auto* q = std::get_if<QueryBundle>(&f)) return std::move(*q);
  throw ValidationError(path.string() + ": expected a query feature file");
}

std::string serialize_features(const VideoFeatureSet& video) {
  std::vector<OrderedJson> records;
  OrderedJson header;
  header["kind"] = "video";
  header["dim"] = video.dim();
  header["stride_s"] = video.clip_stride_s();
  header["vid"] = video.video_id();
  header["duration_s"] = video.duration_s();
  records.push_back(std::move(header));
  for (const auto& frame : video.frames()) {
    OrderedJson rec;
    rec["index"] = frame.index();
    rec["text"] = frame.description();
    rec["embedding"] = embedding_json(frame.embedding());
    records.push_back(std::move(rec));
  }
  return jsonl(records);
}

std::string serialize_features(const QueryBundle& query) {
  std::size_t dim = query.original_embedding().size();
  if (dim == 0 && !query.rewrites().empty()) dim = query.rewrites().front().embedding().size();
  if (dim == 0) {
    throw ValidationError("query " + query.qid().to_string() + " has no embeddings to write");
  }
  std::vector<OrderedJson> records;
  OrderedJson header;
  header["kind"] = "query";
  header["dim"] = dim;
  header["qid"] = qid_json(query.qid());
  if (!query.video_id().empty()) header["vid"] = query.video_id();
  records.push_back(std::move(header));

  OrderedJson original;
  original["role"] = "original";
  original["text"] = query.original_text();
  if (!query.original_embedding().empty()) {
    original["embedding"] = embedding_json(query.original_embedding());
  }
  records.push_back(std::move(original));
  for (const auto& rw : query.rewrites()) {
    OrderedJson rec;
    rec["role"] = "rewrite";
    rec["text"] = rw.text();
    rec["embedding"] = embedding_json(rw.embedding());
    if (rw.quality()) rec["quality"] = *rw.quality();
    records.push_back(std::move(rec));
  }
  return jsonl(records);
}

void save_features(const VideoFeatureSet& video, const std::filesystem::path& path) {
  write_text_file(path, serialize_features(video));
}

void save_features(const QueryBundle& query, const std::filesystem::path& path) {
  write_text_file(path, serialize_features(query));
}

std::string serialize_profiles(const std::vector<SimilarityProfile>& profiles) {
  std::vector<OrderedJson> records;
  for (const auto& p : profiles) {
    OrderedJson rec;
    rec["qid"] = qid_json(p.qid());
    rec["vid"] = p.video_id();
    rec["stride_s"] = p.clip_stride_s();
    rec["duration_s"] = p.duration_s();
    rec["threshold"] = p.threshold();
    rec["scores"] = embedding_json(p.scores());
    OrderedJson marks = OrderedJson::array();
    for (bool m : p.marks()) marks.push_back(m);
    rec["marks"] = std::move(marks);
    records.push_back(std::move(rec));
  }
  return jsonl(records);
}

std::vector<SimilarityProfile> parse_profiles(std::istream& in, std::string_view source) {
  std::vector<SimilarityProfile> out;
  for (const Line& line : read_jsonl(in, source)) {
    const Where where(source, line.number);
    const Json& rec = line.value;
    QueryId qid = qid_value(require(rec, "qid", where), "qid", where);
    std::string vid = string_field(rec, "vid", where);
    const double stride = number_field(rec, "stride_s", where);
    const double duration = number_field(rec, "duration_s", where);
    const double threshold = number_field(rec, "threshold", where);
    std::vector<double> scores = number_array(require(rec, "scores", where), "scores", where);
    const Json& marks_json = require(rec, "marks", where);
    if (!marks_json.is_array()) where.fail("marks", "expected an array");
    std::vector<bool> marks;
    for (const auto& m : marks_json) {
      if (!m.is_boolean()) where.fail("marks", "expected booleans");
      marks.push_back(m.get<bool>());
    }
    out.push_back(located(where, [&] {
      return SimilarityProfile(std::move(vid), std::move(qid), stride, duration,
                               std::move(scores), threshold, std::move(marks));
    }));
  }
  return out;
}

void save_profiles(const std::vector<SimilarityProfile>& profiles,
                   const std::filesystem::path& path) {
  write_text_file(path, serialize_profiles(profiles));
}

std::vector<SimilarityProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_profiles(in, path.string());
}

std::string serialize_anchors(const std::vector<AnchorRecord>& records) {
  std::vector<OrderedJson> out;
  for (const auto& r : records) {
    OrderedJson rec;
    rec["qid"] = qid_json(r.qid);
    rec["vid"] = r.video_id;
    rec["stride_s"] = r.clip_stride_s;
    rec["duration_s"] = r.duration_s;
    rec["threshold"] = r.threshold;
    rec["max_gap"] = r.max_gap;
    OrderedJson anchors = OrderedJson::array();
    for (const auto& a : r.anchors) anchors.push_back({a.start_s(), a.end_s(), a.mean_score()});
    rec["anchors"] = std::move(anchors);
    out.push_back(std::move(rec));
  }
  return jsonl(out);
}

std::vector<AnchorRecord> parse_anchors(std::istream& in, std::string_view source) {
  std::vector<AnchorRecord> out;
  for (const Line& line : read_jsonl(in, source)) {
    const Where where(source, line.number);
    const Json& rec = line.value;
    AnchorRecord r;
    r.qid = qid_value(require(rec, "qid", where), "qid", where);
    r.video_id = string_field(rec, "vid", where);
    r.clip_stride_s = number_field(rec, "stride_s", where);
    if (r.clip_stride_s <= 0.0) where.fail("stride_s", "must be positive");
    r.duration_s = number_field(rec, "duration_s", where);
    if (r.duration_s < 0.0) where.fail("duration_s", "must be nonnegative");
    r.threshold = number_field(rec, "threshold", where);
    const std::int64_t gap = integer_value(require(rec, "max_gap", where), "max_gap", where);
    if (gap < 0) where.fail("max_gap", "must be nonnegative");
    r.max_gap = static_cast<std::size_t>(gap);
    for (const auto& a : tuple_array(require(rec, "anchors", where), "anchors", 3, where)) {
      r.anchors.push_back(
          located(where, "anchors", [&] { return SpanAnchor(a[0], a[1], a[2]); }));
    }
    located(where, [&] {
      validate_anchor_list(r.anchors, r.duration_s, r.clip_stride_s);
      return 0;
    });
    out.push_back(std::move(r));
  }
  return out;
}

void save_anchors(const std::vector<AnchorRecord>& records,
                  const std::filesystem::path& path) {
  write_text_file(path, serialize_anchors(records));
}

std::vector<AnchorRecord> load_anchors(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_anchors(in, path.string());
}

std::string serialize_predictions(const std::vector<QueryPrediction>& preds) {
  std::vector<OrderedJson> out;
  for (const auto& p : preds) {
    OrderedJson rec;
    rec["qid"] = qid_json(p.qid);
    OrderedJson windows = OrderedJson::array();
    for (const auto& m : p.windows) windows.push_back({m.start_s(), m.end_s(), m.confidence()});
    rec["pred_relevant_windows"] = std::move(windows);
    rec["pred_saliency_scores"] = embedding_json(p.saliency);
    out.push_back(std::move(rec));
  }
  return jsonl(out);
}

std::vector<QueryPrediction> parse_predictions(std::istream& in, std::string_view source) {
  std::vector<QueryPrediction> out;
  for (const Line& line : read_jsonl(in, source)) {
    const Where where(source, line.number);
    const Json& rec = line.value;
    QueryPrediction p;
    p.qid = qid_value(require(rec, "qid", where), "qid", where);
    for (const auto& w : tuple_array(require(rec, "pred_relevant_windows", where),
                                     "pred_relevant_windows", 3, where)) {
      p.windows.push_back(located(where, "pred_relevant_windows",
                                  [&] { return MomentPrediction(w[0], w[1], w[2]); }));
    }
    if (const auto it = rec.find("pred_saliency_scores"); it != rec.end() && !it->is_null()) {
      p.saliency = number_array(*it, "pred_saliency_scores", where);
    }
    out.push_back(std::move(p));
  }
  return out;
}

void save_predictions(const std::vector<QueryPrediction>& preds,
                      const std::filesystem::path& path) {
  write_text_file(path, serialize_predictions(preds));
}

std::vector<QueryPrediction> load_predictions(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return parse_predictions(in, path.string());
}

std::string report_to_json(const EvalReport& report) {
  OrderedJson doc;
  doc["mr_r1_0.5"] = report.mr_r1_05;
  doc["mr_r1_0.7"] = report.mr_r1_07;
  doc["mr_map_0.5"] = report.mr_map_05;
  doc["mr_map_0.75"] = report.mr_map_075;
  doc["mr_map_avg"] = report.mr_map_avg;
  doc["hd_map"] = report.hd_map;
  doc["hd_hit1"] = report.hd_hit1;
  OrderedJson grid = OrderedJson::object();
  for (const auto& [t, v] : report.mr_map_by_iou) {
    grid[OrderedJson(t).dump()] = v;
  }
  doc["mr_map_by_iou"] = std::move(grid);
  doc["num_queries"] = report.num_queries;
  auto exclusions = [](const std::vector<Exclusion>& list) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& e : list) {
      OrderedJson item;
      item["qid"] = e.qid.is_integer() ? OrderedJson(e.qid.as_integer())
                                       : OrderedJson(e.qid.as_string());
      item["reason"] = e.reason;
      arr.push_back(std::move(item));
    }
    return arr;
  };
  doc["diagnostics"]["mr_excluded"] = exclusions(report.mr_excluded);
  doc["diagnostics"]["hd_excluded"] = exclusions(report.hd_excluded);
  return doc.dump(2) + "\n";
}

std::string report_to_text(const EvalReport& report) {
  const std::pair<const char*, double> rows[] = {
      {"mr_r1_0.5", report.mr_r1_05},   {"mr_r1_0.7", report.mr_r1_07},
      {"mr_map_0.5", report.mr_map_05}, {"mr_map_0.75", report.mr_map_075},
      {"mr_map_avg", report.mr_map_avg}, {"hd_map", report.hd_map},
      {"hd_hit1", report.hd_hit1},
  };
  std::string out;
  for (const auto& [key, value] : rows) {
    out += key;
    out += '=';
    out += Json(value).dump();
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace spanscope
