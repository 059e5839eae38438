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
// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spanscope/spanscope.h"

namespace fs = std::filesystem;

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using VideoPtr = std::unique_ptr<ssc_video, Deleter<ssc_video, ssc_video_free>>;
using QueryPtr = std::unique_ptr<ssc_query, Deleter<ssc_query, ssc_query_free>>;
using ProfilesPtr = std::unique_ptr<ssc_profiles, Deleter<ssc_profiles, ssc_profiles_free>>;
using AnchorsPtr = std::unique_ptr<ssc_anchors, Deleter<ssc_anchors, ssc_anchors_free>>;
using PredictionsPtr =
    std::unique_ptr<ssc_predictions, Deleter<ssc_predictions, ssc_predictions_free>>;
using AnnotationsPtr =
    std::unique_ptr<ssc_annotations, Deleter<ssc_annotations, ssc_annotations_free>>;
using ReportPtr = std::unique_ptr<ssc_report, Deleter<ssc_report, ssc_report_free>>;

// Carries a failed status out of a command.
struct Failure {
  ssc_status status;
};

void check(ssc_status status) {
  if (status == SSC_OK) return;
  std::fprintf(stderr, "spanscope: error: %s\n", ssc_last_error());
  throw Failure{status};
}

// Directories expand to their *.jsonl files in name order.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (!fs::is_directory(in, ec)) {
      out.push_back(in);
      continue;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(in)) {
      if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

struct ScoreArgs {
  std::vector<std::string> video_features;
  std::vector<std::string> query_features;
  std::string aggregation = "mean";
  double quantization = 0.01;
  double resolution = 1e-9;
  bool rewrites_only = false;
};

struct AnchorArgs {
  std::size_t max_gap = 5;
  double quantization = 0.01;
};

struct PredictArgs {
  std::size_t top_k = 10;
  std::string confidence = "mean";
};

struct EvalArgs {
  int very_good = 3;
  double clip_stride = 2.0;
};

ProfilesPtr compute_profiles(const ScoreArgs& args, std::size_t jobs) {
  std::vector<VideoPtr> videos;
  for (const auto& path : expand_inputs(args.video_features)) {
    ssc_video* v = nullptr;
    check(ssc_video_load(path.c_str(), &v));
    videos.emplace_back(v);
  }
  std::vector<QueryPtr> queries;
  for (const auto& path : expand_inputs(args.query_features)) {
    ssc_query* q = nullptr;
    check(ssc_query_load(path.c_str(), &q));
    queries.emplace_back(q);
  }
  std::vector<const ssc_video*> vp;
  for (const auto& v : videos) vp.push_back(v.get());
  std::vector<const ssc_query*> qp;
  for (const auto& q : queries) qp.push_back(q.get());

  ssc_score_options opts;
  ssc_score_options_default(&opts);
  opts.aggregation = args.aggregation == "max" ? SSC_AGGREGATION_MAX : SSC_AGGREGATION_MEAN;
  opts.include_original = args.rewrites_only ? 0 : 1;
  opts.quantization = args.quantization;
  opts.resolution = args.resolution;
  opts.jobs = jobs;
  ssc_profiles* out = nullptr;
  check(ssc_profiles_compute(vp.data(), vp.size(), qp.data(), qp.size(), &opts, &out));
  std::fprintf(stderr, "spanscope: scored %zu (video, query) pairs\n", ssc_profiles_count(out));
  return ProfilesPtr(out);
}

AnchorsPtr extract_anchors(const ssc_profiles* profiles, const AnchorArgs& args,
                           std::size_t jobs) {
  ssc_anchor_options opts;
  ssc_anchor_options_default(&opts);
  opts.max_gap = args.max_gap;
  opts.quantization = args.quantization;
  opts.jobs = jobs;
  ssc_anchors* out = nullptr;
  check(ssc_anchors_extract(profiles, &opts, &out));
  return AnchorsPtr(out);
}

PredictionsPtr predict(const ssc_anchors* anchors, const ssc_profiles* profiles,
                       const PredictArgs& args, std::size_t jobs) {
  ssc_predict_options opts;
  ssc_predict_options_default(&opts);
  opts.top_k = args.top_k;
  opts.jobs = jobs;
  if (args.confidence == "max") {
    opts.confidence = SSC_CONFIDENCE_MAX;
  } else if (args.confidence == "length-weighted") {
    opts.confidence = SSC_CONFIDENCE_LENGTH_WEIGHTED;
  }
  ssc_predictions* out = nullptr;
  check(ssc_predict(anchors, profiles, &opts, &out));
  return PredictionsPtr(out);
}

ReportPtr evaluate(const ssc_predictions* preds, const std::string& annotations_path,
                   const EvalArgs& args) {
  ssc_annotations* raw = nullptr;
  check(ssc_annotations_load(annotations_path.c_str(), args.clip_stride, &raw));
  AnnotationsPtr annotations(raw);
  ssc_eval_options opts;
  ssc_eval_options_default(&opts);
  opts.very_good_cut = args.very_good;
  ssc_report* report = nullptr;
  check(ssc_evaluate(preds, annotations.get(), &opts, &report));
  return ReportPtr(report);
}

void write_file(const std::string& path, const char* content) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "spanscope: error: cannot open '%s' for writing\n", path.c_str());
    throw Failure{SSC_ERROR_IO};
  }
  const std::string s(content);
  const bool ok = std::fwrite(s.data(), 1, s.size(), f) == s.size();
  if (std::fclose(f) != 0 || !ok) {
    std::fprintf(stderr, "spanscope: error: failed writing '%s'\n", path.c_str());
    throw Failure{SSC_ERROR_IO};
  }
}

void add_score_flags(CLI::App* cmd, ScoreArgs& args) {
  cmd->add_option("--video-features", args.video_features,
                  "Video feature files or directories of *.jsonl")
      ->required();
  cmd->add_option("--query-features", args.query_features,
                  "Query feature files or directories of *.jsonl")
      ->required();
  cmd->add_option("--agg", args.aggregation, "Aggregation over the query embedding pool")
      ->check(CLI::IsMember({"mean", "max"}))
      ->capture_default_str();
  cmd->add_option("--score-quant", args.quantization,
                  "Threshold histogram bin width recorded in the profiles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--resolution", args.resolution, "Score snapping grid (0 disables)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--rewrites-only", args.rewrites_only,
                "Leave the original query embedding out of the pool");
}

void add_anchor_flags(CLI::App* cmd, AnchorArgs& args) {
  cmd->add_option("--max-gap", args.max_gap, "Longest run of unmarked frames merged into an anchor")
      ->capture_default_str();
  cmd->add_option("--quant", args.quantization, "Threshold histogram bin width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_predict_flags(CLI::App* cmd, PredictArgs& args) {
  cmd->add_option("--top-k", args.top_k, "Moments kept per query")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--confidence", args.confidence, "Anchor confidence statistic")
      ->check(CLI::IsMember({"mean", "max", "length-weighted"}))
      ->capture_default_str();
}

void add_eval_flags(CLI::App* cmd, EvalArgs& args) {
  cmd->add_option("--very-good", args.very_good, "Saliency level counted as a highlight")
      ->capture_default_str();
  cmd->add_option("--clip-stride", args.clip_stride, "Clip length of the annotations (s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanscope: similarity profiles, span anchors, zero-shot moment "
               "retrieval / highlight detection and their evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ssc_version()));

  std::size_t jobs = 1;
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  ScoreArgs score_args;
  AnchorArgs anchor_args;
  PredictArgs predict_args;
  EvalArgs eval_args;
  std::string out_path;
  std::string profiles_path;
  std::string anchors_path;
  std::string preds_path;
  std::string annotations_path;
  std::string report_path;
  std::string text_path;
  std::string out_dir;
  std::size_t trials = 100;
  std::uint64_t seed = 7;

  auto* score = app.add_subcommand("score", "Compute per-frame similarity profiles");
  add_score_flags(score, score_args);
  score->add_option("--out", out_path, "Output profiles JSONL")->required();
  add_jobs(score);

  auto* anchors = app.add_subcommand("anchors", "Threshold profiles and extract span anchors");
  anchors->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  add_anchor_flags(anchors, anchor_args);
  anchors->add_option("--out", out_path, "Output anchors JSONL")->required();
  add_jobs(anchors);

  auto* pred = app.add_subcommand("predict", "Turn anchors and profiles into predictions");
  pred->add_option("--anchors", anchors_path, "Anchors JSONL")->required();
  pred->add_option("--profiles", profiles_path, "Profiles JSONL")->required();
  add_predict_flags(pred, predict_args);
  pred->add_option("--out", out_path, "Output predictions JSONL")->required();
  add_jobs(pred);

  auto* eval = app.add_subcommand("eval", "Evaluate predictions against annotations");
  eval->add_option("--preds", preds_path, "Predictions JSONL")->required();
  eval->add_option("--annotations", annotations_path, "Annotations JSONL")->required();
  eval->add_option("--report", report_path, "Write the JSON report here");
  eval->add_option("--text", text_path, "Also write the key=value report here");
  add_eval_flags(eval, eval_args);

  auto* loss = app.add_subcommand("loss-check", "Check loss gradients against finite differences");
  loss->add_option("--trials", trials, "Random points per loss")->capture_default_str();
  loss->add_option("--seed", seed, "Sampling seed")->capture_default_str();

  auto* pipe = app.add_subcommand("pipeline", "score -> anchors -> predict [-> eval]");
  add_score_flags(pipe, score_args);
  add_anchor_flags(pipe, anchor_args);
  add_predict_flags(pipe, predict_args);
  add_eval_flags(pipe, eval_args);
  pipe->add_option("--annotations", annotations_path, "Annotations JSONL; enables eval");
  pipe->add_option("--out-dir", out_dir, "Directory for the stage outputs")->required();
  add_jobs(pipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(SSC_ERROR_VALIDATION);
  }

  try {
    if (score->parsed()) {
      ProfilesPtr profiles = compute_profiles(score_args, jobs);
      check(ssc_profiles_save(profiles.get(), out_path.c_str()));
    } else if (anchors->parsed()) {
      ssc_profiles* raw = nullptr;
      check(ssc_profiles_load(profiles_path.c_str(), &raw));
      ProfilesPtr profiles(raw);
      AnchorsPtr result = extract_anchors(profiles.get(), anchor_args, jobs);
      check(ssc_anchors_save(result.get(), out_path.c_str()));
    } else if (pred->parsed()) {
      ssc_profiles* raw_profiles = nullptr;
      check(ssc_profiles_load(profiles_path.c_str(), &raw_profiles));
      ProfilesPtr profiles(raw_profiles);
      ssc_anchors* raw_anchors = nullptr;
      check(ssc_anchors_load(anchors_path.c_str(), &raw_anchors));
      AnchorsPtr anchor_set(raw_anchors);
      PredictionsPtr preds = predict(anchor_set.get(), profiles.get(), predict_args, jobs);
      check(ssc_predictions_save(preds.get(), out_path.c_str()));
    } else if (eval->parsed()) {
      ssc_predictions* raw = nullptr;
      check(ssc_predictions_load(preds_path.c_str(), &raw));
      PredictionsPtr preds(raw);
      ReportPtr report = evaluate(preds.get(), annotations_path, eval_args);
      if (!report_path.empty()) write_file(report_path, ssc_report_json(report.get()));
      if (!text_path.empty()) write_file(text_path, ssc_report_text(report.get()));
      std::fputs(ssc_report_text(report.get()), stdout);
    } else if (loss->parsed()) {
      ssc_grad_check_report r;
      const ssc_status status = ssc_loss_check(trials, seed, &r);
      if (status != SSC_OK && status != SSC_ERROR_SELF_CHECK) check(status);
      std::printf("trials=%zu\nmoment_loss=%.6e\nweighted_bce=%.6e\n"
                  "highlight_hinge=%.6e\nmax_deviation=%.6e\ntolerance=1e-04\n%s\n",
                  r.trials, r.moment_loss, r.weighted_bce, r.highlight_hinge,
                  r.max_deviation, r.passed ? "PASS" : "FAIL");
      if (status != SSC_OK) {
        std::fprintf(stderr, "spanscope: error: %s\n", ssc_last_error());
        return static_cast<int>(status);
      }
    } else if (pipe->parsed()) {
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) {
        std::fprintf(stderr, "spanscope: error: cannot create '%s': %s\n", out_dir.c_str(),
                     ec.message().c_str());
        return static_cast<int>(SSC_ERROR_IO);
      }
      const fs::path dir(out_dir);
      ProfilesPtr profiles = compute_profiles(score_args, jobs);
      check(ssc_profiles_save(profiles.get(), (dir / "profiles.jsonl").string().c_str()));
      AnchorsPtr anchor_set = extract_anchors(profiles.get(), anchor_args, jobs);
      check(ssc_anchors_save(anchor_set.get(), (dir / "anchors.jsonl").string().c_str()));
      PredictionsPtr preds = predict(anchor_set.get(), profiles.get(), predict_args, jobs);
      check(ssc_predictions_save(preds.get(), (dir / "predictions.jsonl").string().c_str()));
      if (!annotations_path.empty()) {
        ReportPtr report = evaluate(preds.get(), annotations_path, eval_args);
        write_file((dir / "report.json").string(), ssc_report_json(report.get()));
        write_file((dir / "report.txt").string(), ssc_report_text(report.get()));
        std::fputs(ssc_report_text(report.get()), stdout);
      }
    }
  } catch (const Failure& f) {
    return static_cast<int>(f.status);
  }
  return 0;
}
