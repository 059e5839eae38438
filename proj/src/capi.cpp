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
#include "spanscope/spanscope.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "spanscope/anchors.hpp"
#include "spanscope/dataset_io.hpp"
#include "spanscope/error.hpp"
#include "spanscope/gradcheck.hpp"
#include "spanscope/losses.hpp"
#include "spanscope/metrics.hpp"
#include "spanscope/pipeline.hpp"
#include "spanscope/similarity.hpp"

struct ssc_video {
  spanscope::VideoFeatureSet value;
};

struct ssc_query {
  spanscope::QueryBundle value;
  std::string id_text;
};

struct ssc_profiles {
  std::vector<spanscope::SimilarityProfile> value;
};

struct ssc_anchors {
  std::vector<spanscope::AnchorRecord> value;
};

struct ssc_predictions {
  std::vector<spanscope::QueryPrediction> value;
};

struct ssc_annotations {
  std::vector<spanscope::GroundTruth> value;
};

struct ssc_report {
  spanscope::EvalReport value;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

ssc_status fail(ssc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, mapping library exceptions onto status codes.
template <typename F>
ssc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SSC_OK;
  } catch (const spanscope::Error& e) {
    switch (e.kind()) {
      case spanscope::ErrorKind::kValidation: return fail(SSC_ERROR_VALIDATION, e.what());
      case spanscope::ErrorKind::kIo: return fail(SSC_ERROR_IO, e.what());
      case spanscope::ErrorKind::kSelfCheck: return fail(SSC_ERROR_SELF_CHECK, e.what());
    }
    return fail(SSC_ERROR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SSC_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SSC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SSC_ERROR_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) {
    throw spanscope::ValidationError(std::string("argument '") + name + "' is null");
  }
}

spanscope::LossWeights to_weights(const ssc_loss_weights* w) {
  spanscope::LossWeights out;
  if (w != nullptr) {
    out.lambda_l1 = w->lambda_l1;
    out.lambda_iou = w->lambda_iou;
    out.lambda_cls = w->lambda_cls;
    out.lambda_h = w->lambda_h;
    out.w_p = w->w_p;
    out.delta = w->delta;
  }
  out.validate();
  return out;
}

const spanscope::SimilarityProfile& profile_at(const ssc_profiles* profiles, size_t index) {
  require(profiles, "profiles");
  if (index >= profiles->value.size()) {
    throw spanscope::ValidationError("profile index " + std::to_string(index) +
                                     " out of range");
  }
  return profiles->value[index];
}

}  // namespace

extern "C" {

const char* ssc_last_error(void) { return last_error.c_str(); }

const char* ssc_version(void) { return "1.0.0"; }

ssc_status ssc_video_load(const char* path, ssc_video** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ssc_video{spanscope::load_video_features(path)};
  });
}

void ssc_video_free(ssc_video* video) { delete video; }

size_t ssc_video_frame_count(const ssc_video* video) {
  return video == nullptr ? 0 : video->value.frame_count();
}

const char* ssc_video_id(const ssc_video* video) {
  return video == nullptr ? "" : video->value.video_id().c_str();
}

ssc_status ssc_query_load(const char* path, ssc_query** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    spanscope::QueryBundle q = spanscope::load_query_features(path);
    std::string id = q.qid().to_string();
    *out = new ssc_query{std::move(q), std::move(id)};
  });
}

void ssc_query_free(ssc_query* query) { delete query; }

const char* ssc_query_id(const ssc_query* query) {
  return query == nullptr ? "" : query->id_text.c_str();
}

void ssc_score_options_default(ssc_score_options* options) {
  if (options == nullptr) return;
  const spanscope::ProfileOptions defaults;
  options->aggregation = SSC_AGGREGATION_MEAN;
  options->include_original = defaults.score.include_original ? 1 : 0;
  options->resolution = defaults.score.resolution;
  options->quantization = defaults.quantization;
  options->jobs = defaults.jobs;
}

ssc_status ssc_profiles_compute(const ssc_video* const* videos, size_t video_count,
                                const ssc_query* const* queries, size_t query_count,
                                const ssc_score_options* options, ssc_profiles** out) {
  return guarded([&] {
    require(out, "out");
    if (video_count > 0) require(videos, "videos");
    if (query_count > 0) require(queries, "queries");
    ssc_score_options opts;
    ssc_score_options_default(&opts);
    if (options != nullptr) opts = *options;

    spanscope::ProfileOptions po;
    po.score.aggregation = opts.aggregation == SSC_AGGREGATION_MAX
                               ? spanscope::Aggregation::kMax
                               : spanscope::Aggregation::kMean;
    po.score.include_original = opts.include_original != 0;
    po.score.resolution = opts.resolution;
    po.quantization = opts.quantization;
    po.jobs = opts.jobs;

    std::vector<spanscope::VideoFeatureSet> vs;
    for (size_t i = 0; i < video_count; ++i) {
      require(videos[i], "videos[i]");
      vs.push_back(videos[i]->value);
    }
    std::vector<spanscope::QueryBundle> qs;
    for (size_t i = 0; i < query_count; ++i) {
      require(queries[i], "queries[i]");
      qs.push_back(queries[i]->value);
    }
    *out = new ssc_profiles{spanscope::compute_profiles(vs, qs, po)};
  });
}

ssc_status ssc_profiles_load(const char* path, ssc_profiles** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ssc_profiles{spanscope::load_profiles(path)};
  });
}

ssc_status ssc_profiles_save(const ssc_profiles* profiles, const char* path) {
  return guarded([&] {
    require(profiles, "profiles");
    require(path, "path");
    spanscope::save_profiles(profiles->value, path);
  });
}

void ssc_profiles_free(ssc_profiles* profiles) { delete profiles; }

size_t ssc_profiles_count(const ssc_profiles* profiles) {
  return profiles == nullptr ? 0 : profiles->value.size();
}

ssc_status ssc_profiles_scores(const ssc_profiles* profiles, size_t index,
                               const double** scores, size_t* length) {
  return guarded([&] {
    require(scores, "scores");
    require(length, "length");
    const auto s = profile_at(profiles, index).scores();
    *scores = s.data();
    *length = s.size();
  });
}

ssc_status ssc_profiles_threshold(const ssc_profiles* profiles, size_t index,
                                  double* threshold) {
  return guarded([&] {
    require(threshold, "threshold");
    *threshold = profile_at(profiles, index).threshold();
  });
}

void ssc_anchor_options_default(ssc_anchor_options* options) {
  if (options == nullptr) return;
  const spanscope::AnchorOptions defaults;
  options->quantization = defaults.quantization;
  options->max_gap = defaults.max_gap;
  options->jobs = defaults.jobs;
}

ssc_status ssc_anchors_extract(const ssc_profiles* profiles,
                               const ssc_anchor_options* options, ssc_anchors** out) {
  return guarded([&] {
    require(profiles, "profiles");
    require(out, "out");
    spanscope::AnchorOptions ao;
    if (options != nullptr) {
      ao.quantization = options->quantization;
      ao.max_gap = options->max_gap;
      ao.jobs = options->jobs;
    }
    *out = new ssc_anchors{spanscope::extract_anchor_records(profiles->value, ao)};
  });
}

ssc_status ssc_anchors_load(const char* path, ssc_anchors** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ssc_anchors{spanscope::load_anchors(path)};
  });
}

ssc_status ssc_anchors_save(const ssc_anchors* anchors, const char* path) {
  return guarded([&] {
    require(anchors, "anchors");
    require(path, "path");
    spanscope::save_anchors(anchors->value, path);
  });
}

void ssc_anchors_free(ssc_anchors* anchors) { delete anchors; }

size_t ssc_anchors_count(const ssc_anchors* anchors) {
  return anchors == nullptr ? 0 : anchors->value.size();
}

void ssc_predict_options_default(ssc_predict_options* options) {
  if (options == nullptr) return;
  const spanscope::PredictOptions defaults;
  options->top_k = defaults.top_k;
  options->confidence = SSC_CONFIDENCE_MEAN;
  options->jobs = defaults.jobs;
}

ssc_status ssc_predict(const ssc_anchors* anchors, const ssc_profiles* profiles,
                       const ssc_predict_options* options, ssc_predictions** out) {
  return guarded([&] {
    require(anchors, "anchors");
    require(profiles, "profiles");
    require(out, "out");
    spanscope::PredictOptions po;
    if (options != nullptr) {
      po.top_k = options->top_k;
      po.jobs = options->jobs;
      switch (options->confidence) {
        case SSC_CONFIDENCE_MEAN: po.confidence = spanscope::ConfidenceMode::kMean; break;
        case SSC_CONFIDENCE_MAX: po.confidence = spanscope::ConfidenceMode::kMax; break;
        case SSC_CONFIDENCE_LENGTH_WEIGHTED:
          po.confidence = spanscope::ConfidenceMode::kLengthWeighted;
          break;
        default: throw spanscope::ValidationError("unknown confidence mode");
      }
    }
    *out = new ssc_predictions{spanscope::predict_all(anchors->value, profiles->value, po)};
  });
}

ssc_status ssc_predictions_load(const char* path, ssc_predictions** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ssc_predictions{spanscope::load_predictions(path)};
  });
}

ssc_status ssc_predictions_save(const ssc_predictions* predictions, const char* path) {
  return guarded([&] {
    require(predictions, "predictions");
    require(path, "path");
    spanscope::save_predictions(predictions->value, path);
  });
}

void ssc_predictions_free(ssc_predictions* predictions) { delete predictions; }

size_t ssc_predictions_count(const ssc_predictions* predictions) {
  return predictions == nullptr ? 0 : predictions->value.size();
}

void ssc_eval_options_default(ssc_eval_options* options) {
  if (options == nullptr) return;
  options->very_good_cut = spanscope::kDefaultVeryGoodCut;
}

ssc_status ssc_annotations_load(const char* path, double clip_stride_s,
                                ssc_annotations** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ssc_annotations{spanscope::load_annotations(path, clip_stride_s)};
  });
}

void ssc_annotations_free(ssc_annotations* annotations) { delete annotations; }

size_t ssc_annotations_count(const ssc_annotations* annotations) {
  return annotations == nullptr ? 0 : annotations->value.size();
}

ssc_status ssc_evaluate(const ssc_predictions* predictions,
                        const ssc_annotations* annotations,
                        const ssc_eval_options* options, ssc_report** out) {
  return guarded([&] {
    require(predictions, "predictions");
    require(annotations, "annotations");
    require(out, "out");
    spanscope::EvalOptions eo;
    if (options != nullptr) eo.very_good_cut = options->very_good_cut;
    spanscope::EvalReport r =
        spanscope::evaluate(predictions->value, annotations->value, eo);
    std::string json = spanscope::report_to_json(r);
    std::string text = spanscope::report_to_text(r);
    *out = new ssc_report{std::move(r), std::move(json), std::move(text)};
  });
}

void ssc_report_free(ssc_report* report) { delete report; }

ssc_status ssc_report_metric(const ssc_report* report, const char* key, double* value) {
  return guarded([&] {
    require(report, "report");
    require(key, "key");
    require(value, "value");
    const auto& r = report->value;
    const std::pair<const char*, double> rows[] = {
        {"mr_r1_0.5", r.mr_r1_05},   {"mr_r1_0.7", r.mr_r1_07},
        {"mr_map_0.5", r.mr_map_05}, {"mr_map_0.75", r.mr_map_075},
        {"mr_map_avg", r.mr_map_avg}, {"hd_map", r.hd_map},
        {"hd_hit1", r.hd_hit1},
    };
    for (const auto& [name, v] : rows) {
      if (std::strcmp(name, key) == 0) {
        *value = v;
        return;
      }
    }
    throw spanscope::ValidationError(std::string("unknown metric '") + key + "'");
  });
}

const char* ssc_report_json(const ssc_report* report) {
  return report == nullptr ? "" : report->json.c_str();
}

const char* ssc_report_text(const ssc_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

ssc_status ssc_cosine(const double* a, size_t a_dim, const double* b, size_t b_dim,
                      double* out) {
  return guarded([&] {
    require(out, "out");
    if (a_dim > 0) require(a, "a");
    if (b_dim > 0) require(b, "b");
    *out = spanscope::cosine({a, a_dim}, {b, b_dim});
  });
}

ssc_status ssc_rewrite_quality(double logp_paraphrase_given_q, double logp_q_given_q,
                               double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::rewrite_quality(logp_paraphrase_given_q, logp_q_given_q);
  });
}

ssc_status ssc_select_threshold(const double* scores, size_t length, double quantization,
                                double* out) {
  return guarded([&] {
    require(out, "out");
    if (length > 0) require(scores, "scores");
    *out = spanscope::select_threshold({scores, length}, quantization);
  });
}

ssc_status ssc_extract_anchors(const unsigned char* marks, const double* scores,
                               size_t length, double stride_s, size_t max_gap,
                               ssc_span_anchor* out, size_t capacity, size_t* count) {
  return guarded([&] {
    require(count, "count");
    if (length > 0) {
      require(marks, "marks");
      require(scores, "scores");
    }
    std::vector<bool> m(length);
    for (size_t i = 0; i < length; ++i) m[i] = marks[i] != 0;
    const auto anchors = spanscope::extract_anchors(m, {scores, length}, stride_s, max_gap);
    *count = anchors.size();
    if (out == nullptr) return;
    for (size_t i = 0; i < anchors.size() && i < capacity; ++i) {
      out[i] = {anchors[i].start_s(), anchors[i].end_s(), anchors[i].mean_score()};
    }
  });
}

void ssc_loss_weights_default(ssc_loss_weights* weights) {
  if (weights == nullptr) return;
  const spanscope::LossWeights d;
  *weights = {d.lambda_l1, d.lambda_iou, d.lambda_cls, d.lambda_h, d.w_p, d.delta};
}

ssc_status ssc_temporal_iou(double a_center, double a_width, double b_center,
                            double b_width, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::temporal_iou({a_center, a_width}, {b_center, b_width});
  });
}

ssc_status ssc_giou_loss_1d(double a_center, double a_width, double b_center,
                            double b_width, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::giou_loss_1d({a_center, a_width}, {b_center, b_width});
  });
}

ssc_status ssc_moment_loss(double pred_center, double pred_width, double gt_center,
                           double gt_width, const ssc_loss_weights* weights, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::moment_loss({pred_center, pred_width}, {gt_center, gt_width},
                                  to_weights(weights));
  });
}

ssc_status ssc_weighted_bce(const double* p, const int* z, size_t length, double w_p,
                            double* out) {
  return guarded([&] {
    require(out, "out");
    if (length > 0) {
      require(p, "p");
      require(z, "z");
    }
    *out = spanscope::weighted_bce({p, length}, {z, length}, w_p);
  });
}

ssc_status ssc_highlight_hinge(double h_high, double h_low, double h_in, double h_out,
                               double delta, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::highlight_hinge(h_high, h_low, h_in, h_out, delta);
  });
}

ssc_status ssc_total_loss(double moment, double cls, double hinge,
                          const ssc_loss_weights* weights, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = spanscope::total_loss({moment, cls, hinge}, to_weights(weights));
  });
}

ssc_status ssc_loss_check(size_t trials, uint64_t seed, ssc_grad_check_report* out) {
  return guarded([&] {
    require(out, "out");
    const spanscope::GradCheckReport r = spanscope::run_gradient_check(trials, seed);
    out->trials = r.trials;
    out->moment_loss = r.moment_loss;
    out->weighted_bce = r.weighted_bce;
    out->highlight_hinge = r.highlight_hinge;
    out->max_deviation = r.max_deviation();
    out->passed = r.passed() ? 1 : 0;
    if (!r.passed()) {
      throw spanscope::SelfCheckError("gradient check failed: max deviation " +
                                      std::to_string(r.max_deviation()) +
                                      " exceeds tolerance");
    }
  });
}

}  // extern "C"
