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
/* C interface of libspanscope.
 *
 * Every function returns an ssc_status. On failure a description of the error
 * is available from ssc_last_error() on the calling thread until the next
 * call into the library from that thread. Objects are opaque handles created
 * by *_load / *_compute functions and released with the matching *_free
 * function; *_free accepts NULL. Handles are immutable after creation and may
 * be shared between threads.
 */
#ifndef SPANSCOPE_SPANSCOPE_H_
#define SPANSCOPE_SPANSCOPE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPANSCOPE_BUILDING_LIBRARY)
#    define SSC_API __declspec(dllexport)
#  else
#    define SSC_API __declspec(dllimport)
#  endif
#else
#  define SSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum ssc_status {
  SSC_OK = 0,
  SSC_ERROR_VALIDATION = 1,
  SSC_ERROR_IO = 2,
  SSC_ERROR_SELF_CHECK = 3,
  SSC_ERROR_INTERNAL = 4
} ssc_status;

SSC_API const char* ssc_last_error(void);
SSC_API const char* ssc_version(void);

typedef struct ssc_video ssc_video;
typedef struct ssc_query ssc_query;
typedef struct ssc_profiles ssc_profiles;
typedef struct ssc_anchors ssc_anchors;
typedef struct ssc_predictions ssc_predictions;
typedef struct ssc_annotations ssc_annotations;
typedef struct ssc_report ssc_report;

/* ---- feature files ------------------------------------------------------ */

SSC_API ssc_status ssc_video_load(const char* path, ssc_video** out);
SSC_API void ssc_video_free(ssc_video* video);
SSC_API size_t ssc_video_frame_count(const ssc_video* video);
SSC_API const char* ssc_video_id(const ssc_video* video);

SSC_API ssc_status ssc_query_load(const char* path, ssc_query** out);
SSC_API void ssc_query_free(ssc_query* query);
/* Query id rendered as text. */
SSC_API const char* ssc_query_id(const ssc_query* query);

/* ---- similarity profiles ------------------------------------------------ */

typedef enum ssc_aggregation { SSC_AGGREGATION_MEAN = 0, SSC_AGGREGATION_MAX = 1 } ssc_aggregation;

typedef struct ssc_score_options {
  ssc_aggregation aggregation;
  int include_original;  /* nonzero: original query joins the rewrite pool */
  double resolution;     /* score snapping grid, 0 disables */
  double quantization;   /* threshold histogram bin width */
  size_t jobs;
} ssc_score_options;

SSC_API void ssc_score_options_default(ssc_score_options* options);

SSC_API ssc_status ssc_profiles_compute(const ssc_video* const* videos, size_t video_count,
                                        const ssc_query* const* queries, size_t query_count,
                                        const ssc_score_options* options, ssc_profiles** out);
SSC_API ssc_status ssc_profiles_load(const char* path, ssc_profiles** out);
SSC_API ssc_status ssc_profiles_save(const ssc_profiles* profiles, const char* path);
SSC_API void ssc_profiles_free(ssc_profiles* profiles);
SSC_API size_t ssc_profiles_count(const ssc_profiles* profiles);
SSC_API ssc_status ssc_profiles_scores(const ssc_profiles* profiles, size_t index,
                                       const double** scores, size_t* length);
SSC_API ssc_status ssc_profiles_threshold(const ssc_profiles* profiles, size_t index,
                                          double* threshold);

/* ---- span anchors ------------------------------------------------------- */

typedef struct ssc_anchor_options {
  double quantization;
  size_t max_gap;
  size_t jobs;
} ssc_anchor_options;

typedef struct ssc_span_anchor {
  double start_s;
  double end_s;
  double mean_score;
} ssc_span_anchor;

SSC_API void ssc_anchor_options_default(ssc_anchor_options* options);
SSC_API ssc_status ssc_anchors_extract(const ssc_profiles* profiles,
                                       const ssc_anchor_options* options, ssc_anchors** out);
SSC_API ssc_status ssc_anchors_load(const char* path, ssc_anchors** out);
SSC_API ssc_status ssc_anchors_save(const ssc_anchors* anchors, const char* path);
SSC_API void ssc_anchors_free(ssc_anchors* anchors);
SSC_API size_t ssc_anchors_count(const ssc_anchors* anchors);

/* ---- zero-shot predictions ---------------------------------------------- */

typedef enum ssc_confidence {
  SSC_CONFIDENCE_MEAN = 0,
  SSC_CONFIDENCE_MAX = 1,
  SSC_CONFIDENCE_LENGTH_WEIGHTED = 2
} ssc_confidence;

typedef struct ssc_predict_options {
  size_t top_k;
  ssc_confidence confidence;
  size_t jobs;
} ssc_predict_options;

SSC_API void ssc_predict_options_default(ssc_predict_options* options);
SSC_API ssc_status ssc_predict(const ssc_anchors* anchors, const ssc_profiles* profiles,
                               const ssc_predict_options* options, ssc_predictions** out);
SSC_API ssc_status ssc_predictions_load(const char* path, ssc_predictions** out);
SSC_API ssc_status ssc_predictions_save(const ssc_predictions* predictions, const char* path);
SSC_API void ssc_predictions_free(ssc_predictions* predictions);
SSC_API size_t ssc_predictions_count(const ssc_predictions* predictions);

/* ---- evaluation --------------------------------------------------------- */

typedef struct ssc_eval_options {
  int very_good_cut;
} ssc_eval_options;

SSC_API void ssc_eval_options_default(ssc_eval_options* options);
SSC_API ssc_status ssc_annotations_load(const char* path, double clip_stride_s,
                                        ssc_annotations** out);
SSC_API void ssc_annotations_free(ssc_annotations* annotations);
SSC_API size_t ssc_annotations_count(const ssc_annotations* annotations);

SSC_API ssc_status ssc_evaluate(const ssc_predictions* predictions,
                                const ssc_annotations* annotations,
                                const ssc_eval_options* options, ssc_report** out);
SSC_API void ssc_report_free(ssc_report* report);
/* Keys: mr_r1_0.5 mr_r1_0.7 mr_map_0.5 mr_map_0.75 mr_map_avg hd_map hd_hit1 */
SSC_API ssc_status ssc_report_metric(const ssc_report* report, const char* key, double* value);
/* Strings are owned by the report. */
SSC_API const char* ssc_report_json(const ssc_report* report);
SSC_API const char* ssc_report_text(const ssc_report* report);

/* ---- primitives --------------------------------------------------------- */

SSC_API ssc_status ssc_cosine(const double* a, size_t a_dim, const double* b, size_t b_dim,
                              double* out);
SSC_API ssc_status ssc_rewrite_quality(double logp_paraphrase_given_q, double logp_q_given_q,
                                       double* out);
SSC_API ssc_status ssc_select_threshold(const double* scores, size_t length,
                                        double quantization, double* out);
/* Writes up to `capacity` anchors; `*count` always receives the total. Pass
 * out = NULL to query the count. Marks are 0 / nonzero. */
SSC_API ssc_status ssc_extract_anchors(const unsigned char* marks, const double* scores,
                                       size_t length, double stride_s, size_t max_gap,
                                       ssc_span_anchor* out, size_t capacity, size_t* count);

/* ---- losses ------------------------------------------------------------- */

typedef struct ssc_loss_weights {
  double lambda_l1;
  double lambda_iou;
  double lambda_cls;
  double lambda_h;
  double w_p;
  double delta;
} ssc_loss_weights;

typedef struct ssc_grad_check_report {
  size_t trials;
  double moment_loss;
  double weighted_bce;
  double highlight_hinge;
  double max_deviation;
  int passed;
} ssc_grad_check_report;

SSC_API void ssc_loss_weights_default(ssc_loss_weights* weights);
SSC_API ssc_status ssc_temporal_iou(double a_center, double a_width, double b_center,
                                    double b_width, double* out);
SSC_API ssc_status ssc_giou_loss_1d(double a_center, double a_width, double b_center,
                                    double b_width, double* out);
SSC_API ssc_status ssc_moment_loss(double pred_center, double pred_width, double gt_center,
                                   double gt_width, const ssc_loss_weights* weights,
                                   double* out);
SSC_API ssc_status ssc_weighted_bce(const double* p, const int* z, size_t length, double w_p,
                                    double* out);
SSC_API ssc_status ssc_highlight_hinge(double h_high, double h_low, double h_in, double h_out,
                                       double delta, double* out);
SSC_API ssc_status ssc_total_loss(double moment, double cls, double hinge,
                                  const ssc_loss_weights* weights, double* out);
/* Fills `out` and returns SSC_ERROR_SELF_CHECK when any deviation exceeds 1e-4. */
SSC_API ssc_status ssc_loss_check(size_t trials, uint64_t seed, ssc_grad_check_report* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SPANSCOPE_SPANSCOPE_H_ */
