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
#include "spanscope/similarity.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "spanscope/error.hpp"
#include "test_support.hpp"

namespace spanscope {
namespace {

using testing::make_query;
using testing::make_video;
using testing::random_scale;
using testing::random_vector;
using testing::scaled;

std::vector<double> v(std::initializer_list<double> xs) { return xs; }

TEST(Cosine, Examples) {
  EXPECT_EQ(cosine(v({1, 0}), v({1, 0})), 1.0);
  EXPECT_EQ(cosine(v({1, 0}), v({0, 1})), 0.0);
  EXPECT_NEAR(cosine(v({1, 2, 2}), v({2, 4, 4})), 1.0, 1e-15);
  EXPECT_LE(cosine(v({1, 2, 2}), v({2, 4, 4})), 1.0);
}

TEST(Cosine, DimensionMismatchNamesBothDims) {
  try {
    cosine(v({1, 0, 0}), v({1, 0}));
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find('3'), std::string::npos) << msg;
    EXPECT_NE(msg.find('2'), std::string::npos) << msg;
  }
}

TEST(Cosine, ZeroVectorNamesArgument) {
  try {
    cosine(v({0, 0}), v({1, 0}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("first"), std::string::npos);
  }
  try {
    cosine(v({1, 0}), v({0, 0}));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("second"), std::string::npos);
  }
  EXPECT_THROW(cosine(v({std::numeric_limits<double>::infinity(), 0}), v({1, 0})),
               ValidationError);
}

TEST(Cosine, SymmetricAndScaleInvariant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_vector(rng, 8);
    const auto b = random_vector(rng, 8);
    const double c = cosine(a, b);
    EXPECT_EQ(c, cosine(b, a));
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
    EXPECT_NEAR(cosine(scaled(a, random_scale(rng)), scaled(b, random_scale(rng))), c, 1e-12);
  }
}

TEST(ScoreProfile, Examples) {
  EXPECT_EQ(score_profile(make_video({{1, 0}}), make_query(1, {1, 0})),
            std::vector<double>{1.0});
  EXPECT_EQ(score_profile(make_video({{1, 0}}), make_query(1, {1, 0}, {{0, 1}})),
            std::vector<double>{0.5});
  ScoreOptions max_opts;
  max_opts.aggregation = Aggregation::kMax;
  EXPECT_EQ(score_profile(make_video({{1, 0}, {0, 1}}), make_query(1, {1, 0}, {{0, 1}}),
                          max_opts),
            (std::vector<double>{1.0, 1.0}));
}

TEST(ScoreProfile, RewritesOnlyDropsOriginal) {
  ScoreOptions opts;
  opts.include_original = false;
  EXPECT_EQ(score_profile(make_video({{1, 0}}), make_query(1, {1, 0}, {{0, 1}}), opts),
            std::vector<double>{0.0});
  EXPECT_THROW(score_profile(make_video({{1, 0}}), make_query(1, {1, 0}), opts),
               ValidationError);
}

TEST(ScoreProfile, EmptyPoolAndDimensionMismatchAreErrors) {
  EXPECT_THROW(score_profile(make_video({{1, 0}}), make_query(1, {})), ValidationError);
  EXPECT_THROW(score_profile(make_video({{1, 0}}), make_query(1, {1, 0, 0})),
               ValidationError);
}

TEST(ScoreProfile, MaxDominatesMean) {
  std::mt19937_64 rng(5);
  ScoreOptions max_opts;
  max_opts.aggregation = Aggregation::kMax;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> frames;
    for (int i = 0; i < 12; ++i) frames.push_back(random_vector(rng, 6));
    std::vector<std::vector<double>> rewrites;
    for (int i = 0; i < 3; ++i) rewrites.push_back(random_vector(rng, 6));
    const auto video = make_video(frames);
    const auto query = make_query(1, random_vector(rng, 6), rewrites);
    const auto mean = score_profile(video, query);
    const auto max = score_profile(video, query, max_opts);
    for (std::size_t i = 0; i < mean.size(); ++i) EXPECT_GE(max[i], mean[i]);
  }
}

TEST(ScoreProfile, IdenticalUnderPositiveRescaling) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> frames, frames_scaled;
    for (int i = 0; i < 20; ++i) {
      frames.push_back(random_vector(rng, 6));
      frames_scaled.push_back(scaled(frames.back(), random_scale(rng)));
    }
    const auto orig = random_vector(rng, 6);
    const auto rw = random_vector(rng, 6);
    const auto a = score_profile(make_video(frames), make_query(1, orig, {rw}));
    const auto b = score_profile(make_video(frames_scaled),
                                 make_query(1, scaled(orig, random_scale(rng)),
                                            {scaled(rw, random_scale(rng))}));
    EXPECT_EQ(a, b);
  }
}

TEST(RewriteQuality, Examples) {
  EXPECT_EQ(rewrite_quality(-2.0, -2.0), 1.0);
  EXPECT_NEAR(rewrite_quality(std::log(0.25), std::log(0.5)), 0.5, 1e-15);
  EXPECT_EQ(rewrite_quality(-1.0, -3.0), 1.0);
  EXPECT_THROW(rewrite_quality(std::nan(""), -1.0), ValidationError);
}

TEST(RewriteQuality, MonotoneAndBounded) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-30.0, 0.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = u(rng);
    const double y = u(rng);
    const double q = u(rng);
    const double lo = rewrite_quality(std::min(x, y), q);
    const double hi = rewrite_quality(std::max(x, y), q);
    EXPECT_LE(lo, hi);
    EXPECT_GE(lo, 0.0);
    EXPECT_LE(hi, 1.0);
  }
}

TEST(Aggregation, ParseRoundTrip) {
  EXPECT_EQ(parse_aggregation("mean"), Aggregation::kMean);
  EXPECT_EQ(parse_aggregation("max"), Aggregation::kMax);
  EXPECT_EQ(aggregation_name(Aggregation::kMax), "max");
  EXPECT_THROW(parse_aggregation("median"), ValidationError);
}

}  // namespace
}  // namespace spanscope
