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
#include "spanscope/anchors.hpp"

#include <gtest/gtest.h>

#include <random>

#include "spanscope/error.hpp"

namespace spanscope {
namespace {

// Parses a string of '1' (marked) and '0' (unmarked) frames.
std::vector<bool> marks_of(const std::string& pattern) {
  std::vector<bool> out;
  for (char c : pattern) out.push_back(c == '1');
  return out;
}

// Reference grouping: list the marked indices, then cut wherever two
// neighbours in that list are more than max_gap + 1 apart.
std::vector<std::pair<std::size_t, std::size_t>> reference_regions(
    const std::vector<bool>& marks, std::size_t max_gap) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i]) idx.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> regions;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || idx[k] - idx[k - 1] > max_gap + 1) {
      regions.emplace_back(idx[k], idx[k]);
    } else {
      regions.back().second = idx[k];
    }
  }
  return regions;
}

std::vector<double> random_scores(std::mt19937_64& rng, std::size_t n) {
  // Two-decimal scores so that the histogram has repeated bins.
  std::uniform_int_distribution<int> cents(0, 60);
  std::vector<double> out(n);
  for (auto& s : out) s = cents(rng) / 100.0;
  return out;
}

TEST(SelectThreshold, Examples) {
  const std::vector<double> ten = {0.31, 0.31, 0.42, 0.42, 0.42,
                                   0.55, 0.55, 0.55, 0.55, 0.61};
  EXPECT_EQ(select_threshold(ten), 0.31);
  EXPECT_EQ(select_threshold(std::vector<double>{0.5, 0.5, 0.5}), 0.5);
  EXPECT_EQ(select_threshold(std::vector<double>{0.1, 0.2}), 0.1);
}

TEST(SelectThreshold, QuantizesBeforeCounting) {
  // 0.304 and 0.306 fall into bins 0.30 and 0.31.
  const std::vector<double> s = {0.304, 0.306, 0.311, 0.5, 0.5, 0.5, 0.7};
  // Bins: 0.50 x3, 0.31 x2, then 0.70 and 0.30 tie at 1 and the higher wins.
  EXPECT_EQ(select_threshold(s), 0.7);
}

TEST(SelectThreshold, RejectsBadInput) {
  EXPECT_THROW(select_threshold(std::vector<double>{}), ValidationError);
  EXPECT_THROW(select_threshold(std::vector<double>{0.1}, 0.0), ValidationError);
  EXPECT_THROW(select_threshold(std::vector<double>{std::nan("")}), ValidationError);
}

TEST(Mark, Examples) {
  EXPECT_EQ(mark(std::vector<double>{0.9, 0.1}, 0.5), marks_of("10"));
  EXPECT_EQ(mark(std::vector<double>{0.5}, 0.5), marks_of("0"));
  EXPECT_EQ(mark(std::vector<double>{0.31, 0.31, 0.42, 0.55, 0.61}, 0.31),
            marks_of("00111"));
}

TEST(ExtractAnchors, GapOfFiveMerges) {
  const auto m = marks_of("1110000011");
  const std::vector<double> s(m.size(), 0.5);
  const auto anchors = extract_anchors(m, s, 2.0);
  ASSERT_EQ(anchors.size(), 1u);
  EXPECT_EQ(anchors[0].start_s(), 0.0);
  EXPECT_EQ(anchors[0].end_s(), 20.0);
}

TEST(ExtractAnchors, GapOfSixSplits) {
  const auto m = marks_of("10000001");
  const std::vector<double> s(m.size(), 0.5);
  const auto anchors = extract_anchors(m, s, 2.0);
  ASSERT_EQ(anchors.size(), 2u);
  EXPECT_EQ(anchors[0], SpanAnchor(0.0, 2.0, 0.5));
  EXPECT_EQ(anchors[1], SpanAnchor(14.0, 16.0, 0.5));
}

TEST(ExtractAnchors, AllUnmarkedGivesNothing) {
  const auto m = marks_of("0000000");
  EXPECT_TRUE(extract_anchors(m, std::vector<double>(m.size(), 0.1), 2.0).empty());
  EXPECT_TRUE(extract_anchors({}, std::vector<double>{}, 2.0).empty());
}

TEST(ExtractAnchors, MeanIncludesGapFrames) {
  const auto m = marks_of("101");
  const std::vector<double> s = {0.9, 0.0, 0.6};
  const auto anchors = extract_anchors(m, s, 1.0);
  ASSERT_EQ(anchors.size(), 1u);
  EXPECT_DOUBLE_EQ(anchors[0].mean_score(), 0.5);
}

TEST(ExtractAnchors, LengthMismatchIsAnError) {
  EXPECT_THROW(extract_anchors(marks_of("10"), std::vector<double>{0.5}, 2.0),
               ValidationError);
}

TEST(ExtractAnchors, SolidRunIsOneAnchor) {
  const auto m = marks_of("0011111100");
  const auto anchors = extract_anchors(m, std::vector<double>(m.size(), 0.3), 2.0);
  ASSERT_EQ(anchors.size(), 1u);
  EXPECT_EQ(anchors[0].start_s(), 4.0);
  EXPECT_EQ(anchors[0].end_s(), 16.0);
}

TEST(ExtractAnchors, AgreesWithReferenceGrouping) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> len(0, 80);
  std::uniform_int_distribution<std::size_t> gap(0, 8);
  std::bernoulli_distribution coin(0.25);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = len(rng);
    const std::size_t max_gap = gap(rng);
    std::vector<bool> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = coin(rng);
    const auto s = random_scores(rng, n);
    const auto anchors = extract_anchors(m, s, 2.0, max_gap);
    const auto ref = reference_regions(m, max_gap);
    ASSERT_EQ(anchors.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
      EXPECT_EQ(anchors[k].start_s(), 2.0 * ref[k].first);
      EXPECT_EQ(anchors[k].end_s(), 2.0 * (ref[k].second + 1));
    }
  }
}

TEST(ExtractAnchors, CoverEveryMarkExactlyOnce) {
  std::mt19937_64 rng(18);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<bool> m(60);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = coin(rng);
    const auto anchors =
        extract_anchors(m, random_scores(rng, m.size()), 2.0, kDefaultMaxGap);
    EXPECT_NO_THROW(validate_anchor_list(anchors, 120.0, 2.0));
    for (std::size_t i = 0; i < m.size(); ++i) {
      int covering = 0;
      for (const auto& a : anchors) {
        if (a.start_s() <= 2.0 * i && 2.0 * (i + 1) <= a.end_s()) ++covering;
      }
      if (m[i]) EXPECT_EQ(covering, 1) << "frame " << i;
    }
  }
}

TEST(ExtractAnchors, ZeroGapYieldsMaximalRuns) {
  std::mt19937_64 rng(19);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<bool> m(40);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = coin(rng);
    const auto anchors = extract_anchors(m, std::vector<double>(m.size(), 0.2), 1.0, 0);
    std::size_t runs = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] && (i == 0 || !m[i - 1])) ++runs;
    }
    ASSERT_EQ(anchors.size(), runs);
    for (const auto& a : anchors) {
      for (auto i = static_cast<std::size_t>(a.start_s());
           i < static_cast<std::size_t>(a.end_s()); ++i) {
        EXPECT_TRUE(m[i]);
      }
    }
  }
}

TEST(Mark, LoweringThresholdNeverLosesMarks) {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> t(-0.2, 0.8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_scores(rng, 50);
    const double a = t(rng);
    const double b = t(rng);
    const auto hi = mark(s, std::max(a, b));
    const auto lo = mark(s, std::min(a, b));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (hi[i]) EXPECT_TRUE(lo[i]);
    }
  }
}

TEST(MakeProfile, FlatProfileHasNoMarks) {
  const auto p = make_profile("v", 1, 2.0, 10.0, {0.4, 0.4, 0.4, 0.4, 0.4});
  EXPECT_EQ(p.threshold(), 0.4);
  for (bool b : p.marks()) EXPECT_FALSE(b);
}

}  // namespace
}  // namespace spanscope
