#include "tint/ingestion.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "tint/error.hpp"

namespace tint {
namespace {

AssociationSurvey parse(const std::string& text, StrengthMode mode = StrengthMode::strict) {
  std::istringstream in(text);
  return parse_survey(in, "survey.csv", mode);
}

TEST(StrengthToWeight, LikertPointsAreExact) {
  EXPECT_EQ(strength_to_weight(1), 0.05);
  EXPECT_EQ(strength_to_weight(2), 0.275);
  EXPECT_EQ(strength_to_weight(3), 0.5);
  EXPECT_EQ(strength_to_weight(4), 0.725);
  EXPECT_EQ(strength_to_weight(5), 0.95);
}

TEST(StrengthToWeight, StrictRejectsNonIntegers) {
  EXPECT_THROW(strength_to_weight(2.5), InputError);
  EXPECT_THROW(strength_to_weight(0), InputError);
  EXPECT_THROW(strength_to_weight(6), InputError);
  EXPECT_NEAR(strength_to_weight(2.5, StrengthMode::lenient), 0.3875, 1e-15);
  EXPECT_THROW(strength_to_weight(5.5, StrengthMode::lenient), InputError);
}

TEST(Survey, AllOnesGivesBaselineWeights) {
  auto survey = parse("label,a,b,c\na,1,1,1\nb,1,1,1\nc,1,1,1\n");
  auto latent = survey_to_latent(survey);
  for (ImageId i = 0; i < 3; ++i) {
    for (ImageId j = 0; j < 3; ++j) EXPECT_EQ(latent.weight(i, j), i == j ? 1.0 : 0.05);
  }
}

TEST(Survey, DiagonalIgnored) {
  auto latent = survey_to_latent(parse("label,a,b\na,2,5\nb,3,1\n"));
  EXPECT_EQ(latent.weight(0, 0), 1.0);
  EXPECT_EQ(latent.weight(1, 1), 1.0);
  EXPECT_EQ(latent.weight(0, 1), 0.95);
  EXPECT_EQ(latent.weight(1, 0), 0.5);
}

TEST(Survey, RowCountMismatchNamesTheFile) {
  try {
    parse("label,a,b,c\na,1,1,1\nb,1,1,1\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.file(), "survey.csv");
    EXPECT_NE(std::string(e.what()).find("survey.csv"), std::string::npos);
  }
}

TEST(Survey, StructuralErrors) {
  EXPECT_THROW(parse(""), InputError);
  EXPECT_THROW(parse("name,a\na,1\n"), InputError);
  EXPECT_THROW(parse("label,a,b\nb,1,1\na,1,1\n"), InputError);
  EXPECT_THROW(parse("label,a,b\na,1\nb,1,1\n"), InputError);
  EXPECT_THROW(parse("label,a,a\na,1,1\na,1,1\n"), InputError);
  EXPECT_THROW(parse("label,a,b\na,1,x\nb,1,1\n"), InputError);
  EXPECT_THROW(parse("label,a,b\na,1,nan\nb,1,1\n"), InputError);
}

TEST(Survey, OutOfRangeReportsLine) {
  try {
    parse("label,a,b\na,1,2\nb,7,1\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Survey, BomCrlfAndBlankLines) {
  auto survey = parse("\xEF\xBB\xBFlabel,a,b\r\n\r\na, 1 ,2\r\nb,3,1\r\n");
  EXPECT_EQ(survey.labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(survey.at(0, 1), 2.0);
}

TEST(Survey, UnicodeLabels) {
  auto survey = parse("label,papillon,danseuse\xC3\xA9\npapillon,1,2\ndanseuse\xC3\xA9,3,1\n");
  EXPECT_EQ(survey.labels[1], "danseuse\xC3\xA9");
}

TEST(Survey, InvalidUtf8ReportsLine) {
  try {
    parse("label,a,b\na,1,2\nb\xFF,3,1\n");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Survey, LenientAcceptsRealValues) {
  EXPECT_THROW(parse("label,a,b\na,1,2.5\nb,3,1\n"), InputError);
  auto survey = parse("label,a,b\na,1,2.5\nb,3,1\n", StrengthMode::lenient);
  EXPECT_EQ(survey.at(0, 1), 2.5);
}

TEST(Survey, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 12;
    AssociationSurvey s;
    for (std::size_t i = 0; i < n; ++i) s.labels.push_back("img" + std::to_string(i));
    std::uniform_real_distribution<double> u(1.0, 5.0);
    for (std::size_t k = 0; k < n * n; ++k) {
      s.strengths.push_back(round % 2 ? u(rng) : static_cast<double>(1 + rng() % 5));
    }
    std::ostringstream out;
    write_survey(out, s);
    auto back = parse(out.str(), StrengthMode::lenient);
    EXPECT_EQ(back, s);
  }
}

TEST(PairTables, InterpretationAndSimilarity) {
  std::istringstream in("source,target,score\ndance,fly,4.5\nnight,sky,2\n");
  auto human = parse_interpretation(in, "interp.csv");
  EXPECT_EQ(human.scores.size(), 2u);
  EXPECT_EQ(human.scores.at("dance", "fly"), 4.5);
  EXPECT_FALSE(human.scores.find("fly", "dance"));

  std::istringstream headerless("a,b,0.5\nb,a,-0.25\n");
  auto sim = parse_similarity(headerless, "sim.csv");
  EXPECT_EQ(sim.values.at("b", "a"), -0.25);

  std::istringstream out_of_range("a,b,1.5\n");
  EXPECT_THROW(parse_similarity(out_of_range, "sim.csv"), InputError);
  std::istringstream dup("a,b,0.1\na,b,0.2\n");
  EXPECT_THROW(parse_similarity(dup, "sim.csv"), InputError);

  std::vector<std::string> sources{"a", "b"}, targets{"b", "c"};
  EXPECT_THROW(sim.values.require_pairs(sources, targets, "similarity"), InputError);
}

TEST(Fixture, LoadsAndCoversItself) {
  auto survey = load_survey(TINT_FIXTURE_DIR "/survey.csv", StrengthMode::lenient);
  EXPECT_EQ(survey.size(), 17u);
  EXPECT_THROW(load_survey(TINT_FIXTURE_DIR "/survey.csv", StrengthMode::strict), InputError);
  EXPECT_THROW(load_survey(TINT_FIXTURE_DIR "/missing.csv"), InputError);
}

}  // namespace
}  // namespace tint
