#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ehrelay/profiles.hpp"

namespace ehrelay {
namespace {

TEST(Sinusoid, FirstBlockValues) {
  const EnergyProfile s = sinusoidal_profile({200.0, 40, std::numbers::pi / 2, Node::kSource});
  EXPECT_DOUBLE_EQ(s[0], 400.0);
  const EnergyProfile r = sinusoidal_profile({200.0, 40, 5 * std::numbers::pi / 4, Node::kRelay});
  EXPECT_NEAR(r[0], 200.0 * (1.0 - std::sqrt(2.0) / 2.0), 1e-12);
  EXPECT_NEAR(r[0], 58.579, 1e-3);
  EXPECT_EQ(r.node(), Node::kRelay);
}

TEST(Sinusoid, TroughIsZero) {
  // Phase pi/2 reaches 3 pi / 2 at i - 1 = N / 2.
  const EnergyProfile s = sinusoidal_profile({7.5, 40, std::numbers::pi / 2, Node::kSource});
  EXPECT_NEAR(s[20], 0.0, 1e-12);
  EXPECT_GE(s[20], 0.0);
}

TEST(Sinusoid, NonNegativeWithPeriodMean) {
  for (std::size_t n : {2u, 8u, 40u, 64u}) {
    for (double phase : {0.0, 1.0, std::numbers::pi / 2, 5 * std::numbers::pi / 4}) {
      const EnergyProfile p = sinusoidal_profile({3.0, n, phase, Node::kRelay});
      for (double e : p.amounts()) EXPECT_GE(e, 0.0);
      EXPECT_NEAR(p.total(), n * 3.0, 1e-9 * n * 3.0);
    }
  }
}

TEST(Sinusoid, RejectsBadSpec) {
  EXPECT_THROW(sinusoidal_profile({0.0, 4, 0.0, Node::kSource}), InvalidInstance);
  EXPECT_THROW(sinusoidal_profile({1.0, 0, 0.0, Node::kSource}), InvalidInstance);
}

TEST(Constant, Examples) {
  EXPECT_EQ(constant_profile(2.0, 3).amounts(), (std::vector<double>{2, 2, 2}));
  EXPECT_EQ(constant_profile(0.0, 5).total(), 0.0);
  EXPECT_THROW(constant_profile(-1.0, 2), InvalidInstance);
}

TEST(ProfileDocument, LoadsList) {
  const EnergyProfile p = load_profile(R"({"node": "source", "B": 1, "amounts": [1, 2, 3]})");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.node(), Node::kSource);
  const ProfileDocument d = load_profile_document(R"({"node": "relay", "B": 2.5, "amounts": []})");
  EXPECT_EQ(d.profile.node(), Node::kRelay);
  EXPECT_DOUBLE_EQ(*d.block_len, 2.5);
}

TEST(ProfileDocument, NegativeEntryReportsIndexAndLine) {
  try {
    load_profile("{\n  \"node\": \"source\",\n  \"amounts\": [\n    1,\n    -1\n  ]\n}\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(ProfileDocument, MalformedJsonReportsLine) {
  try {
    load_profile("{\n  \"node\": \"source\",\n  \"amounts\": [1, 2,, 3]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_profile(R"({"amounts": [1]})"), ParseError);
  EXPECT_THROW(load_profile(R"({"node": "sink", "amounts": [1]})"), ParseError);
  EXPECT_THROW(load_profile(R"({"node": "source", "amounts": [1, "x"]})"), ParseError);
}

TEST(ProfileDocument, RoundTripIsBitExact) {
  const std::vector<double> values{0.1, 1.0 / 3.0, 58.57864376269049, 1e-300, 123456789.123456789, 0.0};
  const EnergyProfile p(values, Node::kRelay);
  const ProfileDocument back = load_profile_document(save_profile(p, 100.0));
  EXPECT_EQ(back.profile.amounts(), values);
  EXPECT_EQ(back.profile.node(), Node::kRelay);
  EXPECT_DOUBLE_EQ(*back.block_len, 100.0);
}

}  // namespace
}  // namespace ehrelay
