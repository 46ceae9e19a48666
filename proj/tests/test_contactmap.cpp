#include <gtest/gtest.h>

#include <stacklab/contactmap.hpp>
#include <stacklab/verify.hpp>

using namespace stacklab;

namespace {

ArcSet arcs(const char* text) { return parse_diagram(std::string("n=99; ") + text).arcs(); }

Diagram sample_contact_map() {
  std::vector<Arc> all;
  for (const auto& p : expected::kContactParts) all.insert(all.end(), p.begin(), p.end());
  return Diagram(24, all);
}

}  // namespace

TEST(Contacts, Examples) {
  EXPECT_EQ(contacts(LatticeWalk("RRRR")), Diagram(5));
  EXPECT_EQ(contacts(LatticeWalk("RUL")), parse_diagram("n=4; 1-4"));
  EXPECT_EQ(contacts(LatticeWalk("")), Diagram(1));
  EXPECT_EQ(contacts(LatticeWalk(expected::kContactWalk)), sample_contact_map());
  EXPECT_EQ(sample_contact_map().size(), 15U);
}

TEST(Contacts, RejectsBadWalks) {
  EXPECT_THROW(LatticeWalk("RULD"), WalkError);
  EXPECT_THROW(LatticeWalk("RX"), WalkError);
  EXPECT_THROW(LatticeWalk("RL"), WalkError);
}

TEST(Contacts, LocalShape) {
  // All self-avoiding walks of length 10 starting with R.
  std::vector<std::string> frontier{"R"};
  for (int len = 1; len < 10; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (char c : std::string("UDLR")) {
        try {
          LatticeWalk probe(w + c);
          next.push_back(w + c);
        } catch (const WalkError&) {
        }
      }
    frontier = std::move(next);
  }
  ASSERT_GT(frontier.size(), 1000U);
  for (const auto& moves : frontier) {
    const LatticeWalk w(moves);
    const Diagram d = contacts(w);
    const DegreeProfile p(d);
    for (const Arc& a : d.arcs()) {
      ASSERT_GE(a.length(), 2);
      const auto [x1, y1] = w.at(a.i);
      const auto [x2, y2] = w.at(a.j);
      ASSERT_EQ(std::abs(x1 - x2) + std::abs(y1 - y2), 1);
    }
    for (int v = 2; v < d.n(); ++v) ASSERT_LE(p.deg(v), 2) << moves;
    ASSERT_LE(p.deg(1), 3);
    ASSERT_LE(p.deg(d.n()), 3);
  }
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_decomposition(sample_contact_map(), expected::kContactParts));
  const Diagram one = parse_diagram("n=3; 1-3");
  EXPECT_TRUE(verify_decomposition(one, {arcs("1-3")}));
  const Diagram crossing = parse_diagram("n=4; 1-3 2-4");
  EXPECT_FALSE(is_stack(crossing));
  EXPECT_FALSE(verify_decomposition(crossing, {arcs("1-3 2-4")}));
  EXPECT_TRUE(verify_decomposition(crossing, {{}, {}, arcs("1-3 2-4")}));
  EXPECT_TRUE(verify_decomposition(crossing, {arcs("1-3"), arcs("2-4")}));
  EXPECT_THROW(verify_decomposition(crossing, {arcs("1-3")}), DiagramError);
  EXPECT_THROW(verify_decomposition(crossing, {arcs("1-3 2-4"), arcs("2-4")}), DiagramError);
}

TEST(Verify, RequiresQueueForThirdPart) {
  const Diagram d = parse_diagram("n=6; 1-4 2-5 3-6");
  EXPECT_TRUE(verify_decomposition(d, {arcs("1-4"), arcs("2-5"), arcs("3-6")}));
  EXPECT_TRUE(verify_decomposition(d, {{}, {}, arcs("1-4 2-5 3-6")}));
  const Diagram nest = parse_diagram("n=6; 1-6 2-5 3-4 1-3 2-4");
  EXPECT_FALSE(verify_decomposition(nest, {arcs("1-3"), arcs("2-4"), arcs("1-6 2-5 3-4")}));
  EXPECT_TRUE(verify_decomposition(nest, {arcs("1-6 2-5 3-4"), arcs("2-4"), arcs("1-3")}));
  EXPECT_FALSE(verify_decomposition(d, {arcs("1-4"), arcs("2-5"), arcs("3-6"), {}}));
}

TEST(Heuristic, OutputIsVerified) {
  for (const Diagram& d : {sample_contact_map(), parse_diagram("n=3; 1-3"), parse_diagram("n=4; 1-3 2-4"),
                           parse_diagram("n=6; 1-4 2-5 3-6")}) {
    const auto parts = decompose_heuristic(d);
    ASSERT_TRUE(parts.has_value()) << render(d);
    EXPECT_TRUE(verify_decomposition(d, *parts)) << render(d);
  }
}

TEST(Heuristic, FailureIsAValue) {
  // A stack or a queue on [n] holds at most 2n - 3 arcs, so the complete
  // graph on [12] has too many arcs for any split.
  std::vector<Arc> all;
  for (int i = 1; i <= 12; ++i)
    for (int j = i + 1; j <= 12; ++j) all.push_back({i, j});
  EXPECT_GT(all.size(), 3U * (2 * 12 - 3));
  EXPECT_FALSE(decompose_heuristic(Diagram(12, all), 200000).has_value());
  EXPECT_FALSE(decompose_heuristic(sample_contact_map(), 5).has_value());
}
