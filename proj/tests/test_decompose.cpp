#include <gtest/gtest.h>

#include <stacklab/decompose.hpp>
#include <stacklab/enumerate.hpp>

using namespace stacklab;

namespace {

std::vector<std::pair<int, int>> ranges(const std::vector<Interval>& ivs) {
  std::vector<std::pair<int, int>> out;
  for (const auto& iv : ivs) out.emplace_back(iv.lo, iv.hi);
  return out;
}

std::vector<std::string> tags(const char* text, int m) {
  return tag_strings(classify_intervals(primary_component(parse_diagram(text)), m));
}

}  // namespace

TEST(PrimaryComponent, SeventeenVertexExample) {
  const Diagram S = parse_diagram("n=17; 1-7 1-13 9-13 2-3 5-6 10-11 10-12 16-17");
  const Decomposition dec = primary_component(S);
  EXPECT_EQ(dec.vertices, (std::vector<int>{1, 7, 9, 13}));
  EXPECT_EQ(dec.component, parse_diagram("n=17; 1-7 1-13 9-13"));
  using R = std::vector<std::pair<int, int>>;
  EXPECT_EQ(ranges(dec.public_intervals()), (R{{2, 6}, {8, 8}, {10, 12}, {14, 17}}));
  EXPECT_EQ(dec.jsets(), (R{{1, 7}, {7, 9}, {9, 13}, {13, 17}}));
  EXPECT_EQ(dec.substructure(dec.intervals[0]), parse_diagram("n=5; 1-2 4-5"));
  EXPECT_EQ(dec.substructure(dec.intervals[3]), parse_diagram("n=4; 3-4"));
}

TEST(PrimaryComponent, TrivialShapes) {
  const Decomposition iso = primary_component(parse_diagram("n=5; 2-4"));
  EXPECT_EQ(iso.vertices, std::vector<int>{1});
  EXPECT_TRUE(iso.component.empty());
  ASSERT_EQ(iso.public_intervals().size(), 1U);
  EXPECT_EQ(iso.public_intervals()[0].lo, 2);
  EXPECT_EQ(iso.public_intervals()[0].hi, 5);

  const Decomposition one = primary_component(parse_diagram("n=6; 1-6 2-3"));
  EXPECT_EQ(one.vertices, (std::vector<int>{1, 6}));
  ASSERT_EQ(one.public_intervals().size(), 1U);
  EXPECT_EQ(one.public_intervals()[0].lo, 2);
  EXPECT_EQ(one.public_intervals()[0].hi, 5);
  ASSERT_EQ(one.intervals.size(), 2U);
  EXPECT_TRUE(one.intervals[1].empty());
  EXPECT_TRUE(one.intervals[1].right_open);

  EXPECT_TRUE(primary_component(Diagram(0)).vertices.empty());
  EXPECT_THROW(primary_component(parse_diagram("n=3; 1-2 2-3")), DiagramError);
}

TEST(Classify, SingleArc) {
  EXPECT_EQ(tags("n=6; 1-6", 3), (std::vector<std::string>{"T1", "T2*"}));
  const auto t = classify_intervals(primary_component(parse_diagram("n=6; 1-6")), 3);
  EXPECT_EQ(t[1].type, 2);
  EXPECT_THROW(classify_intervals(primary_component(parse_diagram("n=4; 2-3")), 3), DiagramError);
}

TEST(Classify, SixComponentPatterns) {
  using V = std::vector<std::string>;
  EXPECT_EQ(tags("n=4; 1-4 2-4 2-3", 3), (V{"T4'", "T1", "T2", "T4*"}));
  EXPECT_EQ(tags("n=4; 2-3 1-3 1-4", 3), (V{"T2'", "T1", "T4", "T2*"}));
  EXPECT_EQ(tags("n=4; 1-2 3-4 1-4", 3), (V{"T1", "T3", "T1", "T4*"}));
  EXPECT_EQ(tags("n=5; 1-2 3-4 3-5 1-5", 3), (V{"T1", "T5'", "T1", "T2", "T4*"}));
  EXPECT_EQ(tags("n=5; 1-3 2-3 4-5 1-5", 3), (V{"T2'", "T1", "T5", "T1", "T4*"}));
  EXPECT_EQ(tags("n=6; 2-3 1-3 4-5 4-6 1-6", 3), (V{"T2'", "T1", "T6", "T1", "T2", "T4*"}));
}

TEST(Classify, TagsAreReflectionInvariant) {
  for (int l = 0; l <= 2; ++l)
    for (int r = 0; r <= 2; ++r) {
      const TypeTag a = tag_for_pair(l, r), b = tag_for_pair(r, l);
      EXPECT_EQ(a.type, b.type);
      EXPECT_EQ(a.type, [&] {
        for (int i = 1; i <= 6; ++i)
          if (kTypeBoundary[i][0] == std::max(l, r) && kTypeBoundary[i][1] == std::min(l, r)) return i;
        return 0;
      }());
    }
  EXPECT_THROW(tag_for_pair(3, 0), DiagramError);
}

TEST(Localization, Examples) {
  const Diagram seven = parse_diagram("n=7; 1-7 1-3 2-3 4-6");
  EXPECT_FALSE(verify_localization(seven, 3));
  EXPECT_FALSE(is_m_reduced(seven, 3));
  EXPECT_TRUE(verify_localization(Diagram(0), 3));
}

TEST(Localization, EqualsReducedness) {
  for (int n = 0; n <= 11; ++n)
    for_each_diagram(n, DiagramClass::zigzag().constraints(), [](const Diagram& S) {
      for (int m = 2; m <= 4; ++m) ASSERT_EQ(verify_localization(S, m), is_m_reduced(S, m)) << render(S);
    });
}

TEST(Decomposition, Invariants) {
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 11; ++n)
      for_each_diagram(n, DiagramClass::reduced_zigzag(m).constraints(), [m](const Diagram& S) {
        const Decomposition dec = primary_component(S);
        ASSERT_EQ(dec.vertices.front(), 1);
        ASSERT_EQ(dec.component.size() + 1, dec.vertices.size()) << render(S);

        std::vector<int> owner(static_cast<std::size_t>(S.n()) + 1, -1);
        for (int v : dec.vertices) owner[static_cast<std::size_t>(v)] = 0;
        for (std::size_t t = 0; t < dec.intervals.size(); ++t)
          for (int v = dec.intervals[t].lo; v <= dec.intervals[t].hi; ++v) {
            ASSERT_EQ(owner[static_cast<std::size_t>(v)], -1);
            owner[static_cast<std::size_t>(v)] = static_cast<int>(t) + 1;
          }
        for (int v = 1; v <= S.n(); ++v) ASSERT_NE(owner[static_cast<std::size_t>(v)], -1);

        std::vector<Arc> rebuilt = dec.component.arcs();
        for (const Arc& a : S.arcs())
          if (owner[static_cast<std::size_t>(a.i)] > 0)
            ASSERT_EQ(owner[static_cast<std::size_t>(a.i)], owner[static_cast<std::size_t>(a.j)]) << render(S);
        for (const Interval& iv : dec.intervals) {
          const Diagram sub = dec.substructure(iv);
          for (const Arc& a : sub.arcs()) rebuilt.push_back({a.i + iv.lo - 1, a.j + iv.lo - 1});
        }
        std::sort(rebuilt.begin(), rebuilt.end());
        ASSERT_EQ(rebuilt, S.arcs());

        if (dec.component.empty()) return;
        const auto tg = classify_intervals(dec, m);
        const DegreeProfile p(S);
        for (std::size_t t = 0; t < dec.intervals.size(); ++t) {
          const Interval& iv = dec.intervals[t];
          const int left = p.ld[static_cast<std::size_t>(iv.u)];
          const int right = iv.right_open ? 0 : p.rd[static_cast<std::size_t>(iv.v)];
          ASSERT_TRUE(check_with_boundary(dec.substructure(iv), m, left, right)) << render(S) << " interval " << t;
          ASSERT_EQ(tg[t].starred, iv.right_open);
        }
      });
}
