#include <gtest/gtest.h>

#include <stacklab/enumerate.hpp>
#include <stacklab/reduction.hpp>

#include "oracle.hpp"

using namespace stacklab;

TEST(Reduce, Examples) {
  const Diagram s2 = parse_diagram("n=6; 1-3 3-6 1-6");
  const Diagram t2 = parse_diagram("n=5; 1-2 3-5 1-5");
  EXPECT_EQ(reduce(s2, 2), t2);
  EXPECT_EQ(expand(t2, 2), s2);

  // Shortening the arcs of a non-linear 3-regular stack still gives a
  // zigzag stack, which is not 3-reduced.
  const Diagram s3 = parse_diagram("n=8; 1-5 2-5 5-8");
  EXPECT_THROW(reduce(s3, 3), DiagramError);
  const Diagram t3 = parse_diagram("n=6; 1-3 2-3 5-6");
  EXPECT_TRUE(is_zigzag(t3));
  EXPECT_FALSE(is_m_reduced(t3, 3));
  EXPECT_THROW(expand(t3, 3), DiagramError);
}

TEST(Reduce, EmptyCases) {
  for (int m = 2; m <= 6; ++m) EXPECT_EQ(reduce(Diagram(m - 1), m), Diagram(0));
  EXPECT_EQ(expand(Diagram(0), 4), Diagram(3));
  EXPECT_EQ(expand(Diagram(1), 3), Diagram(3));
}

TEST(Reduce, RejectsBadInput) {
  EXPECT_THROW(reduce(Diagram(1), 3), DiagramError);
  EXPECT_THROW(reduce(parse_diagram("n=4; 1-3 2-4"), 2), DiagramError);
  EXPECT_THROW(reduce(parse_diagram("n=4; 1-3"), 3), DiagramError);
  EXPECT_THROW(reduce(parse_diagram("n=6; 1-6 2-6 3-6"), 2), DiagramError);
  EXPECT_THROW(reduce(Diagram(3), 1), DiagramError);
  EXPECT_THROW(expand(parse_diagram("n=3; 1-2 2-3"), 2), DiagramError);
}

TEST(Reduce, RoundTripsAndTransportsDegrees) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n <= 10; ++n) {
      std::vector<Diagram> images;
      for_each_diagram(n + m - 1, DiagramClass::regular_linear(m).constraints(), [&](const Diagram& S) {
        const Diagram T = reduce(S, m);
        ASSERT_EQ(T.n(), n);
        ASSERT_TRUE(oracle::reduced(T, m)) << render(S);
        ASSERT_EQ(expand(T, m), S);
        ASSERT_EQ(T.size(), S.size());
        const DegreeProfile ps(S), pt(T);
        for (int i = 1; i <= n; ++i) {
          ASSERT_EQ(pt.ld[static_cast<std::size_t>(i)], ps.ld[static_cast<std::size_t>(i + m - 1)]);
          ASSERT_EQ(pt.rd[static_cast<std::size_t>(i)], ps.rd[static_cast<std::size_t>(i)]);
        }
        images.push_back(T);
      });
      std::sort(images.begin(), images.end());
      EXPECT_TRUE(std::adjacent_find(images.begin(), images.end()) == images.end());
      EXPECT_EQ(images, enumerate_class(n, DiagramClass::reduced_zigzag(m))) << m << "," << n;
      for (const Diagram& T : images) ASSERT_EQ(reduce(expand(T, m), m), T);
    }
}
