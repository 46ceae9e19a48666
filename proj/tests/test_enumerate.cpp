#include <gtest/gtest.h>

#include <stacklab/enumerate.hpp>
#include <stacklab/schroeder.hpp>

#include "oracle.hpp"

using namespace stacklab;

namespace {

Limits wide() {
  Limits l;
  l.count_n = 32;
  l.enumerate_n = 32;
  return l;
}

Count z_m(int n, int m) { return n < 0 ? Count(0) : count_class(n, DiagramClass::reduced_zigzag(m), 1, wide()); }
Count g_m(int n, int m) { return n < 0 ? Count(0) : count_typeG(n, m); }
Count t_m(int n, int m, int i) { return count_type(n, m, i); }
Count bit(bool b) { return b ? Count(1) : Count(0); }

}  // namespace

TEST(Enumerate, MatchesOracleForEveryClass) {
  struct Case {
    DiagramClass cls;
    std::function<bool(const Diagram&)> pred;
  };
  std::vector<Case> cases = {
      {DiagramClass::stack(), oracle::noncrossing},
      {DiagramClass::queue(), oracle::nonnesting},
      {DiagramClass::zigzag(), oracle::zigzag},
      {DiagramClass::connected_zigzag(), [](const Diagram& d) { return oracle::zigzag(d) && oracle::connected(d); }},
      {DiagramClass::rna_secondary(), oracle::rna},
  };
  for (int m = 2; m <= 5; ++m) {
    cases.push_back({DiagramClass::regular_linear(m), [m](const Diagram& d) { return oracle::regular_linear(d, m); }});
    cases.push_back({DiagramClass::reduced_zigzag(m), [m](const Diagram& d) { return oracle::reduced(d, m); }});
  }
  for (const auto& c : cases)
    for (int n = 0; n <= 6; ++n) {
      const auto got = enumerate_class(n, c.cls);
      EXPECT_EQ(got, oracle::collect(n, c.pred)) << c.cls.name() << " n=" << n;
      EXPECT_EQ(Count(static_cast<long>(got.size())), count_class(n, c.cls)) << c.cls.name() << " n=" << n;
    }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_class(3, DiagramClass::zigzag()).size(), 6U);
  const auto c2 = enumerate_class(2, DiagramClass::connected_zigzag());
  ASSERT_EQ(c2.size(), 1U);
  EXPECT_EQ(c2[0], Diagram(2, {{1, 2}}));
  for (const auto& cls : {DiagramClass::stack(), DiagramClass::queue(), DiagramClass::zigzag(),
                          DiagramClass::regular_linear(3), DiagramClass::reduced_zigzag(4), DiagramClass::type_g(3)})
    EXPECT_EQ(enumerate_class(0, cls), std::vector<Diagram>{Diagram(0)});
}

TEST(Enumerate, GeneratorsAgreeWithPredicates) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n <= 11; ++n) {
      for_each_diagram(n, DiagramClass::reduced_zigzag(m).constraints(),
                       [m](const Diagram& d) { ASSERT_TRUE(is_m_reduced(d, m)) << render(d); });
      for_each_diagram(n, DiagramClass::regular_linear(m).constraints(),
                       [m](const Diagram& d) { ASSERT_TRUE(is_m_regular_linear(d, m)) << render(d); });
    }
}

TEST(Count, PrintedValues) {
  EXPECT_EQ(count_class(12, DiagramClass::zigzag()), Count(955999));
  EXPECT_EQ(count_class(9, DiagramClass::regular_linear(3)), Count(491));
  EXPECT_EQ(count_class(12, DiagramClass::regular_linear(6)), Count(420));
  EXPECT_EQ(count_class(7, DiagramClass::reduced_zigzag(3)), Count(491));
}

TEST(Count, Limits) {
  Limits tight;
  tight.count_n = 5;
  tight.enumerate_n = 4;
  EXPECT_THROW(count_class(6, DiagramClass::zigzag(), 1, tight), LimitError);
  EXPECT_THROW(enumerate_class(5, DiagramClass::zigzag(), tight), LimitError);
  EXPECT_NO_THROW(count_class(5, DiagramClass::zigzag(), 1, tight));
  EXPECT_THROW(count_class(-1, DiagramClass::zigzag()), std::invalid_argument);

  const Limits l = parse_limits("enum=9,count=20,digits=50");
  EXPECT_EQ(l.enumerate_n, 9);
  EXPECT_EQ(l.count_n, 20);
  EXPECT_EQ(l.series_order, Limits{}.series_order);
  EXPECT_EQ(l.digits, 50);
  EXPECT_THROW(parse_limits("enum"), std::invalid_argument);
  EXPECT_THROW(parse_limits("enum=0"), std::invalid_argument);
  EXPECT_THROW(parse_limits("size=3"), std::invalid_argument);
  EXPECT_THROW(parse_limits("count=x"), std::invalid_argument);
}

TEST(Count, ClassValidation) {
  EXPECT_THROW(parse_class("zigzag", 3), std::invalid_argument);
  EXPECT_THROW(parse_class("regular-linear", std::nullopt), std::invalid_argument);
  EXPECT_THROW(parse_class("nonsense", std::nullopt), std::invalid_argument);
  EXPECT_THROW(DiagramClass::regular_linear(1).validate(), std::invalid_argument);
}

TEST(Count, IndependentOfWorkers) {
  const std::vector<DiagramClass> classes = {DiagramClass::zigzag(), DiagramClass::stack(),
                                             DiagramClass::reduced_zigzag(3), DiagramClass::type_t(4, 5)};
  for (const auto& cls : classes) {
    const auto one = count_by_arcs(10, cls.constraints(), 1);
    EXPECT_EQ(count_by_arcs(10, cls.constraints(), 3), one) << cls.name();
    EXPECT_EQ(count_by_arcs(10, cls.constraints(), 8), one) << cls.name();
  }
}

TEST(Count, ConnectedZigzag) {
  EXPECT_EQ(count_connected_zigzag(5), Count(4));
  EXPECT_EQ(count_connected_zigzag(1), Count(1));
  EXPECT_EQ(count_connected_zigzag(4), Count(3));
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(count_class(n, DiagramClass::connected_zigzag()), count_connected_zigzag(n)) << n;
}

TEST(Count, RnaClosedForm) {
  EXPECT_EQ(count_rna_secondary(5, 1), Count(6));
  EXPECT_EQ(count_rna_secondary(13, 4), Count(1764));
  EXPECT_EQ(count_rna_secondary(4, 0), Count(1));
  EXPECT_EQ(count_rna_secondary(3, 5), Count(0));
  for (int n = 0; n <= 7; ++n) {
    std::vector<Count> by_k(8, 0);
    oracle::all_graphs(n, [&](const Diagram& d) {
      if (oracle::rna(d)) ++by_k[d.size()];
    });
    for (int k = 0; k < 8; ++k) EXPECT_EQ(count_rna_secondary(n, k), by_k[static_cast<std::size_t>(k)]) << n << "," << k;
  }
  for (int n = 0; n <= 12; ++n) {
    Count total = 0;
    for (int k = 0; k <= n; ++k) total += count_rna_secondary(n, k);
    EXPECT_EQ(total, count_class(n, DiagramClass::rna_secondary())) << n;
  }
}

TEST(Count, RegularityIsMonotone) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 0; n <= 12; ++n)
      EXPECT_GE(count_class(n, DiagramClass::regular_linear(m)), count_class(n, DiagramClass::regular_linear(m + 1)));
}

TEST(Count, ReducedMatchesShiftedRegular) {
  for (int m = 2; m <= 6; ++m)
    for (int n = 0; n + m - 1 <= 14; ++n)
      EXPECT_EQ(z_m(n, m), count_class(n + m - 1, DiagramClass::regular_linear(m), 1, wide())) << m << "," << n;
}

TEST(Types, LowestTerms) {
  EXPECT_EQ(t_m(0, 3, 3), Count(0));
  EXPECT_EQ(t_m(1, 3, 3), Count(1));
  EXPECT_EQ(t_m(1, 3, 6), Count(0));
  EXPECT_EQ(t_m(2, 3, 6), Count(1));
  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(t_m(n, m, 1), z_m(n, m)) << m << "," << n;
    EXPECT_EQ(t_m(m - 2, m, 5), Count(0)) << m;
    EXPECT_EQ(t_m(m - 2, m, 6), Count(0)) << m;
    EXPECT_EQ(t_m(m - 1, m, 6), Count(1)) << m;
  }
}

TEST(Types, StructuralConstructions) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 0; n <= 12; ++n) {
      EXPECT_EQ(t_m(n, m, 2), bit(n <= m - 3) + g_m(n - m + 2, m)) << "T2 m=" << m << " n=" << n;
      EXPECT_EQ(t_m(n, m, 4), bit(n <= m - 2) + z_m(n - m + 1, m)) << "T4 m=" << m << " n=" << n;
      EXPECT_EQ(t_m(n, m, 5), bit(m - 1 <= n && n <= 2 * m - 4) + g_m(n - 2 * m + 3, m)) << "T5 m=" << m << " n=" << n;
      EXPECT_EQ(t_m(n, m, 6), bit(m - 1 <= n && n <= 2 * m - 3) + z_m(n - 2 * m + 2, m)) << "T6 m=" << m << " n=" << n;
    }
}

TEST(Types, GAndH) {
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(count_typeH(0, m), Count(1));
    EXPECT_EQ(count_typeG(0, m), Count(1));
    EXPECT_EQ(count_typeH(1, m), Count(1));
    for (int n = 1; n <= 12; ++n) {
      const Count g = count_typeG(n, m);
      EXPECT_LE(g, z_m(n, m));
      EXPECT_LE(count_typeH(n, m), g);
      Count isolated_first = 0, degree_one = 0;
      for_each_diagram(n, DiagramClass::reduced_zigzag(m).constraints(), [&](const Diagram& d) {
        const int deg = DegreeProfile(d).deg(1);
        if (deg == 0) ++isolated_first;
        if (deg == 1) ++degree_one;
      });
      EXPECT_EQ(isolated_first, z_m(n - 1, m)) << m << "," << n;
      EXPECT_EQ(g - z_m(n - 1, m), degree_one) << m << "," << n;
    }
  }
}

TEST(Schroeder, OnlySharedEndpointsWithIsolatedVerticesMatches) {
  const auto results = stack_convention_experiment(8);
  int matching = 0;
  for (const auto& r : results) {
    if (!r.matches) continue;
    ++matching;
    EXPECT_TRUE(r.convention.shared_endpoints);
    EXPECT_TRUE(r.convention.isolated_vertices);
  }
  EXPECT_EQ(matching, 1);
  const auto predicted = schroeder_stack_prediction(8);
  const std::vector<long> expected = {2, 8, 48, 352, 2880, 25216, 231168};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(predicted[i], Count(expected[i]));
    EXPECT_EQ(count_class(static_cast<int>(i) + 2, DiagramClass::stack()), Count(expected[i]));
  }
}
