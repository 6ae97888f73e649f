#include <gtest/gtest.h>

#include <set>

#include "gqforge/catalog.hpp"
#include "support.hpp"

using namespace gqforge;

TEST(Catalog, OrdinaryQuadrangle) {
  const auto q = ordinary_quadrangle();
  EXPECT_EQ(verify_gq(q), (GQCertificate{1, 1, false, 4, 4}));
  EXPECT_EQ(automorphisms(q).order(), 8U);
  EXPECT_TRUE(find_polarity(q).has_value());
}

TEST(Catalog, SymplecticCounts) {
  EXPECT_EQ(verify_gq(symplectic_gq(2)), (GQCertificate{2, 2, true, 15, 15}));
  EXPECT_EQ(verify_gq(symplectic_gq(3)), (GQCertificate{3, 3, true, 40, 40}));
  try {
    symplectic_gq(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedField);
  }
}

TEST(Catalog, SymplecticLinesAreTotallyIsotropic) {
  // Rebuild W(3) coordinates independently and check every line is a
  // 2-space on which the form vanishes.
  const std::uint32_t q = 3;
  std::vector<std::array<std::uint32_t, 4>> points;
  for (std::uint32_t i = 0; i < 81; ++i) {
    std::array<std::uint32_t, 4> v{i / 27, i / 9 % 3, i / 3 % 3, i % 3};
    std::size_t lead = 0;
    while (lead < 4 && v[lead] == 0) ++lead;
    if (lead < 4 && v[lead] == 1) points.push_back(v);
  }
  ASSERT_EQ(points.size(), 40U);
  auto form = [&](const auto& u, const auto& v) {
    const int b = static_cast<int>(u[0] * v[1]) - static_cast<int>(u[1] * v[0]) + static_cast<int>(u[2] * v[3]) -
                  static_cast<int>(u[3] * v[2]);
    return ((b % 3) + 3) % 3;
  };
  const auto w3 = symplectic_gq(q);
  for (const auto& line : w3.lines()) {
    ASSERT_EQ(line.size(), 4U);
    for (auto a : line) {
      for (auto b : line) EXPECT_EQ(form(points[a], points[b]), 0);
    }
  }
}

TEST(Catalog, RegularPoints) {
  const auto w3 = symplectic_gq(3);
  for (Point x = 0; x < w3.num_points(); ++x) EXPECT_TRUE(is_regular_point(w3, x));
  const auto o = ordinary_quadrangle();
  for (Point x = 0; x < 4; ++x) EXPECT_TRUE(is_regular_point(o, x));
}

TEST(Catalog, PayneFixtureRegularityMatchesDirectCount) {
  const auto q = catalog_fixture("payne-w3");
  const auto cert = verify_gq(q);
  const auto col = collinearity(q);
  // Direct: for every y not collinear with x, count points collinear with
  // everything collinear with both.
  auto direct = [&](Point x) {
    for (Point y = 0; y < q.num_points(); ++y) {
      if (y == x || col[x][y]) continue;
      std::vector<Point> common;
      for (Point z = 0; z < q.num_points(); ++z) {
        if (col[x][z] && col[y][z]) common.push_back(z);
      }
      std::size_t size = 0;
      for (Point w = 0; w < q.num_points(); ++w) {
        bool all = true;
        for (auto z : common) all = all && col[w][z];
        size += all;
      }
      if (size != cert.t + 1) return false;
    }
    return true;
  };
  for (Point x = 0; x < q.num_points(); ++x) EXPECT_EQ(is_regular_point(q, x), direct(x)) << x;
}

TEST(Catalog, PerpSizes) {
  const auto w2 = symplectic_gq(2);
  const auto col = collinearity(w2);
  Point y = 1;
  while (col[0][y]) ++y;
  EXPECT_EQ(perp(w2, 0, y).size(), 3U);
  EXPECT_EQ(double_perp(w2, 0, y).size(), 3U);
}

TEST(PayneDerive, W3) {
  const auto w3 = symplectic_gq(3);
  for (Point x : {0U, 17U, 39U}) {
    const auto d = payne_derive(w3, x);
    EXPECT_EQ(verify_gq(d), (GQCertificate{2, 4, true, 27, 45}));
  }
}

TEST(PayneDerive, W2) {
  EXPECT_EQ(verify_gq(payne_derive(symplectic_gq(2), 0)), (GQCertificate{1, 3, false, 8, 16}));
}

TEST(PayneDerive, OrderArithmetic) {
  const auto c = verify_gq(catalog_fixture("payne-w3"));
  EXPECT_EQ(c.s + c.t, 2U * 3U);
  EXPECT_TRUE(parameter_feasible(c.s, c.t).divisibility);
}

TEST(PayneDerive, RejectsNonRegularPoint) {
  const auto d = catalog_fixture("payne-w3");
  Point bad = 0;
  while (bad < d.num_points() && is_regular_point(d, bad)) ++bad;
  if (bad == d.num_points()) GTEST_SKIP() << "every point regular";
  EXPECT_THROW(payne_derive(d, bad), Error);
}

TEST(Catalog, FixtureNames) {
  EXPECT_EQ(catalog_names(), (std::vector<std::string>{"ordinary", "w2", "w3", "payne-w3"}));
  for (const auto& name : catalog_names()) EXPECT_NO_THROW(verify_gq(catalog_fixture(name)));
  EXPECT_THROW(catalog_fixture("nope"), Error);
}
