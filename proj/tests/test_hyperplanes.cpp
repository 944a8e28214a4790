#include <algorithm>
#include <set>

#include "doctest.h"
#include "segrev/atlas.hpp"
#include "segrev/hyperplane.hpp"
#include "segrev/segre.hpp"

using namespace segrev;

namespace {

// Shared across test cases; levels 1..4 with full censuses.
const Atlas& atlas() {
  static Atlas a(4);
  return a;
}

}  // namespace

TEST_CASE("hyperplanes of the single line are its points") {
  const auto& v = atlas().variety(1);
  for (Tensor f = 1; f < 4; ++f) {
    auto h = hyperplane_from_functional(v, f);
    CHECK(h.point_set.count() == 1);
  }
  // functional (1,1) selects the point with both coordinates set
  auto h = hyperplane_from_functional(v, 3);
  CHECK(h.point_set.get(2));
  CHECK_FALSE(h.point_set.get(0));
  CHECK_FALSE(h.point_set.get(1));
}

TEST_CASE("rank-one functionals give singular hyperplanes") {
  const auto& v2 = atlas().variety(2);
  auto h = hyperplane_from_functional(v2, v2.embed(v2.point_of({0, 0})));
  CHECK(h.point_set.count() == 5);
  int full_lines = 0;
  for (int l = 0; l < v2.num_lines(); ++l) {
    const auto& line = v2.lines()[l];
    int inside = 0;
    for (int p : line.points) inside += h.point_set.get(p);
    if (inside == 3) ++full_lines;
  }
  CHECK(full_lines == 2);
  auto dp = deepest_point(v2, h);
  REQUIRE(dp.has_value());
  CHECK(v2.coords(*dp) == std::vector<std::uint8_t>{1, 1});

  // Singular = the ball of radius N-1 around the deepest point, for every
  // type-one hyperplane of every level.
  for (int n = 2; n <= 4; ++n) {
    const auto& v = atlas().variety(n);
    const auto& census = atlas().level(n).hyperplanes;
    long long singular = 0;
    for (Tensor f = 1; f < (1u << (1 << n)); ++f) {
      if (census.type_of_functional(f) != 1) continue;
      ++singular;
      auto hh = hyperplane_from_functional(v, f);
      auto center = deepest_point(v, hh);
      REQUIRE(center.has_value());
      for (int p = 0; p < v.num_points(); ++p)
        CHECK(hh.point_set.get(p) == (v.distance(*center, p) < n));
    }
    CHECK(singular == v.num_points());
  }
}

TEST_CASE("the all-ones functional is rank one") {
  // 16 coordinates all set = the fourfold product of the all-ones vector,
  // hence a singular hyperplane: 65 points, centered at (2,2,2,2).
  const auto& v = atlas().variety(4);
  auto h = hyperplane_from_functional(v, 0xFFFFu);
  CHECK(h.point_set.count() == 65);
  CHECK(atlas().level(4).hyperplanes.type_of_functional(0xFFFFu) == 1);
  auto dp = deepest_point(v, h);
  REQUIRE(dp.has_value());
  CHECK(v.coords(*dp) == std::vector<std::uint8_t>{2, 2, 2, 2});
}

TEST_CASE("brute-force subset oracle agrees with the functional construction") {
  const auto& v = atlas().variety(2);
  std::set<std::uint64_t> brute, linear;
  for (unsigned mask = 0; mask < 512; ++mask) {
    BinVector s(9);
    for (int p = 0; p < 9; ++p)
      if (mask >> p & 1u) s.set(p, true);
    if (is_geometric_hyperplane(v, s)) brute.insert(s.low_word());
  }
  for (Tensor f = 1; f < 16; ++f)
    linear.insert(hyperplane_from_functional(v, f).point_set.low_word());
  CHECK(brute.size() == 15);
  CHECK(brute == linear);
}

TEST_CASE("the full point set is not a geometric hyperplane") {
  const auto& v = atlas().variety(2);
  BinVector all(9);
  for (int p = 0; p < 9; ++p) all.set(p, true);
  CHECK_FALSE(is_geometric_hyperplane(v, all));
  CHECK(extraordinary_hyperplane(v).point_set == all);
}

TEST_CASE("point orders sum to three times the contained lines") {
  for (int n = 2; n <= 3; ++n) {
    const auto& v = atlas().variety(n);
    for (Tensor f = 1; f < (1u << (1 << n)); ++f) {
      auto h = hyperplane_from_functional(v, f);
      auto stats = analyze_hyperplane(v, f, nullptr);
      long long order_sum = 0;
      for (std::size_t k = 0; k < stats.order_hist.size(); ++k)
        order_sum += static_cast<long long>(k) * stats.order_hist[k];
      CHECK(order_sum == 3LL * stats.lines);
      CHECK(stats.points == static_cast<int>(h.point_set.count()));
    }
  }
}

TEST_CASE("point_order rejects points outside the hyperplane") {
  const auto& v = atlas().variety(2);
  auto h = hyperplane_from_functional(v, v.embed(0));
  int outside = -1;
  for (int p = 0; p < 9 && outside < 0; ++p)
    if (!h.point_set.get(p)) outside = p;
  REQUIRE(outside >= 0);
  CHECK_THROWS(point_order(v, h, outside));
}

TEST_CASE("census of the two-factor variety") {
  const auto& c = atlas().level(2).hyperplanes;
  REQUIRE(c.types.size() == 2);
  CHECK(c.total == 15);
  CHECK(c.type(1).points == 5);
  CHECK(c.type(1).lines == 2);
  CHECK(c.type(1).order_hist == std::vector<int>{0, 4, 1});
  CHECK(c.type(1).cardinality == 9);
  CHECK(c.type(2).points == 3);
  CHECK(c.type(2).lines == 0);
  CHECK(c.type(2).order_hist == std::vector<int>{3, 0, 0});
  CHECK(c.type(2).cardinality == 6);
  CHECK(c.type(1).sub_profile == std::map<int, int>{{0, 2}, {1, 4}});
  CHECK(c.type(2).sub_profile == std::map<int, int>{{1, 6}});
}

TEST_CASE("census of the three-factor variety") {
  const auto& c = atlas().level(3).hyperplanes;
  REQUIRE(c.types.size() == 5);
  CHECK(c.total == 255);
  const int points[] = {19, 15, 13, 11, 9};
  const int lines[] = {15, 9, 6, 3, 0};
  const long long crd[] = {27, 54, 108, 54, 12};
  for (int t = 1; t <= 5; ++t) {
    CHECK(c.type(t).points == points[t - 1]);
    CHECK(c.type(t).lines == lines[t - 1]);
    CHECK(c.type(t).cardinality == crd[t - 1]);
  }
  CHECK(c.type(2).sub_profile == std::map<int, int>{{0, 1}, {1, 6}, {2, 2}});
}

TEST_CASE("census of the four-factor variety") {
  const auto& c = atlas().level(4).hyperplanes;
  REQUIRE(c.types.size() == 29);
  CHECK(c.total == 65535);
  long long sum = 0;
  for (const auto& t : c.types) sum += t.cardinality;
  CHECK(sum == 65535);
  // spot checks on distinctive rows
  CHECK(c.type(9).sub_profile == std::map<int, int>{{1, 4}, {2, 2}, {3, 4}, {4, 2}});
  CHECK(c.type(9).cardinality == 3888);
  CHECK(c.type(8).sub_profile == std::map<int, int>{{2, 12}});  // homogeneous
  CHECK(c.type(29).points == 27);
  CHECK(c.type(29).lines == 0);
  CHECK(c.type(29).sub_profile == std::map<int, int>{{5, 12}});
  // point counts strictly ordered within the census rule
  for (std::size_t i = 1; i < c.types.size(); ++i)
    CHECK(c.types[i - 1].points >= c.types[i].points);
}

TEST_CASE("ovoids: the last type has pairwise non-collinear points") {
  for (int n = 2; n <= 4; ++n) {
    const auto& v = atlas().variety(n);
    const auto& c = atlas().level(n).hyperplanes;
    const auto& last = c.types.back();
    auto h = hyperplane_from_functional(v, last.representative);
    int expected = 1;
    for (int i = 1; i < n; ++i) expected *= 3;
    CHECK(static_cast<int>(h.point_set.count()) == expected);
    CHECK(last.lines == 0);
    std::vector<int> pts;
    for (int p = 0; p < v.num_points(); ++p)
      if (h.point_set.get(p)) pts.push_back(p);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(v.distance(pts[i], pts[j]) > 1);
  }
}

TEST_CASE("hyperplane_from_functional rejects zero") {
  CHECK_THROWS(hyperplane_from_functional(atlas().variety(2), 0));
}
