#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "segrev/segre.hpp"

using namespace segrev;

TEST_CASE("point and line counts") {
  for (auto [n, pts, lns] : {std::tuple{1, 3, 1}, {2, 9, 6}, {3, 27, 27}, {4, 81, 108}}) {
    SegreVariety v(n);
    CHECK(v.num_points() == pts);
    CHECK(v.num_lines() == lns);
    for (int p = 0; p < v.num_points(); ++p)
      CHECK(static_cast<int>(v.lines_through(p).size()) == n);
    for (const auto& l : v.lines()) {
      std::set<int> distinct(l.points.begin(), l.points.end());
      CHECK(distinct.size() == 3);
    }
  }
  CHECK_THROWS(SegreVariety(0));
}

TEST_CASE("embedding examples") {
  SegreVariety v1(1);
  CHECK(v1.embed(v1.point_of({2})) == 0b11u);

  SegreVariety v2(2);
  CHECK(v2.embed(v2.point_of({0, 0})) == 0b1000u);  // (0,1)(x)(0,1) = (0,0,0,1), bit i = x_i
  CHECK(v2.embed(v2.point_of({2, 2})) == 0b1111u);

  // distinct nonzero vectors
  for (int n = 1; n <= 4; ++n) {
    SegreVariety v(n);
    std::set<Tensor> seen;
    for (int p = 0; p < v.num_points(); ++p) {
      CHECK(v.embed(p) != 0);
      CHECK(seen.insert(v.embed(p)).second);
    }
  }
}

TEST_CASE("embedded lines are projective lines") {
  for (int n = 1; n <= 4; ++n) {
    SegreVariety v(n);
    for (const auto& l : v.lines())
      CHECK((v.embed(l.points[0]) ^ v.embed(l.points[1]) ^ v.embed(l.points[2])) == 0);
  }
}

TEST_CASE("incidence double count") {
  for (int n = 1; n <= 4; ++n) {
    SegreVariety v(n);
    int from_points = 0;
    for (int p = 0; p < v.num_points(); ++p)
      from_points += static_cast<int>(v.lines_through(p).size());
    CHECK(from_points == 3 * v.num_lines());
  }
}

TEST_CASE("sub-Segre triples partition the points") {
  for (int n = 2; n <= 4; ++n) {
    SegreVariety v(n);
    for (int a = 0; a < n; ++a) {
      std::set<int> all;
      for (int l = 0; l < 3; ++l) {
        const auto& sub = v.sub_segre_points(a, l);
        CHECK(static_cast<int>(sub.size()) == v.num_points() / 3);
        for (int p : sub) CHECK(all.insert(p).second);
      }
      CHECK(static_cast<int>(all.size()) == v.num_points());
    }
  }
}

TEST_CASE("spreads partition the points into skew lines") {
  for (int n = 2; n <= 4; ++n) {
    SegreVariety v(n);
    for (int a = 0; a < n; ++a) {
      std::set<int> covered;
      for (int ln : v.spread(a)) {
        CHECK(v.lines()[ln].free_axis == a);
        for (int p : v.lines()[ln].points) CHECK(covered.insert(p).second);
      }
      CHECK(static_cast<int>(covered.size()) == v.num_points());
    }
  }
}

TEST_CASE("graph distance equals BFS distance on the collinearity graph") {
  for (int n = 2; n <= 4; ++n) {
    SegreVariety v(n);
    // adjacency
    std::vector<std::vector<int>> adj(v.num_points());
    for (const auto& l : v.lines())
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) adj[l.points[i]].push_back(l.points[j]);
    for (int src = 0; src < v.num_points(); ++src) {
      std::vector<int> dist(v.num_points(), -1);
      std::queue<int> q;
      dist[src] = 0;
      q.push(src);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
      }
      for (int p = 0; p < v.num_points(); ++p) {
        CHECK(v.distance(src, p) == dist[p]);
        CHECK(dist[p] <= n);
      }
    }
  }
}

TEST_CASE("contraction agrees with the sub-Segre point map") {
  for (int n = 2; n <= 4; ++n) {
    SegreVariety v(n);
    SegreVariety small(n - 1);
    for (Tensor f : {Tensor{1}, Tensor{3}, Tensor((1u << (1 << n)) - 1), Tensor{0b1011}}) {
      for (int a = 0; a < n; ++a)
        for (int l = 0; l < 3; ++l) {
          Tensor g = v.contract(f, a, l);
          const auto& sub = v.sub_segre_points(a, l);
          for (std::size_t r = 0; r < sub.size(); ++r) {
            bool big_side = __builtin_parity(f & v.embed(sub[r]));
            bool small_side = __builtin_parity(g & small.embed(static_cast<int>(r)));
            CHECK(big_side == small_side);
          }
        }
    }
  }
}

TEST_CASE("expand inverts contraction") {
  SegreVariety v(3);
  for (Tensor f = 1; f < 256; ++f)
    for (int a = 0; a < 3; ++a) {
      Tensor g0 = v.contract(f, a, 0);
      Tensor g1 = v.contract(f, a, 1);
      CHECK(v.expand(g0, g1, a) == f);
      CHECK(v.contract(f, a, 2) == (g0 ^ g1));
    }
}
