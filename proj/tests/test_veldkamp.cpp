#include <map>
#include <set>

#include "doctest.h"
#include "segrev/atlas.hpp"
#include "segrev/veldkamp.hpp"

using namespace segrev;

namespace {

const Atlas& atlas() {
  static Atlas a(4);
  return a;
}

long long count_lines(const SegreVariety& v, VLKind kind) {
  long long n = 0;
  enumerate_veldkamp_lines(v, kind, [&](const VeldkampLine&) { ++n; });
  return n;
}

}  // namespace

TEST_CASE("line construction and canonical form") {
  auto vl = line_through(3, 5);
  CHECK(vl.members == std::array<Tensor, 3>{3, 5, 6});
  CHECK_FALSE(vl.extraordinary());
  CHECK(canonical_line({6, 3, 5}) == vl);
  auto ext = canonical_line({7, 0, 7});
  CHECK(ext.extraordinary());
  CHECK(ext.members == std::array<Tensor, 3>{0, 7, 7});
}

TEST_CASE("Veldkamp sum matches functional XOR on point sets") {
  const auto& v = atlas().variety(2);
  for (Tensor f = 1; f < 16; ++f)
    for (Tensor g = 1; g < 16; ++g) {
      auto h = veldkamp_sum(v, hyperplane_from_functional(v, f),
                            hyperplane_from_functional(v, g));
      if (f == g) {
        CHECK(h.extraordinary());
      } else {
        CHECK(h.functional == (f ^ g));
        CHECK(h.point_set == hyperplane_from_functional(v, f ^ g).point_set);
      }
    }
}

TEST_CASE("ordinary and extraordinary line counts") {
  // 6 * ordinary + 3 * extraordinary = number of ordinary hyperplanes one
  // level up; the point-count identity behind the blow-up correspondence.
  const long long expected_ord[] = {0, 1, 35, 10795};
  const long long expected_ext[] = {0, 3, 15, 255};
  for (int n = 1; n <= 3; ++n) {
    const auto& v = atlas().variety(n);
    long long ord = count_lines(v, VLKind::kOrdinary);
    long long ext = count_lines(v, VLKind::kExtraordinary);
    CHECK(ord == expected_ord[n]);
    CHECK(ext == expected_ext[n]);
    CHECK(6 * ord + 3 * ext == (1LL << (1 << (n + 1))) - 1);
  }
}

TEST_CASE("blow-up assignment counts: six ordinary, three extraordinary") {
  auto vl = line_through(3, 5);
  CHECK(blow_up_assignments(vl, 0).size() == 6);
  auto ext = canonical_line({0, 7, 7});
  auto assigns = blow_up_assignments(ext, 1);
  CHECK(assigns.size() == 3);
  for (const auto& a : assigns) {
    CHECK(a.axis == 1);
    // exactly one level receives the extraordinary member (index 0)
    int deep_levels = 0;
    for (int lvl = 0; lvl < 3; ++lvl) deep_levels += a.member_of_level[lvl] == 0;
    CHECK(deep_levels == 1);
  }
}

TEST_CASE("projection round-trips the blow-up exhaustively") {
  for (int n = 2; n <= 3; ++n) {
    const auto& big = atlas().variety(n);
    const auto& small = atlas().variety(n - 1);
    for (int axis = 0; axis < n; ++axis) {
      std::set<Tensor> produced;
      enumerate_veldkamp_lines(small, VLKind::kBoth, [&](const VeldkampLine& vl) {
        for (const auto& a : blow_up_assignments(vl, axis)) {
          Tensor f = blow_up(big, vl, a);
          REQUIRE(f != 0);
          produced.insert(f);
          auto layers = project_layers(big, f, axis);
          for (int lvl = 0; lvl < 3; ++lvl)
            CHECK(layers[lvl] == vl.members[a.member_of_level[lvl]]);
          CHECK(project_hyperplane(big, f, axis) == vl);
        }
      });
      // every ordinary hyperplane of the bigger variety arises exactly once
      CHECK(produced.size() == (1u << (1 << n)) - 1);
    }
  }
}

TEST_CASE("Veldkamp line census of the two-factor variety") {
  const auto& c = atlas().level(2).vlines;
  REQUIRE(c.types.size() == 4);
  CHECK(c.total == 35);
  const int core_pts[] = {3, 2, 1, 0};
  const int core_lns[] = {1, 0, 0, 0};
  const long long crd[] = {6, 18, 9, 2};
  for (int t = 1; t <= 4; ++t) {
    CHECK(c.types[t - 1].signature.core_points == core_pts[t - 1]);
    CHECK(c.types[t - 1].signature.core_lines == core_lns[t - 1]);
    CHECK(c.types[t - 1].cardinality == crd[t - 1]);
  }
  CHECK(c.types[0].signature.composition == std::map<int, int>{{1, 3}});
  CHECK(c.types[1].signature.composition == std::map<int, int>{{1, 2}, {2, 1}});
  CHECK(c.types[3].signature.composition == std::map<int, int>{{2, 3}});
}

TEST_CASE("Veldkamp line census of the three-factor variety") {
  const auto& c = atlas().level(3).vlines;
  REQUIRE(c.types.size() == 41);
  CHECK(c.total == 10795);
  long long sum = 0;
  for (const auto& t : c.types) sum += t.cardinality;
  CHECK(sum == 10795);
  // types 16 and 17 share every printed invariant but are distinct orbits
  const auto& t16 = c.types[15];
  const auto& t17 = c.types[16];
  CHECK(t16.signature.core_points == t17.signature.core_points);
  CHECK(t16.signature.core_lines == t17.signature.core_lines);
  CHECK(t16.signature.pattern == t17.signature.pattern);
  CHECK(t16.signature.composition == t17.signature.composition);
  CHECK(t16.cardinality == t17.cardinality);
  CHECK(t16.ambiguous_label);
  CHECK(t17.ambiguous_label);
  CHECK(c.type_of_line(t16.representative) == 16);
  CHECK(c.type_of_line(t17.representative) == 17);
  // and no other pair of types is ambiguous
  int ambiguous = 0;
  for (const auto& t : c.types) ambiguous += t.ambiguous_label;
  CHECK(ambiguous == 2);
}

TEST_CASE("core pattern detection") {
  const auto& c = atlas().level(3).vlines;
  CHECK(c.types[9].signature.pattern == CorePattern::kDisjoint);     // type 10
  CHECK(c.types[10].signature.pattern == CorePattern::kConcurrent);  // type 11
  CHECK(c.types[0].signature.pattern == CorePattern::kMixed);        // type 1
  CHECK(c.types[40].signature.pattern == CorePattern::kNA);          // type 41
  CHECK(to_string(CorePattern::kDisjoint) == "disjoint");
  CHECK(to_string(CorePattern::kConcurrent) == "concurrent");
}

TEST_CASE("ordinary Veldkamp space is a binary projective space") {
  CHECK(verify_pg_structure(atlas().variety(2)));
  CHECK(verify_pg_structure(atlas().variety(3)));
}

TEST_CASE("projection provenance recorded per hyperplane type") {
  const auto& types = atlas().level(4).hyperplanes.types;
  auto vl_set = [&](int label) {
    const auto& v = types[label - 1].vl_types;
    return std::set<std::string>(v.begin(), v.end());
  };
  CHECK(vl_set(1) == std::set<std::string>{"I"});
  CHECK(vl_set(2) == std::set<std::string>{"II", "1"});
  CHECK(vl_set(9) == std::set<std::string>{"7", "8"});
  CHECK(vl_set(22) == std::set<std::string>{"30", "31", "32"});
  CHECK(vl_set(29) == std::set<std::string>{"41"});
}

TEST_CASE("roman numerals for extraordinary labels") {
  CHECK(roman_numeral(1) == "I");
  CHECK(roman_numeral(4) == "IV");
  CHECK(roman_numeral(5) == "V");
}
