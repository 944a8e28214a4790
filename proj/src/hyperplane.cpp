#include "segrev/hyperplane.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace segrev {

namespace {

BinVector membership_mask(const SegreVariety& v, Tensor f) {
  BinVector s(v.num_points());
  for (int p = 0; p < v.num_points(); ++p)
    if (!(std::popcount(f & v.embed(p)) & 1)) s.set(p, true);
  return s;
}

}  // namespace

GeometricHyperplane hyperplane_from_functional(const SegreVariety& v, Tensor f) {
  if (f == 0)
    throw std::invalid_argument("hyperplane_from_functional: zero functional is extraordinary");
  if (f >> (1 << v.n()))
    throw std::invalid_argument("hyperplane_from_functional: functional out of range");
  return {f, membership_mask(v, f)};
}

GeometricHyperplane extraordinary_hyperplane(const SegreVariety& v) {
  BinVector s(v.num_points());
  for (int p = 0; p < v.num_points(); ++p) s.set(p, true);
  return {0, s};
}

bool is_geometric_hyperplane(const SegreVariety& v, const BinVector& s) {
  if (s.count() == static_cast<std::size_t>(v.num_points())) return false;  // proper
  for (const auto& ln : v.lines()) {
    int c = s.get(ln.points[0]) + s.get(ln.points[1]) + s.get(ln.points[2]);
    if (c != 1 && c != 3) return false;
  }
  return true;
}

void enumerate_hyperplanes(const SegreVariety& v, bool include_extraordinary,
                           const std::function<void(const GeometricHyperplane&)>& visit) {
  Tensor count = Tensor{1} << (1 << v.n());
  for (Tensor f = 1; f < count; ++f) visit(hyperplane_from_functional(v, f));
  if (include_extraordinary) visit(extraordinary_hyperplane(v));
}

int point_order(const SegreVariety& v, const GeometricHyperplane& h, int p) {
  if (!h.point_set.get(p))
    throw std::invalid_argument("point_order: point not in hyperplane");
  int ord = 0;
  for (int ln : v.lines_through(p)) {
    const auto& l = v.lines()[ln];
    if (h.point_set.get(l.points[0]) && h.point_set.get(l.points[1]) &&
        h.point_set.get(l.points[2]))
      ++ord;
  }
  return ord;
}

std::optional<int> deepest_point(const SegreVariety& v, const GeometricHyperplane& h) {
  for (int p = 0; p < v.num_points(); ++p) {
    if (!h.point_set.get(p)) continue;
    bool match = true;
    for (int q = 0; q < v.num_points() && match; ++q)
      match = h.point_set.get(q) == (v.distance(p, q) < v.n());
    if (match) return p;
  }
  return std::nullopt;
}

HyperplaneStats analyze_hyperplane(const SegreVariety& v, Tensor f,
                                   const HyperplaneCensus* prev) {
  HyperplaneStats st;
  st.order_hist.assign(v.n() + 1, 0);
  BinVector mask = membership_mask(v, f);
  st.points = static_cast<int>(mask.count());

  std::vector<int> order(v.num_points(), 0);
  for (const auto& ln : v.lines()) {
    if (mask.get(ln.points[0]) && mask.get(ln.points[1]) && mask.get(ln.points[2])) {
      ++st.lines;
      for (int p : ln.points) ++order[p];
    }
  }
  for (int p = 0; p < v.num_points(); ++p)
    if (mask.get(p)) ++st.order_hist[order[p]];

  if (prev) {
    st.sub_types.reserve(3 * v.n());
    for (int a = 0; a < v.n(); ++a)
      for (int l = 0; l < 3; ++l) {
        Tensor g = v.contract(f, a, l);
        st.sub_types.push_back(g == 0 ? -1 : prev->type_of_functional(g));
      }
  }
  return st;
}

std::map<int, int> sub_segre_profile(const SegreVariety& v, Tensor f,
                                     const HyperplaneCensus& prev) {
  std::map<int, int> profile;
  for (int a = 0; a < v.n(); ++a)
    for (int l = 0; l < 3; ++l) {
      Tensor g = v.contract(f, a, l);
      ++profile[g == 0 ? 0 : prev.type_of_functional(g)];
    }
  return profile;
}

HyperplaneCensus classify_hyperplanes(const SegreVariety& v, const HyperplaneCensus* prev) {
  using Signature = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::map<Signature, std::vector<Tensor>> groups;

  Tensor count = Tensor{1} << (1 << v.n());
  for (Tensor f = 1; f < count; ++f) {
    HyperplaneStats st = analyze_hyperplane(v, f, prev);
    std::vector<int> profile = st.sub_types;
    std::sort(profile.begin(), profile.end());
    groups[{st.points, st.lines, st.order_hist, profile}].push_back(f);
  }

  // order: points descending, then the order histogram from the highest
  // order downwards, descending; remaining keys only for determinism
  std::vector<const std::pair<const Signature, std::vector<Tensor>>*> ordered;
  for (const auto& g : groups) ordered.push_back(&g);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    const auto& [pa, la, ha, sa] = a->first;
    const auto& [pb, lb, hb, sb] = b->first;
    if (pa != pb) return pa > pb;
    for (int k = static_cast<int>(ha.size()) - 1; k >= 0; --k)
      if (ha[k] != hb[k]) return ha[k] > hb[k];
    if (la != lb) return la > lb;
    return sa > sb;
  });

  HyperplaneCensus census;
  census.n = v.n();
  census.type_of.assign(count, 0);
  int label = 0;
  for (const auto* g : ordered) {
    const auto& [pts, lns, hist, profile] = g->first;
    HyperplaneType t;
    t.label = ++label;
    t.points = pts;
    t.lines = lns;
    t.order_hist = hist;
    for (int s : profile) ++t.sub_profile[s < 0 ? 0 : s];
    t.cardinality = static_cast<long long>(g->second.size());
    t.representative = g->second.front();
    census.types.push_back(std::move(t));
    for (Tensor f : g->second) census.type_of[f] = static_cast<std::int16_t>(label);
    census.total += static_cast<long long>(g->second.size());
  }
  return census;
}

}  // namespace segrev
