#include "segrev/veldkamp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace segrev {

VeldkampLine canonical_line(std::array<Tensor, 3> members) {
  std::sort(members.begin(), members.end());
  return {members};
}

VeldkampLine line_through(Tensor a, Tensor b) {
  if (a == 0 || b == 0) throw std::invalid_argument("line_through: ordinary hyperplanes required");
  return canonical_line({a, b, static_cast<Tensor>(a ^ b)});
}

std::uint64_t vl_key(const VeldkampLine& vl) {
  return (std::uint64_t{vl.members[0]} << 40) | (std::uint64_t{vl.members[1]} << 20) |
         vl.members[2];
}

GeometricHyperplane veldkamp_sum(const SegreVariety& v, const GeometricHyperplane& h1,
                                 const GeometricHyperplane& h2) {
  if (h1.extraordinary() || h2.extraordinary())
    throw std::invalid_argument("veldkamp_sum: ordinary hyperplanes required");
  if (h1.functional == h2.functional) return extraordinary_hyperplane(v);
  return hyperplane_from_functional(v, h1.functional ^ h2.functional);
}

void enumerate_veldkamp_lines(const SegreVariety& v, VLKind kind,
                              const std::function<void(const VeldkampLine&)>& visit) {
  Tensor count = Tensor{1} << (1 << v.n());
  if (kind != VLKind::kExtraordinary) {
    for (Tensor a = 1; a < count; ++a)
      for (Tensor b = a + 1; b < count; ++b)
        if ((a ^ b) > b) visit({{a, b, static_cast<Tensor>(a ^ b)}});
  }
  if (kind != VLKind::kOrdinary)
    for (Tensor f = 1; f < count; ++f) visit({{0, f, f}});
}

std::vector<BlowUpAssignment> blow_up_assignments(const VeldkampLine& vl, int axis) {
  std::vector<BlowUpAssignment> out;
  if (vl.extraordinary()) {
    // the repeated member fills two levels; the deep layer is the chosen one
    for (int deep = 0; deep < 3; ++deep) {
      BlowUpAssignment a{axis, {1, 1, 1}};
      a.member_of_level[deep] = 0;
      out.push_back(a);
    }
  } else {
    std::array<int, 3> perm{0, 1, 2};
    do {
      out.push_back({axis, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Tensor blow_up(const SegreVariety& big, const VeldkampLine& vl, const BlowUpAssignment& a) {
  const auto& lv = a.member_of_level;
  Tensor g0 = vl.members[lv[0]];
  Tensor g1 = vl.members[lv[1]];
  Tensor g2 = vl.members[lv[2]];
  if ((g0 ^ g1) != g2)
    throw std::invalid_argument("blow_up: assignment inconsistent with the line");
  Tensor f = big.expand(g0, g1, a.axis);
  if (f == 0) throw std::invalid_argument("blow_up: degenerate line");
  return f;
}

std::array<Tensor, 3> project_layers(const SegreVariety& big, Tensor f, int axis) {
  return {big.contract(f, axis, 0), big.contract(f, axis, 1), big.contract(f, axis, 2)};
}

VeldkampLine project_hyperplane(const SegreVariety& big, Tensor f, int axis) {
  auto layers = project_layers(big, f, axis);
  return canonical_line(layers);
}

std::string to_string(CorePattern p) {
  switch (p) {
    case CorePattern::kDisjoint: return "disjoint";
    case CorePattern::kConcurrent: return "concurrent";
    case CorePattern::kMixed: return "mixed";
    default: return "n/a";
  }
}

VLSignature vl_signature(const SegreVariety& v, const HyperplaneCensus& census,
                         const VeldkampLine& vl) {
  VLSignature sig;
  std::array<BinVector, 3> masks;
  for (int k = 0; k < 3; ++k) {
    masks[k] = hyperplane_from_functional(v, vl.members[k]).point_set;
    ++sig.composition[census.type_of_functional(vl.members[k])];
  }
  BinVector core = masks[0] & masks[1];
  core &= masks[2];
  sig.core_points = static_cast<int>(core.count());

  std::vector<int> core_lines;
  for (int ln = 0; ln < v.num_lines(); ++ln) {
    const auto& l = v.lines()[ln];
    if (core.get(l.points[0]) && core.get(l.points[1]) && core.get(l.points[2]))
      core_lines.push_back(ln);
  }
  sig.core_lines = static_cast<int>(core_lines.size());

  if (core_lines.size() < 2) {
    sig.pattern = CorePattern::kNA;
    return sig;
  }
  bool any_meet = false, all_meet = true;
  int common = -2;  // -2 unset, -1 divergent
  for (std::size_t i = 0; i < core_lines.size(); ++i)
    for (std::size_t j = i + 1; j < core_lines.size(); ++j) {
      const auto& a = v.lines()[core_lines[i]];
      const auto& b = v.lines()[core_lines[j]];
      int meet = -1;
      for (int pa : a.points)
        for (int pb : b.points)
          if (pa == pb) meet = pa;
      if (meet >= 0) {
        any_meet = true;
        if (common == -2) common = meet;
        else if (common != meet) common = -1;
      } else {
        all_meet = false;
      }
    }
  if (!any_meet) sig.pattern = CorePattern::kDisjoint;
  else if (all_meet && common >= 0) sig.pattern = CorePattern::kConcurrent;
  else sig.pattern = CorePattern::kMixed;
  return sig;
}

namespace {

int pattern_rank(CorePattern p) {
  switch (p) {
    case CorePattern::kNA: return 0;
    case CorePattern::kDisjoint: return 1;
    case CorePattern::kConcurrent: return 2;
    default: return 3;
  }
}

// composition as a descending-lex key over H1..Hk counts
std::vector<int> comp_key(const std::map<int, int>& comp, int ntypes) {
  std::vector<int> key(ntypes, 0);
  for (auto [t, c] : comp) key[t - 1] = c;
  return key;
}

// order-histogram key of the hyperplane obtained by blowing up a
// representative; used only to pin labels of otherwise identical orbits
std::vector<int> blowup_tiebreak_key(const SegreVariety& v, const VeldkampLine& vl) {
  SegreVariety big(v.n() + 1);
  Tensor f = blow_up(big, vl, blow_up_assignments(vl, 0).front());
  HyperplaneStats st = analyze_hyperplane(big, f, nullptr);
  std::vector<int> key{st.points};
  for (int k = big.n(); k >= 0; --k) key.push_back(st.order_hist[k]);
  return key;
}

}  // namespace

VLCensus classify_veldkamp_lines(const SegreVariety& v, const HyperplaneCensus& census,
                                 const std::vector<std::vector<Tensor>>& action_tables) {
  VLCensus out;
  out.n = v.n();

  // orbit closure over canonical member triples
  std::unordered_map<std::uint64_t, int> orbit_of;
  std::vector<long long> orbit_size;
  std::vector<VeldkampLine> orbit_rep;
  enumerate_veldkamp_lines(v, VLKind::kOrdinary, [&](const VeldkampLine& vl) {
    std::uint64_t key = vl_key(vl);
    if (orbit_of.count(key)) return;
    int id = static_cast<int>(orbit_size.size());
    orbit_size.push_back(0);
    orbit_rep.push_back(vl);
    std::vector<VeldkampLine> stack{vl};
    orbit_of[key] = id;
    while (!stack.empty()) {
      VeldkampLine cur = stack.back();
      stack.pop_back();
      ++orbit_size[id];
      for (const auto& t : action_tables) {
        VeldkampLine img = canonical_line(
            {t[cur.members[0]], t[cur.members[1]], t[cur.members[2]]});
        auto [it, inserted] = orbit_of.emplace(vl_key(img), id);
        if (inserted) stack.push_back(img);
      }
    }
  });

  struct Entry {
    VLSignature sig;
    std::vector<int> ckey;
    long long size;
    int orbit;
  };
  std::vector<Entry> entries;
  int ntypes = static_cast<int>(census.types.size());
  for (std::size_t id = 0; id < orbit_size.size(); ++id) {
    VLSignature sig = vl_signature(v, census, orbit_rep[id]);
    entries.push_back({sig, comp_key(sig.composition, ntypes),
                       orbit_size[id], static_cast<int>(id)});
  }
  auto printed_equal = [](const Entry& a, const Entry& b) {
    return a.sig.core_points == b.sig.core_points && a.sig.core_lines == b.sig.core_lines &&
           a.ckey == b.ckey && a.sig.pattern == b.sig.pattern && a.size == b.size;
  };
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    if (a.sig.core_points != b.sig.core_points) return a.sig.core_points > b.sig.core_points;
    if (a.sig.core_lines != b.sig.core_lines) return a.sig.core_lines > b.sig.core_lines;
    if (a.ckey != b.ckey) return a.ckey > b.ckey;
    if (a.sig.pattern != b.sig.pattern)
      return pattern_rank(a.sig.pattern) < pattern_rank(b.sig.pattern);
    if (a.size != b.size) return a.size < b.size;
    return blowup_tiebreak_key(v, orbit_rep[a.orbit]) <
           blowup_tiebreak_key(v, orbit_rep[b.orbit]);
  });

  for (std::size_t k = 0; k < entries.size(); ++k) {
    VLType t;
    t.label = static_cast<int>(k) + 1;
    t.signature = entries[k].sig;
    t.cardinality = entries[k].size;
    t.representative = orbit_rep[entries[k].orbit];
    t.ambiguous_label = (k > 0 && printed_equal(entries[k], entries[k - 1])) ||
                        (k + 1 < entries.size() && printed_equal(entries[k], entries[k + 1]));
    out.total += t.cardinality;
    out.types.push_back(std::move(t));
  }
  // remap orbit ids to labels
  std::vector<int> label_of_orbit(orbit_size.size(), 0);
  for (std::size_t k = 0; k < entries.size(); ++k)
    label_of_orbit[entries[k].orbit] = static_cast<int>(k) + 1;
  for (auto& [key, id] : orbit_of) out.type_of[key] = label_of_orbit[id];
  return out;
}

std::string roman_numeral(int k) {
  static const char* numerals[] = {"",   "I",   "II",   "III", "IV",
                                   "V",  "VI",  "VII",  "VIII", "IX", "X"};
  if (k < 1 || k > 10) throw std::invalid_argument("roman_numeral: out of range");
  return numerals[k];
}

std::map<int, std::set<std::string>> vl_provenance(const SegreVariety& big,
                                                   const HyperplaneCensus& big_census,
                                                   const HyperplaneCensus& small_census,
                                                   const VLCensus& small_vl_census) {
  std::map<int, std::set<std::string>> prov;
  Tensor count = Tensor{1} << (1 << big.n());
  for (Tensor f = 1; f < count; ++f) {
    int type = big_census.type_of_functional(f);
    for (int axis = 0; axis < big.n(); ++axis) {
      VeldkampLine vl = project_hyperplane(big, f, axis);
      if (vl.extraordinary()) {
        // extraordinary line types are named by the repeated member's type
        int member_type = small_census.type_of_functional(vl.members[1]);
        prov[type].insert(roman_numeral(member_type));
      } else {
        int vt = small_vl_census.type_of_line(vl);
        if (vt == 0) throw std::runtime_error("vl_provenance: unclassified projection");
        prov[type].insert(std::to_string(vt));
      }
    }
  }
  return prov;
}

bool verify_pg_structure(const SegreVariety& v) {
  Tensor count = Tensor{1} << (1 << v.n());
  std::vector<BinVector> masks(count, BinVector(0));
  std::unordered_set<std::string> seen;
  for (Tensor f = 1; f < count; ++f) {
    GeometricHyperplane h = hyperplane_from_functional(v, f);
    if (h.point_set.count() == static_cast<std::size_t>(v.num_points())) return false;
    std::string key;
    for (int p = 0; p < v.num_points(); ++p) key.push_back(h.point_set.get(p) ? '1' : '0');
    if (!seen.insert(key).second) return false;  // functional -> hyperplane not injective
    masks[f] = h.point_set;
  }
  BinVector full(v.num_points());
  for (int p = 0; p < v.num_points(); ++p) full.set(p, true);

  auto sum_matches = [&](Tensor a, Tensor b) {
    BinVector symdiff = masks[a] ^ masks[b];
    BinVector complement = symdiff ^ full;
    return complement == masks[a ^ b];
  };
  if (v.n() <= 3) {
    for (Tensor a = 1; a < count; ++a)
      for (Tensor b = a + 1; b < count; ++b)
        if (!sum_matches(a, b)) return false;
  } else {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<Tensor> dist(1, count - 1);
    for (int k = 0; k < 20000; ++k) {
      Tensor a = dist(rng), b = dist(rng);
      if (a != b && !sum_matches(a, b)) return false;
    }
  }
  return true;
}

}  // namespace segrev
