#include "segrev/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace segrev {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

// Data rows of a TSV file: '#' lines and the header row skipped.
std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    rows.push_back(split(line, '\t'));
  }
  return rows;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
  return out;
}

// "D:2,H1:4" -> {0: 2, 1: 4};  "H2:3" -> {2: 3}
std::map<int, int> parse_profile(const std::string& s) {
  std::map<int, int> out;
  for (const auto& tok : split(s, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad profile entry: " + tok);
    std::string key = tok.substr(0, colon);
    int count = std::stoi(tok.substr(colon + 1));
    int k = key == "D" ? 0 : std::stoi(key.substr(1));
    out[k] = count;
  }
  return out;
}

std::string profile_to_string(const std::map<int, int>& profile) {
  std::string out;
  for (auto [k, c] : profile) {
    if (!out.empty()) out += ',';
    out += (k == 0 ? std::string("D") : "H" + std::to_string(k)) + ":" + std::to_string(c);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::vector<GoldenHyperplaneRow> load_hyperplane_table(const std::string& path) {
  std::vector<GoldenHyperplaneRow> out;
  for (const auto& f : read_tsv(path)) {
    if (f.size() < 6) throw std::runtime_error("short row in " + path);
    GoldenHyperplaneRow r;
    r.label = std::stoi(f[0]);
    r.points = std::stoi(f[1]);
    r.lines = std::stoi(f[2]);
    r.order_hist = parse_int_list(f[3]);
    r.sub_profile = parse_profile(f[4]);
    for (const auto& tok : split(f[5], ',')) r.vl_types.insert(tok);
    r.cardinality = std::stoll(f[6]);
    if (f.size() > 7) r.weight = std::stoi(f[7]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GoldenVLRow> load_vl_table(const std::string& path) {
  std::vector<GoldenVLRow> out;
  for (const auto& f : read_tsv(path)) {
    if (f.size() < 6) throw std::runtime_error("short row in " + path);
    GoldenVLRow r;
    r.label = std::stoi(f[0]);
    r.core_points = std::stoi(f[1]);
    r.core_lines = std::stoi(f[2]);
    r.pattern = f[3];
    r.composition = parse_profile(f[4]);
    r.cardinality = std::stoll(f[5]);
    out.push_back(std::move(r));
  }
  return out;
}

std::map<int, long long> load_count_table(const std::string& path) {
  std::map<int, long long> out;
  for (const auto& f : read_tsv(path)) {
    if (f.size() < 2) throw std::runtime_error("short row in " + path);
    out[std::stoi(f[0])] = std::stoll(f[1]);
  }
  return out;
}

std::string golden_file_name(const std::string& table_id) {
  if (table_id == "t1") return "t1_hyperplanes_s2.tsv";
  if (table_id == "t2") return "t2_vlines_s2.tsv";
  if (table_id == "t3") return "t3_hyperplanes_s3.tsv";
  if (table_id == "t4") return "t4_vlines_s3.tsv";
  if (table_id == "t5") return "t5_hyperplanes_s4.tsv";
  if (table_id == "t6") return "t6_quadric_s4.tsv";
  if (table_id == "t7") return "t7_lgr_s4.tsv";
  throw std::invalid_argument("unknown table id: " + table_id);
}

// --- exports ------------------------------------------------------------

std::string hyperplane_census_json(const HyperplaneCensus& census) {
  ordered_json j;
  j["schema"] = "segrev.census.v1";
  j["kind"] = "hyperplanes";
  j["n"] = census.n;
  j["total"] = census.total;
  j["types"] = ordered_json::array();
  for (const auto& t : census.types) {
    ordered_json row;
    row["type"] = t.label;
    row["points"] = t.points;
    row["lines"] = t.lines;
    row["orders"] = t.order_hist;
    ordered_json profile = ordered_json::object();
    for (auto [k, c] : t.sub_profile)
      profile[k == 0 ? std::string("D") : "H" + std::to_string(k)] = c;
    row["profile"] = profile;
    row["vl"] = t.vl_types;
    row["cardinality"] = t.cardinality;
    row["weight"] = t.weight;
    row["on_quadric"] = t.on_quadric;
    j["types"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string hyperplane_census_csv(const HyperplaneCensus& census) {
  std::string out = "type,points,lines,orders,profile,vl,cardinality,weight,on_quadric\n";
  for (const auto& t : census.types) {
    std::vector<std::string> orders;
    for (int h : t.order_hist) orders.push_back(std::to_string(h));
    out += std::to_string(t.label) + ',' + std::to_string(t.points) + ',' +
           std::to_string(t.lines) + ',' + csv_field(join(orders, ',')) + ',' +
           csv_field(profile_to_string(t.sub_profile)) + ',' +
           csv_field(join(t.vl_types, ',')) + ',' + std::to_string(t.cardinality) + ',' +
           std::to_string(t.weight) + ',' + (t.on_quadric ? "true" : "false") + '\n';
  }
  return out;
}

std::string vl_census_json(const VLCensus& census) {
  ordered_json j;
  j["schema"] = "segrev.census.v1";
  j["kind"] = "vlines";
  j["n"] = census.n;
  j["total"] = census.total;
  j["types"] = ordered_json::array();
  for (const auto& t : census.types) {
    ordered_json row;
    row["type"] = t.label;
    row["core_points"] = t.signature.core_points;
    row["core_lines"] = t.signature.core_lines;
    row["pattern"] = to_string(t.signature.pattern);
    ordered_json comp = ordered_json::object();
    for (auto [k, c] : t.signature.composition) comp["H" + std::to_string(k)] = c;
    row["composition"] = comp;
    row["cardinality"] = t.cardinality;
    j["types"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string vl_census_csv(const VLCensus& census) {
  std::string out = "type,core_points,core_lines,pattern,composition,cardinality\n";
  for (const auto& t : census.types) {
    out += std::to_string(t.label) + ',' + std::to_string(t.signature.core_points) + ',' +
           std::to_string(t.signature.core_lines) + ',' + to_string(t.signature.pattern) +
           ',' + csv_field(profile_to_string(t.signature.composition)) + ',' +
           std::to_string(t.cardinality) + '\n';
  }
  return out;
}

std::string quadric_report_json(int n, const QuadricCensusReport& report) {
  ordered_json j;
  j["schema"] = "segrev.quadric.v1";
  j["n"] = n;
  j["quadric_points"] = report.quadric_points;
  j["types_on_quadric"] = report.types_on_quadric;
  ordered_json counts = ordered_json::object();
  for (auto [k, c] : report.per_type_counts) counts[std::to_string(k)] = c;
  j["per_type_counts"] = counts;
  j["split_defect"] = report.split_defect;
  return j.dump(2) + "\n";
}

std::string lgr_report_json(const LgrReport& report) {
  ordered_json j;
  j["schema"] = "segrev.lgr.v1";
  j["n"] = report.n;
  j["generator_count"] = report.generator_count;
  j["image_distinct"] = report.image_distinct;
  j["injective"] = report.injective;
  j["all_on_quadric"] = report.all_on_quadric;
  ordered_json hist = ordered_json::object();
  for (auto [k, c] : report.type_histogram) hist[std::to_string(k)] = c;
  j["type_histogram"] = hist;
  return j.dump(2) + "\n";
}

std::string weights_csv(const std::vector<int>& weights) {
  std::string out = "functional,weight\n";
  for (std::size_t f = 1; f < weights.size(); ++f)
    out += std::to_string(f) + ',' + std::to_string(weights[f]) + '\n';
  return out;
}

// --- verification ---------------------------------------------------------

namespace {

class Checker {
 public:
  explicit Checker(std::vector<CheckResult>& sink) : sink_(sink) {}

  template <typename T, typename U>
  void expect_eq(const std::string& id, const std::string& what, const T& actual,
                 const U& expected) {
    CheckResult r{id, what, false, ""};
    if (actual == static_cast<T>(expected)) {
      r.passed = true;
    } else {
      std::ostringstream os;
      os << "expected " << expected << ", got " << actual;
      r.detail = os.str();
    }
    sink_.push_back(std::move(r));
  }

  void expect(const std::string& id, const std::string& what, bool ok,
              const std::string& detail = "") {
    sink_.push_back({id, what, ok, ok ? "" : detail});
  }

 private:
  std::vector<CheckResult>& sink_;
};

std::string set_to_string(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& e : s) out += e + ",";
  return out + "}";
}

void check_hyperplane_table(Checker& ck, const std::string& id, const HyperplaneCensus& census,
                            const std::vector<GoldenHyperplaneRow>& golden, bool check_weight) {
  ck.expect_eq(id, "type count", census.types.size(), golden.size());
  long long golden_total = 0;
  for (const auto& g : golden) golden_total += g.cardinality;
  ck.expect_eq(id, "total census cardinality", census.total, golden_total);
  for (const auto& g : golden) {
    if (g.label < 1 || g.label > static_cast<int>(census.types.size())) continue;
    const auto& t = census.type(g.label);
    std::string tp = id + ".type" + std::to_string(g.label);
    ck.expect_eq(tp, "points", t.points, g.points);
    ck.expect_eq(tp, "lines", t.lines, g.lines);
    ck.expect(tp, "order histogram", t.order_hist == g.order_hist);
    ck.expect(tp, "sub-Segre profile", t.sub_profile == g.sub_profile,
              "profile mismatch: got " + profile_to_string(t.sub_profile));
    std::set<std::string> vl(t.vl_types.begin(), t.vl_types.end());
    ck.expect(tp, "projected VL types", vl == g.vl_types,
              "got " + set_to_string(vl) + ", expected " + set_to_string(g.vl_types));
    ck.expect_eq(tp, "cardinality", t.cardinality, g.cardinality);
    if (check_weight) ck.expect_eq(tp, "weight", t.weight, g.weight);
  }
}

void check_vl_table(Checker& ck, const std::string& id, const VLCensus& census,
                    const std::vector<GoldenVLRow>& golden) {
  ck.expect_eq(id, "type count", census.types.size(), golden.size());
  long long golden_total = 0;
  for (const auto& g : golden) golden_total += g.cardinality;
  ck.expect_eq(id, "total census cardinality", census.total, golden_total);
  for (const auto& g : golden) {
    if (g.label < 1 || g.label > static_cast<int>(census.types.size())) continue;
    const auto& t = census.types[g.label - 1];
    std::string tp = id + ".type" + std::to_string(g.label);
    ck.expect_eq(tp, "core points", t.signature.core_points, g.core_points);
    ck.expect_eq(tp, "core lines", t.signature.core_lines, g.core_lines);
    ck.expect_eq(tp, "core pattern", to_string(t.signature.pattern), g.pattern);
    ck.expect(tp, "composition", t.signature.composition == g.composition,
              "composition mismatch: got " + profile_to_string(t.signature.composition));
    ck.expect_eq(tp, "cardinality", t.cardinality, g.cardinality);
  }
}

void check_construction(Checker& ck, const Atlas& atlas) {
  for (int n = 2; n <= 4; ++n) {
    const auto& v = atlas.variety(n);
    int pts = 1, lns = n;
    for (int i = 0; i < n; ++i) pts *= 3;
    lns = n * pts / 3;
    ck.expect_eq("construction.n" + std::to_string(n), "point count", v.num_points(), pts);
    ck.expect_eq("construction.n" + std::to_string(n), "line count", v.num_lines(), lns);
  }
}

void check_t1_oracle(Checker& ck, const Atlas& atlas) {
  // Every 9-point subset tested against the hyperplane axiom directly; the
  // survivors must be exactly the 15 functional-defined hyperplanes.
  const auto& v = atlas.variety(2);
  std::set<std::vector<std::uint64_t>> brute, linear;
  for (unsigned mask = 0; mask < 512; ++mask) {
    BinVector s(9);
    for (int p = 0; p < 9; ++p)
      if (mask >> p & 1u) s.set(p, true);
    if (is_geometric_hyperplane(v, s)) brute.insert({s.low_word()});
  }
  for (Tensor f = 1; f < 16; ++f)
    linear.insert({hyperplane_from_functional(v, f).point_set.low_word()});
  ck.expect_eq("t1.oracle", "brute-force hyperplane count", brute.size(), 15u);
  ck.expect("t1.oracle", "brute-force set equals functional set", brute == linear);
}

void check_blowup(Checker& ck, const Atlas& atlas) {
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    const auto& big = atlas.variety(n);
    const auto& small = atlas.variety(n - 1);
    std::string id = "blowup.n" + std::to_string(n);
    long long ord = 0, ext = 0;
    enumerate_veldkamp_lines(small, VLKind::kOrdinary, [&](const VeldkampLine&) { ++ord; });
    enumerate_veldkamp_lines(small, VLKind::kExtraordinary, [&](const VeldkampLine&) { ++ext; });
    long long target = (1LL << (1 << n)) - 1;
    ck.expect_eq(id, "6*ordinary + 3*extraordinary Veldkamp lines", 6 * ord + 3 * ext, target);

    // Blow-ups along one fixed axis must hit every ordinary hyperplane of the
    // bigger variety exactly once, and project back to what was assembled.
    std::vector<char> seen(static_cast<std::size_t>(target) + 1, 0);
    bool round_trip = true, injective = true;
    long long produced = 0;
    auto run = [&](const VeldkampLine& vl) {
      for (const auto& a : blow_up_assignments(vl, 0)) {
        Tensor f = blow_up(big, vl, a);
        if (f == 0 || seen[f]) injective = false;
        seen[f] = 1;
        ++produced;
        auto layers = project_layers(big, f, 0);
        for (int lvl = 0; lvl < 3; ++lvl)
          if (layers[lvl] != vl.members[a.member_of_level[lvl]]) round_trip = false;
        if (!(project_hyperplane(big, f, 0) == vl)) round_trip = false;
      }
    };
    enumerate_veldkamp_lines(small, VLKind::kBoth, run);
    ck.expect_eq(id, "hyperplanes produced by axis-0 blow-ups", produced, target);
    ck.expect(id, "blow-up injective along fixed axis", injective);
    ck.expect(id, "projection round-trips the blow-up", round_trip);
  }
}

void check_pg(Checker& ck, const Atlas& atlas) {
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    std::string id = "pg.n" + std::to_string(n);
    long long m = (1LL << (1 << n)) - 1;
    long long ord = 0;
    enumerate_veldkamp_lines(atlas.variety(n), VLKind::kOrdinary,
                             [&](const VeldkampLine&) { ++ord; });
    ck.expect_eq(id, "ordinary Veldkamp line count", ord, m * (m - 1) / 6);
    ck.expect(id, "Veldkamp sums agree with functional XOR",
              verify_pg_structure(atlas.variety(n)));
  }
}

void check_quadric(Checker& ck, const Atlas& atlas, const std::string& data_dir) {
  const long long zero_counts[5] = {0, 0, 9, 135, 32895};
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    const auto& lv = atlas.level(n);
    std::string id = "quadric.n" + std::to_string(n);
    ck.expect(id, "invariant quadric exists (fixed space dimension 1)", lv.has_quadric);
    ck.expect_eq(id, "projective zero count", lv.quadric.projective_zero_count(),
                 zero_counts[n]);
    ck.expect(id, "matches the complementary-pairs closed form",
              lv.quadric == complementary_pairs_form(n));
    ck.expect(id, "no type split across the quadric", !lv.quadric_report.split_defect);
  }
  ck.expect("quadric.n2", "on-quadric types {1}",
            atlas.level(2).quadric_report.types_on_quadric == std::vector<int>{1});
  ck.expect("quadric.n3", "on-quadric types {1,2,4}",
            atlas.level(3).quadric_report.types_on_quadric == std::vector<int>{1, 2, 4});
  if (atlas.n_max() >= 4) {
    auto golden = load_count_table(data_dir + "/" + golden_file_name("t6"));
    const auto& rep = atlas.level(4).quadric_report;
    std::vector<int> expected_types;
    long long expected_total = 0;
    for (auto [t, c] : golden) {
      expected_types.push_back(t);
      expected_total += c;
    }
    ck.expect("quadric.n4", "on-quadric type set", rep.types_on_quadric == expected_types);
    ck.expect("quadric.n4", "per-type on-quadric counts", rep.per_type_counts == golden);
    ck.expect_eq("quadric.n4", "on-quadric total", rep.quadric_points, expected_total);

    // Parity rule: a type lies on the quadric iff every Veldkamp line of the
    // smaller variety it projects to has a core with oddly many points.
    // (Extraordinary lines: the core is the repeated member itself.)
    const auto& small_hp = atlas.level(3).hyperplanes;
    const auto& small_vl = atlas.level(3).vlines;
    bool rule = true;
    for (const auto& t : atlas.level(4).hyperplanes.types) {
      bool all_odd = true;
      for (const auto& s : t.vl_types) {
        int core;
        if (s[0] >= '0' && s[0] <= '9') {
          core = small_vl.types[std::stoi(s) - 1].signature.core_points;
        } else {
          int k = 1;
          while (k <= 5 && roman_numeral(k) != s) ++k;
          core = small_hp.type(k).points;
        }
        if (core % 2 == 0) all_odd = false;
      }
      if (t.on_quadric != all_odd) rule = false;
    }
    ck.expect("quadric.n4", "odd-core parity rule biconditional over all types", rule);
  }
}

void check_lgr(Checker& ck, const Atlas& atlas, const std::string& data_dir) {
  const long long counts[5] = {0, 3, 15, 135, 2295};
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    const auto& lv = atlas.level(n);
    auto rep = lgr_census(n, lv.hyperplanes, lv.quadric);
    std::string id = "lgr.n" + std::to_string(n);
    ck.expect_eq(id, "generator count", rep.generator_count, counts[n]);
    ck.expect_eq(id, "formula generator count", (long long)generator_count(n), counts[n]);
    ck.expect(id, "spinor image injective", rep.injective);
    if (n == 2) {
      // The image is all of PG(3,2); types 1 and 2 split 9 + 6.
      ck.expect(id, "type histogram {1:9, 2:6}",
                rep.type_histogram == std::map<int, long long>{{1, 9}, {2, 6}});
    }
    if (n == 3) {
      ck.expect(id, "image on the invariant quadric", rep.all_on_quadric);
      ck.expect(id, "type histogram {1:27, 2:54, 4:54}",
                rep.type_histogram == std::map<int, long long>{{1, 27}, {2, 54}, {4, 54}});
      // Image = whole quadric: counts match and every point is a zero.
      ck.expect_eq(id, "image size equals quadric point count", rep.image_distinct,
                   lv.quadric.projective_zero_count());
    }
    if (n == 4) {
      ck.expect(id, "image on the invariant quadric", rep.all_on_quadric);
      auto golden = load_count_table(data_dir + "/" + golden_file_name("t7"));
      ck.expect(id, "type histogram matches golden table",
                rep.type_histogram == golden);
      // Characterization of the image types: no H3/H5 sub-Segre intersections
      // and at least one point of maximal order.
      bool charac = true;
      for (const auto& t : lv.hyperplanes.types) {
        bool no35 = !t.sub_profile.count(3) && !t.sub_profile.count(5);
        bool has_max = t.order_hist.back() > 0;
        bool in_image = golden.count(t.label) > 0;
        if (in_image != (no35 && has_max)) charac = false;
      }
      ck.expect(id, "image types = {no H3/H5 profile, maximal-order points}", charac);
    }
  }
}

void check_weights(Checker& ck, const Atlas& atlas) {
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    const auto& lv = atlas.level(n);
    std::string id = "weights.n" + std::to_string(n);
    auto rep = weight_distance_rule(*lv.variety, lv.hyperplanes);
    ck.expect(id, "each deepest-point distance yields a single sum type", rep.uniform);
    ck.expect(id, "distance-d singular pairs sum to a type-d hyperplane", rep.rule_holds);
    // Weight 1 = singular: exactly 3^n functionals, all of census type 1.
    long long singular = 0;
    bool all_type1 = true;
    for (std::size_t f = 1; f < lv.weights.size(); ++f) {
      if (lv.weights[f] == 1) {
        ++singular;
        if (lv.hyperplanes.type_of_functional(static_cast<Tensor>(f)) != 1) all_type1 = false;
      }
    }
    ck.expect_eq(id, "weight-one functional count", singular,
                 (long long)lv.variety->num_points());
    ck.expect(id, "weight-one functionals are exactly type 1", all_type1);
  }
}

void check_orbits(Checker& ck, const Atlas& atlas) {
  for (int n = 2; n <= std::min(4, atlas.n_max()); ++n) {
    const auto& lv = atlas.level(n);
    std::string id = "orbits.n" + std::to_string(n);
    ck.expect_eq(id, "orbit count equals signature type count",
                 lv.hyperplane_orbits.sizes.size(), lv.hyperplanes.types.size());
    // Same partition element by element: two functionals share a signature
    // type iff they share an orbit.
    bool same = true;
    std::map<int, int> orbit_to_type;
    for (std::size_t f = 1; f < lv.hyperplane_orbits.orbit_of.size(); ++f) {
      int orbit = lv.hyperplane_orbits.orbit_of[f];
      int type = lv.hyperplanes.type_of_functional(static_cast<Tensor>(f));
      auto [it, inserted] = orbit_to_type.emplace(orbit, type);
      if (!inserted && it->second != type) same = false;
    }
    ck.expect(id, "signature partition equals orbit partition", same);
  }
}

}  // namespace

std::vector<CheckResult> run_verify(const Atlas& atlas, const std::string& data_dir,
                                    const std::string& scope) {
  std::vector<CheckResult> results;
  Checker ck(results);
  auto want = [&](const std::string& s) { return scope == "all" || scope == s; };

  static const std::set<std::string> known = {"all",    "t1",  "t2",     "t3",  "t4",
                                              "t5",     "t6",  "t7",     "quadric",
                                              "lgr",    "pg",  "blowup", "construction",
                                              "weights", "orbits"};
  if (!known.count(scope)) throw std::invalid_argument("unknown scope: " + scope);

  if (want("construction")) check_construction(ck, atlas);
  if (want("t1")) {
    check_hyperplane_table(ck, "t1", atlas.level(2).hyperplanes,
                           load_hyperplane_table(data_dir + "/" + golden_file_name("t1")),
                           false);
    check_t1_oracle(ck, atlas);
  }
  if (want("t2"))
    check_vl_table(ck, "t2", atlas.level(2).vlines,
                   load_vl_table(data_dir + "/" + golden_file_name("t2")));
  if (want("t3"))
    check_hyperplane_table(ck, "t3", atlas.level(3).hyperplanes,
                           load_hyperplane_table(data_dir + "/" + golden_file_name("t3")),
                           true);
  if (want("t4"))
    check_vl_table(ck, "t4", atlas.level(3).vlines,
                   load_vl_table(data_dir + "/" + golden_file_name("t4")));
  if (want("t5") && atlas.n_max() >= 4)
    check_hyperplane_table(ck, "t5", atlas.level(4).hyperplanes,
                           load_hyperplane_table(data_dir + "/" + golden_file_name("t5")),
                           true);
  if (want("t6") || want("quadric")) check_quadric(ck, atlas, data_dir);
  if (want("t7") || want("lgr")) check_lgr(ck, atlas, data_dir);
  if (want("blowup")) check_blowup(ck, atlas);
  if (want("pg")) check_pg(ck, atlas);
  if (want("weights")) check_weights(ck, atlas);
  if (want("orbits")) check_orbits(ck, atlas);
  return results;
}

}  // namespace segrev
