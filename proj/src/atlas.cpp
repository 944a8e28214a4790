#include "segrev/atlas.hpp"

#include <stdexcept>

namespace segrev {

Atlas::Atlas(int n_max, int vl_max) {
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("Atlas: need 1 <= n_max <= 4");
  levels_.resize(n_max + 1);

  for (int n = 1; n <= n_max; ++n) {
    Level& lv = levels_[n];
    lv.variety = std::make_unique<SegreVariety>(n);
    lv.group = stabilizer_generators(n);
    lv.action_tables = functional_action_tables(*lv.variety, lv.group);

    const HyperplaneCensus* prev = n > 1 ? &levels_[n - 1].hyperplanes : nullptr;
    lv.hyperplanes = classify_hyperplanes(*lv.variety, prev);
    lv.hyperplane_orbits = orbit_partition_functionals(lv.action_tables);
    lv.weights = tensor_weights(*lv.variety);
    for (auto& t : lv.hyperplanes.types) t.weight = lv.weights[t.representative];

    if (n >= 2) {
      lv.quadric = invariant_quadric(*lv.variety, lv.group);
      lv.has_quadric = true;
      lv.quadric_report = quadric_census(lv.quadric, lv.hyperplanes);
      for (auto& t : lv.hyperplanes.types) t.on_quadric = !lv.quadric.eval(t.representative);
    }

    if (n <= vl_max) lv.vlines = classify_veldkamp_lines(*lv.variety, lv.hyperplanes, lv.action_tables);

    if (n >= 2) {
      auto prov = vl_provenance(*lv.variety, lv.hyperplanes, levels_[n - 1].hyperplanes,
                                levels_[n - 1].vlines);
      for (auto& t : lv.hyperplanes.types) {
        auto it = prov.find(t.label);
        if (it != prov.end()) t.vl_types.assign(it->second.begin(), it->second.end());
      }
    }
  }
}

}  // namespace segrev
