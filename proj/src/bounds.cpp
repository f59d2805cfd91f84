#include "linkwidth/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linkwidth/errors.hpp"
#include "linkwidth/twist.hpp"
#include "linkwidth/width.hpp"

namespace linkwidth {

const BoundConstants& BoundConstants::standard() {
  static const BoundConstants bc = [] {
    BoundConstants c;
    c.v3 = 1.0149;
    c.v8 = 3.6639;
    c.k612 = 6.0 * std::sqrt(2.0) + 4.0 * std::sqrt(3.0);
    c.k2416 = 4.0 * c.k612;
    c.k128 = 2.0 * c.k612;
    c.four_pi = 4.0 * std::numbers::pi;
    c.ht_lower = 0.70735;
    return c;
  }();
  return bc;
}

double max_width_bound(double t, const BoundConstants& bc) {
  return 2.0 + bc.k2416 * std::sqrt(t);
}

double heegaard_width_bound(double max_width) {
  if (max_width < 2.0)
    throw Error(Errc::DomainError, "max-width below 2 has no Heegaard width bound");
  return max_width - 2.0;
}

double cheeger_bound(double heeg_width, double volume, const BoundConstants& bc) {
  if (volume <= 0.0) throw Error(Errc::DomainError, "volume must be positive");
  return bc.four_pi * heeg_width / volume;
}

double buser_lambda1(double h) { return 4.0 * h + 10.0 * h * h; }

double bridge_bound(double t, const BoundConstants& bc) {
  return 1.0 + bc.k128 * std::sqrt(t);
}

VolumeInterval alternating_volume_interval(double t, const BoundConstants& bc) {
  return {bc.v8 * (t / 2.0 - 1.0), 10.0 * bc.v3 * (t - 1.0)};
}

VolumeInterval highly_twisted_volume_interval(double t, const BoundConstants& bc) {
  return {bc.ht_lower * (t - 1.0), 10.0 * bc.v3 * (t - 1.0)};
}

double crossing_lower_bound(double volume, const BoundConstants& bc) {
  return volume / (10.0 * bc.v3);
}

namespace {

double volume_lower(double t, bool highly_twisted, const BoundConstants& bc) {
  return highly_twisted ? bc.ht_lower * (t - 1.0) : bc.v8 * (t / 2.0 - 1.0);
}

}  // namespace

UniversalConstants universal_constants(const BoundConstants& bc) {
  UniversalConstants u;
  constexpr int kMaxT = 1000000;
  double prev1[2] = {0, 0}, prev2[2] = {0, 0};
  u.strictly_decreasing = true;
  for (int t = 3; t <= kMaxT; t++) {
    for (int ht = 0; ht < 2; ht++) {
      double vol = volume_lower(t, ht != 0, bc);
      double h = bc.four_pi * bc.k2416 * std::sqrt(static_cast<double>(t)) / vol;
      double obj1 = h * std::sqrt(static_cast<double>(t));
      double obj2 = h * std::sqrt(vol);
      if (t > 3 && (obj1 >= prev1[ht] || obj2 >= prev2[ht])) u.strictly_decreasing = false;
      prev1[ht] = obj1;
      prev2[ht] = obj2;
      if (obj1 > u.c1) {
        u.c1 = obj1;
        u.sup_t = t;
        u.sup_highly_twisted = ht != 0;
      }
      u.c2 = std::max(u.c2, obj2);
    }
  }
  u.c3 = 4.0 * u.c1;
  u.c4 = 10.0 * u.c1 * u.c1;
  double c2_ceil = std::ceil(u.c2);
  u.c5 = 4.0 * c2_ceil;
  u.c6 = 10.0 * c2_ceil * c2_ceil;
  u.all_within = u.c1 <= u.c1_max && u.c2 <= u.c2_max && u.c3 <= u.c3_max &&
                 u.c4 <= u.c4_max && u.c5 <= u.c5_max && u.c6 <= u.c6_max;
  return u;
}

BoundsReport full_report(const PDCode& pd, std::optional<double> volume,
                         const ClassFlags& flags, const BoundConstants& bc) {
  if (volume && *volume <= 0.0)
    throw Error(Errc::DomainError, "volume must be positive");

  BoundsReport r;
  r.flags = flags;
  r.c = pd.crossing_count();

  if (r.c > 0) {
    CombinatorialMap m = build_map(pd);
    FaceSet fs = faces(m);
    TwistDecomposition td = twist_decomposition(m, fs);
    r.t = td.t();
    r.degenerateCyclicRegion = td.any_degenerate();

    if (flags.highly_twisted) {
      for (const TwistBlock& b : td.blocks) {
        if (b.crossings.size() < 7)
          throw Error(Errc::HypothesisViolated,
                      "highly twisted class requires at least 7 crossings per twist region");
      }
    }

    TwistGraph tg = twist_graph(td, m);
    VertexOrdering phiT = separator_ordering(tg.map);
    r.widthT = ordering_width(tg.map.to_graph(), phiT).width;
    VertexOrdering phiG = lift_ordering(phiT, td);
    r.widthG = sweep_profile(m, phiG).max_arcs;
  }

  r.maxWidthFormula = max_width_bound(r.t, bc);
  r.maxWidthConstructive = r.widthG + 2.0;
  r.heegWidthBound =
      std::max(std::min(r.maxWidthFormula, r.maxWidthConstructive) - 2.0, 0.0);
  r.bridgeBound = bridge_bound(r.t, bc);

  if (flags.alternating && flags.highly_twisted) {
    VolumeInterval a = alternating_volume_interval(r.t, bc);
    VolumeInterval h = highly_twisted_volume_interval(r.t, bc);
    r.volumeInterval = {std::max(a.lower, h.lower), std::min(a.upper, h.upper)};
  } else if (flags.alternating) {
    r.volumeInterval = alternating_volume_interval(r.t, bc);
  } else if (flags.highly_twisted) {
    r.volumeInterval = highly_twisted_volume_interval(r.t, bc);
  }
  if (r.volumeInterval && r.volumeInterval->lower <= 0.0)
    r.warnings.push_back("volume interval lower bound is non-positive at this twist count");

  std::optional<double> vol_eff = volume;
  if (!vol_eff && r.volumeInterval && r.volumeInterval->lower > 0.0)
    vol_eff = r.volumeInterval->lower;
  if (vol_eff) {
    r.cheegerBound = cheeger_bound(heegaard_width_bound(r.maxWidthFormula), *vol_eff, bc);
    r.lambda1Bound = buser_lambda1(*r.cheegerBound);
    r.crossingLowerBound = crossing_lower_bound(*vol_eff, bc);
  }
  return r;
}

}  // namespace linkwidth
