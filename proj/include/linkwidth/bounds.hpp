#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkwidth/pd_code.hpp"

namespace linkwidth {

// Closed-form constants shared by every bound, stored to full double
// precision (16-17 significant digits).
struct BoundConstants {
  double v3;        // volume of the regular ideal tetrahedron
  double v8;        // volume of the regular ideal octahedron
  double k612;      // 6*sqrt(2) + 4*sqrt(3)
  double k2416;     // 24*sqrt(2) + 16*sqrt(3)
  double k128;      // 12*sqrt(2) + 8*sqrt(3)
  double four_pi;
  double ht_lower;  // volume per twist region in the highly twisted regime

  static const BoundConstants& standard();
};

// 2 + (24*sqrt(2)+16*sqrt(3)) * sqrt(t)
double max_width_bound(double t, const BoundConstants& bc = BoundConstants::standard());

// maxWidth - 2; DomainError when maxWidth < 2. Applies to the filled
// manifold of any surgery over the same diagram.
double heegaard_width_bound(double max_width);

// 4*pi*heegWidth / volume; DomainError when volume <= 0.
double cheeger_bound(double heeg_width, double volume,
                     const BoundConstants& bc = BoundConstants::standard());

// 4h + 10h^2
double buser_lambda1(double h);

// 1 + (12*sqrt(2)+8*sqrt(3)) * sqrt(t); assumes a tangle-prime knot,
// recorded as an attestation flag in reports.
double bridge_bound(double t, const BoundConstants& bc = BoundConstants::standard());

struct VolumeInterval {
  double lower = 0;
  double upper = 0;
};

// (v8*(t/2 - 1), 10*v3*(t - 1)); the lower bound is only positive for
// t > 2 and is reported as-is (with a warning downstream) otherwise.
VolumeInterval alternating_volume_interval(double t,
                                           const BoundConstants& bc = BoundConstants::standard());

// (0.70735*(t - 1), 10*v3*(t - 1)); valid when every twist region has at
// least 7 crossings, which full_report checks against the decomposition.
VolumeInterval highly_twisted_volume_interval(double t,
                                              const BoundConstants& bc = BoundConstants::standard());

// Universal constants of the composed spectral bounds: suprema over integer
// t >= 3 and both link classes of h*sqrt(t) and h*sqrt(volumeLower), plus
// the derived 4c1, 10c1^2, 4*ceil(c2), 10*ceil(c2)^2, each against its
// quoted ceiling.
struct UniversalConstants {
  double c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0;
  double c1_max = 1643, c2_max = 1129, c3_max = 6572;
  double c4_max = 2.7e7, c5_max = 4516, c6_max = 1.3e7;
  int sup_t = 0;                     // t attaining the supremum
  bool sup_highly_twisted = false;   // class attaining it
  bool strictly_decreasing = false;  // objectives decrease on [3, 1e6]
  bool all_within = false;           // every computed value <= its ceiling
};
UniversalConstants universal_constants(const BoundConstants& bc = BoundConstants::standard());

// volume / (10*v3)
double crossing_lower_bound(double volume,
                            const BoundConstants& bc = BoundConstants::standard());

// Caller attestations about the diagram class. Only the >=7-crossings
// highly-twisted condition is mechanically checkable and checked.
struct ClassFlags {
  bool alternating = false;
  bool highly_twisted = false;
  bool tangle_prime_attested = false;
};

struct BoundsReport {
  int t = 0;
  int c = 0;
  int widthT = 0;  // width of the constructed twist-graph ordering
  int widthG = 0;  // width of the lifted diagram-graph ordering
  double maxWidthFormula = 0;
  double maxWidthConstructive = 0;  // widthG + 2
  double heegWidthBound = 0;        // min(formula, constructive) - 2, floored at 0
  std::optional<double> cheegerBound;
  std::optional<double> lambda1Bound;
  double bridgeBound = 0;
  std::optional<VolumeInterval> volumeInterval;
  std::optional<double> crossingLowerBound;
  bool degenerateCyclicRegion = false;
  ClassFlags flags;
  std::vector<std::string> warnings;
};

// Whole pipeline: build the map, decompose into twist regions, order the
// twist graph by separators, lift, sweep, then evaluate every closed-form
// bound. Cheeger/lambda1/crossing bounds appear only when a volume is given
// or a positive interval lower bound applies (a given volume wins; the
// interval is still reported).
BoundsReport full_report(const PDCode& pd, std::optional<double> volume,
                         const ClassFlags& flags,
                         const BoundConstants& bc = BoundConstants::standard());

}  // namespace linkwidth
