#include "linkwidth/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

#include "linkwidth/diagram_gen.hpp"
#include "linkwidth/rng.hpp"
#include "linkwidth/triangulate.hpp"
#include "linkwidth/twist.hpp"
#include "linkwidth/width.hpp"

namespace linkwidth {

bool separator_invariants_ok(const CombinatorialMap& m, const SeparatorResult& r) {
  int n = m.vertex_count;
  std::vector<int> side(n, -1);  // 0 = s, 1 = part1, 2 = part2
  auto mark = [&](const std::vector<int>& vs, int tag) {
    for (int v : vs) {
      if (v < 0 || v >= n || side[v] != -1) return false;
      side[v] = tag;
    }
    return true;
  };
  if (!mark(r.s, 0) || !mark(r.part1, 1) || !mark(r.part2, 2)) return false;
  for (int v = 0; v < n; v++) {
    if (side[v] == -1) return false;
  }
  for (int e = 0; e < m.edge_count(); e++) {
    auto [a, b] = m.edge_ends(e);
    if ((side[a] == 1 && side[b] == 2) || (side[a] == 2 && side[b] == 1)) return false;
  }
  double ssize = static_cast<double>(r.s.size());
  if (ssize > std::sqrt(8.0 * n) + 1e-9) return false;
  if (3 * r.part1.size() > 2 * static_cast<std::size_t>(n)) return false;
  if (3 * r.part2.size() > 2 * static_cast<std::size_t>(n)) return false;
  return true;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

struct Checker {
  SelfCheckReport& rep;
  void add(const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok, detail});
    if (!ok) rep.all_ok = false;
  }
};

bool near(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

// width(separator ordering) against (6*sqrt(2)+4*sqrt(3)) * maxdeg * sqrt(n)
bool width_bound_ok(const CombinatorialMap& m, int width, const BoundConstants& bc) {
  return width <= bc.k612 * m.max_degree() * std::sqrt(static_cast<double>(m.vertex_count)) + 1e-9;
}

}  // namespace

SelfCheckReport run_selfcheck(std::uint64_t seed, const BoundConstants& bc) {
  SelfCheckReport rep;
  rep.seed = seed;
  Checker ck{rep};

  ck.add("k2416-identity", std::fabs(bc.k2416 - 4.0 * bc.k612) < 1e-12, fmt(bc.k2416));
  ck.add("k128-identity", std::fabs(bc.k128 - 2.0 * bc.k612) < 1e-12, fmt(bc.k128));
  double closure = 2.0 * std::sqrt(2.0) + bc.k612 * std::sqrt(2.0 / 3.0) - bc.k612;
  ck.add("closure-identity", std::fabs(closure) < 1e-12, fmt(closure));

  UniversalConstants u = universal_constants(bc);
  ck.add("c1-range", u.c1 >= 1642.0 && u.c1 <= 1643.0, fmt(u.c1));
  ck.add("c2-range", u.c2 >= 1127.5 && u.c2 <= 1129.0, fmt(u.c2));
  ck.add("c3-ceiling", u.c3 <= u.c3_max, fmt(u.c3));
  ck.add("c4-ceiling", u.c4 <= u.c4_max, fmt(u.c4));
  ck.add("c5-ceiling", u.c5 <= u.c5_max, fmt(u.c5));
  ck.add("c6-ceiling", u.c6 <= u.c6_max, fmt(u.c6));
  ck.add("sup-at-t3", u.sup_t == 3, "t=" + std::to_string(u.sup_t));
  ck.add("objective-decreasing", u.strictly_decreasing, u.strictly_decreasing ? "yes" : "no");

  ck.add("crossing-bound-unit", near(crossing_lower_bound(10.149, bc), 1.0, 1e-9),
         fmt(crossing_lower_bound(10.149, bc)));
  ck.add("max-width-spots",
         near(max_width_bound(0, bc), 2.0, 1e-12) &&
             near(max_width_bound(1, bc), 63.6539, 1e-3) &&
             near(max_width_bound(4, bc), 125.3079, 1e-3),
         fmt(max_width_bound(4, bc)));
  ck.add("heegaard-spots",
         near(heegaard_width_bound(2.0), 0.0, 1e-12) &&
             near(heegaard_width_bound(63.6539), 61.6539, 1e-12),
         fmt(heegaard_width_bound(63.6539)));
  ck.add("cheeger-spot", near(cheeger_bound(61.6539, 2.02988, bc), 381.68, 0.01),
         fmt(cheeger_bound(61.6539, 2.02988, bc)));
  ck.add("buser-spots",
         buser_lambda1(0.0) == 0.0 && near(buser_lambda1(0.1), 0.5, 1e-12) &&
             near(buser_lambda1(1.0), 14.0, 1e-12),
         fmt(buser_lambda1(0.1)));
  ck.add("bridge-spots",
         near(bridge_bound(0, bc), 1.0, 1e-12) && near(bridge_bound(1, bc), 31.8270, 1e-3) &&
             near(bridge_bound(9, bc), 93.4809, 1e-3),
         fmt(bridge_bound(1, bc)));

  {
    VolumeInterval a3 = alternating_volume_interval(3, bc);
    VolumeInterval a2 = alternating_volume_interval(2, bc);
    VolumeInterval a10 = alternating_volume_interval(10, bc);
    ck.add("alternating-interval-spots",
           near(a3.lower, 1.83195, 1e-3) && near(a3.upper, 20.298, 1e-3) &&
               near(a2.lower, 0.0, 1e-12) && near(a10.lower, 14.6556, 1e-3) &&
               near(a10.upper, 91.341, 1e-3),
           fmt(a3.lower) + ".." + fmt(a3.upper));
    VolumeInterval h1 = highly_twisted_volume_interval(1, bc);
    VolumeInterval h3 = highly_twisted_volume_interval(3, bc);
    VolumeInterval h11 = highly_twisted_volume_interval(11, bc);
    ck.add("highly-twisted-interval-spots",
           near(h1.lower, 0.0, 1e-12) && near(h1.upper, 0.0, 1e-12) &&
               near(h3.lower, 1.41470, 1e-3) && near(h3.upper, 20.298, 1e-3) &&
               near(h11.lower, 7.0735, 1e-3) && near(h11.upper, 101.49, 1e-2),
           fmt(h3.lower) + ".." + fmt(h3.upper));
  }

  {
    bool ok = true;
    double worst = 0;
    for (int t : {1, 2, 3, 5, 10}) {
      double lhs = cheeger_bound(heegaard_width_bound(max_width_bound(t, bc)), 2.02988, bc);
      double rhs = bc.four_pi * bc.k2416 * std::sqrt(static_cast<double>(t)) / 2.02988;
      double rel = std::fabs(lhs - rhs) / rhs;
      worst = std::max(worst, rel);
      if (rel > 1e-9) ok = false;
    }
    ck.add("composition-identity", ok, "relerr=" + fmt(worst));
  }

  {
    Rng rng(seed);
    int sep_ok = 0, wbound_ok = 0, sweep_ok = 0;
    const int kTri = 20;
    try {
      for (int i = 0; i < kTri; i++) {
        int n = 4 + rng.next_int(60);
        CombinatorialMap m = random_triangulation(n, rng.next_u64());
        if (separator_invariants_ok(m, separate(m))) sep_ok++;
        VertexOrdering phi = separator_ordering(m);
        WidthProfile wp = ordering_width(m.to_graph(), phi);
        if (width_bound_ok(m, wp.width, bc)) wbound_ok++;
        if (sweep_profile(m, phi).max_arcs == wp.width) sweep_ok++;
      }
    } catch (const std::exception& e) {
      ck.add("triangulation-suite", false, e.what());
    }
    ck.add("triangulation-separators", sep_ok == kTri,
           std::to_string(sep_ok) + "/" + std::to_string(kTri));
    ck.add("triangulation-width-bound", wbound_ok == kTri,
           std::to_string(wbound_ok) + "/" + std::to_string(kTri));
    ck.add("triangulation-sweep", sweep_ok == kTri,
           std::to_string(sweep_ok) + "/" + std::to_string(kTri));
  }

  {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    int map_ok = 0, twist_ok = 0, lift_ok = 0, sweep_ok = 0, wbound_ok = 0;
    const int kDiag = 20;
    try {
      for (int i = 0; i < kDiag; i++) {
        int n = 1 + rng.next_int(30);
        PDCode pd = random_diagram(n, rng.next_u64());
        CombinatorialMap m = build_map(pd);
        if (m.vertex_count == n && components_spherical(m)) map_ok++;

        FaceSet fs = faces(m);
        TwistDecomposition td = twist_decomposition(m, fs);
        std::vector<char> seen(n, 0);
        bool partition = true;
        for (std::size_t b = 0; b < td.blocks.size(); b++) {
          for (int c : td.blocks[b].crossings) {
            if (c < 0 || c >= n || seen[c] || td.block_of[c] != static_cast<int>(b))
              partition = false;
            else
              seen[c] = 1;
          }
        }
        for (int c = 0; c < n; c++) partition = partition && seen[c];
        TwistGraph tg = twist_graph(td, m);
        if (partition && td.t() <= n && tg.map.max_degree() <= 4) twist_ok++;

        VertexOrdering phiT = separator_ordering(tg.map);
        WidthProfile wT = ordering_width(tg.map.to_graph(), phiT);
        if (width_bound_ok(tg.map, wT.width, bc)) wbound_ok++;
        VertexOrdering phiG = lift_ordering(phiT, td);
        WidthProfile wG = ordering_width(m.to_graph(), phiG);
        int allowance = td.any_degenerate() ? 4 : 2;
        if (wG.width <= wT.width + allowance) lift_ok++;
        if (sweep_profile(m, phiG).max_arcs == wG.width) sweep_ok++;
      }
    } catch (const std::exception& e) {
      ck.add("diagram-suite", false, e.what());
    }
    ck.add("diagram-maps", map_ok == kDiag, std::to_string(map_ok) + "/" + std::to_string(kDiag));
    ck.add("diagram-twist-partition", twist_ok == kDiag,
           std::to_string(twist_ok) + "/" + std::to_string(kDiag));
    ck.add("diagram-width-bound", wbound_ok == kDiag,
           std::to_string(wbound_ok) + "/" + std::to_string(kDiag));
    ck.add("diagram-lift", lift_ok == kDiag,
           std::to_string(lift_ok) + "/" + std::to_string(kDiag));
    ck.add("diagram-sweep", sweep_ok == kDiag,
           std::to_string(sweep_ok) + "/" + std::to_string(kDiag));
  }

  return rep;
}

}  // namespace linkwidth
