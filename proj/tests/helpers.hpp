#ifndef GPDHOM_TESTS_HELPERS_HPP
#define GPDHOM_TESTS_HELPERS_HPP

// Shared fixtures for the test suites: a small corpus of groupoids, a
// brute-force isomorphism check for tiny instances, and common G-sets.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gpdhom/correspondence.hpp"
#include "gpdhom/groupoid.hpp"

namespace gpdhom::testing {

// Z/2 acting on two points by swapping them.
inline GSet swap_gset() {
  GroupoidPtr z2 = cyclic_group(2);
  GSetData d;
  d.point_names = {"x0", "x1"};
  d.anchor = {0, 0};
  d.action = {0, 1,   // unit
              1, 0};  // generator swaps
  // action is indexed arrow-major: action[a * P + p]
  return GSet::create(z2, d);
}

inline GSet z2_two_fixed_points() {
  GroupoidPtr z2 = cyclic_group(2);
  GSetData d;
  d.point_names = {"x0", "x1"};
  d.anchor = {0, 0};
  d.action = {0, 1, 0, 1};
  return GSet::create(z2, d);
}

struct CorpusEntry {
  std::string name;
  GroupoidPtr groupoid;
};

// Small deterministic corpus used across the invariant tests.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"Z/2", cyclic_group(2)});
  c.push_back({"Z/3", cyclic_group(3)});
  c.push_back({"pair(2)", pair_groupoid(2)});
  c.push_back({"pair(3)", pair_groupoid(3)});
  c.push_back({"Z/2+pair(2)", disjoint_union(*cyclic_group(2), *pair_groupoid(2))});
  c.push_back({"swap action", action_groupoid(swap_gset())});
  c.push_back({"trivial", trivial_groupoid()});
  return c;
}

// Backtracking isomorphism search; only for very small groupoids.
inline bool exhaustive_isomorphic(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  if (g.object_count() != h.object_count() || g.arrow_count() != h.arrow_count()) return false;
  const int A = g.arrow_count(), O = g.object_count();
  std::vector<int> amap(A, -1), omap(O, -1);
  std::vector<bool> aused(A, false), oused(O, false);

  auto object_compatible = [&](int gx, int hx) {
    if (omap[gx] == -1 && !oused[hx]) return true;
    return omap[gx] == hx;
  };

  std::function<bool(int)> rec = [&](int a) -> bool {
    if (a == A) return true;
    for (int b = 0; b < A; ++b) {
      if (aused[b]) continue;
      if (g.is_unit(a) != h.is_unit(b)) continue;
      if (!object_compatible(g.source(a), h.source(b))) continue;
      if (!object_compatible(g.range(a), h.range(b))) continue;
      if (g.source(a) == g.range(a) && h.source(b) != h.range(b)) continue;
      if (amap[g.inverse(a)] != -1 && amap[g.inverse(a)] != h.inverse(b)) continue;
      bool ok = true;
      for (int c = 0; c < a && ok; ++c) {
        if (g.composable(a, c) != h.composable(b, amap[c])) ok = false;
        if (ok && g.composable(a, c)) {
          int gc = g.compose(a, c), hc = h.compose(b, amap[c]);
          if (gc < a && amap[gc] != hc) ok = false;
          if (gc == a && b != hc) ok = false;
        }
        if (ok && g.composable(c, a) != h.composable(amap[c], b)) ok = false;
        if (ok && g.composable(c, a)) {
          int gc = g.compose(c, a), hc = h.compose(amap[c], b);
          if (gc < a && amap[gc] != hc) ok = false;
          if (gc == a && b != hc) ok = false;
        }
      }
      if (ok && g.composable(a, a)) {
        if (!h.composable(b, b)) ok = false;
        else {
          int gc = g.compose(a, a), hc = h.compose(b, b);
          if (gc < a && amap[gc] != hc) ok = false;
          if (gc == a && b != hc) ok = false;
        }
      }
      if (!ok) continue;
      // commit
      int saved_os = omap[g.source(a)], saved_or = omap[g.range(a)];
      bool set_os = false, set_or = false;
      if (omap[g.source(a)] == -1) {
        omap[g.source(a)] = h.source(b);
        oused[h.source(b)] = true;
        set_os = true;
      }
      if (omap[g.range(a)] == -1) {
        omap[g.range(a)] = h.range(b);
        oused[h.range(b)] = true;
        set_or = true;
      }
      if (omap[g.source(a)] == h.source(b) && omap[g.range(a)] == h.range(b)) {
        amap[a] = b;
        aused[b] = true;
        if (rec(a + 1)) return true;
        amap[a] = -1;
        aused[b] = false;
      }
      if (set_os) {
        oused[omap[g.source(a)]] = false;
        omap[g.source(a)] = saved_os;
      }
      if (set_or) {
        oused[omap[g.range(a)]] = false;
        omap[g.range(a)] = saved_or;
      }
    }
    return false;
  };
  return rec(0);
}

// Point bijection preserving anchors and both actions; groupoids must match
// on the nose. Brute force, only for tiny correspondences.
inline bool correspondences_equivalent(const EtaleCorrespondence& a,
                                       const EtaleCorrespondence& b) {
  if (!a.source_groupoid()->same_structure(*b.source_groupoid())) return false;
  if (!a.target_groupoid()->same_structure(*b.target_groupoid())) return false;
  if (a.point_count() != b.point_count()) return false;
  const int P = a.point_count();
  const FiniteGroupoid& g = *a.source_groupoid();
  const FiniteGroupoid& h = *a.target_groupoid();
  std::vector<int> pmap(P, -1);
  std::vector<bool> used(P, false);
  std::function<bool(int)> rec = [&](int w) -> bool {
    if (w == P) return true;
    for (int v = 0; v < P; ++v) {
      if (used[v] || a.rho(w) != b.rho(v) || a.sigma(w) != b.sigma(v)) continue;
      bool ok = true;
      pmap[w] = v;
      used[v] = true;
      for (int u = 0; u <= w && ok; ++u)
        for (int ar = 0; ar < g.arrow_count() && ok; ++ar) {
          if (g.source(ar) != a.rho(u)) continue;
          const int img = a.left_act(ar, u);
          if (img <= w && b.left_act(ar, pmap[u]) != pmap[img]) ok = false;
        }
      for (int u = 0; u <= w && ok; ++u)
        for (int br = 0; br < h.arrow_count() && ok; ++br) {
          if (a.sigma(u) != h.range(br)) continue;
          const int img = a.right_act(u, br);
          if (img <= w && b.right_act(pmap[u], br) != pmap[img]) ok = false;
        }
      if (ok && rec(w + 1)) return true;
      pmap[w] = -1;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace gpdhom::testing

#endif

