#ifndef GPDHOM_GROUPOID_HPP
#define GPDHOM_GROUPOID_HPP

// Finite discrete groupoids with exhaustive tables, standard constructions,
// and finite G-sets. Composition convention: compose(g, h) is defined exactly
// when source(g) == range(h), read like function composition. Tuples
// (g_1,...,g_n) are composable when source(g_i) == range(g_{i+1}). Swapping
// this convention transposes every boundary matrix in the library, so all
// code downstream assumes it.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gpdhom/errors.hpp"

namespace gpdhom {

struct GroupoidData {
  std::vector<std::string> object_names;
  std::vector<std::string> arrow_names;
  std::vector<int> source;   // per arrow
  std::vector<int> range;    // per arrow
  std::vector<int> inverse;  // per arrow
  std::vector<int> unit;     // per object: the identity arrow
  // Flat arrow_count x arrow_count table; -1 where not composable.
  std::vector<int> compose;

  int arrow_count() const { return static_cast<int>(arrow_names.size()); }
  int object_count() const { return static_cast<int>(object_names.size()); }
  int compose_at(int a, int b) const { return compose[a * arrow_count() + b]; }
  void set_compose(int a, int b, int c) { compose[a * arrow_count() + b] = c; }
};

struct Violation {
  std::string rule;
  std::string details;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  const Violation& first() const { return violations.front(); }
  std::string to_string() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "\n";
      s += v.rule + ": " + v.details;
    }
    return s;
  }
};

inline ValidationReport validate_groupoid(const GroupoidData& d) {
  ValidationReport rep;
  auto add = [&rep](const std::string& rule, const std::string& details) {
    if (rep.violations.size() < 16) rep.violations.push_back({rule, details});
  };
  const int A = d.arrow_count(), O = d.object_count();
  if (static_cast<int>(d.source.size()) != A || static_cast<int>(d.range.size()) != A ||
      static_cast<int>(d.inverse.size()) != A || static_cast<int>(d.unit.size()) != O ||
      static_cast<int>(d.compose.size()) != A * A) {
    add("malformed", "table sizes do not match object/arrow counts");
    return rep;
  }
  auto obj_ok = [O](int x) { return x >= 0 && x < O; };
  auto arr_ok = [A](int a) { return a >= 0 && a < A; };
  for (int a = 0; a < A; ++a)
    if (!obj_ok(d.source[a]) || !obj_ok(d.range[a]) || !arr_ok(d.inverse[a])) {
      add("malformed", "arrow '" + d.arrow_names[a] + "' has out-of-range source/range/inverse");
      return rep;
    }
  for (int x = 0; x < O; ++x)
    if (!arr_ok(d.unit[x])) {
      add("malformed", "object '" + d.object_names[x] + "' has out-of-range unit");
      return rep;
    }
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b) {
      const int c = d.compose_at(a, b);
      if (c != -1 && !arr_ok(c)) {
        add("malformed", "composition entry out of range at (" + d.arrow_names[a] + "," +
                             d.arrow_names[b] + ")");
        return rep;
      }
    }

  const auto an = [&d](int a) { return d.arrow_names[a]; };
  const auto on = [&d](int x) { return d.object_names[x]; };

  for (int x = 0; x < O; ++x) {
    const int u = d.unit[x];
    if (d.source[u] != x || d.range[u] != x)
      add("unit anchors", "unit of '" + on(x) + "' is '" + an(u) + "' with source '" +
                              on(d.source[u]) + "', range '" + on(d.range[u]) + "'");
  }
  for (int a = 0; a < A; ++a)
    for (int b = 0; b < A; ++b) {
      const int c = d.compose_at(a, b);
      const bool should = d.source[a] == d.range[b];
      if (should && c == -1)
        add("not composable", "missing composite for composable pair (" + an(a) + "," + an(b) + ")");
      if (!should && c != -1)
        add("not composable",
            "composite defined for non-composable pair (" + an(a) + "," + an(b) + ")");
      if (should && c != -1) {
        if (d.source[c] != d.source[b] || d.range[c] != d.range[a])
          add("composition anchors",
              "(" + an(a) + ")(" + an(b) + ") = " + an(c) + " has wrong source or range");
      }
    }
  if (!rep.ok()) return rep;
  for (int a = 0; a < A; ++a) {
    if (d.compose_at(d.unit[d.range[a]], a) != a)
      add("unit law", "unit(range) * '" + an(a) + "' != '" + an(a) + "'");
    if (d.compose_at(a, d.unit[d.source[a]]) != a)
      add("unit law", "'" + an(a) + "' * unit(source) != '" + an(a) + "'");
  }
  for (int a = 0; a < A; ++a) {
    const int ai = d.inverse[a];
    if (d.inverse[ai] != a) add("inverse", "inverse not involutive at '" + an(a) + "'");
    if (d.source[ai] != d.range[a] || d.range[ai] != d.source[a])
      add("inverse", "inverse of '" + an(a) + "' has wrong anchors");
    else {
      if (d.compose_at(a, ai) != d.unit[d.range[a]])
        add("inverse", "'" + an(a) + "' * inverse != unit(range)");
      if (d.compose_at(ai, a) != d.unit[d.source[a]])
        add("inverse", "inverse * '" + an(a) + "' != unit(source)");
    }
  }
  for (int a = 0; a < A && rep.violations.size() < 16; ++a)
    for (int b = 0; b < A && rep.violations.size() < 16; ++b) {
      if (d.source[a] != d.range[b]) continue;
      const int ab = d.compose_at(a, b);
      for (int c = 0; c < A; ++c) {
        if (d.source[b] != d.range[c]) continue;
        const int bc = d.compose_at(b, c);
        if (d.compose_at(ab, c) != d.compose_at(a, bc)) {
          add("associativity",
              "triple (" + an(a) + "," + an(b) + "," + an(c) + ") is not associative");
          break;
        }
      }
    }
  return rep;
}

class FiniteGroupoid {
public:
  static FiniteGroupoid create(GroupoidData d) {
    ValidationReport rep = validate_groupoid(d);
    if (!rep.ok()) throw ValidationError("invalid groupoid:\n" + rep.to_string());
    return FiniteGroupoid(std::move(d));
  }

  int object_count() const { return d_.object_count(); }
  int arrow_count() const { return d_.arrow_count(); }
  int source(int a) const { return d_.source[a]; }
  int range(int a) const { return d_.range[a]; }
  int inverse(int a) const { return d_.inverse[a]; }
  int unit(int x) const { return d_.unit[x]; }
  bool is_unit(int a) const { return is_unit_[a]; }
  bool composable(int a, int b) const { return d_.source[a] == d_.range[b]; }

  int compose(int a, int b) const {
    const int c = d_.compose_at(a, b);
    if (c == -1)
      throw std::invalid_argument("compose: (" + arrow_name(a) + "," + arrow_name(b) +
                                  ") not composable");
    return c;
  }

  const std::string& object_name(int x) const { return d_.object_names[x]; }
  const std::string& arrow_name(int a) const { return d_.arrow_names[a]; }
  const GroupoidData& data() const { return d_; }

  // Ascending arrow lists; these fix the lexicographic tuple enumeration.
  const std::vector<int>& arrows_with_range(int x) const { return by_range_[x]; }
  const std::vector<int>& arrows_with_source(int x) const { return by_source_[x]; }

  // Orbit id per object (connected components through arrows), numbered by
  // first occurrence; representative is the least object in the orbit.
  const std::vector<int>& object_orbit_ids() const { return orbit_ids_; }
  int orbit_count() const { return orbit_count_; }

  bool operator==(const FiniteGroupoid& o) const {
    return d_.source == o.d_.source && d_.range == o.d_.range && d_.inverse == o.d_.inverse &&
           d_.unit == o.d_.unit && d_.compose == o.d_.compose &&
           d_.object_names == o.d_.object_names && d_.arrow_names == o.d_.arrow_names;
  }
  bool operator!=(const FiniteGroupoid& o) const { return !(*this == o); }

  // Same shape, ignoring labels.
  bool same_structure(const FiniteGroupoid& o) const {
    return d_.source == o.d_.source && d_.range == o.d_.range && d_.inverse == o.d_.inverse &&
           d_.unit == o.d_.unit && d_.compose == o.d_.compose;
  }

private:
  explicit FiniteGroupoid(GroupoidData d)
      : d_(std::move(d)),
        by_range_(d_.object_count()),
        by_source_(d_.object_count()),
        is_unit_(d_.arrow_count(), false) {
    for (int a = 0; a < d_.arrow_count(); ++a) {
      by_range_[d_.range[a]].push_back(a);
      by_source_[d_.source[a]].push_back(a);
    }
    for (int x = 0; x < d_.object_count(); ++x) is_unit_[d_.unit[x]] = true;
    // union-find for object orbits
    std::vector<int> parent(d_.object_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int a = 0; a < d_.arrow_count(); ++a) {
      int u = find(d_.source[a]), v = find(d_.range[a]);
      if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
    orbit_ids_.assign(d_.object_count(), -1);
    orbit_count_ = 0;
    for (int x = 0; x < d_.object_count(); ++x) {
      int root = find(x);
      if (orbit_ids_[root] == -1) orbit_ids_[root] = orbit_count_++;
      orbit_ids_[x] = orbit_ids_[root];
    }
  }

  GroupoidData d_;
  std::vector<std::vector<int>> by_range_, by_source_;
  std::vector<bool> is_unit_;
  std::vector<int> orbit_ids_;
  int orbit_count_ = 0;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr make_groupoid(GroupoidData d) {
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::create(std::move(d)));
}

// ---------------------------------------------------------------------------
// Standard families

inline GroupoidPtr empty_groupoid() { return make_groupoid(GroupoidData{}); }

// One-object groupoid from a group multiplication table (table[i][j] = i*j).
inline GroupoidPtr from_group(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(names.size());
  if (static_cast<int>(table.size()) != n)
    throw ValidationError("from_group: table size does not match element count");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw ValidationError("from_group: ragged table");
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool is_id = true;
    for (int x = 0; x < n && is_id; ++x)
      is_id = table[e][x] == x && table[x][e] == x;
    if (is_id) {
      identity = e;
      break;
    }
  }
  if (identity == -1) throw ValidationError("from_group: no identity element");
  GroupoidData d;
  d.object_names = {"*"};
  d.arrow_names = names;
  d.source.assign(n, 0);
  d.range.assign(n, 0);
  d.unit = {identity};
  d.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) d.inverse[a] = b;
    if (d.inverse[a] == -1)
      throw ValidationError("from_group: element '" + names[a] + "' has no inverse");
  }
  d.compose.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n)
        throw ValidationError("from_group: table entry out of range");
      d.set_compose(a, b, table[a][b]);
    }
  return make_groupoid(std::move(d));
}

inline GroupoidPtr cyclic_group(int m) {
  std::vector<std::string> names(m);
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    names[i] = "g" + std::to_string(i);
    for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  }
  return from_group(names, table);
}

inline GroupoidPtr trivial_groupoid() { return cyclic_group(1); }

// Arrow (i|j) runs from object j to object i; (i|j)(j|l) = (i|l).
inline GroupoidPtr pair_groupoid(int k) {
  GroupoidData d;
  for (int x = 0; x < k; ++x) d.object_names.push_back("p" + std::to_string(x));
  d.compose.assign(k * k * k * k, -1);
  d.unit.assign(k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      d.arrow_names.push_back("(" + std::to_string(i) + "|" + std::to_string(j) + ")");
      d.range.push_back(i);
      d.source.push_back(j);
      d.inverse.push_back(j * k + i);
    }
  for (int x = 0; x < k; ++x) d.unit[x] = x * k + x;
  for (int a = 0; a < k * k; ++a)
    for (int b = 0; b < k * k; ++b)
      if (d.source[a] == d.range[b]) d.set_compose(a, b, d.range[a] * k + d.source[b]);
  return make_groupoid(std::move(d));
}

inline GroupoidPtr disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  GroupoidData d;
  const int og = g.object_count(), ag = g.arrow_count();
  for (int x = 0; x < og; ++x) d.object_names.push_back("L." + g.object_name(x));
  for (int x = 0; x < h.object_count(); ++x) d.object_names.push_back("R." + h.object_name(x));
  for (int a = 0; a < ag; ++a) d.arrow_names.push_back("L." + g.arrow_name(a));
  for (int a = 0; a < h.arrow_count(); ++a) d.arrow_names.push_back("R." + h.arrow_name(a));
  const int A = ag + h.arrow_count();
  d.compose.assign(A * A, -1);
  for (int a = 0; a < ag; ++a) {
    d.source.push_back(g.source(a));
    d.range.push_back(g.range(a));
    d.inverse.push_back(g.inverse(a));
  }
  for (int a = 0; a < h.arrow_count(); ++a) {
    d.source.push_back(og + h.source(a));
    d.range.push_back(og + h.range(a));
    d.inverse.push_back(ag + h.inverse(a));
  }
  for (int x = 0; x < og; ++x) d.unit.push_back(g.unit(x));
  for (int x = 0; x < h.object_count(); ++x) d.unit.push_back(ag + h.unit(x));
  for (int a = 0; a < ag; ++a)
    for (int b = 0; b < ag; ++b)
      if (g.composable(a, b)) d.set_compose(a, b, g.compose(a, b));
  for (int a = 0; a < h.arrow_count(); ++a)
    for (int b = 0; b < h.arrow_count(); ++b)
      if (h.composable(a, b)) d.set_compose(ag + a, ag + b, ag + h.compose(a, b));
  return make_groupoid(std::move(d));
}

// ---------------------------------------------------------------------------
// Finite left G-sets

struct GSetData {
  std::vector<std::string> point_names;
  std::vector<int> anchor;  // per point, into objects
  std::vector<int> action;  // flat arrow_count x point_count, -1 undefined
};

class GSet {
public:
  static GSet create(GroupoidPtr g, GSetData d) {
    const int A = g->arrow_count(), P = static_cast<int>(d.point_names.size());
    if (static_cast<int>(d.anchor.size()) != P || static_cast<int>(d.action.size()) != A * P)
      throw ValidationError("G-set: table sizes do not match");
    for (int p = 0; p < P; ++p)
      if (d.anchor[p] < 0 || d.anchor[p] >= g->object_count())
        throw ValidationError("G-set: anchor out of range at point " + d.point_names[p]);
    for (int a = 0; a < A; ++a)
      for (int p = 0; p < P; ++p) {
        const int q = d.action[a * P + p];
        const bool should = g->source(a) == d.anchor[p];
        if (should != (q != -1))
          throw ValidationError("G-set: action of '" + g->arrow_name(a) + "' on '" +
                                d.point_names[p] + "' defined iff composable violated");
        if (q != -1) {
          if (q < 0 || q >= P) throw ValidationError("G-set: action value out of range");
          if (d.anchor[q] != g->range(a))
            throw ValidationError("G-set: anchor(g.x) != range(g) at ('" + g->arrow_name(a) +
                                  "','" + d.point_names[p] + "')");
        }
      }
    for (int x = 0; x < g->object_count(); ++x)
      for (int p = 0; p < P; ++p)
        if (d.anchor[p] == x && d.action[g->unit(x) * P + p] != p)
          throw ValidationError("G-set: unit does not act as identity at '" + d.point_names[p] +
                                "'");
    for (int a = 0; a < A; ++a)
      for (int b = 0; b < A; ++b) {
        if (!g->composable(a, b)) continue;
        const int ab = g->compose(a, b);
        for (int p = 0; p < P; ++p) {
          if (d.anchor[p] != g->source(b)) continue;
          if (d.action[ab * P + p] != d.action[a * P + d.action[b * P + p]])
            throw ValidationError("G-set: action not functorial at ('" + g->arrow_name(a) +
                                  "','" + g->arrow_name(b) + "','" + d.point_names[p] + "')");
        }
      }
    return GSet(std::move(g), std::move(d));
  }

  const GroupoidPtr& groupoid() const { return g_; }
  int point_count() const { return static_cast<int>(d_.point_names.size()); }
  int anchor(int p) const { return d_.anchor[p]; }
  const std::string& point_name(int p) const { return d_.point_names[p]; }
  bool defined(int a, int p) const { return g_->source(a) == d_.anchor[p]; }

  int act(int a, int p) const {
    const int q = d_.action[a * point_count() + p];
    if (q == -1)
      throw std::invalid_argument("G-set action undefined at ('" + g_->arrow_name(a) + "','" +
                                  d_.point_names[p] + "')");
    return q;
  }

  const GSetData& data() const { return d_; }

private:
  GSet(GroupoidPtr g, GSetData d) : g_(std::move(g)), d_(std::move(d)) {}
  GroupoidPtr g_;
  GSetData d_;
};

// Finite right G-sets (x.g defined when anchor(x) == range(g)).
struct RightGSetData {
  std::vector<std::string> point_names;
  std::vector<int> anchor;
  std::vector<int> action;  // flat point_count x arrow_count, -1 undefined
};

class RightGSet {
public:
  static RightGSet create(GroupoidPtr g, RightGSetData d) {
    const int A = g->arrow_count(), P = static_cast<int>(d.point_names.size());
    if (static_cast<int>(d.anchor.size()) != P || static_cast<int>(d.action.size()) != P * A)
      throw ValidationError("right G-set: table sizes do not match");
    for (int p = 0; p < P; ++p)
      if (d.anchor[p] < 0 || d.anchor[p] >= g->object_count())
        throw ValidationError("right G-set: anchor out of range");
    for (int p = 0; p < P; ++p)
      for (int a = 0; a < A; ++a) {
        const int q = d.action[p * A + a];
        const bool should = d.anchor[p] == g->range(a);
        if (should != (q != -1))
          throw ValidationError("right G-set: definedness violated at ('" + d.point_names[p] +
                                "','" + g->arrow_name(a) + "')");
        if (q != -1 && d.anchor[q] != g->source(a))
          throw ValidationError("right G-set: anchor(x.g) != source(g)");
      }
    for (int p = 0; p < P; ++p)
      if (d.action[p * A + g->unit(d.anchor[p])] != p)
        throw ValidationError("right G-set: unit does not act as identity");
    for (int p = 0; p < P; ++p)
      for (int a = 0; a < A; ++a) {
        if (d.anchor[p] != g->range(a)) continue;
        for (int b = 0; b < A; ++b) {
          if (!g->composable(a, b)) continue;
          // (x.a).b == x.(ab)
          if (d.action[d.action[p * A + a] * A + b] != d.action[p * A + g->compose(a, b)])
            throw ValidationError("right G-set: action not functorial");
        }
      }
    return RightGSet(std::move(g), std::move(d));
  }

  const GroupoidPtr& groupoid() const { return g_; }
  int point_count() const { return static_cast<int>(d_.point_names.size()); }
  int anchor(int p) const { return d_.anchor[p]; }
  const std::string& point_name(int p) const { return d_.point_names[p]; }
  bool defined(int p, int a) const { return d_.anchor[p] == g_->range(a); }

  int act(int p, int a) const {
    const int q = d_.action[p * g_->arrow_count() + a];
    if (q == -1) throw std::invalid_argument("right G-set action undefined");
    return q;
  }

private:
  RightGSet(GroupoidPtr g, RightGSetData d) : g_(std::move(g)), d_(std::move(d)) {}
  GroupoidPtr g_;
  RightGSetData d_;
};

// Canonical G-sets.
inline GSet gset_on_objects(GroupoidPtr g) {
  GSetData d;
  d.point_names = g->data().object_names;
  d.anchor.resize(g->object_count());
  std::iota(d.anchor.begin(), d.anchor.end(), 0);
  d.action.assign(g->arrow_count() * g->object_count(), -1);
  for (int a = 0; a < g->arrow_count(); ++a) d.action[a * g->object_count() + g->source(a)] = g->range(a);
  return GSet::create(std::move(g), std::move(d));
}

inline GSet gset_on_arrows_left(GroupoidPtr g) {
  GSetData d;
  d.point_names = g->data().arrow_names;
  d.anchor = g->data().range;
  const int A = g->arrow_count();
  d.action.assign(A * A, -1);
  for (int a = 0; a < A; ++a)
    for (int h = 0; h < A; ++h)
      if (g->composable(a, h)) d.action[a * A + h] = g->compose(a, h);
  return GSet::create(std::move(g), std::move(d));
}

inline RightGSet rgset_on_arrows(GroupoidPtr g) {
  RightGSetData d;
  d.point_names = g->data().arrow_names;
  d.anchor = g->data().source;
  const int A = g->arrow_count();
  d.action.assign(A * A, -1);
  for (int h = 0; h < A; ++h)
    for (int a = 0; a < A; ++a)
      if (g->composable(h, a)) d.action[h * A + a] = g->compose(h, a);
  return RightGSet::create(std::move(g), std::move(d));
}

inline RightGSet rgset_on_objects(GroupoidPtr g) {
  RightGSetData d;
  d.point_names = g->data().object_names;
  d.anchor.resize(g->object_count());
  std::iota(d.anchor.begin(), d.anchor.end(), 0);
  d.action.assign(g->object_count() * g->arrow_count(), -1);
  for (int a = 0; a < g->arrow_count(); ++a)
    d.action[g->range(a) * g->arrow_count() + a] = g->source(a);
  return RightGSet::create(std::move(g), std::move(d));
}

inline GroupoidPtr action_groupoid(const GSet& x) {
  const FiniteGroupoid& g = *x.groupoid();
  GroupoidData d;
  d.object_names = x.data().point_names;
  std::map<std::pair<int, int>, int> index;  // (arrow of g, point) -> arrow
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int p = 0; p < x.point_count(); ++p) {
      if (!x.defined(a, p)) continue;
      index[{a, p}] = static_cast<int>(d.arrow_names.size());
      d.arrow_names.push_back("(" + g.arrow_name(a) + "," + x.point_name(p) + ")");
      d.source.push_back(p);
      d.range.push_back(x.act(a, p));
      d.inverse.push_back(-1);  // filled below
    }
  const int A = static_cast<int>(d.arrow_names.size());
  for (const auto& [key, idx] : index) {
    const auto [a, p] = key;
    d.inverse[idx] = index.at({g.inverse(a), x.act(a, p)});
  }
  d.unit.resize(x.point_count());
  for (int p = 0; p < x.point_count(); ++p) d.unit[p] = index.at({g.unit(x.anchor(p)), p});
  d.compose.assign(A * A, -1);
  for (const auto& [kb, ib] : index) {
    const auto [b, p] = kb;
    for (const auto& [ka, ia] : index) {
      const auto [a, q] = ka;
      if (q != x.act(b, p)) continue;
      if (!g.composable(a, b)) continue;
      d.set_compose(ia, ib, index.at({g.compose(a, b), p}));
    }
  }
  return make_groupoid(std::move(d));
}

// ---------------------------------------------------------------------------
// Subgroupoids

struct SubgroupoidInclusion {
  GroupoidPtr parent;
  GroupoidPtr child;
  std::vector<int> object_map;  // child object -> parent object, ascending
  std::vector<int> arrow_map;   // child arrow -> parent arrow, ascending
  bool is_full() const {
    return child->object_count() == parent->object_count() &&
           child->arrow_count() == parent->arrow_count();
  }
};

// Builds the subgroupoid on the given parent objects and arrows. The subsets
// must be closed: sources/ranges and units of the objects present, inverses
// and all composites of the arrows present.
inline SubgroupoidInclusion subgroupoid(GroupoidPtr parent, std::vector<int> objects,
                                        std::vector<int> arrows) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::sort(arrows.begin(), arrows.end());
  arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
  const FiniteGroupoid& g = *parent;
  std::vector<int> obj_index(g.object_count(), -1), arr_index(g.arrow_count(), -1);
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) obj_index[objects[i]] = i;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i) arr_index[arrows[i]] = i;
  for (int a : arrows) {
    if (obj_index[g.source(a)] == -1 || obj_index[g.range(a)] == -1)
      throw ValidationError("subgroupoid: arrow '" + g.arrow_name(a) +
                            "' has endpoints outside the object subset");
    if (arr_index[g.inverse(a)] == -1)
      throw ValidationError("subgroupoid: not closed under inverse at '" + g.arrow_name(a) + "'");
  }
  for (int x : objects)
    if (arr_index[g.unit(x)] == -1)
      throw ValidationError("subgroupoid: unit of '" + g.object_name(x) + "' missing");
  for (int a : arrows)
    for (int b : arrows)
      if (g.composable(a, b) && arr_index[g.compose(a, b)] == -1)
        throw ValidationError("subgroupoid: not closed under composition at ('" +
                              g.arrow_name(a) + "','" + g.arrow_name(b) + "')");
  GroupoidData d;
  for (int x : objects) d.object_names.push_back(g.object_name(x));
  for (int a : arrows) d.arrow_names.push_back(g.arrow_name(a));
  const int A = static_cast<int>(arrows.size());
  d.compose.assign(A * A, -1);
  for (int a : arrows) {
    d.source.push_back(obj_index[g.source(a)]);
    d.range.push_back(obj_index[g.range(a)]);
    d.inverse.push_back(arr_index[g.inverse(a)]);
  }
  for (int x : objects) d.unit.push_back(arr_index[g.unit(x)]);
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < A; ++j)
      if (g.composable(arrows[i], arrows[j]))
        d.set_compose(i, j, arr_index[g.compose(arrows[i], arrows[j])]);
  SubgroupoidInclusion inc;
  inc.parent = std::move(parent);
  inc.child = make_groupoid(std::move(d));
  inc.object_map = std::move(objects);
  inc.arrow_map = std::move(arrows);
  return inc;
}

// All arrows between the chosen objects.
inline SubgroupoidInclusion full_subgroupoid(GroupoidPtr parent, std::vector<int> objects) {
  std::vector<bool> keep(parent->object_count(), false);
  for (int x : objects) keep[x] = true;
  std::vector<int> arrows;
  for (int a = 0; a < parent->arrow_count(); ++a)
    if (keep[parent->source(a)] && keep[parent->range(a)]) arrows.push_back(a);
  return subgroupoid(std::move(parent), std::move(objects), std::move(arrows));
}

inline SubgroupoidInclusion unit_subgroupoid(GroupoidPtr parent) {
  std::vector<int> objects(parent->object_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<int> arrows;
  for (int x : objects) arrows.push_back(parent->unit(x));
  return subgroupoid(std::move(parent), std::move(objects), std::move(arrows));
}

inline SubgroupoidInclusion full_inclusion(GroupoidPtr parent) {
  std::vector<int> objects(parent->object_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<int> arrows(parent->arrow_count());
  std::iota(arrows.begin(), arrows.end(), 0);
  return subgroupoid(std::move(parent), std::move(objects), std::move(arrows));
}

// Closure of a set of arrows under inverse, units and composition.
inline SubgroupoidInclusion subgroupoid_generated(GroupoidPtr parent,
                                                  const std::vector<int>& seed_arrows) {
  const FiniteGroupoid& g = *parent;
  std::set<int> arrows(seed_arrows.begin(), seed_arrows.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(arrows.begin(), arrows.end());
    for (int a : cur) {
      if (arrows.insert(g.inverse(a)).second) grew = true;
      if (arrows.insert(g.unit(g.source(a))).second) grew = true;
      if (arrows.insert(g.unit(g.range(a))).second) grew = true;
    }
    cur.assign(arrows.begin(), arrows.end());
    for (int a : cur)
      for (int b : cur)
        if (g.composable(a, b) && arrows.insert(g.compose(a, b)).second) grew = true;
  }
  std::set<int> objects;
  for (int a : arrows) {
    objects.insert(g.source(a));
    objects.insert(g.range(a));
  }
  return subgroupoid(std::move(parent), {objects.begin(), objects.end()},
                     {arrows.begin(), arrows.end()});
}

}  // namespace gpdhom

#endif  // GPDHOM_GROUPOID_HPP
