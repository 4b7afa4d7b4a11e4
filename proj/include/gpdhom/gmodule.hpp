#ifndef GPDHOM_GMODULE_HPP
#define GPDHOM_GMODULE_HPP

// Modules over a finite groupoid: a free abelian fiber per object and a
// unimodular matrix per arrow, functorial under composition. Includes
// coinvariants, subgroupoid restriction/induction with the adjunction
// between them, and the tensor-product basis of a right and a left G-set.

#include <map>
#include <string>
#include <vector>

#include "gpdhom/abelian.hpp"
#include "gpdhom/groupoid.hpp"

namespace gpdhom {

class GModule {
public:
  static GModule create(GroupoidPtr g, std::vector<int> fiber_rank,
                        std::vector<IntMatrix> action) {
    if (static_cast<int>(fiber_rank.size()) != g->object_count() ||
        static_cast<int>(action.size()) != g->arrow_count())
      throw ValidationError("GModule: fiber/action counts do not match the groupoid");
    for (int x = 0; x < g->object_count(); ++x)
      if (fiber_rank[x] < 0) throw ValidationError("GModule: negative fiber rank");
    for (int a = 0; a < g->arrow_count(); ++a) {
      const IntMatrix& m = action[a];
      if (m.rows() != fiber_rank[g->range(a)] || m.cols() != fiber_rank[g->source(a)])
        throw ValidationError("GModule: action of '" + g->arrow_name(a) + "' has shape " +
                              m.shape_string() + ", expected fiber(range) x fiber(source)");
    }
    for (int x = 0; x < g->object_count(); ++x)
      if (action[g->unit(x)] != IntMatrix::identity(fiber_rank[x]))
        throw ValidationError("GModule: unit of '" + g->object_name(x) +
                              "' does not act as the identity");
    for (int a = 0; a < g->arrow_count(); ++a)
      for (int b = 0; b < g->arrow_count(); ++b)
        if (g->composable(a, b) && action[g->compose(a, b)] != action[a] * action[b])
          throw ValidationError("GModule: action not functorial at ('" + g->arrow_name(a) +
                                "','" + g->arrow_name(b) + "')");
    // Invertibility over Z follows from functoriality with the inverse arrow.
    return GModule(std::move(g), std::move(fiber_rank), std::move(action));
  }

  const GroupoidPtr& groupoid() const { return g_; }
  int fiber_rank(int x) const { return fiber_rank_[x]; }
  const std::vector<int>& fiber_ranks() const { return fiber_rank_; }
  const IntMatrix& action(int a) const { return action_[a]; }

  int total_rank() const { return total_rank_; }
  int offset(int x) const { return offset_[x]; }

  bool same_shape(const GModule& o) const {
    return g_->same_structure(*o.g_) && fiber_rank_ == o.fiber_rank_ && action_ == o.action_;
  }

private:
  GModule(GroupoidPtr g, std::vector<int> fr, std::vector<IntMatrix> act)
      : g_(std::move(g)), fiber_rank_(std::move(fr)), action_(std::move(act)) {
    offset_.resize(fiber_rank_.size() + 1, 0);
    for (std::size_t x = 0; x < fiber_rank_.size(); ++x)
      offset_[x + 1] = offset_[x] + fiber_rank_[x];
    total_rank_ = offset_.empty() ? 0 : offset_.back();
  }

  GroupoidPtr g_;
  std::vector<int> fiber_rank_;
  std::vector<IntMatrix> action_;
  std::vector<int> offset_;
  int total_rank_ = 0;
};

struct GModuleMap {
  GModule source;
  GModule target;
  std::vector<IntMatrix> component;  // per object

  static GModuleMap create(GModule source, GModule target, std::vector<IntMatrix> component) {
    const FiniteGroupoid& g = *source.groupoid();
    if (!g.same_structure(*target.groupoid()))
      throw ValidationError("GModuleMap: source and target live over different groupoids");
    if (static_cast<int>(component.size()) != g.object_count())
      throw ValidationError("GModuleMap: one component per object required");
    for (int x = 0; x < g.object_count(); ++x)
      if (component[x].rows() != target.fiber_rank(x) || component[x].cols() != source.fiber_rank(x))
        throw ValidationError("GModuleMap: component at '" + g.object_name(x) +
                              "' has wrong shape");
    for (int a = 0; a < g.arrow_count(); ++a)
      if (component[g.range(a)] * source.action(a) != target.action(a) * component[g.source(a)])
        throw ValidationError("GModuleMap: not equivariant at arrow '" + g.arrow_name(a) + "'");
    return GModuleMap{std::move(source), std::move(target), std::move(component)};
  }

  static GModuleMap identity(const GModule& m) {
    std::vector<IntMatrix> comp;
    for (int x = 0; x < m.groupoid()->object_count(); ++x)
      comp.push_back(IntMatrix::identity(m.fiber_rank(x)));
    return GModuleMap{m, m, std::move(comp)};
  }

  static GModuleMap zero(const GModule& source, const GModule& target) {
    std::vector<IntMatrix> comp;
    for (int x = 0; x < source.groupoid()->object_count(); ++x)
      comp.push_back(IntMatrix(target.fiber_rank(x), source.fiber_rank(x)));
    return GModuleMap{source, target, std::move(comp)};
  }

  // Block-diagonal matrix on the total spaces, objects in order.
  IntMatrix total_matrix() const {
    IntMatrix m(target.total_rank(), source.total_rank());
    for (int x = 0; x < static_cast<int>(component.size()); ++x)
      for (const auto& [ij, v] : component[x].entries())
        m.set(target.offset(x) + ij.first, source.offset(x) + ij.second, v);
    return m;
  }

  bool is_identity() const {
    for (int x = 0; x < static_cast<int>(component.size()); ++x)
      if (component[x] != IntMatrix::identity(component[x].rows()) ||
          component[x].rows() != component[x].cols())
        return false;
    return true;
  }
};

// g after f, componentwise.
inline GModuleMap compose(const GModuleMap& g, const GModuleMap& f) {
  if (!g.source.same_shape(f.target))
    throw std::invalid_argument("GModuleMap compose: middle modules do not match");
  std::vector<IntMatrix> comp;
  for (int x = 0; x < static_cast<int>(f.component.size()); ++x)
    comp.push_back(g.component[x] * f.component[x]);
  return GModuleMap{f.source, g.target, std::move(comp)};
}

// ---------------------------------------------------------------------------
// Basic modules

inline GModule trivial_module(GroupoidPtr g) {
  std::vector<int> ranks(g->object_count(), 1);
  std::vector<IntMatrix> act(g->arrow_count(), IntMatrix::identity(1));
  return GModule::create(std::move(g), std::move(ranks), std::move(act));
}

// Module of a finite G-set: fiber at x is free on the points over x (in
// ascending point order), arrows act by permutation.
inline GModule gset_module(const GSet& xset) {
  const FiniteGroupoid& g = *xset.groupoid();
  std::vector<std::vector<int>> points_at(g.object_count());
  std::vector<int> pos_in_fiber(xset.point_count());
  for (int p = 0; p < xset.point_count(); ++p) {
    pos_in_fiber[p] = static_cast<int>(points_at[xset.anchor(p)].size());
    points_at[xset.anchor(p)].push_back(p);
  }
  std::vector<int> ranks(g.object_count());
  for (int x = 0; x < g.object_count(); ++x) ranks[x] = static_cast<int>(points_at[x].size());
  std::vector<IntMatrix> act;
  for (int a = 0; a < g.arrow_count(); ++a) {
    IntMatrix m(ranks[g.range(a)], ranks[g.source(a)]);
    for (int p : points_at[g.source(a)]) m.set(pos_in_fiber[xset.act(a, p)], pos_in_fiber[p], 1);
    act.push_back(std::move(m));
  }
  return GModule::create(xset.groupoid(), std::move(ranks), std::move(act));
}

// Pushforward of an equivariant map of G-sets, f_*(e_p) = e_{f(p)}.
inline GModuleMap pushforward(const GSet& xset, const GSet& yset,
                              const std::vector<int>& point_map) {
  const FiniteGroupoid& g = *xset.groupoid();
  if (!g.same_structure(*yset.groupoid()))
    throw std::invalid_argument("pushforward: G-sets over different groupoids");
  if (static_cast<int>(point_map.size()) != xset.point_count())
    throw std::invalid_argument("pushforward: point map size mismatch");
  for (int p = 0; p < xset.point_count(); ++p) {
    if (yset.anchor(point_map[p]) != xset.anchor(p))
      throw ValidationError("pushforward: map does not respect anchors at '" +
                            xset.point_name(p) + "'");
  }
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int p = 0; p < xset.point_count(); ++p)
      if (xset.defined(a, p) && point_map[xset.act(a, p)] != yset.act(a, point_map[p]))
        throw ValidationError("pushforward: map not equivariant at ('" + g.arrow_name(a) +
                              "','" + xset.point_name(p) + "')");
  GModule mx = gset_module(xset), my = gset_module(yset);
  // positions within fibers
  std::vector<int> xpos(xset.point_count()), ypos(yset.point_count());
  std::vector<int> xcount(g.object_count(), 0), ycount(g.object_count(), 0);
  for (int p = 0; p < xset.point_count(); ++p) xpos[p] = xcount[xset.anchor(p)]++;
  for (int p = 0; p < yset.point_count(); ++p) ypos[p] = ycount[yset.anchor(p)]++;
  std::vector<IntMatrix> comp;
  for (int x = 0; x < g.object_count(); ++x)
    comp.push_back(IntMatrix(my.fiber_rank(x), mx.fiber_rank(x)));
  for (int p = 0; p < xset.point_count(); ++p)
    comp[xset.anchor(p)].add_to(ypos[point_map[p]], xpos[p], 1);
  return GModuleMap::create(std::move(mx), std::move(my), std::move(comp));
}

inline GModule direct_sum(const GModule& a, const GModule& b) {
  if (!a.groupoid()->same_structure(*b.groupoid()))
    throw std::invalid_argument("direct_sum: modules over different groupoids");
  std::vector<int> ranks;
  for (int x = 0; x < a.groupoid()->object_count(); ++x)
    ranks.push_back(a.fiber_rank(x) + b.fiber_rank(x));
  std::vector<IntMatrix> act;
  for (int r = 0; r < a.groupoid()->arrow_count(); ++r) {
    const FiniteGroupoid& g = *a.groupoid();
    IntMatrix m(ranks[g.range(r)], ranks[g.source(r)]);
    for (const auto& [ij, v] : a.action(r).entries()) m.set(ij.first, ij.second, v);
    for (const auto& [ij, v] : b.action(r).entries())
      m.set(a.fiber_rank(g.range(r)) + ij.first, a.fiber_rank(g.source(r)) + ij.second, v);
    act.push_back(std::move(m));
  }
  return GModule::create(a.groupoid(), std::move(ranks), std::move(act));
}

// ---------------------------------------------------------------------------
// Coinvariants

struct Coinvariants {
  FGAbelianGroup group;
  QuotientPresentation presentation;  // of the total space by the relations
  IntMatrix relations;                // total_rank x (#relation columns)
};

// M_G as the quotient of the total space by action(g)m - m over all arrows.
inline Coinvariants coinvariants(const GModule& m) {
  const FiniteGroupoid& g = *m.groupoid();
  std::vector<std::vector<Int>> cols;
  for (int a = 0; a < g.arrow_count(); ++a) {
    if (g.is_unit(a)) continue;
    const int sx = g.source(a), rx = g.range(a);
    for (int j = 0; j < m.fiber_rank(sx); ++j) {
      std::vector<Int> col(m.total_rank(), Int(0));
      for (int i = 0; i < m.fiber_rank(rx); ++i) col[m.offset(rx) + i] += m.action(a).at(i, j);
      col[m.offset(sx) + j] -= 1;
      cols.push_back(std::move(col));
    }
  }
  IntMatrix rel(m.total_rank(), static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) rel.set_column(j, cols[j]);
  Coinvariants out;
  out.presentation = quotient_presentation(m.total_rank(), rel);
  out.group = out.presentation.group;
  out.relations = std::move(rel);
  return out;
}

// ---------------------------------------------------------------------------
// Restriction and induction along an open subgroupoid

inline GModule restrict_module(const SubgroupoidInclusion& inc, const GModule& m) {
  if (!m.groupoid()->same_structure(*inc.parent))
    throw std::invalid_argument("restrict_module: module not over the parent groupoid");
  std::vector<int> ranks;
  for (int x : inc.object_map) ranks.push_back(m.fiber_rank(x));
  std::vector<IntMatrix> act;
  for (int a : inc.arrow_map) act.push_back(m.action(a));
  return GModule::create(inc.child, std::move(ranks), std::move(act));
}

inline GModuleMap restrict_map(const SubgroupoidInclusion& inc, const GModuleMap& f) {
  std::vector<IntMatrix> comp;
  for (int x : inc.object_map) comp.push_back(f.component[x]);
  return GModuleMap::create(restrict_module(inc, f.source), restrict_module(inc, f.target),
                            std::move(comp));
}

namespace detail {

// Layout of Ind_H^G N: the fiber at a parent object x is a direct sum over
// right-H-orbit representatives of {g : range(g) = x, source(g) in H^0},
// representatives lexicographically least, summand = N at source(rep).
struct InducedSummand {
  int rep;           // parent arrow
  int child_object;  // child object under source(rep)
  int offset;        // within the fiber at x
  int rank;
};

struct InducedLayout {
  std::vector<std::vector<InducedSummand>> per_object;    // per parent object
  std::map<int, std::pair<int, int>> orbit_of;            // arrow -> (rep, child h), arrow = rep * h
  std::map<int, std::pair<int, int>> summand_of_rep;      // rep -> (object, summand index)
  std::vector<int> parent_arrow_to_child;                 // -1 off the child
};

inline InducedLayout induced_layout(const SubgroupoidInclusion& inc, const GModule& n) {
  const FiniteGroupoid& g = *inc.parent;
  const FiniteGroupoid& h = *inc.child;
  InducedLayout lay;
  lay.per_object.resize(g.object_count());
  lay.parent_arrow_to_child.assign(g.arrow_count(), -1);
  for (int i = 0; i < static_cast<int>(inc.arrow_map.size()); ++i)
    lay.parent_arrow_to_child[inc.arrow_map[i]] = i;
  std::vector<int> parent_object_to_child(g.object_count(), -1);
  for (int i = 0; i < static_cast<int>(inc.object_map.size()); ++i)
    parent_object_to_child[inc.object_map[i]] = i;

  for (int x = 0; x < g.object_count(); ++x) {
    int offset = 0;
    for (int arrow : g.arrows_with_range(x)) {
      if (parent_object_to_child[g.source(arrow)] == -1) continue;
      if (lay.orbit_of.count(arrow)) continue;  // already in an earlier orbit
      // 'arrow' is the least element of a fresh orbit: record rep and sweep.
      const int cobj = parent_object_to_child[g.source(arrow)];
      lay.summand_of_rep[arrow] = {x, static_cast<int>(lay.per_object[x].size())};
      lay.per_object[x].push_back({arrow, cobj, offset, n.fiber_rank(cobj)});
      offset += n.fiber_rank(cobj);
      for (int hc = 0; hc < h.arrow_count(); ++hc) {
        const int ha = inc.arrow_map[hc];
        if (g.source(arrow) != g.range(ha)) continue;
        lay.orbit_of.emplace(g.compose(arrow, ha), std::make_pair(arrow, hc));
      }
    }
  }
  return lay;
}

inline std::vector<int> induced_ranks(const InducedLayout& lay) {
  std::vector<int> ranks;
  for (const auto& summands : lay.per_object) {
    int r = 0;
    for (const auto& s : summands) r += s.rank;
    ranks.push_back(r);
  }
  return ranks;
}

}  // namespace detail

// Ind_H^G N: translation on orbit representatives with the unique H-correction.
inline GModule induce(const SubgroupoidInclusion& inc, const GModule& n) {
  if (!n.groupoid()->same_structure(*inc.child))
    throw std::invalid_argument("induce: module not over the child groupoid");
  const FiniteGroupoid& g = *inc.parent;
  detail::InducedLayout lay = detail::induced_layout(inc, n);
  std::vector<int> ranks = detail::induced_ranks(lay);
  std::vector<IntMatrix> act;
  for (int a = 0; a < g.arrow_count(); ++a) {
    const int x = g.source(a), y = g.range(a);
    IntMatrix m(ranks[y], ranks[x]);
    for (const auto& from : lay.per_object[x]) {
      const int moved = g.compose(a, from.rep);
      const auto [rep, hc] = lay.orbit_of.at(moved);
      const auto [ry, ridx] = lay.summand_of_rep.at(rep);
      if (ry != y) throw InternalError("induce: moved orbit lands at the wrong object");
      const detail::InducedSummand& to = lay.per_object[y][ridx];
      const IntMatrix& block = n.action(hc);
      for (const auto& [ij, v] : block.entries())
        m.set(to.offset + ij.first, from.offset + ij.second, v);
    }
    act.push_back(std::move(m));
  }
  return GModule::create(inc.parent, std::move(ranks), std::move(act));
}

// Ind as a functor on maps of child modules.
inline GModuleMap induced_map(const SubgroupoidInclusion& inc, const GModuleMap& f) {
  detail::InducedLayout src_lay = detail::induced_layout(inc, f.source);
  detail::InducedLayout tgt_lay = detail::induced_layout(inc, f.target);
  GModule src = induce(inc, f.source), tgt = induce(inc, f.target);
  std::vector<IntMatrix> comp;
  for (int x = 0; x < inc.parent->object_count(); ++x) {
    IntMatrix m(tgt.fiber_rank(x), src.fiber_rank(x));
    for (std::size_t s = 0; s < src_lay.per_object[x].size(); ++s) {
      const auto& from = src_lay.per_object[x][s];
      const auto& to = tgt_lay.per_object[x][s];  // identical orbit structure
      for (const auto& [ij, v] : f.component[from.child_object].entries())
        m.set(to.offset + ij.first, from.offset + ij.second, v);
    }
    comp.push_back(std::move(m));
  }
  return GModuleMap::create(std::move(src), std::move(tgt), std::move(comp));
}

// Unit M -> Res Ind M of the adjunction: m maps to rep (x) corrected by the
// child arrow carrying the unit back to its orbit representative.
inline GModuleMap adjunction_unit(const SubgroupoidInclusion& inc, const GModule& m) {
  if (!m.groupoid()->same_structure(*inc.child))
    throw std::invalid_argument("adjunction_unit: module not over the child groupoid");
  const FiniteGroupoid& g = *inc.parent;
  detail::InducedLayout lay = detail::induced_layout(inc, m);
  GModule ind = induce(inc, m);
  GModule res_ind = restrict_module(inc, ind);
  std::vector<IntMatrix> comp;
  for (int cx = 0; cx < inc.child->object_count(); ++cx) {
    const int px = inc.object_map[cx];
    IntMatrix c(res_ind.fiber_rank(cx), m.fiber_rank(cx));
    const auto [rep, hc] = lay.orbit_of.at(g.unit(px));
    const auto [ry, ridx] = lay.summand_of_rep.at(rep);
    const detail::InducedSummand& to = lay.per_object[ry][ridx];
    for (const auto& [ij, v] : m.action(hc).entries()) c.set(to.offset + ij.first, ij.second, v);
    comp.push_back(std::move(c));
  }
  return GModuleMap::create(m, std::move(res_ind), std::move(comp));
}

// Counit Ind Res N -> N: each summand acts by its representative arrow.
inline GModuleMap adjunction_counit(const SubgroupoidInclusion& inc, const GModule& n) {
  if (!n.groupoid()->same_structure(*inc.parent))
    throw std::invalid_argument("adjunction_counit: module not over the parent groupoid");
  GModule res = restrict_module(inc, n);
  detail::InducedLayout lay = detail::induced_layout(inc, res);
  GModule ind_res = induce(inc, res);
  std::vector<IntMatrix> comp;
  for (int x = 0; x < inc.parent->object_count(); ++x) {
    IntMatrix c(n.fiber_rank(x), ind_res.fiber_rank(x));
    for (const auto& s : lay.per_object[x]) {
      const IntMatrix& block = n.action(s.rep);
      for (const auto& [ij, v] : block.entries()) c.set(ij.first, s.offset + ij.second, v);
    }
    comp.push_back(std::move(c));
  }
  return GModuleMap::create(std::move(ind_res), n, std::move(comp));
}

struct TriangleReport {
  bool ok = true;
  std::string detail;
};

// Both counit-unit equations of Ind -| Res, as exact matrix identities.
inline TriangleReport triangle_check(const SubgroupoidInclusion& inc, const GModule& child_m,
                                     const GModule& parent_n) {
  TriangleReport rep;
  GModuleMap first = compose(adjunction_counit(inc, induce(inc, child_m)),
                             induced_map(inc, adjunction_unit(inc, child_m)));
  if (!first.is_identity()) {
    rep.ok = false;
    rep.detail = "counit(Ind M) . Ind(unit M) != id";
    return rep;
  }
  GModuleMap second = compose(restrict_map(inc, adjunction_counit(inc, parent_n)),
                              adjunction_unit(inc, restrict_module(inc, parent_n)));
  if (!second.is_identity()) {
    rep.ok = false;
    rep.detail = "Res(counit N) . unit(Res N) != id";
    return rep;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor product of a right and a left G-set over G

struct TensorProductBasis {
  // All anchor-compatible pairs (y, z), lexicographically ordered.
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> orbit_of_pair;              // diagonal-orbit id per pair
  std::vector<std::pair<int, int>> orbit_reps; // least pair of each orbit, ascending
  int orbit_count = 0;

  // kappa on indicator tensors: the class of chi_y (x) chi_z.
  int orbit_of(int y, int z) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(y, z));
    if (it == pairs.end() || *it != std::make_pair(y, z))
      throw std::invalid_argument("tensor basis: pair has mismatched anchors");
    return orbit_of_pair[it - pairs.begin()];
  }
};

// Basis of Y x_G Z: orbits of the diagonal action (y, z) ~ (y.g, g^{-1}.z).
inline TensorProductBasis tensor_kappa(const RightGSet& y, const GSet& z) {
  const FiniteGroupoid& g = *y.groupoid();
  if (!g.same_structure(*z.groupoid()))
    throw std::invalid_argument("tensor_kappa: G-sets over different groupoids");
  TensorProductBasis basis;
  std::map<std::pair<int, int>, int> index;
  for (int p = 0; p < y.point_count(); ++p)
    for (int q = 0; q < z.point_count(); ++q)
      if (y.anchor(p) == z.anchor(q)) {
        index[{p, q}] = static_cast<int>(basis.pairs.size());
        basis.pairs.push_back({p, q});
      }
  basis.orbit_of_pair.assign(basis.pairs.size(), -1);
  for (std::size_t i = 0; i < basis.pairs.size(); ++i) {
    if (basis.orbit_of_pair[i] != -1) continue;
    const int orbit = basis.orbit_count++;
    basis.orbit_reps.push_back(basis.pairs[i]);
    // sweep the orbit from its least element
    std::vector<std::size_t> stack{i};
    basis.orbit_of_pair[i] = orbit;
    while (!stack.empty()) {
      auto [p, q] = basis.pairs[stack.back()];
      stack.pop_back();
      for (int a : g.arrows_with_range(y.anchor(p))) {
        const int p2 = y.act(p, a), q2 = z.act(g.inverse(a), q);
        const std::size_t j = index.at({p2, q2});
        if (basis.orbit_of_pair[j] == -1) {
          basis.orbit_of_pair[j] = orbit;
          stack.push_back(j);
        }
      }
    }
  }
  return basis;
}

}  // namespace gpdhom

#endif  // GPDHOM_GMODULE_HPP
