#ifndef GPDHOM_CORRESPONDENCE_HPP
#define GPDHOM_CORRESPONDENCE_HPP

// Etale correspondences of finite groupoids and the maps they induce in
// homology. The pipeline follows the Tor picture: lift a module map along
// the bar resolutions (solving integer systems degree by degree on unit-led
// generators), pass to coinvariants, compose with the sigma-pushforward, and
// read the result off on canonical homology generators. Homomorphism and
// action correspondences additionally carry explicit chain maps, giving an
// independent route to the same homology maps.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpdhom/complex.hpp"

namespace gpdhom {

// ---------------------------------------------------------------------------
// Correspondence data and validation

struct CorrespondenceData {
  std::vector<std::string> point_names;
  std::vector<int> rho;    // per point -> source-groupoid object
  std::vector<int> sigma;  // per point -> target-groupoid object
  std::vector<int> left;   // flat (G-arrow x point), -1 undefined
  std::vector<int> right;  // flat (point x H-arrow), -1 undefined

  int point_count() const { return static_cast<int>(point_names.size()); }
};

inline ValidationReport validate_correspondence(const FiniteGroupoid& g, const FiniteGroupoid& h,
                                                const CorrespondenceData& d) {
  ValidationReport rep;
  auto add = [&rep](const std::string& rule, const std::string& details) {
    if (rep.violations.size() < 16) rep.violations.push_back({rule, details});
  };
  const int P = d.point_count(), GA = g.arrow_count(), HA = h.arrow_count();
  if (static_cast<int>(d.rho.size()) != P || static_cast<int>(d.sigma.size()) != P ||
      static_cast<int>(d.left.size()) != GA * P || static_cast<int>(d.right.size()) != P * HA) {
    add("malformed", "table sizes do not match point/arrow counts");
    return rep;
  }
  for (int w = 0; w < P; ++w)
    if (d.rho[w] < 0 || d.rho[w] >= g.object_count() || d.sigma[w] < 0 ||
        d.sigma[w] >= h.object_count()) {
      add("malformed", "anchor out of range at point '" + d.point_names[w] + "'");
      return rep;
    }
  auto lact = [&](int a, int w) { return d.left[a * P + w]; };
  auto ract = [&](int w, int b) { return d.right[w * HA + b]; };
  for (int a = 0; a < GA; ++a)
    for (int w = 0; w < P; ++w) {
      const int v = lact(a, w);
      const bool should = g.source(a) == d.rho[w];
      if (should != (v != -1)) {
        add("left action domain",
            "definedness at ('" + g.arrow_name(a) + "','" + d.point_names[w] + "')");
        continue;
      }
      if (v != -1) {
        if (v < 0 || v >= P) {
          add("malformed", "left action value out of range");
          return rep;
        }
        if (d.rho[v] != g.range(a))
          add("left action anchors", "rho(g.w) != range(g) at ('" + g.arrow_name(a) + "','" +
                                         d.point_names[w] + "')");
        if (d.sigma[v] != d.sigma[w])
          add("left action anchors", "sigma(g.w) != sigma(w) at ('" + g.arrow_name(a) + "','" +
                                         d.point_names[w] + "')");
      }
    }
  for (int w = 0; w < P; ++w)
    for (int b = 0; b < HA; ++b) {
      const int v = ract(w, b);
      const bool should = d.sigma[w] == h.range(b);
      if (should != (v != -1)) {
        add("right action domain",
            "definedness at ('" + d.point_names[w] + "','" + h.arrow_name(b) + "')");
        continue;
      }
      if (v != -1) {
        if (v < 0 || v >= P) {
          add("malformed", "right action value out of range");
          return rep;
        }
        if (d.sigma[v] != h.source(b))
          add("right action anchors", "sigma(w.h) != source(h) at ('" + d.point_names[w] +
                                          "','" + h.arrow_name(b) + "')");
        if (d.rho[v] != d.rho[w])
          add("right action anchors", "rho(w.h) != rho(w) at ('" + d.point_names[w] + "','" +
                                          h.arrow_name(b) + "')");
      }
    }
  if (!rep.ok()) return rep;
  for (int w = 0; w < P; ++w) {
    if (lact(g.unit(d.rho[w]), w) != w)
      add("left action", "unit does not fix '" + d.point_names[w] + "'");
    if (ract(w, h.unit(d.sigma[w])) != w)
      add("right action", "unit does not fix '" + d.point_names[w] + "'");
  }
  for (int a = 0; a < GA; ++a)
    for (int b = 0; b < GA; ++b) {
      if (!g.composable(a, b)) continue;
      const int ab = g.compose(a, b);
      for (int w = 0; w < P; ++w)
        if (d.rho[w] == g.source(b) && lact(ab, w) != lact(a, lact(b, w)))
          add("left action", "not functorial at ('" + g.arrow_name(a) + "','" +
                                 g.arrow_name(b) + "','" + d.point_names[w] + "')");
    }
  for (int a = 0; a < HA; ++a)
    for (int b = 0; b < HA; ++b) {
      if (!h.composable(a, b)) continue;
      const int ab = h.compose(a, b);
      for (int w = 0; w < P; ++w)
        if (d.sigma[w] == h.range(a) && ract(w, ab) != ract(ract(w, a), b))
          add("right action", "not functorial at ('" + d.point_names[w] + "','" +
                                  h.arrow_name(a) + "','" + h.arrow_name(b) + "')");
    }
  for (int a = 0; a < GA; ++a)
    for (int w = 0; w < P; ++w) {
      if (g.source(a) != d.rho[w]) continue;
      for (int b = 0; b < HA; ++b) {
        if (d.sigma[w] != h.range(b)) continue;
        if (ract(lact(a, w), b) != lact(a, ract(w, b)))
          add("actions commute", "witness ('" + g.arrow_name(a) + "','" + d.point_names[w] +
                                     "','" + h.arrow_name(b) + "')");
      }
    }
  for (int w = 0; w < P; ++w)
    for (int b = 0; b < HA; ++b)
      if (d.sigma[w] == h.range(b) && ract(w, b) == w && !h.is_unit(b))
        add("right action not free",
            "point '" + d.point_names[w] + "' fixed by '" + h.arrow_name(b) + "'");
  return rep;
}

class EtaleCorrespondence {
public:
  static EtaleCorrespondence create(GroupoidPtr g, GroupoidPtr h, CorrespondenceData d) {
    ValidationReport rep = validate_correspondence(*g, *h, d);
    if (!rep.ok()) throw ValidationError("invalid correspondence:\n" + rep.to_string());
    return EtaleCorrespondence(std::move(g), std::move(h), std::move(d));
  }

  const GroupoidPtr& source_groupoid() const { return g_; }
  const GroupoidPtr& target_groupoid() const { return h_; }
  int point_count() const { return d_.point_count(); }
  int rho(int w) const { return d_.rho[w]; }
  int sigma(int w) const { return d_.sigma[w]; }
  const std::string& point_name(int w) const { return d_.point_names[w]; }
  const CorrespondenceData& data() const { return d_; }

  int left_act(int a, int w) const {
    const int v = d_.left[a * point_count() + w];
    if (v == -1) throw std::invalid_argument("left action undefined");
    return v;
  }
  int right_act(int w, int b) const {
    const int v = d_.right[w * h_->arrow_count() + b];
    if (v == -1) throw std::invalid_argument("right action undefined");
    return v;
  }

  // Right-H-orbit structure. Representatives are the least point in each
  // orbit; orbit_factor(w) = (rep, b) with w = rep . b, b unique by freeness
  // (the representative itself factors through the unit).
  int orbit_count() const { return static_cast<int>(orbit_reps_.size()); }
  const std::vector<int>& orbit_reps() const { return orbit_reps_; }
  std::pair<int, int> orbit_factor(int w) const { return factor_[w]; }
  int orbit_of(int w) const { return orbit_id_[w]; }
  // Representatives with rho == x, ascending: the fiber of Omega/H over x.
  const std::vector<int>& reps_over(int x) const { return reps_over_[x]; }

private:
  EtaleCorrespondence(GroupoidPtr g, GroupoidPtr h, CorrespondenceData d)
      : g_(std::move(g)), h_(std::move(h)), d_(std::move(d)) {
    const int P = d_.point_count();
    orbit_id_.assign(P, -1);
    factor_.resize(P);
    reps_over_.resize(g_->object_count());
    for (int w = 0; w < P; ++w) {
      if (orbit_id_[w] != -1) continue;
      const int orbit = orbit_count();
      orbit_reps_.push_back(w);
      reps_over_[d_.rho[w]].push_back(w);
      // one sweep covers the orbit; the unit arrow registers w itself
      for (int b = 0; b < h_->arrow_count(); ++b) {
        if (d_.sigma[w] != h_->range(b)) continue;
        const int v = right_act(w, b);
        if (orbit_id_[v] == -1) {
          orbit_id_[v] = orbit;
          factor_[v] = {w, b};
        }
      }
    }
  }

  GroupoidPtr g_, h_;
  CorrespondenceData d_;
  std::vector<int> orbit_id_;
  std::vector<std::pair<int, int>> factor_;
  std::vector<int> orbit_reps_;
  std::vector<std::vector<int>> reps_over_;
};

// ---------------------------------------------------------------------------
// Standard correspondences

inline EtaleCorrespondence identity_correspondence(GroupoidPtr h) {
  CorrespondenceData d;
  d.point_names = h->data().arrow_names;
  d.rho = h->data().range;
  d.sigma = h->data().source;
  const int A = h->arrow_count();
  d.left.assign(A * A, -1);
  d.right.assign(A * A, -1);
  for (int a = 0; a < A; ++a)
    for (int w = 0; w < A; ++w) {
      if (h->composable(a, w)) d.left[a * A + w] = h->compose(a, w);
      if (h->composable(w, a)) d.right[w * A + a] = h->compose(w, a);
    }
  return EtaleCorrespondence::create(h, h, std::move(d));
}

// The correspondence G -> H of an open subgroupoid H <= G: points are parent
// arrows with source in H^0, left multiplication by G, right by H.
inline EtaleCorrespondence subgroupoid_correspondence(const SubgroupoidInclusion& inc) {
  const FiniteGroupoid& g = *inc.parent;
  std::vector<int> parent_object_to_child(g.object_count(), -1);
  for (int i = 0; i < static_cast<int>(inc.object_map.size()); ++i)
    parent_object_to_child[inc.object_map[i]] = i;
  std::vector<int> pts;
  for (int a = 0; a < g.arrow_count(); ++a)
    if (parent_object_to_child[g.source(a)] != -1) pts.push_back(a);
  std::vector<int> pos(g.arrow_count(), -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) pos[pts[i]] = i;
  CorrespondenceData d;
  for (int a : pts) {
    d.point_names.push_back(g.arrow_name(a));
    d.rho.push_back(g.range(a));
    d.sigma.push_back(parent_object_to_child[g.source(a)]);
  }
  d.left.assign(g.arrow_count() * pts.size(), -1);
  d.right.assign(pts.size() * inc.child->arrow_count(), -1);
  for (int a = 0; a < g.arrow_count(); ++a)
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (g.composable(a, pts[i])) d.left[a * pts.size() + i] = pos[g.compose(a, pts[i])];
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int hc = 0; hc < inc.child->arrow_count(); ++hc) {
      const int ha = inc.arrow_map[hc];
      if (g.composable(pts[i], ha))
        d.right[i * inc.child->arrow_count() + hc] = pos[g.compose(pts[i], ha)];
    }
  return EtaleCorrespondence::create(inc.parent, inc.child, std::move(d));
}

// Composite correspondence: H-orbits of sigma/rho-matched pairs under
// (w.h, l) ~ (w, h.l), representatives the least pair of each orbit. The
// detailed form also returns the class of every matched pair, which is the
// kappa identification on points.
struct ComposedCorrespondence {
  EtaleCorrespondence corr;
  std::map<std::pair<int, int>, int> point_class;  // (omega pt, lambda pt) -> composite pt
};

ComposedCorrespondence compose_detailed(const EtaleCorrespondence& omega,
                                        const EtaleCorrespondence& lambda);

inline EtaleCorrespondence compose(const EtaleCorrespondence& omega,
                                   const EtaleCorrespondence& lambda) {
  return compose_detailed(omega, lambda).corr;
}

inline ComposedCorrespondence compose_detailed(const EtaleCorrespondence& omega,
                                               const EtaleCorrespondence& lambda) {
  if (!omega.target_groupoid()->same_structure(*lambda.source_groupoid()))
    throw std::invalid_argument("compose: target of the first is not the source of the second");
  const FiniteGroupoid& h = *omega.target_groupoid();
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_index;
  for (int w = 0; w < omega.point_count(); ++w)
    for (int l = 0; l < lambda.point_count(); ++l)
      if (omega.sigma(w) == lambda.rho(l)) {
        pair_index[{w, l}] = static_cast<int>(pairs.size());
        pairs.push_back({w, l});
      }
  std::vector<int> orbit(pairs.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (orbit[i] != -1) continue;
    orbit[i] = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      auto [w, l] = pairs[stack.back()];
      stack.pop_back();
      for (int b = 0; b < h.arrow_count(); ++b) {
        if (omega.sigma(w) != h.range(b)) continue;
        const std::size_t j =
            pair_index.at({omega.right_act(w, b), lambda.left_act(h.inverse(b), l)});
        if (orbit[j] == -1) {
          orbit[j] = orbit[i];
          stack.push_back(j);
        }
      }
    }
  }
  CorrespondenceData d;
  const FiniteGroupoid& g = *omega.source_groupoid();
  const FiniteGroupoid& k = *lambda.target_groupoid();
  for (int r : reps) {
    auto [w, l] = pairs[r];
    d.point_names.push_back(omega.point_name(w) + "*" + lambda.point_name(l));
    d.rho.push_back(omega.rho(w));
    d.sigma.push_back(lambda.sigma(l));
  }
  d.left.assign(g.arrow_count() * reps.size(), -1);
  d.right.assign(reps.size() * k.arrow_count(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto [w, l] = pairs[reps[i]];
    for (int a = 0; a < g.arrow_count(); ++a)
      if (g.source(a) == omega.rho(w))
        d.left[a * reps.size() + i] = orbit[pair_index.at({omega.left_act(a, w), l})];
    for (int b = 0; b < k.arrow_count(); ++b)
      if (lambda.sigma(l) == k.range(b))
        d.right[i * k.arrow_count() + b] = orbit[pair_index.at({w, lambda.right_act(l, b)})];
  }
  ComposedCorrespondence out{EtaleCorrespondence::create(omega.source_groupoid(),
                                                         lambda.target_groupoid(), std::move(d)),
                             {}};
  for (const auto& [pr, idx] : pair_index) out.point_class[pr] = orbit[idx];
  return out;
}

// ---------------------------------------------------------------------------
// Induction along a correspondence

namespace detail {

struct CorrSummand {
  int rep;
  int offset;
  int rank;
};

struct CorrLayout {
  std::vector<std::vector<CorrSummand>> per_object;  // per source object
  std::vector<int> summand_index;                    // per rep point
};

inline CorrLayout corr_layout(const EtaleCorrespondence& corr, const GModule& n) {
  CorrLayout lay;
  lay.per_object.resize(corr.source_groupoid()->object_count());
  lay.summand_index.assign(corr.point_count(), -1);
  for (int x = 0; x < corr.source_groupoid()->object_count(); ++x) {
    int offset = 0, idx = 0;
    for (int rep : corr.reps_over(x)) {
      lay.per_object[x].push_back({rep, offset, n.fiber_rank(corr.sigma(rep))});
      offset += n.fiber_rank(corr.sigma(rep));
      lay.summand_index[rep] = idx++;
    }
  }
  return lay;
}

}  // namespace detail

// Ind_Omega N: fiber at x is the sum of N at sigma(rep) over representatives
// of Omega^x / H; arrows act by translation with the unique H-correction.
inline GModule induce_module(const EtaleCorrespondence& corr, const GModule& n) {
  if (!n.groupoid()->same_structure(*corr.target_groupoid()))
    throw std::invalid_argument("induce_module: module not over the target groupoid");
  const FiniteGroupoid& g = *corr.source_groupoid();
  detail::CorrLayout lay = detail::corr_layout(corr, n);
  std::vector<int> ranks;
  for (const auto& summands : lay.per_object) {
    int r = 0;
    for (const auto& s : summands) r += s.rank;
    ranks.push_back(r);
  }
  std::vector<IntMatrix> act;
  for (int a = 0; a < g.arrow_count(); ++a) {
    const int x = g.source(a), y = g.range(a);
    IntMatrix m(ranks[y], ranks[x]);
    for (const auto& from : lay.per_object[x]) {
      const int moved = corr.left_act(a, from.rep);
      const auto [rep, b] = corr.orbit_factor(moved);
      const detail::CorrSummand& to = lay.per_object[y][lay.summand_index[rep]];
      for (const auto& [ij, v] : n.action(b).entries())
        m.set(to.offset + ij.first, from.offset + ij.second, v);
    }
    act.push_back(std::move(m));
  }
  return GModule::create(corr.source_groupoid(), std::move(ranks), std::move(act));
}

// Ind_Omega on maps of target-groupoid modules: blockwise at sigma(rep).
inline GModuleMap induce_module_map(const EtaleCorrespondence& corr, const GModuleMap& f) {
  detail::CorrLayout src_lay = detail::corr_layout(corr, f.source);
  detail::CorrLayout tgt_lay = detail::corr_layout(corr, f.target);
  GModule src = induce_module(corr, f.source), tgt = induce_module(corr, f.target);
  std::vector<IntMatrix> comp;
  for (int x = 0; x < corr.source_groupoid()->object_count(); ++x) {
    IntMatrix m(tgt.fiber_rank(x), src.fiber_rank(x));
    for (std::size_t s = 0; s < src_lay.per_object[x].size(); ++s) {
      const auto& from = src_lay.per_object[x][s];
      const auto& to = tgt_lay.per_object[x][s];
      for (const auto& [ij, v] : f.component[corr.sigma(from.rep)].entries())
        m.set(to.offset + ij.first, from.offset + ij.second, v);
    }
    comp.push_back(std::move(m));
  }
  return GModuleMap{std::move(src), std::move(tgt), std::move(comp)};
}

// The kappa identification Ind_Omega(Ind_Lambda N) = Ind_{Lambda o Omega} N:
// a summand pair of representatives maps to the class of the pair, corrected
// to its K-orbit representative through the module action.
inline GModuleMap induction_composition_iso(const EtaleCorrespondence& omega,
                                            const EtaleCorrespondence& lambda,
                                            const ComposedCorrespondence& composed,
                                            const GModule& n) {
  GModule inner = induce_module(lambda, n);
  GModule src = induce_module(omega, inner);
  GModule tgt = induce_module(composed.corr, n);
  detail::CorrLayout outer_lay = detail::corr_layout(omega, inner);
  detail::CorrLayout inner_lay = detail::corr_layout(lambda, n);
  detail::CorrLayout tgt_lay = detail::corr_layout(composed.corr, n);
  std::vector<IntMatrix> comp;
  for (int x = 0; x < omega.source_groupoid()->object_count(); ++x) {
    IntMatrix m(tgt.fiber_rank(x), src.fiber_rank(x));
    for (const auto& outer : outer_lay.per_object[x]) {
      const int y = omega.sigma(outer.rep);
      for (const auto& in : inner_lay.per_object[y]) {
        const int c = composed.point_class.at({outer.rep, in.rep});
        const auto [crep, k] = composed.corr.orbit_factor(c);
        const auto& to = tgt_lay.per_object[x][tgt_lay.summand_index[crep]];
        for (const auto& [ij, v] : n.action(k).entries())
          m.set(to.offset + ij.first, outer.offset + in.offset + ij.second, v);
      }
    }
    comp.push_back(std::move(m));
  }
  return GModuleMap::create(std::move(src), std::move(tgt), std::move(comp));
}

// rho-bar pullback: each object generator goes to the sum of the orbit
// generators over it. Always defined at finite scale.
inline GModuleMap rho_bar_pullback(const EtaleCorrespondence& corr) {
  GModule triv_g = trivial_module(corr.source_groupoid());
  GModule ind = induce_module(corr, trivial_module(corr.target_groupoid()));
  std::vector<IntMatrix> comp;
  for (int x = 0; x < corr.source_groupoid()->object_count(); ++x) {
    IntMatrix c(ind.fiber_rank(x), 1);
    for (int i = 0; i < ind.fiber_rank(x); ++i) c.set(i, 0, 1);
    comp.push_back(std::move(c));
  }
  return GModuleMap::create(std::move(triv_g), std::move(ind), std::move(comp));
}

// The sigma-pushforward on coinvariants, presented on canonical generators
// of (Ind_Omega N)_G and N_H. Well-definedness is verified on the relations.
struct DeltaMap {
  Coinvariants source;
  Coinvariants target;
  IntMatrix ambient;  // total spaces: (x; rep; j) |-> (sigma(rep); j)
  IntMatrix matrix;   // on presented generators
};

inline DeltaMap delta(const EtaleCorrespondence& corr, const GModule& n) {
  GModule ind = induce_module(corr, n);
  detail::CorrLayout lay = detail::corr_layout(corr, n);
  DeltaMap out;
  out.source = coinvariants(ind);
  out.target = coinvariants(n);
  out.ambient = IntMatrix(n.total_rank(), ind.total_rank());
  for (int x = 0; x < corr.source_groupoid()->object_count(); ++x)
    for (const auto& s : lay.per_object[x])
      for (int j = 0; j < s.rank; ++j)
        out.ambient.set(n.offset(corr.sigma(s.rep)) + j, ind.offset(x) + s.offset + j, 1);
  for (int j = 0; j < out.source.relations.cols(); ++j)
    if (!out.target.presentation.is_zero_class(out.ambient.apply(out.source.relations.column(j))))
      throw InternalError("delta: sigma-pushforward does not kill the coinvariant relations");
  const int gens = out.source.group.generator_count();
  out.matrix = IntMatrix(out.target.group.generator_count(), gens);
  for (int j = 0; j < gens; ++j)
    out.matrix.set_column(j, out.target.presentation.reduce(out.ambient.apply(
                                 out.source.presentation.lifts.column(j))));
  return out;
}

// ---------------------------------------------------------------------------
// Bar resolutions as modules

// Degree n holds the (n+1)-tuple module: fibers indexed by composable
// (n+1)-tuples grouped by the range of the leading arrow, coefficients in M
// at the source of the last arrow. Arrows act by translating the leading
// arrow. Tuples with a unit leading arrow are the module generators; they
// match the bar-complex basis of the coinvariants (drop the leading arrow).
class BarResolution {
public:
  BarResolution(GroupoidPtr g, GModule m, int max_degree)
      : g_(std::move(g)), m_(std::move(m)), max_degree_(max_degree) {
    for (int n = 0; n <= max_degree; ++n) degrees_.push_back(build_degree(n));
    for (int n = 0; n <= max_degree; ++n) coinv_.push_back(bar_basis(*g_, m_, n));
  }

  int max_degree() const { return max_degree_; }
  const GModule& module(int n) const { return degrees_[n].module; }
  const GModule& coefficients() const { return m_; }
  const Nerve& nerve(int n) const { return degrees_[n].nerve; }

  // Position of (tuple, coefficient) within the fiber at its object.
  int fiber_position(int n, int tuple_idx, int m_idx) const {
    return degrees_[n].tuple_offset[tuple_idx] + m_idx;
  }
  int tuple_object(int n, int tuple_idx) const { return degrees_[n].tuple_object[tuple_idx]; }
  std::pair<int, int> fiber_element(int n, int object, int pos) const {
    return degrees_[n].fiber_elems[object][pos];
  }

  const BarBasis& coinvariant_basis(int n) const { return coinv_[n]; }

  GModuleMap boundary(int n) const {
    if (n < 1 || n > max_degree_) throw std::invalid_argument("BarResolution::boundary range");
    const Degree& from = degrees_[n];
    const Degree& to = degrees_[n - 1];
    std::vector<IntMatrix> comp;
    for (int x = 0; x < g_->object_count(); ++x)
      comp.push_back(IntMatrix(to.module.fiber_rank(x), from.module.fiber_rank(x)));
    std::vector<int> image;
    for (int t = 0; t < from.nerve.size(); ++t) {
      const std::vector<int>& tup = from.nerve.tuple(t);
      const int x = from.tuple_object[t];
      const int fr = m_.fiber_rank(g_->source(tup.back()));
      for (int i = 0; i <= n; ++i) {
        const Int sign = (i % 2 == 0) ? 1 : -1;
        if (i < n) {
          image.clear();
          for (int p = 0; p <= n; ++p) {
            if (p == i) {
              image.push_back(g_->compose(tup[p], tup[p + 1]));
              ++p;
            } else {
              image.push_back(tup[p]);
            }
          }
          const int row_t = to.nerve.index_of(image);
          for (int j = 0; j < fr; ++j)
            comp[x].add_to(to.tuple_offset[row_t] + j, from.tuple_offset[t] + j, sign);
        } else {
          image.assign(tup.begin(), tup.end() - 1);
          const int row_t = to.nerve.index_of(image);
          const IntMatrix& act = m_.action(tup.back());
          for (const auto& [ij, v] : act.entries())
            comp[x].add_to(to.tuple_offset[row_t] + ij.first, from.tuple_offset[t] + ij.second,
                           sign * v);
        }
      }
    }
    return GModuleMap{from.module, to.module, std::move(comp)};
  }

  // Augmentation P_0 -> M: (g_0; m) |-> action(g_0) m at range(g_0).
  GModuleMap augmentation() const {
    const Degree& from = degrees_[0];
    std::vector<IntMatrix> comp;
    for (int x = 0; x < g_->object_count(); ++x)
      comp.push_back(IntMatrix(m_.fiber_rank(x), from.module.fiber_rank(x)));
    for (int t = 0; t < from.nerve.size(); ++t) {
      const int a = from.nerve.tuple(t)[0];
      const IntMatrix& act = m_.action(a);
      for (const auto& [ij, v] : act.entries())
        comp[g_->range(a)].add_to(ij.first, from.tuple_offset[t] + ij.second, v);
    }
    return GModuleMap{from.module, m_, std::move(comp)};
  }

  // Generator attached to a coinvariant basis element: prepend the unit.
  // Returns (object, fiber position).
  std::pair<int, int> generator(int n, int coinv_tuple, int m_idx) const {
    const BarBasis& cb = coinv_[n];
    const std::vector<int>& tail = cb.nerve.tuple(coinv_tuple);
    std::vector<int> full;
    int x;
    if (n == 0) {
      x = tail[0];
      full = {g_->unit(x)};
    } else {
      x = g_->range(tail[0]);
      full.push_back(g_->unit(x));
      full.insert(full.end(), tail.begin(), tail.end());
    }
    const int t = degrees_[n].nerve.index_of(full);
    return {x, fiber_position(n, t, m_idx)};
  }

  // Coinvariant class of a fiber element: drop the leading arrow.
  int coinvariant_index(int n, int tuple_idx, int m_idx) const {
    const std::vector<int>& tup = degrees_[n].nerve.tuple(tuple_idx);
    const BarBasis& cb = coinv_[n];
    if (n == 0) return cb.index(cb.nerve.index_of({g_->source(tup[0])}), m_idx);
    std::vector<int> tail(tup.begin() + 1, tup.end());
    return cb.index(cb.nerve.index_of(tail), m_idx);
  }

private:
  struct Degree {
    Nerve nerve;  // (n+1)-tuples
    GModule module;
    std::vector<int> tuple_object;
    std::vector<int> tuple_offset;
    std::vector<std::vector<std::pair<int, int>>> fiber_elems;  // per object
  };

  Degree build_degree(int n) const {
    Nerve nerve = Nerve::compute(*g_, n + 1);
    std::vector<int> tuple_object(nerve.size()), tuple_offset(nerve.size());
    std::vector<int> ranks(g_->object_count(), 0);
    std::vector<std::vector<std::pair<int, int>>> fiber_elems(g_->object_count());
    for (int t = 0; t < nerve.size(); ++t) {
      const std::vector<int>& tup = nerve.tuple(t);
      const int x = g_->range(tup[0]);
      const int fr = m_.fiber_rank(g_->source(tup.back()));
      tuple_object[t] = x;
      tuple_offset[t] = ranks[x];
      ranks[x] += fr;
      for (int j = 0; j < fr; ++j) fiber_elems[x].push_back({t, j});
    }
    std::vector<IntMatrix> act;
    for (int a = 0; a < g_->arrow_count(); ++a) {
      const int x = g_->source(a), y = g_->range(a);
      IntMatrix am(ranks[y], ranks[x]);
      for (const auto& [t, j] : fiber_elems[x]) {
        std::vector<int> moved = nerve.tuple(t);
        moved[0] = g_->compose(a, moved[0]);
        am.set(tuple_offset[nerve.index_of(moved)] + j, tuple_offset[t] + j, 1);
      }
      act.push_back(std::move(am));
    }
    return Degree{std::move(nerve), GModule::create(g_, std::move(ranks), std::move(act)),
                  std::move(tuple_object), std::move(tuple_offset), std::move(fiber_elems)};
  }

  GroupoidPtr g_;
  GModule m_;
  int max_degree_;
  std::vector<Degree> degrees_;
  std::vector<BarBasis> coinv_;
};

// ---------------------------------------------------------------------------
// The coinvariant pipeline and chain lifting

struct CorrespondenceChainMap {
  IntChainComplex source;         // bar complex of (G, M)
  IntChainComplex target;         // bar complex of (H, N)
  std::vector<IntMatrix> degree;  // chain matrices source_n -> target_n
};

namespace detail {

// (delta (x) id) composed with the coinvariants of a resolution-level lift:
// evaluate the lift on unit-led generators, then send each Ind summand entry
// to the class of its Q-basis element (drop the leading target arrow).
inline std::vector<IntMatrix> coinvariant_matrices(const EtaleCorrespondence& corr,
                                                   const BarResolution& p,
                                                   const BarResolution& q,
                                                   const std::vector<GModuleMap>& lift) {
  std::vector<IntMatrix> out;
  for (int d = 0; d < static_cast<int>(lift.size()); ++d) {
    CorrLayout lay = corr_layout(corr, q.module(d));
    const BarBasis& cbp = p.coinvariant_basis(d);
    const BarBasis& cbq = q.coinvariant_basis(d);
    IntMatrix c(cbq.rank, cbp.rank);
    for (int t = 0; t < cbp.nerve.size(); ++t) {
      const int fr = p.coefficients().fiber_rank(cbp.coeff_object[t]);
      for (int j = 0; j < fr; ++j) {
        const auto [x, pos] = p.generator(d, t, j);
        const std::vector<Int> v = lift[d].component[x].column(pos);
        const int col = cbp.index(t, j);
        for (const auto& s : lay.per_object[x]) {
          const int y = corr.sigma(s.rep);
          for (int k = 0; k < s.rank; ++k) {
            const Int& val = v[s.offset + k];
            if (val == 0) continue;
            const auto [tuple_idx, m_idx] = q.fiber_element(d, y, k);
            c.add_to(q.coinvariant_index(d, tuple_idx, m_idx), col, val);
          }
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

// Lift f : M -> Ind_Omega N through the bar resolutions by solving on
// unit-led generators and extending by translation. Solvability is
// guaranteed by exactness of the induced resolution; a failed solve means
// corrupted inputs, never a legitimate state.
inline std::vector<GModuleMap> lift_chain_map(const EtaleCorrespondence& corr,
                                              const BarResolution& p, const BarResolution& q,
                                              const GModuleMap& f) {
  const FiniteGroupoid& g = *corr.source_groupoid();
  const GModule& m = p.coefficients();
  const int max_degree = std::min(p.max_degree(), q.max_degree());

  std::vector<GModule> ind_q;
  for (int d = 0; d <= max_degree; ++d) ind_q.push_back(induce_module(corr, q.module(d)));
  GModuleMap ind_aug = induce_module_map(corr, q.augmentation());
  if (!f.target.same_shape(ind_aug.target))
    throw std::invalid_argument("lift_chain_map: f must land in Ind_Omega N");
  if (!f.source.same_shape(m))
    throw std::invalid_argument("lift_chain_map: f must start at the resolved module");

  std::vector<GModuleMap> lift;
  for (int d = 0; d <= max_degree; ++d) {
    const std::vector<IntMatrix>& eq =
        d == 0 ? ind_aug.component : induce_module_map(corr, q.boundary(d)).component;
    std::vector<SmithSolver> solvers;
    solvers.reserve(g.object_count());
    for (int x = 0; x < g.object_count(); ++x) solvers.emplace_back(eq[x]);

    GModuleMap p_lower = d == 0 ? p.augmentation() : p.boundary(d);
    const BarBasis& cb = p.coinvariant_basis(d);
    std::map<std::pair<int, int>, std::vector<Int>> gen_value;
    for (int t = 0; t < cb.nerve.size(); ++t) {
      const int fr = m.fiber_rank(cb.coeff_object[t]);
      for (int j = 0; j < fr; ++j) {
        const auto [x, pos] = p.generator(d, t, j);
        std::vector<Int> rhs;
        if (d == 0) {
          // augmentation sends the unit-led generator to its coefficient
          rhs = f.component[x].apply(p_lower.component[x].column(pos));
        } else {
          rhs = lift[d - 1].component[x].apply(p_lower.component[x].column(pos));
        }
        auto z = solvers[x].solve(rhs);
        if (!z) throw InternalError("lift failed: induced resolution is not exact here (bug)");
        gen_value[{x, pos}] = std::move(*z);
      }
    }
    std::vector<IntMatrix> comp;
    for (int x = 0; x < g.object_count(); ++x)
      comp.push_back(IntMatrix(ind_q[d].fiber_rank(x), p.module(d).fiber_rank(x)));
    for (int t = 0; t < p.nerve(d).size(); ++t) {
      const std::vector<int>& tup = p.nerve(d).tuple(t);
      const int y = p.tuple_object(d, t);
      const int lead = tup[0];
      const int x = g.source(lead);
      const int fr = m.fiber_rank(g.source(tup.back()));
      std::vector<int> unitled = tup;
      unitled[0] = g.unit(x);
      const int gen_tuple = p.nerve(d).index_of(unitled);
      for (int j = 0; j < fr; ++j) {
        const std::vector<Int>& zval = gen_value.at({x, p.fiber_position(d, gen_tuple, j)});
        const std::vector<Int> translated = ind_q[d].action(lead).apply(zval);
        const int pos = p.fiber_position(d, t, j);
        for (int r = 0; r < static_cast<int>(translated.size()); ++r)
          if (translated[r] != 0) comp[y].set(r, pos, translated[r]);
      }
    }
    lift.push_back(GModuleMap{p.module(d), ind_q[d], std::move(comp)});
  }
  return lift;
}

// Wrap coinvariant-level chain matrices, verifying shapes and the chain
// property against the two bar complexes.
inline CorrespondenceChainMap chain_map_from_matrices(const FiniteGroupoid& g,
                                                      const FiniteGroupoid& h, const GModule& m,
                                                      const GModule& n,
                                                      std::vector<IntMatrix> matrices) {
  if (matrices.empty()) throw std::invalid_argument("chain_map_from_matrices: no degrees");
  const int top = static_cast<int>(matrices.size()) - 1;
  CorrespondenceChainMap out{bar_complex(g, m, top), bar_complex(h, n, top),
                             std::move(matrices)};
  for (int d = 0; d <= top; ++d)
    if (out.degree[d].rows() != out.target.rank(d) || out.degree[d].cols() != out.source.rank(d))
      throw std::invalid_argument("chain_map_from_matrices: wrong shape at degree " +
                                  std::to_string(d));
  for (int d = 1; d <= top; ++d)
    if (out.degree[d - 1] * out.source.boundary(d) != out.target.boundary(d) * out.degree[d])
      throw std::invalid_argument("chain_map_from_matrices: not a chain map at degree " +
                                  std::to_string(d));
  return out;
}

// Full generic pipeline: solver lift then coinvariants.
inline CorrespondenceChainMap correspondence_chain_map(const EtaleCorrespondence& corr,
                                                       const GModule& m, const GModule& n,
                                                       const GModuleMap& f, int max_degree) {
  BarResolution p(corr.source_groupoid(), m, max_degree);
  BarResolution q(corr.target_groupoid(), n, max_degree);
  std::vector<GModuleMap> lift = lift_chain_map(corr, p, q, f);
  std::vector<IntMatrix> mats = detail::coinvariant_matrices(corr, p, q, lift);
  return chain_map_from_matrices(*corr.source_groupoid(), *corr.target_groupoid(), m, n,
                                 std::move(mats));
}

inline SubquotientMap induced_homology_map(const CorrespondenceChainMap& c, int degree) {
  if (degree < 0 || degree >= c.source.max_degree())
    throw std::invalid_argument("induced_homology_map: degree out of lifted range");
  return induced_subquotient_map(c.degree[degree], homology_groups(c.source, degree),
                                 homology_groups(c.target, degree));
}

// Induced map on H_degree with coefficients, via the generic solver lift.
inline SubquotientMap homology_map(const EtaleCorrespondence& corr, const GModule& m,
                                   const GModule& n, const GModuleMap& f, int degree) {
  return induced_homology_map(correspondence_chain_map(corr, m, n, f, degree + 1), degree);
}

// Coefficient-free map H_degree(G) -> H_degree(H): trivial coefficients and
// the rho-bar pullback.
inline SubquotientMap homology_map(const EtaleCorrespondence& corr, int degree) {
  GModule m = trivial_module(corr.source_groupoid());
  GModule n = trivial_module(corr.target_groupoid());
  return homology_map(corr, m, n, rho_bar_pullback(corr), degree);
}

// ---------------------------------------------------------------------------
// Correspondences from homomorphisms, with explicit chain maps

struct GroupoidHom {
  GroupoidPtr source, target;
  std::vector<int> object_map;
  std::vector<int> arrow_map;

  static GroupoidHom create(GroupoidPtr source, GroupoidPtr target, std::vector<int> object_map,
                            std::vector<int> arrow_map) {
    const FiniteGroupoid& g = *source;
    const FiniteGroupoid& h = *target;
    if (static_cast<int>(object_map.size()) != g.object_count() ||
        static_cast<int>(arrow_map.size()) != g.arrow_count())
      throw ValidationError("GroupoidHom: map sizes do not match");
    for (int a = 0; a < g.arrow_count(); ++a)
      if (h.source(arrow_map[a]) != object_map[g.source(a)] ||
          h.range(arrow_map[a]) != object_map[g.range(a)])
        throw ValidationError("GroupoidHom: anchors not preserved at '" + g.arrow_name(a) + "'");
    for (int x = 0; x < g.object_count(); ++x)
      if (arrow_map[g.unit(x)] != h.unit(object_map[x]))
        throw ValidationError("GroupoidHom: units not preserved at '" + g.object_name(x) + "'");
    for (int a = 0; a < g.arrow_count(); ++a)
      for (int b = 0; b < g.arrow_count(); ++b)
        if (g.composable(a, b) &&
            arrow_map[g.compose(a, b)] != h.compose(arrow_map[a], arrow_map[b]))
          throw ValidationError("GroupoidHom: not a functor at ('" + g.arrow_name(a) + "','" +
                                g.arrow_name(b) + "')");
    return GroupoidHom{std::move(source), std::move(target), std::move(object_map),
                       std::move(arrow_map)};
  }
};

inline GroupoidHom identity_hom(GroupoidPtr g) {
  std::vector<int> om(g->object_count()), am(g->arrow_count());
  std::iota(om.begin(), om.end(), 0);
  std::iota(am.begin(), am.end(), 0);
  return GroupoidHom::create(g, g, std::move(om), std::move(am));
}

// Everything to the one-point groupoid; always a functor.
inline GroupoidHom hom_to_point(GroupoidPtr g) {
  std::vector<int> om(g->object_count(), 0), am(g->arrow_count(), 0);
  return GroupoidHom::create(std::move(g), trivial_groupoid(), std::move(om), std::move(am));
}

inline GroupoidHom subgroupoid_hom(const SubgroupoidInclusion& inc) {
  return GroupoidHom::create(inc.child, inc.parent, inc.object_map, inc.arrow_map);
}

// Omega_phi: points are pairs (x, h-arrow) with phi(x) = range(h). Point
// order: x ascending, then the arrow.
inline EtaleCorrespondence correspondence_from_homomorphism(const GroupoidHom& phi) {
  const FiniteGroupoid& g = *phi.source;
  const FiniteGroupoid& h = *phi.target;
  CorrespondenceData d;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < g.object_count(); ++x)
    for (int b = 0; b < h.arrow_count(); ++b) {
      if (h.range(b) != phi.object_map[x]) continue;
      index[{x, b}] = static_cast<int>(d.point_names.size());
      d.point_names.push_back("(" + g.object_name(x) + "," + h.arrow_name(b) + ")");
      d.rho.push_back(x);
      d.sigma.push_back(h.source(b));
    }
  const int P = static_cast<int>(d.point_names.size());
  d.left.assign(g.arrow_count() * P, -1);
  d.right.assign(P * h.arrow_count(), -1);
  for (const auto& [key, w] : index) {
    const auto [x, b] = key;
    for (int a : g.arrows_with_source(x))
      d.left[a * P + w] = index.at({g.range(a), h.compose(phi.arrow_map[a], b)});
    for (int b2 = 0; b2 < h.arrow_count(); ++b2)
      if (h.composable(b, b2))
        d.right[w * h.arrow_count() + b2] = index.at({x, h.compose(b, b2)});
  }
  return EtaleCorrespondence::create(phi.source, phi.target, std::move(d));
}

// The coinvariant-level pushforward matrices Z[G^n] -> Z[H^n] of a
// homomorphism (each column has exactly one 1).
inline std::vector<IntMatrix> hom_pushforward_matrices(const GroupoidHom& phi, int max_degree) {
  const FiniteGroupoid& g = *phi.source;
  const FiniteGroupoid& h = *phi.target;
  std::vector<IntMatrix> out;
  for (int n = 0; n <= max_degree; ++n) {
    Nerve from = Nerve::compute(g, n), to = Nerve::compute(h, n);
    IntMatrix m(to.size(), from.size());
    std::vector<int> image;
    for (int t = 0; t < from.size(); ++t) {
      image.clear();
      if (n == 0)
        image.push_back(phi.object_map[from.tuple(t)[0]]);
      else
        for (int a : from.tuple(t)) image.push_back(phi.arrow_map[a]);
      m.add_to(to.index_of(image), t, 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

// The explicit resolution-level lift of a homomorphism correspondence:
// apply phi componentwise and correct the leading arrow to the orbit
// representative of the pair point.
inline std::vector<GModuleMap> explicit_hom_lift(const GroupoidHom& phi,
                                                 const EtaleCorrespondence& corr,
                                                 const BarResolution& p, const BarResolution& q) {
  const FiniteGroupoid& g = *phi.source;
  const FiniteGroupoid& h = *phi.target;
  std::map<std::pair<int, int>, int> point_at;  // (x, h-arrow) -> point, ctor order
  {
    int w = 0;
    for (int x = 0; x < g.object_count(); ++x)
      for (int b = 0; b < h.arrow_count(); ++b)
        if (h.range(b) == phi.object_map[x]) point_at[{x, b}] = w++;
  }
  std::vector<GModuleMap> lift;
  for (int n = 0; n <= std::min(p.max_degree(), q.max_degree()); ++n) {
    GModule ind = induce_module(corr, q.module(n));
    detail::CorrLayout lay = detail::corr_layout(corr, q.module(n));
    std::vector<IntMatrix> comp;
    for (int x = 0; x < g.object_count(); ++x)
      comp.push_back(IntMatrix(ind.fiber_rank(x), p.module(n).fiber_rank(x)));
    std::vector<int> image;
    for (int t = 0; t < p.nerve(n).size(); ++t) {
      const std::vector<int>& tup = p.nerve(n).tuple(t);
      const int x = p.tuple_object(n, t);
      const int w = point_at.at({x, phi.arrow_map[tup[0]]});
      const auto [rep, b] = corr.orbit_factor(w);
      image.clear();
      image.push_back(b);
      for (std::size_t i = 1; i < tup.size(); ++i) image.push_back(phi.arrow_map[tup[i]]);
      const int qpos = q.fiber_position(n, q.nerve(n).index_of(image), 0);
      const auto& s = lay.per_object[x][lay.summand_index[rep]];
      comp[x].set(s.offset + qpos, p.fiber_position(n, t, 0), 1);
    }
    lift.push_back(GModuleMap::create(p.module(n), std::move(ind), std::move(comp)));
  }
  return lift;
}

// ---------------------------------------------------------------------------
// Correspondences from actions, with explicit chain maps

struct ActionCorrespondence {
  GSet space;                            // the acted-on G-set
  GroupoidPtr transformation_groupoid;   // H = G |x X
  EtaleCorrespondence corr;              // G -> H on the arrow space of H
  std::vector<std::pair<int, int>> arrow_pairs;  // H-arrow -> (G-arrow, point)
  std::map<std::pair<int, int>, int> arrow_index;
};

inline ActionCorrespondence correspondence_from_action(const GSet& x) {
  const FiniteGroupoid& g = *x.groupoid();
  GroupoidPtr h = action_groupoid(x);
  // Recover the (arrow, point) indexing used by action_groupoid (map order).
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.arrow_count(); ++a)
    for (int p = 0; p < x.point_count(); ++p)
      if (x.defined(a, p)) {
        index[{a, p}] = static_cast<int>(pairs.size());
        pairs.push_back({a, p});
      }
  CorrespondenceData d;
  d.point_names = h->data().arrow_names;
  for (auto [a, p] : pairs) {
    d.rho.push_back(g.range(a));
    d.sigma.push_back(p);  // H-objects are the points of X
  }
  const int P = static_cast<int>(pairs.size());
  d.left.assign(g.arrow_count() * P, -1);
  d.right.assign(P * h->arrow_count(), -1);
  for (int w = 0; w < P; ++w) {
    auto [a, p] = pairs[w];
    for (int a2 : g.arrows_with_source(g.range(a)))
      d.left[a2 * P + w] = index.at({g.compose(a2, a), p});
    for (int b = 0; b < h->arrow_count(); ++b)
      if (h->composable(w, b)) d.right[w * h->arrow_count() + b] = h->compose(w, b);
  }
  EtaleCorrespondence corr = EtaleCorrespondence::create(x.groupoid(), h, std::move(d));
  return ActionCorrespondence{x, h, std::move(corr), std::move(pairs), std::move(index)};
}

// The coinvariant-level pullback matrices Z[G^n] -> Z[H^n]: sum over all
// lifts of a tuple through the anchor.
inline std::vector<IntMatrix> action_pullback_matrices(const ActionCorrespondence& ac,
                                                       int max_degree) {
  const FiniteGroupoid& g = *ac.space.groupoid();
  const FiniteGroupoid& h = *ac.transformation_groupoid;
  const GSet& xs = ac.space;
  std::vector<IntMatrix> out;
  for (int n = 0; n <= max_degree; ++n) {
    Nerve from = Nerve::compute(g, n), to = Nerve::compute(h, n);
    IntMatrix m(to.size(), from.size());
    for (int t = 0; t < from.size(); ++t) {
      const std::vector<int>& tup = from.tuple(t);
      if (n == 0) {
        for (int p = 0; p < xs.point_count(); ++p)
          if (xs.anchor(p) == tup[0]) m.add_to(to.index_of({p}), t, 1);
        continue;
      }
      for (int pn = 0; pn < xs.point_count(); ++pn) {
        if (xs.anchor(pn) != g.source(tup[n - 1])) continue;
        std::vector<int> image(n);
        int pt = pn;
        for (int i = n - 1; i >= 0; --i) {
          image[i] = ac.arrow_index.at({tup[i], pt});
          pt = xs.act(tup[i], pt);
        }
        m.add_to(to.index_of(image), t, 1);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// The explicit resolution-level lift for an action correspondence: sum the
// tuple lifts, then correct the leading arrow to its orbit representative.
inline std::vector<GModuleMap> explicit_action_lift(const ActionCorrespondence& ac,
                                                    const BarResolution& p,
                                                    const BarResolution& q) {
  const FiniteGroupoid& g = *ac.space.groupoid();
  const GSet& xs = ac.space;
  const EtaleCorrespondence& corr = ac.corr;
  std::vector<GModuleMap> lift;
  for (int n = 0; n <= std::min(p.max_degree(), q.max_degree()); ++n) {
    GModule ind = induce_module(corr, q.module(n));
    detail::CorrLayout lay = detail::corr_layout(corr, q.module(n));
    std::vector<IntMatrix> comp;
    for (int x = 0; x < g.object_count(); ++x)
      comp.push_back(IntMatrix(ind.fiber_rank(x), p.module(n).fiber_rank(x)));
    for (int t = 0; t < p.nerve(n).size(); ++t) {
      const std::vector<int>& tup = p.nerve(n).tuple(t);  // n+1 arrows
      const int x = p.tuple_object(n, t);
      for (int pn = 0; pn < xs.point_count(); ++pn) {
        if (xs.anchor(pn) != g.source(tup.back())) continue;
        std::vector<int> u(tup.size());
        int pt = pn;
        for (int i = static_cast<int>(tup.size()) - 1; i >= 0; --i) {
          u[i] = ac.arrow_index.at({tup[i], pt});
          pt = xs.act(tup[i], pt);
        }
        // w = leading H-arrow as a point of Omega; correct to the orbit rep
        const auto [rep, b] = corr.orbit_factor(u[0]);
        std::vector<int> image;
        image.push_back(b);
        image.insert(image.end(), u.begin() + 1, u.end());
        const int qpos = q.fiber_position(n, q.nerve(n).index_of(image), 0);
        const auto& s = lay.per_object[x][lay.summand_index[rep]];
        comp[x].add_to(s.offset + qpos, p.fiber_position(n, t, 0), 1);
      }
    }
    lift.push_back(GModuleMap::create(p.module(n), std::move(ind), std::move(comp)));
  }
  return lift;
}

// Coinvariant matrices of an arbitrary resolution-level lift (shared by the
// explicit routes and the tests comparing them with the solver route).
inline std::vector<IntMatrix> coinvariant_matrices_of_lift(const EtaleCorrespondence& corr,
                                                           const BarResolution& p,
                                                           const BarResolution& q,
                                                           const std::vector<GModuleMap>& lift) {
  return detail::coinvariant_matrices(corr, p, q, lift);
}

}  // namespace gpdhom

#endif  // GPDHOM_CORRESPONDENCE_HPP
