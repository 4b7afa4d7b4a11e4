#ifndef GPDHOM_ABELIAN_HPP
#define GPDHOM_ABELIAN_HPP

// Finitely generated abelian groups in invariant-factor form, quotient
// presentations of Z^k, and homology subquotients ker/im with canonical
// generators. This is where Smith normal form turns into group theory.

#include <optional>
#include <string>
#include <vector>

#include "gpdhom/smith.hpp"

namespace gpdhom {

// Canonical form: torsion factors d_i >= 2 with d_i | d_{i+1}, plus a free rank.
struct FGAbelianGroup {
  std::vector<Int> torsion;
  int free_rank = 0;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  // Presented generators: torsion generators first (in invariant-factor
  // order), then free generators. Every matrix on presented generators in
  // this library uses this ordering.
  int generator_count() const { return static_cast<int>(torsion.size()) + free_rank; }

  // Modulus of generator i: the invariant factor for torsion, 0 for free.
  Int modulus(int i) const {
    return i < static_cast<int>(torsion.size()) ? torsion[i] : Int(0);
  }

  bool operator==(const FGAbelianGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const FGAbelianGroup& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_trivial()) return "0";
    std::string s;
    auto append = [&s](const std::string& part) {
      if (!s.empty()) s += " + ";
      s += part;
    };
    if (free_rank == 1) append("Z");
    if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const Int& d : torsion) append("Z/" + d.str());
    return s;
  }

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup free(int rank) { return {{}, rank}; }
};

// Recanonicalised direct sum (invariant factors must be re-chained).
FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

// Presentation of Z^k / column-span(relations).
struct QuotientPresentation {
  int ambient_rank = 0;  // k
  FGAbelianGroup group;
  // projection: (generators x k). Class of v in presented coordinates is
  // reduce(v): torsion rows taken mod their invariant factor.
  IntMatrix projection;
  // lifts: (k x generators), a representative of each presented generator.
  IntMatrix lifts;

  std::vector<Int> reduce(const std::vector<Int>& v) const {
    std::vector<Int> p = projection.apply(v);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      const Int d = group.modulus(i);
      if (d != 0) {
        p[i] %= d;
        if (p[i] < 0) p[i] += d;
      }
    }
    return p;
  }

  bool is_zero_class(const std::vector<Int>& v) const {
    for (const Int& x : reduce(v))
      if (x != 0) return false;
    return true;
  }
};

inline QuotientPresentation quotient_presentation(int ambient_rank, const IntMatrix& relations) {
  if (relations.rows() != ambient_rank)
    throw std::invalid_argument("quotient_presentation: relation rows != ambient rank");
  SmithDecomposition dec = smith_normal_form(relations);
  QuotientPresentation out;
  out.ambient_rank = ambient_rank;
  const int diag = std::min(relations.rows(), relations.cols());
  std::vector<int> kept;
  for (int i = 0; i < ambient_rank; ++i) {
    Int d = i < diag ? dec.s.at(i, i) : Int(0);
    if (d == 1) continue;  // trivial coordinate
    kept.push_back(i);
    if (d != 0)
      out.group.torsion.push_back(d);
    else
      ++out.group.free_rank;
  }
  out.projection = IntMatrix(static_cast<int>(kept.size()), ambient_rank);
  out.lifts = IntMatrix(ambient_rank, static_cast<int>(kept.size()));
  for (int g = 0; g < static_cast<int>(kept.size()); ++g) {
    const int i = kept[g];
    for (int j = 0; j < ambient_rank; ++j) {
      out.projection.set(g, j, dec.u.at(i, j));
      out.lifts.set(j, g, dec.u_inv.at(j, i));
    }
  }
  return out;
}

inline FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  const int torsion_count = static_cast<int>(a.torsion.size() + b.torsion.size());
  IntMatrix rel(torsion_count + a.free_rank + b.free_rank, torsion_count);
  int i = 0;
  for (const Int& d : a.torsion) rel.set(i, i, d), ++i;
  for (const Int& d : b.torsion) rel.set(i, i, d), ++i;
  return quotient_presentation(rel.rows(), rel).group;
}

// A homology group ker(d_out)/im(d_in) living inside an ambient free group.
class SubquotientGroup {
public:
  // Requires d_out * d_in == 0 (a malformed complex is a caller bug).
  static SubquotientGroup homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
      throw std::invalid_argument("homology_of_pair: non-composable dimensions " +
                                  d_out.shape_string() + " after " + d_in.shape_string());
    if (!(d_out * d_in).is_zero())
      throw InternalError("homology_of_pair: d_out*d_in != 0, malformed complex");
    SubquotientGroup g(d_out, d_in);
    return g;
  }

  int ambient_rank() const { return ambient_rank_; }
  const IntMatrix& cycle_basis() const { return cycle_solver_.matrix(); }
  const IntMatrix& boundary_basis() const { return boundaries_; }
  const FGAbelianGroup& presentation() const { return quo_.group; }
  const IntMatrix& generator_lifts() const { return generator_lifts_; }

  // Presented coordinates of an ambient cycle; nullopt if not a cycle.
  std::optional<std::vector<Int>> try_class_of(const std::vector<Int>& ambient) const {
    auto coords = cycle_solver_.solve(ambient);
    if (!coords) return std::nullopt;
    return quo_.reduce(*coords);
  }

  std::vector<Int> class_of(const std::vector<Int>& ambient) const {
    auto c = try_class_of(ambient);
    if (!c) throw std::invalid_argument("SubquotientGroup::class_of: vector is not a cycle");
    return *c;
  }

  // Two subquotients match as presented groups (used for map composition).
  bool same_presentation(const SubquotientGroup& o) const {
    return presentation() == o.presentation() && ambient_rank_ == o.ambient_rank_;
  }

private:
  SubquotientGroup(const IntMatrix& d_out, const IntMatrix& d_in)
      : ambient_rank_(d_out.cols()),
        boundaries_(d_in),
        cycle_solver_(SmithSolver(d_out).kernel_basis()) {
    const int k = cycle_solver_.matrix().cols();
    // Boundaries in cycle coordinates. Solvability is guaranteed: the cycle
    // basis is a primitive basis of ker(d_out) and boundaries are cycles.
    IntMatrix t(k, d_in.cols());
    for (int j = 0; j < d_in.cols(); ++j) {
      auto c = cycle_solver_.solve(d_in.column(j));
      if (!c) throw InternalError("homology_of_pair: boundary column is not a cycle");
      t.set_column(j, *c);
    }
    quo_ = quotient_presentation(k, t);
    generator_lifts_ = cycle_solver_.matrix() * quo_.lifts;
  }

  int ambient_rank_;
  IntMatrix boundaries_;
  SmithSolver cycle_solver_;  // factorisation of the cycle basis
  QuotientPresentation quo_;
  IntMatrix generator_lifts_;
};

// Map between homology subquotients, presented on canonical generators.
// matrix is (target generators x source generators) with torsion rows
// reduced into [0, d).
struct SubquotientMap {
  SubquotientGroup source;
  SubquotientGroup target;
  IntMatrix matrix;

  // Reduce an arbitrary generator matrix modulo the target relations.
  static IntMatrix reduce_matrix(const FGAbelianGroup& target_group, IntMatrix m) {
    IntMatrix out(m.rows(), m.cols());
    for (const auto& [ij, v] : m.entries()) {
      Int x = v;
      const Int d = target_group.modulus(ij.first);
      if (d != 0) {
        x %= d;
        if (x < 0) x += d;
      }
      out.set(ij.first, ij.second, x);
    }
    return out;
  }

  bool is_identity() const {
    return source.same_presentation(target) &&
           matrix == reduce_matrix(target.presentation(),
                                   IntMatrix::identity(matrix.rows()));
  }

  bool is_zero() const { return matrix.is_zero(); }

  // Surjectivity onto a group isomorphic to the source forces bijectivity
  // (finitely generated abelian groups are Hopfian).
  bool is_isomorphism() const {
    if (source.presentation() != target.presentation()) return false;
    const FGAbelianGroup& tg = target.presentation();
    IntMatrix rel(tg.generator_count(), static_cast<int>(tg.torsion.size()));
    for (int i = 0; i < static_cast<int>(tg.torsion.size()); ++i) rel.set(i, i, tg.torsion[i]);
    SmithDecomposition dec = smith_normal_form(IntMatrix::hcat(matrix, rel));
    if (dec.rank != tg.generator_count()) return false;
    for (const Int& d : dec.diagonal())
      if (d != 0 && d != 1) return false;
    return true;
  }
};

// The map induced on homology by a chain-level map f between the ambient
// groups. Checked: f must carry cycles to cycles and boundaries to
// boundaries, otherwise it does not define a map of subquotients.
inline SubquotientMap induced_subquotient_map(const IntMatrix& f, const SubquotientGroup& src,
                                              const SubquotientGroup& tgt) {
  if (f.cols() != src.ambient_rank() || f.rows() != tgt.ambient_rank())
    throw std::invalid_argument("induced_subquotient_map: shape " + f.shape_string() +
                                " does not map ambient " + std::to_string(src.ambient_rank()) +
                                " to ambient " + std::to_string(tgt.ambient_rank()));
  const IntMatrix mapped_cycles = f * src.cycle_basis();
  for (int j = 0; j < mapped_cycles.cols(); ++j)
    if (!tgt.try_class_of(mapped_cycles.column(j)))
      throw std::invalid_argument("not a cycle map: image of a cycle is not a cycle");
  const IntMatrix mapped_boundaries = f * src.boundary_basis();
  for (int j = 0; j < mapped_boundaries.cols(); ++j) {
    auto cls = tgt.try_class_of(mapped_boundaries.column(j));
    if (!cls) throw std::invalid_argument("not a cycle map: image of a boundary is not a cycle");
    for (const Int& x : *cls)
      if (x != 0)
        throw std::invalid_argument("not a cycle map: image of a boundary is not a boundary");
  }
  const IntMatrix mapped_gens = f * src.generator_lifts();
  IntMatrix m(tgt.presentation().generator_count(), src.presentation().generator_count());
  for (int j = 0; j < mapped_gens.cols(); ++j) m.set_column(j, tgt.class_of(mapped_gens.column(j)));
  return SubquotientMap{src, tgt, std::move(m)};
}

// Composition on presented generators, reduced modulo the outer target.
inline SubquotientMap compose(const SubquotientMap& g, const SubquotientMap& f) {
  if (!g.source.same_presentation(f.target))
    throw std::invalid_argument("SubquotientMap compose: middle groups do not match");
  return SubquotientMap{f.source, g.target,
                        SubquotientMap::reduce_matrix(g.target.presentation(),
                                                      g.matrix * f.matrix)};
}

}  // namespace gpdhom

#endif  // GPDHOM_ABELIAN_HPP
