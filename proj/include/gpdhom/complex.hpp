#ifndef GPDHOM_COMPLEX_HPP
#define GPDHOM_COMPLEX_HPP

// Chain complexes of free abelian groups and the two standard complexes of a
// finite groupoid: the coinvariant (Matui) complex Z[G^n] and the bar complex
// with coefficients Z[G^n] (x) M. Homology is computed per degree through
// Smith normal form.

#include <string>
#include <vector>

#include "gpdhom/abelian.hpp"
#include "gpdhom/gmodule.hpp"
#include "gpdhom/nerve.hpp"

namespace gpdhom {

class IntChainComplex {
public:
  // boundaries[k] is boundary_{k+1} : C_{k+1} -> C_k; checked to compose to 0.
  static IntChainComplex create(std::vector<int> ranks, std::vector<IntMatrix> boundaries) {
    if (ranks.empty()) throw std::invalid_argument("IntChainComplex: need at least degree 0");
    if (boundaries.size() + 1 != ranks.size())
      throw std::invalid_argument("IntChainComplex: need one boundary per positive degree");
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
      if (boundaries[k].rows() != ranks[k] || boundaries[k].cols() != ranks[k + 1])
        throw std::invalid_argument("IntChainComplex: boundary " + std::to_string(k + 1) +
                                    " has shape " + boundaries[k].shape_string());
      if (k > 0 && !(boundaries[k - 1] * boundaries[k]).is_zero())
        throw InternalError("IntChainComplex: boundary(" + std::to_string(k) + ")*boundary(" +
                            std::to_string(k + 1) + ") != 0, malformed complex");
    }
    IntChainComplex c;
    c.ranks_ = std::move(ranks);
    c.boundaries_ = std::move(boundaries);
    return c;
  }

  int max_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  int rank(int n) const { return ranks_[n]; }

  const IntMatrix& boundary(int n) const {
    if (n < 1 || n > max_degree())
      throw std::invalid_argument("IntChainComplex::boundary: degree out of range");
    return boundaries_[n - 1];
  }

private:
  std::vector<int> ranks_;
  std::vector<IntMatrix> boundaries_;
};

// Basis bookkeeping for degree n of the bar complex with coefficients:
// basis elements are (composable tuple, coefficient index), coefficients
// taken in the fiber at the source of the last arrow (at the object itself
// in degree 0), ordered by tuple then coefficient.
struct BarBasis {
  Nerve nerve;
  std::vector<int> coeff_object;  // per tuple
  std::vector<int> offset;        // per tuple
  int rank = 0;

  int index(int tuple_idx, int m_idx) const { return offset[tuple_idx] + m_idx; }
};

inline BarBasis bar_basis(const FiniteGroupoid& g, const GModule& m, int degree) {
  BarBasis b{Nerve::compute(g, degree), {}, {}, 0};
  b.coeff_object.reserve(b.nerve.size());
  b.offset.reserve(b.nerve.size());
  for (int i = 0; i < b.nerve.size(); ++i) {
    const std::vector<int>& t = b.nerve.tuple(i);
    const int x = degree == 0 ? t[0] : g.source(t.back());
    b.coeff_object.push_back(x);
    b.offset.push_back(b.rank);
    b.rank += m.fiber_rank(x);
  }
  return b;
}

namespace detail {

// Bar boundary with coefficients: the first n faces merge arrows (dropping
// g_1 at i = 0), the last face drops g_n and pushes the coefficient through
// its action. Degree 1 specialises to m |-> m at source minus g.m at range.
inline IntMatrix bar_boundary(const FiniteGroupoid& g, const GModule& m, int n,
                              const BarBasis& from, const BarBasis& to) {
  IntMatrix out(to.rank, from.rank);
  std::vector<int> image;
  for (int col_t = 0; col_t < from.nerve.size(); ++col_t) {
    const std::vector<int>& t = from.nerve.tuple(col_t);
    const int fr = m.fiber_rank(from.coeff_object[col_t]);
    for (int i = 0; i <= n; ++i) {
      const Int sign = (i % 2 == 0) ? 1 : -1;
      if (i < n) {
        image.clear();
        if (n == 1) {
          image.push_back(g.source(t[0]));
        } else if (i == 0) {
          image.assign(t.begin() + 1, t.end());
        } else {
          for (int p = 0; p < n; ++p) {
            if (p == i - 1) {
              image.push_back(g.compose(t[p], t[p + 1]));
              ++p;
            } else {
              image.push_back(t[p]);
            }
          }
        }
        const int row_t = to.nerve.index_of(image);
        for (int j = 0; j < fr; ++j)
          out.add_to(to.index(row_t, j), from.index(col_t, j), sign);
      } else {
        // face n: drop the last arrow, coefficient moves by action(g_n)
        image.clear();
        if (n == 1)
          image.push_back(g.range(t[0]));
        else
          image.assign(t.begin(), t.end() - 1);
        const int row_t = to.nerve.index_of(image);
        const IntMatrix& act = m.action(t.back());
        for (const auto& [ij, v] : act.entries())
          out.add_to(to.index(row_t, ij.first), from.index(col_t, ij.second), sign * v);
      }
    }
  }
  return out;
}

}  // namespace detail

// The coinvariant chain complex of the bar resolution of M, degrees 0..N.
inline IntChainComplex bar_complex(const FiniteGroupoid& g, const GModule& m, int max_degree) {
  if (!m.groupoid()->same_structure(g))
    throw std::invalid_argument("bar_complex: module over a different groupoid");
  if (max_degree < 0) throw std::invalid_argument("bar_complex: negative degree");
  std::vector<BarBasis> bases;
  for (int n = 0; n <= max_degree; ++n) bases.push_back(bar_basis(g, m, n));
  std::vector<int> ranks;
  for (const auto& b : bases) ranks.push_back(b.rank);
  std::vector<IntMatrix> boundaries;
  for (int n = 1; n <= max_degree; ++n)
    boundaries.push_back(detail::bar_boundary(g, m, n, bases[n], bases[n - 1]));
  return IntChainComplex::create(std::move(ranks), std::move(boundaries));
}

// Matui's complex: Z[G^n] with epsilon-face boundaries.
inline IntChainComplex matui_complex(const FiniteGroupoid& g, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("matui_complex: negative degree");
  std::vector<Nerve> nerves;
  for (int n = 0; n <= max_degree; ++n) nerves.push_back(Nerve::compute(g, n));
  std::vector<int> ranks;
  for (const auto& n : nerves) ranks.push_back(n.size());
  std::vector<IntMatrix> boundaries;
  for (int n = 1; n <= max_degree; ++n)
    boundaries.push_back(
        detail::boundary_with(g, n, FaceVariant::matui, nerves[n], nerves[n - 1]));
  return IntChainComplex::create(std::move(ranks), std::move(boundaries));
}

// H_n of the complex; needs the boundary from degree n+1, so n < max_degree.
inline SubquotientGroup homology_groups(const IntChainComplex& c, int n) {
  if (n < 0 || n >= c.max_degree())
    throw std::invalid_argument("homology_groups: degree " + std::to_string(n) +
                                " out of range (complex holds degrees up to " +
                                std::to_string(c.max_degree()) + ")");
  IntMatrix d_out = n == 0 ? IntMatrix(0, c.rank(0)) : c.boundary(n);
  return SubquotientGroup::homology_of_pair(d_out, c.boundary(n + 1));
}

// Groupoid homology with trivial coefficients through degree N.
inline std::vector<FGAbelianGroup> groupoid_homology(const FiniteGroupoid& g, int max_n) {
  IntChainComplex c = matui_complex(g, max_n + 1);
  std::vector<FGAbelianGroup> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(homology_groups(c, n).presentation());
  return out;
}

struct ShapiroReport {
  // degree -> (H_n(parent; Ind M), H_n(child; M))
  std::vector<std::pair<FGAbelianGroup, FGAbelianGroup>> sides;
  bool ok = true;

  std::string to_string() const {
    std::string s;
    for (std::size_t n = 0; n < sides.size(); ++n) {
      s += "H" + std::to_string(n) + ": induced " + sides[n].first.to_string() + " vs direct " +
           sides[n].second.to_string() + (sides[n].first == sides[n].second ? " (=)" : " (!=)") +
           "\n";
    }
    return s;
  }
};

// Compares H_n(G; Ind_H^G M) with H_n(H; M) for n <= max_n.
inline ShapiroReport shapiro_check(const SubgroupoidInclusion& inc, const GModule& child_module,
                                   int max_n) {
  ShapiroReport rep;
  IntChainComplex lhs = bar_complex(*inc.parent, induce(inc, child_module), max_n + 1);
  IntChainComplex rhs = bar_complex(*inc.child, child_module, max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    FGAbelianGroup a = homology_groups(lhs, n).presentation();
    FGAbelianGroup b = homology_groups(rhs, n).presentation();
    rep.ok = rep.ok && a == b;
    rep.sides.push_back({std::move(a), std::move(b)});
  }
  return rep;
}

}  // namespace gpdhom

#endif  // GPDHOM_COMPLEX_HPP
