#ifndef GPDHOM_NERVE_HPP
#define GPDHOM_NERVE_HPP

// Nerves of a finite groupoid and the three families of structure matrices:
// simplicial faces of the bar resolution Z[G^{n+1}], the epsilon-faces of the
// coinvariant (Matui) complex Z[G^n], and the contracting homotopy h_n.
//
// Basis convention: composable tuples in lexicographic order on arrow
// indices; degree 0 is the object list. Every matrix in these bases is
// thereby pinned bit-exactly.

#include <map>
#include <vector>

#include "gpdhom/groupoid.hpp"
#include "gpdhom/int_matrix.hpp"

namespace gpdhom {

class Nerve {
public:
  static Nerve compute(const FiniteGroupoid& g, int degree) {
    if (degree < 0) throw std::invalid_argument("Nerve: negative degree");
    Nerve n;
    n.degree_ = degree;
    if (degree == 0) {
      for (int x = 0; x < g.object_count(); ++x) n.tuples_.push_back({x});
    } else {
      std::vector<int> t;
      t.reserve(degree);
      for (int a = 0; a < g.arrow_count(); ++a) {
        t.push_back(a);
        n.extend(g, t);
        t.pop_back();
      }
    }
    for (int i = 0; i < static_cast<int>(n.tuples_.size()); ++i) n.index_[n.tuples_[i]] = i;
    return n;
  }

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  const std::vector<int>& tuple(int i) const { return tuples_[i]; }

  int index_of(const std::vector<int>& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InternalError("Nerve::index_of: tuple not in nerve");
    return it->second;
  }

private:
  void extend(const FiniteGroupoid& g, std::vector<int>& t) {
    if (static_cast<int>(t.size()) == degree_) {
      tuples_.push_back(t);
      return;
    }
    for (int a : g.arrows_with_range(g.source(t.back()))) {
      t.push_back(a);
      extend(g, t);
      t.pop_back();
    }
  }

  int degree_ = 0;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, int> index_;
};

enum class FaceVariant { resolution, matui };

namespace detail {

// Resolution face d^n_i : Z[G^{n+1}] -> Z[G^n], n >= 1.
inline IntMatrix resolution_face(const FiniteGroupoid& g, int n, int i, const Nerve& from,
                                 const Nerve& to) {
  IntMatrix m(to.size(), from.size());
  std::vector<int> image;
  for (int col = 0; col < from.size(); ++col) {
    const std::vector<int>& t = from.tuple(col);  // n+1 arrows
    image.clear();
    for (int p = 0; p <= n; ++p) {
      if (p == i && i < n) {
        image.push_back(g.compose(t[p], t[p + 1]));
        ++p;
      } else if (p == i && i == n) {
        // drop the last arrow
      } else {
        image.push_back(t[p]);
      }
    }
    m.add_to(to.index_of(image), col, 1);
  }
  return m;
}

// Matui face e^n_i : Z[G^n] -> Z[G^{n-1}], n >= 1. At n == 1 the two faces
// are the source and range projections to the object basis.
inline IntMatrix matui_face(const FiniteGroupoid& g, int n, int i, const Nerve& from,
                            const Nerve& to) {
  IntMatrix m(to.size(), from.size());
  std::vector<int> image;
  for (int col = 0; col < from.size(); ++col) {
    const std::vector<int>& t = from.tuple(col);  // n arrows (g_1..g_n)
    image.clear();
    if (n == 1) {
      image.push_back(i == 0 ? g.source(t[0]) : g.range(t[0]));
    } else if (i == 0) {
      image.assign(t.begin() + 1, t.end());
    } else if (i == n) {
      image.assign(t.begin(), t.end() - 1);
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
    m.add_to(to.index_of(image), col, 1);
  }
  return m;
}

inline IntMatrix boundary_with(const FiniteGroupoid& g, int n, FaceVariant variant,
                               const Nerve& from, const Nerve& to) {
  if (variant == FaceVariant::resolution && n == 0) {
    // Augmentation r_* : Z[G^1] -> Z[G^0], the equivariant anchor of the
    // bar resolution; the degree-0 coinvariant projection is s_* instead.
    IntMatrix m(to.size(), from.size());
    for (int col = 0; col < from.size(); ++col)
      m.add_to(to.index_of({g.range(from.tuple(col)[0])}), col, 1);
    return m;
  }
  IntMatrix sum(to.size(), from.size());
  for (int i = 0; i <= n; ++i) {
    IntMatrix face = variant == FaceVariant::resolution ? resolution_face(g, n, i, from, to)
                                                        : matui_face(g, n, i, from, to);
    sum = (i % 2 == 0) ? sum + face : sum - face;
  }
  return sum;
}

}  // namespace detail

// Matrix of a single face map in the canonical bases; every column has
// exactly one 1. resolution: d^n_i : Z[G^{n+1}] -> Z[G^n] (n >= 1).
// matui: e^n_i : Z[G^n] -> Z[G^{n-1}] (n >= 1).
inline IntMatrix face_matrix(const FiniteGroupoid& g, int n, int i, FaceVariant variant) {
  if (n < 1) throw std::invalid_argument("face_matrix: need n >= 1");
  if (i < 0 || i > n) throw std::invalid_argument("face_matrix: face index out of range");
  if (variant == FaceVariant::resolution) {
    Nerve from = Nerve::compute(g, n + 1), to = Nerve::compute(g, n);
    return detail::resolution_face(g, n, i, from, to);
  }
  Nerve from = Nerve::compute(g, n), to = Nerve::compute(g, n - 1);
  return detail::matui_face(g, n, i, from, to);
}

// Alternating sum of faces. resolution: boundary_n : Z[G^{n+1}] -> Z[G^n]
// for n >= 1, augmentation r_* for n == 0. matui: Z[G^n] -> Z[G^{n-1}], n >= 1.
inline IntMatrix boundary_matrix(const FiniteGroupoid& g, int n, FaceVariant variant) {
  if (variant == FaceVariant::matui && n < 1)
    throw std::invalid_argument("boundary_matrix: matui complex starts at n = 1");
  if (n < 0) throw std::invalid_argument("boundary_matrix: negative degree");
  const int from_deg = variant == FaceVariant::resolution ? n + 1 : n;
  Nerve from = Nerve::compute(g, from_deg), to = Nerve::compute(g, from_deg - 1);
  return detail::boundary_with(g, n, variant, from, to);
}

// Contracting homotopy h_n : Z[G^n] -> Z[G^{n+1}], prepending the unit at the
// range of the leading arrow (h_0 includes objects as their units).
inline IntMatrix homotopy_matrix(const FiniteGroupoid& g, int n) {
  if (n < 0) throw std::invalid_argument("homotopy_matrix: negative degree");
  Nerve from = Nerve::compute(g, n), to = Nerve::compute(g, n + 1);
  IntMatrix m(to.size(), from.size());
  std::vector<int> image;
  for (int col = 0; col < from.size(); ++col) {
    const std::vector<int>& t = from.tuple(col);
    image.clear();
    if (n == 0) {
      image.push_back(g.unit(t[0]));
    } else {
      image.push_back(g.unit(g.range(t[0])));
      image.insert(image.end(), t.begin(), t.end());
    }
    m.add_to(to.index_of(image), col, 1);
  }
  return m;
}

}  // namespace gpdhom

#endif  // GPDHOM_NERVE_HPP
