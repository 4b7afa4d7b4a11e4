#ifndef GPDHOM_VERIFY_HPP
#define GPDHOM_VERIFY_HPP

// Randomized and corpus-driven verification suites. Each suite draws
// instances from a seeded generator, runs a single-instance check, and on
// failure dumps the full instance as loadable JSON; recheck() reloads such a
// dump and re-runs exactly that check. Generation is reproducible: the
// generator consumes the engine stream deterministically, including retries.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gpdhom/json_io.hpp"

namespace gpdhom {

class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<unsigned>(n)); }
  bool coin() { return (rng_() & 1u) != 0; }

private:
  std::mt19937_64 rng_;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  int cases = 0;
  std::string detail;
  Json counterexample;  // null unless failed

  std::string to_string() const {
    std::string s = suite + ": " + (pass ? "PASS" : "FAIL") + " (" + std::to_string(cases) +
                    (cases == 1 ? " case" : " cases") + ")";
    if (!detail.empty()) s += " - " + detail;
    return s;
  }
};

// ---------------------------------------------------------------------------
// Random instance generators

inline GroupoidPtr random_atom(RandomSource& rng) {
  switch (rng.below(6)) {
    case 0: return cyclic_group(2);
    case 1: return cyclic_group(3);
    case 2: return cyclic_group(4);
    case 3: return pair_groupoid(2);
    case 4: return pair_groupoid(3);
    default: return trivial_groupoid();
  }
}

inline GroupoidPtr random_groupoid(RandomSource& rng, int size_bound) {
  GroupoidPtr g = random_atom(rng);
  const int extra = rng.below(3);
  for (int i = 0; i < extra; ++i) {
    GroupoidPtr atom = random_atom(rng);
    if (g->arrow_count() + atom->arrow_count() > size_bound) break;
    g = disjoint_union(*g, *atom);
  }
  return g;
}

inline SubgroupoidInclusion random_subgroupoid(RandomSource& rng, GroupoidPtr g) {
  if (g->object_count() == 0) return full_inclusion(std::move(g));
  switch (rng.below(4)) {
    case 0: return full_inclusion(std::move(g));
    case 1: return unit_subgroupoid(std::move(g));
    case 2: {
      std::vector<int> objects;
      for (int x = 0; x < g->object_count(); ++x)
        if (rng.coin()) objects.push_back(x);
      if (objects.empty()) objects.push_back(rng.below(g->object_count()));
      return full_subgroupoid(std::move(g), std::move(objects));
    }
    default: {
      std::vector<int> seeds;
      const int k = 1 + rng.below(3);
      for (int i = 0; i < k; ++i) seeds.push_back(rng.below(g->arrow_count()));
      return subgroupoid_generated(std::move(g), seeds);
    }
  }
}

inline GSet random_gset(RandomSource& rng, GroupoidPtr g) {
  switch (rng.below(3)) {
    case 0: return gset_on_objects(std::move(g));
    case 1: return gset_on_arrows_left(std::move(g));
    default: {
      // the translation torsor over one source object
      const int x0 = rng.below(std::max(1, g->object_count()));
      GSetData d;
      std::vector<int> pts;
      for (int a = 0; a < g->arrow_count(); ++a)
        if (g->source(a) == x0) pts.push_back(a);
      std::vector<int> pos(g->arrow_count(), -1);
      for (std::size_t i = 0; i < pts.size(); ++i) pos[pts[i]] = static_cast<int>(i);
      for (int a : pts) {
        d.point_names.push_back(g->arrow_name(a));
        d.anchor.push_back(g->range(a));
      }
      d.action.assign(g->arrow_count() * pts.size(), -1);
      for (int a = 0; a < g->arrow_count(); ++a)
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (g->composable(a, pts[i]))
            d.action[a * pts.size() + i] = pos[g->compose(a, pts[i])];
      return GSet::create(std::move(g), std::move(d));
    }
  }
}

inline GModule random_module(RandomSource& rng, GroupoidPtr g) {
  switch (rng.below(4)) {
    case 0: return trivial_module(std::move(g));
    case 1: return gset_module(random_gset(rng, std::move(g)));
    case 2: {
      GModule a = trivial_module(g);
      GModule b = gset_module(random_gset(rng, g));
      return direct_sum(a, b);
    }
    default: return gset_module(gset_on_objects(std::move(g)));
  }
}

// A correspondence out of g built from validated blocks, kept within the
// arrow bound by falling back to cheaper blocks.
inline EtaleCorrespondence random_correspondence(RandomSource& rng, GroupoidPtr g,
                                                 int size_bound) {
  switch (rng.below(4)) {
    case 0: return identity_correspondence(std::move(g));
    case 1: return correspondence_from_homomorphism(hom_to_point(std::move(g)));
    case 2: {
      GSet x = random_gset(rng, g);
      ActionCorrespondence ac = correspondence_from_action(x);
      if (ac.transformation_groupoid->arrow_count() <= size_bound) return ac.corr;
      return identity_correspondence(std::move(g));
    }
    default: return subgroupoid_correspondence(random_subgroupoid(rng, std::move(g)));
  }
}

// ---------------------------------------------------------------------------
// Single-instance checks (shared by the suites and recheck)

inline std::optional<std::string> check_homotopy(const FiniteGroupoid& g, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    IntMatrix lhs =
        boundary_matrix(g, n + 1, FaceVariant::resolution) * homotopy_matrix(g, n + 1) +
        homotopy_matrix(g, n) * boundary_matrix(g, n, FaceVariant::resolution);
    if (lhs != IntMatrix::identity(Nerve::compute(g, n + 1).size()))
      return "homotopy identity fails on Z[G^" + std::to_string(n + 1) + "]";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_adjunction(const SubgroupoidInclusion& inc,
                                                   const GModule& child_m,
                                                   const GModule& parent_n) {
  TriangleReport rep = triangle_check(inc, child_m, parent_n);
  if (!rep.ok) return rep.detail;
  return std::nullopt;
}

inline std::optional<std::string> check_shapiro(const SubgroupoidInclusion& inc,
                                                const GModule& child_m, int max_n) {
  ShapiroReport rep = shapiro_check(inc, child_m, max_n);
  if (!rep.ok) return "presentations differ:\n" + rep.to_string();
  return std::nullopt;
}

inline std::optional<std::string> check_functoriality(const EtaleCorrespondence& omega,
                                                      const EtaleCorrespondence& lambda,
                                                      int max_n) {
  EtaleCorrespondence composite = compose(omega, lambda);
  for (int n = 0; n <= max_n; ++n) {
    SubquotientMap lhs = homology_map(composite, n);
    SubquotientMap rhs = compose(homology_map(lambda, n), homology_map(omega, n));
    if (lhs.matrix != rhs.matrix || lhs.source.presentation() != rhs.source.presentation() ||
        lhs.target.presentation() != rhs.target.presentation())
      return "H_" + std::to_string(n) + "(composite) != composite of maps";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_kappa(const EtaleCorrespondence& corr, const GSet& z) {
  // right H-set on the points of the correspondence
  const FiniteGroupoid& h = *corr.target_groupoid();
  RightGSetData rd;
  rd.point_names = corr.data().point_names;
  rd.anchor = corr.data().sigma;
  rd.action.assign(corr.point_count() * h.arrow_count(), -1);
  for (int w = 0; w < corr.point_count(); ++w)
    for (int b = 0; b < h.arrow_count(); ++b)
      if (corr.sigma(w) == h.range(b))
        rd.action[w * h.arrow_count() + b] = corr.right_act(w, b);
  RightGSet y = RightGSet::create(corr.target_groupoid(), std::move(rd));
  TensorProductBasis basis = tensor_kappa(y, z);
  GModule ind = induce_module(corr, gset_module(z));
  std::vector<int> per_object(corr.source_groupoid()->object_count(), 0);
  for (auto [w, q] : basis.orbit_reps) {
    (void)q;
    ++per_object[corr.rho(w)];
  }
  for (int x = 0; x < corr.source_groupoid()->object_count(); ++x)
    if (per_object[x] != ind.fiber_rank(x))
      return "fiber rank mismatch at object '" + corr.source_groupoid()->object_name(x) +
             "': tensor basis " + std::to_string(per_object[x]) + " vs induced " +
             std::to_string(ind.fiber_rank(x));
  return std::nullopt;
}

inline std::optional<std::string> check_invsemi(const FiniteInverseSemigroup& s, int max_n) {
  ChainIsoReport ci = chain_iso_check(s, max_n);
  if (!ci.ok) return "chain isomorphism check failed:\n" + ci.to_string();
  StabilizerReport st = stabilizer_decomposition(s, max_n);
  if (!st.ok) return "stabiliser decomposition mismatch:\n" + st.to_string();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Suite plumbing

namespace detail {

inline Json subgroupoid_to_json(const SubgroupoidInclusion& inc) {
  Json j;
  j["objects"] = Json::array();
  for (int x : inc.object_map) j["objects"].push_back(inc.parent->object_name(x));
  j["arrows"] = Json::array();
  for (int a : inc.arrow_map) j["arrows"].push_back(inc.parent->arrow_name(a));
  return j;
}

inline SubgroupoidInclusion subgroupoid_from_json(const Json& j, GroupoidPtr parent) {
  NameIndex objects(parent->data().object_names, "subgroupoid.objects");
  NameIndex arrows(parent->data().arrow_names, "subgroupoid.arrows");
  std::vector<int> om, am;
  for (const auto& v : field(j, "objects", "subgroupoid")) om.push_back(objects.at(v));
  for (const auto& v : field(j, "arrows", "subgroupoid")) am.push_back(arrows.at(v));
  return subgroupoid(std::move(parent), std::move(om), std::move(am));
}

}  // namespace detail

inline SuiteResult run_homotopy_suite(std::uint64_t seed, int size_bound, int cases = 12) {
  SuiteResult res;
  res.suite = "homotopy";
  RandomSource rng(seed);
  std::vector<GroupoidPtr> instances = {cyclic_group(2), cyclic_group(3), pair_groupoid(2),
                                        pair_groupoid(3),
                                        disjoint_union(*cyclic_group(2), *pair_groupoid(2))};
  while (static_cast<int>(instances.size()) < cases)
    instances.push_back(random_groupoid(rng, size_bound));
  for (const auto& g : instances) {
    ++res.cases;
    const int max_n = g->arrow_count() <= 6 ? 3 : 2;
    if (auto fail = check_homotopy(*g, max_n)) {
      res.pass = false;
      res.detail = *fail;
      res.counterexample = {{"suite", "homotopy"},
                            {"max_degree", max_n},
                            {"groupoid", groupoid_to_json(*g)}};
      return res;
    }
  }
  return res;
}

inline SuiteResult run_adjunction_suite(std::uint64_t seed, int size_bound, int cases = 50) {
  SuiteResult res;
  res.suite = "adjunction";
  RandomSource rng(seed);
  for (int i = 0; i < cases; ++i) {
    GroupoidPtr g = random_groupoid(rng, size_bound);
    SubgroupoidInclusion inc = random_subgroupoid(rng, g);
    GModule child_m = random_module(rng, inc.child);
    GModule parent_n = random_module(rng, g);
    ++res.cases;
    if (auto fail = check_adjunction(inc, child_m, parent_n)) {
      res.pass = false;
      res.detail = *fail;
      res.counterexample = {{"suite", "adjunction"},
                            {"groupoid", groupoid_to_json(*g)},
                            {"subgroupoid", detail::subgroupoid_to_json(inc)},
                            {"module", module_to_json(child_m, "child")},
                            {"parent_module", module_to_json(parent_n, "parent")}};
      return res;
    }
  }
  return res;
}

inline SuiteResult run_shapiro_suite(std::uint64_t seed, int size_bound, int cases = 50,
                                     int max_n = 3) {
  SuiteResult res;
  res.suite = "shapiro";
  RandomSource rng(seed);
  const int effective_bound = std::min(size_bound, 12);
  for (int i = 0; i < cases; ++i) {
    GroupoidPtr g = random_groupoid(rng, effective_bound);
    SubgroupoidInclusion inc = random_subgroupoid(rng, g);
    GModule child_m = rng.coin() ? trivial_module(inc.child)
                                 : gset_module(gset_on_objects(inc.child));
    ++res.cases;
    if (auto fail = check_shapiro(inc, child_m, max_n)) {
      res.pass = false;
      res.detail = *fail;
      res.counterexample = {{"suite", "shapiro"},
                            {"max_degree", max_n},
                            {"groupoid", groupoid_to_json(*g)},
                            {"subgroupoid", detail::subgroupoid_to_json(inc)},
                            {"module", module_to_json(child_m, "child")}};
      return res;
    }
  }
  return res;
}

inline SuiteResult run_functoriality_suite(std::uint64_t seed, int size_bound, int cases = 30,
                                           int max_n = 2) {
  SuiteResult res;
  res.suite = "functoriality";
  RandomSource rng(seed);
  const int effective_bound = std::min(size_bound, 16);
  for (int i = 0; i < cases; ++i) {
    GroupoidPtr g = random_groupoid(rng, std::min(effective_bound, 9));
    EtaleCorrespondence omega = random_correspondence(rng, g, effective_bound);
    EtaleCorrespondence lambda =
        random_correspondence(rng, omega.target_groupoid(), effective_bound);
    ++res.cases;
    if (auto fail = check_functoriality(omega, lambda, max_n)) {
      res.pass = false;
      res.detail = *fail;
      res.counterexample = {
          {"suite", "functoriality"},
          {"max_degree", max_n},
          {"source", groupoid_to_json(*omega.source_groupoid())},
          {"middle", groupoid_to_json(*omega.target_groupoid())},
          {"target", groupoid_to_json(*lambda.target_groupoid())},
          {"omega", correspondence_to_json(omega, "source", "middle")},
          {"lambda", correspondence_to_json(lambda, "middle", "target")}};
      return res;
    }
  }
  return res;
}

inline SuiteResult run_kappa_suite(std::uint64_t seed, int size_bound, int cases = 50) {
  SuiteResult res;
  res.suite = "kappa";
  RandomSource rng(seed);
  for (int i = 0; i < cases; ++i) {
    GroupoidPtr g = random_groupoid(rng, size_bound);
    EtaleCorrespondence corr = random_correspondence(rng, g, size_bound);
    GSet z = random_gset(rng, corr.target_groupoid());
    ++res.cases;
    if (auto fail = check_kappa(corr, z)) {
      res.pass = false;
      res.detail = *fail;
      Json zj;
      zj["groupoid"] = "target";
      zj["points"] = Json::array();
      for (int p = 0; p < z.point_count(); ++p) zj["points"].push_back(z.point_name(p));
      zj["tau"] = Json::object();
      for (int p = 0; p < z.point_count(); ++p)
        zj["tau"][z.point_name(p)] = z.groupoid()->object_name(z.anchor(p));
      zj["action"] = Json::array();
      for (int a = 0; a < z.groupoid()->arrow_count(); ++a)
        for (int p = 0; p < z.point_count(); ++p)
          if (z.defined(a, p))
            zj["action"].push_back(
                {z.groupoid()->arrow_name(a), z.point_name(p), z.point_name(z.act(a, p))});
      res.counterexample = {{"suite", "kappa"},
                            {"source", groupoid_to_json(*corr.source_groupoid())},
                            {"target", groupoid_to_json(*corr.target_groupoid())},
                            {"omega", correspondence_to_json(corr, "source", "target")},
                            {"gset", std::move(zj)}};
      return res;
    }
  }
  return res;
}

inline std::vector<FiniteInverseSemigroup> invsemi_corpus(RandomSource& rng, int random_cases) {
  std::vector<FiniteInverseSemigroup> out;
  {
    SemigroupData d;  // two-chain semilattice
    d.element_names = {"1", "e"};
    d.mul = {{0, 1}, {1, 1}};
    out.push_back(FiniteInverseSemigroup::create(std::move(d)));
  }
  {
    SemigroupData d;  // Z/2
    d.element_names = {"1", "t"};
    d.mul = {{0, 1}, {1, 0}};
    out.push_back(FiniteInverseSemigroup::create(std::move(d)));
  }
  out.push_back(symmetric_inverse_monoid(2));
  for (int i = 0; i < random_cases; ++i) {
    // random meet-subsemilattice of the powerset of {0,1,2}
    std::vector<int> family;
    auto add = [&family](int s) {
      for (int t : family)
        if (t == s) return;
      family.push_back(s);
    };
    const int seeds = 2 + rng.below(3);
    for (int k = 0; k < seeds; ++k) add(rng.below(8));
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<int> cur = family;
      for (int a : cur)
        for (int b : cur) {
          const std::size_t before = family.size();
          add(a & b);
          grew = grew || family.size() != before;
        }
    }
    std::sort(family.begin(), family.end());
    SemigroupData d;
    for (int s : family) d.element_names.push_back("s" + std::to_string(s));
    std::map<int, int> pos;
    for (int k = 0; k < static_cast<int>(family.size()); ++k) pos[family[k]] = k;
    d.mul.assign(family.size(), std::vector<int>(family.size()));
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = 0; b < family.size(); ++b)
        d.mul[a][b] = pos.at(family[a] & family[b]);
    out.push_back(FiniteInverseSemigroup::create(std::move(d)));
  }
  return out;
}

inline SuiteResult run_invsemi_suite(std::uint64_t seed, int /*size_bound*/,
                                     int random_cases = 4) {
  SuiteResult res;
  res.suite = "invsemi";
  RandomSource rng(seed);
  for (const FiniteInverseSemigroup& s : invsemi_corpus(rng, random_cases)) {
    ++res.cases;
    const int max_n = s.size() <= 4 ? 3 : (s.size() <= 8 ? 3 : 2);
    if (auto fail = check_invsemi(s, max_n)) {
      res.pass = false;
      res.detail = *fail;
      res.counterexample = {{"suite", "invsemi"},
                            {"max_degree", max_n},
                            {"semigroup", semigroup_to_json(s)}};
      return res;
    }
  }
  return res;
}

inline std::vector<std::string> suite_names() {
  return {"adjunction", "shapiro", "functoriality", "homotopy", "kappa", "invsemi"};
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, int size_bound) {
  if (name == "homotopy") return run_homotopy_suite(seed, size_bound);
  if (name == "adjunction") return run_adjunction_suite(seed, size_bound);
  if (name == "shapiro") return run_shapiro_suite(seed, size_bound);
  if (name == "functoriality") return run_functoriality_suite(seed, size_bound);
  if (name == "kappa") return run_kappa_suite(seed, size_bound);
  if (name == "invsemi") return run_invsemi_suite(seed, size_bound);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// Re-run the single check of a dumped counterexample.
inline SuiteResult recheck(const Json& dump) {
  using detail::field;
  const std::string suite = detail::require_string(field(dump, "suite", "counterexample"),
                                                   "counterexample.suite");
  SuiteResult res;
  res.suite = suite + " (recheck)";
  res.cases = 1;
  std::optional<std::string> fail;
  if (suite == "homotopy") {
    GroupoidPtr g = groupoid_from_json(field(dump, "groupoid", "counterexample"));
    fail = check_homotopy(*g, field(dump, "max_degree", "counterexample").get<int>());
  } else if (suite == "adjunction" || suite == "shapiro") {
    GroupoidPtr g = groupoid_from_json(field(dump, "groupoid", "counterexample"));
    SubgroupoidInclusion inc =
        detail::subgroupoid_from_json(field(dump, "subgroupoid", "counterexample"), g);
    GModule child_m = module_from_json(field(dump, "module", "counterexample"), inc.child);
    if (suite == "adjunction") {
      GModule parent_n = module_from_json(field(dump, "parent_module", "counterexample"), g);
      fail = check_adjunction(inc, child_m, parent_n);
    } else {
      fail = check_shapiro(inc, child_m, field(dump, "max_degree", "counterexample").get<int>());
    }
  } else if (suite == "functoriality") {
    GroupoidPtr src = groupoid_from_json(field(dump, "source", "counterexample"));
    GroupoidPtr mid = groupoid_from_json(field(dump, "middle", "counterexample"));
    GroupoidPtr tgt = groupoid_from_json(field(dump, "target", "counterexample"));
    EtaleCorrespondence omega =
        correspondence_from_json(field(dump, "omega", "counterexample"), src, mid);
    EtaleCorrespondence lambda =
        correspondence_from_json(field(dump, "lambda", "counterexample"), mid, tgt);
    fail = check_functoriality(omega, lambda,
                               field(dump, "max_degree", "counterexample").get<int>());
  } else if (suite == "kappa") {
    GroupoidPtr src = groupoid_from_json(field(dump, "source", "counterexample"));
    GroupoidPtr tgt = groupoid_from_json(field(dump, "target", "counterexample"));
    EtaleCorrespondence omega =
        correspondence_from_json(field(dump, "omega", "counterexample"), src, tgt);
    GSet z = gset_from_json(field(dump, "gset", "counterexample"), tgt);
    fail = check_kappa(omega, z);
  } else if (suite == "invsemi") {
    FiniteInverseSemigroup s = semigroup_from_json(field(dump, "semigroup", "counterexample"));
    fail = check_invsemi(s, field(dump, "max_degree", "counterexample").get<int>());
  } else {
    throw ParseError("counterexample: unknown suite '" + suite + "'");
  }
  if (fail) {
    res.pass = false;
    res.detail = *fail;
    res.counterexample = dump;
  }
  return res;
}

}  // namespace gpdhom

#endif  // GPDHOM_VERIFY_HPP
