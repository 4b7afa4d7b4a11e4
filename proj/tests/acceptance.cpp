// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria marked with timing requirements measure wall-clock time.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gpdhom/verify.hpp"

using namespace gpdhom;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<std::string, GroupoidPtr>> corpus() {
  return {{"Z/2", cyclic_group(2)},
          {"Z/3", cyclic_group(3)},
          {"Z/4", cyclic_group(4)},
          {"pair(2)", pair_groupoid(2)},
          {"pair(3)", pair_groupoid(3)},
          {"Z/2 + pair(2)", disjoint_union(*cyclic_group(2), *pair_groupoid(2))},
          {"point", trivial_groupoid()}};
}

// 1. Cyclic groups: (Z, Z/m, 0, Z/m, 0) through degree 4, under 10s each.
void criterion_1() {
  bool pass = true;
  std::ostringstream detail;
  for (int m : {2, 3, 4}) {
    auto start = std::chrono::steady_clock::now();
    std::vector<FGAbelianGroup> h = groupoid_homology(*cyclic_group(m), 4);
    const double secs = seconds_since(start);
    const FGAbelianGroup zm{{Int(m)}, 0};
    bool ok = h[0] == FGAbelianGroup::free(1) && h[1] == zm && h[2].is_trivial() && h[3] == zm &&
              h[4].is_trivial() && secs < 10.0;
    pass = pass && ok;
    detail << "Z/" << m << ": " << secs << "s ";
  }
  report(1, "cyclic-group oracle, degrees <= 4", pass, detail.str());
}

// 2. Contracting homotopy identity on Z[G^{n+1}], n <= 3, across the corpus.
void criterion_2() {
  bool pass = true;
  std::string bad;
  for (const auto& [name, g] : corpus()) {
    if (auto fail = check_homotopy(*g, 3)) {
      pass = false;
      bad = name + ": " + *fail;
      break;
    }
  }
  report(2, "bar homotopy identity, degrees <= 3", pass, bad);
}

// 3. Bar complex with trivial coefficients coincides with the Matui complex.
void criterion_3() {
  bool pass = true;
  std::string bad;
  for (const auto& [name, g] : corpus()) {
    const int top = g->arrow_count() <= 4 ? 4 : 3;
    IntChainComplex bar = bar_complex(*g, trivial_module(g), top);
    IntChainComplex matui = matui_complex(*g, top);
    for (int n = 0; n <= top && pass; ++n)
      if (bar.rank(n) != matui.rank(n)) pass = false;
    for (int n = 1; n <= top && pass; ++n)
      if (bar.boundary(n) != matui.boundary(n)) {
        pass = false;
        bad = name + " at degree " + std::to_string(n);
      }
  }
  report(3, "bar/matui two-path coincidence", pass, bad);
}

// 4. Adjunction triangle identities on randomized triples.
void criterion_4() {
  SuiteResult res = run_adjunction_suite(0, 24, 50);
  report(4, "induction-restriction adjunction, 50 randomized triples", res.pass, res.detail);
}

// 5. Shapiro: H_n(G; Ind M) = H_n(H; M), n <= 3, randomized.
void criterion_5() {
  SuiteResult res = run_shapiro_suite(0, 24, 50, 3);
  report(5, "Shapiro isomorphism, 50 randomized instances, degrees <= 3", res.pass, res.detail);
}

// 6. Solver lift and explicit chain maps induce identical homology maps.
void criterion_6() {
  bool pass = true;
  std::string bad;
  const int top = 4;  // verified maps in degrees <= 3
  std::vector<GroupoidHom> homs;
  homs.push_back(identity_hom(cyclic_group(2)));
  homs.push_back(GroupoidHom::create(cyclic_group(4), cyclic_group(2), {0}, {0, 1, 0, 1}));
  homs.push_back(hom_to_point(pair_groupoid(2)));
  {
    GroupoidPtr z2 = cyclic_group(2);
    homs.push_back(subgroupoid_hom(subgroupoid(z2, {0}, {0})));
  }
  for (std::size_t i = 0; i < homs.size() && pass; ++i) {
    const GroupoidHom& phi = homs[i];
    EtaleCorrespondence corr = correspondence_from_homomorphism(phi);
    GModule tg = trivial_module(phi.source), th = trivial_module(phi.target);
    CorrespondenceChainMap generic =
        correspondence_chain_map(corr, tg, th, rho_bar_pullback(corr), top);
    CorrespondenceChainMap explicit_path = chain_map_from_matrices(
        *phi.source, *phi.target, tg, th, hom_pushforward_matrices(phi, top));
    for (int n = 0; n < top && pass; ++n) {
      SubquotientMap a = induced_homology_map(generic, n);
      SubquotientMap b = induced_homology_map(explicit_path, n);
      if (a.matrix != b.matrix || a.source.presentation() != b.source.presentation() ||
          a.target.presentation() != b.target.presentation()) {
        pass = false;
        bad = "homomorphism case " + std::to_string(i) + " degree " + std::to_string(n);
      }
    }
  }
  std::vector<GSet> actions;
  {
    GroupoidPtr z2 = cyclic_group(2);
    GSetData d;
    d.point_names = {"x0", "x1"};
    d.anchor = {0, 0};
    d.action = {0, 1, 1, 0};  // swap
    actions.push_back(GSet::create(z2, d));
  }
  actions.push_back(gset_on_objects(pair_groupoid(2)));
  actions.push_back(gset_on_arrows_left(cyclic_group(3)));
  for (std::size_t i = 0; i < actions.size() && pass; ++i) {
    ActionCorrespondence ac = correspondence_from_action(actions[i]);
    GModule tg = trivial_module(actions[i].groupoid());
    GModule th = trivial_module(ac.transformation_groupoid);
    CorrespondenceChainMap generic =
        correspondence_chain_map(ac.corr, tg, th, rho_bar_pullback(ac.corr), top);
    CorrespondenceChainMap explicit_path =
        chain_map_from_matrices(*actions[i].groupoid(), *ac.transformation_groupoid, tg, th,
                                action_pullback_matrices(ac, top));
    for (int n = 0; n < top && pass; ++n) {
      SubquotientMap a = induced_homology_map(generic, n);
      SubquotientMap b = induced_homology_map(explicit_path, n);
      if (a.matrix != b.matrix || a.source.presentation() != b.source.presentation() ||
          a.target.presentation() != b.target.presentation()) {
        pass = false;
        bad = "action case " + std::to_string(i) + " degree " + std::to_string(n);
      }
    }
  }
  report(6, "theorem uniqueness: explicit vs solver chain maps, degrees <= 3", pass, bad);
}

// 7. Functoriality of induced maps under composition.
void criterion_7() {
  SuiteResult res = run_functoriality_suite(0, 24, 30, 2);
  report(7, "functoriality on 30 randomized composable pairs, degrees <= 2", res.pass,
         res.detail);
}

// 8. Morita collapses pair(k) -> point induce isomorphisms, k in {2,3,4}.
void criterion_8() {
  bool pass = true;
  std::string bad;
  for (int k = 2; k <= 4 && pass; ++k) {
    EtaleCorrespondence c = correspondence_from_homomorphism(hom_to_point(pair_groupoid(k)));
    for (int n = 0; n <= 3 && pass; ++n) {
      if (!homology_map(c, n).is_isomorphism()) {
        pass = false;
        bad = "pair(" + std::to_string(k) + ") degree " + std::to_string(n);
      }
    }
  }
  report(8, "Morita collapse isomorphisms, degrees <= 3", pass, bad);
}

// 9. Symmetric inverse monoid on two letters: chain isomorphism unimodular
// through degree 3 and the stabiliser decomposition values, under 60s.
void criterion_9() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string bad;
  FiniteInverseSemigroup i2 = symmetric_inverse_monoid(2);
  ChainIsoReport ci = chain_iso_check(i2, 3);
  if (!ci.ok) {
    pass = false;
    bad = "chain iso: " + ci.to_string();
  }
  for (int n = 0; n <= 3 && pass; ++n)
    if (!ci.unimodular[n] || !ci.triangular[n]) {
      pass = false;
      bad = "chain matrix at degree " + std::to_string(n);
    }
  StabilizerReport st = stabilizer_decomposition(i2, 3);
  const FGAbelianGroup z2{{Int(2)}, 0};
  if (pass) {
    pass = st.ok && st.lhs[0] == FGAbelianGroup::free(2) && st.lhs[1] == z2 &&
           st.lhs[2].is_trivial() && st.lhs[3] == z2 && st.rhs[0] == FGAbelianGroup::free(2) &&
           st.rhs[1] == z2 && st.rhs[2].is_trivial() && st.rhs[3] == z2;
    if (!pass) bad = "stabiliser values:\n" + st.to_string();
  }
  const double secs = seconds_since(start);
  if (secs >= 60.0) {
    pass = false;
    bad += " too slow";
  }
  std::ostringstream detail;
  detail << secs << "s";
  report(9, "inverse semigroup I_2: chain iso + stabiliser decomposition", pass,
         pass ? detail.str() : bad);
}

// 10. kappa consistency between the tensor basis and induced fiber ranks.
void criterion_10() {
  SuiteResult res = run_kappa_suite(0, 24, 50);
  report(10, "kappa fiber-rank consistency, 50 randomized correspondences", res.pass,
         res.detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << "acceptance: " << (10 - failures) << "/10 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
