#include <catch2/catch_amalgamated.hpp>

#include "gpdhom/correspondence.hpp"
#include "helpers.hpp"

using namespace gpdhom;
using gpdhom::testing::correspondences_equivalent;
using gpdhom::testing::swap_gset;

namespace {

GroupoidHom z4_to_z2() {
  GroupoidPtr z4 = cyclic_group(4), z2 = cyclic_group(2);
  return GroupoidHom::create(z4, z2, {0}, {0, 1, 0, 1});
}

EtaleCorrespondence collapse_correspondence(int k) {
  return correspondence_from_homomorphism(hom_to_point(pair_groupoid(k)));
}

}  // namespace

TEST_CASE("correspondence validation", "[correspondence]") {
  SECTION("identity correspondence is valid") {
    CHECK_NOTHROW(identity_correspondence(pair_groupoid(2)));
    CHECK_NOTHROW(identity_correspondence(cyclic_group(3)));
  }
  SECTION("a stabilised point violates freeness") {
    GroupoidPtr one = trivial_groupoid(), z2 = cyclic_group(2);
    CorrespondenceData d;
    d.point_names = {"w"};
    d.rho = {0};
    d.sigma = {0};
    d.left = {0};       // unit of the trivial group fixes w
    d.right = {0, 0};   // both elements of Z/2 fix w
    ValidationReport rep = validate_correspondence(*one, *z2, d);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found = found || v.rule == "right action not free";
    CHECK(found);
  }
  SECTION("non-commuting actions are reported with a witness") {
    GroupoidPtr z2 = cyclic_group(2);
    CorrespondenceData d;
    d.point_names = {"w0", "w1", "w2", "w3"};
    d.rho = {0, 0, 0, 0};
    d.sigma = {0, 0, 0, 0};
    // left generator swaps w0,w1 and fixes w2,w3; right generator is the
    // free involution (02)(13); they do not commute at w0.
    d.left = {0, 1, 2, 3,
              1, 0, 2, 3};
    d.right = {0, 2,
               1, 3,
               2, 0,
               3, 1};
    ValidationReport rep = validate_correspondence(*z2, *z2, d);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first().rule == "actions commute");
  }
}

TEST_CASE("orbit structure and induced modules", "[correspondence]") {
  SECTION("identity correspondence: one orbit per object, Ind is equivalent to the identity") {
    GroupoidPtr p2 = pair_groupoid(2);
    EtaleCorrespondence id = identity_correspondence(p2);
    CHECK(id.orbit_count() == 2);
    GModule n = gset_module(gset_on_arrows_left(p2));
    GModule ind = induce_module(id, n);
    for (int x = 0; x < 2; ++x) CHECK(ind.fiber_rank(x) == n.fiber_rank(id.sigma(id.reps_over(x)[0])));
    // the canonical comparison: act by the representative arrow
    std::vector<IntMatrix> comp;
    for (int x = 0; x < 2; ++x) comp.push_back(n.action(id.reps_over(x)[0]));
    CHECK_NOTHROW(GModuleMap::create(ind, n, comp));  // equivariant iso candidate
    for (int x = 0; x < 2; ++x) CHECK(is_unimodular(comp[x]));
  }
  SECTION("induced trivial module counts orbits over each object") {
    EtaleCorrespondence c = collapse_correspondence(3);
    GModule ind = induce_module(c, trivial_module(c.target_groupoid()));
    for (int x = 0; x < 3; ++x) CHECK(ind.fiber_rank(x) == 1);
  }
  SECTION("subgroupoid correspondence reproduces subgroupoid induction") {
    GroupoidPtr p2 = pair_groupoid(2);
    GroupoidPtr z2 = cyclic_group(2);
    std::vector<std::pair<GroupoidPtr, SubgroupoidInclusion>> cases;
    cases.push_back({p2, full_subgroupoid(p2, {0})});
    cases.push_back({p2, unit_subgroupoid(p2)});
    cases.push_back({z2, subgroupoid(z2, {0}, {0})});
    cases.push_back({p2, full_inclusion(p2)});
    for (const auto& [g, inc] : cases) {
      EtaleCorrespondence corr = subgroupoid_correspondence(inc);
      GModule via_corr = induce_module(corr, trivial_module(inc.child));
      GModule via_sub = induce(inc, trivial_module(inc.child));
      CHECK(via_corr.same_shape(via_sub));
      GModule n = gset_module(gset_on_arrows_left(inc.child));
      CHECK(induce_module(corr, n).same_shape(induce(inc, n)));
    }
  }
}

TEST_CASE("rho-bar pullback", "[correspondence]") {
  SECTION("identity correspondence gives the identity") {
    GModuleMap f = rho_bar_pullback(identity_correspondence(pair_groupoid(2)));
    CHECK(f.is_identity());
  }
  SECTION("empty fibers give zero components") {
    GroupoidPtr g = disjoint_union(*pair_groupoid(2), *trivial_groupoid());
    SubgroupoidInclusion inc = full_subgroupoid(g, {0, 1});  // the pair part
    GModuleMap f = rho_bar_pullback(subgroupoid_correspondence(inc));
    CHECK(f.component[2].rows() == 0);  // no orbits over the isolated point
  }
  SECTION("collapse correspondence: each object generator hits its single orbit") {
    GModuleMap f = rho_bar_pullback(collapse_correspondence(2));
    for (int x = 0; x < 2; ++x) CHECK(f.component[x] == IntMatrix::identity(1));
  }
}

TEST_CASE("delta, the sigma-pushforward on coinvariants", "[correspondence]") {
  SECTION("identity correspondence") {
    for (GroupoidPtr g : {cyclic_group(2), pair_groupoid(2)}) {
      DeltaMap d = delta(identity_correspondence(g), trivial_module(g));
      CHECK(d.source.group == d.target.group);
      CHECK(d.matrix == IntMatrix::identity(1));
    }
  }
  SECTION("action correspondence of the swap action") {
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    DeltaMap d = delta(ac.corr, trivial_module(ac.transformation_groupoid));
    CHECK(d.source.group == FGAbelianGroup::free(1));
    CHECK(d.target.group == FGAbelianGroup::free(1));
    CHECK(d.matrix.at(0, 0) * d.matrix.at(0, 0) == 1);
  }
  SECTION("pair-collapse sends both orbit generators to 1") {
    EtaleCorrespondence c = collapse_correspondence(2);
    DeltaMap d = delta(c, trivial_module(c.target_groupoid()));
    // ambient: two orbit generators, both mapping to the point generator
    CHECK(d.ambient == IntMatrix::from_rows({{Int(1), Int(1)}}));
    CHECK(d.matrix.rows() == 1);
    CHECK(d.matrix.at(0, 0) * d.matrix.at(0, 0) == 1);
  }
}

TEST_CASE("homology maps of basic correspondences", "[correspondence][hommap]") {
  SECTION("identity correspondence induces the identity") {
    for (GroupoidPtr g : {cyclic_group(2), pair_groupoid(2)}) {
      EtaleCorrespondence id = identity_correspondence(g);
      for (int n = 0; n <= 2; ++n) {
        SubquotientMap m = homology_map(id, n);
        CHECK(m.is_identity());
      }
    }
  }
  SECTION("zero module map induces the zero chain map") {
    GroupoidPtr z2 = cyclic_group(2);
    EtaleCorrespondence id = identity_correspondence(z2);
    GModule triv = trivial_module(z2);
    GModuleMap zero = GModuleMap::zero(triv, induce_module(id, triv));
    CorrespondenceChainMap c = correspondence_chain_map(id, triv, triv, zero, 2);
    for (const auto& m : c.degree) CHECK(m.is_zero());
  }
  SECTION("pair collapse is an isomorphism on homology") {
    EtaleCorrespondence c = collapse_correspondence(2);
    for (int n = 0; n <= 2; ++n) {
      SubquotientMap m = homology_map(c, n);
      CHECK(m.is_isomorphism());
    }
    CHECK(homology_map(c, 0).matrix == IntMatrix::identity(1));
  }
  SECTION("Morita subgroupoid correspondence is an isomorphism on homology") {
    GroupoidPtr p2 = pair_groupoid(2);
    EtaleCorrespondence c = subgroupoid_correspondence(full_subgroupoid(p2, {0}));
    for (int n = 0; n <= 2; ++n) CHECK(homology_map(c, n).is_isomorphism());
  }
}

TEST_CASE("homomorphism correspondences: explicit and generic paths agree",
          "[correspondence][twopath]") {
  std::vector<GroupoidHom> homs;
  homs.push_back(identity_hom(cyclic_group(2)));
  homs.push_back(z4_to_z2());
  homs.push_back(hom_to_point(pair_groupoid(2)));
  {
    GroupoidPtr z2 = cyclic_group(2);
    homs.push_back(subgroupoid_hom(subgroupoid(z2, {0}, {0})));  // 1 -> Z/2
  }
  const int top = 3;
  for (const auto& phi : homs) {
    EtaleCorrespondence corr = correspondence_from_homomorphism(phi);
    GModule triv_g = trivial_module(phi.source), triv_h = trivial_module(phi.target);
    BarResolution p(phi.source, triv_g, top), q(phi.target, triv_h, top);

    // The explicit lift is a chain map over the rho-bar pullback.
    std::vector<GModuleMap> psi = explicit_hom_lift(phi, corr, p, q);
    GModuleMap ind_aug = induce_module_map(corr, q.augmentation());
    GModuleMap rb = rho_bar_pullback(corr);
    for (int x = 0; x < phi.source->object_count(); ++x)
      CHECK(ind_aug.component[x] * psi[0].component[x] ==
            rb.component[x] * p.augmentation().component[x]);
    for (int n = 1; n <= top; ++n) {
      GModuleMap indb = induce_module_map(corr, q.boundary(n));
      for (int x = 0; x < phi.source->object_count(); ++x)
        CHECK(indb.component[x] * psi[n].component[x] ==
              psi[n - 1].component[x] * p.boundary(n).component[x]);
    }

    // Its coinvariant pipeline equals the componentwise pushforward.
    std::vector<IntMatrix> via_psi = coinvariant_matrices_of_lift(corr, p, q, psi);
    std::vector<IntMatrix> push = hom_pushforward_matrices(phi, top);
    for (int n = 0; n <= top; ++n) CHECK(via_psi[n] == push[n]);

    // Solver route and explicit route induce identical homology maps.
    CorrespondenceChainMap generic = correspondence_chain_map(corr, triv_g, triv_h,
                                                              rho_bar_pullback(corr), top);
    CorrespondenceChainMap explicit_path = chain_map_from_matrices(
        *phi.source, *phi.target, triv_g, triv_h, std::move(push));
    for (int n = 0; n + 1 <= top; ++n) {
      SubquotientMap a = induced_homology_map(generic, n);
      SubquotientMap b = induced_homology_map(explicit_path, n);
      CHECK(a.matrix == b.matrix);
      CHECK(a.source.presentation() == b.source.presentation());
      CHECK(a.target.presentation() == b.target.presentation());
    }
  }
}

TEST_CASE("homomorphism correspondence pinned examples", "[correspondence]") {
  SECTION("identity functor yields the identity correspondence") {
    GroupoidPtr z2 = cyclic_group(2);
    CHECK(correspondences_equivalent(correspondence_from_homomorphism(identity_hom(z2)),
                                     identity_correspondence(z2)));
  }
  SECTION("trivial subgroup into Z/2: H_0 map is multiplication by 1") {
    GroupoidPtr z2 = cyclic_group(2);
    GroupoidHom inc = subgroupoid_hom(subgroupoid(z2, {0}, {0}));
    EtaleCorrespondence corr = correspondence_from_homomorphism(inc);
    SubquotientMap h0 = homology_map(corr, 0);
    CHECK(h0.matrix == IntMatrix::identity(1));
  }
}

TEST_CASE("action correspondences: explicit and generic paths agree",
          "[correspondence][twopath]") {
  std::vector<GSet> actions;
  actions.push_back(swap_gset());
  actions.push_back(gset_on_objects(pair_groupoid(2)));
  actions.push_back(gpdhom::testing::z2_two_fixed_points());
  const int top = 3;
  for (const GSet& xs : actions) {
    ActionCorrespondence ac = correspondence_from_action(xs);
    GModule triv_g = trivial_module(xs.groupoid());
    GModule triv_h = trivial_module(ac.transformation_groupoid);
    BarResolution p(xs.groupoid(), triv_g, top), q(ac.transformation_groupoid, triv_h, top);

    std::vector<GModuleMap> tau = explicit_action_lift(ac, p, q);
    std::vector<IntMatrix> via_tau = coinvariant_matrices_of_lift(ac.corr, p, q, tau);
    std::vector<IntMatrix> pull = action_pullback_matrices(ac, top);
    for (int n = 0; n <= top; ++n) CHECK(via_tau[n] == pull[n]);

    CorrespondenceChainMap generic = correspondence_chain_map(ac.corr, triv_g, triv_h,
                                                              rho_bar_pullback(ac.corr), top);
    CorrespondenceChainMap explicit_path = chain_map_from_matrices(
        *xs.groupoid(), *ac.transformation_groupoid, triv_g, triv_h, std::move(pull));
    for (int n = 0; n + 1 <= top; ++n) {
      SubquotientMap a = induced_homology_map(generic, n);
      SubquotientMap b = induced_homology_map(explicit_path, n);
      CHECK(a.matrix == b.matrix);
    }
  }
}

TEST_CASE("action correspondence pinned examples", "[correspondence]") {
  SECTION("canonical action on objects induces the identity") {
    GroupoidPtr p2 = pair_groupoid(2);
    ActionCorrespondence ac = correspondence_from_action(gset_on_objects(p2));
    for (int n = 0; n <= 2; ++n) {
      SubquotientMap m = homology_map(ac.corr, n);
      CHECK(m.source.presentation() == m.target.presentation());
      CHECK(m.matrix ==
            SubquotientMap::reduce_matrix(m.target.presentation(),
                                          IntMatrix::identity(m.matrix.rows())));
    }
  }
  SECTION("swap action: H0 is multiplication by the fiber size, odd homology dies") {
    // tau pulls the object class back to the sum over the two points, which
    // is twice the generator of H0 of the transformation groupoid.
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    SubquotientMap h0 = homology_map(ac.corr, 0);
    CHECK(h0.source.presentation() == FGAbelianGroup::free(1));
    CHECK(h0.target.presentation() == FGAbelianGroup::free(1));
    CHECK(abs(h0.matrix.at(0, 0)) == 2);
    SubquotientMap h1 = homology_map(ac.corr, 1);
    CHECK(h1.source.presentation() == FGAbelianGroup{{Int(2)}, 0});
    CHECK(h1.target.presentation().is_trivial());
    SubquotientMap h3 = homology_map(ac.corr, 3);
    CHECK(h3.source.presentation() == FGAbelianGroup{{Int(2)}, 0});
    CHECK(h3.target.presentation().is_trivial());
  }
}

TEST_CASE("composition of correspondences", "[correspondence][compose]") {
  SECTION("composing with the identity is equivalent to the original") {
    GroupoidPtr z2 = cyclic_group(2);
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    EtaleCorrespondence pre = compose(identity_correspondence(z2), ac.corr);
    EtaleCorrespondence post = compose(ac.corr, identity_correspondence(ac.transformation_groupoid));
    CHECK(correspondences_equivalent(pre, ac.corr));
    CHECK(correspondences_equivalent(post, ac.corr));
  }
  SECTION("pair collapse composed with the identity of the point") {
    EtaleCorrespondence c = collapse_correspondence(2);
    EtaleCorrespondence cc = compose(c, identity_correspondence(trivial_groupoid()));
    CHECK(correspondences_equivalent(c, cc));
  }
  SECTION("composite point count by orbit enumeration") {
    // swap action corr (Z/2 -> H) followed by collapse-to-point of H.
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    EtaleCorrespondence to_point =
        correspondence_from_homomorphism(hom_to_point(ac.transformation_groupoid));
    EtaleCorrespondence comp = compose(ac.corr, to_point);
    // oracle: matched pairs / free H-orbit size
    int pairs = 0;
    for (int w = 0; w < ac.corr.point_count(); ++w)
      for (int l = 0; l < to_point.point_count(); ++l)
        if (ac.corr.sigma(w) == to_point.rho(l)) ++pairs;
    CHECK(comp.point_count() * ac.transformation_groupoid->arrow_count() / 2 == pairs);
  }
  SECTION("delta is natural in the module argument") {
    // square at the total-space level: delta_N' . Ind(f) = f . delta_N
    GroupoidPtr p2 = pair_groupoid(2);
    std::vector<EtaleCorrespondence> corrs;
    corrs.push_back(identity_correspondence(p2));
    corrs.push_back(subgroupoid_correspondence(full_subgroupoid(p2, {0})));
    for (const auto& corr : corrs) {
      GroupoidPtr h = corr.target_groupoid();
      GSet arrows = gset_on_arrows_left(h), objects = gset_on_objects(h);
      std::vector<int> rmap;
      for (int a = 0; a < h->arrow_count(); ++a) rmap.push_back(h->range(a));
      GModuleMap f = pushforward(arrows, objects, rmap);
      DeltaMap d_src = delta(corr, f.source);
      DeltaMap d_tgt = delta(corr, f.target);
      GModuleMap ind_f = induce_module_map(corr, f);
      CHECK(d_tgt.ambient * ind_f.total_matrix() == f.total_matrix() * d_src.ambient);
    }
  }
  SECTION("delta composition square through the kappa identification") {
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    EtaleCorrespondence to_point =
        correspondence_from_homomorphism(hom_to_point(ac.transformation_groupoid));
    ComposedCorrespondence comp = compose_detailed(ac.corr, to_point);
    for (const GModule& n : {trivial_module(to_point.target_groupoid())}) {
      GModuleMap kappa = induction_composition_iso(ac.corr, to_point, comp, n);
      CHECK(is_unimodular(kappa.total_matrix()));
      DeltaMap d_composite = delta(comp.corr, n);
      DeltaMap d_outer = delta(ac.corr, induce_module(to_point, n));
      DeltaMap d_inner = delta(to_point, n);
      CHECK(d_composite.ambient * kappa.total_matrix() == d_inner.ambient * d_outer.ambient);
    }
  }
  SECTION("functoriality on homology") {
    ActionCorrespondence ac = correspondence_from_action(swap_gset());
    EtaleCorrespondence to_point =
        correspondence_from_homomorphism(hom_to_point(ac.transformation_groupoid));
    EtaleCorrespondence comp = compose(ac.corr, to_point);
    for (int n = 0; n <= 2; ++n) {
      SubquotientMap lhs = homology_map(comp, n);
      SubquotientMap rhs = compose(homology_map(to_point, n), homology_map(ac.corr, n));
      CHECK(lhs.matrix == rhs.matrix);
      CHECK(lhs.source.presentation() == rhs.source.presentation());
      CHECK(lhs.target.presentation() == rhs.target.presentation());
    }
  }
}
