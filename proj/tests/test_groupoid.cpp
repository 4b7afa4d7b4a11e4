#include <catch2/catch_amalgamated.hpp>

#include "gpdhom/abelian.hpp"
#include "gpdhom/nerve.hpp"
#include "helpers.hpp"

using namespace gpdhom;
using gpdhom::testing::corpus;
using gpdhom::testing::exhaustive_isomorphic;
using gpdhom::testing::swap_gset;

TEST_CASE("builders produce the expected shapes", "[groupoid]") {
  GroupoidPtr z2 = cyclic_group(2);
  CHECK(z2->object_count() == 1);
  CHECK(z2->arrow_count() == 2);
  CHECK(z2->inverse(1) == 1);

  GroupoidPtr p2 = pair_groupoid(2);
  CHECK(p2->object_count() == 2);
  CHECK(p2->arrow_count() == 4);
  CHECK(p2->orbit_count() == 1);

  GroupoidPtr du = disjoint_union(*z2, *p2);
  CHECK(du->object_count() == 3);
  CHECK(du->arrow_count() == 6);
  CHECK(du->orbit_count() == 2);

  CHECK(empty_groupoid()->object_count() == 0);
  CHECK_THROWS_AS(from_group({"a", "b"}, {{0, 0}, {0, 0}}), ValidationError);
}

TEST_CASE("validation reports violations with witnesses", "[groupoid]") {
  SECTION("valid groupoid validates") {
    CHECK(validate_groupoid(cyclic_group(2)->data()).ok());
  }
  SECTION("composite for a non-composable pair") {
    GroupoidData d = pair_groupoid(2)->data();
    // arrow 1 = (0|1) with source p1; arrow 2 = (1|0) with range p1 -- the
    // pair (1,2) is composable, (1,1) is not.
    d.set_compose(1, 1, 0);
    ValidationReport rep = validate_groupoid(d);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.first().rule == "not composable");
  }
  SECTION("broken associativity is caught with the offending triple") {
    GroupoidData d = cyclic_group(3)->data();
    d.set_compose(1, 1, 1);  // g1*g1 should be g2
    ValidationReport rep = validate_groupoid(d);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found = found || v.rule == "associativity";
    CHECK(found);
  }
}

TEST_CASE("nerve sizes", "[groupoid][nerve]") {
  SECTION("group: |G|^n") {
    GroupoidPtr z2 = cyclic_group(2);
    CHECK(Nerve::compute(*z2, 2).size() == 4);
    for (int n = 0; n <= 4; ++n) {
      int expect = n == 0 ? 1 : 1 << n;
      CHECK(Nerve::compute(*z2, n).size() == expect);
    }
  }
  SECTION("pair groupoid on 2 points, n = 2, against brute enumeration") {
    GroupoidPtr p2 = pair_groupoid(2);
    int count = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (p2->source(a) == p2->range(b)) ++count;
    CHECK(count == 8);
    CHECK(Nerve::compute(*p2, 2).size() == count);
  }
  SECTION("pair groupoid sizes k * k^n") {
    GroupoidPtr p3 = pair_groupoid(3);
    for (int n = 0; n <= 3; ++n) {
      int expect = 3;
      for (int i = 0; i < n; ++i) expect *= 3;
      CHECK(Nerve::compute(*p3, n).size() == expect);
    }
  }
  SECTION("degree zero is the object list") {
    GroupoidPtr p2 = pair_groupoid(2);
    Nerve n0 = Nerve::compute(*p2, 0);
    REQUIRE(n0.size() == 2);
    CHECK(n0.tuple(0) == std::vector<int>{0});
    CHECK(n0.tuple(1) == std::vector<int>{1});
  }
  SECTION("lexicographic order and no duplicates") {
    GroupoidPtr p2 = pair_groupoid(2);
    Nerve n2 = Nerve::compute(*p2, 2);
    for (int i = 0; i + 1 < n2.size(); ++i) CHECK(n2.tuple(i) < n2.tuple(i + 1));
  }
}

TEST_CASE("face matrices", "[groupoid][nerve]") {
  GroupoidPtr z2 = cyclic_group(2);
  SECTION("matui n=2, i=1 composes the two arrows") {
    Nerve n2 = Nerve::compute(*z2, 2), n1 = Nerve::compute(*z2, 1);
    IntMatrix f = face_matrix(*z2, 2, 1, FaceVariant::matui);
    for (int col = 0; col < n2.size(); ++col) {
      auto t = n2.tuple(col);
      int expected_row = n1.index_of({z2->compose(t[0], t[1])});
      CHECK(f.at(expected_row, col) == 1);
    }
  }
  SECTION("matui n=1: source and range projections") {
    GroupoidPtr p2 = pair_groupoid(2);
    IntMatrix e0 = face_matrix(*p2, 1, 0, FaceVariant::matui);
    IntMatrix e1 = face_matrix(*p2, 1, 1, FaceVariant::matui);
    for (int a = 0; a < 4; ++a) {
      CHECK(e0.at(p2->source(a), a) == 1);
      CHECK(e1.at(p2->range(a), a) == 1);
    }
  }
  SECTION("every face column sums to one") {
    for (const auto& entry : corpus()) {
      const FiniteGroupoid& g = *entry.groupoid;
      for (int n = 1; n <= 2; ++n)
        for (int i = 0; i <= n; ++i)
          for (FaceVariant v : {FaceVariant::resolution, FaceVariant::matui}) {
            IntMatrix f = face_matrix(g, n, i, v);
            std::vector<Int> sums(f.cols(), Int(0));
            for (const auto& [ij, val] : f.entries()) {
              CHECK(val == 1);
              sums[ij.second] += val;
            }
            for (const Int& s : sums) CHECK(s == 1);
          }
    }
  }
  SECTION("face index out of range") {
    CHECK_THROWS_AS(face_matrix(*z2, 2, 3, FaceVariant::matui), std::invalid_argument);
    CHECK_THROWS_AS(face_matrix(*z2, 0, 0, FaceVariant::matui), std::invalid_argument);
  }
}

TEST_CASE("boundary matrices", "[groupoid][nerve]") {
  SECTION("matui boundary vanishes in degree 1 on a group") {
    CHECK(boundary_matrix(*cyclic_group(2), 1, FaceVariant::matui).is_zero());
  }
  SECTION("pair groupoid degree-1 boundary has rank 1 and cokernel Z") {
    IntMatrix b1 = boundary_matrix(*pair_groupoid(2), 1, FaceVariant::matui);
    SmithDecomposition dec = smith_normal_form(b1);
    CHECK(dec.rank == 1);
    QuotientPresentation q = quotient_presentation(2, b1);
    CHECK(q.group == FGAbelianGroup::free(1));
  }
  SECTION("boundary(n) * boundary(n+1) == 0, both variants, corpus") {
    for (const auto& entry : corpus()) {
      const FiniteGroupoid& g = *entry.groupoid;
      const int top = g.arrow_count() <= 4 ? 6 : 4;
      for (int n = 1; n < top; ++n) {
        CHECK((boundary_matrix(g, n, FaceVariant::matui) *
               boundary_matrix(g, n + 1, FaceVariant::matui))
                  .is_zero());
        CHECK((boundary_matrix(g, n - 1, FaceVariant::resolution) *
               boundary_matrix(g, n, FaceVariant::resolution))
                  .is_zero());
      }
    }
  }
}

TEST_CASE("contracting homotopy", "[groupoid][nerve]") {
  SECTION("h0 is the unit inclusion") {
    GroupoidPtr p2 = pair_groupoid(2);
    IntMatrix h0 = homotopy_matrix(*p2, 0);
    Nerve n1 = Nerve::compute(*p2, 1);
    for (int x = 0; x < 2; ++x) CHECK(h0.at(n1.index_of({p2->unit(x)}), x) == 1);
  }
  SECTION("h1 prepends the unit at the range") {
    GroupoidPtr p2 = pair_groupoid(2);
    IntMatrix h1 = homotopy_matrix(*p2, 1);
    Nerve n2 = Nerve::compute(*p2, 2);
    for (int a = 0; a < 4; ++a)
      CHECK(h1.at(n2.index_of({p2->unit(p2->range(a)), a}), a) == 1);
  }
  SECTION("boundary(n+1) h(n+1) + h(n) boundary(n) = id on Z[G^{n+1}]") {
    for (const auto& entry : corpus()) {
      const FiniteGroupoid& g = *entry.groupoid;
      for (int n = 0; n <= 3; ++n) {
        IntMatrix lhs = boundary_matrix(g, n + 1, FaceVariant::resolution) *
                            homotopy_matrix(g, n + 1) +
                        homotopy_matrix(g, n) * boundary_matrix(g, n, FaceVariant::resolution);
        CHECK(lhs == IntMatrix::identity(Nerve::compute(g, n + 1).size()));
      }
    }
  }
}

TEST_CASE("G-sets and action groupoids", "[groupoid][gset]") {
  SECTION("swap action groupoid is the pair groupoid") {
    GroupoidPtr h = action_groupoid(swap_gset());
    CHECK(h->object_count() == 2);
    CHECK(h->arrow_count() == 4);
    CHECK(exhaustive_isomorphic(*h, *pair_groupoid(2)));
  }
  SECTION("two fixed points give Z/2 + Z/2") {
    GroupoidPtr h = action_groupoid(gpdhom::testing::z2_two_fixed_points());
    CHECK(h->object_count() == 2);
    CHECK(h->arrow_count() == 4);
    CHECK_FALSE(exhaustive_isomorphic(*h, *pair_groupoid(2)));
    CHECK(exhaustive_isomorphic(*h, *disjoint_union(*cyclic_group(2), *cyclic_group(2))));
  }
  SECTION("invalid action tables are rejected") {
    GroupoidPtr z2 = cyclic_group(2);
    GSetData d;
    d.point_names = {"x"};
    d.anchor = {0};
    d.action = {0, -1};  // generator must act
    CHECK_THROWS_AS(GSet::create(z2, d), ValidationError);
  }
  SECTION("canonical object action recovers the groupoid structure") {
    GroupoidPtr p2 = pair_groupoid(2);
    GroupoidPtr h = action_groupoid(gset_on_objects(p2));
    CHECK(exhaustive_isomorphic(*h, *p2));
  }
}

TEST_CASE("subgroupoids", "[groupoid]") {
  GroupoidPtr p2 = pair_groupoid(2);
  SECTION("full subgroupoid on one object of the pair groupoid") {
    SubgroupoidInclusion inc = full_subgroupoid(p2, {0});
    CHECK(inc.child->object_count() == 1);
    CHECK(inc.child->arrow_count() == 1);
    CHECK(inc.arrow_map == std::vector<int>{0});
  }
  SECTION("closure violations are reported") {
    // arrows (0|1) and its inverse without the composite (0|0)... the
    // composite (0|1)(1|0) = (0|0) is missing, as are the units.
    CHECK_THROWS_AS(subgroupoid(p2, {0, 1}, {1, 2}), ValidationError);
  }
  SECTION("generated subgroupoid closes up") {
    SubgroupoidInclusion inc = subgroupoid_generated(p2, {1});  // (0|1)
    CHECK(inc.child->object_count() == 2);
    CHECK(inc.child->arrow_count() == 4);  // whole pair groupoid
  }
  SECTION("unit subgroupoid") {
    SubgroupoidInclusion inc = unit_subgroupoid(p2);
    CHECK(inc.child->arrow_count() == 2);
    for (int a = 0; a < inc.child->arrow_count(); ++a) CHECK(inc.child->is_unit(a));
  }
}
