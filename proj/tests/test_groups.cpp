#include "ade/groups.hpp"

#include "ade/errors.hpp"
#include "ade/group_data.hpp"
#include "doctest.h"

using namespace ade;

TEST_CASE("group orders and class counts") {
    struct Row {
        const char* name;
        long order;
        size_t classes;
    };
    for (const Row& r : {Row{"A1", 2, 2}, Row{"A2", 3, 3}, Row{"A5", 6, 6}, Row{"D4", 8, 5},
                         Row{"D5", 12, 6}, Row{"D12", 40, 13}, Row{"E6", 24, 7}, Row{"E7", 48, 8},
                         Row{"E8", 120, 9}}) {
        const ADEGroup& g = build_group(GroupSpec::parse(r.name));
        CHECK(g.order() == r.order);
        CHECK(g.classes().size() == r.classes);
        long sum = 0;
        for (const auto& c : g.classes()) {
            sum += c.size;
            CHECK(c.centralizer_order * c.size == g.order());
            CHECK(c.age >= 0);
            CHECK(c.age < 1);
        }
        CHECK(sum == g.order());
        CHECK(g.classes()[g.class_of(g.identity_index())].age == 0);
    }
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(GroupSpec::parse("A0"), InvalidParameter);
    CHECK_THROWS_AS(GroupSpec::parse("D3"), InvalidParameter);
    CHECK_THROWS_AS(GroupSpec::parse("Q7"), InvalidParameter);
    const ADEGroup& e7 = build_group(GroupSpec::parse("E7"));
    CHECK_THROWS_AS(e7.class_index("zz"), UnknownClass);
}

TEST_CASE("E7 class data from the paper") {
    const ADEGroup& g = build_group(GroupSpec::parse("E7"));
    // eight classes named [1],[-1],[ab],[b],[c^2],[c],[a],[a^3]
    CHECK(g.cls("1").size == 1);
    CHECK(g.cls("-1").size == 1);
    CHECK(g.cls("ab").size == 12);
    CHECK(g.cls("b").size == 6);
    CHECK(g.cls("b").centralizer_order == 8);   // coefficient 8 B(1/4)+B(3/4)
    CHECK(g.cls("a").centralizer_order == 8);
    CHECK(g.cls("ab").centralizer_order == 4);
    CHECK(g.cls("c").centralizer_order == 6);
    CHECK(g.cls("a").age == rat(1, 8));
    CHECK(g.cls("a^3").age == rat(3, 8));
    CHECK(g.cls("b").age == rat(1, 4));
    CHECK(g.cls("ab").age == rat(1, 4));
    CHECK(g.cls("c").age == rat(1, 6));
    CHECK(g.cls("c^2").age == rat(1, 3));
    CHECK(g.cls("-1").age == rat(1, 2));
}

TEST_CASE("E8 class data from the paper") {
    const ADEGroup& g = build_group(GroupSpec::parse("E8"));
    CHECK(g.cls("a").centralizer_order == 10);  // coefficient 10 (B(1/10)+B(9/10))
    CHECK(g.cls("a").age == rat(1, 10));
    CHECK(g.cls("a^2").age == rat(1, 5));
    CHECK(g.cls("a^3").age == rat(3, 10));
    CHECK(g.cls("a^4").age == rat(2, 5));
    CHECK(g.cls("b").age == rat(1, 6));
    CHECK(g.cls("b^2").age == rat(1, 3));
    CHECK(g.cls("ab").age == rat(1, 4));
    CHECK(g.cls("b").size == 20);
    CHECK(g.cls("ab").size == 30);
}

TEST_CASE("D_n class data per the paper's indexing") {
    for (int n : {4, 5, 8, 11}) {
        const ADEGroup& g = build_group({GroupKind::D, n});
        CHECK(g.order() == 4 * n - 8);
        // ages: k/(2n-4) on a^k, 1/2 on the central class, 1/4 on b and ab
        for (int k = 1; k <= n - 3; ++k) {
            std::string lab = k == 1 ? "a" : "a^" + std::to_string(k);
            CHECK(g.cls(lab).age == rat(k, 2 * n - 4));
            CHECK(g.cls(lab).centralizer_order == 2 * n - 4);
        }
        CHECK(g.cls("a^" + std::to_string(n - 2)).age == rat(1, 2));
        CHECK(g.cls("-1").age == rat(1, 2));  // alias for the central class
        CHECK(g.cls("b").age == rat(1, 4));
        CHECK(g.cls("ab").age == rat(1, 4));
        CHECK(g.cls("b").centralizer_order == 4);
        CHECK(g.cls("ab").centralizer_order == 4);
    }
}

TEST_CASE("A_n is cyclic with roots-of-unity characters") {
    const ADEGroup& g = build_group({GroupKind::A, 2});  // Z_3
    CHECK(g.order() == 3);
    // table equals the 3x3 DFT matrix in zeta_3
    const auto& ct = g.character_table();
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(ct.values[j][k] == Cyclo::zeta(3, j * k));
    CHECK(g.cls("a").age == rat(1, 3));
}

TEST_CASE("trivial character is constant 1") {
    for (const char* name : {"A3", "D6", "E6", "E7", "E8"}) {
        const ADEGroup& g = build_group(GroupSpec::parse(name));
        int t = g.character_table().trivial_index();
        for (const Cyclo& v : g.character_table().values[t]) CHECK(v == Cyclo(rat(1)));
    }
}

TEST_CASE("E8 character value at [a] is the golden ratio") {
    const ADEGroup& g = build_group(GroupSpec::parse("E8"));
    REQUIRE(g.rho1_irrep_index().has_value());
    const Cyclo& v = g.character_table().values[*g.rho1_irrep_index()][g.class_index("a")];
    // (1+sqrt5)/2 = 1 + zeta_5 + zeta_5^4
    Cyclo golden = Cyclo(rat(1)) + Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4);
    CHECK(v == golden);
    // and the transition-matrix entry |[a]| chi/dim = 3(1+sqrt5)
    Cyclo entry = v * rat(12, 2);
    Cyclo sqrt5 = Cyclo(rat(1)) + (Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4)) * rat(2);
    CHECK(entry == (Cyclo(rat(1)) + sqrt5) * rat(3));
}

TEST_CASE("presentation relations are verified at build time") {
    CHECK(build_group(GroupSpec::parse("E7")).verified_relations().size() >= 3);
    CHECK(build_group(GroupSpec::parse("E8")).verified_relations().size() == 3);
}

TEST_CASE("mckay graphs reproduce the affine ADE diagrams") {
    for (const char* name : {"A1", "A2", "A7", "A12", "D4", "D5", "D9", "D12", "E6", "E7", "E8"}) {
        GroupSpec spec = GroupSpec::parse(name);
        const ADEGroup& g = build_group(spec);
        auto adj = mckay_graph(g);
        GroupSpec got = classify_affine_diagram(adj);
        CHECK(got.kind == spec.kind);
        CHECK(got.n == spec.n);
        // McKay's observation: the dimension vector is the Perron kernel of
        // the affine Cartan matrix, A * dim = 2 * dim.
        const auto& irr = g.character_table().irreps;
        for (size_t i = 0; i < adj.size(); ++i) {
            long s = 0;
            for (size_t j = 0; j < adj.size(); ++j) s += adj[i][j] * irr[j].dim;
            CHECK(s == 2 * irr[i].dim);
        }
    }
}

TEST_CASE("regular representation trivial count: 2 for A, 1 for D/E") {
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("A1"))) == 2);
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("A6"))) == 2);
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("D7"))) == 1);
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("E6"))) == 1);
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("E7"))) == 1);
    CHECK(regular_rep_trivial_count(build_group(GroupSpec::parse("E8"))) == 1);
}

TEST_CASE("hodge bundle ranks per Prop. 15") {
    const ADEGroup& a = build_group(GroupSpec::parse("A4"));
    const ADEGroup& d = build_group(GroupSpec::parse("D5"));
    const ADEGroup& e7 = build_group(GroupSpec::parse("E7"));
    CHECK(hodge_bundle_rank(a, 1, 0, 0, Sector::trivial) == 2);    // 2g
    CHECK(hodge_bundle_rank(d, 1, 1, 1, Sector::trivial) == 1);    // 2g-1
    CHECK(hodge_bundle_rank(e7, 1, 1, 0, Sector::nontrivial) == 1);
    CHECK(hodge_bundle_rank(a, 0, 3, 3, Sector::trivial) == 0);
    CHECK(hodge_bundle_rank(e7, 2, 3, 1, Sector::nontrivial) == 2 * 2 - 2 + 3 - 1);
    CHECK_THROWS_AS(hodge_bundle_rank(a, 1, 2, 1, Sector::trivial), InvalidSector);
    // Orbifold Riemann-Roch bookkeeping: r0 - r1 = 2 - 2g - (n - m).
    for (int g = 1; g <= 3; ++g) {
        CHECK(hodge_bundle_rank_r0(a, g, Sector::trivial) -
                  hodge_bundle_rank(a, g, 2, 2, Sector::trivial) ==
              2 - 2 * g);
        CHECK(hodge_bundle_rank_r0(e7, g, Sector::trivial) -
                  hodge_bundle_rank(e7, g, 2, 2, Sector::trivial) ==
              2 - 2 * g);
        for (int n = 1; n <= 3; ++n)
            CHECK(hodge_bundle_rank_r0(e7, g, Sector::nontrivial) -
                      hodge_bundle_rank(e7, g, n, 0, Sector::nontrivial) ==
                  2 - 2 * g - n);
    }
}

TEST_CASE("corrupt character data is rejected") {
    auto input = make_type_d_input(5);
    input.chartable.values[1][2] = Cyclo(rat(7));  // break orthogonality
    CHECK_THROWS_AS(ADEGroup::build_from(input), ValidationError);
    auto input2 = make_type_a_input(3);
    input2.order = 5;
    CHECK_THROWS_AS(ADEGroup::build_from(input2), ValidationError);
}
