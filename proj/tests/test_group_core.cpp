#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <charlab/charlab.hpp>

using namespace charlab;

namespace {

FiniteGroup by_recipe(const std::string& text) {
    return build(parse_recipe_string(text), 4096);
}

// Brute-force normality filter used as the oracle for normal_subgroups.
std::vector<SubgroupSet> normals_by_filter(const FiniteGroup& g) {
    std::vector<SubgroupSet> out;
    for (const SubgroupSet& s : all_subgroups(g))
        if (is_normal(g, s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("permutation construction and arithmetic") {
    Permutation r = Permutation::from_cycles({{1, 2, 3, 4}}, 4);
    Permutation s = Permutation::from_cycles({{2, 4}}, 4);

    CHECK(r.degree() == 4);
    CHECK(r.apply(0) == 1);
    CHECK(r.apply(3) == 0);
    CHECK(s.apply(0) == 0);

    // (r*s) applies s first
    CHECK((r * s).apply(1) == 0);
    CHECK((r.inverse() * r).is_identity());
    CHECK(Permutation::identity(5).is_identity());
    CHECK(r.to_cycle_string() == "(1 2 3 4)");
    CHECK(s.to_cycle_string() == "(2 4)");
    CHECK(Permutation::identity(3).to_cycle_string() == "()");

    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::from_cycles({{1, 5}}, 4), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::from_cycles({{1, 2}, {2, 3}}, 4), InvalidPermutation);
}

TEST_CASE("generator closure produces the expected groups") {
    FiniteGroup s3 = FiniteGroup::close_generators(
        {Permutation::from_cycles({{1, 2, 3}}, 3), Permutation::from_cycles({{1, 2}}, 3)}, 100);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());

    FiniteGroup d8 = FiniteGroup::close_generators(
        {Permutation::from_cycles({{1, 2, 3, 4}}, 4), Permutation::from_cycles({{2, 4}}, 4)}, 100);
    CHECK(d8.order() == 8);
    CHECK(d8.exponent() == 4);
    CHECK(d8.element_perms().size() == 8);

    // no generators: the trivial group
    FiniteGroup triv = FiniteGroup::close_generators({}, 100);
    CHECK(triv.order() == 1);
    CHECK(triv.identity() == 0);

    CHECK_THROWS_AS(FiniteGroup::close_generators(
                        {Permutation::from_cycles({{1, 2, 3, 4, 5, 6, 7}}, 7)}, 5),
                    OrderExceeded);
}

TEST_CASE("group axioms hold on every element of closed groups") {
    for (const char* r : {"dihedral:8", "symmetric:4", "heisenberg:3", "Q8"}) {
        FiniteGroup g = by_recipe(r);
        INFO("recipe " << r);
        int e = g.identity();
        for (int a = 0; a < g.order(); ++a) {
            CHECK(g.mul(e, a) == a);
            CHECK(g.mul(a, e) == a);
            CHECK(g.mul(a, g.inverse(a)) == e);
            CHECK(g.power(a, g.element_order(a)) == e);
            CHECK(g.power(a, -1) == g.inverse(a));
        }
        // spot-check associativity beyond what the builders guarantee
        for (int a = 0; a < g.order(); a += 3)
            for (int b = 0; b < g.order(); b += 2)
                for (int c = 0; c < g.order(); c += 5)
                    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        CHECK(g.order() % g.exponent() == 0);
    }
}

TEST_CASE("cayley table validation accepts groups and rejects non-groups") {
    // C4 written out directly
    std::vector<std::vector<int>> c4 = {
        {0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    FiniteGroup g = FiniteGroup::from_cayley_table(c4);
    CHECK(g.order() == 4);
    CHECK(g.element_order(1) == 4);

    // commutative Latin square of order 5 that is not associative:
    // a*b = 2a+2b mod 5 has no identity and fails Light's test
    std::vector<std::vector<int>> quasi(5, std::vector<int>(5));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) quasi[a][b] = (2 * a + 2 * b) % 5;
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(quasi), Error);

    std::vector<std::vector<int>> not_latin = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(not_latin), Error);

    std::vector<std::vector<int>> ragged = {{0, 1}, {1}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(ragged), Error);
}

TEST_CASE("subgroup helpers on dihedral and quaternion groups") {
    FiniteGroup d8 = by_recipe("D8");
    SubgroupSet z = center(d8);
    SubgroupSet der = commutator_subgroup(d8);
    CHECK(z.order() == 2);
    CHECK(der.order() == 2);
    CHECK(z == der);
    CHECK(is_normal(d8, z));

    // a reflection generates a non-normal order-2 subgroup
    int refl = -1;
    for (int x = 0; x < 8; ++x)
        if (!z.contains(x) && d8.element_order(x) == 2) {
            SubgroupSet h = subgroup_generated(d8, {x});
            if (!is_normal(d8, h)) {
                refl = x;
                break;
            }
        }
    REQUIRE(refl >= 0);

    FiniteGroup q8 = by_recipe("Q8");
    CHECK(center(q8).order() == 2);
    // every subgroup of Q8 is normal
    for (const SubgroupSet& s : all_subgroups(q8)) CHECK(is_normal(q8, s));
    CHECK(all_subgroups(q8).size() == 6);

    FiniteGroup s3 = by_recipe("S3");
    CHECK(center(s3).order() == 1);
    CHECK(commutator_subgroup(s3).order() == 3);
    CHECK(all_subgroups(s3).size() == 6);

    CHECK(normal_closure(s3, {s3.order() - 1}).order() >= 3);
    CHECK(subgroup_exponent(d8, z) == 2);
}

TEST_CASE("subgroup counts match classical values") {
    CHECK(all_subgroups(by_recipe("D8")).size() == 10);
    // Gaussian binomial sum for the rank-5 elementary abelian 2-group
    CHECK(all_subgroups(by_recipe("abelian:2,2,2,2,2")).size() == 374);
    CHECK(normal_subgroups(by_recipe("symmetric:4")).size() == 4);
    CHECK(normal_subgroups(by_recipe("heisenberg:3")).size() == 7);
    CHECK(all_subgroups(by_recipe("heisenberg:3")).size() == 19);
}

TEST_CASE("elementary abelian detection") {
    CHECK(is_elementary_abelian(by_recipe("abelian:2,2,2")) == 2);
    CHECK(is_elementary_abelian(by_recipe("abelian:3,3")) == 3);
    CHECK(is_elementary_abelian(by_recipe("cyclic:1")) == 1);
    CHECK_FALSE(is_elementary_abelian(by_recipe("cyclic:4")).has_value());
    CHECK_FALSE(is_elementary_abelian(by_recipe("cyclic:6")).has_value());
    CHECK_FALSE(is_elementary_abelian(by_recipe("D8")).has_value());
}

TEST_CASE("normal subgroup lattice equals the brute-force filter") {
    // the full comparison over the whole catalog lives in the acceptance
    // run; here a representative slice incl. one group of each texture
    for (const char* r :
         {"D8", "Q8", "S3", "S4", "M4(2)", "heisenberg:3", "ES32minus", "heisenberg:4",
          "abelian:2,4", "cyclic:12", "abelian:2,2,2,2"}) {
        FiniteGroup g = by_recipe(r);
        INFO("recipe " << r);
        std::vector<SubgroupSet> fast = normal_subgroups(g);
        std::sort(fast.begin(), fast.end());
        CHECK(fast == normals_by_filter(g));
    }
}

TEST_CASE("quotient projection is a surjective homomorphism with kernel N") {
    for (const char* r : {"D8", "S4", "heisenberg:3", "Q16"}) {
        FiniteGroup g = by_recipe(r);
        INFO("recipe " << r);
        for (const SubgroupSet& n : normal_subgroups(g)) {
            Quotient q = quotient(g, n);
            CHECK(q.group.order() * n.order() == g.order());
            for (int a = 0; a < g.order(); ++a)
                for (int b = 0; b < g.order(); ++b)
                    CHECK(q.coset_of[static_cast<std::size_t>(g.mul(a, b))] ==
                          q.group.mul(q.coset_of[static_cast<std::size_t>(a)],
                                      q.coset_of[static_cast<std::size_t>(b)]));
            int id_coset = q.coset_of[static_cast<std::size_t>(g.identity())];
            for (int a = 0; a < g.order(); ++a)
                CHECK((q.coset_of[static_cast<std::size_t>(a)] == id_coset) == n.contains(a));
        }
    }

    // quotient by a non-normal subgroup is refused
    FiniteGroup d8 = by_recipe("D8");
    SubgroupSet z = center(d8);
    bool refused = false;
    for (int x = 0; x < d8.order() && !refused; ++x) {
        if (z.contains(x) || d8.element_order(x) != 2) continue;
        SubgroupSet h = subgroup_generated(d8, {x});
        if (is_normal(d8, h)) continue;
        CHECK_THROWS_AS(quotient(d8, h), NotNormal);
        refused = true;
    }
    CHECK(refused);
}

TEST_CASE("known quotient isomorphism types") {
    FiniteGroup d8 = by_recipe("D8");
    FiniteGroup v4 = by_recipe("abelian:2,2");
    CHECK(is_isomorphic(quotient(d8, center(d8)).group, v4));

    FiniteGroup q8 = by_recipe("Q8");
    CHECK(is_isomorphic(quotient(q8, center(q8)).group, v4));

    FiniteGroup s4 = by_recipe("S4");
    SubgroupSet v = [&] {
        for (const SubgroupSet& n : normal_subgroups(s4))
            if (n.order() == 4) return n;
        FAIL("S4 has a normal fours group");
        return SubgroupSet();
    }();
    CHECK(is_isomorphic(quotient(s4, v).group, by_recipe("S3")));
}

TEST_CASE("isomorphism testing separates same-order groups") {
    CHECK(is_isomorphic(by_recipe("D8"), by_recipe("dihedral:8")));
    CHECK(is_isomorphic(by_recipe("extraspecial:2,plus"), by_recipe("D8")));
    CHECK(is_isomorphic(by_recipe("extraspecial:2,minus"), by_recipe("Q8")));
    CHECK_FALSE(is_isomorphic(by_recipe("D8"), by_recipe("Q8")));
    CHECK_FALSE(is_isomorphic(by_recipe("cyclic:4"), by_recipe("abelian:2,2")));
    CHECK_FALSE(is_isomorphic(by_recipe("D8"), by_recipe("cyclic:8")));
    // both order 32 with identical degree sets; only the involution count differs
    CHECK_FALSE(is_isomorphic(by_recipe("ES32plus"), by_recipe("ES32minus")));
}

TEST_CASE("isoclinism identifies groups up to central factors") {
    CHECK(is_isoclinic(by_recipe("D8"), by_recipe("D8")));
    CHECK(is_isoclinic(by_recipe("D8"), by_recipe("Q8")));
    CHECK(is_isoclinic(by_recipe("D8"), by_recipe("D8xC2")));
    CHECK(is_isoclinic(by_recipe("heisenberg:3"), by_recipe("Heis27xC3")));
    CHECK_FALSE(is_isoclinic(by_recipe("D8"), by_recipe("abelian:2,2,2")));
    CHECK_FALSE(is_isoclinic(by_recipe("D8"), by_recipe("heisenberg:3")));
    // abelian groups are all isoclinic to the trivial group
    CHECK(is_isoclinic(by_recipe("cyclic:4"), by_recipe("abelian:2,2,2")));
}

TEST_CASE("nilpotency class and lower central series") {
    CHECK(nilpotency_class(by_recipe("cyclic:6")) == 1);
    CHECK(nilpotency_class(by_recipe("D8")) == 2);
    CHECK(nilpotency_class(by_recipe("heisenberg:3")) == 2);
    CHECK(nilpotency_class(by_recipe("D16")) == 3);
    CHECK(nilpotency_class(by_recipe("S3")) < 0);
    CHECK(nilpotency_class(by_recipe("S4")) < 0);

    auto series = lower_central_series(by_recipe("D16"));
    REQUIRE(series.size() >= 2);
    for (std::size_t i = 1; i < series.size(); ++i)
        CHECK(series[i - 1].contains(series[i]));
}

TEST_CASE("conjugacy classes partition the group in canonical order") {
    for (const char* r : {"S4", "D8", "Q16", "heisenberg:3"}) {
        FiniteGroup g = by_recipe(r);
        INFO("recipe " << r);
        ConjugacyClasses cc = conjugacy_classes(g);
        CHECK(cc.class_of[static_cast<std::size_t>(g.identity())] == 0);
        int total = 0;
        int prev_min = -1;
        for (int c = 0; c < cc.num_classes; ++c) {
            total += static_cast<int>(cc.members[static_cast<std::size_t>(c)].size());
            CHECK(cc.representative[static_cast<std::size_t>(c)] >
                  prev_min);  // sorted by minimal member
            prev_min = cc.representative[static_cast<std::size_t>(c)];
            CHECK(g.order() % static_cast<int>(cc.members[static_cast<std::size_t>(c)].size()) ==
                  0);  // orbit-stabilizer
            for (int x : cc.members[static_cast<std::size_t>(c)])
                CHECK(cc.class_of[static_cast<std::size_t>(x)] == c);
        }
        CHECK(total == g.order());
        // inverse_class is an involution compatible with element inverses
        for (int c = 0; c < cc.num_classes; ++c) {
            int ic = cc.inverse_class[static_cast<std::size_t>(c)];
            CHECK(cc.inverse_class[static_cast<std::size_t>(ic)] == c);
            CHECK(cc.class_of[static_cast<std::size_t>(
                      g.inverse(cc.representative[static_cast<std::size_t>(c)]))] == ic);
        }
    }

    // S4 has 5 classes with sizes 1, 6, 3, 8, 6
    ConjugacyClasses cc = conjugacy_classes(by_recipe("S4"));
    std::multiset<std::size_t> sizes;
    for (const auto& m : cc.members) sizes.insert(m.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("class multiplication coefficients satisfy counting identities") {
    FiniteGroup g = by_recipe("S3");
    ConjugacyClasses cc = conjugacy_classes(g);
    auto a = class_mult_coeffs(g, cc);
    int k = cc.num_classes;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long long total = 0;
            for (int t = 0; t < k; ++t)
                total += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                          [static_cast<std::size_t>(t)] *
                         static_cast<long long>(cc.members[static_cast<std::size_t>(t)].size());
            // |C_i||C_j| products land somewhere
            CHECK(total == static_cast<long long>(cc.members[static_cast<std::size_t>(i)].size()) *
                               static_cast<long long>(cc.members[static_cast<std::size_t>(j)].size()));
        }
}
