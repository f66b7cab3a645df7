// Catalog construction, recipe parsing, group file round-trips, small
// finite fields, and report serialization.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "charlab/group_file.hpp"
#include "charlab/isomorphism.hpp"
#include "charlab/quotient.hpp"
#include "charlab/recipes.hpp"
#include "charlab/report.hpp"
#include "charlab/smallfield.hpp"
#include "charlab/subgroups.hpp"
#include "charlab/verifiers.hpp"

using namespace charlab;

namespace {

FiniteGroup by_recipe(const std::string& text) {
    return build(parse_recipe_string(text), 4096);
}

}  // namespace

TEST_CASE("bundled catalog has the advertised shape") {
    auto catalog = bundled_catalog();
    CHECK(catalog.size() == 69);
    REQUIRE(catalog.size() >= 25);

    std::set<std::string> names;
    for (const auto& r : catalog) names.insert(r.name);
    CHECK(names.size() == catalog.size());

    // Every recipe with a closed-form order builds to exactly that order.
    for (const auto& r : catalog) {
        long long predicted = recipe_order(r);
        FiniteGroup g = build(r, 4096);
        if (predicted != 0) {
            INFO(r.name);
            CHECK(static_cast<long long>(g.order()) == predicted);
        } else {
            // Only generator closures lack a closed form in the catalog.
            CHECK(r.kind == GroupRecipe::Kind::perm_gens);
        }
    }

    // The one generator-closure entry closes to order 16.
    auto m16 = std::find_if(catalog.begin(), catalog.end(),
                            [](const GroupRecipe& r) { return r.name == "M4(2)"; });
    REQUIRE(m16 != catalog.end());
    CHECK(recipe_order(*m16) == 0);
    CHECK(build(*m16, 4096).order() == 16);

    // All abelian groups of order at most 32 are present: the count of
    // isomorphism types is sum over n<=32 of prod p(e_i) for n = prod p^e_i.
    int abelian_count = 0;
    for (const auto& r : catalog)
        if (r.kind == GroupRecipe::Kind::cyclic || r.kind == GroupRecipe::Kind::abelian)
            ++abelian_count;
    CHECK(abelian_count == 55);
}

TEST_CASE("bundled constructions have the advertised structure") {
    SECTION("Heisenberg group of order 27") {
        FiniteGroup g = by_recipe("Heis27");
        CHECK(g.order() == 27);
        CHECK(g.exponent() == 3);
        auto z = center(g);
        CHECK(z.order() == 3);
        CHECK(z == commutator_subgroup(g));
    }
    SECTION("extraspecial 27 of exponent 9") {
        FiniteGroup g = by_recipe("ES27exp9");
        CHECK(g.order() == 27);
        CHECK(g.exponent() == 9);
        auto z = center(g);
        CHECK(z.order() == 3);
        CHECK(z == commutator_subgroup(g));
        CHECK_FALSE(is_isomorphic(g, by_recipe("Heis27")));
        CHECK(is_isomorphic(g, by_recipe("extraspecial:3,minus")));
    }
    SECTION("both extraspecial groups of order 32") {
        for (const char* name : {"ES32plus", "ES32minus"}) {
            FiniteGroup g = by_recipe(name);
            INFO(name);
            CHECK(g.order() == 32);
            CHECK(g.exponent() == 4);
            auto z = center(g);
            CHECK(z.order() == 2);
            CHECK(z == commutator_subgroup(g));
            auto q = quotient(g, z);
            auto p = is_elementary_abelian(q.group);
            REQUIRE(p.has_value());
            CHECK(*p == 2);
            CHECK(q.group.order() == 16);
        }
        CHECK_FALSE(is_isomorphic(by_recipe("ES32plus"), by_recipe("ES32minus")));
    }
    SECTION("Heisenberg group over the field of four elements") {
        FiniteGroup g = by_recipe("Heis64");
        CHECK(g.order() == 64);
        CHECK(g.exponent() == 4);
        auto z = center(g);
        CHECK(z.order() == 4);
        CHECK(z == commutator_subgroup(g));
        auto q = quotient(g, z);
        auto p = is_elementary_abelian(q.group);
        REQUIRE(p.has_value());
        CHECK(*p == 2);
    }
    SECTION("modular group of order 16") {
        FiniteGroup g = by_recipe("M4(2)");
        CHECK(g.order() == 16);
        CHECK(g.exponent() == 8);
        CHECK(center(g).order() == 4);
        CHECK(commutator_subgroup(g).order() == 2);
        CHECK_FALSE(is_isomorphic(g, by_recipe("D16")));
        CHECK_FALSE(is_isomorphic(g, by_recipe("Q16")));
    }
    SECTION("generalized quaternion groups have a unique involution") {
        for (const char* name : {"Q8", "Q16"}) {
            FiniteGroup g = by_recipe(name);
            int involutions = 0;
            for (int a = 0; a < g.order(); ++a)
                if (a != g.identity() && g.element_order(a) == 2) ++involutions;
            INFO(name);
            CHECK(involutions == 1);
        }
    }
}

TEST_CASE("small finite fields satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        INFO("q = " << q);
        SmallField f = small_field(q);
        REQUIRE(f.q == q);
        CHECK(f.add.size() == static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
        CHECK(f.mul.size() == f.add.size());

        bool commutative = true, identities = true;
        for (int a = 0; a < q; ++a) {
            identities = identities && f.add_at(a, 0) == a && f.mul_at(a, 1) == a &&
                         f.mul_at(a, 0) == 0;
            for (int b = 0; b < q; ++b)
                commutative = commutative && f.add_at(a, b) == f.add_at(b, a) &&
                              f.mul_at(a, b) == f.mul_at(b, a);
        }
        CHECK(commutative);
        CHECK(identities);

        bool assoc = true, distrib = true;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    assoc = assoc &&
                            f.add_at(f.add_at(a, b), c) == f.add_at(a, f.add_at(b, c)) &&
                            f.mul_at(f.mul_at(a, b), c) == f.mul_at(a, f.mul_at(b, c));
                    distrib = distrib &&
                              f.mul_at(a, f.add_at(b, c)) ==
                                  f.add_at(f.mul_at(a, b), f.mul_at(a, c));
                }
        CHECK(assoc);
        CHECK(distrib);

        // Inverses: every element has an additive inverse, every nonzero
        // element a multiplicative one.
        for (int a = 0; a < q; ++a) {
            bool has_neg = false, has_inv = (a == 0);
            for (int b = 0; b < q; ++b) {
                has_neg = has_neg || f.add_at(a, b) == 0;
                has_inv = has_inv || f.mul_at(a, b) == 1;
            }
            CHECK(has_neg);
            CHECK(has_inv);
        }

        // Characteristic p: adding 1 to itself p times returns to 0, and no
        // shorter cycle does.
        int x = 0;
        for (int k = 1; k <= f.p; ++k) {
            x = f.add_at(x, 1);
            if (k < f.p) CHECK(x != 0);
        }
        CHECK(x == 0);
    }

    CHECK_THROWS_AS(small_field(1), BadRecipe);
    CHECK_THROWS_AS(small_field(6), BadRecipe);
    CHECK_THROWS_AS(small_field(12), BadRecipe);
    // Prime power without a pinned modulus.
    CHECK_THROWS_AS(small_field(121), BadRecipe);
    CHECK_THROWS_WITH(small_field(6), Catch::Matchers::ContainsSubstring("not a prime power"));
    CHECK_THROWS_WITH(small_field(121), Catch::Matchers::ContainsSubstring("no fixed field modulus"));
    // The two largest pinned sizes construct fine.
    CHECK(small_field(49).p == 7);
    CHECK(small_field(64).n == 6);
}

TEST_CASE("recipe strings parse to the advertised kinds") {
    CHECK(parse_recipe_string("D8").name == "D8");
    CHECK(parse_recipe_string("D8").kind == GroupRecipe::Kind::dihedral);

    auto c = parse_recipe_string("cyclic:12");
    CHECK(c.kind == GroupRecipe::Kind::cyclic);
    CHECK(c.params == std::vector<long long>{12});

    auto a = parse_recipe_string("abelian:2,4");
    CHECK(a.kind == GroupRecipe::Kind::abelian);
    CHECK(a.params == std::vector<long long>{2, 4});

    CHECK(parse_recipe_string("dihedral:16").kind == GroupRecipe::Kind::dihedral);
    CHECK(parse_recipe_string("dicyclic:16").kind == GroupRecipe::Kind::dicyclic);
    CHECK(parse_recipe_string("symmetric:4").kind == GroupRecipe::Kind::symmetric);
    CHECK(parse_recipe_string("heisenberg:3").kind == GroupRecipe::Kind::heisenberg);

    auto ep = parse_recipe_string("extraspecial:3,plus");
    CHECK(ep.params == std::vector<long long>{3, 1});
    auto em = parse_recipe_string("extraspecial:3,minus");
    CHECK(em.params == std::vector<long long>{3, -1});

    CHECK_THROWS_WITH(parse_recipe_string("frobnicate:7"),
                      Catch::Matchers::ContainsSubstring("unknown recipe kind 'frobnicate'"));
    CHECK_THROWS_WITH(parse_recipe_string("cyclic:x"),
                      Catch::Matchers::ContainsSubstring("bad numeric parameter 'x'"));
    CHECK_THROWS_WITH(parse_recipe_string("extraspecial:3"),
                      Catch::Matchers::ContainsSubstring("needs p,plus or p,minus"));
    CHECK_THROWS_WITH(parse_recipe_string("nonsense"),
                      Catch::Matchers::ContainsSubstring("unknown recipe 'nonsense'"));
}

TEST_CASE("recipe builders reject out-of-domain parameters") {
    CHECK_THROWS_AS(by_recipe("dihedral:7"), BadRecipe);
    CHECK_THROWS_AS(by_recipe("dihedral:4"), BadRecipe);
    CHECK_THROWS_AS(by_recipe("dicyclic:6"), BadRecipe);
    CHECK_THROWS_AS(by_recipe("symmetric:9"), BadRecipe);
    CHECK_THROWS_AS(by_recipe("symmetric:0"), BadRecipe);
    CHECK_THROWS_AS(by_recipe("extraspecial:4,plus"), BadRecipe);
    // No bundled field of size 6, so no Heisenberg group over it.
    CHECK_THROWS_AS(by_recipe("heisenberg:6"), BadRecipe);
    // Order caps propagate through the builder.
    CHECK_THROWS_AS(build(parse_recipe_string("cyclic:100"), 64), OrderExceeded);
}

TEST_CASE("group files round-trip through serialize and parse") {
    SECTION("permutation format") {
        std::string text =
            "# dihedral group on the square\n"
            "name: d8-file\n"
            "format: perm\n"
            "degree: 4\n"
            "(1 2 3 4)\n"
            "(1 3)\n";
        GroupRecipe r = parse_group_string(text);
        CHECK(r.name == "d8-file");
        CHECK(r.kind == GroupRecipe::Kind::perm_gens);
        CHECK(r.degree == 4);
        REQUIRE(r.gens.size() == 2);

        FiniteGroup g = build(r, 4096);
        CHECK(g.order() == 8);
        CHECK(is_isomorphic(g, by_recipe("D8")));

        GroupRecipe back = parse_group_string(serialize_group_file(r));
        CHECK(back.name == r.name);
        CHECK(back.degree == r.degree);
        CHECK(is_isomorphic(build(back, 4096), g));
    }

    SECTION("cayley format") {
        FiniteGroup s3 = by_recipe("S3");
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::cayley;
        r.name = "s3-table";
        r.cayley_table = s3.table();

        std::string text = serialize_group_file(r);
        GroupRecipe back = parse_group_string(text);
        CHECK(back.kind == GroupRecipe::Kind::cayley);
        CHECK(back.name == "s3-table");
        FiniteGroup g = build(back, 4096);
        CHECK(g.order() == 6);
        CHECK(is_isomorphic(g, s3));
    }

    SECTION("dihedral and abelian recipes do not serialize") {
        CHECK_THROWS_AS(serialize_group_file(parse_recipe_string("D8")), BadRecipe);
    }

    SECTION("default name when no header is given") {
        GroupRecipe r = parse_group_string("format: perm\ndegree: 3\n(1 2 3)\n");
        CHECK(r.name == "file-group");
        CHECK(build(r, 4096).order() == 3);
    }
}

TEST_CASE("group file parser reports precise errors") {
    auto line_of = [](const std::string& text) {
        try {
            parse_group_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK_THROWS_WITH(parse_group_string("format: perm\ndegree: 4\n(1 2 3\n"),
                      Catch::Matchers::ContainsSubstring("unclosed cycle '(1 2 3'"));
    CHECK(line_of("format: perm\ndegree: 4\n(1 2 3\n") == 3);
    CHECK(line_of("# comment\n\nformat: perm\ndegree: 4\n(1 2 3\n") == 5);

    CHECK_THROWS_WITH(parse_group_string("format: perm\ndegree: 4\n(1 5)\n"),
                      Catch::Matchers::ContainsSubstring("point '5' outside 1..4"));
    CHECK_THROWS_WITH(parse_group_string("format: perm\ndegree: 4\nx(1 2)\n"),
                      Catch::Matchers::ContainsSubstring("expected '(' but found 'x(1 2)'"));
    CHECK_THROWS_WITH(parse_group_string("format: perm\ndegree: 4\n(1 2)(2 3)\n"),
                      Catch::Matchers::ContainsSubstring("repeated"));
    CHECK_THROWS_WITH(parse_group_string("name: x\n"),
                      Catch::Matchers::ContainsSubstring("missing 'format:' header"));
    CHECK_THROWS_WITH(parse_group_string("format: matrix\n"),
                      Catch::Matchers::ContainsSubstring("expected 'format: perm' or 'format: cayley'"));
    CHECK_THROWS_WITH(parse_group_string("format: perm\ndegree: -2\n"),
                      Catch::Matchers::ContainsSubstring("bad value '-2' for degree:"));

    // Cayley diagnostics: wrong entry, wrong row width, missing rows.
    CHECK_THROWS_WITH(parse_group_string("format: cayley\norder: 2\n0 1\n1 2\n"),
                      Catch::Matchers::ContainsSubstring("bad table entry '2'"));
    CHECK_THROWS_WITH(parse_group_string("format: cayley\norder: 2\n0 1\n1\n"),
                      Catch::Matchers::ContainsSubstring("expected 2 entries, found 1"));
    CHECK_THROWS_WITH(parse_group_string("format: cayley\norder: 3\n0 1 2\n"),
                      Catch::Matchers::ContainsSubstring("expected 3 table rows, found 1"));

    // A syntactically valid table that is not a group is still rejected,
    // just by the validator rather than the parser.
    CHECK_THROWS_AS(build(parse_group_string("format: cayley\norder: 2\n0 1\n1 1\n"), 16),
                    NotAssociative);

    CHECK_THROWS_WITH(load_group_file("/nonexistent/path.grp"),
                      Catch::Matchers::ContainsSubstring("cannot open file '/nonexistent/path.grp'"));
}

TEST_CASE("bundled data file matches the catalog construction") {
    std::string path = std::string(CHARLAB_DATA_DIR) + "/extraspecial_27_exp9.grp";
    GroupRecipe r = load_group_file(path);
    CHECK(r.name == "ES27exp9-file");
    FiniteGroup g = build(r, 4096);
    CHECK(g.order() == 27);
    CHECK(g.exponent() == 9);
    CHECK(is_isomorphic(g, by_recipe("ES27exp9")));
}

TEST_CASE("verification reports round-trip through the structured format") {
    VerificationReport skip;
    skip.theorem_id = TheoremId::T_pgroup;
    skip.group_name = "S3";
    skip.hypotheses_met = false;
    skip.note = "group is not a p-group";

    VerificationReport fail;
    fail.theorem_id = TheoremId::L_class2;
    fail.group_name = "X";
    fail.hypotheses_met = true;
    fail.conclusion_holds = false;
    Witness w;
    w.description = "derived subgroup escapes the center";
    w.fields = {{"element", "(1 2)"}, {"order", "2"}};
    fail.witnesses.push_back(w);

    std::string doc = write_report({skip, fail}, OutputFormat::structured);
    auto parsed = parse_report_document(doc);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].theorem_id == TheoremId::T_pgroup);
    CHECK(parsed[0].group_name == "S3");
    CHECK_FALSE(parsed[0].hypotheses_met);
    CHECK_FALSE(parsed[0].conclusion_holds.has_value());
    CHECK(parsed[0].note == "group is not a p-group");
    CHECK(parsed[1].conclusion_holds.has_value());
    CHECK(*parsed[1].conclusion_holds == false);
    REQUIRE(parsed[1].witnesses.size() == 1);
    CHECK(parsed[1].witnesses[0].description == "derived subgroup escapes the center");
    REQUIRE(parsed[1].witnesses[0].fields.size() == 2);
    CHECK(parsed[1].witnesses[0].fields[0] == std::make_pair(std::string("element"), std::string("(1 2)")));

    // Writing the parsed reports again reproduces the document byte for byte.
    CHECK(write_report(parsed, OutputFormat::structured) == doc);

    SECTION("schema and theorem names are validated on read") {
        CHECK_THROWS_WITH(parse_report_document("{\"schema\": \"charlab-report/2\", \"reports\": []}"),
                          Catch::Matchers::ContainsSubstring("unsupported report schema"));
        CHECK_THROWS_AS(parse_report_document("{\"reports\": []}"), ParseError);
        std::string bad = doc;
        auto pos = bad.find("T_pgroup");
        REQUIRE(pos != std::string::npos);
        bad.replace(pos, 8, "T_qgroup");
        CHECK_THROWS_WITH(parse_report_document(bad),
                          Catch::Matchers::ContainsSubstring("unknown theorem id 'T_qgroup'"));
    }

    SECTION("text format is human-oriented") {
        std::string text = write_report({skip, fail}, OutputFormat::text);
        CHECK(text.find("== S3 ==") != std::string::npos);
        CHECK(text.find("== X ==") != std::string::npos);
        CHECK(text.find("skip") != std::string::npos);
        CHECK(text.find("FAIL") != std::string::npos);
        CHECK(text.find("(group is not a p-group)") != std::string::npos);
        CHECK(text.find("witness: derived subgroup escapes the center") != std::string::npos);
        CHECK(text.find("element = (1 2)") != std::string::npos);
    }
}

TEST_CASE("full verification of one group serializes deterministically") {
    auto table = character_table(by_recipe("D8"));
    VerifierJob job;
    job.group_name = "D8";
    job.table = table;

    auto reports = run_all(job);
    REQUIRE(reports.size() == all_theorem_ids().size());
    for (const auto& r : reports) {
        CHECK(r.hypotheses_met);
        REQUIRE(r.conclusion_holds.has_value());
        CHECK(*r.conclusion_holds);
    }

    std::string once = write_report(reports, OutputFormat::structured);
    std::string twice = write_report(run_all(job), OutputFormat::structured);
    CHECK(once == twice);
    auto parsed = parse_report_document(once);
    CHECK(parsed.size() == reports.size());
}
