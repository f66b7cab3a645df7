#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <charlab/charlab.hpp>

using namespace charlab;

namespace {

FiniteGroup by_recipe(const std::string& text) {
    return build(parse_recipe_string(text), 4096);
}

using RefList = std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>>;

// Mirrors the reference construction of the command line front end.
const RefList& bundled_refs() {
    static const RefList refs = [] {
        RefList out;
        for (const auto& r : bundled_catalog()) {
            auto g = std::make_shared<const FiniteGroup>(build(r, 4096));
            if (predicate_semi_extraspecial(*g)) out.emplace_back(r.name, g);
        }
        return out;
    }();
    return refs;
}

VerifierJob make_job(const std::string& recipe, bool with_refs = true) {
    VerifierJob job;
    job.group_name = recipe;
    job.table = character_table(by_recipe(recipe));
    if (with_refs) job.semi_es_refs = bundled_refs();
    return job;
}

std::map<TheoremId, VerificationReport> by_id(const std::vector<VerificationReport>& reps) {
    std::map<TheoremId, VerificationReport> out;
    for (const auto& r : reps) out.emplace(r.theorem_id, r);
    return out;
}

const std::vector<TheoremId> kGvzConditional = {
    TheoremId::L_class2,      TheoremId::L_center_eq,       TheoremId::C_N_in_Zchi,
    TheoremId::L_center_ident, TheoremId::L_quot_center_gvz, TheoremId::T_elem_abelian,
    TheoremId::T_nl_quotient,  TheoremId::T_equivalences};

}  // namespace

TEST_CASE("theorem ids round-trip by wire name") {
    for (TheoremId id : all_theorem_ids()) {
        auto back = theorem_id_from_name(theorem_id_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(theorem_id_from_name("T_unknown").has_value());
}

TEST_CASE("the full run covers every result in a fixed order") {
    VerifierJob job = make_job("D8");
    auto reps = run_all(job);
    REQUIRE(reps.size() == all_theorem_ids().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].theorem_id == all_theorem_ids()[i]);
        CHECK(reps[i].group_name == "D8");
        CHECK_FALSE(reps[i].timings.empty());
    }
}

TEST_CASE("unconditional results hold on every texture of group") {
    for (const char* r : {"C1", "cyclic:6", "abelian:2,4", "S3", "S4", "D8", "D16", "Q16",
                          "M4(2)", "heisenberg:3", "ES32plus", "Heis27xC3"}) {
        VerifierJob job = make_job(r);
        INFO("recipe " << r);
        auto lin = verify_linear_iff(job);
        CHECK(lin.hypotheses_met);
        CHECK(lin.conclusion_holds == true);
        auto quot = verify_quotient_center_general(job);
        CHECK(quot.hypotheses_met);
        CHECK(quot.conclusion_holds == true);
    }
}

TEST_CASE("groups vanishing off their centers with two degrees pass everything") {
    for (const char* r : {"D8", "Q8", "M4(2)", "heisenberg:3", "ES27exp9", "ES32plus",
                          "ES32minus", "heisenberg:4", "D8xC2", "Heis27xC3"}) {
        VerifierJob job = make_job(r);
        INFO("recipe " << r);
        auto reps = run_all(job);
        CHECK(reports_all_pass(reps));
        for (const auto& rep : by_id(reps)) {
            // p-group results apply everywhere in this list
            CHECK(rep.second.hypotheses_met);
            CHECK(rep.second.conclusion_holds == true);
        }
    }
}

TEST_CASE("hypothesis gating distinguishes skip reasons") {
    auto s3 = by_id(run_all(make_job("S3")));
    for (TheoremId id : kGvzConditional) {
        CHECK_FALSE(s3.at(id).hypotheses_met);
        CHECK_FALSE(s3.at(id).conclusion_holds.has_value());
        CHECK(s3.at(id).note == "group is not GVZ");
    }
    CHECK(s3.at(TheoremId::T_pgroup).note == "group is not a p-group");
    CHECK(s3.at(TheoremId::T_thm1_equiv).note == "group is not a p-group");

    auto c6 = by_id(run_all(make_job("cyclic:6")));
    for (TheoremId id : kGvzConditional) CHECK(c6.at(id).note == "group is abelian");
    CHECK(c6.at(TheoremId::L_linear_iff).conclusion_holds == true);

    // a p-group with two degrees that fails the vanishing property: the
    // conditional results skip while both equivalence theorems run and pass
    auto d16 = by_id(run_all(make_job("D16")));
    for (TheoremId id : kGvzConditional) {
        CHECK_FALSE(d16.at(id).hypotheses_met);
        CHECK(d16.at(id).note == "group is not GVZ");
    }
    CHECK(d16.at(TheoremId::T_pgroup).hypotheses_met);
    CHECK(d16.at(TheoremId::T_pgroup).conclusion_holds == true);
    CHECK(d16.at(TheoremId::T_thm1_equiv).hypotheses_met);
    CHECK(d16.at(TheoremId::T_thm1_equiv).conclusion_holds == true);

    // S4 has three degrees and is not a p-group
    auto s4 = by_id(run_all(make_job("S4")));
    CHECK(s4.at(TheoremId::T_pgroup).note == "group is not a p-group");
    CHECK_FALSE(s4.at(TheoremId::T_equivalences).hypotheses_met);
}

TEST_CASE("equivalence predicates take the same truth value per group") {
    // all four hold on the vanishing two-degree p-groups
    for (const char* r : {"D8", "Q8", "M4(2)", "heisenberg:3", "heisenberg:4"}) {
        VerifierJob job = make_job(r);
        INFO("recipe " << r);
        CHECK(predicate_thm1_i(*job.table));
        CHECK(predicate_thm1_ii(*job.table));
        CHECK(predicate_thm1_iii(*job.table));
        CHECK(predicate_thm1_v(job));
    }

    // all four fail on the dihedral and generalized quaternion 16 controls
    for (const char* r : {"D16", "Q16"}) {
        VerifierJob job = make_job(r);
        INFO("recipe " << r);
        int w = -1;
        CHECK_FALSE(predicate_thm1_i(*job.table));
        CHECK_FALSE(predicate_thm1_ii(*job.table, &w));
        CHECK(w >= 0);  // witness element is reported
        CHECK_FALSE(predicate_thm1_iii(*job.table));
        std::string wn;
        CHECK_FALSE(predicate_thm1_v(job, &wn));
        CHECK_FALSE(wn.empty());
    }
}

TEST_CASE("semi-extraspecial recognition") {
    for (const char* r :
         {"D8", "Q8", "heisenberg:3", "ES27exp9", "ES32plus", "ES32minus", "heisenberg:4"})
        CHECK(predicate_semi_extraspecial(by_recipe(r)));

    for (const char* r : {"D16", "Q16", "M4(2)", "C1", "cyclic:4", "abelian:2,2", "cyclic:6",
                          "S3", "S4", "D8xC2", "Heis27xC3"})
        CHECK_FALSE(predicate_semi_extraspecial(by_recipe(r)));
}

TEST_CASE("isoclinism cross-checks against the reference family") {
    CHECK(is_isoclinic(by_recipe("M4(2)"), by_recipe("D8")));

    // with references present the p-group equivalences report no caveat
    auto d8 = by_id(run_all(make_job("D8")));
    CHECK(d8.at(TheoremId::T_thm1_equiv).conclusion_holds == true);
    CHECK(d8.at(TheoremId::T_thm1_equiv).note.empty());

    // without references the directional check degrades to a note
    auto bare = by_id(run_all(make_job("D8", /*with_refs=*/false)));
    CHECK(bare.at(TheoremId::T_thm1_equiv).conclusion_holds == true);
    CHECK(bare.at(TheoremId::T_thm1_equiv).note ==
          "no bundled semi-extraspecial reference of compatible invariants");
}

TEST_CASE("the lifted-center collection matches the nonlinear centers") {
    VerifierJob job = make_job("heisenberg:3");
    auto rep = verify_T33_equivalence(job);
    REQUIRE(rep.hypotheses_met);
    CHECK(rep.conclusion_holds == true);
    CHECK(rep.witnesses.empty());

    // restricting the lift to normal subgroups not containing the derived
    // subgroup matters: lifting over N = G' itself would adjoin the whole
    // group and break the equal-order condition
    FiniteGroup d8 = by_recipe("D8");
    SubgroupSet derived = commutator_subgroup(d8);
    Quotient q = quotient(d8, derived);
    SubgroupSet lifted_over_derived(d8, [&] {
        std::vector<int> elems;
        SubgroupSet zq = center(q.group);
        for (int x = 0; x < d8.order(); ++x)
            if (zq.contains(q.coset_of[static_cast<std::size_t>(x)])) elems.push_back(x);
        return elems;
    }());
    CHECK(lifted_over_derived.order() == d8.order());    // abelian quotient lifts to G
    CHECK(center(d8).order() < lifted_over_derived.order());
    CHECK(verify_T33_equivalence(make_job("D8")).conclusion_holds == true);
}

TEST_CASE("a corrupted table is caught and witnessed") {
    FiniteGroup g = by_recipe("D8");
    auto base = character_table(g);
    auto broken = std::make_shared<CharacterTable>(*base);
    CyclotomicValue& v = broken->rows.back().values.back();
    v = v + CyclotomicValue::integer(broken->exponent, 1);

    VerifierJob job;
    job.group_name = "D8-broken";
    job.table = broken;
    auto reps = run_all(job);
    CHECK_FALSE(reports_all_pass(reps));

    auto ids = by_id(reps);
    for (TheoremId id : kGvzConditional) {
        INFO("theorem " << theorem_id_name(id));
        REQUIRE(ids.at(id).conclusion_holds.has_value());
        CHECK(ids.at(id).conclusion_holds == false);
        REQUIRE_FALSE(ids.at(id).witnesses.empty());
        CHECK_FALSE(ids.at(id).witnesses.front().fields.empty());
    }
    // the p-group equivalence reads the vanishing property and fails too
    CHECK(ids.at(TheoremId::T_pgroup).conclusion_holds == false);

    // results not routed through the vanishing hypothesis stay unaffected
    CHECK(ids.at(TheoremId::L_linear_iff).conclusion_holds == true);
    CHECK(ids.at(TheoremId::L_quot_center_general).conclusion_holds == true);
    CHECK(ids.at(TheoremId::T_thm1_equiv).conclusion_holds == true);
}

TEST_CASE("witness labels use permutation words when available") {
    FiniteGroup d8 = by_recipe("D8");
    CHECK(element_label(d8, d8.identity()) == "()");
    CHECK(element_label(d8, 1) == "(1 2 3 4)");
    CHECK(subgroup_label(d8, center(d8)).find("(1 3)(2 4)") != std::string::npos);

    // trusted tables without an attached realisation fall back to indices
    FiniteGroup bare = FiniteGroup::from_trusted_table({{0, 1}, {1, 0}});
    CHECK(element_label(bare, 1) == "#1");
}
