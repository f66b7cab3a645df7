#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charlab/char_props.hpp"
#include "charlab/char_table.hpp"
#include "charlab/errors.hpp"
#include "charlab/isomorphism.hpp"
#include "charlab/quotient.hpp"
#include "charlab/subgroups.hpp"

namespace charlab {

// One verifier per result. Enum order is the run order and the tiebreak
// order in sorted reports.
enum class TheoremId {
    L_class2,
    L_center_eq,
    C_N_in_Zchi,
    L_center_ident,
    L_linear_iff,
    L_quot_center_general,
    L_quot_center_gvz,
    T_elem_abelian,
    T_nl_quotient,
    T_equivalences,
    T_pgroup,
    T_thm1_equiv,
};

inline const std::array<TheoremId, 12>& all_theorem_ids() {
    static const std::array<TheoremId, 12> ids = {
        TheoremId::L_class2,        TheoremId::L_center_eq,
        TheoremId::C_N_in_Zchi,     TheoremId::L_center_ident,
        TheoremId::L_linear_iff,    TheoremId::L_quot_center_general,
        TheoremId::L_quot_center_gvz, TheoremId::T_elem_abelian,
        TheoremId::T_nl_quotient,   TheoremId::T_equivalences,
        TheoremId::T_pgroup,        TheoremId::T_thm1_equiv,
    };
    return ids;
}

inline const char* theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::L_class2: return "L_class2";
        case TheoremId::L_center_eq: return "L_center_eq";
        case TheoremId::C_N_in_Zchi: return "C_N_in_Zchi";
        case TheoremId::L_center_ident: return "L_center_ident";
        case TheoremId::L_linear_iff: return "L_linear_iff";
        case TheoremId::L_quot_center_general: return "L_quot_center_general";
        case TheoremId::L_quot_center_gvz: return "L_quot_center_gvz";
        case TheoremId::T_elem_abelian: return "T_elem_abelian";
        case TheoremId::T_nl_quotient: return "T_nl_quotient";
        case TheoremId::T_equivalences: return "T_equivalences";
        case TheoremId::T_pgroup: return "T_pgroup";
        case TheoremId::T_thm1_equiv: return "T_thm1_equiv";
    }
    return "unknown";
}

inline std::optional<TheoremId> theorem_id_from_name(const std::string& name) {
    for (TheoremId id : all_theorem_ids())
        if (name == theorem_id_name(id)) return id;
    return std::nullopt;
}

struct Witness {
    std::string description;
    std::vector<std::pair<std::string, std::string>> fields;
};

struct VerificationReport {
    TheoremId theorem_id{};
    std::string group_name;
    bool hypotheses_met = false;
    std::optional<bool> conclusion_holds;  // present iff hypotheses_met
    std::vector<Witness> witnesses;        // nonempty iff conclusion_holds == false
    std::string note;                      // hypothesis-failure reason or caveats
    std::vector<std::pair<std::string, double>> timings;  // seconds; not serialized
};

// Everything a verifier needs about one group. The normal-subgroup lattice
// is computed on first use and shared.
struct VerifierJob {
    std::string group_name;
    std::shared_ptr<const CharacterTable> table;
    long long iso_cap = 10000000;
    std::size_t lattice_cap = 10000;
    std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> semi_es_refs;
    mutable std::optional<std::vector<SubgroupSet>> normals_cache;

    const FiniteGroup& group() const { return *table->group; }
    const std::vector<SubgroupSet>& normals() const {
        if (!normals_cache) normals_cache = normal_subgroups(group(), lattice_cap);
        return *normals_cache;
    }
};

// Witness rendering: permutation words when the group carries them, element
// indices otherwise.
inline std::string element_label(const FiniteGroup& g, int x) {
    if (!g.element_perms().empty())
        return g.element_perms()[static_cast<std::size_t>(x)].to_cycle_string();
    return "#" + std::to_string(x);
}

inline std::string subgroup_label(const FiniteGroup& g, const SubgroupSet& s) {
    std::ostringstream out;
    out << "{";
    int shown = 0;
    for (int x : s.elements()) {
        if (shown == 12) {
            out << ", ...";
            break;
        }
        if (shown) out << ", ";
        out << element_label(g, x);
        ++shown;
    }
    out << "} (order " << s.order() << ")";
    return out.str();
}

namespace vdetail {

inline VerificationReport base_report(TheoremId id, const VerifierJob& job) {
    VerificationReport rep;
    rep.theorem_id = id;
    rep.group_name = job.group_name;
    return rep;
}

// Shared hypothesis of the GVZ-conditional results. Returns the failure
// reason, or nullopt when the group is a nonabelian GVZ group (with exactly
// two character degrees unless two_degrees is false).
inline std::optional<std::string> gvz_hypothesis_reason(const VerifierJob& job,
                                                        bool two_degrees = true) {
    if (job.group().is_abelian()) return "group is abelian";
    if (!is_gvz(*job.table).gvz) return "group is not GVZ";
    if (two_degrees && degree_set(*job.table).size() != 2)
        return "character degree set size differs from two";
    return std::nullopt;
}

inline std::optional<long long> p_group_prime_opt(const FiniteGroup& g) {
    long long n = g.order();
    if (n == 1) return std::nullopt;
    long long p = 0;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = n;
    while (n % p == 0) n /= p;
    if (n != 1) return std::nullopt;
    return p;
}

inline long long p_group_prime(const FiniteGroup& g) {
    auto p = p_group_prime_opt(g);
    if (!p) throw NotPGroup("group order is not a prime power above 1");
    return *p;
}

inline SubgroupSet image_subgroup(const Quotient& q, const SubgroupSet& s) {
    std::vector<int> elems;
    for (int x : s.elements())
        elems.push_back(q.coset_of[static_cast<std::size_t>(x)]);
    return SubgroupSet(q.group, std::move(elems));
}

inline SubgroupSet preimage_subgroup(const FiniteGroup& g, const Quotient& q,
                                     const SubgroupSet& s) {
    std::vector<int> elems;
    for (int x = 0; x < g.order(); ++x)
        if (s.contains(q.coset_of[static_cast<std::size_t>(x)])) elems.push_back(x);
    return SubgroupSet(g, std::move(elems));
}

struct NonlinearData {
    std::vector<int> rows;
    std::vector<SubgroupSet> centers;   // Z(chi)
    std::vector<SubgroupSet> kernels;   // ker chi
    std::vector<SubgroupSet> comms;     // [Z(chi), G]
};

inline NonlinearData nonlinear_data(const VerifierJob& job) {
    NonlinearData d;
    d.rows = nonlinear_rows(*job.table);
    for (int r : d.rows) {
        d.centers.push_back(center_of(*job.table, r));
        d.kernels.push_back(kernel_of(*job.table, r));
        d.comms.push_back(commutator_subgroup(job.group(), d.centers.back()));
    }
    return d;
}

struct IsoCrossCheck {
    bool any_compatible = false;
    bool any_isoclinic = false;
    std::vector<std::string> isoclinic_names;
};

// Compatible means equal |G/Z(G)| and |G'|, which isoclinism preserves.
inline IsoCrossCheck isoclinic_to_refs(
    const FiniteGroup& g,
    const std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>>& refs,
    long long cap) {
    IsoCrossCheck out;
    long long qz = g.order() / center(g).order();
    int dorder = commutator_subgroup(g).order();
    for (const auto& [name, ref] : refs) {
        if (ref->order() / center(*ref).order() != qz) continue;
        if (commutator_subgroup(*ref).order() != dorder) continue;
        out.any_compatible = true;
        if (is_isoclinic(g, *ref, cap)) {
            out.any_isoclinic = true;
            out.isoclinic_names.push_back(name);
        }
    }
    return out;
}

}  // namespace vdetail

// --- predicates used by the equivalence theorems ---

// cd(G) = {1, sqrt(|G : Z(G)|)}.
inline bool predicate_thm1_i(const CharacterTable& t) {
    SubgroupSet z = center(*t.group);
    long long index = t.group->order() / z.order();
    long long r = 0;
    while ((r + 1) * (r + 1) <= index) ++r;
    if (r * r != index) return false;
    std::vector<long long> expected{1};
    if (r > 1) expected.push_back(r);
    return degree_set(t) == expected;
}

// Cl(x) = x G' for every noncentral x.
inline bool predicate_thm1_ii(const CharacterTable& t, int* witness_element = nullptr) {
    const FiniteGroup& g = *t.group;
    SubgroupSet z = center(g);
    SubgroupSet derived = commutator_subgroup(g);
    for (int x = 0; x < g.order(); ++x) {
        if (z.contains(x)) continue;
        std::vector<int> coset;
        for (int d : derived.elements()) coset.push_back(g.mul(x, d));
        std::sort(coset.begin(), coset.end());
        if (t.classes.members[static_cast<std::size_t>(
                t.classes.class_of[static_cast<std::size_t>(x)])] != coset) {
            if (witness_element) *witness_element = x;
            return false;
        }
    }
    return true;
}

// [x, G] = G' for every noncentral x.
inline bool predicate_thm1_iii(const CharacterTable& t, int* witness_element = nullptr) {
    const FiniteGroup& g = *t.group;
    SubgroupSet z = center(g);
    SubgroupSet derived = commutator_subgroup(g);
    for (int x = 0; x < g.order(); ++x) {
        if (z.contains(x)) continue;
        std::vector<int> comms;
        for (int y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
        if (!(subgroup_generated(g, comms) == derived)) {
            if (witness_element) *witness_element = x;
            return false;
        }
    }
    return true;
}

// Z(G/N) equals the image of Z(G) for every normal N not containing G'.
inline bool predicate_thm1_v(const VerifierJob& job, std::string* witness_n = nullptr) {
    const FiniteGroup& g = job.group();
    SubgroupSet z = center(g);
    SubgroupSet derived = commutator_subgroup(g);
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        Quotient q = quotient(g, n);
        if (!(center(q.group) == vdetail::image_subgroup(q, z))) {
            if (witness_n) *witness_n = subgroup_label(g, n);
            return false;
        }
    }
    return true;
}

// Every quotient of G by a maximal subgroup of Z(G) is extraspecial. A group
// whose order is not a prime power is not semi-extraspecial by definition.
inline bool predicate_semi_extraspecial(const FiniteGroup& g) {
    auto p_opt = vdetail::p_group_prime_opt(g);
    if (!p_opt) return false;
    long long p = *p_opt;
    SubgroupSet z = center(g);
    auto is_extraspecial = [p](const FiniteGroup& q) {
        SubgroupSet zq = center(q);
        if (zq.order() != p) return false;
        if (!(commutator_subgroup(q) == zq)) return false;
        auto ea = is_elementary_abelian(quotient(q, zq).group);
        return ea.has_value() && (*ea == p || *ea == 1);
    };
    if (z.order() == 1) return false;
    EmbeddedSubgroup ez = subgroup_as_group(g, z);
    int target = z.order() / static_cast<int>(p);
    for (const SubgroupSet& s : all_subgroups(ez.group)) {
        if (s.order() != target) continue;
        std::vector<int> ambient;
        for (int i : s.elements())
            ambient.push_back(ez.to_ambient[static_cast<std::size_t>(i)]);
        Quotient q = quotient(g, SubgroupSet(g, std::move(ambient)));
        if (!is_extraspecial(q.group)) return false;
    }
    return true;
}

// --- verifiers, one per result ---

inline VerificationReport verify_class_two(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_class2, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    int c = nilpotency_class(job.group());
    rep.conclusion_holds = (c == 2);
    if (!*rep.conclusion_holds)
        rep.witnesses.push_back(
            {"nilpotency class is not two",
             {{"computed_class", c < 0 ? std::string("not nilpotent") : std::to_string(c)}}});
    return rep;
}

inline VerificationReport verify_center_equality(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_center_eq, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    auto nl = vdetail::nonlinear_data(job);
    bool ok = true;
    for (std::size_t i = 0; i < nl.rows.size(); ++i)
        for (std::size_t j = 0; j < nl.rows.size(); ++j) {
            if (!nl.kernels[j].contains(nl.comms[i])) continue;
            if (!(nl.centers[i] == nl.centers[j])) {
                ok = false;
                rep.witnesses.push_back(
                    {"[Z(phi),G] <= ker chi but Z(phi) != Z(chi)",
                     {{"phi_row", std::to_string(nl.rows[i])},
                      {"chi_row", std::to_string(nl.rows[j])},
                      {"Z_phi", subgroup_label(job.group(), nl.centers[i])},
                      {"Z_chi", subgroup_label(job.group(), nl.centers[j])}}});
            }
        }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_N_in_center(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::C_N_in_Zchi, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    SubgroupSet derived = commutator_subgroup(job.group());
    auto nl = vdetail::nonlinear_data(job);
    bool ok = true;
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        for (std::size_t i = 0; i < nl.rows.size(); ++i) {
            if (!n.contains(nl.comms[i])) continue;
            if (!nl.centers[i].contains(n)) {
                ok = false;
                rep.witnesses.push_back(
                    {"admissible N is not contained in Z(chi)",
                     {{"chi_row", std::to_string(nl.rows[i])},
                      {"N", subgroup_label(job.group(), n)},
                      {"Z_chi", subgroup_label(job.group(), nl.centers[i])}}});
            }
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_center_identification(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_center_ident, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    auto nl = vdetail::nonlinear_data(job);
    std::vector<SubgroupSet> xs = nl.centers;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<SubgroupSet> xcomms;
    for (const auto& x : xs) xcomms.push_back(commutator_subgroup(job.group(), x));
    bool ok = true;
    for (std::size_t i = 0; i < nl.rows.size(); ++i)
        for (std::size_t x = 0; x < xs.size(); ++x) {
            bool lhs = nl.centers[i] == xs[x];
            bool rhs = nl.kernels[i].contains(xcomms[x]);
            if (lhs != rhs) {
                ok = false;
                rep.witnesses.push_back(
                    {"Z(chi) = X_i and [X_i,G] <= ker chi disagree",
                     {{"chi_row", std::to_string(nl.rows[i])},
                      {"X_i", subgroup_label(job.group(), xs[x])},
                      {"Z_chi_equals_X_i", lhs ? "true" : "false"},
                      {"comm_in_kernel", rhs ? "true" : "false"}}});
            }
        }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_linear_iff(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_linear_iff, job);
    rep.hypotheses_met = true;
    SubgroupSet derived = commutator_subgroup(job.group());
    bool ok = true;
    for (std::size_t r = 0; r < job.table->rows.size(); ++r) {
        SubgroupSet zchi = center_of(*job.table, static_cast<int>(r));
        SubgroupSet comm = commutator_subgroup(job.group(), zchi);
        bool lhs = job.table->rows[r].degree == 1;
        bool rhs = comm == derived;
        if (lhs != rhs) {
            ok = false;
            rep.witnesses.push_back(
                {"linearity and [Z(chi),G] = G' disagree",
                 {{"row", std::to_string(r)},
                  {"degree", std::to_string(job.table->rows[r].degree)},
                  {"comm", subgroup_label(job.group(), comm)},
                  {"derived", subgroup_label(job.group(), derived)}}});
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_quotient_center_general(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_quot_center_general, job);
    rep.hypotheses_met = true;
    bool ok = true;
    for (std::size_t r = 0; r < job.table->rows.size(); ++r) {
        SubgroupSet zchi = center_of(*job.table, static_cast<int>(r));
        SubgroupSet comm = commutator_subgroup(job.group(), zchi);
        Quotient q = quotient(job.group(), comm);
        SubgroupSet lhs = center(q.group);
        SubgroupSet rhs = vdetail::image_subgroup(q, zchi);
        if (!(lhs == rhs)) {
            ok = false;
            rep.witnesses.push_back(
                {"Z(G/[Z(chi),G]) differs from the image of Z(chi)",
                 {{"row", std::to_string(r)},
                  {"quotient_center_order", std::to_string(lhs.order())},
                  {"image_order", std::to_string(rhs.order())}}});
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_quotient_center_gvz(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::L_quot_center_gvz, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    SubgroupSet derived = commutator_subgroup(job.group());
    auto nl = vdetail::nonlinear_data(job);
    bool ok = true;
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        std::optional<Quotient> q;
        for (std::size_t i = 0; i < nl.rows.size(); ++i) {
            if (!n.contains(nl.comms[i])) continue;
            if (!q) q = quotient(job.group(), n);
            SubgroupSet lhs = center(q->group);
            SubgroupSet rhs = vdetail::image_subgroup(*q, nl.centers[i]);
            if (!(lhs == rhs)) {
                ok = false;
                rep.witnesses.push_back(
                    {"Z(G/N) differs from the image of Z(chi)",
                     {{"chi_row", std::to_string(nl.rows[i])},
                      {"N", subgroup_label(job.group(), n)},
                      {"quotient_center_order", std::to_string(lhs.order())},
                      {"image_order", std::to_string(rhs.order())}}});
            }
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_elementary_abelian(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::T_elem_abelian, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    const FiniteGroup& g = job.group();
    SubgroupSet zg = center(g);
    SubgroupSet derived = commutator_subgroup(g);
    EmbeddedSubgroup eg = subgroup_as_group(g, derived);
    FiniteGroup g_over_z = quotient(g, zg).group;
    auto nl = vdetail::nonlinear_data(job);
    bool ok = true;
    for (std::size_t i = 0; i < nl.rows.size(); ++i) {
        FiniteGroup q1 = quotient(g, nl.centers[i]).group;
        std::vector<int> comm_in_derived;
        for (int x : nl.comms[i].elements())
            comm_in_derived.push_back(eg.from_ambient[static_cast<std::size_t>(x)]);
        FiniteGroup q3 =
            quotient(eg.group, SubgroupSet(eg.group, std::move(comm_in_derived))).group;

        const FiniteGroup* quots[3] = {&q1, &g_over_z, &q3};
        const char* names[3] = {"G/Z(chi)", "G/Z(G)", "G'/[Z(chi),G]"};
        int prime = 0;
        int expo = 0;
        for (int t = 0; t < 3; ++t) {
            auto ea = is_elementary_abelian(*quots[t]);
            if (!ea) {
                ok = false;
                rep.witnesses.push_back({"quotient is not elementary abelian",
                                         {{"chi_row", std::to_string(nl.rows[i])},
                                          {"quotient", names[t]},
                                          {"order", std::to_string(quots[t]->order())}}});
                continue;
            }
            if (*ea == 1) continue;  // trivial quotient, skipped in comparisons
            int ex = quots[t]->exponent();
            if (prime == 0) {
                prime = *ea;
                expo = ex;
            } else if (*ea != prime || ex != expo) {
                ok = false;
                rep.witnesses.push_back({"prime or exponent differs across the three quotients",
                                         {{"chi_row", std::to_string(nl.rows[i])},
                                          {"quotient", names[t]},
                                          {"prime", std::to_string(*ea)},
                                          {"exponent", std::to_string(ex)}}});
            }
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_nl_quotient(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::T_nl_quotient, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    const FiniteGroup& g = job.group();
    SubgroupSet derived = commutator_subgroup(g);
    // chi ranges over all rows of Irr(G) with N <= ker chi, i.e. Irr(G/N).
    std::vector<SubgroupSet> kernels, comms;
    for (std::size_t r = 0; r < job.table->rows.size(); ++r) {
        kernels.push_back(kernel_of(*job.table, static_cast<int>(r)));
        comms.push_back(commutator_subgroup(g, center_of(*job.table, static_cast<int>(r))));
    }
    bool ok = true;
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        SubgroupSet ng = product_subgroup(g, n, derived);
        for (std::size_t r = 0; r < job.table->rows.size(); ++r) {
            if (!kernels[r].contains(n)) continue;
            SubgroupSet nz = product_subgroup(g, n, comms[r]);
            bool lhs = job.table->rows[r].degree > 1;
            bool rhs = ng.contains(nz) && nz.order() < ng.order();
            if (lhs != rhs) {
                ok = false;
                rep.witnesses.push_back(
                    {"nonlinearity in G/N and N[Z(chi),G] < NG' disagree",
                     {{"row", std::to_string(r)},
                      {"N", subgroup_label(g, n)},
                      {"N_comm_order", std::to_string(nz.order())},
                      {"N_derived_order", std::to_string(ng.order())}}});
            }
        }
    }
    rep.conclusion_holds = ok;
    return rep;
}

inline VerificationReport verify_T33_equivalence(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::T_equivalences, job);
    if (auto reason = vdetail::gvz_hypothesis_reason(job, /*two_degrees=*/false)) {
        rep.note = *reason;
        return rep;
    }
    rep.hypotheses_met = true;
    const FiniteGroup& g = job.group();
    SubgroupSet derived = commutator_subgroup(g);
    auto nl = vdetail::nonlinear_data(job);

    bool p_i = degree_set(*job.table).size() == 2;

    // Canonical candidate for the collection: the lifted centers Z(G/N) over
    // all admissible N.
    std::vector<SubgroupSet> lifted;
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        bool admissible = false;
        for (const auto& comm : nl.comms)
            if (n.contains(comm)) {
                admissible = true;
                break;
            }
        if (!admissible) continue;
        Quotient q = quotient(g, n);
        lifted.push_back(vdetail::preimage_subgroup(g, q, center(q.group)));
    }
    std::vector<SubgroupSet> collection = lifted;
    std::sort(collection.begin(), collection.end());
    collection.erase(std::unique(collection.begin(), collection.end()), collection.end());

    bool p_ii = true;
    for (const auto& m : collection)
        if (!is_normal(g, m) || m.order() != collection.front().order()) p_ii = false;

    bool p_iii = true;
    for (const auto& zn : lifted)
        if (zn.order() != lifted.front().order()) p_iii = false;
    if (lifted.empty()) rep.note = "no admissible normal subgroup";

    bool equivalent = (p_i == p_ii) && (p_ii == p_iii);
    bool rider_ok = true;
    if (p_i && p_ii && p_iii) {
        std::vector<SubgroupSet> centers = nl.centers;
        std::sort(centers.begin(), centers.end());
        centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
        rider_ok = collection == centers;
        if (!rider_ok)
            rep.witnesses.push_back(
                {"the lifted-center collection differs from the centers of nonlinear rows",
                 {{"collection_size", std::to_string(collection.size())},
                  {"nonlinear_center_count", std::to_string(centers.size())}}});
    }
    if (!equivalent)
        rep.witnesses.push_back({"the three conditions are not equivalent",
                                 {{"two_degrees", p_i ? "true" : "false"},
                                  {"equal_order_collection", p_ii ? "true" : "false"},
                                  {"lifted_orders_equal", p_iii ? "true" : "false"}}});
    if (p_i && !p_ii)
        rep.note = "canonical candidate (lifted centers) failed; this does not by itself "
                   "refute the existential";
    rep.conclusion_holds = equivalent && rider_ok;
    return rep;
}

inline VerificationReport verify_T34(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::T_pgroup, job);
    const FiniteGroup& g = job.group();
    if (g.is_abelian()) {
        rep.note = "group is abelian";
        return rep;
    }
    if (!vdetail::p_group_prime_opt(g)) {
        rep.note = "group is not a p-group";
        return rep;
    }
    if (degree_set(*job.table).size() != 2) {
        rep.note = "character degree set size differs from two";
        return rep;
    }
    rep.hypotheses_met = true;
    SubgroupSet derived = commutator_subgroup(g);
    auto nl = vdetail::nonlinear_data(job);

    bool p_i = is_gvz(*job.table).gvz;

    // (ii) through the two-degree characterization of the quotient, with a
    // bounded isoclinism cross-check against the bundled references.
    bool p_ii = true;
    bool crosscheck_ok = true;
    for (std::size_t i = 0; i < nl.rows.size(); ++i) {
        Quotient q = quotient(g, nl.comms[i]);
        auto qt = character_table(q.group);
        bool t1 = predicate_thm1_i(*qt);
        p_ii = p_ii && t1;
        auto cross = vdetail::isoclinic_to_refs(q.group, job.semi_es_refs, job.iso_cap);
        if (cross.any_compatible && cross.any_isoclinic != t1) {
            crosscheck_ok = false;
            rep.witnesses.push_back(
                {"degree characterization and reference isoclinism disagree on G/[Z(chi),G]",
                 {{"chi_row", std::to_string(nl.rows[i])},
                  {"two_degree_characterization", t1 ? "true" : "false"},
                  {"isoclinic_to_reference", cross.any_isoclinic ? "true" : "false"}}});
        }
    }

    // (iii) the quotient-center condition over the admissible lattice.
    bool p_iii = true;
    for (const SubgroupSet& n : job.normals()) {
        if (n.contains(derived)) continue;
        std::optional<Quotient> q;
        for (std::size_t i = 0; i < nl.rows.size() && p_iii; ++i) {
            if (!n.contains(nl.comms[i])) continue;
            if (!q) q = quotient(g, n);
            if (!(center(q->group) == vdetail::image_subgroup(*q, nl.centers[i])))
                p_iii = false;
        }
        if (!p_iii) break;
    }

    bool equivalent = (p_i == p_ii) && (p_ii == p_iii);
    if (!equivalent)
        rep.witnesses.push_back({"the three conditions are not equivalent",
                                 {{"gvz", p_i ? "true" : "false"},
                                  {"quotients_two_degree", p_ii ? "true" : "false"},
                                  {"quotient_center_condition", p_iii ? "true" : "false"}}});
    rep.conclusion_holds = equivalent && crosscheck_ok;
    return rep;
}

inline VerificationReport verify_thm1_equivalence(const VerifierJob& job) {
    auto rep = vdetail::base_report(TheoremId::T_thm1_equiv, job);
    const FiniteGroup& g = job.group();
    if (g.is_abelian()) {
        rep.note = "group is abelian";
        return rep;
    }
    if (!vdetail::p_group_prime_opt(g)) {
        rep.note = "group is not a p-group";
        return rep;
    }
    rep.hypotheses_met = true;

    bool p_i = predicate_thm1_i(*job.table);
    int w2 = -1, w3 = -1;
    bool p_ii = predicate_thm1_ii(*job.table, &w2);
    bool p_iii = predicate_thm1_iii(*job.table, &w3);
    std::string w5;
    bool p_v = predicate_thm1_v(job, &w5);

    bool equivalent = p_i == p_ii && p_ii == p_iii && p_iii == p_v;
    if (!equivalent) {
        Witness w{"the four computed conditions are not pairwise equal",
                  {{"degree_set_condition", p_i ? "true" : "false"},
                   {"class_coset_condition", p_ii ? "true" : "false"},
                   {"commutator_condition", p_iii ? "true" : "false"},
                   {"quotient_center_condition", p_v ? "true" : "false"}}};
        if (w2 >= 0) w.fields.emplace_back("class_coset_witness", element_label(g, w2));
        if (w3 >= 0) w.fields.emplace_back("commutator_witness", element_label(g, w3));
        if (!w5.empty()) w.fields.emplace_back("quotient_center_witness", w5);
        rep.witnesses.push_back(std::move(w));
    }

    // The isoclinism condition, checked one-directionally against bundled
    // semi-extraspecial references of compatible invariants.
    bool iso_ok = true;
    auto cross = vdetail::isoclinic_to_refs(g, job.semi_es_refs, job.iso_cap);
    if (p_i) {
        if (!cross.any_compatible) {
            if (rep.note.empty())
                rep.note = "no bundled semi-extraspecial reference of compatible invariants";
        } else if (!cross.any_isoclinic) {
            iso_ok = false;
            rep.witnesses.push_back(
                {"conditions hold but no compatible reference is isoclinic",
                 {{"compatible_references", "present"}}});
        }
    } else if (cross.any_isoclinic) {
        iso_ok = false;
        rep.witnesses.push_back({"conditions fail but a semi-extraspecial reference is isoclinic",
                                 {{"reference", cross.isoclinic_names.front()}}});
    }
    rep.conclusion_holds = equivalent && iso_ok;
    return rep;
}

// Runs every verifier in enum order. Hypothesis failures are recorded, not
// thrown; internal inconsistencies (the fault-injection path) become failed
// reports with the error as witness. Resource-cap errors propagate.
inline std::vector<VerificationReport> run_all(const VerifierJob& job) {
    using Fn = VerificationReport (*)(const VerifierJob&);
    static const std::array<std::pair<TheoremId, Fn>, 12> table = {{
        {TheoremId::L_class2, verify_class_two},
        {TheoremId::L_center_eq, verify_center_equality},
        {TheoremId::C_N_in_Zchi, verify_N_in_center},
        {TheoremId::L_center_ident, verify_center_identification},
        {TheoremId::L_linear_iff, verify_linear_iff},
        {TheoremId::L_quot_center_general, verify_quotient_center_general},
        {TheoremId::L_quot_center_gvz, verify_quotient_center_gvz},
        {TheoremId::T_elem_abelian, verify_elementary_abelian},
        {TheoremId::T_nl_quotient, verify_nl_quotient},
        {TheoremId::T_equivalences, verify_T33_equivalence},
        {TheoremId::T_pgroup, verify_T34},
        {TheoremId::T_thm1_equiv, verify_thm1_equivalence},
    }};
    std::vector<VerificationReport> out;
    for (const auto& [id, fn] : table) {
        auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        try {
            rep = fn(job);
        } catch (const LatticeTooLarge&) {
            throw;
        } catch (const SearchBudgetExceeded&) {
            throw;
        } catch (const CapExceeded&) {
            throw;
        } catch (const OrderExceeded&) {
            throw;
        } catch (const Error& e) {
            rep = vdetail::base_report(id, job);
            rep.hypotheses_met = true;
            rep.conclusion_holds = false;
            rep.witnesses.push_back(
                {"verification aborted by an internal inconsistency", {{"error", e.what()}}});
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rep.timings.emplace_back("total", secs);
        out.push_back(std::move(rep));
    }
    return out;
}

inline bool reports_all_pass(const std::vector<VerificationReport>& reps) {
    for (const auto& r : reps)
        if (r.conclusion_holds.has_value() && !*r.conclusion_holds) return false;
    return true;
}

}  // namespace charlab
