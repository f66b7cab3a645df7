#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "charlab/char_table.hpp"
#include "charlab/cyclotomic.hpp"
#include "charlab/errors.hpp"
#include "charlab/quotient.hpp"
#include "charlab/subgroups.hpp"

namespace charlab {

// ker chi = {g : chi(g) = chi(1)}, expanded from classes to elements.
inline SubgroupSet kernel_of(const CharacterTable& t, int row) {
    const CharacterRow& r = t.rows[static_cast<std::size_t>(row)];
    CyclotomicValue deg = CyclotomicValue::integer(t.exponent, static_cast<long>(r.degree));
    std::vector<int> elems;
    for (int c = 0; c < t.classes.num_classes; ++c)
        if (r.values[static_cast<std::size_t>(c)].equals(deg))
            for (int x : t.classes.members[static_cast<std::size_t>(c)]) elems.push_back(x);
    return SubgroupSet(*t.group, std::move(elems));
}

// Z(chi) = {g : |chi(g)| = chi(1)}, decided exactly via chi(g) * chi(g^-1).
inline SubgroupSet center_of(const CharacterTable& t, int row) {
    const CharacterRow& r = t.rows[static_cast<std::size_t>(row)];
    mpz_class deg_sq = mpz_class(static_cast<long>(r.degree)) * static_cast<long>(r.degree);
    std::vector<int> elems;
    for (int c = 0; c < t.classes.num_classes; ++c) {
        int ic = t.classes.inverse_class[static_cast<std::size_t>(c)];
        if (abs_squared_equals(r.values[static_cast<std::size_t>(c)],
                               r.values[static_cast<std::size_t>(ic)], deg_sq))
            for (int x : t.classes.members[static_cast<std::size_t>(c)]) elems.push_back(x);
    }
    return SubgroupSet(*t.group, std::move(elems));
}

inline std::vector<long long> degree_set(const CharacterTable& t) {
    std::vector<long long> ds;
    for (const auto& r : t.rows) ds.push_back(r.degree);
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

inline std::vector<int> nonlinear_rows(const CharacterTable& t) {
    std::vector<int> rows;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (t.rows[r].degree > 1) rows.push_back(static_cast<int>(r));
    return rows;
}

struct GvzRowEvidence {
    int row;
    bool vanishes_off_center;    // chi(g) = 0 on every class outside Z(chi)
    bool degree_sq_eq_index;     // chi(1)^2 = |G : Z(chi)|
    int witness_class = -1;      // a non-vanishing class outside the center, when any
};

struct GvzResult {
    bool gvz;
    std::vector<GvzRowEvidence> per_row;
};

// The two per-row criteria are equivalent by a standard theorem, so their
// disagreement can only mean the table itself is wrong.
inline GvzResult is_gvz(const CharacterTable& t) {
    if (t.group->is_abelian())
        throw AbelianInput("the GVZ property is defined for nonabelian groups");
    GvzResult res;
    res.gvz = true;
    mpz_class order(t.group->order());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const CharacterRow& row = t.rows[r];
        SubgroupSet zchi = center_of(t, static_cast<int>(r));
        GvzRowEvidence ev;
        ev.row = static_cast<int>(r);
        ev.vanishes_off_center = true;
        for (int c = 0; c < t.classes.num_classes; ++c) {
            if (zchi.contains(t.classes.representative[static_cast<std::size_t>(c)])) continue;
            if (!row.values[static_cast<std::size_t>(c)].is_zero()) {
                ev.vanishes_off_center = false;
                ev.witness_class = c;
                break;
            }
        }
        ev.degree_sq_eq_index =
            mpz_class(static_cast<long>(row.degree)) * static_cast<long>(row.degree) * zchi.order() == order;
        if (ev.vanishes_off_center != ev.degree_sq_eq_index)
            throw InternalInconsistency(
                "vanishing and degree-index criteria disagree on row " + std::to_string(r));
        res.gvz = res.gvz && ev.vanishes_off_center;
        res.per_row.push_back(ev);
    }
    return res;
}

// Inflation correspondence between Irr(G/N) and the rows of G with N in the
// kernel: quotient row psi matches parent row chi when chi(g) = psi(gN) for
// every g, checked exactly per class.
struct QuotientCharacters {
    Quotient quot;
    std::shared_ptr<const CharacterTable> table;  // table of quot.group
    std::vector<int> parent_row;                  // one parent row per quotient row
};

inline QuotientCharacters quotient_characters(const CharacterTable& t, const SubgroupSet& n) {
    const FiniteGroup& g = *t.group;
    QuotientCharacters out;
    out.quot = quotient(g, n);
    out.table = character_table(out.quot.group);
    int e_parent = t.exponent;
    if (e_parent % out.table->exponent != 0)
        throw InternalInconsistency("quotient exponent does not divide the parent exponent");

    int kq = out.table->classes.num_classes;
    int kp = t.classes.num_classes;
    // Class of the quotient image of each parent class representative.
    std::vector<int> image_class(static_cast<std::size_t>(kp));
    for (int c = 0; c < kp; ++c) {
        int rep = t.classes.representative[static_cast<std::size_t>(c)];
        image_class[static_cast<std::size_t>(c)] =
            out.table->classes.class_of[static_cast<std::size_t>(
                out.quot.coset_of[static_cast<std::size_t>(rep)])];
    }

    for (int qr = 0; qr < static_cast<int>(out.table->rows.size()); ++qr) {
        const CharacterRow& psi = out.table->rows[static_cast<std::size_t>(qr)];
        std::vector<CyclotomicValue> inflated(static_cast<std::size_t>(kq));
        for (int qc = 0; qc < kq; ++qc)
            inflated[static_cast<std::size_t>(qc)] =
                psi.values[static_cast<std::size_t>(qc)].embed(e_parent);

        int match = -1;
        for (int pr = 0; pr < static_cast<int>(t.rows.size()); ++pr) {
            const CharacterRow& chi = t.rows[static_cast<std::size_t>(pr)];
            if (chi.degree != psi.degree) continue;
            bool same = true;
            for (int c = 0; c < kp && same; ++c)
                same = chi.values[static_cast<std::size_t>(c)].equals(
                    inflated[static_cast<std::size_t>(
                        image_class[static_cast<std::size_t>(c)])]);
            if (same) {
                if (match >= 0)
                    throw MatchFailed("two parent rows inflate identically for quotient row " +
                                      std::to_string(qr));
                match = pr;
            }
        }
        if (match < 0)
            throw MatchFailed("no parent row matches quotient row " + std::to_string(qr));
        out.parent_row.push_back(match);
    }
    return out;
}

}  // namespace charlab
