#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/group.hpp"
#include "charlab/subgroups.hpp"

namespace charlab {

// Quotient G/N together with the projection map. Cosets are labelled by
// their minimal element and numbered so that label order is ascending; the
// coset of the identity therefore gets index 0 whenever the ambient identity
// is element 0.
struct Quotient {
    FiniteGroup group;
    std::vector<int> coset_of;          // coset_of[g-element] = quotient element
    std::vector<int> coset_rep;         // minimal element of each coset
};

inline Quotient quotient(const FiniteGroup& g, const SubgroupSet& n) {
    if (!is_normal(g, n)) throw NotNormal("quotient by a non-normal subgroup");

    int order = g.order();
    std::vector<int> coset_min(static_cast<std::size_t>(order), -1);
    std::vector<int> reps;
    for (int a = 0; a < order; ++a) {
        if (coset_min[static_cast<std::size_t>(a)] >= 0) continue;
        // a is minimal in its coset because we scan in increasing order.
        for (int x : n.elements()) coset_min[static_cast<std::size_t>(g.mul(a, x))] = a;
        reps.push_back(a);
    }
    std::sort(reps.begin(), reps.end());

    std::map<int, int> index_of_rep;
    for (std::size_t i = 0; i < reps.size(); ++i)
        index_of_rep.emplace(reps[i], static_cast<int>(i));

    Quotient q;
    q.coset_rep = reps;
    q.coset_of.resize(static_cast<std::size_t>(order));
    for (int a = 0; a < order; ++a)
        q.coset_of[static_cast<std::size_t>(a)] =
            index_of_rep.at(coset_min[static_cast<std::size_t>(a)]);

    int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                q.coset_of[static_cast<std::size_t>(
                    g.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))];

    // The identity coset is the coset of g.identity(); reindex so it is 0.
    // With identity 0 in the ambient group this is already the case.
    int id_coset = q.coset_of[static_cast<std::size_t>(g.identity())];
    if (id_coset != 0) {
        std::vector<int> perm(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::swap(perm[0], perm[static_cast<std::size_t>(id_coset)]);
        // perm maps new index -> old index; build inverse for relabelling.
        std::vector<int> inv(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
        std::vector<std::vector<int>> t2(static_cast<std::size_t>(m),
                                         std::vector<int>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                t2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    inv[static_cast<std::size_t>(
                        table[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])];
        table = std::move(t2);
        std::vector<int> reps2(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            reps2[static_cast<std::size_t>(i)] = q.coset_rep[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        q.coset_rep = std::move(reps2);
        for (auto& c : q.coset_of) c = inv[static_cast<std::size_t>(c)];
    }

    q.group = FiniteGroup::from_trusted_table(std::move(table));
    return q;
}

// All normal subgroups, as the join-closure of the normal closures of single
// conjugacy classes. Every normal subgroup is a union of classes and is the
// join of the closures of the classes it contains, so this terminates with
// the full set. Raises LatticeTooLarge past the cap.
inline std::vector<SubgroupSet> normal_subgroups(const FiniteGroup& g, std::size_t cap = 10000) {
    std::vector<std::vector<int>> class_members;
    {
        std::vector<int> class_of(static_cast<std::size_t>(g.order()), -1);
        for (int a = 0; a < g.order(); ++a) {
            if (class_of[static_cast<std::size_t>(a)] >= 0) continue;
            std::vector<int> orbit;
            for (int x = 0; x < g.order(); ++x) {
                int y = g.conjugate(x, a);
                if (class_of[static_cast<std::size_t>(y)] < 0) {
                    class_of[static_cast<std::size_t>(y)] = 1;
                    orbit.push_back(y);
                }
            }
            class_members.push_back(std::move(orbit));
        }
    }

    std::set<SubgroupSet> lattice;
    lattice.insert(SubgroupSet::trivial(g));
    std::vector<SubgroupSet> atoms;
    for (const auto& cls : class_members) atoms.push_back(normal_closure(g, cls));

    std::vector<SubgroupSet> frontier(lattice.begin(), lattice.end());
    while (!frontier.empty()) {
        std::vector<SubgroupSet> next;
        for (const auto& h : frontier) {
            for (const auto& atom : atoms) {
                std::vector<int> joined = h.elements();
                joined.insert(joined.end(), atom.elements().begin(), atom.elements().end());
                SubgroupSet j = subgroup_generated(g, joined);
                if (lattice.insert(j).second) {
                    if (lattice.size() > cap)
                        throw LatticeTooLarge("normal subgroup count exceeds cap");
                    next.push_back(std::move(j));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<SubgroupSet> out(lattice.begin(), lattice.end());
    std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

// Lower central series G = G_1 >= G_2 = [G, G_1] >= ... down to the point it
// stabilises. Returns the series; the group is nilpotent iff the last term
// is trivial.
inline std::vector<SubgroupSet> lower_central_series(const FiniteGroup& g) {
    std::vector<SubgroupSet> series{SubgroupSet::whole(g)};
    for (;;) {
        SubgroupSet next = commutator_of(g, series.back(), SubgroupSet::whole(g));
        if (next == series.back()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

// Nilpotency class; -1 when the series stabilises above the identity.
inline int nilpotency_class(const FiniteGroup& g) {
    auto series = lower_central_series(g);
    if (series.back().order() != 1) return -1;
    return static_cast<int>(series.size()) - 1;
}

}  // namespace charlab
