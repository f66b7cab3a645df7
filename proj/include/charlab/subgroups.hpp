#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/group.hpp"

namespace charlab {

// A subgroup represented by the sorted vector of its element indices in the
// ambient group. Construction validates closure so that a SubgroupSet is a
// subgroup by invariant, not by convention.
class SubgroupSet {
  public:
    SubgroupSet() = default;

    SubgroupSet(const FiniteGroup& g, std::vector<int> elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        if (elements.empty() ||
            !std::binary_search(elements.begin(), elements.end(), g.identity()))
            throw NotSubgroup("element set lacks the identity");
        for (int a : elements) {
            if (a < 0 || a >= g.order())
                throw NotSubgroup("element index out of range: " + std::to_string(a));
            if (!std::binary_search(elements.begin(), elements.end(), g.inverse(a)))
                throw NotSubgroup("set not closed under inversion at element " +
                                  std::to_string(a));
            for (int b : elements)
                if (!std::binary_search(elements.begin(), elements.end(), g.mul(a, b)))
                    throw NotSubgroup("set not closed under product at (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
        }
        elements_ = std::move(elements);
    }

    static SubgroupSet trivial(const FiniteGroup& g) {
        return SubgroupSet(g, {g.identity()});
    }

    static SubgroupSet whole(const FiniteGroup& g) {
        std::vector<int> all(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
        return SubgroupSet(g, std::move(all));
    }

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    bool contains(int a) const {
        return std::binary_search(elements_.begin(), elements_.end(), a);
    }
    bool contains(const SubgroupSet& other) const {
        return std::includes(elements_.begin(), elements_.end(),
                             other.elements_.begin(), other.elements_.end());
    }

    bool operator==(const SubgroupSet& other) const { return elements_ == other.elements_; }
    bool operator!=(const SubgroupSet& other) const { return elements_ != other.elements_; }
    bool operator<(const SubgroupSet& other) const { return elements_ < other.elements_; }

  private:
    std::vector<int> elements_;
};

// Closure of a seed set under products and inverses.
inline SubgroupSet subgroup_generated(const FiniteGroup& g, const std::vector<int>& seeds) {
    std::set<int> members{g.identity()};
    std::vector<int> frontier{g.identity()};
    std::vector<int> gens = seeds;
    for (int s : seeds) gens.push_back(g.inverse(s));
    for (std::size_t head = 0; head < frontier.size(); ++head) {
        for (int s : gens) {
            int next = g.mul(frontier[head], s);
            if (members.insert(next).second) frontier.push_back(next);
        }
    }
    return SubgroupSet(g, std::vector<int>(members.begin(), members.end()));
}

inline SubgroupSet center(const FiniteGroup& g) {
    std::vector<int> elems;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central) elems.push_back(a);
    }
    return SubgroupSet(g, std::move(elems));
}

// [N, G] = <[n, g] : n in N, g in G>; with N = G this is the derived subgroup.
inline SubgroupSet commutator_subgroup(const FiniteGroup& g, const SubgroupSet& n) {
    std::vector<int> comms;
    for (int x : n.elements())
        for (int b = 0; b < g.order(); ++b) comms.push_back(g.commutator(x, b));
    return subgroup_generated(g, comms);
}

inline SubgroupSet commutator_subgroup(const FiniteGroup& g) {
    return commutator_subgroup(g, SubgroupSet::whole(g));
}

// [A, B] = <[a, b] : a in A, b in B>.
inline SubgroupSet commutator_of(const FiniteGroup& g, const SubgroupSet& a,
                                 const SubgroupSet& b) {
    std::vector<int> comms;
    for (int x : a.elements())
        for (int y : b.elements()) comms.push_back(g.commutator(x, y));
    return subgroup_generated(g, comms);
}

inline bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
    for (int x : h.elements())
        for (int a = 0; a < g.order(); ++a)
            if (!h.contains(g.conjugate(a, x))) return false;
    return true;
}

// Product set HK; a subgroup iff HK = KH, which holds when either factor is
// normal. Raises NeitherNormal when the product is not a subgroup.
inline SubgroupSet product_subgroup(const FiniteGroup& g, const SubgroupSet& h,
                                    const SubgroupSet& k) {
    std::set<int> hk, kh;
    for (int a : h.elements())
        for (int b : k.elements()) {
            hk.insert(g.mul(a, b));
            kh.insert(g.mul(b, a));
        }
    if (hk != kh) throw NeitherNormal("HK != KH, product set is not a subgroup");
    return SubgroupSet(g, std::vector<int>(hk.begin(), hk.end()));
}

// Normal closure of a single conjugacy class together with the identity.
inline SubgroupSet normal_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
    std::vector<int> all;
    for (int s : seeds)
        for (int a = 0; a < g.order(); ++a) all.push_back(g.conjugate(a, s));
    return subgroup_generated(g, all);
}

// Returns the prime p when the group is elementary abelian of exponent p.
// The trivial group returns 1, a designated marker meaning "elementary
// abelian for every prime"; callers comparing primes across quotients skip
// trivial ones. Returns nullopt otherwise.
inline std::optional<int> is_elementary_abelian(const FiniteGroup& g) {
    if (g.order() == 1) return 1;
    if (!g.is_abelian()) return std::nullopt;
    int p = 0;
    for (int a = 0; a < g.order(); ++a) {
        if (a == g.identity()) continue;
        int o = g.element_order(a);
        if (p == 0) p = o;
        if (o != p) return std::nullopt;
    }
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return std::nullopt;
    return p;
}

inline int subgroup_exponent(const FiniteGroup& g, const SubgroupSet& h) {
    long long e = 1;
    for (int a : h.elements()) e = std::lcm(e, static_cast<long long>(g.element_order(a)));
    return static_cast<int>(e);
}

// A subgroup materialized as a standalone group, with index maps in both
// directions. Element i of the standalone group is h.elements()[i].
struct EmbeddedSubgroup {
    FiniteGroup group;
    std::vector<int> to_ambient;
    std::vector<int> from_ambient;  // -1 outside the subgroup
};

inline EmbeddedSubgroup subgroup_as_group(const FiniteGroup& g, const SubgroupSet& h) {
    EmbeddedSubgroup out;
    out.to_ambient = h.elements();
    out.from_ambient.assign(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.to_ambient.size(); ++i)
        out.from_ambient[static_cast<std::size_t>(out.to_ambient[i])] = static_cast<int>(i);
    int m = h.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                out.from_ambient[static_cast<std::size_t>(
                    g.mul(out.to_ambient[static_cast<std::size_t>(a)],
                          out.to_ambient[static_cast<std::size_t>(b)]))];
    out.group = FiniteGroup::from_cayley_table(std::move(table));
    return out;
}

// Every subgroup, by cyclic-extension enumeration: grow each known subgroup
// by one extra generator until no new subgroups appear. Complete because any
// subgroup is reachable by adding its generators one at a time.
inline std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, std::size_t cap = 100000) {
    std::set<SubgroupSet> found;
    found.insert(SubgroupSet::trivial(g));
    std::vector<SubgroupSet> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
        std::vector<SubgroupSet> next;
        for (const auto& h : frontier) {
            for (int x = 0; x < g.order(); ++x) {
                if (h.contains(x)) continue;
                std::vector<int> seed = h.elements();
                seed.push_back(x);
                SubgroupSet k = subgroup_generated(g, seed);
                if (found.insert(k).second) {
                    if (found.size() > cap)
                        throw LatticeTooLarge("subgroup count exceeds cap");
                    next.push_back(std::move(k));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<SubgroupSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace charlab
