#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/group.hpp"
#include "charlab/quotient.hpp"
#include "charlab/subgroups.hpp"

namespace charlab {

namespace detail {

struct ElementFingerprint {
    int order;
    int class_size;
    int centralizer;
    friend bool operator==(const ElementFingerprint&, const ElementFingerprint&) = default;
    friend auto operator<=>(const ElementFingerprint&, const ElementFingerprint&) = default;
};

inline std::vector<ElementFingerprint> fingerprints(const FiniteGroup& g) {
    int n = g.order();
    std::vector<int> class_size(static_cast<std::size_t>(n), 0);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        std::vector<int> orbit;
        for (int x = 0; x < n; ++x) {
            int y = g.conjugate(x, a);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                orbit.push_back(y);
            }
        }
        for (int y : orbit)
            class_size[static_cast<std::size_t>(y)] = static_cast<int>(orbit.size());
    }
    std::vector<ElementFingerprint> fp(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        int cent = 0;
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.mul(b, a)) ++cent;
        fp[static_cast<std::size_t>(a)] = {g.element_order(a),
                                           class_size[static_cast<std::size_t>(a)], cent};
    }
    return fp;
}

// Greedy generating set: repeatedly add the element whose closure with the
// current set grows the most, tie-broken by index for determinism.
inline std::vector<int> greedy_generators(const FiniteGroup& g) {
    int n = g.order();
    std::vector<int> gens;
    std::vector<char> closure(static_cast<std::size_t>(n), 0);
    closure[static_cast<std::size_t>(g.identity())] = 1;
    int closed = 1;

    auto close_with = [&](int extra) {
        std::vector<char> flags = closure;
        std::vector<int> frontier;
        for (int i = 0; i < n; ++i)
            if (flags[static_cast<std::size_t>(i)]) frontier.push_back(i);
        std::vector<int> gs = gens;
        gs.push_back(extra);
        int count = closed;
        if (!flags[static_cast<std::size_t>(extra)]) {
            flags[static_cast<std::size_t>(extra)] = 1;
            ++count;
            frontier.push_back(extra);
        }
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            for (int s : gs) {
                int next = g.mul(frontier[head], s);
                if (!flags[static_cast<std::size_t>(next)]) {
                    flags[static_cast<std::size_t>(next)] = 1;
                    ++count;
                    frontier.push_back(next);
                }
            }
        }
        return std::pair<int, std::vector<char>>(count, std::move(flags));
    };

    while (closed < n) {
        int best = -1;
        int best_size = -1;
        std::vector<char> best_flags;
        for (int cand = 0; cand < n; ++cand) {
            if (closure[static_cast<std::size_t>(cand)]) continue;
            auto [size, flags] = close_with(cand);
            if (size > best_size) {
                best_size = size;
                best = cand;
                best_flags = std::move(flags);
            }
        }
        gens.push_back(best);
        closure = std::move(best_flags);
        closed = best_size;
    }
    return gens;
}

}  // namespace detail

// Backtracking search over isomorphisms G -> H. Generators of G are assigned
// images in H filtered by (element order, class size, centralizer order)
// fingerprints; each assignment is propagated by multiplicative closure, so a
// completed assignment is a bijective homomorphism by construction. Every
// propagated product counts against the node budget.
class IsomorphismSearch {
  public:
    IsomorphismSearch(const FiniteGroup& g, const FiniteGroup& h, long long budget)
        : g_(&g), h_(&h), budget_(budget) {
        if (g.order() != h.order()) return;
        auto fpg = detail::fingerprints(g);
        auto fph = detail::fingerprints(h);
        {
            auto a = fpg;
            auto b = fph;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return;
        }
        gens_ = detail::greedy_generators(g);
        candidates_.resize(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (int y = 0; y < h.order(); ++y)
                if (fph[static_cast<std::size_t>(y)] ==
                    fpg[static_cast<std::size_t>(gens_[i])])
                    candidates_[i].push_back(y);
        compatible_ = true;
    }

    // Visits isomorphisms in a deterministic order until fn returns true.
    // Returns whether fn accepted one. Throws SearchBudgetExceeded.
    bool run(const std::function<bool(const std::vector<int>&)>& fn) {
        if (!compatible_) return false;
        int n = g_->order();
        map_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), -1);
        map_[static_cast<std::size_t>(g_->identity())] = h_->identity();
        used_[static_cast<std::size_t>(h_->identity())] = g_->identity();
        mapped_.assign(1, g_->identity());
        assigned_.clear();
        fn_ = &fn;
        return assign(0);
    }

    long long nodes_used() const { return nodes_; }

  private:
    bool assign(std::size_t idx) {
        if (idx == gens_.size()) {
            if (static_cast<int>(mapped_.size()) != g_->order())
                throw InternalInconsistency("generator closure did not cover the group");
            return (*fn_)(map_);
        }
        int gen = gens_[idx];
        for (int y : candidates_[idx]) {
            std::vector<std::pair<int, int>> trail;
            bool ok = true;
            if (map_[static_cast<std::size_t>(gen)] != -1) {
                ok = map_[static_cast<std::size_t>(gen)] == y;
            } else if (used_[static_cast<std::size_t>(y)] != -1) {
                ok = false;
            } else {
                map_[static_cast<std::size_t>(gen)] = y;
                used_[static_cast<std::size_t>(y)] = gen;
                mapped_.push_back(gen);
                trail.emplace_back(gen, y);
            }
            if (ok) {
                assigned_.push_back(gen);
                ok = close_and_check(trail);
                if (ok && assign(idx + 1)) return true;
                assigned_.pop_back();
            }
            for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
                map_[static_cast<std::size_t>(it->first)] = -1;
                used_[static_cast<std::size_t>(it->second)] = -1;
            }
            mapped_.resize(mapped_.size() - trail.size());
        }
        return false;
    }

    // Propagates m(x * g_j) = m(x) * m(g_j) over all mapped x and assigned
    // generators g_j, recording new assignments on the trail. Restarting from
    // the head means the final assignment re-verifies every pair, so a
    // surviving complete map is a homomorphism on all of G.
    bool close_and_check(std::vector<std::pair<int, int>>& trail) {
        for (std::size_t head = 0; head < mapped_.size(); ++head) {
            int x = mapped_[head];
            for (int gj : assigned_) {
                if (++nodes_ > budget_)
                    throw SearchBudgetExceeded("isomorphism search exceeded node budget");
                int z = g_->mul(x, gj);
                int w = h_->mul(map_[static_cast<std::size_t>(x)],
                                map_[static_cast<std::size_t>(gj)]);
                int& mz = map_[static_cast<std::size_t>(z)];
                if (mz == -1) {
                    if (used_[static_cast<std::size_t>(w)] != -1) return false;
                    mz = w;
                    used_[static_cast<std::size_t>(w)] = z;
                    mapped_.push_back(z);
                    trail.emplace_back(z, w);
                } else if (mz != w) {
                    return false;
                }
            }
        }
        return true;
    }

    const FiniteGroup* g_;
    const FiniteGroup* h_;
    long long budget_;
    long long nodes_ = 0;
    bool compatible_ = false;
    std::vector<int> gens_;
    std::vector<std::vector<int>> candidates_;
    std::vector<int> map_;
    std::vector<int> used_;
    std::vector<int> mapped_;
    std::vector<int> assigned_;
    const std::function<bool(const std::vector<int>&)>* fn_ = nullptr;
};

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                        const FiniteGroup& h,
                                                        long long budget = 10000000) {
    std::optional<std::vector<int>> result;
    IsomorphismSearch search(g, h, budget);
    search.run([&](const std::vector<int>& m) {
        result = m;
        return true;
    });
    return result;
}

inline bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                          long long budget = 10000000) {
    IsomorphismSearch search(g, h, budget);
    return search.run([](const std::vector<int>&) { return true; });
}

namespace detail {

// Given an isomorphism phi between the central quotients, checks that the
// forced commutator pairs theta([x, y]) = [x', y'] extend to an isomorphism
// of the derived subgroups. The commutator map is constant on center cosets,
// so the choice of coset representatives does not matter.
inline bool commutator_map_extends(const FiniteGroup& g, const FiniteGroup& h,
                                   const Quotient& qg, const Quotient& qh,
                                   const SubgroupSet& dg, const SubgroupSet& dh,
                                   const std::vector<int>& phi) {
    std::vector<int> theta(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> theta_used(static_cast<std::size_t>(h.order()), -1);
    auto set_pair = [&](int c, int d) {
        int& tc = theta[static_cast<std::size_t>(c)];
        if (tc == -1) {
            if (theta_used[static_cast<std::size_t>(d)] != -1) return false;
            tc = d;
            theta_used[static_cast<std::size_t>(d)] = c;
            return true;
        }
        return tc == d;
    };

    if (!set_pair(g.identity(), h.identity())) return false;
    int m = qg.group.order();
    for (int i = 0; i < m; ++i) {
        int x = qg.coset_rep[static_cast<std::size_t>(i)];
        int xh = qh.coset_rep[static_cast<std::size_t>(phi[static_cast<std::size_t>(i)])];
        for (int j = 0; j < m; ++j) {
            int y = qg.coset_rep[static_cast<std::size_t>(j)];
            int yh = qh.coset_rep[static_cast<std::size_t>(phi[static_cast<std::size_t>(j)])];
            if (!set_pair(g.commutator(x, y), h.commutator(xh, yh))) return false;
        }
    }

    // Multiplicative closure: commutators generate the derived subgroup and
    // are closed under inversion, so positive products reach all of it.
    std::vector<char> in_mapped(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> mapped;
    for (int c : dg.elements())
        if (theta[static_cast<std::size_t>(c)] != -1) {
            in_mapped[static_cast<std::size_t>(c)] = 1;
            mapped.push_back(c);
        }
    for (std::size_t a = 0; a < mapped.size(); ++a) {
        for (std::size_t b = 0; b < mapped.size(); ++b) {
            int prod = g.mul(mapped[a], mapped[b]);
            int img = h.mul(theta[static_cast<std::size_t>(mapped[a])],
                            theta[static_cast<std::size_t>(mapped[b])]);
            if (!set_pair(prod, img)) return false;
            if (!in_mapped[static_cast<std::size_t>(prod)]) {
                in_mapped[static_cast<std::size_t>(prod)] = 1;
                mapped.push_back(prod);
            }
        }
    }

    // Full verification pass: totality plus multiplicativity on every pair.
    for (int c : dg.elements()) {
        if (theta[static_cast<std::size_t>(c)] == -1) return false;
        if (!dh.contains(theta[static_cast<std::size_t>(c)])) return false;
    }
    for (int c : dg.elements())
        for (int d : dg.elements())
            if (theta[static_cast<std::size_t>(g.mul(c, d))] !=
                h.mul(theta[static_cast<std::size_t>(c)], theta[static_cast<std::size_t>(d)]))
                return false;
    return true;
}

}  // namespace detail

// Isoclinism test: some isomorphism between the central quotients must carry
// the commutator map of g to that of h via a compatible isomorphism of the
// derived subgroups. The node cap bounds the quotient isomorphism search.
inline bool is_isoclinic(const FiniteGroup& g, const FiniteGroup& h,
                         long long cap = 10000000) {
    SubgroupSet zg = center(g);
    SubgroupSet zh = center(h);
    if (g.order() / zg.order() != h.order() / zh.order()) return false;
    SubgroupSet dg = commutator_subgroup(g);
    SubgroupSet dh = commutator_subgroup(h);
    if (dg.order() != dh.order()) return false;

    Quotient qg = quotient(g, zg);
    Quotient qh = quotient(h, zh);
    try {
        IsomorphismSearch search(qg.group, qh.group, cap);
        return search.run([&](const std::vector<int>& phi) {
            return detail::commutator_map_extends(g, h, qg, qh, dg, dh, phi);
        });
    } catch (const SearchBudgetExceeded&) {
        throw CapExceeded("isoclinism search exceeded node cap");
    }
}

}  // namespace charlab
