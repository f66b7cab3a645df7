#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/permutation.hpp"

namespace charlab {

// A finite group stored as its full Cayley table. Elements are the indices
// 0..n-1; table()[a][b] is the product a*b. For groups built by closure or
// by the catalog constructions the identity is element 0; for groups read
// from an explicit table the identity keeps its original index.
class FiniteGroup {
  public:
    FiniteGroup() = default;

    // Closes a generating set of permutations under multiplication by BFS
    // and returns the abstract group on the enumerated elements.
    static FiniteGroup close_generators(const std::vector<Permutation>& gens,
                                        std::size_t max_order);

    // Validates an explicit table (square, Latin, associative, with identity
    // and inverses) and wraps it. Associativity uses Light's test against a
    // greedily chosen generating set.
    static FiniteGroup from_cayley_table(std::vector<std::vector<int>> table);

    // Wraps a table that is known valid by construction. Identity must be 0.
    static FiniteGroup from_trusted_table(std::vector<std::vector<int>> table) {
        FiniteGroup g;
        g.table_ = std::move(table);
        g.identity_ = 0;
        g.build_inverses();
        return g;
    }

    // Attaches the given permutation realisation, one word per element, so
    // witnesses and class representatives print as cycle words.
    void attach_perms(std::vector<Permutation> perms) {
        if (static_cast<int>(perms.size()) != order())
            throw InvalidPermutation("one permutation word per element required");
        element_perms_ = std::move(perms);
    }

    // Left-regular realisation computed from the table itself; a canonical
    // labelling for groups constructed directly as Cayley tables.
    void attach_regular_perms() {
        std::vector<Permutation> perms;
        perms.reserve(static_cast<std::size_t>(order()));
        for (int g = 0; g < order(); ++g) {
            std::vector<int> im(static_cast<std::size_t>(order()));
            for (int x = 0; x < order(); ++x)
                im[static_cast<std::size_t>(x)] = mul(g, x);
            perms.emplace_back(std::move(im));
        }
        element_perms_ = std::move(perms);
    }

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const {
        return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    int commutator(int a, int b) const {
        return mul(mul(inverse(a), inverse(b)), mul(a, b));
    }

    int power(int a, long long k) const {
        int n = order();
        (void)n;
        if (k < 0) { a = inverse(a); k = -k; }
        int result = identity_;
        int base = a;
        while (k > 0) {
            if (k & 1) result = mul(result, base);
            base = mul(base, base);
            k >>= 1;
        }
        return result;
    }

    int element_order(int a) const {
        int x = a;
        int k = 1;
        while (x != identity_) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    // lcm of element orders.
    int exponent() const {
        long long e = 1;
        for (int a = 0; a < order(); ++a)
            e = std::lcm(e, static_cast<long long>(element_order(a)));
        return static_cast<int>(e);
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    const std::vector<std::vector<int>>& table() const { return table_; }

    // Permutation realisation of generator words, kept when the group was
    // built by close_generators; empty otherwise.
    const std::vector<Permutation>& element_perms() const { return element_perms_; }

    bool operator==(const FiniteGroup& other) const {
        return identity_ == other.identity_ && table_ == other.table_;
    }

    // FNV-1a over the flattened table; used as a cache key prefilter.
    std::uint64_t table_hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(static_cast<std::uint64_t>(table_.size()));
        for (const auto& row : table_)
            for (int v : row) mix(static_cast<std::uint64_t>(v));
        return h;
    }

  private:
    void build_inverses() {
        int n = order();
        inverses_.assign(static_cast<std::size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (mul(a, b) == identity_) {
                    if (mul(b, a) != identity_)
                        throw NoInverse("one-sided inverse at element " + std::to_string(a));
                    inverses_[static_cast<std::size_t>(a)] = b;
                    break;
                }
            }
            if (inverses_[static_cast<std::size_t>(a)] < 0)
                throw NoInverse("no inverse for element " + std::to_string(a));
        }
    }

    std::vector<std::vector<int>> table_;
    std::vector<int> inverses_;
    std::vector<Permutation> element_perms_;
    int identity_ = 0;
};

inline FiniteGroup FiniteGroup::close_generators(const std::vector<Permutation>& gens,
                                                 std::size_t max_order) {
    int degree = gens.empty() ? 1 : gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != degree) throw InvalidPermutation("generators of mixed degree");

    // BFS from the identity; elements are numbered in discovery order so the
    // identity is element 0 and the numbering is reproducible.
    std::vector<Permutation> elems;
    std::map<Permutation, int> index_of;
    elems.push_back(Permutation::identity(degree));
    index_of.emplace(elems.back(), 0);

    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = elems[head] * g;
            if (index_of.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (elems.size() > max_order)
                    throw OrderExceeded("closure exceeds cap of " + std::to_string(max_order) +
                                        " elements");
            }
        }
    }

    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index_of.at(elems[static_cast<std::size_t>(a)] * elems[static_cast<std::size_t>(b)]);

    FiniteGroup result = from_trusted_table(std::move(table));
    result.element_perms_ = std::move(elems);
    return result;
}

inline FiniteGroup FiniteGroup::from_cayley_table(std::vector<std::vector<int>> table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw NoIdentity("empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NotAssociative("table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw NotAssociative("table entry out of range: " + std::to_string(v));
    }

    // Latin square check: every row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(static_cast<std::size_t>(n), false);
        std::vector<bool> seen_col(static_cast<std::size_t>(n), false);
        for (int b = 0; b < n; ++b) {
            int r = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            int c = table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
            if (seen_row[static_cast<std::size_t>(r)])
                throw NotAssociative("row " + std::to_string(a) + " repeats entry");
            if (seen_col[static_cast<std::size_t>(c)])
                throw NotAssociative("column " + std::to_string(a) + " repeats entry");
            seen_row[static_cast<std::size_t>(r)] = true;
            seen_col[static_cast<std::size_t>(c)] = true;
        }
    }

    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] == a &&
                 table[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == a;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw NoIdentity("no two-sided identity element");

    // Light's associativity test: it suffices to verify a(xb) = (ax)b for all
    // x in a generating set. Build one greedily from the closure of {}.
    std::vector<int> gens;
    {
        std::vector<bool> reached(static_cast<std::size_t>(n), false);
        reached[static_cast<std::size_t>(identity)] = true;
        int reached_count = 1;
        while (reached_count < n) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!reached[static_cast<std::size_t>(v)]) { pick = v; break; }
            gens.push_back(pick);
            // Re-close under the chosen generators (products of reached elements
            // with pick on either side, iterated to a fixed point).
            bool changed = true;
            reached[static_cast<std::size_t>(pick)] = true;
            ++reached_count;
            while (changed) {
                changed = false;
                for (int a = 0; a < n; ++a) {
                    if (!reached[static_cast<std::size_t>(a)]) continue;
                    for (int g : gens) {
                        int p = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(g)];
                        int q = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)];
                        if (!reached[static_cast<std::size_t>(p)]) {
                            reached[static_cast<std::size_t>(p)] = true;
                            ++reached_count;
                            changed = true;
                        }
                        if (!reached[static_cast<std::size_t>(q)]) {
                            reached[static_cast<std::size_t>(q)] = true;
                            ++reached_count;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    for (int x : gens) {
        for (int a = 0; a < n; ++a) {
            int ax = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
            for (int b = 0; b < n; ++b) {
                int xb = table[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)];
                int lhs = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(xb)];
                int rhs = table[static_cast<std::size_t>(ax)][static_cast<std::size_t>(b)];
                if (lhs != rhs)
                    throw NotAssociative("a(xb) != (ax)b at a=" + std::to_string(a) +
                                         " x=" + std::to_string(x) + " b=" + std::to_string(b));
            }
        }
    }

    FiniteGroup g;
    g.table_ = std::move(table);
    g.identity_ = identity;
    g.build_inverses();
    return g;
}

}  // namespace charlab
