#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "charlab/errors.hpp"
#include "charlab/group.hpp"
#include "charlab/permutation.hpp"
#include "charlab/quotient.hpp"
#include "charlab/smallfield.hpp"
#include "charlab/subgroups.hpp"

namespace charlab {

// A deterministic construction plan for one group. Element numbering is
// fixed per kind:
//   cyclic/abelian: mixed-radix tuples over the invariant factors, first
//     factor most significant, so index 0 is the identity;
//   dihedral/symmetric/perm_gens/extraspecial-minus: BFS closure order of
//     the listed generators;
//   dicyclic: a^i b^j at index i + 2m*j;
//   heisenberg: triples (a,b,c) over GF(q) at index a*q^2 + b*q + c;
//   direct_product: (x,y) at index x*|B| + y;
//   central_product: quotient coset labels of the direct product, where the
//     identified subgroup is generated by the smallest-index central element
//     of the requested order in each factor, matched generator to generator.
struct GroupRecipe {
    enum class Kind {
        cyclic,
        abelian,
        dihedral,
        dicyclic,
        symmetric,
        extraspecial,
        heisenberg,
        direct_product,
        central_product,
        perm_gens,
        cayley,
    };

    Kind kind = Kind::cyclic;
    std::string name;
    std::vector<long long> params;      // see per-kind notes below
    std::vector<GroupRecipe> parts;     // product kinds
    std::vector<Permutation> gens;      // perm_gens
    int degree = 0;                     // perm_gens
    std::vector<std::vector<int>> cayley_table;  // cayley
};

// Closed-form order of a recipe, or 0 when only the build can tell
// (perm_gens closures).
inline long long recipe_order(const GroupRecipe& r) {
    switch (r.kind) {
        case GroupRecipe::Kind::cyclic:
            return r.params.at(0);
        case GroupRecipe::Kind::abelian: {
            long long n = 1;
            for (long long d : r.params) n *= d;
            return n;
        }
        case GroupRecipe::Kind::dihedral:
        case GroupRecipe::Kind::dicyclic:
            return r.params.at(0);
        case GroupRecipe::Kind::symmetric: {
            long long n = 1;
            for (long long i = 2; i <= r.params.at(0); ++i) n *= i;
            return n;
        }
        case GroupRecipe::Kind::extraspecial:
            return r.params.at(0) * r.params.at(0) * r.params.at(0);
        case GroupRecipe::Kind::heisenberg:
            return r.params.at(0) * r.params.at(0) * r.params.at(0);
        case GroupRecipe::Kind::direct_product: {
            long long n = 1;
            for (const auto& p : r.parts) n *= recipe_order(p);
            return n;
        }
        case GroupRecipe::Kind::central_product:
            return recipe_order(r.parts.at(0)) * recipe_order(r.parts.at(1)) / r.params.at(0);
        case GroupRecipe::Kind::perm_gens:
            return 0;
        case GroupRecipe::Kind::cayley:
            return static_cast<long long>(r.cayley_table.size());
    }
    return 0;
}

namespace cdetail {

inline void check_cap(long long order, std::size_t max_order, const std::string& name) {
    if (order > static_cast<long long>(max_order))
        throw OrderExceeded("recipe " + name + " has order " + std::to_string(order) +
                            " above the cap " + std::to_string(max_order));
}

inline FiniteGroup build_abelian(std::vector<long long> ds, std::size_t max_order,
                                 const std::string& name) {
    ds.erase(std::remove(ds.begin(), ds.end(), 1LL), ds.end());
    long long order = 1;
    for (long long d : ds) {
        if (d < 1) throw BadRecipe("nonpositive abelian factor in " + name);
        order *= d;
    }
    check_cap(order, max_order, name);
    int n = static_cast<int>(order);
    int k = static_cast<int>(ds.size());

    auto digits = [&](int x) {
        std::vector<int> out(static_cast<std::size_t>(k));
        for (int j = k - 1; j >= 0; --j) {
            out[static_cast<std::size_t>(j)] = x % static_cast<int>(ds[static_cast<std::size_t>(j)]);
            x /= static_cast<int>(ds[static_cast<std::size_t>(j)]);
        }
        return out;
    };
    auto encode = [&](const std::vector<int>& dg) {
        int x = 0;
        for (int j = 0; j < k; ++j)
            x = x * static_cast<int>(ds[static_cast<std::size_t>(j)]) + dg[static_cast<std::size_t>(j)];
        return x;
    };

    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            std::vector<int> dc(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j)
                dc[static_cast<std::size_t>(j)] =
                    (da[static_cast<std::size_t>(j)] + db[static_cast<std::size_t>(j)]) %
                    static_cast<int>(ds[static_cast<std::size_t>(j)]);
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = encode(dc);
        }
    }
    FiniteGroup g = FiniteGroup::from_trusted_table(std::move(table));

    // one rotation block per factor on disjoint points
    int total = 0;
    for (long long d : ds) total += static_cast<int>(d);
    std::vector<Permutation> perms;
    perms.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        auto dx = digits(x);
        std::vector<int> im(static_cast<std::size_t>(std::max(total, 1)));
        std::iota(im.begin(), im.end(), 0);
        int off = 0;
        for (int j = 0; j < k; ++j) {
            int d = static_cast<int>(ds[static_cast<std::size_t>(j)]);
            for (int t = 0; t < d; ++t)
                im[static_cast<std::size_t>(off + t)] =
                    off + (t + dx[static_cast<std::size_t>(j)]) % d;
            off += d;
        }
        perms.emplace_back(std::move(im));
    }
    g.attach_perms(std::move(perms));
    return g;
}

inline Permutation rotation(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) im[static_cast<std::size_t>(i)] = (i + 1) % m;
    return Permutation(std::move(im));
}

inline FiniteGroup build_dihedral(long long order, std::size_t max_order,
                                  const std::string& name) {
    if (order < 6 || order % 2) throw BadRecipe("dihedral order must be even and at least 6");
    check_cap(order, max_order, name);
    int m = static_cast<int>(order / 2);
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) im[static_cast<std::size_t>(i)] = (m - i) % m;
    return FiniteGroup::close_generators({rotation(m), Permutation(std::move(im))}, max_order);
}

inline FiniteGroup build_dicyclic(long long order, std::size_t max_order,
                                  const std::string& name) {
    if (order < 8 || order % 4) throw BadRecipe("dicyclic order must be a multiple of 4, at least 8");
    check_cap(order, max_order, name);
    int m2 = static_cast<int>(order / 2);  // order of a
    int m = m2 / 2;
    int n = static_cast<int>(order);
    auto idx = [m2](int i, int j) { return i + m2 * j; };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < m2; ++k)
                for (int l = 0; l < 2; ++l) {
                    int v;
                    if (j == 0)
                        v = idx((i + k) % m2, l);
                    else if (l == 0)
                        v = idx(((i - k) % m2 + m2) % m2, 1);
                    else
                        v = idx((((i - k + m) % m2) + m2) % m2, 0);
                    table[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(idx(k, l))] = v;
                }
    FiniteGroup g = FiniteGroup::from_cayley_table(std::move(table));
    g.attach_regular_perms();
    return g;
}

inline FiniteGroup build_symmetric(long long n, std::size_t max_order, const std::string& name) {
    if (n < 1 || n > 8) throw BadRecipe("symmetric degree out of range 1..8");
    long long order = 1;
    for (long long i = 2; i <= n; ++i) order *= i;
    check_cap(order, max_order, name);
    if (n == 1) return FiniteGroup::close_generators({}, max_order);
    std::vector<Permutation> gens;
    gens.push_back(rotation(static_cast<int>(n)));
    if (n > 2) {
        std::vector<int> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 0);
        std::swap(im[0], im[1]);
        gens.emplace_back(std::move(im));
    }
    return FiniteGroup::close_generators(gens, max_order);
}

inline FiniteGroup build_heisenberg(long long q, std::size_t max_order, const std::string& name) {
    check_cap(q * q * q, max_order, name);
    SmallField f = small_field(static_cast<int>(q));
    int qi = f.q;
    int n = qi * qi * qi;
    auto idx = [qi](int a, int b, int c) { return (a * qi + b) * qi + c; };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < qi; ++a)
        for (int b = 0; b < qi; ++b)
            for (int c = 0; c < qi; ++c)
                for (int a2 = 0; a2 < qi; ++a2)
                    for (int b2 = 0; b2 < qi; ++b2)
                        for (int c2 = 0; c2 < qi; ++c2)
                            table[static_cast<std::size_t>(idx(a, b, c))]
                                 [static_cast<std::size_t>(idx(a2, b2, c2))] =
                                     idx(f.add_at(a, a2), f.add_at(b, b2),
                                         f.add_at(f.add_at(c, c2), f.mul_at(a, b2)));
    FiniteGroup g = FiniteGroup::from_trusted_table(std::move(table));
    g.attach_regular_perms();
    return g;
}

// Exponent-p^2 extraspecial group of order p^3 for odd p: the p^2-cycle
// together with k -> k(1+p) mod p^2, which conjugates the cycle to its
// (1+p)-th power.
inline FiniteGroup build_extraspecial_minus_odd(long long p, std::size_t max_order,
                                                const std::string& name) {
    check_cap(p * p * p, max_order, name);
    int m = static_cast<int>(p * p);
    std::vector<int> im(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        im[static_cast<std::size_t>(k)] = static_cast<int>(
            (static_cast<long long>(k) * (1 + p)) % m);
    return FiniteGroup::close_generators({rotation(m), Permutation(std::move(im))}, max_order);
}

inline int smallest_central_of_order(const FiniteGroup& g, int m, const std::string& name) {
    SubgroupSet z = center(g);
    for (int x : z.elements())
        if (g.element_order(x) == m) return x;
    throw BadRecipe("no central element of order " + std::to_string(m) + " in factor of " + name);
}

inline FiniteGroup direct_product_of(const FiniteGroup& a, const FiniteGroup& b,
                                     std::size_t max_order, const std::string& name) {
    long long order = static_cast<long long>(a.order()) * b.order();
    check_cap(order, max_order, name);
    int n = static_cast<int>(order);
    int nb = b.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    FiniteGroup g = FiniteGroup::from_trusted_table(std::move(table));

    if (!a.element_perms().empty() && !b.element_perms().empty()) {
        int da = a.element_perms().front().degree();
        int db = b.element_perms().front().degree();
        std::vector<Permutation> perms;
        perms.reserve(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            const auto& pa = a.element_perms()[static_cast<std::size_t>(x / nb)];
            const auto& pb = b.element_perms()[static_cast<std::size_t>(x % nb)];
            std::vector<int> im(static_cast<std::size_t>(da + db));
            for (int i = 0; i < da; ++i) im[static_cast<std::size_t>(i)] = pa.apply(i);
            for (int i = 0; i < db; ++i) im[static_cast<std::size_t>(da + i)] = da + pb.apply(i);
            perms.emplace_back(std::move(im));
        }
        g.attach_perms(std::move(perms));
    } else {
        g.attach_regular_perms();
    }
    return g;
}

inline FiniteGroup central_product_of(const FiniteGroup& a, const FiniteGroup& b, int m,
                                      std::size_t max_order, const std::string& name) {
    check_cap(static_cast<long long>(a.order()) * b.order() / m, max_order, name);
    FiniteGroup prod = direct_product_of(a, b, max_order * static_cast<std::size_t>(m), name);
    int za = smallest_central_of_order(a, m, name);
    int zb = smallest_central_of_order(b, m, name);
    int nb = b.order();
    // graph of za^k -> zb^k, folded antidiagonally
    std::vector<int> graph;
    for (int k = 0; k < m; ++k)
        graph.push_back(a.power(za, k) * nb + b.power(zb, -k));
    Quotient q = quotient(prod, SubgroupSet(prod, std::move(graph)));
    FiniteGroup g = q.group;
    g.attach_regular_perms();
    return g;
}

}  // namespace cdetail

inline FiniteGroup build(const GroupRecipe& r, std::size_t max_order) {
    switch (r.kind) {
        case GroupRecipe::Kind::cyclic:
        case GroupRecipe::Kind::abelian:
            return cdetail::build_abelian(r.params, max_order, r.name);
        case GroupRecipe::Kind::dihedral:
            return cdetail::build_dihedral(r.params.at(0), max_order, r.name);
        case GroupRecipe::Kind::dicyclic:
            return cdetail::build_dicyclic(r.params.at(0), max_order, r.name);
        case GroupRecipe::Kind::symmetric:
            return cdetail::build_symmetric(r.params.at(0), max_order, r.name);
        case GroupRecipe::Kind::extraspecial: {
            long long p = r.params.at(0);
            bool plus = r.params.at(1) > 0;
            if (p == 2) {
                return plus ? cdetail::build_dihedral(8, max_order, r.name)
                            : cdetail::build_dicyclic(8, max_order, r.name);
            }
            if (p < 3 || p % 2 == 0) throw BadRecipe("extraspecial parameter must be 2 or an odd prime");
            return plus ? cdetail::build_heisenberg(p, max_order, r.name)
                        : cdetail::build_extraspecial_minus_odd(p, max_order, r.name);
        }
        case GroupRecipe::Kind::heisenberg:
            return cdetail::build_heisenberg(r.params.at(0), max_order, r.name);
        case GroupRecipe::Kind::direct_product: {
            if (r.parts.empty()) throw BadRecipe("direct product needs at least one factor");
            FiniteGroup g = build(r.parts.front(), max_order);
            for (std::size_t i = 1; i < r.parts.size(); ++i)
                g = cdetail::direct_product_of(g, build(r.parts[i], max_order), max_order, r.name);
            return g;
        }
        case GroupRecipe::Kind::central_product: {
            if (r.parts.size() != 2) throw BadRecipe("central product needs exactly two factors");
            return cdetail::central_product_of(build(r.parts.at(0), max_order),
                                               build(r.parts.at(1), max_order),
                                               static_cast<int>(r.params.at(0)), max_order,
                                               r.name);
        }
        case GroupRecipe::Kind::perm_gens: {
            for (const auto& p : r.gens)
                if (p.degree() != r.degree)
                    throw BadRecipe("generator degree differs from declared degree in " + r.name);
            if (r.gens.empty() && r.degree <= 0)
                throw BadRecipe("perm recipe with no generators and no degree in " + r.name);
            return FiniteGroup::close_generators(r.gens, max_order);
        }
        case GroupRecipe::Kind::cayley: {
            cdetail::check_cap(static_cast<long long>(r.cayley_table.size()), max_order, r.name);
            return FiniteGroup::from_cayley_table(r.cayley_table);
        }
    }
    throw BadRecipe("unknown recipe kind");
}

namespace cdetail {

inline std::vector<std::vector<int>> partitions_of(int n) {
    // descending partitions, lexicographically largest first
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// All invariant-factor chains d1 | d2 | ... | dk with product n, ascending.
inline std::vector<std::vector<long long>> invariant_factor_chains(long long n) {
    std::vector<std::pair<long long, int>> fact;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            fact.emplace_back(p, e);
        }
    if (m > 1) fact.emplace_back(m, 1);

    if (n == 1) return {{1}};
    std::vector<std::vector<std::vector<int>>> parts;
    for (std::size_t i = 0; i < fact.size(); ++i) parts.push_back(partitions_of(fact[i].second));

    std::vector<std::vector<long long>> out;
    std::vector<std::size_t> pick(fact.size(), 0);
    while (true) {
        std::size_t width = 0;
        for (std::size_t i = 0; i < fact.size(); ++i)
            width = std::max(width, parts[i][pick[i]].size());
        std::vector<long long> chain(width, 1);
        for (std::size_t i = 0; i < fact.size(); ++i) {
            const auto& lambda = parts[i][pick[i]];
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                long long pw = 1;
                for (int t = 0; t < lambda[j]; ++t) pw *= fact[i].first;
                chain[j] *= pw;
            }
        }
        std::reverse(chain.begin(), chain.end());  // ascending, d1 | d2 | ...
        out.push_back(std::move(chain));
        std::size_t i = 0;
        for (; i < fact.size(); ++i) {
            if (++pick[i] < parts[i].size()) break;
            pick[i] = 0;
        }
        if (i == fact.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string abelian_name(const std::vector<long long>& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i)
        s += (i ? "x" : "") + std::string("C") + std::to_string(chain[i]);
    return s;
}

}  // namespace cdetail

inline GroupRecipe recipe_cyclic(long long n) {
    GroupRecipe r;
    r.kind = GroupRecipe::Kind::cyclic;
    r.name = "C" + std::to_string(n);
    r.params = {n};
    return r;
}

inline GroupRecipe recipe_named(GroupRecipe::Kind kind, std::string name,
                                std::vector<long long> params) {
    GroupRecipe r;
    r.kind = kind;
    r.name = std::move(name);
    r.params = std::move(params);
    return r;
}

// The shipped test suite: every abelian group of order at most 32 by
// invariant factors, the standard small nonabelian families, both
// extraspecial types at orders 27 and 32, the order-64 Heisenberg group,
// and two direct products as contrast cases.
inline std::vector<GroupRecipe> bundled_catalog() {
    std::vector<GroupRecipe> out;
    for (long long n = 1; n <= 32; ++n)
        for (const auto& chain : cdetail::invariant_factor_chains(n)) {
            if (chain.size() == 1) {
                out.push_back(recipe_cyclic(n));
            } else {
                GroupRecipe r;
                r.kind = GroupRecipe::Kind::abelian;
                r.name = cdetail::abelian_name(chain);
                r.params = chain;
                out.push_back(std::move(r));
            }
        }

    out.push_back(recipe_named(GroupRecipe::Kind::dihedral, "D8", {8}));
    out.push_back(recipe_named(GroupRecipe::Kind::dicyclic, "Q8", {8}));
    out.push_back(recipe_named(GroupRecipe::Kind::dihedral, "D16", {16}));
    out.push_back(recipe_named(GroupRecipe::Kind::dicyclic, "Q16", {16}));

    {
        // modular group of order 16: the 8-cycle twisted by its 5th power
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::perm_gens;
        r.name = "M4(2)";
        r.degree = 8;
        r.gens.push_back(Permutation::from_cycles({{1, 2, 3, 4, 5, 6, 7, 8}}, 8));
        r.gens.push_back(Permutation::from_cycles({{2, 6}, {4, 8}}, 8));
        out.push_back(std::move(r));
    }

    out.push_back(recipe_named(GroupRecipe::Kind::symmetric, "S3", {3}));
    out.push_back(recipe_named(GroupRecipe::Kind::symmetric, "S4", {4}));

    out.push_back(recipe_named(GroupRecipe::Kind::heisenberg, "Heis27", {3}));
    out.push_back(recipe_named(GroupRecipe::Kind::extraspecial, "ES27exp9", {3, -1}));

    {
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::central_product;
        r.name = "ES32plus";
        r.params = {2};
        r.parts = {recipe_named(GroupRecipe::Kind::dihedral, "D8", {8}),
                   recipe_named(GroupRecipe::Kind::dihedral, "D8", {8})};
        out.push_back(std::move(r));
    }
    {
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::central_product;
        r.name = "ES32minus";
        r.params = {2};
        r.parts = {recipe_named(GroupRecipe::Kind::dihedral, "D8", {8}),
                   recipe_named(GroupRecipe::Kind::dicyclic, "Q8", {8})};
        out.push_back(std::move(r));
    }

    out.push_back(recipe_named(GroupRecipe::Kind::heisenberg, "Heis64", {4}));

    {
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::direct_product;
        r.name = "D8xC2";
        r.parts = {recipe_named(GroupRecipe::Kind::dihedral, "D8", {8}), recipe_cyclic(2)};
        out.push_back(std::move(r));
    }
    {
        GroupRecipe r;
        r.kind = GroupRecipe::Kind::direct_product;
        r.name = "Heis27xC3";
        r.parts = {recipe_named(GroupRecipe::Kind::heisenberg, "Heis27", {3}), recipe_cyclic(3)};
        out.push_back(std::move(r));
    }
    return out;
}

// Recipe strings accepted on the command line: either a bundled catalog
// name, or kind:params with params as in the examples
// cyclic:6  abelian:2,4  dihedral:8  dicyclic:8  symmetric:4
// extraspecial:3,plus  heisenberg:3
inline GroupRecipe parse_recipe_string(const std::string& text) {
    for (auto& r : bundled_catalog())
        if (r.name == text) return r;

    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw BadRecipe("unknown recipe '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    std::vector<std::string> tokens;
    std::string cur;
    for (char c : rest) {
        if (c == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    tokens.push_back(cur);

    auto as_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw BadRecipe("bad numeric parameter '" + s + "' in recipe '" + text + "'");
        }
    };

    GroupRecipe r;
    r.name = text;
    if (kind == "cyclic") {
        r.kind = GroupRecipe::Kind::cyclic;
        r.params = {as_int(tokens.at(0))};
    } else if (kind == "abelian") {
        r.kind = GroupRecipe::Kind::abelian;
        for (auto& t : tokens) r.params.push_back(as_int(t));
    } else if (kind == "dihedral") {
        r.kind = GroupRecipe::Kind::dihedral;
        r.params = {as_int(tokens.at(0))};
    } else if (kind == "dicyclic") {
        r.kind = GroupRecipe::Kind::dicyclic;
        r.params = {as_int(tokens.at(0))};
    } else if (kind == "symmetric") {
        r.kind = GroupRecipe::Kind::symmetric;
        r.params = {as_int(tokens.at(0))};
    } else if (kind == "extraspecial") {
        r.kind = GroupRecipe::Kind::extraspecial;
        if (tokens.size() != 2 || (tokens[1] != "plus" && tokens[1] != "minus"))
            throw BadRecipe("extraspecial recipe needs p,plus or p,minus: '" + text + "'");
        r.params = {as_int(tokens[0]), tokens[1] == "plus" ? 1 : -1};
    } else if (kind == "heisenberg") {
        r.kind = GroupRecipe::Kind::heisenberg;
        r.params = {as_int(tokens.at(0))};
    } else {
        throw BadRecipe("unknown recipe kind '" + kind + "'");
    }
    return r;
}

}  // namespace charlab
