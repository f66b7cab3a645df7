#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "charlab/conjugacy.hpp"
#include "charlab/cyclotomic.hpp"
#include "charlab/errors.hpp"
#include "charlab/gfp.hpp"
#include "charlab/group.hpp"

namespace charlab {

struct CharacterRow {
    long long degree;
    std::vector<CyclotomicValue> values;  // one per conjugacy class
};

struct CharacterTable {
    std::shared_ptr<const FiniteGroup> group;
    ConjugacyClasses classes;
    int identity_class;
    int exponent;
    long long prime;  // the Dixon prime the table was lifted from
    std::vector<CharacterRow> rows;
};

// Smallest prime p with p = 1 (mod e) and p^2 >= 4 * order, so that degrees
// and multiplicities (all bounded by sqrt(order)) lift uniquely from their
// residues and GF(p) contains the e-th roots of unity.
inline long long dixon_prime(long long order, long long e) {
    auto is_prime = [](long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (long long p = 2;; ++p) {
        if (p % e != 1 % e) continue;
        if (p * p < 4 * order) continue;
        if (is_prime(p)) return p;
    }
}

// Simultaneous eigenvectors over GF(p) of the class-sum matrices
// (M_i)[t][j] = a[i][j][t], each normalized to 1 at the identity class.
// Found by iterative eigenspace refinement: each matrix splits every
// current invariant subspace by the eigenvalues of its restriction.
inline std::vector<gfp::Vector> irreducible_eigenbasis_mod_p(
    const std::vector<std::vector<std::vector<long long>>>& a, long long p,
    int identity_class) {
    int k = static_cast<int>(a.size());
    std::vector<gfp::Matrix> spaces{gfp::identity(k)};

    for (int i = 0; i < k; ++i) {
        bool all_split = true;
        for (const auto& w : spaces)
            if (w[0].size() > 1) all_split = false;
        if (all_split) break;

        gfp::Matrix mi(static_cast<std::size_t>(k), gfp::Vector(static_cast<std::size_t>(k)));
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < k; ++j)
                mi[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(t)] %
                    p;

        std::vector<gfp::Matrix> next;
        for (auto& w : spaces) {
            std::size_t d = w[0].size();
            if (d == 1) {
                next.push_back(std::move(w));
                continue;
            }
            // Restriction B with M_i W = W B, solved column by column.
            gfp::Matrix b(d, gfp::Vector(d));
            for (std::size_t c = 0; c < d; ++c) {
                gfp::Vector y(static_cast<std::size_t>(k), 0);
                for (int t = 0; t < k; ++t) {
                    long long acc = 0;
                    for (int j = 0; j < k; ++j)
                        acc = (acc + mi[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] *
                                         w[static_cast<std::size_t>(j)][c]) %
                              p;
                    y[static_cast<std::size_t>(t)] = acc;
                }
                gfp::Vector x = gfp::solve(w, y, p);
                for (std::size_t r = 0; r < d; ++r) b[r][c] = x[r];
            }

            gfp::Vector roots = gfp::poly_roots(gfp::char_poly(b, p), p);
            if (roots.size() <= 1) {
                next.push_back(std::move(w));
                continue;
            }
            std::size_t covered = 0;
            for (long long lambda : roots) {
                gfp::Matrix shifted = b;
                for (std::size_t r = 0; r < d; ++r)
                    shifted[r][r] = (shifted[r][r] - lambda % p + p) % p;
                std::vector<gfp::Vector> ker = gfp::kernel_basis(std::move(shifted), p);
                if (ker.empty()) continue;
                covered += ker.size();
                gfp::Matrix sub(static_cast<std::size_t>(k), gfp::Vector(ker.size()));
                for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
                    for (std::size_t c = 0; c < ker.size(); ++c) {
                        long long acc = 0;
                        for (std::size_t t = 0; t < d; ++t)
                            acc = (acc + w[r][t] * ker[c][t]) % p;
                        sub[r][c] = acc;
                    }
                next.push_back(std::move(sub));
            }
            if (covered != d)
                throw SplitFailed("restriction matrix is not diagonalizable over GF(p)");
        }
        spaces = std::move(next);
    }

    std::vector<gfp::Vector> out;
    for (const auto& w : spaces) {
        if (w[0].size() != 1)
            throw SplitFailed("a common eigenspace has dimension above 1");
        gfp::Vector v(static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) v[static_cast<std::size_t>(t)] = w[static_cast<std::size_t>(t)][0];
        long long pivot = v[static_cast<std::size_t>(identity_class)];
        if (pivot == 0)
            throw SplitFailed("eigenvector vanishes at the identity class");
        long long inv = gfp::mod_inv(pivot, p);
        for (auto& x : v) x = x * inv % p;
        out.push_back(std::move(v));
    }
    return out;
}

// Recover exact character rows from the normalized eigenvectors:
// the degree from d^2 = |G| / (sum |C_c| v_c v_{c^-1}) mod p, then the
// multiplicity of each e-th root of unity in chi(g_c) by inverse discrete
// Fourier transform over GF(p); residues lift uniquely since they are
// bounded by chi(1) < p.
inline std::vector<CharacterRow> lift_characters(const FiniteGroup& g,
                                                 const ConjugacyClasses& cc,
                                                 const std::vector<gfp::Vector>& eigvecs,
                                                 long long p) {
    int k = cc.num_classes;
    long long order = g.order();
    int e = g.exponent();
    long long theta = gfp::primitive_root_of_unity(e, p);
    long long einv = gfp::mod_inv(e, p);

    // theta_pow[m] = theta^m, indices mod e.
    std::vector<long long> theta_pow(static_cast<std::size_t>(e));
    theta_pow[0] = 1 % p;
    for (int m = 1; m < e; ++m) theta_pow[static_cast<std::size_t>(m)] = theta_pow[static_cast<std::size_t>(m - 1)] * theta % p;

    long long isqrt = 0;
    while ((isqrt + 1) * (isqrt + 1) <= order) ++isqrt;

    std::vector<CharacterRow> rows;
    mpz_class degree_sq_sum = 0;
    for (const auto& v : eigvecs) {
        long long s = 0;
        for (int c = 0; c < k; ++c) {
            long long size = static_cast<long long>(cc.members[static_cast<std::size_t>(c)].size());
            s = (s + size % p * v[static_cast<std::size_t>(c)] % p *
                         v[static_cast<std::size_t>(cc.inverse_class[static_cast<std::size_t>(c)])]) %
                p;
        }
        if (s == 0) throw LiftInconsistent("degree normalization sum is zero mod p");
        long long target = order % p * gfp::mod_inv(s, p) % p;
        long long degree = 0;
        for (long long d = 1; d <= isqrt; ++d)
            if (d * d % p == target) {
                degree = d;
                break;
            }
        if (degree == 0) throw LiftInconsistent("no degree in range squares to the residue");

        // chi mod p per class.
        std::vector<long long> chi(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c)
            chi[static_cast<std::size_t>(c)] =
                degree * v[static_cast<std::size_t>(cc.inverse_class[static_cast<std::size_t>(c)])] % p;

        CharacterRow row;
        row.degree = degree;
        row.values.reserve(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
            std::vector<mpz_class> coeffs(static_cast<std::size_t>(e), mpz_class(0));
            long long total = 0;
            for (int j = 0; j < e; ++j) {
                long long acc = 0;
                for (int m = 0; m < e; ++m) {
                    int pw = cc.power_map[static_cast<std::size_t>(c)][static_cast<std::size_t>(m)];
                    // theta^(-jm) = theta_pow[(e - jm mod e) mod e]
                    int idx = static_cast<int>((static_cast<long long>(e) * e -
                                                static_cast<long long>(j) * m) %
                                               e);
                    acc = (acc + chi[static_cast<std::size_t>(pw)] *
                                     theta_pow[static_cast<std::size_t>(idx)]) %
                          p;
                }
                long long mj = einv * acc % p;
                if (mj > degree)
                    throw LiftInconsistent("root-of-unity multiplicity exceeds the degree");
                coeffs[static_cast<std::size_t>(j)] = static_cast<long>(mj);
                total += mj;
            }
            if (total != degree)
                throw LiftInconsistent("multiplicities do not sum to the degree");
            row.values.emplace_back(e, std::move(coeffs));
        }
        degree_sq_sum += mpz_class(static_cast<long>(degree)) * static_cast<long>(degree);
        rows.push_back(std::move(row));
    }
    if (degree_sq_sum != static_cast<long>(order))
        throw LiftInconsistent("degree squares do not sum to the group order");

    // Deterministic order: by degree, then lexicographic on reduced values.
    std::vector<std::pair<std::vector<std::vector<mpz_class>>, std::size_t>> keys;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::vector<mpz_class>> key;
        for (const auto& val : rows[r].values) key.push_back(val.reduced());
        keys.emplace_back(std::move(key), r);
    }
    std::sort(keys.begin(), keys.end(), [&](const auto& ka, const auto& kb) {
        if (rows[ka.second].degree != rows[kb.second].degree)
            return rows[ka.second].degree < rows[kb.second].degree;
        return ka.first < kb.first;
    });
    std::vector<CharacterRow> sorted;
    sorted.reserve(rows.size());
    for (const auto& [key, r] : keys) sorted.push_back(std::move(rows[r]));
    return sorted;
}

inline std::shared_ptr<const CharacterTable> compute_character_table(const FiniteGroup& g) {
    auto table = std::make_shared<CharacterTable>();
    table->group = std::make_shared<const FiniteGroup>(g);
    table->classes = conjugacy_classes(*table->group);
    table->identity_class =
        table->classes.class_of[static_cast<std::size_t>(table->group->identity())];
    table->exponent = table->group->exponent();
    table->prime = dixon_prime(table->group->order(), table->exponent);
    auto cmc = class_mult_coeffs(*table->group, table->classes);
    auto eig = irreducible_eigenbasis_mod_p(cmc, table->prime, table->identity_class);
    table->rows = lift_characters(*table->group, table->classes, eig, table->prime);
    return table;
}

// Memoized front end, keyed by the Cayley table (hash prefilter plus full
// equality). Lookup and insert are locked; computation is not, so two
// threads may compute the same table once each; the results are equal and
// last-write-wins is fine.
inline std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& g) {
    static std::map<std::uint64_t, std::vector<std::shared_ptr<const CharacterTable>>> cache;
    static std::mutex mu;
    std::uint64_t h = g.table_hash();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(h);
        if (it != cache.end())
            for (const auto& entry : it->second)
                if (*entry->group == g) return entry;
    }
    auto table = compute_character_table(g);
    {
        std::lock_guard<std::mutex> lock(mu);
        cache[h].push_back(table);
    }
    return table;
}

}  // namespace charlab
