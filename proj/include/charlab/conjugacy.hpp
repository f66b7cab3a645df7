#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "charlab/group.hpp"

namespace charlab {

// Conjugacy class data with a deterministic ordering: classes are sorted by
// their minimal element index, so the identity class is always class 0.
struct ConjugacyClasses {
    int num_classes = 0;
    std::vector<std::vector<int>> members;   // members[c], sorted ascending
    std::vector<int> representative;         // representative[c] = members[c][0]
    std::vector<int> class_of;               // class_of[element]
    std::vector<int> inverse_class;          // class of rep^-1
    std::vector<std::vector<int>> power_map; // power_map[c][k] = class of rep^k, k < exponent
};

inline ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    int n = g.order();
    ConjugacyClasses cc;
    cc.class_of.assign(static_cast<std::size_t>(n), -1);

    for (int a = 0; a < n; ++a) {
        if (cc.class_of[static_cast<std::size_t>(a)] >= 0) continue;
        int c = cc.num_classes++;
        std::vector<int> orbit;
        for (int x = 0; x < n; ++x) {
            int y = g.conjugate(x, a);
            if (cc.class_of[static_cast<std::size_t>(y)] < 0) {
                cc.class_of[static_cast<std::size_t>(y)] = c;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cc.members.push_back(std::move(orbit));
        cc.representative.push_back(cc.members.back().front());
    }

    cc.inverse_class.resize(static_cast<std::size_t>(cc.num_classes));
    for (int c = 0; c < cc.num_classes; ++c)
        cc.inverse_class[static_cast<std::size_t>(c)] =
            cc.class_of[static_cast<std::size_t>(g.inverse(cc.representative[static_cast<std::size_t>(c)]))];

    int e = g.exponent();
    cc.power_map.assign(static_cast<std::size_t>(cc.num_classes),
                        std::vector<int>(static_cast<std::size_t>(e)));
    for (int c = 0; c < cc.num_classes; ++c) {
        int x = g.identity();
        int rep = cc.representative[static_cast<std::size_t>(c)];
        for (int k = 0; k < e; ++k) {
            cc.power_map[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] =
                cc.class_of[static_cast<std::size_t>(x)];
            x = g.mul(x, rep);
        }
    }
    return cc;
}

// Class multiplication coefficients: a[i][j][t] = #{(x, y) : x in C_i, y in
// C_j, xy = z} for any fixed z in C_t. Computed by running over x in C_i and
// y in C_j once and attributing the product to its class; the count for a
// class C_t is |C_t| times the per-element coefficient, so divide at the end.
inline std::vector<std::vector<std::vector<long long>>> class_mult_coeffs(
    const FiniteGroup& g, const ConjugacyClasses& cc) {
    int k = cc.num_classes;
    std::vector<std::vector<std::vector<long long>>> a(
        static_cast<std::size_t>(k),
        std::vector<std::vector<long long>>(static_cast<std::size_t>(k),
                                            std::vector<long long>(static_cast<std::size_t>(k), 0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            std::vector<long long> counts(static_cast<std::size_t>(k), 0);
            for (int x : cc.members[static_cast<std::size_t>(i)])
                for (int y : cc.members[static_cast<std::size_t>(j)])
                    ++counts[static_cast<std::size_t>(
                        cc.class_of[static_cast<std::size_t>(g.mul(x, y))])];
            for (int t = 0; t < k; ++t) {
                long long ct = static_cast<long long>(
                    cc.members[static_cast<std::size_t>(t)].size());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(t)] = counts[static_cast<std::size_t>(t)] / ct;
            }
        }
    }
    return a;
}

}  // namespace charlab
