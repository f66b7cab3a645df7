#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

// A permutation of {0, ..., degree-1} stored as its image vector:
// images[i] is the image of point i.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        validate();
    }

    static Permutation identity(int degree) {
        std::vector<int> im(static_cast<std::size_t>(degree));
        std::iota(im.begin(), im.end(), 0);
        return Permutation(std::move(im));
    }

    // Builds a permutation from 1-based disjoint cycles, e.g. {{1,2,3},{4,5}}
    // on the given degree. Points absent from every cycle are fixed.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
        if (degree < 0) throw InvalidPermutation("negative degree");
        std::vector<int> im(static_cast<std::size_t>(degree));
        std::iota(im.begin(), im.end(), 0);
        std::vector<bool> seen(static_cast<std::size_t>(degree), false);
        for (const auto& cyc : cycles) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int a = cyc[k];
                int b = cyc[(k + 1) % cyc.size()];
                if (a < 1 || a > degree || b < 1 || b > degree)
                    throw InvalidPermutation("cycle point out of range: " + std::to_string(a));
                if (seen[static_cast<std::size_t>(a - 1)])
                    throw InvalidPermutation("point repeated across cycles: " + std::to_string(a));
                seen[static_cast<std::size_t>(a - 1)] = true;
                im[static_cast<std::size_t>(a - 1)] = b - 1;
            }
        }
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }

    int apply(int point) const { return images_[static_cast<std::size_t>(point)]; }

    // Composition acting left-to-right is not used; (*this * other) means
    // "apply other first, then this", matching function composition.
    Permutation operator*(const Permutation& other) const {
        if (degree() != other.degree()) throw InvalidPermutation("degree mismatch in product");
        std::vector<int> im(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            im[i] = images_[static_cast<std::size_t>(other.images_[i])];
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        return Permutation(std::move(im));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Permutation& other) const { return images_ == other.images_; }
    bool operator<(const Permutation& other) const { return images_ < other.images_; }

    const std::vector<int>& images() const { return images_; }

    // Disjoint cycle notation with 1-based points; "()" for the identity.
    std::string to_cycle_string() const {
        std::vector<bool> seen(images_.size(), false);
        std::ostringstream out;
        bool any = false;
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == static_cast<int>(start)) continue;
            any = true;
            out << '(';
            std::size_t p = start;
            bool first = true;
            do {
                if (!first) out << ' ';
                first = false;
                out << (p + 1);
                seen[p] = true;
                p = static_cast<std::size_t>(images_[p]);
            } while (p != start);
            out << ')';
        }
        if (!any) return "()";
        return out.str();
    }

  private:
    void validate() const {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || v >= static_cast<int>(images_.size()))
                throw InvalidPermutation("image out of range: " + std::to_string(v));
            if (seen[static_cast<std::size_t>(v)])
                throw InvalidPermutation("image repeated: " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> images_;
};

}  // namespace charlab
