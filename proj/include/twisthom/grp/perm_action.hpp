#pragma once

#include "twisthom/grp/group.hpp"
#include "twisthom/grp/word.hpp"

#include <vector>

namespace twisthom {

/**
 * Right action of a free group on {0, ..., m-1} given by generator images:
 * point i moves to images[g][i] under generator g, and a word acts letter by
 * letter from the left. Point 0 is the basepoint, whose stabilizer is the
 * subgroup the action encodes.
 */
class PermAction {
  public:
    PermAction() = default;
    // Each image must be a permutation of the same degree >= 1.
    explicit PermAction(std::vector<std::vector<int>> images);
    // Degree-1 action of a group with n generators.
    static PermAction trivial(int num_generators);

    int degree() const noexcept { return degree_; }
    int num_generators() const noexcept { return static_cast<int>(images_.size()); }
    const std::vector<std::vector<int>>& images() const noexcept { return images_; }

    // Image of point i under a signed 1-based letter code.
    int act(int i, int code) const {
        return code > 0 ? images_[static_cast<size_t>(code - 1)][static_cast<size_t>(i)]
                        : inverses_[static_cast<size_t>(-code - 1)][static_cast<size_t>(i)];
    }
    int act(int i, const Word& w) const {
        for (int c : w.codes()) i = act(i, c);
        return i;
    }

    bool is_transitive() const;
    bool respects(const GroupPresentation& p) const;
    // Throws InputError unless the generator count matches, every relator
    // acts trivially, and the action is transitive.
    void validate(const GroupPresentation& p) const;

    // Labels of points in breadth-first order from `base`, scanning
    // generators in index order with all positive letters before inverses.
    std::vector<int> bfs_labels(int base) const;
    // Relabeling-invariant form: the smallest relabeled image list over all
    // basepoints. Two transitive actions are isomorphic iff these agree.
    std::vector<std::vector<int>> canonical_form() const;

    friend bool operator==(const PermAction& a, const PermAction& b) { return a.images_ == b.images_; }

  private:
    int degree_ = 0;
    std::vector<std::vector<int>> images_;
    std::vector<std::vector<int>> inverses_;
};

// All transitive actions of the given degree compatible with p, one per
// isomorphism class, each in canonical form and sorted.
std::vector<PermAction> transitive_actions(const GroupPresentation& p, int degree);

} // namespace twisthom
