#pragma once

#include "twisthom/grp/group.hpp"
#include "twisthom/grp/perm_action.hpp"
#include "twisthom/grp/word.hpp"

#include <vector>

namespace twisthom {

/**
 * Reidemeister-Schreier data for the basepoint stabilizer of an action.
 *
 * The transversal u_0 = 1, u_1, ... comes from the breadth-first spanning tree
 * of PermAction::bfs_labels(0); u_c is a word taking the basepoint to coset c.
 * Every (coset c, generator x) pair off the tree gives the Schreier generator
 * s = u_c x u_{c.x}^-1 of the subgroup.
 */
class SchreierData {
  public:
    SchreierData(const GroupPresentation& p, const PermAction& a);

    const GroupPresentation& subgroup() const noexcept { return sub_; }
    const PermAction& action() const noexcept { return action_; }
    int degree() const noexcept { return action_.degree(); }
    // Transversal word for coset c.
    const Word& transversal(int c) const { return transversal_[static_cast<size_t>(c)]; }
    // Index of the Schreier generator for (c, x), or -1 on a tree edge.
    int schreier_index(int c, int gen) const { return index_[static_cast<size_t>(c)][static_cast<size_t>(gen)]; }
    // The Schreier generator s_i as a word in the original generators.
    Word schreier_word(int i) const;

    struct Rewritten {
        Word word;  // in Schreier generators
        int end;    // coset reached, start . w
    };
    // Rewrites w read from coset `start`: the result h satisfies
    // u_start w = h u_end in the free group on the original generators.
    Rewritten rewrite(const Word& w, int start = 0) const;

  private:
    GroupPresentation sub_;
    PermAction action_;
    std::vector<Word> transversal_;
    std::vector<std::vector<int>> index_;
    std::vector<std::pair<int, int>> gens_;  // (coset, generator) per Schreier generator
};

// Subgroup presentation plus rewriting data. Validates the action first.
inline SchreierData reidemeister_schreier(const GroupPresentation& p, const PermAction& a) { return SchreierData(p, a); }

} // namespace twisthom
