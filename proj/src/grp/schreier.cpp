#include "twisthom/grp/schreier.hpp"

#include "twisthom/errors.hpp"

namespace twisthom {

SchreierData::SchreierData(const GroupPresentation& p, const PermAction& a) : action_(a) {
    a.validate(p);
    const int m = a.degree();
    const int n = p.num_generators();
    transversal_.assign(static_cast<size_t>(m), Word());
    index_.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), -2));

    // Same traversal order as PermAction::bfs_labels.
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < n; ++g) {
                int code = s == 0 ? g + 1 : -(g + 1);
                int d = a.act(c, code);
                if (seen[static_cast<size_t>(d)]) continue;
                seen[static_cast<size_t>(d)] = true;
                queue.push_back(d);
                transversal_[static_cast<size_t>(d)] = transversal_[static_cast<size_t>(c)] * Word::generator(g, s == 0 ? 1 : -1);
                // tree edge as a (coset, generator) pair: c.x = d, or d.x = c
                if (s == 0) index_[static_cast<size_t>(c)][static_cast<size_t>(g)] = -1;
                else index_[static_cast<size_t>(d)][static_cast<size_t>(g)] = -1;
            }
    }
    int k = 0;
    for (int c = 0; c < m; ++c)
        for (int g = 0; g < n; ++g)
            if (index_[static_cast<size_t>(c)][static_cast<size_t>(g)] == -2) {
                index_[static_cast<size_t>(c)][static_cast<size_t>(g)] = k++;
                gens_.emplace_back(c, g);
            }

    std::vector<Word> rels;
    rels.reserve(static_cast<size_t>(m) * p.relators().size());
    for (int c = 0; c < m; ++c)
        for (const auto& r : p.relators()) {
            Rewritten rw = rewrite(r, c);
            if (rw.end != c) throw InternalError("relator does not close up at coset " + std::to_string(c));
            rels.push_back(std::move(rw.word));
        }
    sub_ = GroupPresentation(k, std::move(rels));
}

Word SchreierData::schreier_word(int i) const {
    auto [c, g] = gens_.at(static_cast<size_t>(i));
    int d = action_.act(c, g + 1);
    return transversal_[static_cast<size_t>(c)] * Word::generator(g) * transversal_[static_cast<size_t>(d)].inverse();
}

SchreierData::Rewritten SchreierData::rewrite(const Word& w, int start) const {
    std::vector<int> out;
    out.reserve(w.size());
    int c = start;
    for (int code : w.codes()) {
        if (code > 0) {
            int g = code - 1;
            int s = index_[static_cast<size_t>(c)][static_cast<size_t>(g)];
            if (s >= 0) out.push_back(s + 1);
            c = action_.act(c, code);
        } else {
            int g = -code - 1;
            int prev = action_.act(c, code);
            int s = index_[static_cast<size_t>(prev)][static_cast<size_t>(g)];
            if (s >= 0) out.push_back(-(s + 1));
            c = prev;
        }
    }
    return {Word(std::move(out)), c};
}

} // namespace twisthom
