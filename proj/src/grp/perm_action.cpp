#include "twisthom/grp/perm_action.hpp"

#include "twisthom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace twisthom {

PermAction::PermAction(std::vector<std::vector<int>> images) : images_(std::move(images)) {
    degree_ = images_.empty() ? 1 : static_cast<int>(images_[0].size());
    if (degree_ < 1) throw InputError("permutation action needs degree >= 1");
    inverses_.reserve(images_.size());
    for (size_t g = 0; g < images_.size(); ++g) {
        const auto& img = images_[g];
        if (static_cast<int>(img.size()) != degree_)
            throw InputError("generator " + std::to_string(g + 1) + " image has the wrong degree");
        std::vector<int> inv(img.size(), -1);
        for (size_t i = 0; i < img.size(); ++i) {
            int j = img[i];
            if (j < 0 || j >= degree_ || inv[static_cast<size_t>(j)] != -1)
                throw InputError("generator " + std::to_string(g + 1) + " image is not a permutation");
            inv[static_cast<size_t>(j)] = static_cast<int>(i);
        }
        inverses_.push_back(std::move(inv));
    }
}

PermAction PermAction::trivial(int num_generators) {
    return PermAction(std::vector<std::vector<int>>(static_cast<size_t>(num_generators), std::vector<int>{0}));
}

std::vector<int> PermAction::bfs_labels(int base) const {
    std::vector<int> label(static_cast<size_t>(degree_), -1);
    std::vector<int> queue{base};
    label[static_cast<size_t>(base)] = 0;
    int next = 1;
    const int n = num_generators();
    for (size_t head = 0; head < queue.size(); ++head) {
        int c = queue[head];
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < n; ++g) {
                int d = act(c, s == 0 ? g + 1 : -(g + 1));
                if (label[static_cast<size_t>(d)] != -1) continue;
                label[static_cast<size_t>(d)] = next++;
                queue.push_back(d);
            }
    }
    return label;
}

bool PermAction::is_transitive() const {
    auto label = bfs_labels(0);
    return std::find(label.begin(), label.end(), -1) == label.end();
}

bool PermAction::respects(const GroupPresentation& p) const {
    if (num_generators() != p.num_generators()) return false;
    for (const auto& r : p.relators())
        for (int i = 0; i < degree_; ++i)
            if (act(i, r) != i) return false;
    return true;
}

void PermAction::validate(const GroupPresentation& p) const {
    if (num_generators() != p.num_generators())
        throw InputError("action has " + std::to_string(num_generators()) + " generator images but the group has " +
                         std::to_string(p.num_generators()) + " generators");
    for (const auto& r : p.relators())
        for (int i = 0; i < degree_; ++i)
            if (act(i, r) != i) throw InputError("relator " + r.str() + " does not act trivially");
    if (!is_transitive()) throw InputError("action is not transitive");
}

std::vector<std::vector<int>> PermAction::canonical_form() const {
    std::vector<std::vector<int>> best;
    std::vector<std::vector<int>> cand(images_.size(), std::vector<int>(static_cast<size_t>(degree_)));
    for (int b = 0; b < degree_; ++b) {
        auto label = bfs_labels(b);
        for (size_t g = 0; g < images_.size(); ++g)
            for (int i = 0; i < degree_; ++i)
                cand[g][static_cast<size_t>(label[static_cast<size_t>(i)])] =
                    label[static_cast<size_t>(images_[g][static_cast<size_t>(i)])];
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

std::vector<PermAction> transitive_actions(const GroupPresentation& p, int degree) {
    if (degree < 1) throw InputError("action degree must be positive");
    const int n = p.num_generators();
    const size_t d = static_cast<size_t>(degree);
    if (n == 0) {
        if (degree == 1) return {PermAction(std::vector<std::vector<int>>{})};
        return {};
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> base(d);
    std::iota(base.begin(), base.end(), 0);
    do perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));

    // Relators are checked as soon as all their generators have images.
    std::vector<std::vector<Word>> ready(static_cast<size_t>(n));
    for (const auto& r : p.relators()) ready[static_cast<size_t>(r.generator_bound() - 1)].push_back(r);

    std::vector<std::vector<int>> img(static_cast<size_t>(n));
    std::vector<std::vector<int>> inv(static_cast<size_t>(n), std::vector<int>(d));
    auto act = [&](int i, int code) {
        return code > 0 ? img[static_cast<size_t>(code - 1)][static_cast<size_t>(i)]
                        : inv[static_cast<size_t>(-code - 1)][static_cast<size_t>(i)];
    };
    std::set<std::vector<std::vector<int>>> seen;

    auto recurse = [&](auto&& self, int g) -> void {
        if (g == n) {
            PermAction a(img);
            if (a.is_transitive()) seen.insert(a.canonical_form());
            return;
        }
        for (const auto& perm : perms) {
            img[static_cast<size_t>(g)] = perm;
            for (size_t i = 0; i < d; ++i) inv[static_cast<size_t>(g)][static_cast<size_t>(perm[i])] = static_cast<int>(i);
            bool ok = true;
            for (const auto& r : ready[static_cast<size_t>(g)]) {
                for (int i = 0; i < degree && ok; ++i) {
                    int j = i;
                    for (int c : r.codes()) j = act(j, c);
                    ok = j == i;
                }
                if (!ok) break;
            }
            if (ok) self(self, g + 1);
        }
    };
    recurse(recurse, 0);

    std::vector<PermAction> out;
    out.reserve(seen.size());
    for (const auto& f : seen) out.emplace_back(f);
    return out;
}

} // namespace twisthom
