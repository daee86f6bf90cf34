#include "twisthom/chain/constructions.hpp"

#include "twisthom/errors.hpp"

namespace twisthom {

GroupRingElement fox_derivative_left(const Word& w, int gen) {
    GroupRingElement d;
    Word prefix;
    for (size_t i = 0; i < w.size(); ++i) {
        Letter l = w.letter(i);
        if (l.gen == gen) {
            if (l.exp > 0) d += GroupRingElement(prefix);
            else d -= GroupRingElement(prefix * Word::generator(gen, -1));
        }
        prefix *= Word::generator(l.gen, l.exp);
    }
    return d;
}

GroupRingElement fox_derivative_right(const Word& w, int gen) {
    GroupRingElement d;
    Word suffix;
    for (size_t i = w.size(); i-- > 0;) {
        Letter l = w.letter(i);
        if (l.gen == gen) {
            if (l.exp > 0) d += GroupRingElement(suffix);
            else d -= GroupRingElement(Word::generator(gen, -1) * suffix);
        }
        suffix = Word::generator(l.gen, l.exp) * suffix;
    }
    return d;
}

EquivariantComplex presentation_complex(const GroupPresentation& p) {
    const size_t n = static_cast<size_t>(p.num_generators());
    const size_t r = p.relators().size();
    RingMatrix d1(1, n), d2(n, r);
    for (size_t x = 0; x < n; ++x) d1(0, x) = GroupRingElement(Word::generator(static_cast<int>(x))) - GroupRingElement(1);
    for (size_t j = 0; j < r; ++j)
        for (size_t x = 0; x < n; ++x) d2(x, j) = fox_derivative_right(p.relators()[j], static_cast<int>(x));
    return EquivariantComplex(p, {1, static_cast<int>(n), static_cast<int>(r)}, {d1, d2});
}

EquivariantComplex circle_product(const EquivariantComplex& c) {
    const GroupPresentation& g = c.group();
    const int n = g.num_generators();
    std::vector<Word> rels = g.relators();
    Word t = Word::generator(n);
    for (int x = 0; x < n; ++x) rels.push_back(commutator(t, Word::generator(x)));
    GroupPresentation group(n + 1, std::move(rels));

    const int top = c.top() + 1;
    std::vector<int> ranks;
    for (int k = 0; k <= top; ++k) ranks.push_back(c.rank(k) + c.rank(k - 1));
    GroupRingElement t_minus_1 = GroupRingElement(t) - GroupRingElement(1);

    std::vector<RingMatrix> bds;
    for (int k = 1; k <= top; ++k) {
        RingMatrix d(static_cast<size_t>(ranks[static_cast<size_t>(k - 1)]), static_cast<size_t>(ranks[static_cast<size_t>(k)]));
        d.set_block(0, 0, c.boundary(k));
        GroupRingElement s = (k - 1) % 2 == 0 ? t_minus_1 : -t_minus_1;
        const size_t off_r = 0, off_c = static_cast<size_t>(c.rank(k));
        for (int i = 0; i < c.rank(k - 1); ++i) d(off_r + static_cast<size_t>(i), off_c + static_cast<size_t>(i)) = s;
        d.set_block(static_cast<size_t>(c.rank(k - 1)), static_cast<size_t>(c.rank(k)), c.boundary(k - 1));
        bds.push_back(std::move(d));
    }
    return EquivariantComplex(std::move(group), std::move(ranks), std::move(bds));
}

EquivariantComplex cover_complex(const EquivariantComplex& c, const PermAction& a) {
    return cover_complex(c, SchreierData(c.group(), a));
}

EquivariantComplex cover_complex(const EquivariantComplex& c, const SchreierData& s) {
    const size_t m = static_cast<size_t>(s.degree());
    std::vector<int> ranks;
    for (int r : c.ranks()) ranks.push_back(r * static_cast<int>(m));
    std::vector<RingMatrix> bds;
    for (int k = 1; k <= c.top(); ++k) {
        const RingMatrix& d = c.boundaries()[static_cast<size_t>(k - 1)];
        RingMatrix out(d.rows() * m, d.cols() * m);
        for (size_t row = 0; row < d.rows(); ++row)
            for (size_t col = 0; col < d.cols(); ++col)
                for (const auto& [w, coef] : d(row, col).terms())
                    for (size_t l = 0; l < m; ++l) {
                        auto rw = s.rewrite(w, static_cast<int>(l));
                        out(row * m + l, col * m + static_cast<size_t>(rw.end)) += GroupRingElement(rw.word, coef);
                    }
        bds.push_back(std::move(out));
    }
    return EquivariantComplex(s.subgroup(), std::move(ranks), std::move(bds));
}

} // namespace twisthom
