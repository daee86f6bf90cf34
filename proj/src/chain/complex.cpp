#include "twisthom/chain/complex.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/linalg.hpp"

#include <map>

namespace twisthom {

EquivariantComplex::EquivariantComplex(GroupPresentation group, std::vector<int> ranks, std::vector<RingMatrix> boundaries)
    : group_(std::move(group)), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) throw InputError("complex needs at least one chain group");
    for (int r : ranks_)
        if (r < 0) throw InputError("negative chain rank");
    if (boundaries_.size() != ranks_.size() - 1)
        throw InputError("complex with " + std::to_string(ranks_.size()) + " chain groups needs " +
                         std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                         std::to_string(boundaries_.size()));
    for (size_t k = 1; k < ranks_.size(); ++k) {
        const RingMatrix& d = boundaries_[k - 1];
        if (d.rows() != static_cast<size_t>(ranks_[k - 1]) || d.cols() != static_cast<size_t>(ranks_[k]))
            throw InputError("boundary d_" + std::to_string(k) + " has shape " + std::to_string(d.rows()) + "x" +
                             std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[k - 1]) + "x" +
                             std::to_string(ranks_[k]));
        for (const auto& e : d.data())
            if (e.generator_bound() > group_.num_generators())
                throw InputError("boundary d_" + std::to_string(k) + " uses a generator outside the group");
    }
}

RingMatrix EquivariantComplex::boundary(int k) const {
    if (k >= 1 && k <= top()) return boundaries_[static_cast<size_t>(k - 1)];
    return RingMatrix(static_cast<size_t>(rank(k - 1)), static_cast<size_t>(rank(k)));
}

long EquivariantComplex::euler_characteristic() const {
    long chi = 0;
    for (size_t k = 0; k < ranks_.size(); ++k) chi += (k % 2 ? -1 : 1) * ranks_[k];
    return chi;
}

Matrix<Integer> augment(const RingMatrix& m) {
    return m.map([](const GroupRingElement& e) {
        Integer s(0);
        for (const auto& [w, c] : e.terms()) s += c;
        return s;
    });
}

std::vector<long> trivial_dims(const EquivariantComplex& c) {
    std::vector<size_t> rk(static_cast<size_t>(c.top()) + 2, 0);
    for (int k = 1; k <= c.top(); ++k) rk[static_cast<size_t>(k)] = matrix_rank(augment(c.boundary(k)));
    std::vector<long> dims;
    for (int k = 0; k <= c.top(); ++k)
        dims.push_back(c.rank(k) - static_cast<long>(rk[static_cast<size_t>(k)]) -
                       static_cast<long>(rk[static_cast<size_t>(k) + 1]));
    return dims;
}

Matrix<Integer> permutation_specialize(const RingMatrix& m, const PermAction& a) {
    const size_t d = static_cast<size_t>(a.degree());
    Matrix<Integer> out(m.rows() * d, m.cols() * d);
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            for (const auto& [w, coef] : m(r, c).terms())
                for (size_t l = 0; l < d; ++l) {
                    size_t i = static_cast<size_t>(a.act(static_cast<int>(l), w));
                    out(r * d + l, c * d + i) += coef;
                }
    return out;
}

namespace {

// Z[H_1] with H_1 written in Smith coordinates: each kept coordinate is
// either free (modulus 0) or cyclic of order d > 1.
class AbelianRing {
  public:
    explicit AbelianRing(const GroupPresentation& p) {
        auto ab = abelianization(p);
        const auto diag = ab.snf.diagonal();
        const size_t n = static_cast<size_t>(p.num_generators());
        for (size_t i = 0; i < n; ++i) {
            long mod = i < diag.size() ? diag[i].to_int64() : 0;
            if (mod == 1) continue;
            moduli_.push_back(mod);
            cols_.push_back(i);
        }
        gen_coords_.assign(n, std::vector<long>(moduli_.size()));
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < cols_.size(); ++k) gen_coords_[j][k] = reduce(ab.snf.v(j, cols_[k]).to_int64(), k);
    }

    using Elem = std::map<std::vector<long>, Integer>;

    Elem image(const GroupRingElement& e) const {
        Elem out;
        for (const auto& [w, c] : e.terms()) {
            std::vector<long> v(moduli_.size(), 0);
            for (size_t i = 0; i < w.size(); ++i) {
                Letter l = w.letter(i);
                for (size_t k = 0; k < v.size(); ++k) v[k] = reduce(v[k] + l.exp * gen_coords_[static_cast<size_t>(l.gen)][k], k);
            }
            add(out, v, c);
        }
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out;
        for (const auto& [va, ca] : a)
            for (const auto& [vb, cb] : b) {
                std::vector<long> v(va.size());
                for (size_t k = 0; k < v.size(); ++k) v[k] = reduce(va[k] + vb[k], k);
                add(out, v, ca * cb);
            }
        return out;
    }

    static void add(Elem& e, const std::vector<long>& v, const Integer& c) {
        auto [it, ins] = e.emplace(v, c);
        if (ins) return;
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }

  private:
    long reduce(long x, size_t k) const {
        long m = moduli_[k];
        if (m == 0) return x;
        return ((x % m) + m) % m;
    }

    std::vector<long> moduli_;
    std::vector<size_t> cols_;
    std::vector<std::vector<long>> gen_coords_;
};

} // namespace

bool abelian_boundary_check(const EquivariantComplex& c) {
    AbelianRing ring(c.group());
    for (int k = 2; k <= c.top(); ++k) {
        RingMatrix a = c.boundary(k - 1), b = c.boundary(k);
        std::vector<AbelianRing::Elem> ia, ib;
        for (const auto& e : a.data()) ia.push_back(ring.image(e));
        for (const auto& e : b.data()) ib.push_back(ring.image(e));
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) {
                AbelianRing::Elem acc;
                for (size_t m = 0; m < a.cols(); ++m)
                    for (const auto& [v, coef] : ring.mul(ia[i * a.cols() + m], ib[m * b.cols() + j]))
                        AbelianRing::add(acc, v, coef);
                if (!acc.empty()) return false;
            }
    }
    return true;
}

bool permutation_boundary_check(const EquivariantComplex& c, const PermAction& a) {
    a.validate(c.group());
    for (int k = 2; k <= c.top(); ++k)
        if (!(permutation_specialize(c.boundary(k - 1), a) * permutation_specialize(c.boundary(k), a)).is_zero())
            return false;
    return true;
}

void require_abelian_boundary(const EquivariantComplex& c) {
    if (!abelian_boundary_check(c))
        throw BoundaryError("boundary maps do not compose to zero over the abelianized group ring");
}

} // namespace twisthom
