#include "twisthom/chain/catalog.hpp"

#include "twisthom/chain/constructions.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/exactnum/normal_form.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace twisthom {

namespace {

GroupRingElement g(const Word& w) { return GroupRingElement(w); }
GroupRingElement one() { return GroupRingElement(1); }

std::string params_str(const std::vector<long>& params) {
    std::string s;
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
}

void require_params(const std::string& name, const std::vector<long>& params, size_t count) {
    if (params.size() != count)
        throw InputError("catalog entry '" + name + "' takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
}

EquivariantComplex point_complex() { return EquivariantComplex(GroupPresentation(0, {}), {1}, {}); }

EquivariantComplex s2_complex() {
    return EquivariantComplex(GroupPresentation(0, {}), {1, 0, 1}, {RingMatrix(1, 0), RingMatrix(0, 1)});
}

GroupPresentation surface_group(long genus) {
    Word rel;
    for (int i = 0; i < genus; ++i) rel *= commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
    std::vector<Word> rels;
    if (!rel.empty()) rels.push_back(rel);
    return GroupPresentation(static_cast<int>(2 * genus), rels);
}

EquivariantComplex lens_complex(long p, long q) {
    long qbar = 0;
    for (long k = 0; k < p; ++k)
        if (((k * q) % p + p) % p == 1 % p) {
            qbar = k;
            break;
        }
    Word x = Word::generator(0);
    GroupPresentation grp(1, {x.power(p)});
    RingMatrix d1(1, 1), d2(1, 1), d3(1, 1);
    d1(0, 0) = g(x) - one();
    for (long k = 0; k < p; ++k) d2(0, 0) += g(x.power(k));
    d3(0, 0) = g(x.power(qbar)) - one();
    return EquivariantComplex(grp, {1, 1, 1, 1}, {d1, d2, d3});
}

// Period-4 resolution of Q8, with entries ordered for substitution on the right.
EquivariantComplex q8_complex() {
    Word x = Word::generator(0), y = Word::generator(1);
    GroupPresentation grp(2, {x * x * y.inverse() * y.inverse(), x * y * x * y.inverse()});
    RingMatrix d1(1, 2), d2(2, 2), d3(2, 1);
    d1(0, 0) = g(x) - one();
    d1(0, 1) = g(y) - one();
    d2(0, 0) = one() + g(x);
    d2(0, 1) = g(y * x) + one();
    d2(1, 0) = -(g(y) + one());
    d2(1, 1) = g(x) - one();
    d3(0, 0) = g(x) - one();
    d3(1, 0) = one() - g(y * x);
    return EquivariantComplex(grp, {1, 2, 2, 1}, {d1, d2, d3});
}

void check_entry(const CatalogEntry& e) {
    require_abelian_boundary(e.complex);
    auto dims = trivial_dims(e.complex);
    if (dims != e.expected_trivial_dims) {
        std::ostringstream os;
        os << "catalog entry " << e.name << " has trivial-coefficient dims (";
        for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
        os << ") but expects (";
        for (size_t i = 0; i < e.expected_trivial_dims.size(); ++i) os << (i ? "," : "") << e.expected_trivial_dims[i];
        os << ")";
        throw InternalError(os.str());
    }
    if (e.closed_3manifold && (e.complex.top() != 3 || e.complex.euler_characteristic() != 0))
        throw InternalError("catalog entry " + e.name + " is not a closed 3-dimensional complex");
}

void gate_q8(const CatalogEntry& e) {
    if (!permutation_boundary_check(e.complex, q8_regular_action()))
        throw InternalError("quaternion complex fails d d = 0 under the regular representation");
    auto snf = smith_normal_form_int(augment(e.complex.boundary(2)));
    auto diag = snf.diagonal();
    if (!(diag.size() == 2 && diag[0] == Integer(2) && diag[1] == Integer(2)))
        throw InternalError("quaternion complex has the wrong integral first homology");
}

CatalogEntry make(std::string name, std::vector<long> params, EquivariantComplex c, std::vector<long> dims,
                  std::string notes, bool closed) {
    CatalogEntry e{std::move(name), std::move(params), std::move(c), std::move(dims), std::move(notes), closed};
    check_entry(e);
    return e;
}

} // namespace

PermAction q8_regular_action() {
    using M = Matrix<Integer>;
    // Left multiplication by i and j on the basis (1, i, j, k).
    M li(4, 4), lj(4, 4);
    li(1, 0) = Integer(1); li(0, 1) = Integer(-1); li(3, 2) = Integer(1); li(2, 3) = Integer(-1);
    lj(2, 0) = Integer(1); lj(3, 1) = Integer(-1); lj(0, 2) = Integer(-1); lj(1, 3) = Integer(1);
    std::vector<M> elems{M::identity(4)};
    std::map<std::vector<Integer>, int> index{{elems[0].data(), 0}};
    for (size_t head = 0; head < elems.size(); ++head)
        for (const M* gen : {&li, &lj}) {
            M h = elems[head] * *gen;
            if (index.emplace(h.data(), static_cast<int>(elems.size())).second) elems.push_back(h);
        }
    if (elems.size() != 8) throw InternalError("quaternion group closure has the wrong order");
    std::vector<std::vector<int>> images(2, std::vector<int>(8));
    for (size_t e = 0; e < 8; ++e) {
        images[0][e] = index.at((elems[e] * li).data());
        images[1][e] = index.at((elems[e] * lj).data());
    }
    return PermAction(images);
}

CatalogEntry catalog_complex(const std::string& name, const std::vector<long>& params) {
    if (name == "point") {
        require_params(name, params, 0);
        return make(name, params, point_complex(), {1}, "single 0-cell", false);
    }
    if (name == "circle") {
        require_params(name, params, 0);
        return make(name, params, circle_product(point_complex()), {1, 1}, "point times circle", false);
    }
    if (name == "torus2d") {
        require_params(name, params, 0);
        return make(name, params, circle_product(circle_product(point_complex())), {1, 2, 1}, "circle times circle",
                    false);
    }
    if (name == "s2") {
        require_params(name, params, 0);
        return make(name, params, s2_complex(), {1, 0, 1}, "one 0-cell and one 2-cell over the trivial group", false);
    }
    if (name == "s1xs2") {
        require_params(name, params, 0);
        return make(name, params, circle_product(s2_complex()), {1, 1, 1, 1}, "2-sphere times circle", true);
    }
    if (name == "t3") {
        require_params(name, params, 0);
        return make(name, params, circle_product(circle_product(circle_product(point_complex()))), {1, 3, 3, 1},
                    "circle product applied three times to a point", true);
    }
    if (name == "lens") {
        require_params(name, params, 2);
        long p = params[0], q = params[1];
        if (p <= 0) throw InputError("lens space needs p > 0");
        if (std::gcd(p, q) != 1) throw InputError("lens space needs gcd(p, q) = 1");
        return make(name, params, lens_complex(p, q), {1, 0, 0, 1},
                    "lens space L(" + params_str(params) + "); d3 = x^qbar - 1 with qbar q = 1 mod p", true);
    }
    if (name == "s1x_sigma") {
        require_params(name, params, 1);
        long genus = params[0];
        if (genus < 0) throw InputError("surface genus must be non-negative");
        EquivariantComplex base = genus == 0 ? s2_complex() : presentation_complex(surface_group(genus));
        return make(name, params, circle_product(base), {1, 2 * genus + 1, 2 * genus + 1, 1},
                    "closed genus-" + std::to_string(genus) + " surface times circle; the circle is the last generator",
                    true);
    }
    if (name == "quaternion_q8") {
        require_params(name, params, 0);
        CatalogEntry e = make(name, params, q8_complex(), {1, 0, 0, 1},
                              "quaternionic space S^3/Q8 from the period-4 resolution of Q8", true);
        gate_q8(e);
        return e;
    }
    if (name == "trefoil_exterior") {
        require_params(name, params, 0);
        Word a = Word::generator(0), b = Word::generator(1);
        GroupPresentation grp(2, {a * b * a * b.inverse() * a.inverse() * b.inverse()});
        return make(name, params, presentation_complex(grp), {1, 1, 0}, "presentation complex of <a,b | aba = bab>",
                    false);
    }
    if (name == "handlebody") {
        require_params(name, params, 1);
        long genus = params[0];
        if (genus < 0) throw InputError("handlebody genus must be non-negative");
        return make(name, params, presentation_complex(GroupPresentation(static_cast<int>(genus), {})),
                    {1, genus, 0}, "presentation complex of the free group of rank " + std::to_string(genus), false);
    }
    throw InputError("unknown catalog entry '" + name + "'");
}

CatalogEntry catalog_free_product(const std::vector<CatalogEntry>& parts) {
    if (parts.empty()) throw InputError("free_product_of needs at least one entry");
    GroupPresentation grp = parts[0].complex.group();
    std::string name = parts[0].name + (parts[0].params.empty() ? "" : ":" + params_str(parts[0].params));
    for (size_t i = 1; i < parts.size(); ++i) {
        grp = free_product(grp, parts[i].complex.group());
        name += "+" + parts[i].name + (parts[i].params.empty() ? "" : ":" + params_str(parts[i].params));
    }
    auto ab = abelianization(grp);
    long n = grp.num_generators(), r = static_cast<long>(grp.relators().size());
    // H_2 of a presentation complex is r - n + b_1 over Q.
    return make("free_product_of", {}, presentation_complex(grp), {1, ab.betti, r - n + ab.betti},
                "presentation complex of the free product " + name, false);
}

CatalogEntry catalog_lookup(const std::string& label) {
    auto colon = label.find(':');
    std::string name = label.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : label.substr(colon + 1);
    if (name == "free_product_of") {
        std::vector<CatalogEntry> parts;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, '+')) parts.push_back(catalog_lookup(item));
        return catalog_free_product(parts);
    }
    std::vector<long> params;
    if (!rest.empty()) {
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t used = 0;
                params.push_back(std::stol(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw InputError("catalog parameter '" + item + "' is not an integer");
            }
        }
    }
    return catalog_complex(name, params);
}

std::vector<std::string> catalog_names() {
    return {"point", "circle", "torus2d", "s2", "s1xs2", "t3", "lens:p,q", "s1x_sigma:g", "quaternion_q8",
            "trefoil_exterior", "handlebody:g", "free_product_of:A+B+..."};
}

} // namespace twisthom
