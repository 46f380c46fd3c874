#include "ncdegen/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdegen::surfaces {

using incidence::ComponentId;
using incidence::CurveId;
using incidence::Pair;

namespace {

// pairs of {1..6} \ {i,j} in lexicographic order: the six blown points of B(i,j)
std::vector<Pair> blown_point_pairs(const Pair& ij) {
    std::vector<int> rest;
    for (int x = 1; x <= 6; ++x)
        if (x != ij[0] && x != ij[1]) rest.push_back(x);
    std::vector<Pair> out;
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) out.push_back({rest[i], rest[j]});
    return out;
}

// order-preserving relabelling {1..6} \ {m} -> {1..5}
int relabel(int m, int x) {
    int r = 0;
    for (int y = 1; y <= 6; ++y) {
        if (y == m) continue;
        ++r;
        if (y == x) return r;
    }
    throw std::logic_error("relabel out of range");
}

}  // namespace

linalg::IntMatrix PicardLattice::gram() const {
    linalg::IntMatrix g(rank(), rank());
    g.at(0, 0) = 1;
    for (std::size_t i = 1; i < rank(); ++i) g.at(i, i) = -1;
    return g;
}

PicardLattice picard_lattice(const ComponentId& c) {
    PicardLattice l;
    l.component = c;
    l.basis_labels.push_back("h");
    if (c.kind == ComponentId::Kind::del_pezzo) {
        for (int a = 1; a <= 4; ++a) l.basis_labels.push_back("e" + std::to_string(a));
    } else {
        for (const auto& p : blown_point_pairs(c.ij))
            l.basis_labels.push_back("e(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")");
    }
    return l;
}

DivisorClass curve_class(const ComponentId& s, const CurveId& c) {
    const auto on = incidence::curves_on_component(s);
    if (std::find(on.begin(), on.end(), c) == on.end())
        throw std::invalid_argument(c.label() + " does not lie on " + s.label());

    DivisorClass d;
    d.component = s;
    if (s.kind == ComponentId::Kind::del_pezzo) {
        // boundary divisor Delta_{a,b} of the relabelled del Pezzo; exceptional
        // classes indexed so that Delta_{a,5} = e_a and Delta_{a,b} = h - e_c - e_d
        // with {c,d} the complement of {a,b} in {1..4} (the Petersen-compatible
        // reading of the blow-up dictionary)
        d.coeffs.assign(5, 0);
        const int a = relabel(s.m, c.jk[0]);
        const int b = relabel(s.m, c.jk[1]);
        if (b == 5) {
            d.coeffs[a] = 1;
        } else {
            d.coeffs[0] = 1;
            for (int x = 1; x <= 4; ++x)
                if (x != a && x != b) d.coeffs[x] = -1;
        }
        return d;
    }

    const auto pts = blown_point_pairs(s.ij);
    d.coeffs.assign(7, 0);
    if (c.kind == CurveId::Kind::e_curve) {
        const Pair other = c.pairs[0] == s.ij ? c.pairs[1] : c.pairs[0];
        const auto it = std::find(pts.begin(), pts.end(), other);
        d.coeffs[1 + (it - pts.begin())] = 1;
        return d;
    }
    // R(m,[i,j]): line through the three points L[(i,j),(k,l)] with m outside {k,l}
    d.coeffs[0] = 1;
    for (std::size_t k = 0; k < pts.size(); ++k)
        if (pts[k][0] != c.m && pts[k][1] != c.m) d.coeffs[1 + k] = -1;
    return d;
}

Int intersection_number(const ComponentId& s, const DivisorClass& a, const DivisorClass& b) {
    if (!(a.component == s) || !(b.component == s))
        throw std::invalid_argument("intersection_number: class not on the given component");
    const std::size_t n = picard_lattice(s).rank();
    if (a.coeffs.size() != n || b.coeffs.size() != n)
        throw std::invalid_argument("divisor class length mismatch");
    Int total = a.coeffs[0] * b.coeffs[0];
    for (std::size_t i = 1; i < n; ++i) total -= a.coeffs[i] * b.coeffs[i];
    return total;
}

linalg::IntMatrix restriction_matrix(const ComponentId& s) {
    const auto curves = incidence::curves_on_component(s);
    const auto lattice = picard_lattice(s);
    const auto g = lattice.gram();
    linalg::IntMatrix m(curves.size(), lattice.rank());
    for (std::size_t r = 0; r < curves.size(); ++r) {
        const DivisorClass cls = curve_class(s, curves[r]);
        for (std::size_t i = 0; i < lattice.rank(); ++i)
            m.at(r, i) = g.at(i, i) * cls.coeffs[i];  // basis_i . class, diagonal form
    }
    return m;
}

}  // namespace ncdegen::surfaces
