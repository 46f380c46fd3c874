#include "ncdegen/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ncdegen::incidence {

namespace {

void check_label(int x) {
    if (x < 1 || x > 6) throw std::invalid_argument("label out of {1..6}");
}

Pair make_pair_sorted(int i, int j) {
    check_label(i);
    check_label(j);
    if (i == j) throw std::invalid_argument("pair needs distinct labels");
    return {std::min(i, j), std::max(i, j)};
}

bool disjoint(const Pair& a, const Pair& b) {
    return a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
}

bool contains(const Pair& p, int x) { return p[0] == x || p[1] == x; }

std::string pair_str(const Pair& p) {
    return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

}  // namespace

ComponentId ComponentId::del_pezzo(int m) {
    check_label(m);
    ComponentId c;
    c.kind = Kind::del_pezzo;
    c.m = m;
    return c;
}

ComponentId ComponentId::blown_plane(int i, int j) {
    ComponentId c;
    c.kind = Kind::blown_plane;
    c.ij = make_pair_sorted(i, j);
    return c;
}

std::string ComponentId::label() const {
    if (kind == Kind::del_pezzo) return "D(" + std::to_string(m) + ")";
    return "B(" + std::to_string(ij[0]) + "," + std::to_string(ij[1]) + ")";
}

CurveId CurveId::r_curve(int m, Pair jk) {
    check_label(m);
    jk = make_pair_sorted(jk[0], jk[1]);
    if (contains(jk, m)) throw std::invalid_argument("R(m,[j,k]) needs m outside {j,k}");
    CurveId c;
    c.kind = Kind::r_curve;
    c.m = m;
    c.jk = jk;
    return c;
}

CurveId CurveId::e_curve(Pair a, Pair b) {
    a = make_pair_sorted(a[0], a[1]);
    b = make_pair_sorted(b[0], b[1]);
    if (!disjoint(a, b)) throw std::invalid_argument("E curve needs disjoint pairs");
    if (b < a) std::swap(a, b);
    CurveId c;
    c.kind = Kind::e_curve;
    c.pairs = {a, b};
    return c;
}

std::string CurveId::label() const {
    if (kind == Kind::r_curve)
        return "R(" + std::to_string(m) + ",[" + std::to_string(jk[0]) + "," +
               std::to_string(jk[1]) + "])";
    return "E[" + pair_str(pairs[0]) + "," + pair_str(pairs[1]) + "]";
}

TriplePointId TriplePointId::make(int m, Pair a, Pair b) {
    check_label(m);
    a = make_pair_sorted(a[0], a[1]);
    b = make_pair_sorted(b[0], b[1]);
    if (!disjoint(a, b)) throw std::invalid_argument("triple point needs disjoint pairs");
    if (contains(a, m) || contains(b, m))
        throw std::invalid_argument("triple point needs m outside both pairs");
    if (b < a) std::swap(a, b);
    TriplePointId p;
    p.m = m;
    p.pairs = {a, b};
    return p;
}

std::string TriplePointId::label() const {
    return "N(" + std::to_string(m) + ",[" + pair_str(pairs[0]) + "," + pair_str(pairs[1]) + "])";
}

DistinguishedLine DistinguishedLine::make(Pair a, Pair b) {
    a = make_pair_sorted(a[0], a[1]);
    b = make_pair_sorted(b[0], b[1]);
    if (!disjoint(a, b)) throw std::invalid_argument("distinguished line needs disjoint pairs");
    if (b < a) std::swap(a, b);
    DistinguishedLine l;
    l.pairs = {a, b};
    return l;
}

std::string DistinguishedLine::label() const {
    return "L[" + pair_str(pairs[0]) + "," + pair_str(pairs[1]) + "]";
}

std::vector<ComponentId> enumerate_components() {
    std::vector<ComponentId> out;
    for (int m = 1; m <= 6; ++m) out.push_back(ComponentId::del_pezzo(m));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) out.push_back(ComponentId::blown_plane(i, j));
    return out;
}

std::optional<CurveId> component_intersection(const ComponentId& a, const ComponentId& b) {
    if (a == b) throw std::invalid_argument("component_intersection needs distinct components");
    using K = ComponentId::Kind;
    if (a.kind == K::del_pezzo && b.kind == K::del_pezzo) return std::nullopt;
    if (a.kind == K::blown_plane && b.kind == K::blown_plane) {
        if (!disjoint(a.ij, b.ij)) return std::nullopt;
        return CurveId::e_curve(a.ij, b.ij);
    }
    const ComponentId& d = a.kind == K::del_pezzo ? a : b;
    const ComponentId& p = a.kind == K::del_pezzo ? b : a;
    if (contains(p.ij, d.m)) return std::nullopt;
    return CurveId::r_curve(d.m, p.ij);
}

std::vector<CurveId> curves_on_component(const ComponentId& c) {
    std::vector<CurveId> out;
    for (const auto& other : enumerate_components()) {
        if (other == c) continue;
        if (auto cur = component_intersection(c, other)) out.push_back(*cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TriplePointId> points_on_curve(const CurveId& c) {
    std::vector<TriplePointId> out;
    if (c.kind == CurveId::Kind::r_curve) {
        // pairs {i,n} disjoint from {m} ∪ {j,k}: three choices in the remaining 3 labels
        std::vector<int> rest;
        for (int x = 1; x <= 6; ++x)
            if (x != c.m && !contains(c.jk, x)) rest.push_back(x);
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                out.push_back(TriplePointId::make(c.m, c.jk, {rest[i], rest[j]}));
    } else {
        for (int m = 1; m <= 6; ++m)
            if (!contains(c.pairs[0], m) && !contains(c.pairs[1], m))
                out.push_back(TriplePointId::make(m, c.pairs[0], c.pairs[1]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<ComponentId, 2> curve_sides(const CurveId& c) {
    std::array<ComponentId, 2> sides =
        c.kind == CurveId::Kind::r_curve
            ? std::array{ComponentId::del_pezzo(c.m), ComponentId::blown_plane(c.jk[0], c.jk[1])}
            : std::array{ComponentId::blown_plane(c.pairs[0][0], c.pairs[0][1]),
                         ComponentId::blown_plane(c.pairs[1][0], c.pairs[1][1])};
    if (sides[1] < sides[0]) std::swap(sides[0], sides[1]);
    return sides;
}

std::array<ComponentId, 3> point_components(const TriplePointId& p) {
    std::array<ComponentId, 3> out{ComponentId::del_pezzo(p.m),
                                   ComponentId::blown_plane(p.pairs[0][0], p.pairs[0][1]),
                                   ComponentId::blown_plane(p.pairs[1][0], p.pairs[1][1])};
    std::sort(out.begin(), out.end());
    return out;
}

std::array<CurveId, 3> point_curves(const TriplePointId& p) {
    return {CurveId::e_curve(p.pairs[0], p.pairs[1]), CurveId::r_curve(p.m, p.pairs[0]),
            CurveId::r_curve(p.m, p.pairs[1])};
}

SegreIntersection segre_intersections(const ComponentId& a, const ComponentId& b) {
    if (a == b) throw std::invalid_argument("segre_intersections needs distinct components");
    SegreIntersection out;
    using K = ComponentId::Kind;
    if (a.kind == K::del_pezzo && b.kind == K::del_pezzo) {
        // remaining four labels split into two pairs in three ways
        std::vector<int> rest;
        for (int x = 1; x <= 6; ++x)
            if (x != a.m && x != b.m) rest.push_back(x);
        for (std::size_t k = 1; k < 4; ++k) {
            Pair p{rest[0], rest[k]};
            std::vector<int> q;
            for (std::size_t t = 1; t < 4; ++t)
                if (t != k) q.push_back(rest[t]);
            out.points.push_back(DistinguishedLine::make(p, {q[0], q[1]}));
        }
        std::sort(out.points.begin(), out.points.end());
        return out;
    }
    if (a.kind == K::blown_plane && b.kind == K::blown_plane) {
        if (disjoint(a.ij, b.ij)) out.points.push_back(DistinguishedLine::make(a.ij, b.ij));
        return out;
    }
    const ComponentId& d = a.kind == K::del_pezzo ? a : b;
    const ComponentId& p = a.kind == K::del_pezzo ? b : a;
    if (!contains(p.ij, d.m)) out.curve = CurveId::r_curve(d.m, p.ij);
    return out;
}

std::vector<DistinguishedLine> enumerate_distinguished_lines() {
    std::set<DistinguishedLine> out;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k)
                for (int l = k + 1; l <= 6; ++l) {
                    const Pair a{i, j}, b{k, l};
                    if (disjoint(a, b)) out.insert(DistinguishedLine::make(a, b));
                }
    return {out.begin(), out.end()};
}

void validate_permutation(const Permutation& s) {
    std::array<bool, 6> seen{};
    for (int v : s) {
        if (v < 1 || v > 6 || seen[v - 1]) throw std::invalid_argument("not a permutation of {1..6}");
        seen[v - 1] = true;
    }
}

namespace {
int img(const Permutation& s, int x) { return s[x - 1]; }
Pair img(const Permutation& s, const Pair& p) { return make_pair_sorted(img(s, p[0]), img(s, p[1])); }
}  // namespace

ComponentId apply_s6(const Permutation& s, const ComponentId& x) {
    validate_permutation(s);
    if (x.kind == ComponentId::Kind::del_pezzo) return ComponentId::del_pezzo(img(s, x.m));
    const Pair p = img(s, x.ij);
    return ComponentId::blown_plane(p[0], p[1]);
}

CurveId apply_s6(const Permutation& s, const CurveId& x) {
    validate_permutation(s);
    if (x.kind == CurveId::Kind::r_curve) return CurveId::r_curve(img(s, x.m), img(s, x.jk));
    return CurveId::e_curve(img(s, x.pairs[0]), img(s, x.pairs[1]));
}

TriplePointId apply_s6(const Permutation& s, const TriplePointId& x) {
    validate_permutation(s);
    return TriplePointId::make(img(s, x.m), img(s, x.pairs[0]), img(s, x.pairs[1]));
}

DistinguishedLine apply_s6(const Permutation& s, const DistinguishedLine& x) {
    validate_permutation(s);
    return DistinguishedLine::make(img(s, x.pairs[0]), img(s, x.pairs[1]));
}

Scheme::Scheme() {
    components_ = enumerate_components();
    std::map<ComponentId, std::size_t> cidx;
    for (std::size_t i = 0; i < components_.size(); ++i) cidx[components_[i]] = i;

    std::map<std::array<std::size_t, 2>, CurveId> by_sides;
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j)
            if (auto c = component_intersection(components_[i], components_[j]))
                by_sides.emplace(std::array{i, j}, *c);
    for (const auto& [sides, c] : by_sides) curves_.push_back(c);

    std::set<TriplePointId> pts;
    for (const auto& c : curves_)
        for (const auto& p : points_on_curve(c)) pts.insert(p);
    std::map<std::array<std::size_t, 3>, TriplePointId> by_comps;
    for (const auto& p : pts) {
        const auto comps = point_components(p);
        by_comps.emplace(std::array{cidx.at(comps[0]), cidx.at(comps[1]), cidx.at(comps[2])}, p);
    }
    for (const auto& [k, p] : by_comps) points_.push_back(p);
}

const Scheme& Scheme::canonical() {
    static const Scheme s;
    return s;
}

std::size_t Scheme::component_index(const ComponentId& c) const {
    const auto it = std::lower_bound(components_.begin(), components_.end(), c);
    if (it == components_.end() || !(*it == c)) throw std::invalid_argument("unknown component");
    return static_cast<std::size_t>(it - components_.begin());
}

std::size_t Scheme::curve_index(const CurveId& c) const {
    for (std::size_t i = 0; i < curves_.size(); ++i)
        if (curves_[i] == c) return i;
    throw std::invalid_argument("unknown curve " + c.label());
}

std::array<std::size_t, 2> Scheme::curve_side_indices(const CurveId& c) const {
    const auto sides = curve_sides(c);
    return {component_index(sides[0]), component_index(sides[1])};
}

std::array<std::size_t, 3> Scheme::point_component_indices(const TriplePointId& p) const {
    const auto comps = point_components(p);
    return {component_index(comps[0]), component_index(comps[1]), component_index(comps[2])};
}

}  // namespace ncdegen::incidence
