#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncdegen::incidence {

using Pair = std::array<int, 2>;  // sorted 2-subset of {1..6}

// Component of the central fibre: one of the six quintic del Pezzo surfaces
// D(m), or one of the fifteen planes B(i,j) blown up at six points.
struct ComponentId {
    enum class Kind { del_pezzo, blown_plane };
    Kind kind;
    int m = 0;    // del_pezzo
    Pair ij{};    // blown_plane

    static ComponentId del_pezzo(int m);
    static ComponentId blown_plane(int i, int j);
    std::string label() const;  // "D(1)", "B(1,2)"
    auto operator<=>(const ComponentId&) const = default;  // canonical order: D's then B's, lex
};

// Double curve: R(m,[j,k]) = D(m) ∩ B(j,k), or E[(i,j),(k,l)] = B(i,j) ∩ B(k,l).
struct CurveId {
    enum class Kind { r_curve, e_curve };
    Kind kind;
    int m = 0;                   // r_curve
    Pair jk{};                   // r_curve
    std::array<Pair, 2> pairs{};  // e_curve, sorted

    static CurveId r_curve(int m, Pair jk);
    static CurveId e_curve(Pair a, Pair b);
    std::string label() const;  // "R(1,[2,3])", "E[(1,2),(3,4)]"
    auto operator<=>(const CurveId&) const = default;
};

// Triple point N(m,[(i,j),(k,l)]) = D(m) ∩ B(i,j) ∩ B(k,l).
struct TriplePointId {
    int m = 0;
    std::array<Pair, 2> pairs{};  // disjoint, sorted, avoiding m

    static TriplePointId make(int m, Pair a, Pair b);
    std::string label() const;
    auto operator<=>(const TriplePointId&) const = default;
};

// Node pair on the pre-resolution surface: L[(i,j),(k,l)] = P(i,j) ∩ P(k,l).
struct DistinguishedLine {
    std::array<Pair, 2> pairs{};

    static DistinguishedLine make(Pair a, Pair b);
    std::string label() const;
    auto operator<=>(const DistinguishedLine&) const = default;
};

std::vector<ComponentId> enumerate_components();  // D(1..6) then B pairs lex, 21 total

// per Prop-level intersection rules: D-D empty, D(m)-B(j,k) = R iff m not in {j,k},
// B-B = E iff index pairs disjoint; rejects a == b
std::optional<CurveId> component_intersection(const ComponentId& a, const ComponentId& b);

std::vector<CurveId> curves_on_component(const ComponentId& c);
std::vector<TriplePointId> points_on_curve(const CurveId& c);

std::array<ComponentId, 2> curve_sides(const CurveId& c);           // canonical order
std::array<ComponentId, 3> point_components(const TriplePointId& p);
std::array<CurveId, 3> point_curves(const TriplePointId& p);

// Pre-resolution intersections on F(S): D-D meets in three distinguished
// points, P-P in one point iff disjoint pairs, D-P in a line iff admissible.
struct SegreIntersection {
    std::vector<DistinguishedLine> points;
    std::optional<CurveId> curve;
    bool empty() const { return points.empty() && !curve.has_value(); }
};
SegreIntersection segre_intersections(const ComponentId& a, const ComponentId& b);
std::vector<DistinguishedLine> enumerate_distinguished_lines();  // 45

// permutation of {1..6}: images[i-1] is the image of i
using Permutation = std::array<int, 6>;
void validate_permutation(const Permutation& s);
ComponentId apply_s6(const Permutation& s, const ComponentId& x);
CurveId apply_s6(const Permutation& s, const CurveId& x);
TriplePointId apply_s6(const Permutation& s, const TriplePointId& x);
DistinguishedLine apply_s6(const Permutation& s, const DistinguishedLine& x);

// The whole scheme enumerated once, in canonical order, with index lookups.
class Scheme {
public:
    static const Scheme& canonical();

    const std::vector<ComponentId>& components() const { return components_; }
    const std::vector<CurveId>& curves() const { return curves_; }            // by side pair
    const std::vector<TriplePointId>& points() const { return points_; }      // by component triple

    std::size_t component_index(const ComponentId& c) const;
    std::size_t curve_index(const CurveId& c) const;
    std::array<std::size_t, 2> curve_side_indices(const CurveId& c) const;
    std::array<std::size_t, 3> point_component_indices(const TriplePointId& p) const;

private:
    Scheme();
    std::vector<ComponentId> components_;
    std::vector<CurveId> curves_;
    std::vector<TriplePointId> points_;
};

}  // namespace ncdegen::incidence
