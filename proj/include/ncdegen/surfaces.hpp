#pragma once

#include "ncdegen/incidence.hpp"
#include "ncdegen/linalg.hpp"
#include "ncdegen/rational.hpp"

#include <string>
#include <vector>

namespace ncdegen::surfaces {

// H^2 of a rational component in its blow-up basis; the intersection form is
// diag(1, -1, ..., -1). Rank 5 for a del Pezzo quintic, 7 for a blown plane.
struct PicardLattice {
    incidence::ComponentId component;
    std::vector<std::string> basis_labels;  // "h", then exceptional classes

    std::size_t rank() const { return basis_labels.size(); }
    linalg::IntMatrix gram() const;
};

struct DivisorClass {
    incidence::ComponentId component;
    std::vector<Int> coeffs;  // in the lattice basis
};

PicardLattice picard_lattice(const incidence::ComponentId& c);

// Class of a double curve inside a component carrying it.
//   On D(m): the boundary divisor of the relabelled quintic del Pezzo.
//   On B(i,j): exceptional class for E curves, proper transform of a line
//   through three of the six blown points for R curves.
// Rejects curves not lying on the component.
DivisorClass curve_class(const incidence::ComponentId& s, const incidence::CurveId& c);

Int intersection_number(const incidence::ComponentId& s, const DivisorClass& a,
                        const DivisorClass& b);

// Restriction H^2(S) -> ⊕ H^2(C) over the double curves on S, one row per
// curve (rows follow curves_on_component order), one column per basis class;
// the entry is the intersection number of the basis class with the curve class.
linalg::IntMatrix restriction_matrix(const incidence::ComponentId& s);

}  // namespace ncdegen::surfaces
