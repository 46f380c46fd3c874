#pragma once

#include "ncdegen/incidence.hpp"
#include "ncdegen/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ncdegen::spectral {

// First page of the Mayer-Vietoris spectral sequence of the central fibre:
// columns p = depth of intersection, rows q = cohomological degree of the
// stratum pieces. Components and curves are rational, so odd rows vanish.
struct E1Page {
    std::vector<incidence::ComponentId> components;  // (0,0) and (0,4) basis, 21
    std::vector<incidence::CurveId> curves;          // (1,0) and (1,2) basis, 105
    std::vector<incidence::TriplePointId> points;    // (2,0) basis, 90
    // (0,2) basis: one labelled column per Picard basis class per component
    std::vector<std::pair<incidence::ComponentId, std::string>> h2_basis;  // 135
    std::vector<std::size_t> h2_block_offset;  // column offset of each component's block

    std::size_t dim(int p, int q) const;
};

E1Page build_e1_page();

// d1 = alternating restriction, signs fixed by the canonical component order.
// Valid (p,q): p in {0,1,2}, q in {0,2,4}. Maps into a zero group come back
// with zero rows.
linalg::IntMatrix differential_d1(const E1Page& e1, int p, int q);

struct E2Page {
    std::map<std::pair<int, int>, std::size_t> dims;
    // representatives of a basis of E2^{p,q} in E1^{p,q} coordinates (columns)
    std::map<std::pair<int, int>, linalg::RatMatrix> representatives;
    std::array<std::size_t, 5> h;  // h^0..h^4 of the central fibre
};

E2Page compute_e2_page(const E1Page& e1);

// H^3(S, C) = coker(H^2(S) -> H^2(C)) for the double-curve configuration C on S.
struct RelativeH3 {
    incidence::ComponentId component;
    std::size_t rank = 0;                    // = #curves on S - rank of restriction
    std::vector<Int> invariant_factors;      // of the integral restriction matrix
    std::vector<std::size_t> representative_rows;  // curve rows spanning the cokernel
};

RelativeH3 relative_h3(const incidence::ComponentId& c);
// same computation on an explicit restriction matrix (rows = curves)
RelativeH3 relative_h3_of_matrix(const linalg::IntMatrix& restriction);

// H^3(S,C) -> E2^{1,2}: cokernel representatives extended by zero to all 105
// curves with sign +1 when S is the second side of the curve, -1 otherwise,
// then reduced modulo im d1^{0,2}.
struct EmbeddedH3 {
    linalg::RatMatrix matrix;  // dim E2^{1,2} x rank(H^3(S,C)), in E2 coordinates
    std::size_t rank = 0;
};

EmbeddedH3 embed_relative_h3(const incidence::ComponentId& c, const E1Page& e1, const E2Page& e2);

struct EulerCharacteristics {
    long chi_central = 0;  // alternating sum over E1
    long chi_smooth = 0;   // open strata of the central fibre
    long implied_b2 = 0;   // from chi_smooth with b1 = b3 = 10
};

EulerCharacteristics euler_characteristics();

}  // namespace ncdegen::spectral
