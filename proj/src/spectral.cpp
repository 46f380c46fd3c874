#include "ncdegen/spectral.hpp"

#include "ncdegen/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncdegen::spectral {

using incidence::ComponentId;
using incidence::CurveId;
using incidence::Scheme;
using linalg::IntMatrix;
using linalg::RatMatrix;

std::size_t E1Page::dim(int p, int q) const {
    if (p < 0 || q < 0) throw std::invalid_argument("E1 position out of range");
    if (p > 2 || q > 4 || q % 2 == 1) return 0;  // no deeper strata, odd rows vanish
    if (q == 0) {
        if (p == 0) return components.size();
        if (p == 1) return curves.size();
        return points.size();
    }
    if (q == 2) {
        if (p == 0) return h2_basis.size();
        if (p == 1) return curves.size();  // each double curve is a P^1
        return 0;
    }
    return p == 0 ? components.size() : 0;  // q == 4
}

E1Page build_e1_page() {
    const Scheme& scheme = Scheme::canonical();
    E1Page e1;
    e1.components = scheme.components();
    e1.curves = scheme.curves();
    e1.points = scheme.points();
    for (const auto& c : e1.components) {
        e1.h2_block_offset.push_back(e1.h2_basis.size());
        for (const auto& label : surfaces::picard_lattice(c).basis_labels)
            e1.h2_basis.emplace_back(c, label);
    }
    return e1;
}

IntMatrix differential_d1(const E1Page& e1, int p, int q) {
    if (p < 0 || p > 2 || (q != 0 && q != 2 && q != 4))
        throw std::invalid_argument("d1 position out of range");
    const Scheme& scheme = Scheme::canonical();
    const std::size_t target = e1.dim(p + 1, q);
    const std::size_t source = e1.dim(p, q);
    if (target == 0 || source == 0) return IntMatrix(target, source);

    if (q == 0 && p == 0) {
        // one row per curve S_a ∩ S_b (a < b): -1 on a, +1 on b
        IntMatrix m(e1.curves.size(), e1.components.size());
        for (std::size_t r = 0; r < e1.curves.size(); ++r) {
            const auto sides = scheme.curve_side_indices(e1.curves[r]);
            m.at(r, sides[0]) = -1;
            m.at(r, sides[1]) = 1;
        }
        return m;
    }
    if (q == 0 && p == 1) {
        // one row per triple point S_a ∩ S_b ∩ S_c: +(bc) -(ac) +(ab)
        IntMatrix m(e1.points.size(), e1.curves.size());
        for (std::size_t r = 0; r < e1.points.size(); ++r) {
            const auto abc = scheme.point_component_indices(e1.points[r]);
            const auto curves = incidence::point_curves(e1.points[r]);
            for (const auto& c : curves) {
                const auto s = scheme.curve_side_indices(c);
                int sign = 0;
                if (s == std::array{abc[1], abc[2]})
                    sign = 1;
                else if (s == std::array{abc[0], abc[2]})
                    sign = -1;
                else if (s == std::array{abc[0], abc[1]})
                    sign = 1;
                else
                    throw std::logic_error("curve sides not a face of the point");
                m.at(r, scheme.curve_index(c)) = sign;
            }
        }
        return m;
    }
    if (q == 2 && p == 0) {
        // restriction of divisor classes to the double curves, with the same signs
        IntMatrix m(e1.curves.size(), e1.h2_basis.size());
        for (std::size_t r = 0; r < e1.curves.size(); ++r) {
            const CurveId& curve = e1.curves[r];
            const auto sides = scheme.curve_side_indices(curve);
            int sign = -1;
            for (const std::size_t s : sides) {
                const ComponentId& comp = e1.components[s];
                const auto cls = surfaces::curve_class(comp, curve);
                const auto gram = surfaces::picard_lattice(comp).gram();
                for (std::size_t i = 0; i < cls.coeffs.size(); ++i)
                    m.at(r, e1.h2_block_offset[s] + i) = sign * gram.at(i, i) * cls.coeffs[i];
                sign = 1;
            }
        }
        return m;
    }
    throw std::logic_error("unhandled nonzero differential");
}

E2Page compute_e2_page(const E1Page& e1) {
    E2Page e2;
    for (int q : {0, 2, 4}) {
        for (int p : {0, 1, 2}) {
            const std::size_t n = e1.dim(p, q);
            if (n == 0) {
                e2.dims[{p, q}] = 0;
                e2.representatives[{p, q}] = RatMatrix(0, 0);
                continue;
            }
            const RatMatrix out = differential_d1(e1, p, q).to_rational();
            std::vector<std::vector<Rat>> kernel;
            if (out.rows() == 0) {
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<Rat> v(n);
                    v[i] = 1;
                    kernel.push_back(std::move(v));
                }
            } else {
                kernel = linalg::kernel_basis_q(out);
            }
            RatMatrix image(n, 0);
            if (p > 0) image = differential_d1(e1, p - 1, q).to_rational();
            // extend a basis of the image to a basis of the kernel: the pivot
            // columns of [image | kernel] that fall in the kernel block are
            // exactly the greedily independent kernel vectors
            RatMatrix stacked(n, image.cols() + kernel.size());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < image.cols(); ++c) stacked.at(i, c) = image.at(i, c);
            for (std::size_t j = 0; j < kernel.size(); ++j)
                for (std::size_t i = 0; i < n; ++i)
                    stacked.at(i, image.cols() + j) = kernel[j][i];
            const RatMatrix reduced = linalg::rref(stacked);
            std::size_t image_rank = 0;
            std::vector<std::vector<Rat>> reps;
            {
                // recover pivot columns from the reduced form
                std::size_t r = 0;
                for (std::size_t c = 0; c < stacked.cols() && r < n; ++c) {
                    if (reduced.at(r, c) == 0) continue;
                    if (c < image.cols())
                        ++image_rank;
                    else
                        reps.push_back(kernel[c - image.cols()]);
                    ++r;
                }
            }
            const std::size_t dim = kernel.size() - image_rank;
            if (reps.size() != dim) throw std::logic_error("E2 representative extraction failed");
            RatMatrix repm(n, dim);
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t i = 0; i < n; ++i) repm.at(i, j) = reps[j][i];
            e2.dims[{p, q}] = dim;
            e2.representatives[{p, q}] = std::move(repm);
        }
    }
    for (int m = 0; m <= 4; ++m) {
        std::size_t total = 0;
        for (int p = 0; p <= 2; ++p) {
            const int q = m - p;
            if (q >= 0 && e2.dims.count({p, q})) total += e2.dims[{p, q}];
        }
        e2.h[m] = total;
    }
    return e2;
}

RelativeH3 relative_h3_of_matrix(const IntMatrix& restriction) {
    RelativeH3 out;
    const auto snf = linalg::smith_normal_form(restriction);
    out.invariant_factors = snf.invariant_factors;
    out.rank = restriction.rows() - snf.rank;
    out.representative_rows = linalg::cokernel_representatives(restriction.to_rational());
    if (out.representative_rows.size() != out.rank)
        throw std::logic_error("cokernel representative count mismatch");
    return out;
}

RelativeH3 relative_h3(const ComponentId& c) {
    RelativeH3 out = relative_h3_of_matrix(surfaces::restriction_matrix(c));
    out.component = c;
    return out;
}

EmbeddedH3 embed_relative_h3(const ComponentId& c, const E1Page& e1, const E2Page& e2) {
    const Scheme& scheme = Scheme::canonical();
    const std::size_t comp_index = scheme.component_index(c);
    const auto curves = incidence::curves_on_component(c);
    const RelativeH3 rel = relative_h3(c);

    // cokernel representatives, pushed into E1^{1,2} with the boundary sign
    RatMatrix embedded(e1.curves.size(), rel.rank);
    for (std::size_t j = 0; j < rel.rank; ++j) {
        const CurveId& curve = curves[rel.representative_rows[j]];
        const auto sides = scheme.curve_side_indices(curve);
        const int sign = sides[1] == comp_index ? 1 : -1;
        embedded.at(scheme.curve_index(curve), j) = sign;
    }

    // coordinates modulo im d1^{0,2}: solve [reps | image] x = embedded and
    // keep the representative block
    const RatMatrix reps = e2.representatives.at({1, 2});
    const RatMatrix image = differential_d1(e1, 0, 2).to_rational();
    const auto sol = linalg::solve(linalg::hstack(reps, image), embedded);
    if (!sol) throw std::logic_error("embedded class not a cocycle");
    EmbeddedH3 out;
    out.matrix = RatMatrix(reps.cols(), rel.rank);
    for (std::size_t i = 0; i < reps.cols(); ++i)
        for (std::size_t j = 0; j < rel.rank; ++j) out.matrix.at(i, j) = sol->at(i, j);
    out.rank = linalg::rank_q(out.matrix);
    return out;
}

EulerCharacteristics euler_characteristics() {
    const Scheme& scheme = Scheme::canonical();
    const E1Page e1 = build_e1_page();
    EulerCharacteristics out;
    for (int q : {0, 2, 4})
        for (int p : {0, 1, 2})
            out.chi_central += ((p % 2 == 0) ? 1 : -1) * static_cast<long>(e1.dim(p, q));

    // chi of the open part of each component by inclusion-exclusion: the double
    // curves are P^1's glued at the triple points lying on the component
    for (const auto& comp : scheme.components()) {
        // rational surface: chi = b0 + b2 + b4 = 2 + Picard rank
        const long chi_surface = 2 + static_cast<long>(surfaces::picard_lattice(comp).rank());
        const auto curves = incidence::curves_on_component(comp);
        long npoints = 0;
        for (const auto& p : scheme.points()) {
            const auto comps = incidence::point_components(p);
            if (std::find(comps.begin(), comps.end(), comp) != comps.end()) ++npoints;
        }
        const long chi_divisor = 2 * static_cast<long>(curves.size()) - npoints;
        out.chi_smooth += chi_surface - chi_divisor;
    }
    out.implied_b2 = out.chi_smooth - 2 + 2 * 10;  // chi = 2 - 2 b1 + b2 with b1 = 10
    return out;
}

}  // namespace ncdegen::spectral
