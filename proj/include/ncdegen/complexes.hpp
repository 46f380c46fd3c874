#pragma once

#include "ncdegen/incidence.hpp"
#include "ncdegen/linalg.hpp"

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace ncdegen::complexes {

struct Graph {
    std::vector<std::string> vertices;
    std::set<std::array<std::string, 2>> edges;  // each pair stored sorted

    // no loops, no repeats, endpoints declared
    void validate() const;
    std::size_t degree(const std::string& v) const;
    // uniform degree, or -1 when not regular
    long regular_degree() const;
};

// Vertices are n-subsets of {1..m}, adjacent iff disjoint. Rejects m < 2n.
Graph kneser_graph(int m, int n);
std::string subset_label(const std::vector<int>& subset);  // "1,3"

// Two-dimensional complex; simplices are stored sorted by vertex label and
// carry the orientation of that ordering. Both boundary matrices are built
// at construction and checked to compose to zero.
class SimplicialComplex2 {
public:
    SimplicialComplex2(std::vector<std::string> vertices,
                       std::vector<std::array<std::string, 2>> edges,
                       std::vector<std::array<std::string, 3>> triangles);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::array<std::string, 2>>& edges() const { return edges_; }
    const std::vector<std::array<std::string, 3>>& triangles() const { return triangles_; }

    const linalg::IntMatrix& boundary1() const { return d1_; }  // vertices x edges
    const linalg::IntMatrix& boundary2() const { return d2_; }  // edges x triangles

    Graph one_skeleton() const;
    long euler_characteristic() const;
    bool is_connected() const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::array<std::string, 2>> edges_;
    std::vector<std::array<std::string, 3>> triangles_;
    linalg::IntMatrix d1_, d2_;
};

// Dual complex of the central fibre: a vertex per component, an edge per
// double curve, a triangle per triple point (labels are the component labels).
SimplicialComplex2 build_dual_complex(const incidence::Scheme& scheme);

std::array<std::size_t, 3> betti_numbers_q(const SimplicialComplex2& c);

struct IntegralHomology {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1

    bool operator==(const IntegralHomology&) const = default;
};

IntegralHomology integral_homology(const SimplicialComplex2& c, int degree);

// H of a chain complex ... -> Z^b --din--> Z^a --dout--> ... at the middle spot.
IntegralHomology chain_homology(const linalg::IntMatrix& d_out, const linalg::IntMatrix& d_in);

struct GroupPresentation {
    std::vector<std::string> generators;
    // words as signed 1-based generator indices: +k means generator k-1, -k its inverse
    std::vector<std::vector<int>> relators;

    void validate() const;
};

// abelianized invariants: Smith form of the relator exponent matrix
IntegralHomology abelianization(const GroupPresentation& p);

// Edge-path presentation over a BFS spanning tree rooted at the
// lexicographically smallest vertex; one generator per non-tree edge, one
// relator per triangle. Rejects disconnected complexes.
GroupPresentation pi1_presentation(const SimplicialComplex2& c);

// fundamental group of the ten-line complement in the quintic del Pezzo:
// generators sigma_ij over {1..4}, the six-fold product relation and one
// commutator for each pair of meeting (-1)-lines
GroupPresentation m05_presentation();
// loop word of a (-1)-line: {i,j} -> [s_ij]; {i,j,k} -> s_ij s_ik s_jk
std::vector<int> m05_line_word(const std::vector<int>& line);

struct CellHomologyTable {
    IntegralHomology h0, h1, h2, h3;
};
// standard CW 2-skeleton of the 3-torus: one 0-cell, three 1-cells, three
// 2-cells, all boundaries zero
CellHomologyTable t3_skeleton_homology();

// Bounded Tietze simplification: tries to reduce p to the standard
// presentation of a free abelian group. Inconclusive is a valid outcome;
// callers must not treat it as a failure.
enum class TietzeVerdict { confirmed_free_abelian, inconclusive };
TietzeVerdict tietze_free_abelian_check(const GroupPresentation& p, std::size_t expected_rank,
                                        std::size_t max_rounds = 64);

}  // namespace ncdegen::complexes
