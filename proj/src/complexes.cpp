#include "ncdegen/complexes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncdegen::complexes {

void Graph::validate() const {
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw std::invalid_argument("duplicate vertex label");
    for (const auto& e : edges) {
        if (e[0] == e[1]) throw std::invalid_argument("loop edge " + e[0]);
        if (e[0] > e[1]) throw std::invalid_argument("edge not sorted");
        if (!vs.count(e[0]) || !vs.count(e[1]))
            throw std::invalid_argument("edge endpoint not declared: " + e[0] + "," + e[1]);
    }
}

std::size_t Graph::degree(const std::string& v) const {
    std::size_t d = 0;
    for (const auto& e : edges) d += (e[0] == v) + (e[1] == v);
    return d;
}

long Graph::regular_degree() const {
    if (vertices.empty()) return 0;
    const std::size_t d = degree(vertices.front());
    for (const auto& v : vertices)
        if (degree(v) != d) return -1;
    return static_cast<long>(d);
}

std::string subset_label(const std::vector<int>& subset) {
    std::ostringstream out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out << ',';
        out << subset[i];
    }
    return out.str();
}

Graph kneser_graph(int m, int n) {
    if (n < 1 || m < 2 * n) throw std::invalid_argument("kneser_graph requires m >= 2n >= 2");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    // lexicographic n-subsets of {1..m}
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n) {
            subsets.push_back(cur);
            return;
        }
        for (int x = next; x <= m; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    Graph g;
    for (const auto& s : subsets) g.vertices.push_back(subset_label(s));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            bool disjoint = true;
            for (int x : subsets[i])
                if (std::find(subsets[j].begin(), subsets[j].end(), x) != subsets[j].end())
                    disjoint = false;
            if (disjoint) {
                std::array<std::string, 2> e{g.vertices[i], g.vertices[j]};
                std::sort(e.begin(), e.end());
                g.edges.insert(e);
            }
        }
    g.validate();
    return g;
}

SimplicialComplex2::SimplicialComplex2(std::vector<std::string> vertices,
                                       std::vector<std::array<std::string, 2>> edges,
                                       std::vector<std::array<std::string, 3>> triangles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    for (auto& e : edges_) std::sort(e.begin(), e.end());
    for (auto& t : triangles_) std::sort(t.begin(), t.end());
    std::sort(edges_.begin(), edges_.end());
    std::sort(triangles_.begin(), triangles_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end())
        throw std::invalid_argument("duplicate triangle");

    std::set<std::string> vs(vertices_.begin(), vertices_.end());
    if (vs.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex");
    std::map<std::array<std::string, 2>, std::size_t> eidx;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e[0] == e[1]) throw std::invalid_argument("degenerate edge");
        if (!vs.count(e[0]) || !vs.count(e[1])) throw std::invalid_argument("edge endpoint missing");
        eidx[e] = i;
    }
    for (const auto& t : triangles_) {
        if (t[0] == t[1] || t[1] == t[2]) throw std::invalid_argument("degenerate triangle");
        // downward closure
        for (const auto& e : {std::array{t[0], t[1]}, std::array{t[0], t[2]}, std::array{t[1], t[2]}})
            if (!eidx.count(e))
                throw std::invalid_argument("triangle face missing from edge set");
    }

    std::map<std::string, std::size_t> vidx;
    for (std::size_t i = 0; i < vertices_.size(); ++i) vidx[vertices_[i]] = i;
    d1_ = linalg::IntMatrix(vertices_.size(), edges_.size());
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        d1_.at(vidx[edges_[j][0]], j) = -1;
        d1_.at(vidx[edges_[j][1]], j) = 1;
    }
    d2_ = linalg::IntMatrix(edges_.size(), triangles_.size());
    for (std::size_t j = 0; j < triangles_.size(); ++j) {
        const auto& t = triangles_[j];
        d2_.at(eidx[{t[1], t[2]}], j) = 1;
        d2_.at(eidx[{t[0], t[2]}], j) = -1;
        d2_.at(eidx[{t[0], t[1]}], j) = 1;
    }
    if (!(d1_ * d2_).is_zero()) throw std::logic_error("boundary composition d1*d2 != 0");
}

Graph SimplicialComplex2::one_skeleton() const {
    Graph g;
    g.vertices = vertices_;
    g.edges.insert(edges_.begin(), edges_.end());
    g.validate();
    return g;
}

long SimplicialComplex2::euler_characteristic() const {
    return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size()) +
           static_cast<long>(triangles_.size());
}

bool SimplicialComplex2::is_connected() const {
    if (vertices_.empty()) return true;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : edges_) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<std::string> seen{vertices_.front()};
    std::deque<std::string> queue{vertices_.front()};
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == vertices_.size();
}

SimplicialComplex2 build_dual_complex(const incidence::Scheme& scheme) {
    std::vector<std::string> vertices;
    for (const auto& c : scheme.components()) vertices.push_back(c.label());
    std::vector<std::array<std::string, 2>> edges;
    for (const auto& c : scheme.curves()) {
        const auto sides = incidence::curve_sides(c);
        edges.push_back({sides[0].label(), sides[1].label()});
    }
    std::vector<std::array<std::string, 3>> triangles;
    for (const auto& p : scheme.points()) {
        const auto comps = incidence::point_components(p);
        triangles.push_back({comps[0].label(), comps[1].label(), comps[2].label()});
    }
    return SimplicialComplex2(std::move(vertices), std::move(edges), std::move(triangles));
}

std::array<std::size_t, 3> betti_numbers_q(const SimplicialComplex2& c) {
    const std::size_t r1 = linalg::rank_q(c.boundary1().to_rational());
    const std::size_t r2 = linalg::rank_q(c.boundary2().to_rational());
    return {c.vertices().size() - r1, c.edges().size() - r1 - r2, c.triangles().size() - r2};
}

IntegralHomology chain_homology(const linalg::IntMatrix& d_out, const linalg::IntMatrix& d_in) {
    if (d_out.cols() != d_in.rows()) throw std::invalid_argument("chain degree mismatch");
    const auto s_out = linalg::smith_normal_form(d_out);
    const auto s_in = linalg::smith_normal_form(d_in);
    IntegralHomology h;
    h.free_rank = d_out.cols() - s_out.rank - s_in.rank;
    for (const auto& d : s_in.invariant_factors)
        if (d != 1) h.torsion.push_back(d);
    return h;
}

IntegralHomology integral_homology(const SimplicialComplex2& c, int degree) {
    const auto& d1 = c.boundary1();
    const auto& d2 = c.boundary2();
    switch (degree) {
        case 0:
            return chain_homology(linalg::IntMatrix(0, c.vertices().size()), d1);
        case 1:
            return chain_homology(d1, d2);
        case 2:
            return chain_homology(d2, linalg::IntMatrix(c.triangles().size(), 0));
        default:
            throw std::invalid_argument("degree must be 0, 1 or 2");
    }
}

void GroupPresentation::validate() const {
    const int n = static_cast<int>(generators.size());
    for (const auto& rel : relators)
        for (int t : rel)
            if (t == 0 || t > n || t < -n) throw std::invalid_argument("relator index out of range");
}

IntegralHomology abelianization(const GroupPresentation& p) {
    p.validate();
    linalg::IntMatrix exponents(p.relators.size(), p.generators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int t : p.relators[r]) {
            if (t > 0)
                exponents.at(r, t - 1) += 1;
            else
                exponents.at(r, -t - 1) -= 1;
        }
    const auto snf = linalg::smith_normal_form(exponents.transposed());
    IntegralHomology h;
    h.free_rank = p.generators.size() - snf.rank;
    for (const auto& d : snf.invariant_factors)
        if (d != 1) h.torsion.push_back(d);
    return h;
}

GroupPresentation pi1_presentation(const SimplicialComplex2& c) {
    if (!c.is_connected()) throw std::invalid_argument("pi1_presentation needs a connected complex");
    // BFS tree from the lexicographically smallest vertex, neighbours in label order
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : c.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    const std::string root = *std::min_element(c.vertices().begin(), c.vertices().end());
    std::set<std::array<std::string, 2>> tree;
    std::set<std::string> seen{root};
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) {
                std::array<std::string, 2> e{v, w};
                std::sort(e.begin(), e.end());
                tree.insert(e);
                queue.push_back(w);
            }
    }

    GroupPresentation p;
    std::map<std::array<std::string, 2>, int> gen_of_edge;  // 1-based
    for (const auto& e : c.edges())
        if (!tree.count(e)) {
            gen_of_edge[e] = static_cast<int>(p.generators.size()) + 1;
            p.generators.push_back("[" + e[0] + "|" + e[1] + "]");
        }
    // word of the oriented edge a->b; tree edges map to the identity
    auto word = [&](const std::string& a, const std::string& b) -> std::vector<int> {
        std::array<std::string, 2> e{a, b};
        const bool forward = a < b;
        std::sort(e.begin(), e.end());
        auto it = gen_of_edge.find(e);
        if (it == gen_of_edge.end()) return {};
        return {forward ? it->second : -it->second};
    };
    for (const auto& t : c.triangles()) {
        std::vector<int> rel;
        for (const auto& [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}})
            for (int g : word(a, b)) rel.push_back(g);
        p.relators.push_back(rel);
    }
    p.validate();
    return p;
}

std::vector<int> m05_line_word(const std::vector<int>& line) {
    static const std::vector<std::array<int, 2>> gens = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    auto gen = [&](int i, int j) {
        const std::array<int, 2> key{std::min(i, j), std::max(i, j)};
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k] == key) return static_cast<int>(k) + 1;
        throw std::invalid_argument("bad generator pair");
    };
    if (line.size() == 2) return {gen(line[0], line[1])};
    if (line.size() == 3) {
        const int i = line[0], j = line[1], k = line[2];
        return {gen(i, j), gen(i, k), gen(j, k)};
    }
    throw std::invalid_argument("a (-1)-line is a 2- or 3-subset of {1..4}");
}

GroupPresentation m05_presentation() {
    GroupPresentation p;
    p.generators = {"s12", "s13", "s14", "s23", "s24", "s34"};
    // product of the six normal loops taken in the stated order
    std::vector<int> product;
    for (const auto& pr : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3},
                           std::pair{1, 4}, std::pair{2, 4}, std::pair{3, 4}})
        product.push_back(m05_line_word({pr.first, pr.second})[0]);
    p.relators.push_back(product);

    // (-1)-lines: six proper transforms (2-subsets) and four exceptional (3-subsets)
    std::vector<std::vector<int>> lines;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) lines.push_back({i, j});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = j + 1; k <= 4; ++k) lines.push_back({i, j, k});
    auto meets = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() == 2 && b.size() == 2) {
            for (int x : a)
                for (int y : b)
                    if (x == y) return false;
            return true;  // disjoint proper transforms meet
        }
        if (a.size() == 3 && b.size() == 3) return false;  // exceptional lines are disjoint
        const auto& pair = a.size() == 2 ? a : b;
        const auto& triple = a.size() == 2 ? b : a;
        return std::includes(triple.begin(), triple.end(), pair.begin(), pair.end());
    };
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (!meets(lines[i], lines[j])) continue;
            const std::vector<int> u = m05_line_word(lines[i]);
            const std::vector<int> v = m05_line_word(lines[j]);
            std::vector<int> rel;
            rel.insert(rel.end(), u.begin(), u.end());
            rel.insert(rel.end(), v.begin(), v.end());
            for (auto it = u.rbegin(); it != u.rend(); ++it) rel.push_back(-*it);
            for (auto it = v.rbegin(); it != v.rend(); ++it) rel.push_back(-*it);
            p.relators.push_back(rel);
        }
    p.validate();
    return p;
}

CellHomologyTable t3_skeleton_homology() {
    // chain complex Z^1 <- Z^3 <- Z^3 with zero boundaries
    const linalg::IntMatrix d1(1, 3), d2(3, 3);
    CellHomologyTable t;
    t.h0 = chain_homology(linalg::IntMatrix(0, 1), d1);
    t.h1 = chain_homology(d1, d2);
    t.h2 = chain_homology(d2, linalg::IntMatrix(3, 0));
    t.h3 = IntegralHomology{0, {}};  // no 3-cells in the 2-skeleton
    return t;
}

namespace {

std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int t : w) {
        if (!out.empty() && out.back() == -t)
            out.pop_back();
        else
            out.push_back(t);
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

std::vector<int> substitute(const std::vector<int>& w, int gen, const std::vector<int>& repl) {
    std::vector<int> out;
    for (int t : w) {
        if (t == gen)
            out.insert(out.end(), repl.begin(), repl.end());
        else if (t == -gen)
            for (auto it = repl.rbegin(); it != repl.rend(); ++it) out.push_back(-*it);
        else
            out.push_back(t);
    }
    return free_reduce(out);
}

std::vector<int> canonical_cyclic(const std::vector<int>& w) {
    if (w.empty()) return w;
    std::vector<int> best;
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> v = w;
        if (flip) {
            std::vector<int> inv;
            for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(-*it);
            v = inv;
        }
        for (std::size_t s = 0; s < v.size(); ++s) {
            std::vector<int> rot(v.begin() + s, v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + s);
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

bool is_commutator_set(const std::vector<std::vector<int>>& relators, std::size_t ngens) {
    std::set<std::vector<int>> want;
    for (int i = 1; i <= static_cast<int>(ngens); ++i)
        for (int j = i + 1; j <= static_cast<int>(ngens); ++j)
            want.insert(canonical_cyclic({i, j, -i, -j}));
    std::set<std::vector<int>> have;
    for (const auto& r : relators) {
        if (r.empty()) continue;
        have.insert(canonical_cyclic(r));
    }
    return have == want;
}

}  // namespace

TietzeVerdict tietze_free_abelian_check(const GroupPresentation& p, std::size_t expected_rank,
                                        std::size_t max_rounds) {
    std::size_t ngens = p.generators.size();
    std::vector<std::vector<int>> rels;
    for (const auto& r : p.relators) rels.push_back(free_reduce(r));

    auto drop_generator = [&](int g, const std::vector<int>& repl) {
        std::vector<std::vector<int>> next;
        for (const auto& r : rels) {
            auto s = substitute(r, g, repl);
            next.push_back(std::move(s));
        }
        // renumber: remove g, shift indices above it down
        for (auto& r : next)
            for (auto& t : r) {
                const int a = std::abs(t);
                if (a > g) t = t > 0 ? t - 1 : t + 1;
            }
        rels = std::move(next);
        --ngens;
    };

    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool changed = false;
        // drop empty and duplicate relators
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> kept;
        for (auto& r : rels) {
            auto c = canonical_cyclic(free_reduce(r));
            if (c.empty()) {
                changed = changed || !r.empty();
                continue;
            }
            if (seen.insert(c).second)
                kept.push_back(free_reduce(r));
            else
                changed = true;
        }
        if (kept.size() != rels.size()) changed = true;
        rels = std::move(kept);

        // a length-1 relator kills its generator
        bool eliminated = false;
        for (const auto& r : rels)
            if (r.size() == 1) {
                drop_generator(std::abs(r[0]), {});
                eliminated = changed = true;
                break;
            }
        if (eliminated) continue;

        // a length-2 relator identifies two generators (or a generator with an inverse)
        for (const auto& r : rels)
            if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
                const int g = std::abs(r[1]);
                const int other = r[1] > 0 ? -r[0] : r[0];
                drop_generator(g, {other});
                eliminated = changed = true;
                break;
            }
        if (eliminated) continue;

        // Tietze elimination: a generator occurring exactly once in exactly one
        // short relator can be solved for, within a word-growth budget
        std::map<int, std::pair<std::size_t, std::size_t>> occurrences;  // gen -> (count, relator)
        for (std::size_t i = 0; i < rels.size(); ++i)
            for (int t : rels[i]) {
                auto& [cnt, where] = occurrences[std::abs(t)];
                ++cnt;
                where = i;
            }
        for (const auto& [g, cw] : occurrences) {
            const auto& [cnt, where] = cw;
            if (cnt != 1 || rels[where].size() > 16) continue;
            // solve r = u g^e v = 1 for g
            const auto& r = rels[where];
            std::size_t pos = 0;
            while (std::abs(r[pos]) != g) ++pos;
            std::vector<int> repl;  // g = (v u)^{-1} when e=+1, else v u
            std::vector<int> vu(r.begin() + pos + 1, r.end());
            vu.insert(vu.end(), r.begin(), r.begin() + pos);
            if (r[pos] > 0)
                for (auto it = vu.rbegin(); it != vu.rend(); ++it) repl.push_back(-*it);
            else
                repl = vu;
            rels.erase(rels.begin() + static_cast<long>(where));
            drop_generator(g, repl);
            eliminated = changed = true;
            break;
        }
        if (eliminated) continue;

        if (!changed) break;
    }

    if (ngens == expected_rank && is_commutator_set(rels, ngens))
        return TietzeVerdict::confirmed_free_abelian;
    return TietzeVerdict::inconclusive;
}

}  // namespace ncdegen::complexes
