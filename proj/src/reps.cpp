#include "ncdegen/reps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncdegen::reps {

std::string ConjugacyClass::label() const {
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < cycle_type.size()) {
        std::size_t j = i;
        while (j < cycle_type.size() && cycle_type[j] == cycle_type[i]) ++j;
        if (!first) out << '.';
        out << cycle_type[i];
        if (j - i > 1) out << '^' << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

namespace {

std::string partition_label(const std::vector<int>& parts) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    out << ')';
    return out.str();
}

SymmetricGroupData build(int n, const std::vector<std::vector<int>>& types,
                         const std::vector<Int>& sizes,
                         const std::vector<std::vector<Int>>& table) {
    SymmetricGroupData g;
    g.n = n;
    for (std::size_t i = 0; i < types.size(); ++i)
        g.classes.push_back({types[i], sizes[i]});
    for (const auto& t : types) g.irreducible_labels.push_back(partition_label(t));
    g.table = table;
    g.validate();
    return g;
}

SymmetricGroupData make_s4() {
    const std::vector<std::vector<int>> types = {
        {1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const std::vector<Int> sizes = {1, 6, 3, 8, 6};
    const std::vector<std::vector<Int>> table = {
        {1, -1, 1, 1, -1},   // (1,1,1,1) sign
        {3, -1, -1, 0, 1},   // (2,1,1)
        {2, 0, 2, -1, 0},    // (2,2)
        {3, 1, -1, 0, -1},   // (3,1) standard
        {1, 1, 1, 1, 1},     // (4) trivial
    };
    return build(4, types, sizes, table);
}

SymmetricGroupData make_s5() {
    const std::vector<std::vector<int>> types = {
        {1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}};
    const std::vector<Int> sizes = {1, 10, 15, 20, 20, 30, 24};
    const std::vector<std::vector<Int>> table = {
        {1, -1, 1, 1, -1, -1, 1},   // (1^5) sign
        {4, -2, 0, 1, 1, 0, -1},    // (2,1,1,1)
        {5, -1, 1, -1, -1, 1, 0},   // (2,2,1)
        {6, 0, -2, 0, 0, 0, 1},     // (3,1,1)
        {5, 1, 1, -1, 1, -1, 0},    // (3,2)
        {4, 2, 0, 1, -1, 0, -1},    // (4,1) standard
        {1, 1, 1, 1, 1, 1, 1},      // (5) trivial
    };
    return build(5, types, sizes, table);
}

SymmetricGroupData make_s6() {
    const std::vector<std::vector<int>> types = {
        {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2}, {3, 1, 1, 1},
        {3, 2, 1},          {3, 3},          {4, 1, 1},    {4, 2},    {5, 1},
        {6}};
    const std::vector<Int> sizes = {1, 15, 45, 15, 40, 120, 40, 90, 90, 144, 120};
    const std::vector<std::vector<Int>> table = {
        {1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1},        // (1^6) sign
        {5, -3, 1, 1, 2, 0, -1, -1, -1, 0, 1},         // (2,1^4)
        {9, -3, 1, -3, 0, 0, 0, 1, 1, -1, 0},          // (2,2,1,1)
        {5, -1, 1, 3, -1, -1, 2, 1, -1, 0, 0},         // (2,2,2)
        {10, -2, -2, 2, 1, 1, 1, 0, 0, 0, -1},         // (3,1,1,1)
        {16, 0, 0, 0, -2, 0, -2, 0, 0, 1, 0},          // (3,2,1)
        {5, 1, 1, -3, -1, 1, 2, -1, -1, 0, 0},         // (3,3)
        {10, 2, -2, -2, 1, -1, 1, 0, 0, 0, 1},         // (4,1,1)
        {9, 3, 1, 3, 0, 0, 0, -1, 1, -1, 0},           // (4,2)
        {5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1},         // (5,1) standard
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},             // (6) trivial
    };
    return build(6, types, sizes, table);
}

}  // namespace

const SymmetricGroupData& SymmetricGroupData::symmetric_group(int n) {
    static const SymmetricGroupData s4 = make_s4();
    static const SymmetricGroupData s5 = make_s5();
    static const SymmetricGroupData s6 = make_s6();
    switch (n) {
        case 4: return s4;
        case 5: return s5;
        case 6: return s6;
        default: throw std::invalid_argument("character data embedded for n = 4, 5, 6 only");
    }
}

Int SymmetricGroupData::order() const {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> SymmetricGroupData::class_representative(std::size_t ci) const {
    const auto& type = classes.at(ci).cycle_type;
    std::vector<int> perm(n);
    int x = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) perm[x + i] = x + (i + 1) % len;
        x += len;
    }
    return perm;
}

void SymmetricGroupData::validate() const {
    const std::size_t k = classes.size();
    if (irreducible_labels.size() != k || table.size() != k)
        throw std::logic_error("character table shape mismatch");
    Int total = 0;
    for (const auto& c : classes) total += c.size;
    if (total != order()) throw std::logic_error("class sizes do not sum to n!");
    // row orthonormality under class-size weights
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            Int ip = 0;
            for (std::size_t c = 0; c < k; ++c) ip += classes[c].size * table[a][c] * table[b][c];
            if (ip != (a == b ? order() : 0))
                throw std::logic_error("row orthogonality fails for " + irreducible_labels[a] +
                                       ", " + irreducible_labels[b]);
        }
    // column orthogonality
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Int s = 0;
            for (std::size_t a = 0; a < k; ++a) s += table[a][i] * table[a][j];
            const Int want = i == j ? order() / classes[i].size : 0;
            if (s != want) throw std::logic_error("column orthogonality fails");
        }
}

Rat Character::inner(const Character& other) const {
    if (group != other.group || !group) throw std::invalid_argument("characters of different groups");
    Rat s = 0;
    for (std::size_t c = 0; c < values.size(); ++c)
        s += Rat(group->classes[c].size) * values[c] * other.values[c];
    return s / Rat(group->order());
}

void GroupAction::validate() const {
    if (!group || !image) throw std::invalid_argument("incomplete action");
    std::vector<int> id(group->n);
    for (int i = 0; i < group->n; ++i) id[i] = i;
    for (std::size_t x = 0; x < degree; ++x)
        if (image(id, x) != x) throw std::invalid_argument("identity does not act trivially");
    // generators: transposition and n-cycle
    std::vector<int> t = id, c(group->n);
    std::swap(t[0], t[1]);
    for (int i = 0; i < group->n; ++i) c[i] = (i + 1) % group->n;
    std::vector<int> tc(group->n);  // t after c
    for (int i = 0; i < group->n; ++i) tc[i] = t[c[i]];
    for (std::size_t x = 0; x < degree; ++x) {
        if (image(tc, x) != image(t, image(c, x)))
            throw std::invalid_argument("action does not respect composition");
        if (image(t, x) >= degree || image(c, x) >= degree)
            throw std::invalid_argument("action image out of range");
    }
}

GroupAction natural_action(int n) {
    GroupAction a;
    a.group = &SymmetricGroupData::symmetric_group(n);
    a.degree = static_cast<std::size_t>(n);
    a.image = [](const std::vector<int>& perm, std::size_t x) {
        return static_cast<std::size_t>(perm[x]);
    };
    a.validate();
    return a;
}

GroupAction pair_action(int n) {
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    GroupAction a;
    a.group = &SymmetricGroupData::symmetric_group(n);
    a.degree = pairs.size();
    a.image = [pairs](const std::vector<int>& perm, std::size_t x) {
        std::array<int, 2> q{perm[pairs[x][0]], perm[pairs[x][1]]};
        if (q[0] > q[1]) std::swap(q[0], q[1]);
        const auto it = std::find(pairs.begin(), pairs.end(), q);
        return static_cast<std::size_t>(it - pairs.begin());
    };
    a.validate();
    return a;
}

Character permutation_character(const GroupAction& action) {
    action.validate();
    Character chi;
    chi.group = action.group;
    for (std::size_t c = 0; c < action.group->class_count(); ++c) {
        const auto rep = action.group->class_representative(c);
        Rat fixed = 0;
        for (std::size_t x = 0; x < action.degree; ++x)
            if (action.image(rep, x) == x) fixed += 1;
        chi.values.push_back(fixed);
    }
    return chi;
}

std::map<std::string, Int> decompose_character(const SymmetricGroupData& g, const Character& chi) {
    if (chi.group != &g) throw std::invalid_argument("character group mismatch");
    std::map<std::string, Int> mult;
    for (std::size_t r = 0; r < g.table.size(); ++r) {
        Character irr;
        irr.group = &g;
        for (const Int& v : g.table[r]) irr.values.push_back(Rat(v));
        const Rat m = chi.inner(irr);
        if (boost::multiprecision::denominator(m) != 1 || m < 0)
            throw std::invalid_argument("not a genuine character: multiplicity of " +
                                        g.irreducible_labels[r] + " is " + rat_to_string(m));
        const Int mi = boost::multiprecision::numerator(m);
        if (mi != 0) mult[g.irreducible_labels[r]] = mi;
    }
    return mult;
}

namespace {

linalg::RatMatrix permutation_matrix(const GroupAction& action, const std::vector<int>& perm) {
    linalg::RatMatrix p(action.degree, action.degree);
    for (std::size_t x = 0; x < action.degree; ++x) p.at(action.image(perm, x), x) = 1;
    return p;
}

}  // namespace

Character representation_on_kernel(const GroupAction& action, const linalg::IntMatrix& map) {
    action.validate();
    if (map.cols() != action.degree)
        throw std::invalid_argument("map must have one column per point of the action");
    const linalg::RatMatrix m = map.to_rational();

    // induced action on the column span: for each generator the permuted
    // columns must be a consistent linear image of the original ones
    const SymmetricGroupData& g = *action.group;
    std::vector<std::vector<int>> gens;
    {
        std::vector<int> t(g.n), c(g.n);
        for (int i = 0; i < g.n; ++i) t[i] = i;
        std::swap(t[0], t[1]);
        for (int i = 0; i < g.n; ++i) c[i] = (i + 1) % g.n;
        gens = {t, c};
    }
    const auto kernel = linalg::kernel_basis_q(m);
    if (kernel.empty()) throw std::invalid_argument("map has trivial kernel");
    linalg::RatMatrix kmat(action.degree, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < action.degree; ++i) kmat.at(i, j) = kernel[j][i];

    // A target map with P.m = m.Perm exists iff every column relation is
    // preserved, i.e. Perm maps ker(m) into itself; check on the generators.
    const char* gen_names[2] = {"(1 2)", "n-cycle"};
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const linalg::RatMatrix moved = m * (permutation_matrix(action, gens[k]) * kmat);
        if (!moved.is_zero())
            throw std::invalid_argument(std::string("map is not equivariant for generator ") +
                                        gen_names[k]);
    }

    Character chi;
    chi.group = action.group;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
        const auto rep = g.class_representative(c);
        const linalg::RatMatrix pk = permutation_matrix(action, rep) * kmat;
        const auto a = linalg::solve(kmat, pk);
        if (!a) throw std::logic_error("kernel not invariant under " + g.classes[c].label());
        Rat trace = 0;
        for (std::size_t i = 0; i < kernel.size(); ++i) trace += a->at(i, i);
        chi.values.push_back(trace);
    }
    return chi;
}

}  // namespace ncdegen::reps
