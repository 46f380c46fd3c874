#pragma once

#include "ncdegen/linalg.hpp"
#include "ncdegen/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncdegen::reps {

struct ConjugacyClass {
    std::vector<int> cycle_type;  // parts descending, e.g. {2,1,1,1}
    Int size = 0;
    std::string label() const;  // "2.1^3"
};

// Exact character data for S_n, n in {4,5,6}; tables are embedded and checked
// for row orthonormality and column orthogonality on first use.
struct SymmetricGroupData {
    int n = 0;
    std::vector<ConjugacyClass> classes;            // canonical order (lex on descending types)
    std::vector<std::string> irreducible_labels;    // partition labels, same order
    std::vector<std::vector<Int>> table;            // rows = irreducibles, cols = classes

    static const SymmetricGroupData& symmetric_group(int n);

    std::size_t class_count() const { return classes.size(); }
    // canonical representative, 0-based images, cycles filled consecutively
    std::vector<int> class_representative(std::size_t ci) const;
    Int order() const;
    void validate() const;  // orthogonality relations, exact
};

struct Character {
    const SymmetricGroupData* group = nullptr;
    std::vector<Rat> values;  // one per conjugacy class

    Rat inner(const Character& other) const;  // class-size weighted
};

// A finite G-set given by its size and the action of a permutation on point
// indices; validated against the identity and generator compositions.
struct GroupAction {
    const SymmetricGroupData* group = nullptr;
    std::size_t degree = 0;
    std::function<std::size_t(const std::vector<int>& perm, std::size_t)> image;

    void validate() const;
};

GroupAction natural_action(int n);
GroupAction pair_action(int n);  // on sorted 2-subsets, lex order

// fixed points of a class representative, per class
Character permutation_character(const GroupAction& action);

// multiplicities by partition label; throws on non-integral or negative inner
// products (not a genuine character)
std::map<std::string, Int> decompose_character(const SymmetricGroupData& g, const Character& chi);

// Character of the action on ker(map) where `map` has one column per point of
// the action. The target action is induced from the columns; non-equivariant
// input is rejected naming the offending generator. Requires a nonzero kernel.
Character representation_on_kernel(const GroupAction& action, const linalg::IntMatrix& map);

}  // namespace ncdegen::reps
