#pragma once

#include "ncdegen/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncdegen::linalg {

// Row reduction has two interchangeable kernels: a plain serial reference and
// an OpenMP one that parallelises the row update loop. Both reduce to the
// same canonical form (RREF is unique), so results are bit-identical; the
// test suite compares them on random inputs and bench/ times them. Smith
// reduction accepts the flag for API symmetry but always runs the serial
// kernel; the parallel variant measured slower at every operand size.
enum class Exec { serial, parallel };

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rat& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Rat& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    bool is_zero() const;
    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& o) const;

    std::string to_csv() const;  // entries as "num/den" or integer strings
private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Int& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Int& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    RatMatrix to_rational() const;

    std::string to_csv() const;
private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithNormalForm {
    std::vector<Int> invariant_factors;           // positive, d1 | d2 | ...
    std::size_t rank = 0;                          // == invariant_factors.size()
    std::pair<std::size_t, std::size_t> source_shape{0, 0};
};

// Reduced row echelon form (unique, hence kernel-independent of Exec).
RatMatrix rref(RatMatrix m, Exec exec = Exec::parallel);

std::size_t rank_q(const RatMatrix& m, Exec exec = Exec::parallel);

// Basis of the right kernel {v : m v = 0}; size == cols - rank.
std::vector<std::vector<Rat>> kernel_basis_q(const RatMatrix& m, Exec exec = Exec::parallel);

SmithNormalForm smith_normal_form(const IntMatrix& m, Exec exec = Exec::parallel);

// ---- small helpers shared by the topology/spectral code ----

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);

// X with a X = b, free coordinates set to 0; nullopt when inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b, Exec exec = Exec::parallel);

// Row indices whose standard basis vectors complete the column space of m
// to the full ambient space: coset representatives of coker(m).
std::vector<std::size_t> cokernel_representatives(const RatMatrix& m, Exec exec = Exec::parallel);

}  // namespace ncdegen::linalg
