#include "ncdegen/linalg.hpp"

#include <omp.h>

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ncdegen::linalg {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

std::string RatMatrix::to_csv() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ',';
            out << rat_to_string(at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

RatMatrix IntMatrix::to_rational() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = Rat(at(r, c));
    return m;
}

std::string IntMatrix::to_csv() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ',';
            out << at(r, c).str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Gauss-Jordan to reduced row echelon form, straightforward reference version.
std::vector<std::size_t> rref_serial(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rat f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Same elimination with the row-update loop distributed across threads.
// Row updates are independent (each row only reads the pivot row), so the
// result is identical to the serial kernel.
std::vector<std::size_t> rref_parallel(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        const Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        const long long nrows = static_cast<long long>(m.rows());
#pragma omp parallel for schedule(static) if (nrows >= 16)
        for (long long r = 0; r < nrows; ++r) {
            if (static_cast<std::size_t>(r) == row) continue;
            const Rat f = m.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::size_t> rref_inplace(RatMatrix& m, Exec exec) {
    return exec == Exec::serial ? rref_serial(m) : rref_parallel(m);
}

}  // namespace

RatMatrix rref(RatMatrix m, Exec exec) {
    rref_inplace(m, exec);
    return m;
}

std::size_t rank_q(const RatMatrix& m, Exec exec) {
    RatMatrix w = m;
    return rref_inplace(w, exec).size();
}

std::vector<std::vector<Rat>> kernel_basis_q(const RatMatrix& m, Exec exec) {
    RatMatrix w = m;
    const std::vector<std::size_t> pivots = rref_inplace(w, exec);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(i, f);
        basis.push_back(std::move(v));
    }
    assert(basis.size() + pivots.size() == m.cols());  // rank-nullity
    return basis;
}

namespace {

struct Pos {
    std::size_t r = 0, c = 0;
    bool found = false;
};

Pos smallest_nonzero(const IntMatrix& a, std::size_t t) {
    Pos best;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            if (a.at(r, c) == 0) continue;
            if (!best.found || abs(a.at(r, c)) < abs(a.at(best.r, best.c))) {
                best = {r, c, true};
            }
        }
    return best;
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
}

// Classical Smith reduction: place the smallest entry at (t,t), clear its row
// and column by Euclidean steps, then enforce divisibility of the remaining
// block.
//
// This kernel stays serial regardless of Exec. The alternating row/column
// passes hand each entry's buffer back and forth between threads, and the
// resulting allocator-arena bouncing measured slower than serial at every
// operand size (see bench/linalg_bench.cpp). Row reduction, whose ownership
// pattern is stable, is where the OpenMP lane pays off.
std::vector<Int> smith_diagonal(IntMatrix a) {
    std::vector<Int> diag;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            const Pos piv = smallest_nonzero(a, t);
            if (!piv.found) return diag;  // remaining block is zero
            swap_rows(a, t, piv.r);
            swap_cols(a, t, piv.c);
            const Int pivot = a.at(t, t);

            bool dirty = false;
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                const Int q = a.at(r, t) / pivot;  // truncated; remainder below pivot size
                if (q == 0) continue;
                for (std::size_t c = t; c < a.cols(); ++c) a.at(r, c) -= q * a.at(t, c);
            }
            for (std::size_t r = t + 1; r < a.rows(); ++r)
                if (a.at(r, t) != 0) dirty = true;
            if (dirty) continue;  // smaller residues appeared; re-pick pivot

            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                const Int q = a.at(t, c) / pivot;
                if (q == 0) continue;
                for (std::size_t r = t; r < a.rows(); ++r) a.at(r, c) -= q * a.at(r, t);
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c)
                if (a.at(t, c) != 0) dirty = true;
            if (dirty) continue;

            // divisibility fixup: fold an offending row into row t and redo
            bool fixed = true;
            for (std::size_t r = t + 1; r < a.rows() && fixed; ++r)
                for (std::size_t c = t + 1; c < a.cols(); ++c)
                    if (a.at(r, c) % pivot != 0) {
                        for (std::size_t k = t; k < a.cols(); ++k) a.at(t, k) += a.at(r, k);
                        fixed = false;
                        break;
                    }
            if (fixed) break;
        }
        Int d = a.at(t, t);
        if (d < 0) d = -d;
        diag.push_back(d);
    }
    return diag;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m, Exec exec) {
    (void)exec;  // see smith_diagonal: the parallel lane measured slower here
    SmithNormalForm out;
    out.source_shape = {m.rows(), m.cols()};
    out.invariant_factors = smith_diagonal(m);
    out.rank = out.invariant_factors.size();
    for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
        assert(out.invariant_factors[i + 1] % out.invariant_factors[i] == 0);
    return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b, Exec exec) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    RatMatrix aug = hstack(a, b);
    const std::vector<std::size_t> pivots = rref_inplace(aug, exec);
    for (std::size_t c : pivots)
        if (c >= a.cols()) return std::nullopt;  // pivot in the rhs block: inconsistent
    RatMatrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < b.cols(); ++c) x.at(pivots[i], c) = aug.at(i, a.cols() + c);
    return x;
}

std::vector<std::size_t> cokernel_representatives(const RatMatrix& m, Exec exec) {
    RatMatrix t = m.transposed();
    const std::vector<std::size_t> pivots = rref_inplace(t, exec);
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> reps;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!is_pivot[r]) reps.push_back(r);
    return reps;
}

}  // namespace ncdegen::linalg
