#pragma once

#include <vector>

#include "nlsa/rational.hpp"

namespace nlsa {

/// Dense exact rational matrix, row major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    Rat& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    /// Stack row vectors; every row must have length `cols`.
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduced row echelon form with zero rows dropped.
struct Echelon {
    Matrix mat;
    std::vector<int> pivots;  // pivot column of each row, strictly increasing
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each
/// column. The reduced form is a canonical representative of the row space.
Echelon rref(Matrix m);

int rank(Matrix m);

/// A linear subspace, held as its reduced-echelon basis (one row per vector).
/// The reduced form is unique, so operator== decides subspace equality.
struct Subspace {
    int ambient = 0;
    Matrix basis;
    std::vector<int> pivots;

    int dim() const { return basis.rows; }
    Vec row(int i) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
};

Subspace zero_space(int ambient);
Subspace full_space(int ambient);

/// Row space of the given vectors. Throws DimensionMismatch on a length
/// mismatch with `ambient`.
Subspace span(const std::vector<Vec>& vectors, int ambient);

/// Exact kernel of m: every returned basis vector v satisfies m.v = 0,
/// and dim(kernel) + rank(m) = cols(m).
Subspace nullspace(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Eliminate the pivot coordinates of s from v. The result is the canonical
/// representative of v modulo s (zero iff v lies in s).
Vec reduce_mod(const Subspace& s, Vec v);

}  // namespace nlsa
