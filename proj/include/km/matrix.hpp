#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace km {

// Exact sparse integer matrix. Stored entries are nonzero; indices are
// 0-based and in range. Zero rows/columns are allowed everywhere.
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // Accumulates into (r, c); erases the entry when it becomes zero.
    void add(int r, int c, const mpz_class& v);
    void set(int r, int c, mpz_class v);
    mpz_class at(int r, int c) const;  // zero when absent

    std::size_t nnz() const { return entries_.size(); }
    const std::map<std::pair<int, int>, mpz_class>& entries() const { return entries_; }

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    void check(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, mpz_class> entries_;
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix transpose(const SparseIntMatrix& a);

// Stacks b below a (column counts must match).
SparseIntMatrix vstack(const SparseIntMatrix& a, const SparseIntMatrix& b);

// MatrixMarket coordinate format, integer field.
void write_matrix_market(std::ostream& os, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& is);

// Small dense helper used where transforms are tracked.
using DenseIntMatrix = std::vector<std::vector<mpz_class>>;

DenseIntMatrix dense_identity(int n);
DenseIntMatrix to_dense(const SparseIntMatrix& m);
SparseIntMatrix from_dense(const DenseIntMatrix& d, int rows, int cols);
DenseIntMatrix dense_multiply(const DenseIntMatrix& a, const DenseIntMatrix& b);
mpz_class dense_determinant(const DenseIntMatrix& a);  // fraction-free elimination

}  // namespace km
