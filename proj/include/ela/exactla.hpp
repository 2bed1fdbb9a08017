#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ela {

using Q = mpq_class;

// "p/q" or "p"; always in lowest terms with positive denominator.
std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

// Sorted by index, zero entries never stored.
using SparseVec = std::vector<std::pair<int, Q>>;

namespace sv {
SparseVec unit(int i, const Q& c = 1);
Q get(const SparseVec& v, int i);
void axpy(SparseVec& y, const Q& a, const SparseVec& x);  // y += a*x
SparseVec add(const SparseVec& x, const SparseVec& y);
SparseVec sub(const SparseVec& x, const SparseVec& y);
SparseVec scaled(const SparseVec& x, const Q& a);
SparseVec from_dense(const std::vector<Q>& d);
std::vector<Q> to_dense(const SparseVec& v, std::size_t n);
std::string to_string(const SparseVec& v);
}  // namespace sv

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Q& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Q& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Q> a_;
};

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& row(int r) const { return data_[r]; }

    Q at(int r, int c) const { return sv::get(data_[r], c); }
    void add(int r, int c, const Q& v);

    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Q& a) const;
    SparseMatrix transpose() const;
    bool operator==(const SparseMatrix& o) const;
    bool is_zero() const;
    std::size_t nnz() const;

    // row-major index r*cols + c
    SparseVec flatten() const;
    RationalMatrix to_dense() const;
    static SparseMatrix from_dense(const RationalMatrix& m);
    static SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);

    // (row, col, value) with 0-based indices
    std::vector<std::tuple<int, int, Q>> triplets() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

// Fraction-free (Bareiss) elimination on the integer matrix obtained by
// clearing row denominators.
std::size_t rank(const RationalMatrix& m);

// Coefficients c with sum c_i v_i == target, or nullopt.
std::optional<std::vector<Q>> solve_in_span(const std::vector<std::vector<Q>>& vectors,
                                            const std::vector<Q>& target);

// Basis of the right kernel.
std::vector<std::vector<Q>> nullspace(const RationalMatrix& m);

// Incrementally built reduced row echelon form of a list of sparse rows,
// remembering how each reduced row combines the inputs.
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(const std::vector<SparseVec>& rows);

    // returns true if the row was independent of the previous ones
    bool push(const SparseVec& row);

    std::size_t rank() const { return reduced_.size(); }
    std::size_t inputs() const { return inputs_; }

    bool contains(const SparseVec& target) const;
    // coefficients over the input rows (one solution if dependent)
    std::optional<SparseVec> coordinates(const SparseVec& target) const;

private:
    std::size_t inputs_ = 0;
    std::vector<SparseVec> reduced_;
    std::vector<SparseVec> combo_;
    std::vector<int> pivot_;
    std::map<int, std::size_t> where_;
};

}  // namespace ela
