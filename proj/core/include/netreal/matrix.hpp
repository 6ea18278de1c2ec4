#pragma once

#include "netreal/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace netreal {

/// Sorted set of distinct 0-based row or column indices. All reports and file
/// formats use 1-based indices; the shift happens at the I/O boundary only.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);
    IndexSet(std::initializer_list<int> indices);

    static IndexSet range(int n); // {0, ..., n-1}

    int size() const { return static_cast<int>(ix_.size()); }
    bool empty() const { return ix_.empty(); }
    bool contains(int i) const;
    int operator[](int k) const { return ix_[static_cast<std::size_t>(k)]; }

    auto begin() const { return ix_.begin(); }
    auto end() const { return ix_.end(); }
    const std::vector<int>& values() const { return ix_; }

    bool is_subset_of(const IndexSet& other) const;
    bool intersects(const IndexSet& other) const;

    static IndexSet set_union(const IndexSet& a, const IndexSet& b);
    static IndexSet intersection(const IndexSet& a, const IndexSet& b);
    static IndexSet difference(const IndexSet& a, const IndexSet& b);

    bool operator==(const IndexSet& other) const { return ix_ == other.ix_; }
    bool operator!=(const IndexSet& other) const { return ix_ != other.ix_; }

private:
    std::vector<int> ix_;
};

/// Dense matrix of Scalar entries, row-major.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(int rows, int cols); // zero-filled
    static RealMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Convenience for tests and fixtures: integer literals become exact entries.
    static RealMatrix from_int_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Scalar& at(int r, int c) const { return data_[index(r, c)]; }
    Scalar& at(int r, int c) { return data_[index(r, c)]; }

    bool all_exact() const;
    std::vector<Scalar> row(int r) const;
    std::vector<Scalar> col(int c) const;
    RealMatrix submatrix(const IndexSet& row_ix, const IndexSet& col_ix) const;

    bool operator==(const RealMatrix& other) const;

private:
    std::size_t index(int r, int c) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

/// Dense 0/1 matrix.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols); // zero-filled
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, int v) { data_[index(r, c)] = static_cast<std::uint8_t>(v != 0); }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    BinaryMatrix transposed() const;

    bool row_is_zero(int r) const;
    bool col_is_zero(int c) const;
    IndexSet row_support(int r) const;
    IndexSet col_support(int c) const;
    IndexSet zero_rows() const;
    IndexSet zero_cols() const;
    bool rows_equal(int r1, int r2) const;
    bool cols_equal(int c1, int c2) const;

    bool operator==(const BinaryMatrix& other) const;

private:
    std::size_t index(int r, int c) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Small dense integer matrix; holds arc-count adjacency matrices.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return data_[index(r, c)]; }
    int& at(int r, int c) { return data_[index(r, c)]; }

    bool operator==(const IntMatrix& other) const;

private:
    std::size_t index(int r, int c) const;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

/// A · B with 0/1 operands and integer result.
IntMatrix count_product(const BinaryMatrix& a, const BinaryMatrix& b);
/// Zero pattern of A · B.
BinaryMatrix pattern_product(const BinaryMatrix& a, const BinaryMatrix& b);

/// Bijection on {0, ..., n-1} stored as the image array.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if the image is not a bijection.
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    Permutation inverse() const;

private:
    std::vector<int> image_;
};

} // namespace netreal
