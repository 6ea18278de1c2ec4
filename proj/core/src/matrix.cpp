#include "netreal/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace netreal {

IndexSet::IndexSet(std::vector<int> indices) : ix_(std::move(indices)) {
    std::sort(ix_.begin(), ix_.end());
    ix_.erase(std::unique(ix_.begin(), ix_.end()), ix_.end());
    if (!ix_.empty() && ix_.front() < 0)
        throw std::invalid_argument("negative index in index set");
}

IndexSet::IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

IndexSet IndexSet::range(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    IndexSet s;
    s.ix_ = std::move(v);
    return s;
}

bool IndexSet::contains(int i) const {
    return std::binary_search(ix_.begin(), ix_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.ix_.begin(), other.ix_.end(), ix_.begin(), ix_.end());
}

bool IndexSet::intersects(const IndexSet& other) const {
    auto a = ix_.begin();
    auto b = other.ix_.begin();
    while (a != ix_.end() && b != other.ix_.end()) {
        if (*a == *b)
            return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

IndexSet IndexSet::set_union(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_union(a.ix_.begin(), a.ix_.end(), b.ix_.begin(), b.ix_.end(), std::back_inserter(out));
    IndexSet s;
    s.ix_ = std::move(out);
    return s;
}

IndexSet IndexSet::intersection(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.ix_.begin(), a.ix_.end(), b.ix_.begin(), b.ix_.end(),
                          std::back_inserter(out));
    IndexSet s;
    s.ix_ = std::move(out);
    return s;
}

IndexSet IndexSet::difference(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_difference(a.ix_.begin(), a.ix_.end(), b.ix_.begin(), b.ix_.end(),
                        std::back_inserter(out));
    IndexSet s;
    s.ix_ = std::move(out);
    return s;
}

RealMatrix::RealMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar());
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    RealMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

RealMatrix RealMatrix::from_int_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Scalar>> conv;
    conv.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Scalar> out;
        out.reserve(row.size());
        for (int v : row)
            out.push_back(Scalar::integer(v));
        conv.push_back(std::move(out));
    }
    return from_rows(conv);
}

bool RealMatrix::all_exact() const {
    for (const auto& s : data_)
        if (!s.exact())
            return false;
    return true;
}

std::vector<Scalar> RealMatrix::row(int r) const {
    std::vector<Scalar> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

std::vector<Scalar> RealMatrix::col(int c) const {
    std::vector<Scalar> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        out[static_cast<std::size_t>(r)] = at(r, c);
    return out;
}

RealMatrix RealMatrix::submatrix(const IndexSet& row_ix, const IndexSet& col_ix) const {
    RealMatrix out(row_ix.size(), col_ix.size());
    for (int i = 0; i < row_ix.size(); ++i)
        for (int j = 0; j < col_ix.size(); ++j)
            out.at(i, j) = at(row_ix[i], col_ix[j]);
    return out;
}

bool RealMatrix::operator==(const RealMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != other.data_[i])
            return false;
    return true;
}

std::size_t RealMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

bool BinaryMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r))
                return false;
    return true;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            out.set(c, r, at(r, c));
    return out;
}

bool BinaryMatrix::row_is_zero(int r) const {
    for (int c = 0; c < cols_; ++c)
        if (at(r, c))
            return false;
    return true;
}

bool BinaryMatrix::col_is_zero(int c) const {
    for (int r = 0; r < rows_; ++r)
        if (at(r, c))
            return false;
    return true;
}

IndexSet BinaryMatrix::row_support(int r) const {
    std::vector<int> ix;
    for (int c = 0; c < cols_; ++c)
        if (at(r, c))
            ix.push_back(c);
    return IndexSet(std::move(ix));
}

IndexSet BinaryMatrix::col_support(int c) const {
    std::vector<int> ix;
    for (int r = 0; r < rows_; ++r)
        if (at(r, c))
            ix.push_back(r);
    return IndexSet(std::move(ix));
}

IndexSet BinaryMatrix::zero_rows() const {
    std::vector<int> ix;
    for (int r = 0; r < rows_; ++r)
        if (row_is_zero(r))
            ix.push_back(r);
    return IndexSet(std::move(ix));
}

IndexSet BinaryMatrix::zero_cols() const {
    std::vector<int> ix;
    for (int c = 0; c < cols_; ++c)
        if (col_is_zero(c))
            ix.push_back(c);
    return IndexSet(std::move(ix));
}

bool BinaryMatrix::rows_equal(int r1, int r2) const {
    for (int c = 0; c < cols_; ++c)
        if (at(r1, c) != at(r2, c))
            return false;
    return true;
}

bool BinaryMatrix::cols_equal(int c1, int c2) const {
    for (int r = 0; r < rows_; ++r)
        if (at(r, c1) != at(r, c2))
            return false;
    return true;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::size_t BinaryMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::size_t IntMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

IntMatrix count_product(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (!a.at(i, k))
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += b.at(k, j);
        }
    return out;
}

BinaryMatrix pattern_product(const BinaryMatrix& a, const BinaryMatrix& b) {
    IntMatrix counts = count_product(a, b);
    BinaryMatrix out(counts.rows(), counts.cols());
    for (int i = 0; i < counts.rows(); ++i)
        for (int j = 0; j < counts.cols(); ++j)
            out.set(i, j, counts.at(i, j) > 0);
    return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

} // namespace netreal
