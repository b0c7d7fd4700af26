#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monoglue/errors.hpp"
#include "monoglue/rational.hpp"

namespace monoglue {

/// Dense matrix over exact rationals, row-major. Zero-row and zero-column
/// shapes are legal values; they carry no entries but keep their dimensions.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> grid) {
        rows_ = grid.size();
        cols_ = rows_ == 0 ? 0 : grid.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : grid) {
            if (row.size() != cols_)
                throw error(errc::shape_mismatch, "ragged initializer rows");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "+");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "-");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw error(errc::shape_mismatch,
                        "cannot multiply " + a.shape_str() + " by " + b.shape_str());
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = s * a.entries_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    Matrix column(std::size_t j) const {
        assert(j < cols_);
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix r(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            assert(idx[j] < cols_);
            for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
        }
        return r;
    }

    /// [A B] side by side.
    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_)
            throw error(errc::shape_mismatch, "hstack " + a.shape_str() + " with " + b.shape_str());
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    /// [A; B] stacked.
    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_)
            throw error(errc::shape_mismatch, "vstack " + a.shape_str() + " with " + b.shape_str());
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
        return r;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < cols_; ++j) os << (j == 0 ? "" : " ") << (*this)(i, j).str();
            os << "]" << (i + 1 == rows_ ? "" : "\n");
        }
        os << "]";
        return os.str();
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw error(errc::shape_mismatch,
                        std::string(op) + " on " + a.shape_str() + " and " + b.shape_str());
    }

    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

} // namespace monoglue
