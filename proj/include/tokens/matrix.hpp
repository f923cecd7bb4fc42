#pragma once

#include <cstddef>
#include <vector>

namespace tokens {

// Dense row-major matrix of doubles. Small and unclever on purpose: every
// matrix in this project is at most a few hundred rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_data(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_data(std::size_t i) const { return data_.data() + i * cols_; }

    Matrix transposed() const;
    double frobenius_norm() const;

    // Column access as plain vectors; handy for eigenvector handling.
    std::vector<double> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<double>& v);

    std::vector<double> operator*(const std::vector<double>& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Square matrix kept exactly symmetric: set() writes both triangles.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order) : m_(order, order, 0.0) {}

    std::size_t order() const { return m_.rows(); }

    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, double v) {
        m_(i, j) = v;
        m_(j, i) = v;
    }
    void add(std::size_t i, std::size_t j, double v) {
        m_(i, j) += v;
        if (i != j) m_(j, i) += v;
    }

    double frobenius_norm() const { return m_.frobenius_norm(); }
    const Matrix& dense() const { return m_; }

    std::vector<double> operator*(const std::vector<double>& v) const { return m_ * v; }

private:
    Matrix m_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);

}  // namespace tokens
