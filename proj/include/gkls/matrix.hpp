#ifndef GKLS_MATRIX_HPP
#define GKLS_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace gkls {

using cplx = std::complex<double>;
using cvector = std::vector<cplx>;

/// Dense complex matrix, row-major. Sized for desk-scale problems
/// (everything in this library is at most a few hundred square).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cvector& data() { return data_; }
    const cvector& data() const { return data_; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cplx s);

    Matrix adjoint() const;
    Matrix transpose() const;
    cplx trace() const;
    double norm_fro() const;
    double max_abs() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    cvector data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, cplx s);
Matrix operator*(cplx s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
cvector operator*(const Matrix& a, const cvector& x);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace gkls

#endif
