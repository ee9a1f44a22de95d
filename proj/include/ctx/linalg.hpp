#ifndef CTX_LINALG_HPP
#define CTX_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ctx {

using Complex = std::complex<double>;

// Dense complex vector of dimension 1..4.  Immutable use is the norm:
// every operation below returns a fresh value.
class CVector {
public:
    explicit CVector(std::size_t dim);
    CVector(std::initializer_list<Complex> entries);

    // k-th standard basis vector of the given dimension.
    static CVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return entries_.size(); }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }
    Complex& operator[](std::size_t i) { return entries_[i]; }

    double norm_sq() const;
    double norm() const;
    CVector normalized() const;

private:
    std::vector<Complex> entries_;
};

CVector operator+(const CVector& u, const CVector& v);
CVector operator-(const CVector& u, const CVector& v);
CVector operator*(const Complex& z, const CVector& v);

// <u|v>, conjugate-linear in u.
Complex inner(const CVector& u, const CVector& v);

// Tensor product of two single-system vectors in the ordering
// (0,0),(0,1),(1,0),(1,1).
CVector kron(const CVector& u, const CVector& v);

// Dense complex matrix of dimension 1..4, row-major.
class CMatrix {
public:
    explicit CMatrix(std::size_t dim);
    static CMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * dim_ + j];
    }

    bool is_hermitian(double tol = 1e-12) const;
    Complex trace() const;
    CVector apply(const CVector& v) const;
    CMatrix adjoint() const;
    double frobenius_norm() const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const Complex& z, const CMatrix& m);

// Rank-1 operator |u><v|.
CMatrix outer(const CVector& u, const CVector& v);

struct SpectralDecomposition {
    std::vector<double> eigenvalues;    // ascending
    std::vector<CVector> eigenvectors;  // orthonormal, same order
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations.  Eigenvectors inside a degenerate cluster (gap < 1e-9) are
// re-orthonormalized, so callers must not assume a particular basis there.
// Throws std::invalid_argument if the input is not Hermitian within 1e-12.
SpectralDecomposition hermitian_eigen(const CMatrix& m);

}  // namespace ctx

#endif  // CTX_LINALG_HPP
