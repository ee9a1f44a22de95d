#include "ctx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ctx {

namespace {

void check_dim(std::size_t dim) {
    if (dim < 1 || dim > 4) {
        throw std::invalid_argument("dimension must be in 1..4, got " +
                                    std::to_string(dim));
    }
}

}  // namespace

CVector::CVector(std::size_t dim) : entries_(dim, Complex{0.0, 0.0}) {
    check_dim(dim);
}

CVector::CVector(std::initializer_list<Complex> entries) : entries_(entries) {
    check_dim(entries_.size());
}

CVector CVector::basis(std::size_t dim, std::size_t k) {
    check_dim(dim);
    if (k >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    CVector v(dim);
    v[k] = Complex{1.0, 0.0};
    return v;
}

double CVector::norm_sq() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return s;
}

double CVector::norm() const { return std::sqrt(norm_sq()); }

CVector CVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    CVector out = *this;
    for (std::size_t i = 0; i < dim(); ++i) out[i] /= n;
    return out;
}

CVector operator+(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    CVector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
    return out;
}

CVector operator-(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
    CVector out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
    return out;
}

CVector operator*(const Complex& z, const CVector& v) {
    CVector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = z * v[i];
    return out;
}

Complex inner(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

CVector kron(const CVector& u, const CVector& v) {
    if (u.dim() != 2 || v.dim() != 2) {
        throw std::invalid_argument("kron expects two dimension-2 vectors");
    }
    CVector out(4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[2 * i + j] = u[i] * v[j];
    return out;
}

CMatrix::CMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    check_dim(dim);
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
                return false;
    return true;
}

Complex CMatrix::trace() const {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

CVector CMatrix::apply(const CVector& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("apply: dimension mismatch");
    CVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Complex s{0.0, 0.0};
        for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            out(i, j) = std::conj((*this)(j, i));
    return out;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

CMatrix operator*(const Complex& z, const CMatrix& m) {
    CMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = z * m(i, j);
    return out;
}

CMatrix outer(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("outer: dimension mismatch");
    CMatrix out(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < u.dim(); ++j)
            out(i, j) = u[i] * std::conj(v[j]);
    return out;
}

namespace {

double offdiag_sq(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.dim(); ++p)
        for (std::size_t q = 0; q < a.dim(); ++q)
            if (p != q) s += std::norm(a(p, q));
    return s;
}

// Unitary that zeroes the (p,q) entry of a Hermitian matrix: a phase
// factor folding arg(a_pq) away followed by a real Jacobi rotation.
CMatrix jacobi_rotation(const CMatrix& a, std::size_t p, std::size_t q) {
    const Complex b = a(p, q);
    const double r = std::abs(b);
    const Complex phase = b / r;  // e^{i arg(b)}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * r);
    double t;  // tan(theta), smaller-magnitude root of t^2 - 2*tau*t - 1 = 0
    if (tau >= 0.0) {
        t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    CMatrix u = CMatrix::identity(a.dim());
    u(p, p) = Complex{c, 0.0};
    u(p, q) = Complex{-s, 0.0};
    u(q, p) = std::conj(phase) * s;
    u(q, q) = std::conj(phase) * c;
    return u;
}

// Re-orthonormalize runs of near-equal eigenvalues by modified Gram-Schmidt.
void orthonormalize_clusters(std::vector<double>& vals,
                             std::vector<CVector>& vecs) {
    std::size_t start = 0;
    while (start < vals.size()) {
        std::size_t end = start + 1;
        while (end < vals.size() && vals[end] - vals[end - 1] < 1e-9) ++end;
        for (std::size_t i = start; i < end; ++i) {
            for (std::size_t j = start; j < i; ++j) {
                const Complex proj = inner(vecs[j], vecs[i]);
                vecs[i] = vecs[i] - proj * vecs[j];
            }
            vecs[i] = vecs[i].normalized();
        }
        start = end;
    }
}

// First entry of magnitude > 1e-8 made real and positive.
CVector canonical_phase(const CVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const double m = std::abs(v[i]);
        if (m > 1e-8) {
            return (std::conj(v[i]) / m) * v;
        }
    }
    return v;
}

}  // namespace

SpectralDecomposition hermitian_eigen(const CMatrix& m) {
    if (!m.is_hermitian(1e-12)) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
    }
    const std::size_t n = m.dim();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);

    const double fro = a.frobenius_norm();
    const double stop = 1e-28 * (1.0 + fro * fro);
    for (int sweep = 0; sweep < 60 && offdiag_sq(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const CMatrix u = jacobi_rotation(a, p, q);
                a = u.adjoint() * a * u;
                v = v * u;
            }
        }
        // Symmetrize away rounding drift.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const Complex h = 0.5 * (a(i, j) + std::conj(a(j, i)));
                a(i, j) = h;
                a(j, i) = std::conj(h);
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    SpectralDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(a(k, k).real());
        CVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v(i, k);
        out.eigenvectors.push_back(col);
    }
    orthonormalize_clusters(out.eigenvalues, out.eigenvectors);
    for (auto& vec : out.eigenvectors) vec = canonical_phase(vec);
    return out;
}

}  // namespace ctx
