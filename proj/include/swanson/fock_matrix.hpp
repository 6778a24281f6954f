#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "swanson/errors.hpp"

namespace swanson {

using Complex = std::complex<double>;

/// Dense complex square matrix over the truncated number basis |0>...|N-1>.
/// Row-major; immutable-by-convention value type (operations return copies).
class FockMatrix {
public:
    explicit FockMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim < 2) throw DimensionError("FockMatrix: dim must be >= 2");
    }

    static FockMatrix identity(std::size_t dim) {
        FockMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    FockMatrix adjoint() const {
        FockMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    /// Top-left k x k block.  k >= 2 so the block is itself a valid FockMatrix.
    FockMatrix project_sector(std::size_t k) const {
        if (k < 2 || k > dim_) throw DimensionError("project_sector: need 2 <= k <= dim");
        FockMatrix r(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const Complex& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    double max_abs_entry() const {
        double m = 0.0;
        for (const Complex& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    bool is_finite() const {
        for (const Complex& e : entries_)
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
        return true;
    }

    FockMatrix& operator+=(const FockMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    FockMatrix& operator-=(const FockMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    FockMatrix& operator*=(Complex c) {
        for (Complex& e : entries_) e *= c;
        return *this;
    }

    friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
    friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
    friend FockMatrix operator*(FockMatrix a, Complex c) { return a *= c; }
    friend FockMatrix operator*(Complex c, FockMatrix a) { return a *= c; }
    friend FockMatrix operator*(FockMatrix a, double c) { return a *= Complex(c); }
    friend FockMatrix operator*(double c, FockMatrix a) { return a *= Complex(c); }

    friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
        a.check_same_dim(b);
        const std::size_t n = a.dim_;
        FockMatrix r(n);
        // ikj order keeps the inner loop contiguous
        for (std::size_t i = 0; i < n; ++i) {
            const Complex* arow = &a.entries_[i * n];
            Complex* rrow = &r.entries_[i * n];
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = arow[k];
                if (aik == Complex{}) continue;
                const Complex* brow = &b.entries_[k * n];
                for (std::size_t j = 0; j < n; ++j) rrow[j] += aik * brow[j];
            }
        }
        if (!r.is_finite()) throw OverflowError("matrix product left floating-point range");
        return r;
    }

private:
    void check_same_dim(const FockMatrix& o) const {
        if (dim_ != o.dim_) throw DimensionError("dimension mismatch");
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// ||m - m^dagger||_F
inline double hermiticity_residual(const FockMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            s += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(s);
}

inline double frobenius_norm(const FockMatrix& m) { return m.frobenius_norm(); }

inline FockMatrix adjoint(const FockMatrix& m) { return m.adjoint(); }

inline FockMatrix project_sector(const FockMatrix& m, std::size_t k) { return m.project_sector(k); }

} // namespace swanson
