#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace mdual {

/// Largest ambient dimension supported by the fixed-capacity vector.
inline constexpr int kMaxDim = 8;

/// Point or direction in R^d with inline storage (no heap traffic in inner loops).
class Vec {
public:
    Vec() = default;

    explicit Vec(int dim) : dim_(dim) {
        if (dim < 0 || dim > kMaxDim) {
            throw std::invalid_argument("Vec: dimension out of range");
        }
    }

    Vec(std::initializer_list<double> coords) : Vec(static_cast<int>(coords.size())) {
        int i = 0;
        for (double c : coords) {
            data_[i++] = c;
        }
    }

    static Vec from_span(std::span<const double> coords) {
        Vec v(static_cast<int>(coords.size()));
        for (int i = 0; i < v.dim_; ++i) {
            v.data_[i] = coords[i];
        }
        return v;
    }

    static Vec unit(int dim, int axis) {
        Vec v(dim);
        v.data_[axis] = 1.0;
        return v;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return data_[i]; }
    double& operator[](int i) { return data_[i]; }

    std::span<const double> coords() const { return {data_.data(), static_cast<std::size_t>(dim_)}; }
    std::span<double> coords() { return {data_.data(), static_cast<std::size_t>(dim_)}; }

    Vec& operator+=(const Vec& o) {
        assert(o.dim_ == dim_);
        for (int i = 0; i < dim_; ++i) data_[i] += o.data_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        assert(o.dim_ == dim_);
        for (int i = 0; i < dim_; ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < dim_; ++i) data_[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i) {
            if (a.data_[i] != b.data_[i]) return false;
        }
        return true;
    }

private:
    std::array<double, kMaxDim> data_{};
    int dim_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
    assert(a.dim() == b.dim());
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const Vec& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

}  // namespace mdual
