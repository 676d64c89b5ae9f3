#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tfseg/errors.hpp"

namespace tfseg {

/// A d-dimensional scalar field (d = 2 or 3), x fastest in memory:
/// index = x + nx*(y + ny*z). 2-D fields have nz == 1.
class ImageField {
public:
    ImageField() = default;

    ImageField(int nx, int ny) : dims_(2), ext_{nx, ny, 1} { alloc(); }

    ImageField(int nx, int ny, int nz) : dims_(3), ext_{nx, ny, nz} { alloc(); }

    static ImageField with_dims(int dims, std::array<int, 3> ext) {
        return dims == 2 ? ImageField(ext[0], ext[1]) : ImageField(ext[0], ext[1], ext[2]);
    }

    int dims() const { return dims_; }
    int nx() const { return ext_[0]; }
    int ny() const { return ext_[1]; }
    int nz() const { return ext_[2]; }
    std::array<int, 3> extents() const { return ext_; }

    std::size_t size() const { return data_.size(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    double& at(int x, int y, int z = 0) {
        return data_[static_cast<std::size_t>(x) + static_cast<std::size_t>(ext_[0]) * (y + static_cast<std::size_t>(ext_[1]) * z)];
    }
    double at(int x, int y, int z = 0) const {
        return data_[static_cast<std::size_t>(x) + static_cast<std::size_t>(ext_[0]) * (y + static_cast<std::size_t>(ext_[1]) * z)];
    }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    bool same_shape(const ImageField& o) const {
        return dims_ == o.dims_ && ext_ == o.ext_;
    }

private:
    void alloc() {
        if (ext_[0] < 1 || ext_[1] < 1 || ext_[2] < 1)
            throw InvalidArgument("ImageField: extents must be positive");
        data_.assign(static_cast<std::size_t>(ext_[0]) * ext_[1] * ext_[2], 0.0);
    }

    int dims_ = 2;
    std::array<int, 3> ext_{1, 1, 1};
    std::vector<double> data_;
};

} // namespace tfseg
