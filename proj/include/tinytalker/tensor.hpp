#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tt {

// Dense row-major tensor of 64-bit floats. Value semantics; once handed to
// the tape or a model, a tensor is treated as immutable.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);
    Tensor(std::vector<int> shape, std::vector<double> data);

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, double v);
    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    const std::vector<int>& shape() const { return shape_; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at(int i0) { return data_[static_cast<size_t>(i0)]; }
    double& at(int i0, int i1) { return data_[static_cast<size_t>(i0) * shape_[1] + i1]; }
    double& at(int i0, int i1, int i2) {
        return data_[(static_cast<size_t>(i0) * shape_[1] + i1) * shape_[2] + i2];
    }
    double& at(int i0, int i1, int i2, int i3) {
        return data_[((static_cast<size_t>(i0) * shape_[1] + i1) * shape_[2] + i2) * shape_[3] + i3];
    }
    double at(int i0) const { return data_[static_cast<size_t>(i0)]; }
    double at(int i0, int i1) const { return data_[static_cast<size_t>(i0) * shape_[1] + i1]; }
    double at(int i0, int i1, int i2) const {
        return data_[(static_cast<size_t>(i0) * shape_[1] + i1) * shape_[2] + i2];
    }
    double at(int i0, int i1, int i2, int i3) const {
        return data_[((static_cast<size_t>(i0) * shape_[1] + i1) * shape_[2] + i2) * shape_[3] + i3];
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    bool all_finite() const;

private:
    std::vector<int> shape_;
    std::vector<double> data_;
};

int64_t numel_of(const std::vector<int>& shape);
std::string shape_str(const std::vector<int>& shape);

}  // namespace tt
