// dataset.hpp
// Regression/classification datasets, CSV codec and toy generators.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qridge {

struct Dataset {
    std::vector<std::vector<double>> inputs;  // M x d
    std::vector<double> targets;              // M

    std::size_t size() const { return inputs.size(); }
    std::size_t input_dim() const { return inputs.empty() ? 0 : inputs[0].size(); }
    void validate() const;
};

/// CSV with header x0,...,x{d-1},y; one sample per row.
Dataset dataset_from_csv_text(const std::string& text);
std::string dataset_to_csv_text(const Dataset& d);

/// y -> scale * y + offset. Used to map arbitrary regression targets onto a
/// probability-compatible range for the circuit/block models.
struct TargetTransform {
    double scale = 1.0;
    double offset = 0.0;
    double apply(double y) const { return scale * y + offset; }
};

/// Affine map sending [min(targets), max(targets)] onto [lo, hi]; constant
/// targets map to the midpoint.
TargetTransform fit_target_transform(const std::vector<double>& targets, double lo, double hi);
Dataset apply_target_transform(const Dataset& d, const TargetTransform& t);

/// Two 2-D Gaussian blobs with labels 0 and 1, classes interleaved. The
/// blobs sit at distinct angles from the origin so they stay separable
/// after amplitude encoding.
Dataset make_blobs(std::size_t n_points, std::uint64_t seed);

/// y = a . x + b over x ~ U(-1,1)^d, d = a.size().
Dataset make_linear_dataset(std::size_t n_points, const std::vector<double>& a, double b,
                            std::uint64_t seed);

}  // namespace qridge
