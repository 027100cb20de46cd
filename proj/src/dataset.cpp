#include "qridge/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qridge {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_double(const std::string& s) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && (*b == ' ' || *b == '\t')) ++b;
    while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t' || *(e - 1) == '\r')) --e;
    double value = 0.0;
    auto [p, ec] = std::from_chars(b, e, value);
    if (ec != std::errc{} || p != e)
        throw std::invalid_argument("CSV: cannot parse number '" + s + "'");
    return value;
}

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace

void Dataset::validate() const {
    if (inputs.empty()) throw std::invalid_argument("dataset: needs at least one sample");
    if (inputs.size() != targets.size())
        throw std::invalid_argument("dataset: inputs/targets length mismatch");
    const std::size_t d = inputs[0].size();
    if (d == 0) throw std::invalid_argument("dataset: zero-dimensional inputs");
    for (const auto& x : inputs)
        if (x.size() != d) throw std::invalid_argument("dataset: ragged input dimensions");
}

Dataset dataset_from_csv_text(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw std::invalid_argument("CSV: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);
    if (header.size() < 2 || header.back() != "y")
        throw std::invalid_argument("CSV: header must be x0,...,x{d-1},y");
    for (std::size_t i = 0; i + 1 < header.size(); ++i)
        if (header[i] != "x" + std::to_string(i))
            throw std::invalid_argument("CSV: unexpected header column '" + header[i] + "'");
    const std::size_t d = header.size() - 1;

    Dataset out;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != d + 1)
            throw std::invalid_argument("CSV: row with " + std::to_string(cells.size()) +
                                        " cells, expected " + std::to_string(d + 1));
        std::vector<double> x(d);
        for (std::size_t i = 0; i < d; ++i) x[i] = parse_double(cells[i]);
        out.inputs.push_back(std::move(x));
        out.targets.push_back(parse_double(cells[d]));
    }
    out.validate();
    return out;
}

std::string dataset_to_csv_text(const Dataset& d) {
    d.validate();
    std::string out;
    for (std::size_t i = 0; i < d.input_dim(); ++i) out += "x" + std::to_string(i) + ",";
    out += "y\n";
    for (std::size_t j = 0; j < d.size(); ++j) {
        for (double v : d.inputs[j]) out += format_double(v) + ",";
        out += format_double(d.targets[j]) + "\n";
    }
    return out;
}

TargetTransform fit_target_transform(const std::vector<double>& targets, double lo, double hi) {
    if (targets.empty()) throw std::invalid_argument("fit_target_transform: empty targets");
    if (!(hi > lo)) throw std::invalid_argument("fit_target_transform: need hi > lo");
    const auto [mn, mx] = std::minmax_element(targets.begin(), targets.end());
    TargetTransform t;
    if (*mx == *mn) {
        t.scale = 0.0;
        t.offset = 0.5 * (lo + hi);
    } else {
        t.scale = (hi - lo) / (*mx - *mn);
        t.offset = lo - t.scale * *mn;
    }
    return t;
}

Dataset apply_target_transform(const Dataset& d, const TargetTransform& t) {
    Dataset out = d;
    for (auto& y : out.targets) y = t.apply(y);
    return out;
}

Dataset make_blobs(std::size_t n_points, std::uint64_t seed) {
    if (n_points < 2) throw std::invalid_argument("make_blobs: need at least two points");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.06);
    // Centers near 5 and 85 degrees on the unit circle.
    const double c0[2] = {0.9962, 0.0872};
    const double c1[2] = {0.0872, 0.9962};
    Dataset out;
    for (std::size_t i = 0; i < n_points; ++i) {
        const bool cls = (i % 2 == 1);
        const double* c = cls ? c1 : c0;
        out.inputs.push_back({c[0] + noise(rng), c[1] + noise(rng)});
        out.targets.push_back(cls ? 1.0 : 0.0);
    }
    return out;
}

Dataset make_linear_dataset(std::size_t n_points, const std::vector<double>& a, double b,
                            std::uint64_t seed) {
    if (n_points < 1) throw std::invalid_argument("make_linear_dataset: need at least one point");
    if (a.empty()) throw std::invalid_argument("make_linear_dataset: empty coefficient vector");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Dataset out;
    for (std::size_t i = 0; i < n_points; ++i) {
        std::vector<double> x(a.size());
        double y = b;
        for (std::size_t j = 0; j < a.size(); ++j) {
            x[j] = u(rng);
            y += a[j] * x[j];
        }
        out.inputs.push_back(std::move(x));
        out.targets.push_back(y);
    }
    return out;
}

}  // namespace qridge
