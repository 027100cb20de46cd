#include "qridge/random.hpp"
#include "qridge/train.hpp"
#include "qridge/xnn.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace qridge;

namespace {

XnnModel random_xnn(Rng& rng, std::size_t k, std::size_t d, Activation act) {
    XnnModel m;
    m.activation = act;
    m.mu = uniform(rng, -1.0, 1.0);
    for (std::size_t i = 0; i < k; ++i) {
        m.gammas.push_back(uniform(rng, -1.5, 1.5));
        std::vector<double> w(d);
        for (auto& v : w) v = uniform(rng, -1.0, 1.0);
        m.directions.push_back(std::move(w));
    }
    return m;
}

// Relative error with a unit floor, the convention used by every gradient
// check in the suite.
double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_SUITE("xnn") {

TEST_CASE("eval on hand-checked models") {
    XnnModel constant;
    constant.mu = 2.5;
    CHECK(xnn_eval(constant, {1.0, 2.0}) == 2.5);

    XnnModel linear;
    linear.mu = 1.0;
    linear.gammas = {2.0};
    linear.directions = {{1.0, 1.0}};
    linear.activation = Activation::identity;
    CHECK(xnn_eval(linear, {1.0, 2.0}) == 7.0);

    XnnModel th;
    th.mu = 0.0;
    th.gammas = {1.0};
    th.directions = {{1.0, -1.0}};
    th.activation = Activation::tanh;
    CHECK(xnn_eval(th, {0.5, 0.5}) == 0.0);
}

TEST_CASE("contributions sum with mu to the eval, bit for bit") {
    XnnModel linear;
    linear.mu = 1.0;
    linear.gammas = {2.0};
    linear.directions = {{1.0, 1.0}};
    const auto v = term_contributions_xnn(linear, {1.0, 2.0});
    REQUIRE(v.size() == 1);
    CHECK(v[0] == 6.0);

    XnnModel constant;
    constant.mu = 0.25;
    CHECK(term_contributions_xnn(constant, {1.0}).empty());

    Rng rng(149);
    for (int t = 0; t < 50; ++t) {
        const auto act = static_cast<Activation>(rng() % 4);
        const XnnModel m = random_xnn(rng, 1 + rng() % 4, 3, act);
        std::vector<double> x(3);
        for (auto& xv : x) xv = uniform(rng, -2.0, 2.0);
        double acc = m.mu;
        for (double c : term_contributions_xnn(m, x)) acc += c;
        CHECK(std::bit_cast<std::uint64_t>(acc) ==
              std::bit_cast<std::uint64_t>(xnn_eval(m, x)));
    }
}

TEST_CASE("gradient base cases") {
    XnnModel linear;
    linear.mu = 1.0;
    linear.gammas = {2.0};
    linear.directions = {{1.0, 1.0}};
    const std::vector<double> x{1.0, 2.0};
    const double y = 3.0;
    const auto g = xnn_gradient(linear, x, y);
    const double p = xnn_eval(linear, x);
    CHECK(g.d_mu == 2.0 * (p - y));
    CHECK(g.d_gammas[0] == 2.0 * (p - y) * 3.0);  // identity: w.x = 3
}

TEST_CASE("analytic gradients match central differences") {
    Rng rng(151);
    for (int t = 0; t < 200; ++t) {
        const auto act = static_cast<Activation>(rng() % 4);
        const XnnModel m = random_xnn(rng, 1 + rng() % 3, 2, act);
        std::vector<double> x(2);
        for (auto& xv : x) xv = uniform(rng, -2.0, 2.0);
        const double y = uniform(rng, -2.0, 2.0);
        const auto g = xnn_gradient(m, x, y);

        const std::size_t k = m.n_terms();
        std::vector<double> flat;
        flat.push_back(m.mu);
        for (double v : m.gammas) flat.push_back(v);
        for (const auto& w : m.directions) flat.insert(flat.end(), w.begin(), w.end());

        auto loss = [&](const std::vector<double>& p) {
            XnnModel t2 = m;
            t2.mu = p[0];
            for (std::size_t i = 0; i < k; ++i) t2.gammas[i] = p[1 + i];
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < 2; ++j) t2.directions[i][j] = p[1 + k + 2 * i + j];
            const double r = xnn_eval(t2, x) - y;
            return r * r;
        };
        const auto fd = finite_diff_gradient(loss, flat, 1e-5);
        CHECK(rel_err(g.d_mu, fd[0]) < 1e-5);
        for (std::size_t i = 0; i < k; ++i) CHECK(rel_err(g.d_gammas[i], fd[1 + i]) < 1e-5);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(rel_err(g.d_directions[i][j], fd[1 + k + 2 * i + j]) < 1e-5);
    }
}

TEST_CASE("scaling gamma and mu scales the output") {
    Rng rng(157);
    for (int t = 0; t < 50; ++t) {
        const XnnModel m = random_xnn(rng, 3, 2, Activation::sine);
        const double s = uniform(rng, -3.0, 3.0);
        XnnModel scaled = m;
        scaled.mu *= s;
        for (auto& g : scaled.gammas) g *= s;
        const std::vector<double> x{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        CHECK(std::abs(xnn_eval(scaled, x) - s * xnn_eval(m, x)) < 1e-12);
    }
}

TEST_CASE("validation and errors") {
    XnnModel bad;
    bad.gammas = {1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    XnnModel m;
    m.gammas = {1.0};
    m.directions = {{1.0, 2.0}};
    CHECK_THROWS_AS(xnn_eval(m, {1.0}), std::invalid_argument);
}

TEST_CASE("activation names round-trip") {
    for (auto a : {Activation::identity, Activation::tanh, Activation::sigmoid, Activation::sine})
        CHECK(activation_from_name(activation_name(a)) == a);
    CHECK_THROWS_AS(activation_from_name("relu"), std::invalid_argument);
}

}  // TEST_SUITE
