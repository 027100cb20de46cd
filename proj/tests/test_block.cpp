#include "qridge/block.hpp"
#include "qridge/random.hpp"
#include "qridge/ridge.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace qridge;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool bitwise_equal(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i].real()) != std::bit_cast<std::uint64_t>(b[i].real()))
            return false;
        if (std::bit_cast<std::uint64_t>(a[i].imag()) != std::bit_cast<std::uint64_t>(b[i].imag()))
            return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("block") {

TEST_CASE("complete_unitary maps e_0 to the identity") {
    const CMatrix v = complete_unitary({1.0, 0.0});
    CHECK(std::abs(v.at(0, 0) - cdouble(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(v.at(0, 1)) < 1e-15);
    CHECK(std::abs(v.at(1, 0)) < 1e-15);
    CHECK(std::abs(v.at(1, 1) - cdouble(1.0, 0.0)) < 1e-15);
}

TEST_CASE("complete_unitary embeds hand-checked rows") {
    const CMatrix v = complete_unitary({kInvSqrt2, kInvSqrt2});
    CHECK(std::abs(v.at(0, 0) - cdouble(kInvSqrt2, 0.0)) < 1e-12);
    CHECK(std::abs(v.at(0, 1) - cdouble(kInvSqrt2, 0.0)) < 1e-12);
    CHECK(unitarity_defect(v) < 1e-10);

    const CMatrix w = complete_unitary({0.0, 1.0});
    CHECK(std::abs(w.at(0, 0)) < 1e-12);
    CHECK(std::abs(w.at(0, 1) - cdouble(1.0, 0.0)) < 1e-12);
    CHECK(unitarity_defect(w) < 1e-10);
}

TEST_CASE("complete_unitary rejects non-unit rows") {
    CHECK_THROWS_AS(complete_unitary({1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("row embedding sweep over random unit rows") {
    Rng rng(61);
    for (std::size_t dim : {2, 4, 8, 16}) {
        for (int t = 0; t < 250; ++t) {
            const CVec row = random_unit_row(rng, dim);
            const CMatrix v = complete_unitary(row);
            for (std::size_t j = 0; j < dim; ++j) CHECK(std::abs(v.at(0, j) - row[j]) < 1e-12);
            CHECK(unitarity_defect(v) < 1e-10);
        }
    }
}

TEST_CASE("build_block_diagonal completes every row") {
    BlockRidgeModel m;
    m.dimension = 2;
    m.rows = {{cdouble(1.0, 0.0), cdouble(0.0, 0.0)}};
    const auto blocks = build_block_diagonal(m);
    REQUIRE(blocks.size() == 1);
    CHECK(std::abs(blocks[0].at(0, 0) - cdouble(1.0, 0.0)) < 1e-15);

    BlockRidgeModel mh;
    mh.dimension = 2;
    mh.rows = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
    const auto hb = build_block_diagonal(mh);
    REQUIRE(hb.size() == 2);
    CHECK(std::abs(hb[0].at(0, 1) - cdouble(kInvSqrt2, 0.0)) < 1e-12);
    CHECK(std::abs(hb[1].at(0, 1) - cdouble(-kInvSqrt2, 0.0)) < 1e-12);

    Rng rng(67);
    BlockRidgeModel mr;
    mr.dimension = 4;
    for (int k = 0; k < 4; ++k) mr.rows.push_back(random_unit_row(rng, 4));
    const auto rb = build_block_diagonal(mr);
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(rb[k].at(0, j) - mr.rows[k][j]) < 1e-12);
}

TEST_CASE("replicate_input stacks and renormalizes") {
    const StackedState s = replicate_input(build_state({1.0, 0.0}), 2);
    CHECK(std::abs(s.amplitudes[0].real() - kInvSqrt2) < 1e-15);
    CHECK(s.amplitudes[1] == cdouble(0.0, 0.0));
    CHECK(std::abs(s.amplitudes[2].real() - kInvSqrt2) < 1e-15);

    const StateVector x = build_state({1.0, 1.0});
    const StackedState one = replicate_input(x, 1);
    CHECK(one.amplitudes == x.amplitudes);

    Rng rng(71);
    const StackedState four = replicate_input(random_state(rng, 2), 4);
    CHECK(std::abs(vec_norm(four.amplitudes) - 1.0) < 1e-12);

    CHECK_THROWS_AS(replicate_input(x, 0), std::invalid_argument);
}

TEST_CASE("apply_block_model on the standard-basis model") {
    BlockRidgeModel m;
    m.dimension = 2;
    m.rows = {{cdouble(1.0, 0.0), cdouble(0.0, 0.0)}, {cdouble(0.0, 0.0), cdouble(1.0, 0.0)}};
    const StateVector x = build_state({0.6, 0.8});
    const StackedState psi = apply_block_model(m, x);
    // Leading element of each block is <w_k|x> / sqrt(K).
    CHECK(std::abs(psi.amplitudes[0] - cdouble(0.6 * kInvSqrt2, 0.0)) < 1e-12);
    CHECK(std::abs(psi.amplitudes[2] - cdouble(0.8 * kInvSqrt2, 0.0)) < 1e-12);
    CHECK(std::abs(vec_norm(psi.amplitudes) - 1.0) < 1e-12);
}

TEST_CASE("apply_block_model preserves the norm") {
    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        const std::size_t dim = std::size_t{1} << (1 + rng() % 3);
        const std::size_t k = 1 + rng() % dim;
        const BlockRidgeModel m = random_block_model(rng, dim, k);
        const StackedState psi =
            apply_block_model(m, random_state(rng, std::countr_zero(dim)));
        CHECK(std::abs(vec_norm(psi.amplitudes) - 1.0) < 1e-12);
    }
}

TEST_CASE("apply_block_model agrees with the dense direct sum") {
    Rng rng(79);
    for (int t = 0; t < 20; ++t) {
        const std::size_t dim = std::size_t{1} << (1 + rng() % 3);
        const std::size_t k = 1 + rng() % std::min<std::size_t>(dim, 64 / dim);
        const BlockRidgeModel m = random_block_model(rng, dim, k);
        const StateVector x = random_state(rng, std::countr_zero(dim));
        const CMatrix dense = materialize_block_diagonal(build_block_diagonal(m));
        const CVec want = matvec(dense, replicate_input(x, k).amplitudes);
        const StackedState got = apply_block_model(m, x);
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(std::abs(want[i] - got.amplitudes[i]) < 1e-13);
    }
}

TEST_CASE("materialize_block_diagonal is capped") {
    Rng rng(83);
    const BlockRidgeModel m = random_block_model(rng, 16, 8);  // 128 > 64
    CHECK_THROWS_AS(materialize_block_diagonal(build_block_diagonal(m)), std::invalid_argument);
}

TEST_CASE("mod_selector_output on hand-checked cases") {
    BlockRidgeModel eye;
    eye.dimension = 4;
    for (std::size_t k = 0; k < 4; ++k) {
        CVec row(4, 0.0);
        row[k] = 1.0;
        eye.rows.push_back(row);
    }
    Rng rng(89);
    const StateVector x = random_state(rng, 2);
    CHECK(std::abs(mod_selector_output(apply_block_model(eye, x)) - 1.0) < 1e-12);

    BlockRidgeModel half;
    half.dimension = 2;
    half.rows = {{kInvSqrt2, kInvSqrt2}};
    CHECK(std::abs(mod_selector_output(apply_block_model(half, build_state({1.0, 0.0}))) - 0.5) <
          1e-12);

    BlockRidgeModel hadamard_rows;
    hadamard_rows.dimension = 2;
    hadamard_rows.rows = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
    CHECK(std::abs(block_output(hadamard_rows, build_state({1.0, 0.0})) - 1.0) < 1e-12);

    StackedState bad;
    bad.amplitudes = CVec(3, 0.5);
    bad.block_size = 2;
    CHECK_THROWS_AS(mod_selector_output(bad), std::invalid_argument);
}

TEST_CASE("block output matches the ridge decomposition") {
    Rng rng(97);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const ParamCircuit c = random_circuit(rng, n, 2);
        const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
        const CMatrix w = circuit_unitary(c, theta);
        const auto sel = random_selector(rng, std::size_t{1} << n);
        const auto d = extract_rows(w, sel);

        BlockRidgeModel m;
        m.dimension = w.rows;
        for (const auto& term : d.terms) m.rows.push_back(term.direction);

        const StateVector x = random_state(rng, n);
        CHECK(std::abs(block_output(m, x) - ridge_eval(d, x)) < 1e-12);
    }
}

TEST_CASE("block output matches the direct measurement through first-half rows") {
    Rng rng(101);
    const ParamCircuit c = random_circuit(rng, 3, 2);
    const auto theta = random_theta(rng, static_cast<std::size_t>(c.n_params));
    const auto sel = first_qubit_zero_selector(3);
    const StateVector x = random_state(rng, 3);

    BlockRidgeModel m;
    m.dimension = 8;
    const auto d = extract_rows(circuit_unitary(c, theta), sel);
    for (const auto& term : d.terms) m.rows.push_back(term.direction);

    const auto rep = verify_equivalence(c, theta, sel, x, 1e-10);
    CHECK(std::abs(block_output(m, x) - rep.direct) < 1e-10);
}

TEST_CASE("block_row_from_params matches the circuit route") {
    Rng rng(103);
    for (int t = 0; t < 20; ++t) {
        const std::size_t dim = std::size_t{1} << (1 + rng() % 3);
        const std::size_t n = std::countr_zero(dim);
        const auto params = random_theta(rng, 2 * n);

        ParamCircuit chain;
        chain.n_qubits = static_cast<int>(n);
        chain.n_params = static_cast<int>(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            chain.gates.push_back({GateKind::RY, {static_cast<int>(q)}, static_cast<int>(2 * q)});
            chain.gates.push_back({GateKind::RZ, {static_cast<int>(q)}, static_cast<int>(2 * q + 1)});
        }
        const CVec want = circuit_unitary(chain, params).row(0);
        const CVec got = block_row_from_params(params, dim);
        for (std::size_t i = 0; i < dim; ++i) CHECK(std::abs(want[i] - got[i]) < 1e-14);
    }
}

TEST_CASE("perturb_block with zero delta is a bitwise no-op") {
    Rng rng(107);
    const BlockRidgeModel m = random_block_model(rng, 4, 3);
    const std::vector<double> zero(m.block_params[1].size(), 0.0);
    const BlockRidgeModel p = perturb_block(m, 1, zero);
    for (std::size_t k = 0; k < m.n_blocks(); ++k) CHECK(bitwise_equal(m.rows[k], p.rows[k]));
}

TEST_CASE("perturb_block touches exactly one row") {
    Rng rng(109);
    const BlockRidgeModel m = random_block_model(rng, 8, 4);
    std::vector<double> delta(m.block_params[0].size(), 0.0);
    delta[0] = 0.1;
    const BlockRidgeModel p = perturb_block(m, 0, delta);
    CHECK(!bitwise_equal(m.rows[0], p.rows[0]));
    for (std::size_t k = 1; k < m.n_blocks(); ++k) CHECK(bitwise_equal(m.rows[k], p.rows[k]));

    const StateVector x = random_state(rng, 3);
    const auto before = block_term_contributions(m, x);
    const auto after = block_term_contributions(p, x);
    CHECK(before[0] != after[0]);
    for (std::size_t k = 1; k < before.size(); ++k)
        CHECK(std::bit_cast<std::uint64_t>(before[k]) == std::bit_cast<std::uint64_t>(after[k]));
}

TEST_CASE("perturb_block validates") {
    BlockRidgeModel m;
    m.dimension = 2;
    m.rows = {{cdouble(1.0, 0.0), cdouble(0.0, 0.0)}};
    CHECK_THROWS_AS(perturb_block(m, 0, {0.1, 0.1}), std::invalid_argument);  // unparameterized

    Rng rng(113);
    const BlockRidgeModel pm = random_block_model(rng, 4, 2);
    CHECK_THROWS_AS(perturb_block(pm, 5, {0.0, 0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(perturb_block(pm, 0, {0.0}), std::invalid_argument);
}

TEST_CASE("model validation enforces the row invariants") {
    BlockRidgeModel m;
    m.dimension = 2;
    m.rows = {{cdouble(1.0, 0.0), cdouble(0.0, 0.0)},
              {cdouble(0.0, 0.0), cdouble(1.0, 0.0)},
              {cdouble(1.0, 0.0), cdouble(0.0, 0.0)}};
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);  // K > N

    BlockRidgeModel bad;
    bad.dimension = 2;
    bad.rows = {{cdouble(1.0, 0.0), cdouble(1.0, 0.0)}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);  // not unit norm
}

}  // TEST_SUITE
