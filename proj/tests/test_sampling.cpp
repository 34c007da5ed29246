#include <cmath>

#include <doctest.h>

#include "discordlab/bipartite_state.hpp"
#include "discordlab/hermitian_eig.hpp"
#include "discordlab/rng.hpp"
#include "discordlab/sampling.hpp"
#include "support/test_helpers.hpp"

using namespace discordlab;
using namespace discordlab::testing;

TEST_CASE("sample_state: bit-identical for identical (seed, index), order-free") {
    const SamplerConfig cfg{.dim_a = 2, .dim_b = 3, .seed = 4};
    const BipartiteState a = sample_state(cfg, 17);
    const BipartiteState b = sample_state(cfg, 17);
    CHECK(a.rho() == b.rho());

    // Substreams do not depend on what was drawn before.
    const BipartiteState later = sample_state(cfg, 3);
    const BipartiteState again = sample_state(cfg, 17);
    CHECK(later.rho() == sample_state(cfg, 3).rho());
    CHECK(again.rho() == a.rho());

    CHECK_FALSE(sample_state(cfg, 18).rho() == a.rho());
    CHECK_FALSE(sample_state({.dim_a = 2, .dim_b = 3, .seed = 5}, 17).rho() == a.rho());
}

TEST_CASE("sample_state: ensemble mean approaches the maximally mixed state") {
    const SamplerConfig cfg{.dim_a = 2, .dim_b = 2, .seed = 12};
    ComplexMatrix mean(4, 4);
    const std::size_t count = 10000;
    for (std::uint64_t i = 0; i < count; ++i) mean += sample_state(cfg, i).rho();
    mean *= 1.0 / static_cast<double>(count);
    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= 0.25;
    CHECK(max_abs_diff(mean, mixed) <= 0.02);
}

TEST_CASE("sample_state: k = 1 gives pure states") {
    const SamplerConfig cfg{.dim_a = 2, .dim_b = 3, .ginibre_k = 1, .seed = 6};
    for (std::uint64_t i = 0; i < 20; ++i) {
        const BipartiteState s = sample_state(cfg, i);
        const ComplexMatrix sq = s.rho() * s.rho();
        REQUIRE(std::abs(sq.trace() - cdouble(1.0)) <= 1e-10);
    }
}

TEST_CASE("sample_state: validation margins stay far inside the tolerances") {
    const SamplerConfig cfg{.dim_a = 3, .dim_b = 3, .seed = 8};
    for (std::uint64_t i = 0; i < 50; ++i) {
        const BipartiteState s = sample_state(cfg, i);
        REQUIRE(hermiticity_defect(s.rho()) <= 1e-12);
        REQUIRE(std::abs(s.rho().trace() - cdouble(1.0)) <= 1e-12);
        REQUIRE(hermitian_eig(s.rho()).eigenvalues.back() >= -1e-12);
    }
}

TEST_CASE("gaussian_pair: moments over a million draws, determinism") {
    RandomStream rs(123);
    const std::size_t pairs = 500000;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto [a, b] = rs.gaussian_pair();
        sum += a + b;
        sum_sq += a * a + b * b;
    }
    const double count = 2.0 * static_cast<double>(pairs);
    const double mean = sum / count;
    const double var = sum_sq / count - mean * mean;
    CHECK(std::abs(mean) <= 0.01);
    CHECK(std::abs(var - 1.0) <= 0.01);

    RandomStream r1(9), r2(9);
    for (int i = 0; i < 100; ++i) {
        CHECK(r1.gaussian_pair() == r2.gaussian_pair());
    }
}

TEST_CASE("substream_seed: distinct keys for neighbouring inputs") {
    CHECK(substream_seed(1, 0) != substream_seed(1, 1));
    CHECK(substream_seed(1, 0) != substream_seed(2, 0));
    CHECK(substream_seed(0, 1) != substream_seed(1, 0));
}
