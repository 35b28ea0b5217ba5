// Copyright 2026 The rqi-anyons Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include "oracles.hpp"
#include "rqi/errors.hpp"
#include "rqi/matrix.hpp"

#include <cmath>
#include <random>
#include <vector>

using rqi::BipartiteDims;
using rqi::Spectrum;
using rqi::SymMatrix;

namespace {

SymMatrix random_symmetric(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m.set(i, j, dist(rng));
        }
    }
    return m;
}

SymMatrix random_psd(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> g(n * n);
    for (double &x : g) {
        x = dist(rng);
    }
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                s += g[i * n + k] * g[j * n + k];
            }
            m.set(i, j, s);
        }
    }
    return m;
}

SymMatrix bell_projector() {
    SymMatrix m(4);
    m.set(0, 0, 0.5);
    m.set(3, 3, 0.5);
    m.set(0, 3, 0.5);
    return m;
}

std::vector<double> as_vector(const Spectrum &s) { return {s.values().begin(), s.values().end()}; }

} // namespace

TEST_CASE("construction validates shape and symmetry") {
    CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 3.0}), rqi::DimensionError);
    CHECK_THROWS_AS(SymMatrix(2, {1.0, 2.0, 2.5, 1.0}), rqi::DimensionError);
    const SymMatrix m(2, {1.0, 2.0, 2.0 + 1e-14, 1.0});
    CHECK(m(1, 0) == m(0, 1));
}

TEST_CASE("kron follows the index formula") {
    SUBCASE("identity") { CHECK(rqi::kron(SymMatrix::identity(2), SymMatrix::identity(2)) == SymMatrix::identity(4)); }
    SUBCASE("swap with diag(1,2)") {
        const SymMatrix x(2, {0.0, 1.0, 1.0, 0.0});
        const double d[] = {1.0, 2.0};
        const SymMatrix k = rqi::kron(x, SymMatrix::diagonal(d));
        REQUIRE(k.dim() == 4);
        CHECK(k(0, 2) == 1.0);
        CHECK(k(1, 3) == 2.0);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(k(i, i) == 0.0);
        }
    }
    SUBCASE("trace is multiplicative") {
        std::mt19937_64 rng(7);
        for (int rep = 0; rep < 10; ++rep) {
            const SymMatrix a = random_symmetric(rng, 3);
            const SymMatrix b = random_symmetric(rng, 3);
            double ta = 0.0, tb = 0.0;
            for (std::size_t i = 0; i < 3; ++i) {
                ta += a(i, i);
                tb += b(i, i);
            }
            CHECK(rqi::trace(rqi::kron(a, b)) == doctest::Approx(ta * tb).epsilon(1e-13));
        }
    }
    SUBCASE("size cap") { CHECK_THROWS_AS(rqi::kron(SymMatrix(70), SymMatrix(70)), rqi::DimensionError); }
}

TEST_CASE("mixed-product property of kron eigenvalues") {
    std::mt19937_64 rng(11);
    for (std::size_t da : {2u, 3u}) {
        for (std::size_t db : {2u, 3u}) {
            const SymMatrix a = random_symmetric(rng, da);
            const SymMatrix b = random_symmetric(rng, db);
            const auto ea = as_vector(rqi::eigvals_sym(a));
            const auto eb = as_vector(rqi::eigvals_sym(b));
            std::vector<double> products;
            for (double x : ea) {
                for (double y : eb) {
                    products.push_back(x * y);
                }
            }
            CHECK(oracle::multiset_close(as_vector(rqi::eigvals_sym(rqi::kron(a, b))), products, 1e-11));
        }
    }
}

TEST_CASE("partial transpose") {
    SUBCASE("diagonal input is invariant") {
        const double d[] = {0.1, 0.2, 0.3, 0.4};
        const SymMatrix m = SymMatrix::diagonal(d);
        CHECK(rqi::partial_transpose_alice(m, {2, 2}) == m);
    }
    SUBCASE("Bell projector") {
        const Spectrum s = rqi::eigvals_sym(rqi::partial_transpose_alice(bell_projector(), {2, 2}));
        CHECK(oracle::multiset_close(as_vector(s), {0.5, 0.5, 0.5, -0.5}, 1e-12));
    }
    SUBCASE("involution, trace and symmetry on a (2,3) split") {
        std::mt19937_64 rng(3);
        const SymMatrix m = random_symmetric(rng, 6);
        const BipartiteDims dims{2, 3};
        const SymMatrix pt = rqi::partial_transpose_alice(m, dims);
        CHECK(rqi::partial_transpose_alice(pt, dims) == m);
        CHECK(rqi::trace(pt) == doctest::Approx(rqi::trace(m)));
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                CHECK(pt(i, j) == pt(j, i));
            }
        }
        // Index rule: entry ((i,k),(j,l)) comes from ((j,k),(i,l)).
        CHECK(pt(0 * 3 + 1, 1 * 3 + 2) == m(1 * 3 + 1, 0 * 3 + 2));
    }
    SUBCASE("dimension mismatch") { CHECK_THROWS_AS(rqi::partial_transpose_alice(SymMatrix(5), {2, 2}), rqi::DimensionError); }
}

TEST_CASE("eigvals_sym against closed forms") {
    SUBCASE("diagonal") {
        const double d[] = {3.0, 1.0, 2.0};
        const Spectrum s = rqi::eigvals_sym(SymMatrix::diagonal(d));
        CHECK(as_vector(s) == std::vector<double>{3.0, 2.0, 1.0});
    }
    SUBCASE("two by two") {
        const Spectrum s = rqi::eigvals_sym(SymMatrix(2, {0.5, 0.25, 0.25, 0.5}));
        CHECK(s.max() == doctest::Approx(0.75).epsilon(1e-15));
        CHECK(s.min() == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("three by three cubic roots") {
        std::mt19937_64 rng(42);
        for (int rep = 0; rep < 50; ++rep) {
            const SymMatrix m = random_symmetric(rng, 3);
            std::array<std::array<double, 3>, 3> raw{};
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    raw[i][j] = m(i, j);
                }
            }
            const auto expected = oracle::eig3(raw);
            const Spectrum s = rqi::eigvals_sym(m);
            for (std::size_t k = 0; k < 3; ++k) {
                CHECK(std::abs(s.values()[k] - expected[k]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("eigen_sym residual and trace contract") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
        CAPTURE(n);
        const SymMatrix m = random_symmetric(rng, n);
        const rqi::EigenDecomposition eig = rqi::eigen_sym(m, {.vectors = true});
        REQUIRE(eig.vectors.size() == n);
        const double scale = std::max(1.0, m.frobenius_norm());
        CHECK(rqi::max_residual(m, eig) <= rqi::kEigenTol * scale);
        double sum = 0.0;
        for (double v : eig.values) {
            sum += v;
        }
        CHECK(std::abs(sum - rqi::trace(m)) <= static_cast<double>(n) * rqi::kEigenTol * scale);
        for (const auto &v : eig.vectors) {
            double norm2 = 0.0;
            for (double x : v) {
                norm2 += x * x;
            }
            CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("non-convergence is reported, never silent") {
    std::mt19937_64 rng(9);
    const SymMatrix m = random_symmetric(rng, 12);
    CHECK_THROWS_AS(rqi::eigen_sym(m, {.tol = 1e-12, .max_sweeps = 1}), rqi::NonConvergenceError);
}

TEST_CASE("entropy kernel") {
    CHECK(rqi::shannon_entropy_b2(Spectrum({1.0, 0.0, 0.0, 0.0})) == 0.0);
    CHECK(rqi::shannon_entropy_b2(Spectrum({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rqi::shannon_entropy_b2(Spectrum({0.25, 0.75})) == doctest::Approx(0.8112781244591329).epsilon(1e-14));
    // Round-off negatives are clamped; real negatives are rejected.
    CHECK(rqi::shannon_entropy_b2(Spectrum({1.0, -1e-12})) == 0.0);
    try {
        (void)rqi::shannon_entropy_b2(Spectrum({1.0, -1e-6}));
        FAIL("expected NotPsdError");
    } catch (const rqi::NotPsdError &e) {
        CHECK(e.min_eigenvalue() == doctest::Approx(-1e-6));
    }
}

TEST_CASE("entropy of a tensor product splits by traces") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const SymMatrix a = random_psd(rng, 2);
        const SymMatrix b = random_psd(rng, 3);
        const double sa = rqi::shannon_entropy_b2(rqi::eigvals_sym(a));
        const double sb = rqi::shannon_entropy_b2(rqi::eigvals_sym(b));
        const double lhs = rqi::shannon_entropy_b2(rqi::eigvals_sym(rqi::kron(a, b)));
        CHECK(lhs == doctest::Approx(rqi::trace(a) * sb + rqi::trace(b) * sa).epsilon(1e-10));
    }
}

TEST_CASE("trace, diagonal part and PSD test") {
    const SymMatrix bell = bell_projector();
    const SymMatrix d = rqi::diagonal_part(bell);
    CHECK(d(0, 0) == 0.5);
    CHECK(d(3, 3) == 0.5);
    CHECK(d(0, 3) == 0.0);
    CHECK(rqi::trace(d) == rqi::trace(bell));
    const double neg[] = {1.0, -0.5};
    CHECK_FALSE(rqi::is_psd(SymMatrix::diagonal(neg), 1e-12));
    CHECK(rqi::is_psd(bell));
    const SymMatrix combo = rqi::linear_combination(2.0, bell, -1.0, d);
    CHECK(combo(0, 3) == 1.0);
    CHECK(combo(0, 0) == 0.5);
}
