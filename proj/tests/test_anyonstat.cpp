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
#include "rqi/anyonstat.hpp"
#include "rqi/errors.hpp"

#include <cfloat>
#include <cmath>
#include <random>

TEST_CASE("endpoint statistics") {
    CHECK(rqi::wu_omega(2.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rqi::wu_omega(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rqi::wu_occupation({1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rqi::wu_occupation({2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : {1.01, 1.5, 3.0, 10.0, 1e3}) {
        CAPTURE(x);
        CHECK(std::abs(rqi::wu_occupation({x, 0.0}) - 1.0 / (x - 1.0)) <= 1e-12 * std::max(1.0, 1.0 / (x - 1.0)));
        CHECK(std::abs(rqi::wu_occupation({x, 1.0}) - 1.0 / (x + 1.0)) <= 1e-12);
    }
}

TEST_CASE("semion quadratic") {
    CHECK(rqi::wu_omega(2.0, 0.5) == doctest::Approx(1.5615528128088303).epsilon(1e-15));
    CHECK(rqi::wu_occupation({2.0, 0.5}) == doctest::Approx(0.48507125007266595).epsilon(1e-15));
    for (double x : {0.01, 0.3, 1.0, 7.0, 250.0}) {
        CAPTURE(x);
        CHECK(std::abs(rqi::wu_omega(x, 0.5) - oracle::wu_half(x)) <= 1e-12 * std::max(1.0, oracle::wu_half(x)));
    }
}

TEST_CASE("continuity near the bosonic end") {
    CHECK(std::abs(rqi::wu_omega(2.0, 1e-9) - 1.0) <= 1e-6);
}

TEST_CASE("energy parametrisation") {
    const rqi::WuQuery q = rqi::WuQuery::from_energy(1.0, 1.0, 0.5, 1.0);
    CHECK(q.x == 1.0);
    CHECK_THROWS_AS(rqi::WuQuery::from_energy(1.0, 0.0, 0.0, 1.0), rqi::DomainError);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(rqi::wu_omega(1.0, 0.0), rqi::DomainError);
    CHECK_THROWS_AS(rqi::wu_omega(0.5, 0.0), rqi::DomainError);
    CHECK_THROWS_AS(rqi::wu_omega(-1.0, 0.5), rqi::DomainError);
    CHECK_THROWS_AS(rqi::wu_omega(2.0, 1.5), rqi::DomainError);
    // The root x^(1/alpha) is far below the smallest normal double.
    CHECK_THROWS_AS(rqi::wu_omega(1e-2, 1e-3), rqi::DomainError);
}

TEST_CASE("residual contract on random draws") {
    std::mt19937_64 rng(1000);
    std::uniform_real_distribution<double> log_x(std::log(1e-2), std::log(1e2));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int solved = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = std::exp(log_x(rng));
        const double alpha = unit(rng);
        CAPTURE(x);
        CAPTURE(alpha);
        // Below x = 1 the root behaves like x^(1/alpha) and can leave the
        // normal range of a double; those draws must be refused.
        const bool representable = !(x < 1.0 && std::log(x) / alpha < std::log(DBL_MIN));
        if (!representable) {
            CHECK_THROWS_AS(rqi::wu_omega(x, alpha), rqi::DomainError);
            continue;
        }
        const double w = rqi::wu_omega(x, alpha);
        CHECK(w > 0.0);
        CHECK(std::abs(rqi::wu_residual(w, x, alpha)) <= rqi::kWuTol * x);
        ++solved;
    }
    CHECK(solved >= 990);
}
