// Copyright 2026 The skewbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewbound/channels.hpp"

using namespace skewbound;

TEST_CASE("completeness is enforced")
{
    CHECK_THROWS_AS(KrausChannel({0.5 * ComplexMatrix::identity(2)}), Error);
    try {
        KrausChannel({0.5 * ComplexMatrix::identity(2)});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompleteChannel);
    }
    CHECK_THROWS_AS(KrausChannel::phase_damping(1.5), Error);
    CHECK_THROWS_AS(KrausChannel::amplitude_damping(-0.1), Error);
    CHECK_NOTHROW(KrausChannel::phase_damping(0.0));
}

TEST_CASE("Lueders completion")
{
    ComplexMatrix p0(3);
    p0(0, 0) = 1.0;
    const auto ch = KrausChannel::luders({p0});
    CHECK(ch.kraus().size() == 2);
    const auto rho = random_density(3, 3, 5);
    const ComplexMatrix out = ch.apply(rho.matrix());
    CHECK(std::abs(out.trace() - 1.0) < 1e-12);
    CHECK(std::abs(out(0, 1)) < 1e-12);
}

TEST_CASE("channel skew information")
{
    const KrausChannel id({ComplexMatrix::identity(2)});
    const auto plus = DensityOperator::pure(ComplexVector{std::sqrt(0.5), std::sqrt(0.5)});
    CHECK(channel_skew(id, plus) == doctest::Approx(0.0));
    CHECK(channel_skew(KrausChannel::phase_damping(0.5), plus) > 1e-3);
    for (double p : {0.1, 0.5, 0.9}) {
        CHECK(std::abs(channel_skew(KrausChannel::phase_damping(p), DensityOperator::maximally_mixed(2))) < 1e-12);
        CHECK(std::abs(channel_skew(KrausChannel::amplitude_damping(p), DensityOperator::maximally_mixed(2))) < 1e-12);
    }
}

TEST_CASE("pooled channel bounds")
{
    for (double p : {0.1, 0.5, 0.9}) {
        const std::vector<KrausChannel> chs{KrausChannel::phase_damping(p), KrausChannel::amplitude_damping(p)};
        const auto rho = random_density(2, 2, static_cast<std::uint64_t>(p * 100));
        const auto b = channel_bound(chs, rho);
        CHECK(b.epsilon0 < 1e-8);
        CHECK(std::abs(b.epsilon1 - p) < 1e-8);
        const double tr = rho.trace_power(0.5);
        CHECK(b.bound == doctest::Approx(p * (1.0 - tr * tr / 2.0)));
        CHECK(b.bound <= channel_skew(chs[0], rho) + channel_skew(chs[1], rho) + 1e-10);
    }
    const auto b0 = channel_bound({KrausChannel::phase_damping(0.0), KrausChannel::amplitude_damping(0.0)},
                                  random_density(2, 2, 1));
    CHECK(b0.bound == doctest::Approx(0.0));
    const auto bid = channel_bound({KrausChannel({ComplexMatrix::identity(2)})}, random_density(2, 2, 3));
    CHECK(bid.epsilon0 < 1e-8);
    CHECK(bid.bound == 0.0);
}

TEST_CASE("pooled operators")
{
    const std::vector<KrausChannel> chs{KrausChannel::phase_damping(0.3)};
    const auto pooled = pooled_operators(chs);
    CHECK(pooled.size() == chs[0].kraus().size());
    CHECK(pooled.label(0) == "phase_damping[1]");
    const auto rho = random_density(2, 2, 9);
    const auto a = channel_bound(chs, rho);
    const auto b = bound_wy(OperatorSet(chs[0].kraus()), rho);
    CHECK(a.bound == b.bound);
    CHECK(a.epsilon1 == b.epsilon1);

    ComplexMatrix p0(3);
    p0(0, 0) = 1.0;
    CHECK_THROWS_AS(pooled_operators({KrausChannel::phase_damping(0.3), KrausChannel::luders({p0})}), Error);
}
