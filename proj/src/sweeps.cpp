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

#include "skewbound/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "skewbound/equalities.hpp"
#include "skewbound/qubit.hpp"
#include "skewbound/weakvalue.hpp"

namespace skewbound {

namespace {

class Recorder {
public:
    explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

    void record(const std::string& name, double residual, std::size_t instance, const std::string& detail)
    {
        SweepCheck& c = slot(name);
        ++c.instances;
        const double r = std::abs(residual);
        if (r > c.max_residual || c.instances == 1) {
            c.max_residual = r;
            c.worst_instance = instance;
            c.worst_detail = detail;
        }
    }

    // Runs fn; precondition failures count as skipped.
    void attempt(const std::string& name, std::size_t instance, const std::string& detail,
                 const std::function<double()>& fn)
    {
        try {
            record(name, fn(), instance, detail);
        } catch (const Error& e) {
            const ErrorCode code = e.code();
            if (code == ErrorCode::ZeroDeviation || code == ErrorCode::ZeroSkew ||
                code == ErrorCode::DegenerateDenominator) {
                ++slot(name).skipped;
                return;
            }
            throw;
        }
    }

    SweepResult take() { return std::move(result_); }

private:
    SweepCheck& slot(const std::string& name)
    {
        auto it = std::find_if(result_.checks.begin(), result_.checks.end(),
                               [&](const SweepCheck& c) { return c.name == name; });
        if (it != result_.checks.end()) return *it;
        SweepCheck c;
        c.name = name;
        result_.checks.push_back(std::move(c));
        return result_.checks.back();
    }

    SweepResult result_;
};

constexpr double kSValues[3] = {0.25, 0.5, 0.75};

std::string describe(std::size_t d, std::size_t rank, double s)
{
    std::ostringstream os;
    os << "dim=" << d << " rank=" << rank << " s=" << s;
    return os.str();
}

MeanOrder order_from(Rng& rng)
{
    switch (rng.below(5)) {
    case 0: return MeanOrder::zero();
    case 1: return MeanOrder::finite(-1.0);
    case 2: return MeanOrder::finite(-2.0);
    case 3: return MeanOrder::minus_infinity();
    default: return MeanOrder::finite(-0.5);
    }
}

Direction random_unit(Rng& rng)
{
    Direction v{rng.normal(), rng.normal(), rng.normal()};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& x : v) x /= n;
    return v;
}

std::array<Direction, 3> random_triple(Rng& rng)
{
    const Direction a = random_unit(rng);
    Direction b = random_unit(rng);
    const double p = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for (int i = 0; i < 3; ++i) b[i] -= p * a[i];
    const double nb = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    for (double& x : b) x /= nb;
    const Direction c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    return {a, b, c};
}

}  // namespace

double SweepResult::max_residual() const noexcept
{
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.max_residual);
    return m;
}

SweepResult sweep_equalities(std::size_t instances, std::uint64_t seed, const Tolerances& tol)
{
    Recorder rec("equalities");
    for (std::size_t i = 0; i < instances; ++i) {
        Rng rng = Rng::stream(seed, i);
        const std::size_t d = 2 + rng.below(4);
        const std::size_t rank = 1 + rng.below(d);
        const double s = kSValues[i % 3];
        const DensityOperator rho = random_density(d, rank, rng);
        const ComplexMatrix a = random_matrix(d, rng), b = random_matrix(d, rng);
        const ComplexMatrix x1 = random_hermitian(d, rng), x2 = random_hermitian(d, rng), x3 = random_hermitian(d, rng);
        const std::string detail = describe(d, rank, s);

        rec.attempt("sum", i, detail, [&] { return sum_equality(a, b, rho, tol).residual; });
        rec.attempt("product", i, detail, [&] { return product_equality(a, b, rho, tol).residual; });
        rec.attempt("product_nontrivial", i, detail, [&] { return product_equality_nontrivial(a, b, rho, tol).residual; });
        rec.attempt("three_sum", i, detail, [&] { return three_observable_sum_equality(x1, x2, x3, rho, tol).residual; });
        rec.attempt("three_product", i, detail,
                    [&] { return three_observable_product_equality(x1, x2, x3, rho, tol).residual; });
        rec.attempt("skew_product", i, detail, [&] { return skew_product_equality(a, b, rho, s, tol).residual; });
        rec.attempt("skew_trace_identity", i, detail,
                    [&] { return skew_product_equality(a, b, rho, s, tol).secondary_residual; });
    }
    return rec.take();
}

SweepResult sweep_qubit(std::size_t instances, std::uint64_t seed, const Tolerances& tol)
{
    Recorder rec("qubit");
    for (std::size_t i = 0; i < instances; ++i) {
        Rng rng = Rng::stream(seed, i);
        const std::size_t rank = 1 + rng.below(2);
        const DensityOperator rho = random_density(2, rank, rng);
        const auto n = random_triple(rng);
        const std::array<MeanOrder, 3> orders{order_from(rng), order_from(rng), order_from(rng)};
        const ComplexMatrix sigma = random_matrix(2, rng);
        std::ostringstream os;
        os << "rank=" << rank << " orders=" << orders[0].label() << "," << orders[1].label() << "," << orders[2].label();
        const std::string detail = os.str();

        rec.attempt("prop5", i, detail, [&] { return prop5_equality(n[0], n[1], n[2], rho, orders, tol).residual; });
        rec.attempt("prop6_one_skew", i, detail, [&] {
            return prop6_equalities(n[0], n[1], n[2], rho, {orders[0], orders[1]}, tol).one_skew.residual;
        });
        rec.attempt("prop6_two_skew", i, detail, [&] {
            return prop6_equalities(n[0], n[1], n[2], rho, {orders[0], orders[1]}, tol).two_skew.residual;
        });
        rec.attempt("variance_gamma_identity", i, detail, [&] {
            return prop6_equalities(n[0], n[1], n[2], rho, {orders[0], orders[1]}, tol).variance_identity_residual;
        });
        rec.attempt("purity_decomposition", i, detail, [&] {
            return prop6_equalities(n[0], n[1], n[2], rho, {orders[0], orders[1]}, tol).purity_residual;
        });
        rec.attempt("fisher_variance", i, detail, [&] { return fisher_variance_residual(n[0], rho, tol); });
        rec.attempt("closed_form", i, detail, [&] {
            return qubit_gen_skew_closed(sigma, rho, orders[0], tol) - gen_skew(sigma, rho, orders[0], tol);
        });
        rec.attempt("eigenvector_independence", i, detail, [&] {
            return variance(sigma, DensityOperator::pure(rho.eigenvector(0)), tol) -
                   variance(sigma, DensityOperator::pure(rho.eigenvector(1)), tol);
        });
    }
    return rec.take();
}

SweepResult sweep_weakvalue(std::size_t instances, std::uint64_t seed, const Tolerances& tol)
{
    Recorder rec("weakvalue");
    for (std::size_t i = 0; i < instances; ++i) {
        Rng rng = Rng::stream(seed, i);
        const std::size_t d = 2 + rng.below(3);
        const double s = i % 4 == 3 ? 0.05 + 0.9 * rng.uniform() : kSValues[i % 3];
        const DensityOperator rho = random_density(d, d, rng);
        const ComplexMatrix a = random_hermitian(d, rng);
        const auto basis = columns_of(random_unitary(d, rng));
        const std::string detail = describe(d, d, s);

        const Reconstruction r = reconstruct_skew(a, rho, s, basis, false, tol);
        rec.record("reconstruction", r.value - wyd_skew(a, rho, s, tol), i, detail);
        rec.record("imaginary_part", r.imag_residual, i, detail);
        const SubsystemReport sub = subsystem_weak_values(a, rho, s, basis, tol);
        rec.record("collapse", sub.collapse_residual, i, detail);
        rec.record("conjugate", sub.conjugate_residual, i, detail);
    }
    return rec.take();
}

}  // namespace skewbound
