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

#include "skewbound/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "skewbound/kernels.hpp"

namespace skewbound {

namespace {

void require_ops(const OperatorSet& ops, std::size_t dim)
{
    if (ops.empty()) fail(ErrorCode::DomainError, "operator set is empty");
    if (ops.dim() != dim) {
        fail(ErrorCode::DimensionMismatch,
             "operators act on dim " + std::to_string(ops.dim()) + ", state has dim " + std::to_string(dim));
    }
}

// out += c * M
void accumulate(ComplexMatrix& out, cplx c, const ComplexMatrix& m)
{
    kernels::active().axpy(m.entries().size(), c, m.data(), out.data());
}

// Orthonormal basis of the symmetric subspace of C^d (x) C^d, as (index pairs, weights).
struct SymBasis {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

SymBasis sym_basis(std::size_t d)
{
    SymBasis b;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) b.pairs.emplace_back(i, j);
    return b;
}

double ground_symmetric(const ComplexMatrix& m, std::size_t d)
{
    const SymBasis b = sym_basis(d);
    const std::size_t n = b.pairs.size();
    auto component = [&](std::size_t p) {
        // Returns up to two (index, weight) entries of basis vector p.
        const auto [i, j] = b.pairs[p];
        std::array<std::pair<std::size_t, double>, 2> c{};
        if (i == j) {
            c[0] = {i * d + i, 1.0};
            c[1] = {0, 0.0};
        } else {
            c[0] = {i * d + j, M_SQRT1_2};
            c[1] = {j * d + i, M_SQRT1_2};
        }
        return c;
    };
    ComplexMatrix small(n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto cp = component(p);
        for (std::size_t q = 0; q < n; ++q) {
            const auto cq = component(q);
            cplx s = 0.0;
            for (const auto& [ip, wp] : cp)
                for (const auto& [iq, wq] : cq)
                    if (wp != 0.0 && wq != 0.0) s += wp * wq * m(ip, iq);
            small(p, q) = s;
        }
    }
    return hermitian_eigenvalues(small).front();
}

double ground(const ComplexMatrix& m, ScanVariant variant, std::size_t d)
{
    if (variant == ScanVariant::Symmetric) return ground_symmetric(m, d);
    return hermitian_eigenvalues(m).front();
}

// sum over parts of (a^2 (x) I + I (x) a^2)/2 - a (x) a; its expectation on |psi>|psi> is the variance sum.
ComplexMatrix variance_form(const std::vector<ComplexMatrix>& parts)
{
    const std::size_t d = parts.front().dim();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix out(d * d);
    for (const auto& a : parts) {
        const ComplexMatrix a2 = a * a;
        accumulate(out, 0.5, kron(a2, id));
        accumulate(out, 0.5, kron(id, a2));
        accumulate(out, -1.0, kron(a, a));
    }
    return out;
}

double projected_weight(const HtotSpectrum& sp, std::span<const cplx> phi)
{
    double w = 0.0;
    for (std::size_t k = 0; k < sp.ground_multiplicity; ++k) w += std::norm(inner(sp.vectors.column(k), phi));
    return std::min(w, 1.0);
}

Interval goodness_interval(const HtotSpectrum& sp, const DensityOperator& rho)
{
    const EmbeddingVectors e = embedding(rho, 0.5);
    const double w = projected_weight(sp, e.phi_s);
    Interval iv;
    iv.lo = sp.eps0;
    iv.hi = std::max(iv.lo, sp.epsK - (sp.epsK - sp.eps0) * w);
    return iv;
}

SpectralBound spectral_skeleton(const HtotSpectrum& sp, const DensityOperator& rho)
{
    SpectralBound b;
    b.epsilon0 = sp.eps0;
    b.epsilon1 = sp.eps1;
    b.epsilonK = sp.epsK;
    b.interval = goodness_interval(sp, rho);
    return b;
}

const char* kCommonEigenstate =
    "CommonEigenstate: the zero level of H_tot is degenerate (operators share an invariant subspace); bound is 0";

}  // namespace

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min<std::size_t>(jobs == 0 ? 1 : jobs, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(n);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

EmbeddingVectors embedding(const DensityOperator& rho, double s)
{
    if (!(s > 0.0 && s < 1.0)) fail(ErrorCode::DomainError, "embedding exponent must lie in (0, 1)");
    const std::size_t d = rho.dim();
    EmbeddingVectors e;
    e.phi_s.assign(d * d, 0.0);
    e.phi_1ms.assign(d * d, 0.0);
    const auto& lam = rho.eigenvalues();
    for (std::size_t i = 0; i < d; ++i) {
        if (lam[i] <= 0.0) continue;
        const ComplexVector v = rho.eigenvector(i);
        const ComplexVector vv = kron(v, conj(v));
        const double ws = std::pow(lam[i], s), w1 = std::pow(lam[i], 1.0 - s);
        kernels::active().axpy(vv.size(), ws, vv.data(), e.phi_s.data());
        kernels::active().axpy(vv.size(), w1, vv.data(), e.phi_1ms.data());
        e.norm_s += ws * ws;
        e.norm_1ms += w1 * w1;
    }
    return e;
}

ComplexMatrix h_op(const ComplexMatrix& a, const Tolerances& tol)
{
    if (!is_hermitian(a, tol.herm)) fail(ErrorCode::NotHermitian, "H_A requires a Hermitian operator");
    const ComplexMatrix id = ComplexMatrix::identity(a.dim());
    return M_SQRT1_2 * (kron(a, id) - kron(id, conj_transpose_basis(a)));
}

ComplexMatrix h_tot(const OperatorSet& ops)
{
    if (ops.empty()) fail(ErrorCode::DomainError, "operator set is empty");
    const std::size_t d = ops.dim();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    ComplexMatrix out(d * d);
    // H_a^2 = (a^2 (x) I + I (x) (a^2)^T - 2 a (x) a^T) / 2
    for (const auto& a : ops.hermitian_parts()) {
        if (max_abs(a) == 0.0) continue;
        const ComplexMatrix a2 = a * a;
        accumulate(out, 0.5, kron(a2, id));
        accumulate(out, 0.5, kron(id, a2.transpose()));
        accumulate(out, -1.0, kron(a, a.transpose()));
    }
    return out;
}

HtotSpectrum spectrum(const ComplexMatrix& htot)
{
    HtotSpectrum sp;
    EigenSystem es = hermitian_eigen(htot);
    sp.values = std::move(es.values);
    sp.vectors = std::move(es.vectors);
    sp.epsK = std::max(0.0, sp.values.back());
    sp.tol_eig = 1e-8 * std::max(1.0, sp.epsK);
    if (sp.values.front() < -sp.tol_eig) fail(ErrorCode::InvalidState, "H_tot is not positive semidefinite");
    sp.eps0 = std::max(0.0, sp.values.front());
    sp.eps1 = sp.eps0;
    for (double v : sp.values) {
        if (v <= sp.values.front() + sp.tol_eig) {
            ++sp.ground_multiplicity;
        } else {
            sp.eps1 = v;
            sp.has_excited = true;
            break;
        }
    }
    return sp;
}

double sum_wyd_skew(const OperatorSet& ops, const DensityOperator& rho, double s, const Tolerances& tol)
{
    require_ops(ops, rho.dim());
    double t = 0.0;
    for (const auto& a : ops.operators()) t += wyd_skew(a, rho, s, tol);
    return t;
}

double sum_gen_skew(const OperatorSet& ops, const DensityOperator& rho, const std::vector<MeanOrder>& orders,
                    const Tolerances& tol)
{
    require_ops(ops, rho.dim());
    if (orders.size() != 1 && orders.size() != ops.size()) {
        fail(ErrorCode::DimensionMismatch, "need one mean order, or one per operator");
    }
    double t = 0.0;
    for (std::size_t k = 0; k < ops.size(); ++k) t += gen_skew(ops.op(k), rho, orders[orders.size() == 1 ? 0 : k], tol);
    return t;
}

double sum_variance(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol)
{
    require_ops(ops, rho.dim());
    double t = 0.0;
    for (const auto& a : ops.operators()) t += variance(a, rho, tol);
    return t;
}

SpectralBound bound_wy(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol)
{
    (void)tol;
    require_ops(ops, rho.dim());
    const std::size_t d = rho.dim();
    const HtotSpectrum sp = spectrum(h_tot(ops));
    SpectralBound b = spectral_skeleton(sp, rho);

    if (!sp.ground_is_zero()) {
        b.bound = sp.eps0;
    } else if (sp.ground_multiplicity > 1 || !sp.has_excited) {
        b.bound = 0.0;
        b.warnings.emplace_back(kCommonEigenstate);
    } else {
        const double root = rho.trace_power(0.5);
        b.bound = sp.eps1 * std::max(0.0, 1.0 - root * root / static_cast<double>(d));
        b.used_excited = true;
    }

    if (sp.ground_multiplicity == 1) {
        const ComplexVector g = sp.vectors.column(0);
        const auto sc = schmidt_coefficients(g, d, d);
        if (sc.front() < 1.0 - 1e-8) {
            ComplexMatrix red = partial_trace_second(ComplexMatrix::outer(g, g), {d, d});
            red = 0.5 * (red + red.adjoint());
            red *= cplx(1.0 / red.trace().real());
            b.saturating_state = DensityOperator::from_matrix(std::move(red));
        }
    }
    return b;
}

SpectralBound bound_wyd(const OperatorSet& ops, const DensityOperator& rho, double s,
                        const std::vector<ComplexVector>& extra_chi, const Tolerances& tol)
{
    (void)tol;
    require_ops(ops, rho.dim());
    if (!(s > 0.0 && s < 1.0) || s == 0.5) fail(ErrorCode::DomainError, "bound_wyd needs s in (0, 1), s != 1/2");
    const std::size_t d = rho.dim();
    const ComplexMatrix h = h_tot(ops);
    const HtotSpectrum sp = spectrum(h);
    SpectralBound b = spectral_skeleton(sp, rho);

    if (sp.ground_is_zero() && (sp.ground_multiplicity > 1 || !sp.has_excited)) {
        b.warnings.emplace_back(kCommonEigenstate);
        return b;
    }

    const EmbeddingVectors e = embedding(rho, s);
    const double theta = std::sqrt(e.norm_s * e.norm_1ms);
    const ComplexVector us = normalized(e.phi_s);
    const ComplexVector u1 = normalized(e.phi_1ms);
    const ComplexVector hs_raw = h * e.phi_s;
    const ComplexVector h1_raw = h * e.phi_1ms;
    const bool have_hs = norm(hs_raw) > 0.0, have_h1 = norm(h1_raw) > 0.0;
    if (!have_hs || !have_h1) {
        // H_tot annihilates an embedding vector, so the sum itself is 0.
        b.warnings.emplace_back("NoFeasibleChi: H_tot annihilates the embedding; bound is 0");
        return b;
    }
    const ComplexVector hs = normalized(hs_raw);
    const ComplexVector h1 = normalized(h1_raw);

    std::vector<ComplexVector> chis{us, u1, h1, hs};
    ComplexVector omega(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) omega[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
    chis.push_back(omega);
    for (const auto& c : extra_chi) {
        if (c.size() != d * d) fail(ErrorCode::DimensionMismatch, "chi candidate must live on the doubled space");
        chis.push_back(normalized(c));
    }

    auto tau = [](cplx overlap) {
        const double o2 = std::norm(overlap);
        return std::sqrt(std::max(0.0, 1.0 / o2 - 1.0));
    };
    auto excited_factor = [&](double q) {
        const double t = rho.trace_power(q);
        const double t2 = rho.trace_power(2.0 * q);
        return std::sqrt(std::max(0.0, 1.0 - t * t / (static_cast<double>(d) * t2)));
    };

    bool feasible = false;
    double best = 0.0;
    for (const auto& chi : chis) {
        for (int branch = 0; branch < 2; ++branch) {
            const cplx o1 = inner(chi, branch == 0 ? us : u1);
            const cplx o2 = inner(chi, branch == 0 ? h1 : hs);
            if (std::abs(o1) < 1e-14 || std::abs(o2) < 1e-14) continue;
            const double t1 = tau(o1), t2 = tau(o2);
            if (t1 * t2 >= 1.0) continue;
            feasible = true;
            const double f = (1.0 - t1 * t2) / ((1.0 + t1 * t1) * (1.0 + t2 * t2));
            double val = 0.0;
            if (!sp.ground_is_zero()) {
                val = f * theta * sp.eps0;
            } else {
                const double q = branch == 0 ? 1.0 - s : s;
                val = f * excited_factor(q) * theta * sp.eps1;
            }
            best = std::max(best, val);
        }
    }
    if (!feasible) {
        b.warnings.emplace_back("NoFeasibleChi: every overlap candidate is infeasible; bound is 0");
        return b;
    }
    b.bound = best;
    b.used_excited = sp.ground_is_zero();
    return b;
}

SpectralBound bound_genskew(const OperatorSet& ops, const DensityOperator& rho, const std::vector<MeanOrder>& orders,
                            const Tolerances& tol)
{
    if (orders.size() != 1 && orders.size() != ops.size()) {
        fail(ErrorCode::DimensionMismatch, "need one mean order, or one per operator");
    }
    return bound_wy(ops, rho, tol);
}

AlphaScanResult tighten_alpha_scan(const OperatorSet& ops, std::size_t grid_points, ScanVariant variant, unsigned jobs)
{
    if (ops.empty()) fail(ErrorCode::DomainError, "operator set is empty");
    if (grid_points < 2) fail(ErrorCode::DomainError, "alpha grid needs at least 2 points");
    const std::size_t d = ops.dim();
    const std::vector<ComplexMatrix> parts = ops.hermitian_parts();
    const ComplexMatrix base = variant == ScanVariant::Transposed ? h_tot(ops) : variance_form(parts);

    AlphaScanResult r;
    r.floor = std::max(0.0, ground(base, variant, d));

    std::vector<std::pair<double, double>> ranges(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto w = hermitian_eigenvalues(parts[p]);
        ranges[p] = {w.front(), w.back()};
    }

    const ComplexMatrix id = ComplexMatrix::identity(d);
    std::vector<double> grid_values(parts.size() * grid_points);
    parallel_for(grid_values.size(), jobs, [&](std::size_t task) {
        const std::size_t p = task / grid_points, g = task % grid_points;
        const auto [lo, hi] = ranges[p];
        const double alpha = lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid_points - 1);
        const ComplexMatrix shifted = parts[p] - alpha * id;
        ComplexMatrix m = base;
        accumulate(m, 1.0, kron(shifted, variant == ScanVariant::Transposed ? shifted.transpose() : shifted));
        grid_values[task] = ground(m, variant, d);
    });

    r.per_part.resize(parts.size());
    r.best_alpha.resize(parts.size());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < parts.size(); ++p) {
        double mn = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t g = 0; g < grid_points; ++g) {
            if (grid_values[p * grid_points + g] < mn) {
                mn = grid_values[p * grid_points + g];
                arg = g;
            }
        }
        const auto [lo, hi] = ranges[p];
        r.per_part[p] = mn;
        r.best_alpha[p] = lo + (hi - lo) * static_cast<double>(arg) / static_cast<double>(grid_points - 1);
        best = std::max(best, mn);
    }
    r.value = std::max(best, r.floor);
    return r;
}

PureStateBound pure_state_bound(const OperatorSet& ops, std::size_t grid_points, unsigned jobs)
{
    if (ops.empty()) fail(ErrorCode::DomainError, "operator set is empty");
    const HtotSpectrum sp = spectrum(h_tot(ops));
    PureStateBound b;
    if (!sp.ground_is_zero()) {
        b.spectral = sp.eps0;
    } else if (sp.ground_multiplicity == 1 && sp.has_excited) {
        b.spectral = sp.eps1 * (1.0 - 1.0 / static_cast<double>(ops.dim()));
    }
    b.alpha_transposed = tighten_alpha_scan(ops, grid_points, ScanVariant::Transposed, jobs).value;
    b.alpha_symmetric = tighten_alpha_scan(ops, grid_points, ScanVariant::Symmetric, jobs).value;
    b.best = std::max({b.spectral, b.alpha_transposed, b.alpha_symmetric});
    return b;
}

DensityOperator excited_saturating_state(const OperatorSet& ops, double ground_weight)
{
    if (!(ground_weight > 0.0 && ground_weight < 1.0)) fail(ErrorCode::DomainError, "ground weight must lie in (0, 1)");
    const std::size_t d = ops.dim();
    const HtotSpectrum sp = spectrum(h_tot(ops));
    if (!sp.ground_is_zero() || sp.ground_multiplicity != 1 || !sp.has_excited) {
        fail(ErrorCode::DomainError, "saturating family needs a nondegenerate zero ground level");
    }
    auto reshape = [d](std::span<const cplx> v) { return ComplexMatrix(d, std::vector<cplx>(v.begin(), v.end())); };

    ComplexMatrix x0 = reshape(sp.vectors.column(0));
    const cplx tr0 = x0.trace();
    if (std::abs(tr0) < 1e-12) fail(ErrorCode::DomainError, "ground vector is not proportional to the identity");
    x0 *= std::conj(tr0) / std::abs(tr0);

    const ComplexMatrix x1 = reshape(sp.vectors.column(sp.ground_multiplicity));
    ComplexMatrix h1 = 0.5 * (x1 + x1.adjoint());
    if (std::sqrt(frobenius_inner(h1, h1).real()) < 1e-6) h1 = cplx(0.0, -0.5) * (x1 - x1.adjoint());
    h1 *= cplx(1.0 / std::sqrt(frobenius_inner(h1, h1).real()));

    const ComplexMatrix x = ground_weight * x0 + std::sqrt(1.0 - ground_weight * ground_weight) * h1;
    if (hermitian_eigenvalues(x).front() < 0.0) fail(ErrorCode::DomainError, "ground weight too small for a PSD root");
    ComplexMatrix rho = x * x;
    rho = 0.5 * (rho + rho.adjoint());
    rho *= cplx(1.0 / rho.trace().real());
    return DensityOperator::from_matrix(std::move(rho));
}

double SkewQuantity::evaluate(const OperatorSet& ops, const DensityOperator& rho, const Tolerances& tol) const
{
    switch (kind) {
    case Kind::WignerYanaseDyson: return sum_wyd_skew(ops, rho, s, tol);
    case Kind::Generalized: return sum_gen_skew(ops, rho, orders, tol);
    case Kind::Variance: return sum_variance(ops, rho, tol);
    }
    return 0.0;
}

DensityOperator oracle_state(std::size_t dim, const EmpiricalOptions& opt, std::size_t index)
{
    Rng rng = Rng::stream(opt.seed, index);
    const std::size_t rank = opt.pure_only ? 1 : 1 + static_cast<std::size_t>(rng.below(dim));
    return random_density(dim, rank, rng);
}

EmpiricalResult empirical_minimum(const OperatorSet& ops, const SkewQuantity& quantity, const EmpiricalOptions& opt,
                                  const StateBound& bound, const Tolerances& tol)
{
    if (opt.samples == 0) fail(ErrorCode::DomainError, "need at least one sample");
    if (ops.empty()) fail(ErrorCode::DomainError, "operator set is empty");
    const std::size_t d = ops.dim();
    std::vector<double> values(opt.samples), slack(opt.samples, 0.0);
    parallel_for(opt.samples, opt.jobs, [&](std::size_t i) {
        const DensityOperator rho = oracle_state(d, opt, i);
        values[i] = quantity.evaluate(ops, rho, tol);
        if (bound) slack[i] = values[i] - bound(rho);
    });
    EmpiricalResult r;
    r.minimum = values[0];
    r.worst_slack = slack[0];
    for (std::size_t i = 1; i < opt.samples; ++i) {
        if (values[i] < r.minimum) {
            r.minimum = values[i];
            r.argmin = i;
        }
        if (slack[i] < r.worst_slack) {
            r.worst_slack = slack[i];
            r.worst_index = i;
        }
    }
    return r;
}

WitnessResult separability_witness(const OperatorSet& ops_a, const OperatorSet& ops_b, const DensityOperator& rho_ab,
                                   std::size_t grid_points, unsigned jobs, const Tolerances& tol)
{
    if (ops_a.empty() || ops_a.size() != ops_b.size()) {
        fail(ErrorCode::DimensionMismatch, "witness needs equally many nonempty operators on each side");
    }
    const std::size_t da = ops_a.dim(), db = ops_b.dim();
    if (da * db != rho_ab.dim()) fail(ErrorCode::DimensionMismatch, "state dimension is not dA * dB");
    const ComplexMatrix ia = ComplexMatrix::identity(da), ib = ComplexMatrix::identity(db);
    WitnessResult w;
    for (std::size_t k = 0; k < ops_a.size(); ++k) {
        w.lhs += variance(kron(ops_a.op(k), ib) + kron(ia, ops_b.op(k)), rho_ab, tol);
    }
    w.threshold_a = pure_state_bound(ops_a, grid_points, jobs).best;
    w.threshold_b = pure_state_bound(ops_b, grid_points, jobs).best;
    w.threshold = w.threshold_a + w.threshold_b;
    w.violated = w.lhs < w.threshold - tol.residual;
    return w;
}

}  // namespace skewbound
