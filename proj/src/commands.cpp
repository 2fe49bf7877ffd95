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

#include "skewbound/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

#include <json.hpp>

#include "skewbound/equalities.hpp"
#include "skewbound/problem.hpp"
#include "skewbound/qubit.hpp"
#include "skewbound/sweeps.hpp"
#include "skewbound/weakvalue.hpp"

namespace skewbound {

namespace {

using json = nlohmann::ordered_json;

std::string format_double(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string cell_text(const Cell& c, int digits)
{
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) return v;
            else if constexpr (std::is_same_v<T, double>) return format_double(v, digits);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return std::to_string(v);
        },
        c);
}

json cell_json(const Cell& c)
{
    return std::visit([](const auto& v) { return json(v); }, c);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void render_text(const Report& r, std::ostream& out)
{
    std::size_t width = 0;
    for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
    for (const auto& [k, v] : r.fields) out << k << std::string(width - k.size(), ' ') << " = " << cell_text(v, 6) << '\n';
    for (const auto& t : r.tables) {
        std::vector<std::size_t> w(t.columns.size());
        for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
        std::vector<std::vector<std::string>> text;
        for (const auto& row : t.rows) {
            text.emplace_back();
            for (std::size_t c = 0; c < row.size(); ++c) {
                text.back().push_back(cell_text(row[c], 6));
                w[c] = std::max(w[c], text.back().back().size());
            }
        }
        out << "\n[" << t.name << "]\n";
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                out << cells[c];
                if (c + 1 < cells.size()) out << std::string(w[c] - cells[c].size() + 2, ' ');
            }
            out << '\n';
        };
        line(t.columns);
        for (const auto& row : text) line(row);
    }
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

void render_json(const Report& r, std::ostream& out)
{
    json doc;
    doc["command"] = r.command;
    json fields = json::object();
    for (const auto& [k, v] : r.fields) fields[k] = cell_json(v);
    doc["fields"] = fields;
    json tables = json::object();
    for (const auto& t : r.tables) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = cell_json(row[c]);
            rows.push_back(obj);
        }
        tables[t.name] = rows;
    }
    doc["tables"] = tables;
    doc["warnings"] = r.warnings;
    doc["exit_code"] = r.exit_code;
    out << doc.dump(2) << '\n';
}

void render_csv(const Report& r, std::ostream& out)
{
    out << "section,key,value\n";
    for (const auto& [k, v] : r.fields) out << "fields," << csv_escape(k) << ',' << csv_escape(cell_text(v, 17)) << '\n';
    for (const auto& t : r.tables) {
        out << '\n' << "table," << csv_escape(t.name) << '\n';
        for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell_text(row[c], 17));
            out << '\n';
        }
    }
    for (const auto& w : r.warnings) out << "warning," << csv_escape(w) << '\n';
}

const DensityOperator& need_rho(const Problem& p)
{
    if (!p.rho) fail(ErrorCode::ParseError, "problem file has no 'rho'");
    return *p.rho;
}

const OperatorSet& need_ops(const OperatorSet& ops, const char* field)
{
    if (ops.empty()) fail(ErrorCode::ParseError, std::string("problem file has no '") + field + "'");
    return ops;
}

double s_of(const Problem& p, const CommandOptions& opt) { return opt.s.value_or(p.params.s); }
std::size_t grid_of(const Problem& p, const CommandOptions& opt) { return opt.grid.value_or(p.params.grid_points); }
std::uint64_t seed_of(const Problem& p, const CommandOptions& opt) { return opt.seed.value_or(p.params.seed); }
std::size_t oracle_of(const Problem& p, const CommandOptions& opt) { return opt.oracle.value_or(p.params.samples); }

std::vector<MeanOrder> nu_of(const Problem& p, const CommandOptions& opt) { return opt.nu.value_or(p.params.nu); }

std::string skew_label(double s) { return "wyd_skew[s=" + format_double(s, 6) + "]"; }

void add_spectral(Report& r, const SpectralBound& b)
{
    r.add("epsilon0", b.epsilon0);
    r.add("epsilon1", b.epsilon1);
    r.add("epsilonK", b.epsilonK);
    r.add("used_excited", b.used_excited);
    r.add("bound", b.bound);
    r.add("interval_lo", b.interval.lo);
    r.add("interval_hi", b.interval.hi);
    r.add("saturating_state", b.saturating_state.has_value());
    for (const auto& w : b.warnings) r.warnings.push_back(w);
}

// Per-state version of the reported bound, for the sampling oracle.
StateBound state_bound(const OperatorSet& ops, const SpectralBound& b, double s, const Tolerances& tol)
{
    if (s != 0.5) return [&ops, s, tol](const DensityOperator& rho) { return bound_wyd(ops, rho, s, {}, tol).bound; };
    const std::size_t d = ops.dim();
    if (!b.used_excited) {
        const double v = b.bound;
        return [v](const DensityOperator&) { return v; };
    }
    const double e1 = b.epsilon1;
    return [e1, d](const DensityOperator& rho) {
        const double root = rho.trace_power(0.5);
        return e1 * std::max(0.0, 1.0 - root * root / static_cast<double>(d));
    };
}

void run_oracle(Report& r, const OperatorSet& ops, const SpectralBound& b, double s, const Problem& p,
                const CommandOptions& opt)
{
    const std::size_t n = oracle_of(p, opt);
    if (n == 0) return;
    const Tolerances& tol = p.params.tol;
    EmpiricalOptions eo;
    eo.samples = n;
    eo.seed = seed_of(p, opt);
    eo.jobs = opt.jobs;
    const EmpiricalResult res = empirical_minimum(ops, SkewQuantity::wyd(s), eo, state_bound(ops, b, s, tol), tol);
    r.add("oracle_samples", static_cast<std::int64_t>(n));
    r.add("oracle_min", res.minimum);
    r.add("oracle_worst_slack", res.worst_slack);
    if (res.worst_slack < -tol.residual) {
        r.warnings.push_back("oracle sample " + std::to_string(res.worst_index) + " violates the bound");
        r.exit_code = kExitViolation;
    }
}

Report cmd_moments(const Problem& p, const CommandOptions& opt)
{
    const DensityOperator& rho = need_rho(p);
    const OperatorSet& ops = need_ops(p.operators, "operators");
    const Tolerances& tol = p.params.tol;
    const double s = s_of(p, opt);
    const auto orders = nu_of(p, opt);

    Report r;
    r.command = "moments";
    r.add("dim", static_cast<std::int64_t>(rho.dim()));
    r.add("rank", static_cast<std::int64_t>(rho.rank()));
    r.add("purity", rho.purity());
    r.add("s", s);

    Table t{"moments", {"operator", "std_dev", "variance", skew_label(s)}, {}};
    for (const auto& o : orders) t.columns.push_back("gen_skew[nu=" + o.label() + "]");
    double sum_v = 0.0, sum_i = 0.0;
    std::vector<double> sum_g(orders.size(), 0.0);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const double v = variance(ops.op(k), rho, tol);
        const double i = wyd_skew(ops.op(k), rho, s, tol);
        std::vector<Cell> row{ops.label(k), std::sqrt(v), v, i};
        for (std::size_t j = 0; j < orders.size(); ++j) {
            const double g = gen_skew(ops.op(k), rho, orders[j], tol);
            sum_g[j] += g;
            row.emplace_back(g);
        }
        sum_v += v;
        sum_i += i;
        t.rows.push_back(std::move(row));
    }
    std::vector<Cell> total{std::string("sum"), std::string(""), sum_v, sum_i};
    for (double g : sum_g) total.emplace_back(g);
    t.rows.push_back(std::move(total));
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_bound(const Problem& p, const CommandOptions& opt)
{
    const DensityOperator& rho = need_rho(p);
    const OperatorSet& ops = need_ops(p.operators, "operators");
    const Tolerances& tol = p.params.tol;
    const double s = s_of(p, opt);

    Report r;
    r.command = "bound";
    r.add("operators", static_cast<std::int64_t>(ops.size()));
    r.add("dim", static_cast<std::int64_t>(ops.dim()));
    r.add("s", s);
    const SpectralBound b = s == 0.5 ? bound_wy(ops, rho, tol) : bound_wyd(ops, rho, s, {}, tol);
    add_spectral(r, b);
    const double sum = sum_wyd_skew(ops, rho, s, tol);
    r.add("sum_skew", sum);
    if (sum < b.bound - tol.residual) {
        r.warnings.push_back("sum of skew informations falls below the bound");
        r.exit_code = kExitViolation;
    }
    if (s == 0.5) {
        for (const auto& o : nu_of(p, opt)) r.add("sum_gen_skew[nu=" + o.label() + "]", sum_gen_skew(ops, rho, {o}, tol));
    }

    if (opt.alpha_scan) {
        const PureStateBound pb = pure_state_bound(ops, grid_of(p, opt), opt.jobs);
        r.add("grid_points", static_cast<std::int64_t>(grid_of(p, opt)));
        r.add("pure_spectral", pb.spectral);
        r.add("alpha_transposed", pb.alpha_transposed);
        r.add("alpha_symmetric", pb.alpha_symmetric);
        r.add("pure_state_bound", pb.best);
        const std::size_t n = oracle_of(p, opt);
        if (n > 0) {
            EmpiricalOptions eo;
            eo.samples = n;
            eo.seed = seed_of(p, opt);
            eo.jobs = opt.jobs;
            eo.pure_only = true;
            const double best = pb.best;
            const EmpiricalResult res = empirical_minimum(
                ops, SkewQuantity::variances(), eo, [best](const DensityOperator&) { return best; }, tol);
            r.add("oracle_pure_min", res.minimum);
            if (res.worst_slack < -tol.residual) {
                r.warnings.push_back("pure-state oracle falls below the pure-state bound");
                r.exit_code = kExitViolation;
            }
        }
    }
    run_oracle(r, ops, b, s, p, opt);

    Table t{"operators", {"operator", skew_label(s), "variance"}, {}};
    for (std::size_t k = 0; k < ops.size(); ++k) {
        t.rows.push_back({ops.label(k), wyd_skew(ops.op(k), rho, s, tol), variance(ops.op(k), rho, tol)});
    }
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_channel_bound(const Problem& p, const CommandOptions& opt)
{
    const DensityOperator& rho = need_rho(p);
    if (p.channels.empty()) fail(ErrorCode::ParseError, "problem file has no 'channels'");
    const Tolerances& tol = p.params.tol;

    Report r;
    r.command = "channel-bound";
    r.add("channels", static_cast<std::int64_t>(p.channels.size()));
    const SpectralBound b = channel_bound(p.channels, rho, tol);
    add_spectral(r, b);
    Table t{"channels", {"channel", "kraus_operators", "channel_skew"}, {}};
    double sum = 0.0;
    for (const auto& ch : p.channels) {
        const double v = channel_skew(ch, rho, tol);
        sum += v;
        t.rows.push_back({ch.label(), static_cast<std::int64_t>(ch.kraus().size()), v});
    }
    r.add("sum_channel_skew", sum);
    if (sum < b.bound - tol.residual) {
        r.warnings.push_back("sum of channel skew informations falls below the bound");
        r.exit_code = kExitViolation;
    }
    const OperatorSet pooled = pooled_operators(p.channels);
    run_oracle(r, pooled, b, 0.5, p, opt);
    r.tables.push_back(std::move(t));
    return r;
}

Report cmd_witness(const Problem& p, const CommandOptions& opt)
{
    const DensityOperator& rho = need_rho(p);
    const OperatorSet& a = need_ops(p.operators, "operators");
    const OperatorSet& b = need_ops(p.operators_b, "operators_b");
    const WitnessResult w = separability_witness(a, b, rho, grid_of(p, opt), opt.jobs, p.params.tol);
    Report r;
    r.command = "witness";
    r.add("lhs", w.lhs);
    r.add("threshold_a", w.threshold_a);
    r.add("threshold_b", w.threshold_b);
    r.add("threshold", w.threshold);
    r.add("entangled", w.violated);
    return r;
}

Report cmd_weakvalue(const Problem& p, const CommandOptions& opt)
{
    const DensityOperator& rho = need_rho(p);
    const OperatorSet& ops = need_ops(p.operators, "operators");
    const Tolerances& tol = p.params.tol;
    const double s = s_of(p, opt);
    const auto basis = computational_basis(rho.dim());

    Report r;
    r.command = "weakvalue";
    r.add("s", s);
    r.add("basis", std::string("computational"));
    Table t{"reconstruction",
            {"operator", "reconstructed", "direct", "difference", "imag_residual", "undefined_entries",
             "collapse_residual", "conjugate_residual"},
            {}};
    double worst = 0.0;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const Reconstruction rec = reconstruct_skew(ops.op(k), rho, s, basis, false, tol);
        const double direct = wyd_skew(ops.op(k), rho, s, tol);
        const SubsystemReport sub = subsystem_weak_values(ops.op(k), rho, s, basis, tol);
        const double diff = rec.value - direct;
        worst = std::max({worst, std::abs(diff), rec.imag_residual, sub.collapse_residual, sub.conjugate_residual});
        t.rows.push_back({ops.label(k), rec.value, direct, diff, rec.imag_residual,
                          static_cast<std::int64_t>(rec.table.undefined_count()), sub.collapse_residual,
                          sub.conjugate_residual});
    }
    r.add("max_residual", worst);
    r.add("passed", worst <= tol.residual);
    if (worst > tol.residual) r.exit_code = kExitViolation;
    r.tables.push_back(std::move(t));
    return r;
}

// Residuals of the equalities evaluated on the operators and state of a problem file.
SweepResult file_checks(const Problem& p, double s)
{
    SweepResult res;
    res.suite = "file";
    if (!p.rho || p.operators.size() < 1) return res;
    const DensityOperator& rho = *p.rho;
    const OperatorSet& ops = p.operators;
    const Tolerances& tol = p.params.tol;
    auto note = [&](const std::string& name, const std::string& detail, const std::function<double()>& fn) {
        SweepCheck c;
        c.name = name;
        c.worst_detail = detail;
        try {
            c.max_residual = std::abs(fn());
            c.instances = 1;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ZeroDeviation && e.code() != ErrorCode::ZeroSkew &&
                e.code() != ErrorCode::DegenerateDenominator) {
                throw;
            }
            c.skipped = 1;
        }
        res.checks.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            const std::string pair = ops.label(i) + "," + ops.label(j);
            const auto& a = ops.op(i);
            const auto& b = ops.op(j);
            note("sum", pair, [&] { return sum_equality(a, b, rho, tol).residual; });
            note("product", pair, [&] { return product_equality(a, b, rho, tol).residual; });
            note("product_nontrivial", pair, [&] { return product_equality_nontrivial(a, b, rho, tol).residual; });
            note("skew_product", pair, [&] { return skew_product_equality(a, b, rho, s, tol).residual; });
        }
        if (is_hermitian(ops.op(i), tol.herm)) {
            note("weakvalue", ops.label(i), [&] {
                return reconstruct_skew(ops.op(i), rho, s, computational_basis(rho.dim()), false, tol).value -
                       wyd_skew(ops.op(i), rho, s, tol);
            });
        }
    }
    if (rho.dim() == 2) {
        const MeanOrder o = p.params.nu.front();
        note("prop5", "xyz", [&] { return prop5_equality({1, 0, 0}, {0, 1, 0}, {0, 0, 1}, rho, {o, o, o}, tol).residual; });
    }
    return res;
}

Report cmd_verify(const std::optional<Problem>& p, const CommandOptions& opt)
{
    const Tolerances tol = p ? p->params.tol : [] {
        Tolerances t;
        apply_env_tolerance(t);
        return t;
    }();
    const std::uint64_t seed = opt.seed.value_or(p ? p->params.seed : 0);
    const std::string& suite = opt.suite;
    if (suite != "all" && suite != "equalities" && suite != "qubit" && suite != "weakvalue") {
        fail(ErrorCode::ParseError, "unknown suite '" + suite + "'");
    }
    std::vector<SweepResult> results;
    if (suite == "all" || suite == "equalities") results.push_back(sweep_equalities(opt.seeds, seed, tol));
    if (suite == "all" || suite == "qubit") results.push_back(sweep_qubit(opt.seeds, seed, tol));
    if (suite == "all" || suite == "weakvalue") results.push_back(sweep_weakvalue(opt.seeds, seed, tol));
    if (p) results.push_back(file_checks(*p, opt.s.value_or(p->params.s)));

    Report r;
    r.command = "verify";
    r.add("suite", suite);
    r.add("seeds", static_cast<std::int64_t>(opt.seeds));
    r.add("seed", static_cast<std::int64_t>(seed));
    Table t{"checks", {"suite", "check", "instances", "skipped", "max_residual", "worst_instance", "worst_detail"}, {}};
    double worst = 0.0;
    std::string worst_name = "-";
    for (const auto& res : results) {
        for (const auto& c : res.checks) {
            t.rows.push_back({res.suite, c.name, static_cast<std::int64_t>(c.instances),
                              static_cast<std::int64_t>(c.skipped), c.max_residual,
                              static_cast<std::int64_t>(c.worst_instance), c.worst_detail});
            if (c.max_residual >= worst) {
                worst = c.max_residual;
                worst_name = res.suite + "/" + c.name + " (" + c.worst_detail + ")";
            }
        }
    }
    r.add("max_residual", worst);
    r.add("worst_case", worst_name);
    r.add("tolerance", tol.residual);
    const bool ok = worst < tol.residual;
    r.add("passed", ok);
    if (!ok) r.exit_code = kExitViolation;
    r.tables.push_back(std::move(t));
    return r;
}

}  // namespace

Format parse_format(const std::string& text)
{
    if (text == "text") return Format::Text;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    fail(ErrorCode::ParseError, "unknown format '" + text + "'");
}

void render(const Report& report, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Text: render_text(report, out); break;
    case Format::Json: render_json(report, out); break;
    case Format::Csv: render_csv(report, out); break;
    }
}

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"moments", "bound", "channel-bound", "verify", "witness", "weakvalue"};
    return names;
}

int run_command(const std::string& command, const std::optional<std::string>& file, const CommandOptions& opt,
                std::ostream& out, std::ostream& err)
{
    try {
        std::optional<Problem> problem;
        if (file) problem = load_problem(*file);
        if (!problem && command != "verify") fail(ErrorCode::ParseError, command + " needs a problem file");

        Report report;
        if (command == "moments") report = cmd_moments(*problem, opt);
        else if (command == "bound") report = cmd_bound(*problem, opt);
        else if (command == "channel-bound") report = cmd_channel_bound(*problem, opt);
        else if (command == "witness") report = cmd_witness(*problem, opt);
        else if (command == "weakvalue") report = cmd_weakvalue(*problem, opt);
        else if (command == "verify") report = cmd_verify(problem, opt);
        else fail(ErrorCode::ParseError, "unknown command '" + command + "'");

        render(report, opt.format, out);
        return report.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? kExitParse : kExitValidation;
    }
}

}  // namespace skewbound
