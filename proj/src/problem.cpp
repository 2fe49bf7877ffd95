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

#include "skewbound/problem.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace skewbound {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what)
{
    fail(ErrorCode::ParseError, where + ": " + what);
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    if (!obj.is_object()) parse_fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) parse_fail(where, "unknown field '" + key + "'");
    }
}

double number(const json& v, const std::string& where)
{
    if (!v.is_number()) parse_fail(where, "expected a number");
    return v.get<double>();
}

cplx complex_entry(const json& v, const std::string& where)
{
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    parse_fail(where, "expected a number or an [re, im] pair");
}

ComplexVector parse_vector(const json& v, const std::string& where)
{
    if (!v.is_array() || v.empty()) parse_fail(where, "expected a nonempty array");
    ComplexVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(complex_entry(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ComplexMatrix parse_matrix(const json& v, const std::string& where)
{
    if (!v.is_array() || v.empty()) parse_fail(where, "expected a nonempty array of rows");
    const std::size_t d = v.size();
    std::vector<cplx> entries;
    entries.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = v[r];
        if (!row.is_array() || row.size() != d) {
            parse_fail(where, "row " + std::to_string(r) + " has " + (row.is_array() ? std::to_string(row.size()) : "no") +
                                  " entries, expected " + std::to_string(d));
        }
        for (std::size_t c = 0; c < d; ++c) {
            entries.push_back(complex_entry(row[c], where + " row " + std::to_string(r) + " col " + std::to_string(c)));
        }
    }
    return ComplexMatrix(d, std::move(entries));
}

MeanOrder parse_order(const json& v, const std::string& where)
{
    try {
        if (v.is_string()) return MeanOrder::parse(v.get<std::string>());
        if (v.is_number()) {
            const double nu = v.get<double>();
            return nu == 0.0 ? MeanOrder::zero() : MeanOrder::finite(nu);
        }
    } catch (const Error& e) {
        parse_fail(where, e.what());
    }
    parse_fail(where, "expected a mean order");
}

std::uint64_t unsigned_integer(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(where, "expected a nonnegative integer");
    return v.get<std::uint64_t>();
}

void parse_tolerances(const json& v, Tolerances& tol)
{
    reject_unknown(v, {"herm", "trace", "psd", "recon", "residual"}, "params.tolerances");
    if (v.contains("herm")) tol.herm = number(v["herm"], "params.tolerances.herm");
    if (v.contains("trace")) tol.trace = number(v["trace"], "params.tolerances.trace");
    if (v.contains("psd")) tol.psd = number(v["psd"], "params.tolerances.psd");
    if (v.contains("recon")) tol.recon = number(v["recon"], "params.tolerances.recon");
    if (v.contains("residual")) tol.residual = number(v["residual"], "params.tolerances.residual");
}

ProblemParams parse_params(const json& v)
{
    ProblemParams p;
    reject_unknown(v, {"s", "nu", "grid_points", "samples", "seed", "tolerances"}, "params");
    if (v.contains("s")) p.s = number(v["s"], "params.s");
    if (v.contains("nu")) {
        const json& nu = v["nu"];
        p.nu.clear();
        if (nu.is_array()) {
            for (std::size_t i = 0; i < nu.size(); ++i) p.nu.push_back(parse_order(nu[i], "params.nu[" + std::to_string(i) + "]"));
        } else {
            p.nu.push_back(parse_order(nu, "params.nu"));
        }
        if (p.nu.empty()) parse_fail("params.nu", "empty list");
    }
    if (v.contains("grid_points")) p.grid_points = unsigned_integer(v["grid_points"], "params.grid_points");
    if (v.contains("samples")) p.samples = unsigned_integer(v["samples"], "params.samples");
    if (v.contains("seed")) p.seed = unsigned_integer(v["seed"], "params.seed");
    if (v.contains("tolerances")) parse_tolerances(v["tolerances"], p.tol);
    return p;
}

DensityOperator parse_rho(const json& v, const Tolerances& tol)
{
    reject_unknown(v, {"matrix", "bloch", "diagonal", "pure"}, "rho");
    if (v.size() != 1) parse_fail("rho", "give exactly one of matrix, bloch, diagonal, pure");
    if (v.contains("matrix")) return DensityOperator::from_matrix(parse_matrix(v["matrix"], "rho.matrix"), tol);
    if (v.contains("pure")) return DensityOperator::pure(parse_vector(v["pure"], "rho.pure"), tol);
    if (v.contains("diagonal")) {
        const json& d = v["diagonal"];
        if (!d.is_array() || d.empty()) parse_fail("rho.diagonal", "expected a nonempty array");
        std::vector<double> diag;
        for (std::size_t i = 0; i < d.size(); ++i) diag.push_back(number(d[i], "rho.diagonal[" + std::to_string(i) + "]"));
        return DensityOperator::from_matrix(ComplexMatrix::diagonal(diag), tol);
    }
    const json& b = v["bloch"];
    if (!b.is_array() || b.size() != 3) parse_fail("rho.bloch", "expected three numbers");
    ComplexMatrix m = ComplexMatrix::identity(2);
    const double x = number(b[0], "rho.bloch[0]"), y = number(b[1], "rho.bloch[1]"), z = number(b[2], "rho.bloch[2]");
    m += ComplexMatrix::from_rows({{z, cplx(x, -y)}, {cplx(x, y), -z}});
    m *= 0.5;
    return DensityOperator::from_matrix(std::move(m), tol);
}

OperatorSet parse_operators(const json& v, const std::string& where)
{
    if (!v.is_object()) parse_fail(where, "expected an object of named matrices");
    OperatorSet ops;
    for (const auto& [name, m] : v.items()) ops.add(parse_matrix(m, where + "." + name), name);
    return ops;
}

std::vector<KrausChannel> parse_channels(const json& v, const Tolerances& tol)
{
    if (!v.is_object()) parse_fail("channels", "expected an object of named Kraus lists");
    std::vector<KrausChannel> out;
    for (const auto& [name, list] : v.items()) {
        if (!list.is_array() || list.empty()) parse_fail("channels." + name, "expected a nonempty list of matrices");
        std::vector<ComplexMatrix> kraus;
        for (std::size_t i = 0; i < list.size(); ++i) {
            kraus.push_back(parse_matrix(list[i], "channels." + name + "[" + std::to_string(i) + "]"));
        }
        out.emplace_back(std::move(kraus), name, tol);
    }
    return out;
}

}  // namespace

void apply_env_tolerance(Tolerances& tol)
{
    const char* env = std::getenv("SKEWBOUND_TOL");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) fail(ErrorCode::ParseError, std::string("SKEWBOUND_TOL: bad value '") + env + "'");
    tol.residual = v;
}

Problem parse_problem(std::string_view text, const std::string& origin)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(origin, e.what());
    }
    reject_unknown(doc, {"version", "description", "rho", "operators", "operators_b", "channels", "params"}, origin);

    Problem p;
    if (!doc.contains("version")) parse_fail(origin, "missing 'version'");
    if (!doc["version"].is_number_integer()) parse_fail("version", "expected an integer");
    p.version = doc["version"].get<int>();
    if (p.version != kProblemVersion) parse_fail("version", "unsupported version " + std::to_string(p.version));
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) parse_fail("description", "expected a string");
        p.description = doc["description"].get<std::string>();
    }
    if (doc.contains("params")) p.params = parse_params(doc["params"]);
    apply_env_tolerance(p.params.tol);
    p.params.tol.validate();

    if (doc.contains("rho")) p.rho = parse_rho(doc["rho"], p.params.tol);
    if (doc.contains("operators")) p.operators = parse_operators(doc["operators"], "operators");
    if (doc.contains("operators_b")) p.operators_b = parse_operators(doc["operators_b"], "operators_b");
    if (doc.contains("channels")) p.channels = parse_channels(doc["channels"], p.params.tol);
    return p;
}

Problem load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str(), path);
}

}  // namespace skewbound
