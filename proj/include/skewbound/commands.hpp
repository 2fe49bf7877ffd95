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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewbound/moments.hpp"

namespace skewbound {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitViolation = 4;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& text);

struct CommandOptions {
    Format format = Format::Text;
    std::optional<double> s;
    std::optional<std::vector<MeanOrder>> nu;
    bool alpha_scan = false;
    std::optional<std::size_t> grid;
    std::optional<std::size_t> oracle;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
    std::string suite = "all";
    std::size_t seeds = 100;
};

using Cell = std::variant<std::string, double, std::int64_t, bool>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Structured command output; rendered as text, JSON or CSV.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, Cell>> fields;
    std::vector<Table> tables;
    std::vector<std::string> warnings;
    int exit_code = kExitOk;

    void add(std::string key, Cell value) { fields.emplace_back(std::move(key), std::move(value)); }
};

void render(const Report& report, Format format, std::ostream& out);

// Parses the file (when given), runs the command and renders the report.
// Library errors become exit codes: ParseError -> 2, other validation errors -> 3.
int run_command(const std::string& command, const std::optional<std::string>& file, const CommandOptions& opt,
                std::ostream& out, std::ostream& err);

const std::vector<std::string>& command_names();

}  // namespace skewbound
