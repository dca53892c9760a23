/*
   Copyright 2026 The spheredeg authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPHEREDEG_CLI_HPP
#define SPHEREDEG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

namespace spheredeg::cli {

struct Config {
    std::string f_expr;
    std::string g_expr;

    enum class MethodChoice { automatic, theorem2, numeric };
    MethodChoice method = MethodChoice::automatic;

    std::optional<double> radius;       // contour radius override
    bool check_common_zeros = true;
    bool oracle = false;                // also run the area-integral cross-check
    int oracle_grid = 400;

    enum class OutputFormat { text, json };
    OutputFormat output = OutputFormat::text;

    // winding overrides
    std::optional<int> samples;
    std::optional<int> max_depth;
    std::optional<double> min_modulus;
};

/// Runs the degree pipeline for a parsed configuration. Returns the process
/// exit code: 0 on success, 1 on expression parse errors, 2 on hypothesis
/// failures (common zero suspected, no limit at infinity, dominance failure
/// without a fallback radius, loop failures).
///
/// An inconclusive common-zero certification does not abort the run: the
/// degree is still computed and reported with a warning, but the exit code
/// is 2 because the hypothesis is uncertified.
int run(const Config& config, std::ostream& out, std::ostream& err);

/// Flag parsing + run. Returns the exit code (1 on usage errors).
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spheredeg::cli

#endif  // SPHEREDEG_CLI_HPP
