/*
   Copyright 2026 The Cyclonomy Authors

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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cyclonomy::cli {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

struct ErrorInfo {
    std::string code;
    std::string message;
};

/// Outcome of one invocation. Exactly one of data / error is set, and
/// exit_code == 0 iff ok.
struct CommandResult {
    std::string command;
    bool ok = false;
    nlohmann::json data;
    std::optional<ErrorInfo> error;
    int exit_code = kExitOk;
    bool pretty = false;
    /// Plain-text help requested with --help; printed instead of JSON.
    std::optional<std::string> help;

    nlohmann::json to_json() const;
    std::string render() const;
};

/// Runs the command line (without the program name). `default_cache` is
/// used for --cache when the flag is absent (main passes CYCLONOMY_CACHE).
CommandResult run(const std::vector<std::string>& args, const std::optional<std::string>& default_cache = {});

} // namespace cyclonomy::cli
