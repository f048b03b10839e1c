// Copyright (c) 2026 The txsize developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef TXSIZE_TOOLS_CLI_H
#define TXSIZE_TOOLS_CLI_H

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace txsize::cli {

static constexpr int EXIT_OK{0};
static constexpr int EXIT_USAGE{2};
static constexpr int EXIT_INTERNAL{70};

/** Looks up an environment variable. */
using GetEnv = std::function<std::optional<std::string>(const std::string&)>;

/** The process environment. */
std::optional<std::string> ProcessEnv(const std::string& name);

/**
 * Runs the command line `args` (without the program name). Never throws;
 * every failure is reported on `err` and mapped to an exit code.
 */
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const GetEnv& env = ProcessEnv);

} // namespace txsize::cli

#endif // TXSIZE_TOOLS_CLI_H
