#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropical::cli {

enum class Verb { kCanon, kFactor, kExpand, kRoots, kEval, kEquiv, kMul, kAdd, kPlot };

enum class OutputFormat { kText, kJson };

struct Command {
  Verb verb = Verb::kCanon;
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::kText;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

std::string_view verb_name(Verb verb);
std::optional<Verb> verb_from_name(std::string_view name);
// Number of positional inputs the verb takes.
std::size_t arity(Verb verb);

// Executes one command. Results go to `out`, diagnostics to `err`.
// Returns kExitOk, kExitDomainError or kExitParseError.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Command-line entry point: parses argv (verbs as subcommands, --json as a
// global flag) and dispatches to run(). Usage errors exit with
// kExitParseError.
int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace tropical::cli
