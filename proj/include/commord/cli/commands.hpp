#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace commord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Exit code plus the JSON payload printed on stdout. Exit 0 implies every
/// "ok"-style flag in the payload is true.
struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::json payload;
    std::string diagnostics;
};

CommandResult cmd_decide(std::int64_t k, std::int64_t n);
CommandResult cmd_witness(std::int64_t k, std::int64_t n, const std::optional<std::string>& out_path);
CommandResult cmd_verify(const std::string& path);
/// Same as cmd_verify on already-loaded file contents.
CommandResult cmd_verify_text(const std::string& text);
CommandResult cmd_lemma_pd(std::int64_t n, const std::string& ring_spec);
CommandResult cmd_theorem32(std::int64_t n, const std::string& ring_spec, const std::string& strategy,
                            const std::optional<std::string>& u);
CommandResult cmd_structure_demo(std::int64_t n, std::uint64_t seed, std::size_t samples);

/// Full command line (without the program name). Payload goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace commord::cli
