#pragma once

// Command implementations behind the psl2sub executable. Each command returns
// its JSON (or DOT) payload; run_cli does argument parsing and maps errors to
// exit codes.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psl2/diagram.hpp"

namespace psl2::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int input = 3;
inline constexpr int invariant = 4;
} // namespace exit_code

enum class CountKind { pointed, classes };
enum class Relation { included, conjugate, isomorphic, normal };
enum class Depth { quick, full };

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheEnvVar = "PSL2SUB_CACHE_DIR";

/// On-disk coefficient cache: one versioned JSON file per (kind, family).
/// Unreadable or inconsistent files are reported and ignored.
class CoefficientCache {
public:
    explicit CoefficientCache(std::filesystem::path dir);
    // From the environment variable; nullopt when unset or empty.
    static std::optional<CoefficientCache> from_env();

    std::filesystem::path file_for(CountKind kind, bool general) const;
    // Coefficients 1..max as decimal strings, if a valid entry covers max.
    std::optional<std::vector<std::string>> load(CountKind kind, bool general, std::size_t max, std::ostream& diag) const;
    void store(CountKind kind, bool general, const std::vector<std::string>& coefficients, std::ostream& diag) const;

private:
    std::filesystem::path dir_;
};

std::vector<std::string> count_coefficients(CountKind kind, std::size_t max, bool general);

std::string cmd_count(CountKind kind, std::size_t max, bool general, const CoefficientCache* cache, std::ostream& diag);
std::string cmd_census(std::size_t size, bool list, bool normal_only, bool general);
std::string cmd_decide(Relation relation, const std::vector<ParsedDiagram>& inputs);
std::string cmd_export_dot(const Diagram& d);
// Prints one PASS/FAIL line per check; returns an exit code.
int cmd_selftest(Depth depth, std::ostream& out, std::ostream& diag);

ParsedDiagram read_diagram_file(const std::filesystem::path& path);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace psl2::cli
