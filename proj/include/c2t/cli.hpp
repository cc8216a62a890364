/**
 * Commands behind the c2t executable.  Each command builds an OutputDocument
 * whose JSON form is canonical; csv, markdown and latex are views of the same
 * payload laid out as tables.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */
#ifndef C2T_CLI_HPP
#define C2T_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace c2t::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad arguments; maps to exit code 2.
class UsageError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

enum class Format
{
    Json,
    Csv,
    Markdown,
    Latex,
};

Format parse_format(const std::string& text); // throws UsageError
const char* to_string(Format f);

struct Cell
{
    std::string text;
    std::string latex; // math-mode body; empty means use text
};

struct Table
{
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

using ordered_json = nlohmann::ordered_json;

struct OutputDocument
{
    std::string artifact_version = kArtifactVersion;
    std::string command;   // canonical echo, e.g. "c2t compute --d 3 --i 4"
    ordered_json parameters;
    ordered_json payload;
    int exit_code = kExitOk; // not serialized

    bool operator==(const OutputDocument& o) const
    {
        return artifact_version == o.artifact_version && command == o.command && parameters == o.parameters &&
               payload == o.payload;
    }
};

void to_json(ordered_json& j, const OutputDocument& doc);
void from_json(const ordered_json& j, OutputDocument& doc);

/// Tables derived from the payload of any command's document.
std::vector<Table> tables(const OutputDocument& doc);

void render(std::ostream& out, const OutputDocument& doc, Format format);
std::string render(const OutputDocument& doc, Format format);

/// "F2^t + F2[S2]^r" in LaTeX.
std::string latex_decomposition(std::uint64_t trivial, std::uint64_t regular);

/// Largest dmax accepted by `check` without --allow-large, and with it.
inline constexpr int kCheckDefaultCap = 9;
inline constexpr int kCheckHardCap = 10;

struct CheckOptions
{
    int dmax = kCheckDefaultCap;
    bool allow_large = false;
    unsigned jobs = 0; // 0: hardware concurrency
    std::ostream* log = nullptr; // per-check timing lines
};

OutputDocument cmd_compute(int d, int i, Format format);
OutputDocument cmd_table(int d, bool reduced, Format format);
OutputDocument cmd_ss(int d, const std::string& page, std::optional<int> pmax, Format format);
OutputDocument cmd_check(const CheckOptions& options, Format format);
OutputDocument cmd_poincare(int d, Format format);

} // namespace c2t::cli

#endif
