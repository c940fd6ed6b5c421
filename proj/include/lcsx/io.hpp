#ifndef LCSX_IO_HPP
#define LCSX_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcsx/approx.hpp"
#include "lcsx/seq.hpp"

namespace lcsx {

struct parse_error : std::runtime_error {
    std::size_t line;
    parse_error(const std::string& what, std::size_t line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class token_format { tokens, u32 };

const char* format_name(token_format f);
token_format format_from_name(const std::string& name);  // throws std::invalid_argument

/// tokens format: whitespace-separated UTF-8 fields.
/// Throws io_error if the file cannot be read.
std::vector<std::string> read_tokens_file(const std::string& path);

/// u32 format: one unsigned 32-bit integer per line; blank lines allowed.
/// Throws io_error / parse_error (with line number).
std::vector<std::uint32_t> read_u32_file(const std::string& path);

void write_tokens_file(const std::string& path, const std::vector<std::string>& tokens);
void write_u32_file(const std::string& path, const std::vector<std::uint32_t>& values);

/// Loads, parses and interns a file pair.
struct loaded_pair {
    sequence x;
    sequence y;
    std::vector<std::string> vocabulary;  // original tokens, indexed by symbol id
};
loaded_pair load_pair(const std::string& path_x, const std::string& path_y, token_format fmt);

/// FNV-1a 64-bit digest of a file's raw bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

/// One run's machine-readable record. Serialized with fixed field names so
/// any third party can re-validate the witness against the raw inputs.
struct run_record {
    std::string file_x, file_y;
    std::string digest_x, digest_y;
    std::string algorithm;  // "v1" | "better" | "exact"
    std::string alds;       // "exact" | "triggered" | "" for oracle runs
    std::size_t n = 0;
    std::size_t len_x = 0, len_y = 0;
    std::size_t output_len = 0;
    std::optional<std::size_t> exact_len;
    std::optional<double> ratio;  // exact_len / output_len, present iff exact known and output >= 1
    double bound_4n45 = 0;
    double bound_n34log = 0;
    double wall_ms = 0;
    std::vector<pass_trace> passes;
    subsequence_witness witness;
    std::vector<std::string> witness_tokens;  // vocabulary-mapped symbols
};

std::string run_record_to_json(const run_record& rec);
void write_run_record(const std::string& path, const run_record& rec);  // "-" = stdout

}  // namespace lcsx

#endif
