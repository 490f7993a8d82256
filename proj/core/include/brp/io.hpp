#pragma once

#include "brp/model.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace brp {

/// Malformed instance or solution text. `line` and `column` are 1-based; 0 means
/// the problem concerns the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Canonical instance file:
///
///     W N H_max            (H_max = 0 means unlimited)
///     k c1 c2 ... ck       (one line per stack, containers bottom-to-top)
///
/// Whitespace-separated decimal integers, `#` comment lines, trailing newline required.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

/// Reader for third-party files laid out as a `W N` header followed by one
/// `k c1 ... ck` line per stack, containers bottom-to-top and numbered 1..N.
/// Such files carry no height bound, so it is supplied by the caller.
Instance parse_legacy_instance(std::string_view text, HeightLimit h_max);

/// Solution file: one move per line, `R src dst` for a relocation or `V src`
/// for a retrieval, 1-based stacks, `#` comment lines.
Solution parse_solution(std::string_view text);
std::string write_solution(const Solution& sol, std::string_view comment = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace brp
