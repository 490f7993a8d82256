#include "brp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace brp {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                        message
                                  : message),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

/// Splits text into non-empty, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text, bool require_trailing_newline)
{
    if (require_trailing_newline && !text.empty() && text.back() != '\n') {
        throw ParseError("missing trailing newline", 0, 0);
    }
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        ++number;
        pos = end + 1;

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
                ++i;
            }
            if (i >= raw.size()) {
                break;
            }
            if (line.tokens.empty() && raw[i] == '#') {
                break;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
                ++i;
            }
            line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

int to_int(const Token& tok, int line)
{
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("expected an integer, got '" + std::string(tok.text) + "'", line, tok.column);
    }
    return value;
}

Instance parse_bay_lines(const std::vector<Line>& lines, std::size_t first, int width, int n, HeightLimit h_max,
                         int header_line)
{
    if (lines.size() < first + static_cast<std::size_t>(width)) {
        throw ParseError("expected " + std::to_string(width) + " stack lines, found " +
                             std::to_string(lines.size() - first),
                         0, 0);
    }
    if (lines.size() > first + static_cast<std::size_t>(width)) {
        const auto& extra = lines[first + static_cast<std::size_t>(width)];
        throw ParseError("unexpected content after the last stack", extra.number, extra.tokens.front().column);
    }
    std::vector<std::vector<int>> stacks(static_cast<std::size_t>(width));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int s = 0; s < width; ++s) {
        const Line& line = lines[first + static_cast<std::size_t>(s)];
        const int k = to_int(line.tokens[0], line.number);
        if (k < 0) {
            throw ParseError("negative stack height", line.number, line.tokens[0].column);
        }
        if (static_cast<std::size_t>(k) + 1 != line.tokens.size()) {
            throw ParseError("stack height " + std::to_string(k) + " but " + std::to_string(line.tokens.size() - 1) +
                                 " containers listed",
                             line.number, line.tokens[0].column);
        }
        if (!h_max.is_unlimited() && k > h_max.raw()) {
            throw ParseError("stack height " + std::to_string(k) + " exceeds H_max " + std::to_string(h_max.raw()),
                             line.number, line.tokens[0].column);
        }
        auto& stack = stacks[static_cast<std::size_t>(s)];
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            const int c = to_int(line.tokens[i], line.number);
            if (c < 1 || c > n) {
                throw ParseError("unknown container " + std::to_string(c), line.number, line.tokens[i].column);
            }
            if (seen[static_cast<std::size_t>(c)]) {
                throw ParseError("duplicate container " + std::to_string(c), line.number, line.tokens[i].column);
            }
            seen[static_cast<std::size_t>(c)] = true;
            stack.push_back(c);
        }
    }
    for (int c = 1; c <= n; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) {
            throw ParseError("missing container " + std::to_string(c), header_line, 1);
        }
    }
    return Instance::make(Bay(std::move(stacks)), h_max);
}

} // namespace

Instance parse_instance(std::string_view text)
{
    const auto lines = tokenize(text, true);
    if (lines.empty()) {
        throw ParseError("empty instance file", 0, 0);
    }
    const Line& header = lines.front();
    if (header.tokens.size() != 3) {
        throw ParseError("header must be 'W N H_max'", header.number, header.tokens.front().column);
    }
    const int width = to_int(header.tokens[0], header.number);
    const int n = to_int(header.tokens[1], header.number);
    const int h_max = to_int(header.tokens[2], header.number);
    if (width < 1) {
        throw ParseError("W must be at least 1", header.number, header.tokens[0].column);
    }
    if (n < 0) {
        throw ParseError("N must be non-negative", header.number, header.tokens[1].column);
    }
    if (h_max < 0) {
        throw ParseError("H_max must be non-negative", header.number, header.tokens[2].column);
    }
    const HeightLimit limit = h_max == 0 ? HeightLimit::unlimited() : HeightLimit::bounded(h_max);
    return parse_bay_lines(lines, 1, width, n, limit, header.number);
}

std::string write_instance(const Instance& inst)
{
    std::ostringstream out;
    out << inst.width << ' ' << inst.n_containers << ' ' << inst.h_max.raw() << '\n';
    for (const auto& stack : inst.initial_bay.stacks()) {
        out << stack.size();
        for (int c : stack) {
            out << ' ' << c;
        }
        out << '\n';
    }
    return out.str();
}

Instance parse_legacy_instance(std::string_view text, HeightLimit h_max)
{
    const auto lines = tokenize(text, false);
    if (lines.empty()) {
        throw ParseError("empty instance file", 0, 0);
    }
    const Line& header = lines.front();
    if (header.tokens.size() != 2) {
        throw ParseError("header must be 'W N'", header.number, header.tokens.front().column);
    }
    const int width = to_int(header.tokens[0], header.number);
    const int n = to_int(header.tokens[1], header.number);
    if (width < 1 || n < 0) {
        throw ParseError("invalid W or N", header.number, header.tokens[0].column);
    }
    return parse_bay_lines(lines, 1, width, n, h_max, header.number);
}

Solution parse_solution(std::string_view text)
{
    Solution sol;
    for (const auto& line : tokenize(text, false)) {
        const Token& kind = line.tokens[0];
        if (kind.text == "R") {
            if (line.tokens.size() != 3) {
                throw ParseError("relocation needs 'R src dst'", line.number, kind.column);
            }
            sol.moves.push_back(Move::relocate(to_int(line.tokens[1], line.number), to_int(line.tokens[2], line.number)));
        } else if (kind.text == "V") {
            if (line.tokens.size() != 2) {
                throw ParseError("retrieval needs 'V src'", line.number, kind.column);
            }
            sol.moves.push_back(Move::retrieve(to_int(line.tokens[1], line.number)));
        } else {
            throw ParseError("unknown move kind '" + std::string(kind.text) + "'", line.number, kind.column);
        }
    }
    return sol;
}

std::string write_solution(const Solution& sol, std::string_view comment)
{
    std::ostringstream out;
    if (!comment.empty()) {
        out << "# " << comment << '\n';
    }
    for (const Move& m : sol.moves) {
        if (m.is_relocation()) {
            out << "R " << m.src << ' ' << m.dst << '\n';
        } else {
            out << "V " << m.src << '\n';
        }
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace brp
