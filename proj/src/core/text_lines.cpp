#include "tetravex/text_lines.hpp"

#include <charconv>
#include <string>

#include "tetravex/error.hpp"

namespace tvx {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

LineReader::LineReader(std::string_view text, bool skip_blank_and_comments)
    : text_(text), skip_(skip_blank_and_comments) {}

std::optional<TextLine> LineReader::next() {
  while (pos_ < text_.size()) {
    const std::size_t end = text_.find('\n', pos_);
    const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
    std::string_view raw = text_.substr(pos_, stop - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    ++line_;

    TextLine line{line_, split(raw)};
    if (skip_ && (line.tokens.empty() || line.tokens.front().front() == 'c')) continue;
    return line;
  }
  return std::nullopt;
}

TextLine LineReader::expect_tokens(std::size_t count, std::string_view what) {
  auto line = next();
  if (!line) throw ParseError(line_ + 1, "unexpected end of input, expected " + std::string(what));
  if (line->tokens.size() != count) {
    throw ParseError(line->number, "expected " + std::string(what) + " (" + std::to_string(count) +
                                       " tokens), got " + std::to_string(line->tokens.size()));
  }
  return *line;
}

void LineReader::expect_end(const std::string& message) {
  if (auto line = next()) throw ParseError(line->number, message);
}

int parse_int(std::string_view token, std::size_t line, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad " + std::string(what) + " '" + std::string(token) +
                               "' (expected an integer)");
  }
  return value;
}

int parse_non_negative(std::string_view token, std::size_t line, std::string_view what) {
  const int v = parse_int(token, line, what);
  if (v < 0) throw ParseError(line, std::string(what) + " must be non-negative, got " + std::to_string(v));
  return v;
}

int parse_positive(std::string_view token, std::size_t line, std::string_view what) {
  const int v = parse_int(token, line, what);
  if (v < 1) throw ParseError(line, std::string(what) + " must be positive, got " + std::to_string(v));
  return v;
}

}  // namespace tvx
