#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvx {

/// A non-skipped input line split on single spaces/tabs. Views point into
/// the text given to LineReader.
struct TextLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

/// Line-oriented tokenizer shared by the text formats. Tracks 1-based line
/// numbers for error messages. A single trailing newline is allowed; other
/// blank lines are returned with no tokens unless `skip_blank_and_comments`
/// is set, in which case blank lines and lines starting with 'c' are dropped.
class LineReader {
 public:
  explicit LineReader(std::string_view text, bool skip_blank_and_comments = false);

  std::optional<TextLine> next();
  /// next(), throwing ParseError if the input ended or the token count differs.
  TextLine expect_tokens(std::size_t count, std::string_view what);
  /// Throws ParseError(message) if any further line remains.
  void expect_end(const std::string& message);

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  bool skip_;
};

int parse_positive(std::string_view token, std::size_t line, std::string_view what);
int parse_non_negative(std::string_view token, std::size_t line, std::string_view what);
/// Any int, negative allowed.
int parse_int(std::string_view token, std::size_t line, std::string_view what);

}  // namespace tvx
