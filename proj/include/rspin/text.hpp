#pragma once

// Shared tokenizer for the whitespace-insensitive text formats (lattices,
// curve configurations, winding scripts, assemblages).

#include <string>
#include <string_view>
#include <vector>

#include "rspin/common.hpp"

namespace rspin::text {

enum class TokKind { Word, Integer, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  Int value = 0;
  int line = 0;
};

std::vector<Token> tokenize(std::string_view src);

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at_end() const { return peek().kind == TokKind::End; }
  Token next();

  bool accept(std::string_view punct_or_word);
  void expect(std::string_view punct_or_word);
  std::string word();
  Int integer();
  /// Integers separated by optional commas, up to (not including) a terminator punct.
  IntVec integers_until(std::string_view terminator);

  [[noreturn]] void error(const std::string& msg) const;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::string& path);

}  // namespace rspin::text
