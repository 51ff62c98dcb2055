#include "rspin/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rspin::text {

namespace {

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({TokKind::Punct, "->", 0, line});
      i += 2;
    } else if (is_digit(c) || ((c == '-' || c == '+') && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = i + 1;
      while (j < src.size() && is_digit(src[j])) ++j;
      std::string lit(src.substr(i, j - i));
      Token t{TokKind::Integer, lit, 0, line};
      try {
        t.value = std::stoll(lit);
      } catch (const std::out_of_range&) {
        fail(ErrorKind::Parse, "line " + std::to_string(line) + ": integer out of range: " + lit);
      }
      out.push_back(t);
      i = j;
    } else if (is_word_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && is_word_char(src[j])) ++j;
      out.push_back({TokKind::Word, std::string(src.substr(i, j - i)), 0, line});
      i = j;
    } else {
      out.push_back({TokKind::Punct, std::string(1, c), 0, line});
      ++i;
    }
  }
  out.push_back({TokKind::End, "", 0, line});
  return out;
}

const Token& Cursor::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < toks_.size() ? toks_[k] : toks_.back();
}

Token Cursor::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool Cursor::accept(std::string_view s) {
  const Token& t = peek();
  if ((t.kind == TokKind::Punct || t.kind == TokKind::Word) && t.text == s) {
    next();
    return true;
  }
  return false;
}

void Cursor::expect(std::string_view s) {
  if (!accept(s)) error("expected '" + std::string(s) + "', found '" + peek().text + "'");
}

std::string Cursor::word() {
  if (peek().kind != TokKind::Word) error("expected a name, found '" + peek().text + "'");
  return next().text;
}

Int Cursor::integer() {
  if (peek().kind != TokKind::Integer) error("expected an integer, found '" + peek().text + "'");
  return next().value;
}

IntVec Cursor::integers_until(std::string_view terminator) {
  IntVec out;
  while (!(peek().kind == TokKind::Punct && peek().text == terminator)) {
    if (at_end()) error("unterminated integer list");
    out.push_back(integer());
    accept(",");
  }
  return out;
}

void Cursor::error(const std::string& msg) const {
  fail(ErrorKind::Parse, "line " + std::to_string(peek().line) + ": " + msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace rspin::text
