#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tracewise {

struct SourceLoc {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
  friend auto operator<=>(const SourceLoc&, const SourceLoc&) = default;
};

std::string to_string(SourceLoc loc);

/// Lexical or syntactic error in minilang source.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourceLoc loc, const std::string& message);
  SourceLoc loc() const { return loc_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLoc loc_;
  std::string detail_;
};

enum class TokenKind {
  kIdent,
  kInt,
  kString,
  // keywords
  kIf,
  kElse,
  kWhile,
  kDo,
  kFor,
  kBreak,
  kContinue,
  kPrint,
  kTrue,
  kFalse,
  // punctuation
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kSemicolon,
  kComma,
  // operators
  kAssign,
  kPlusAssign,
  kMinusAssign,
  kStarAssign,
  kPlusPlus,
  kMinusMinus,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAndAnd,
  kOrOr,
  kNot,
  kEnd,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;        // identifier name, string contents (unescaped)
  std::int64_t value = 0;  // integer literals
  SourceLoc loc;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Maximal-munch tokenizer. The returned sequence always ends with kEnd.
std::vector<Token> tokenize(std::string_view source);

}  // namespace tracewise
