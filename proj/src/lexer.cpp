#include "tracewise/lexer.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

namespace tracewise {

std::string to_string(SourceLoc loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

SyntaxError::SyntaxError(SourceLoc loc, const std::string& message)
    : std::runtime_error(to_string(loc) + ": " + message), loc_(loc), detail_(message) {}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kInt: return "integer";
    case TokenKind::kString: return "string";
    case TokenKind::kIf: return "'if'";
    case TokenKind::kElse: return "'else'";
    case TokenKind::kWhile: return "'while'";
    case TokenKind::kDo: return "'do'";
    case TokenKind::kFor: return "'for'";
    case TokenKind::kBreak: return "'break'";
    case TokenKind::kContinue: return "'continue'";
    case TokenKind::kPrint: return "'print'";
    case TokenKind::kTrue: return "'true'";
    case TokenKind::kFalse: return "'false'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kSemicolon: return "';'";
    case TokenKind::kComma: return "','";
    case TokenKind::kAssign: return "'='";
    case TokenKind::kPlusAssign: return "'+='";
    case TokenKind::kMinusAssign: return "'-='";
    case TokenKind::kStarAssign: return "'*='";
    case TokenKind::kPlusPlus: return "'++'";
    case TokenKind::kMinusMinus: return "'--'";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kPercent: return "'%'";
    case TokenKind::kLt: return "'<'";
    case TokenKind::kLe: return "'<='";
    case TokenKind::kGt: return "'>'";
    case TokenKind::kGe: return "'>='";
    case TokenKind::kEq: return "'=='";
    case TokenKind::kNe: return "'!='";
    case TokenKind::kAndAnd: return "'&&'";
    case TokenKind::kOrOr: return "'||'";
    case TokenKind::kNot: return "'!'";
    case TokenKind::kEnd: return "end of input";
  }
  return "?";
}

namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 10> kKeywords{{
    {"if", TokenKind::kIf},
    {"else", TokenKind::kElse},
    {"while", TokenKind::kWhile},
    {"do", TokenKind::kDo},
    {"for", TokenKind::kFor},
    {"break", TokenKind::kBreak},
    {"continue", TokenKind::kContinue},
    {"print", TokenKind::kPrint},
    {"true", TokenKind::kTrue},
    {"false", TokenKind::kFalse},
}};

// Longest operators first so that maximal munch falls out of the scan order.
constexpr std::array<std::pair<std::string_view, TokenKind>, 25> kOperators{{
    {"+=", TokenKind::kPlusAssign}, {"-=", TokenKind::kMinusAssign}, {"*=", TokenKind::kStarAssign},
    {"++", TokenKind::kPlusPlus},   {"--", TokenKind::kMinusMinus},  {"<=", TokenKind::kLe},
    {">=", TokenKind::kGe},         {"==", TokenKind::kEq},          {"!=", TokenKind::kNe},
    {"&&", TokenKind::kAndAnd},     {"||", TokenKind::kOrOr},        {"=", TokenKind::kAssign},
    {"+", TokenKind::kPlus},        {"-", TokenKind::kMinus},        {"*", TokenKind::kStar},
    {"/", TokenKind::kSlash},       {"%", TokenKind::kPercent},      {"<", TokenKind::kLt},
    {">", TokenKind::kGt},          {"!", TokenKind::kNot},          {"(", TokenKind::kLParen},
    {")", TokenKind::kRParen},      {"{", TokenKind::kLBrace},       {"}", TokenKind::kRBrace},
    {";", TokenKind::kSemicolon},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      Token tok;
      tok.loc = loc_;
      if (pos_ >= src_.size()) {
        tok.kind = TokenKind::kEnd;
        out.push_back(std::move(tok));
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        lex_word(tok);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_int(tok);
      } else if (c == '"') {
        lex_string(tok);
      } else if (c == ',') {
        advance();
        tok.kind = TokenKind::kComma;
      } else {
        lex_operator(tok);
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_word(Token& tok) {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      advance();
    std::string_view word = src_.substr(start, pos_ - start);
    tok.kind = TokenKind::kIdent;
    for (const auto& [kw, kind] : kKeywords) {
      if (kw == word) tok.kind = kind;
    }
    if (tok.kind == TokenKind::kIdent) tok.text = std::string(word);
  }

  void lex_int(Token& tok) {
    std::size_t start = pos_;
    std::int64_t value = 0;
    bool overflow = false;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      int digit = src_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) overflow = true;
      if (!overflow) value = value * 10 + digit;
      advance();
    }
    if (pos_ < src_.size() &&
        (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      throw SyntaxError(tok.loc, "malformed integer literal");
    if (overflow)
      throw SyntaxError(tok.loc, "integer literal out of range: " +
                                     std::string(src_.substr(start, pos_ - start)));
    tok.kind = TokenKind::kInt;
    tok.value = value;
  }

  void lex_string(Token& tok) {
    advance();  // opening quote
    std::string text;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n')
        throw SyntaxError(tok.loc, "unterminated string literal");
      char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        SourceLoc esc = loc_;
        advance();
        if (pos_ >= src_.size()) throw SyntaxError(tok.loc, "unterminated string literal");
        switch (src_[pos_]) {
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          case '"': text += '"'; break;
          case '\\': text += '\\'; break;
          default: throw SyntaxError(esc, "unknown escape sequence");
        }
        advance();
        continue;
      }
      text += c;
      advance();
    }
    tok.kind = TokenKind::kString;
    tok.text = std::move(text);
  }

  void lex_operator(Token& tok) {
    std::string_view rest = src_.substr(pos_);
    for (const auto& [op, kind] : kOperators) {
      if (rest.starts_with(op)) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        tok.kind = kind;
        return;
      }
    }
    std::string shown(1, src_[pos_]);
    throw SyntaxError(tok.loc, "illegal character '" + shown + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  SourceLoc loc_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace tracewise
