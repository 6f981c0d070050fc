#include "tracewise/parser.hpp"

namespace tracewise {
namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    Program prog;
    while (!at(TokenKind::kEnd)) prog.statements.push_back(statement());
    prog.next_id = next_id_;
    return prog;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(TokenKind k) {
    if (!at(k)) return false;
    take();
    return true;
  }
  const Token& expect(TokenKind k, std::string_view context) {
    if (!at(k)) {
      throw SyntaxError(peek().loc, "expected " + std::string(token_kind_name(k)) + " " +
                                        std::string(context) + ", found " +
                                        std::string(token_kind_name(peek().kind)));
    }
    return take();
  }
  NodeId fresh() { return next_id_++; }

  StmtPtr statement() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kIf: return if_statement();
      case TokenKind::kWhile: return while_statement();
      case TokenKind::kDo: return do_statement();
      case TokenKind::kFor: return for_statement();
      case TokenKind::kLBrace: {
        NodeId id = fresh();
        SourceLoc loc = t.loc;
        auto stmts = block_contents();
        return make_stmt(id, loc, Block{std::move(stmts)});
      }
      case TokenKind::kBreak: {
        NodeId id = fresh();
        take();
        expect(TokenKind::kSemicolon, "after 'break'");
        return make_stmt(id, t.loc, Break{});
      }
      case TokenKind::kContinue: {
        NodeId id = fresh();
        take();
        expect(TokenKind::kSemicolon, "after 'continue'");
        return make_stmt(id, t.loc, Continue{});
      }
      case TokenKind::kPrint: {
        auto s = print_statement();
        expect(TokenKind::kSemicolon, "after print statement");
        return s;
      }
      case TokenKind::kIdent:
      case TokenKind::kPlusPlus:
      case TokenKind::kMinusMinus: {
        auto s = simple_statement();
        expect(TokenKind::kSemicolon, "after statement");
        return s;
      }
      default:
        throw SyntaxError(t.loc, "unexpected " + std::string(token_kind_name(t.kind)) +
                                     " at start of statement");
    }
  }

  // assign | incdec
  StmtPtr simple_statement() {
    const Token& first = peek();
    NodeId id = fresh();
    if (first.kind == TokenKind::kPlusPlus || first.kind == TokenKind::kMinusMinus) {
      bool inc = take().kind == TokenKind::kPlusPlus;
      const Token& name = expect(TokenKind::kIdent, "after prefix operator");
      return make_stmt(id, first.loc,
                       IncDec{name.text, inc ? IncDecForm::kPreInc : IncDecForm::kPreDec});
    }
    const Token& name = expect(TokenKind::kIdent, "at start of statement");
    std::string target = name.text;
    switch (peek().kind) {
      case TokenKind::kPlusPlus:
        take();
        return make_stmt(id, first.loc, IncDec{target, IncDecForm::kPostInc});
      case TokenKind::kMinusMinus:
        take();
        return make_stmt(id, first.loc, IncDec{target, IncDecForm::kPostDec});
      case TokenKind::kAssign:
      case TokenKind::kPlusAssign:
      case TokenKind::kMinusAssign:
      case TokenKind::kStarAssign: {
        TokenKind k = take().kind;
        AssignOp op = k == TokenKind::kAssign       ? AssignOp::kSet
                      : k == TokenKind::kPlusAssign ? AssignOp::kAdd
                      : k == TokenKind::kMinusAssign ? AssignOp::kSub
                                                     : AssignOp::kMul;
        ExprPtr value = expression();
        return make_stmt(id, first.loc, Assign{target, op, std::move(value)});
      }
      default:
        throw SyntaxError(peek().loc, "expected assignment or '++'/'--' after '" + target + "'");
    }
  }

  StmtPtr print_statement() {
    const Token& kw = take();
    NodeId id = fresh();
    expect(TokenKind::kLParen, "after 'print'");
    Print p;
    do {
      if (at(TokenKind::kString)) {
        p.args.emplace_back(take().text);
      } else {
        p.args.emplace_back(expression());
      }
    } while (accept(TokenKind::kComma));
    expect(TokenKind::kRParen, "to close print arguments");
    return make_stmt(id, kw.loc, std::move(p));
  }

  std::vector<StmtPtr> block_contents() {
    expect(TokenKind::kLBrace, "to open block");
    std::vector<StmtPtr> stmts;
    while (!at(TokenKind::kRBrace)) {
      if (at(TokenKind::kEnd)) throw SyntaxError(peek().loc, "unterminated block, expected '}'");
      stmts.push_back(statement());
    }
    take();
    return stmts;
  }

  Body body() {
    if (at(TokenKind::kLBrace)) return Body{block_contents(), true};
    return Body{{statement()}, false};
  }

  ExprPtr paren_condition(std::string_view context) {
    expect(TokenKind::kLParen, context);
    ExprPtr e = expression();
    expect(TokenKind::kRParen, "to close condition");
    return e;
  }

  StmtPtr if_statement() {
    const Token& kw = take();
    NodeId id = fresh();
    If node;
    ExprPtr cond = paren_condition("after 'if'");
    node.branches.push_back(Branch{std::move(cond), body()});
    while (at(TokenKind::kElse)) {
      take();
      if (accept(TokenKind::kIf)) {
        ExprPtr c = paren_condition("after 'else if'");
        node.branches.push_back(Branch{std::move(c), body()});
      } else {
        node.else_body = body();
        break;
      }
    }
    return make_stmt(id, kw.loc, std::move(node));
  }

  StmtPtr while_statement() {
    const Token& kw = take();
    NodeId id = fresh();
    Loop loop;
    loop.kind = LoopKind::kWhile;
    loop.cond = paren_condition("after 'while'");
    loop.body = body();
    return make_stmt(id, kw.loc, std::move(loop));
  }

  StmtPtr do_statement() {
    const Token& kw = take();
    NodeId id = fresh();
    Loop loop;
    loop.kind = LoopKind::kDoWhile;
    loop.body = body();
    expect(TokenKind::kWhile, "after do-while body");
    loop.cond = paren_condition("after 'while'");
    expect(TokenKind::kSemicolon, "after do-while condition");
    return make_stmt(id, kw.loc, std::move(loop));
  }

  std::vector<StmtPtr> header_list(TokenKind terminator) {
    std::vector<StmtPtr> out;
    if (at(terminator)) return out;
    do {
      out.push_back(simple_statement());
    } while (accept(TokenKind::kComma));
    return out;
  }

  StmtPtr for_statement() {
    const Token& kw = take();
    NodeId id = fresh();
    Loop loop;
    loop.kind = LoopKind::kFor;
    expect(TokenKind::kLParen, "after 'for'");
    loop.init = header_list(TokenKind::kSemicolon);
    expect(TokenKind::kSemicolon, "after for initialization");
    if (!at(TokenKind::kSemicolon)) loop.cond = expression();
    expect(TokenKind::kSemicolon, "after for condition");
    loop.update = header_list(TokenKind::kRParen);
    expect(TokenKind::kRParen, "to close for header");
    loop.body = body();
    return make_stmt(id, kw.loc, std::move(loop));
  }

  // Expressions, lowest precedence first.
  ExprPtr expression() { return logical_or(); }

  ExprPtr binary_level(ExprPtr (Parser::*next)(),
                       std::initializer_list<std::pair<TokenKind, BinaryOp>> ops) {
    ExprPtr lhs = (this->*next)();
    while (true) {
      const BinaryOp* matched = nullptr;
      for (const auto& op : ops) {
        if (at(op.first)) matched = &op.second;
      }
      if (!matched) return lhs;
      BinaryOp op = *matched;
      take();
      ExprPtr rhs = (this->*next)();
      SourceLoc loc = lhs->loc;
      lhs = make_expr(fresh(), loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr logical_or() { return binary_level(&Parser::logical_and, {{TokenKind::kOrOr, BinaryOp::kOr}}); }
  ExprPtr logical_and() { return binary_level(&Parser::equality, {{TokenKind::kAndAnd, BinaryOp::kAnd}}); }
  ExprPtr equality() {
    return binary_level(&Parser::relational,
                        {{TokenKind::kEq, BinaryOp::kEq}, {TokenKind::kNe, BinaryOp::kNe}});
  }
  ExprPtr relational() {
    return binary_level(&Parser::additive, {{TokenKind::kLt, BinaryOp::kLt},
                                            {TokenKind::kLe, BinaryOp::kLe},
                                            {TokenKind::kGt, BinaryOp::kGt},
                                            {TokenKind::kGe, BinaryOp::kGe}});
  }
  ExprPtr additive() {
    return binary_level(&Parser::multiplicative,
                        {{TokenKind::kPlus, BinaryOp::kAdd}, {TokenKind::kMinus, BinaryOp::kSub}});
  }
  ExprPtr multiplicative() {
    return binary_level(&Parser::unary, {{TokenKind::kStar, BinaryOp::kMul},
                                         {TokenKind::kSlash, BinaryOp::kDiv},
                                         {TokenKind::kPercent, BinaryOp::kMod}});
  }

  ExprPtr unary() {
    const Token& t = peek();
    if (t.kind == TokenKind::kNot || t.kind == TokenKind::kMinus) {
      take();
      NodeId id = fresh();
      ExprPtr operand = unary();
      return make_expr(id, t.loc,
                       Unary{t.kind == TokenKind::kNot ? UnaryOp::kNot : UnaryOp::kNeg,
                             std::move(operand)});
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kInt:
        take();
        return make_expr(fresh(), t.loc, IntLit{t.value});
      case TokenKind::kTrue:
      case TokenKind::kFalse:
        take();
        return make_expr(fresh(), t.loc, BoolLit{t.kind == TokenKind::kTrue});
      case TokenKind::kIdent:
        take();
        return make_expr(fresh(), t.loc, VarRef{t.text});
      case TokenKind::kLParen: {
        take();
        ExprPtr e = expression();
        expect(TokenKind::kRParen, "to close parenthesized expression");
        return e;
      }
      default:
        throw SyntaxError(t.loc, "expected expression, found " +
                                     std::string(token_kind_name(t.kind)));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  NodeId next_id_ = 1;
};

}  // namespace

Program parse(std::string_view source) { return Parser(tokenize(source)).run(); }

}  // namespace tracewise
