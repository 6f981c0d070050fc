#include <doctest.h>

#include <set>

#include "generator.hpp"
#include "tracewise/lexer.hpp"
#include "tracewise/parser.hpp"
#include "tracewise/printer.hpp"

using namespace tracewise;

TEST_CASE("maximal munch") {
  auto t = tokenize("i<=3");
  REQUIRE(t.size() == 4);
  CHECK(t[0].kind == TokenKind::kIdent);
  CHECK(t[1].kind == TokenKind::kLe);
  CHECK(t[2].kind == TokenKind::kInt);
  CHECK(t[2].value == 3);
  CHECK(t[3].kind == TokenKind::kEnd);

  auto u = tokenize("++i");
  CHECK(u[0].kind == TokenKind::kPlusPlus);
  CHECK(u[1].kind == TokenKind::kIdent);
}

TEST_CASE("unterminated string") {
  CHECK_THROWS_AS(tokenize("\"Birne"), SyntaxError);
}

TEST_CASE("unbraced if/else") {
  Program p = parse("if (x > 0) print(1); else print(2);");
  REQUIRE(p.statements.size() == 1);
  const If* i = as<If>(*p.statements[0]);
  REQUIRE(i);
  CHECK(i->branches.size() == 1);
  REQUIRE(i->else_body);
  CHECK_FALSE(i->branches[0].body.braced);
  CHECK_FALSE(i->else_body->braced);
}

TEST_CASE("else-if is one chain") {
  Program p = parse("if (a) x = 1; else if (b) x = 2; else if (c) x = 3; else x = 4;");
  const If* i = as<If>(*p.statements[0]);
  REQUIRE(i);
  CHECK(i->branches.size() == 3);
  CHECK(i->else_body.has_value());
}

TEST_CASE("dangling else binds to the nearest if") {
  Program p = parse("if (a) if (b) x = 1; else x = 2;");
  const If* outer = as<If>(*p.statements[0]);
  REQUIRE(outer);
  CHECK_FALSE(outer->else_body.has_value());
  const If* inner = as<If>(*outer->branches[0].body.stmts[0]);
  REQUIRE(inner);
  CHECK(inner->else_body.has_value());
}

TEST_CASE("loop forms") {
  Program p = parse("for (i = 10; i > 0; i = i - 4) { print(\"Birne\", i); } print(\"Apfel\");");
  REQUIRE(p.statements.size() == 2);
  const Loop* l = as<Loop>(*p.statements[0]);
  REQUIRE(l);
  CHECK(l->kind == LoopKind::kFor);
  CHECK(as<Print>(*p.statements[1]));

  Program d = parse("do { x = x - 1; } while (x > 0);");
  CHECK(as<Loop>(*d.statements[0])->kind == LoopKind::kDoWhile);
  Program e = parse("for (;;) break;");
  CHECK(as<Loop>(*e.statements[0])->cond == nullptr);
}

TEST_CASE("precedence") {
  Program p = parse("x = 1 + 2 * 3 < 4 || !b && c;");
  CHECK(pretty_print(*as<Assign>(*p.statements[0])->value) == "1 + 2 * 3 < 4 || !b && c");
  const auto& top = std::get<Binary>(as<Assign>(*p.statements[0])->value->node);
  CHECK(top.op == BinaryOp::kOr);
}

TEST_CASE("syntax errors carry a location") {
  try {
    parse("x = 1;\nif (x > ) print(1);");
    FAIL("expected error");
  } catch (const SyntaxError& e) {
    CHECK(e.loc().line == 2);
  }
  CHECK_THROWS_AS(parse("while (x) {"), SyntaxError);
  CHECK_THROWS_AS(parse("x = 99999999999999999999;"), SyntaxError);
}

TEST_CASE("node ids are unique") {
  Program p = parse("for (i = 0; i < 3; i++) { if (i == 1) { print(i); } }");
  std::set<NodeId> ids;
  std::size_t n = 0;
  walk(
      p.statements, [&](const Stmt& s) { ids.insert(s.id), ++n; }, [&](const Expr& e) { ids.insert(e.id), ++n; });
  CHECK(ids.size() == n);
  CHECK(ids.count(0) == 0);
  CHECK(*ids.rbegin() < p.next_id);
}

TEST_CASE("printer round-trip") {
  const char* fixed[] = {
      "for (i = 10; i > 0; i = i - 4) { print(\"Birne\", i); } print(\"Apfel\");",
      "if (a) { { x = 1; { y = 2; } } }",
      "while (x < 3) x++;",
      "if (x) print(\"a\\\"b\"); else if (y) { x = -(-x); } else x -= 2;",
      "do x = x * 2; while (x < 100);",
      "for (i = 0, j = 3; i < j; i++, j--) print(i, j);",
  };
  for (const char* src : fixed) {
    CAPTURE(src);
    Program p = parse(src);
    Program q = parse(pretty_print(p));
    CHECK(structurally_equal(p, q));
    CHECK(pretty_print(q) == pretty_print(p));
  }
  Program unbraced = parse(pretty_print(parse("while (x < 3) x++;")));
  CHECK_FALSE(as<Loop>(*unbraced.statements[0])->body.braced);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CAPTURE(seed);
    Program p = parse(gen::ProgramGenerator(seed).program());
    CHECK(structurally_equal(p, parse(pretty_print(p))));
  }
}
