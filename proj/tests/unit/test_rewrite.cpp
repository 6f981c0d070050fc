#include <doctest.h>

#include "tracewise/parser.hpp"
#include "tracewise/printer.hpp"
#include "tracewise/rewrite.hpp"

using namespace tracewise;

namespace {
std::string rewrite(const char* src, const char* code, ParamMap params = {}) {
  return pretty_print(apply_rewrite(parse(src), MisconceptionCode::parse(code), params));
}
std::string canon(const char* src) { return pretty_print(parse(src)); }
}  // namespace

TEST_CASE("flatten nested if") {
  CHECK(rewrite("if (a) { if (b) { print(1); } }", "SEL.5.a.i") == canon("if (a) { } if (b) { print(1); }"));
}

TEST_CASE("complementary ifs fuse") {
  CHECK(rewrite("if (c) { x = 1; } if (!c) { x = 2; }", "SEL.4.d.ii.B") == canon("if (c) { x = 1; } else { x = 2; }"));
  CHECK(rewrite("if (x < 1) { y = 1; } if (x >= 1) { y = 2; }", "SEL.4.d.ii.B") ==
        canon("if (x < 1) { y = 1; } else { y = 2; }"));
}

TEST_CASE("header swap") {
  const char* nested = "for (i = 0; i < 2; i = i + 1) { for (j = 0; j < 2; j = j + 1) { print(\"X\", i, j); } }";
  CHECK(rewrite(nested, "ITER.6.c") ==
        canon("for (j = 0; j < 2; j = j + 1) { for (i = 0; i < 2; i = i + 1) { print(\"X\", i, j); } }"));
}

TEST_CASE("body extent rewrites") {
  CHECK(rewrite("if (x) { a = 1; } b = 2; c = 3;", "SEL.2.a") == canon("if (x) { a = 1; b = 2; } c = 3;"));
  CHECK(rewrite("if (x) { a = 1; } b = 2; c = 3;", "SEL.2.a", {{"k", 2}}) ==
        canon("if (x) { a = 1; b = 2; c = 3; }"));
  CHECK(rewrite("if (x) { a = 1; b = 2; } c = 3;", "SEL.2.b") == canon("if (x) { a = 1; } b = 2; c = 3;"));
  CHECK(rewrite("if (x) { a = 1; } b = 2;", "SEL.3.c.ii") == canon("if (x) { a = 1; } else b = 2;"));
  CHECK(rewrite("while (x) { a = 1; b = 2; }", "ITER.2.a.i") == canon("while (x) { a = 1; } b = 2;"));
  CHECK(rewrite("while (x) { a = 1; } b = 2;", "ITER.2.a.ii") == canon("while (x) { a = 1; b = 2; }"));
  CHECK(rewrite("while (x) { a = 1; } print(x);", "ITER.1.a") == canon("a = 1; print(x);"));
}

TEST_CASE("nesting of consecutive ifs") {
  CHECK(rewrite("if (a) { x = 1; } if (b) { x = 2; }", "SEL.5.a.ii") == canon("if (a) { x = 1; if (b) { x = 2; } }"));
}

TEST_CASE("rewrites that do not apply leave the program alone") {
  const char* src = "x = 1; print(x);";
  for (const char* code : {"SEL.2.a", "SEL.2.b", "SEL.5.a.i", "ITER.1.a", "ITER.6.a", "ITER.6.c"}) {
    CAPTURE(code);
    CHECK(rewrite(src, code) == canon(src));
  }
  CHECK(has_structural_rewrite(MisconceptionCode::parse("ITER.6.e")));
  CHECK_FALSE(has_structural_rewrite(MisconceptionCode::parse("ITER.6.d")));
}

TEST_CASE("rewritten programs keep unique ids") {
  Program p = apply_rewrite(parse("for (i = 0; i < 2; i++) { for (j = 0; j < 2; j++) { print(i, j); } }"),
                            MisconceptionCode::parse("ITER.6.a"), {});
  std::set<NodeId> ids;
  std::size_t n = 0;
  walk(
      p.statements, [&](const Stmt& s) { ids.insert(s.id), ++n; }, [&](const Expr& e) { ids.insert(e.id), ++n; });
  CHECK(ids.size() == n);
  CHECK(*ids.rbegin() < p.next_id);
}
