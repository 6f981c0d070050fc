#include "generator.hpp"

namespace gen {

namespace {
const char* const kVars[] = {"a", "b", "c", "n"};
const char* const kArith[] = {"+", "-", "*", "/", "%"};
const char* const kRel[] = {"<", "<=", ">", ">=", "==", "!="};
}  // namespace

std::string ProgramGenerator::var() { return kVars[pick(4)]; }

std::string ProgramGenerator::expr(int depth) {
  if (depth <= 0 || chance(40)) return chance(35) ? std::to_string(pick(7) - 2) : var();
  switch (pick(4)) {
    case 0: return "-(" + expr(depth - 1) + ")";
    default: return "(" + expr(depth - 1) + " " + kArith[pick(5)] + " " + expr(depth - 1) + ")";
  }
}

std::string ProgramGenerator::bool_expr(int depth) {
  if (depth <= 0 || chance(30)) return chance(15) ? "true" : expr(depth - 1) + " " + kRel[pick(6)] + " " + expr(depth - 1);
  switch (pick(3)) {
    case 0: return "!(" + bool_expr(depth - 1) + ")";
    default: return "(" + bool_expr(depth - 1) + (chance(50) ? " && " : " || ") + bool_expr(depth - 1) + ")";
  }
}

std::string ProgramGenerator::cond() {
  if (chance(60)) return var() + " " + kRel[pick(6)] + " " + std::to_string(pick(6) - 1);
  return chance(85) ? bool_expr(2) : expr(1);
}

std::string ProgramGenerator::simple() {
  std::string v = var();
  switch (pick(6)) {
    case 0: return v + "++";
    case 1: return "--" + v;
    case 2: return v + " += " + std::to_string(pick(3) + 1);
    case 3: return v + " -= " + std::to_string(pick(3) + 1);
    case 4: return v + " *= " + std::to_string(pick(3));
    default: return v + " = " + (chance(5) ? bool_expr(1) : expr(2));
  }
}

std::string ProgramGenerator::stmts(int depth, int loops, int indent) {
  std::string out;
  int n = 1 + pick(o_.max_stmts);
  for (int i = 0; i < n; ++i) out += stmt(depth, loops, indent);
  return out;
}

std::string ProgramGenerator::body(int depth, int loops, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (chance(30)) {
    std::string s = stmt(0, loops, 0);  // depth 0: a single simple statement
    return s.substr(0, s.size() - 1);
  }
  return "{\n" + stmts(depth, loops, indent + 1) + pad + "}";
}

std::string ProgramGenerator::stmt(int depth, int loops, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  int kinds = depth > 0 ? 10 : 4;
  int k = pick(kinds);
  if (loops > 0 && chance(8)) return pad + (chance(50) ? "break;\n" : "continue;\n");
  switch (k) {
    case 0:
    case 1: return pad + simple() + ";\n";
    case 2:
    case 3: {
      std::string s = "print(";
      int args = 1 + pick(3);
      for (int i = 0; i < args; ++i) {
        if (i) s += ", ";
        s += chance(40) ? "\"s" + std::to_string(pick(4)) + "\"" : chance(20) ? bool_expr(1) : expr(1);
      }
      return pad + s + ");\n";
    }
    case 4:
    case 5: {
      std::string s = pad + "if (" + cond() + ") " + body(depth - 1, loops, indent);
      int elifs = chance(30) ? 1 + pick(2) : 0;
      for (int i = 0; i < elifs; ++i) s += " else if (" + cond() + ") " + body(depth - 1, loops, indent);
      if (chance(50)) s += " else " + body(depth - 1, loops, indent);
      return s + "\n";
    }
    case 6:
    case 7: {
      std::string v = "i" + std::to_string(counter_++ % 3);
      int from = pick(3);
      int to = from + pick(4);
      bool down = chance(25);
      std::string header = down ? v + " = " + std::to_string(to) + "; " + v + " > " + std::to_string(from) + "; " + v + "--"
                                : v + " = " + std::to_string(from) + "; " + v + " < " + std::to_string(to) + "; " +
                                      (chance(50) ? "++" + v : v + " = " + v + " + 1");
      return pad + "for (" + header + ") " + body(depth - 1, loops + 1, indent) + "\n";
    }
    case 8: {
      std::string v = var();
      return pad + v + " = " + std::to_string(pick(4)) + ";\n" + pad + "while (" + v + " < " + std::to_string(2 + pick(3)) +
             ") {\n" + pad + "  " + v + "++;\n" + stmts(depth - 1, loops + 1, indent + 1) + pad + "}\n";
    }
    default: {
      if (chance(50)) return pad + "{\n" + stmts(depth - 1, loops, indent + 1) + pad + "}\n";
      std::string v = var();
      return pad + v + " = " + std::to_string(pick(3)) + ";\n" + pad + "do {\n" + pad + "  " + v + "++;\n" +
             stmts(depth - 1, loops + 1, indent + 1) + pad + "} while (" + v + " < " + std::to_string(2 + pick(3)) +
             ");\n";
    }
  }
}

std::string ProgramGenerator::program() {
  counter_ = 0;
  std::string out;
  if (o_.init_vars) {
    for (const char* v : kVars) out += std::string(v) + " = " + std::to_string(pick(4)) + ";\n";
  }
  return out + stmts(o_.max_depth, 0, 0);
}

}  // namespace gen
