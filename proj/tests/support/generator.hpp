#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace gen {

struct Options {
  int max_depth = 4;
  int max_stmts = 4;      // per statement list
  bool init_vars = true;  // bind every variable before the generated body
};

/// Random minilang source over the full grammar: all loop forms, else-if
/// chains, braced and unbraced bodies, break/continue, blocks, and
/// expressions with every operator. Expressions are mostly well typed; a
/// few boolean assignments keep type errors in the mix. Loops are mostly counted so that most
/// programs terminate, but nothing prevents divergence.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint64_t seed, Options o = {}) : rng_(seed), o_(o) {}
  std::string program();

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool chance(int percent) { return pick(100) < percent; }

  std::string var();
  std::string expr(int depth);  // integer valued
  std::string bool_expr(int depth);
  std::string cond();
  std::string simple();
  std::string stmts(int depth, int loops, int indent);
  std::string stmt(int depth, int loops, int indent);
  std::string body(int depth, int loops, int indent);

  std::mt19937_64 rng_;
  Options o_;
  int counter_ = 0;
};

}  // namespace gen
