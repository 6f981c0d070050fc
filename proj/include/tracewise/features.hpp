#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tracewise/ast.hpp"

namespace tracewise {

using FeatureSet = std::set<std::string>;

/// Every feature name `features` can produce, sorted.
const std::vector<std::string>& known_features();

/// Construct-presence features of a program. Deterministic; the empty program
/// has no features.
FeatureSet features(const Program& program);

/// The loop's control variable: for a `for` loop the target of its first
/// update (or of its first init when there is no update); for `while` and
/// `do-while` the first condition variable written by the body.
std::optional<std::string> control_variable(const Loop& loop);

/// A `for` loop whose trip count is fixed by literals in its header: the
/// control variable is initialized to a literal, compared against a literal,
/// stepped by a literal, and never written by the body.
bool has_constant_trip_count(const Loop& loop);

/// Variables read / written anywhere inside `stmts` (nested statements and
/// `for` headers included).
std::set<std::string> vars_read(const std::vector<StmtPtr>& stmts);
std::set<std::string> vars_written(const std::vector<StmtPtr>& stmts);
std::set<std::string> vars_read(const Expr& e);

/// Conditions that contradict each other by syntax alone: `C` vs `!(C)`, or the
/// same operands under a complementary relational operator.
bool complementary(const Expr& a, const Expr& b);

/// One branch, no else.
bool is_simple_if(const If& node);

bool contains_loop(const std::vector<StmtPtr>& stmts);

}  // namespace tracewise
