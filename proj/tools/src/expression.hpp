#pragma once

// Space expressions: a prefix/functional language with no precedence.
//
//   expr := ATOM | ATOM '(' [expr (',' expr)*] ')'
//
// Atoms are numbers, group names (Z/4, S_3, Z/2xZ/2), file paths or
// constructor names; double quotes allow any characters in an atom.

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tcs/errors.hpp"
#include "tcs/kan.hpp"
#include "tcs/simplicial.hpp"

namespace tcs::cli {

struct Expr {
  std::string head;  // constructor name, or the atom itself
  std::vector<Expr> args;
  bool call = false;
  bool quoted = false;
  int line = 1;
  int column = 1;

  std::string text() const;
  std::string where() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Expr parse(std::string_view text);

/// Arity and argument sorts, group arguments and the abelian requirement of
/// K(G, n) for n >= 2; throws SyntaxError or NonAbelian. Files are not read.
void elaborate(const Expr& e);

/// An engine failure inside a subexpression.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

struct LogEntry {
  std::string expression;
  int bound = 0;
  std::vector<std::size_t> sizes;
  std::chrono::milliseconds elapsed{0};
  std::string str() const;
};

class Evaluator {
 public:
  /// Relative file names resolve against `base`.
  explicit Evaluator(std::filesystem::path base = {}) : base_(std::move(base)) {}

  BoundedKanComplex space(const Expr& e);
  SimplicialMap map(const Expr& e);
  const std::vector<LogEntry>& log() const { return log_; }
  /// Called after every evaluated space.
  std::function<void(const LogEntry&)> on_step;

 private:
  BoundedKanComplex build_space(const Expr& e);
  SimplicialMap build_map(const Expr& e);
  std::filesystem::path file(const Expr& e) const;

  std::filesystem::path base_;
  std::vector<LogEntry> log_;
};

/// parse + elaborate + evaluate.
BoundedKanComplex evaluate(std::string_view text, Evaluator& evaluator);

}  // namespace tcs::cli
