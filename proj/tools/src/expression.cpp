#include "expression.hpp"

#include <charconv>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "tcs/coskeleton.hpp"
#include "tcs/group.hpp"
#include "tcs/invariants.hpp"
#include "tcs/io.hpp"
#include "tcs/mapping.hpp"
#include "tcs/products.hpp"
#include "tcs/spaces.hpp"

namespace tcs::cli {

std::string Expr::text() const {
  std::string s = quoted ? "\"" + head + "\"" : head;
  if (!call) return s;
  s += "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i].text();
  return s + ")";
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

// -- parsing ----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = parse_expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "' after the expression");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, column_, message);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || c == '"' || std::isspace(static_cast<unsigned char>(c));
  }

  Expr parse_expr() {
    Expr e;
    e.line = line_;
    e.column = column_;
    if (text_[pos_] == '"') {
      advance();
      while (!at_end() && text_[pos_] != '"') {
        e.head += text_[pos_];
        advance();
      }
      if (at_end()) throw SyntaxError(e.line, e.column, "unterminated string");
      advance();
      e.quoted = true;
      return e;
    }
    while (!at_end() && !delimiter(text_[pos_])) {
      e.head += text_[pos_];
      advance();
    }
    if (e.head.empty()) {
      fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + text_[pos_] + "'");
    }
    skip_space();
    if (at_end() || text_[pos_] != '(') return e;
    e.call = true;
    advance();
    skip_space();
    if (!at_end() && text_[pos_] == ')') {
      advance();
      return e;
    }
    while (true) {
      skip_space();
      if (at_end()) fail("unexpected end of input, expected an argument");
      e.args.push_back(parse_expr());
      skip_space();
      if (at_end()) fail("unexpected end of input, expected ',' or ')'");
      if (text_[pos_] == ',') {
        advance();
        continue;
      }
      if (text_[pos_] == ')') {
        advance();
        return e;
      }
      fail(std::string("expected ',' or ')' but found '") + text_[pos_] + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

enum class Sort { space, map, number, group, path };

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::space: return "a space";
    case Sort::map: return "a map";
    case Sort::number: return "a number";
    case Sort::group: return "a group";
    case Sort::path: return "a file name";
  }
  return "?";
}

struct Signature {
  Sort result;
  std::vector<Sort> args;
  std::size_t optional = 0;  // trailing arguments that may be omitted
  bool variadic = false;     // last sort repeats
};

const std::map<std::string, std::vector<Signature>>& signatures() {
  using S = Sort;
  static const std::map<std::string, std::vector<Signature>> table = {
      {"Fin", {{S::space, {S::number}}}},
      {"B", {{S::space, {S::group}}}},
      {"K", {{S::space, {S::group, S::number}}}},
      {"Nerve", {{S::space, {S::path}}}},
      {"Load", {{S::space, {S::path}}}},
      {"Prod", {{S::space, {S::space, S::space}, 0, true}}},
      {"Sum", {{S::space, {S::space, S::space}, 0, true}}},
      {"Omega", {{S::space, {S::space, S::number}, 1}}},
      {"Trunc", {{S::space, {S::space, S::number}}}},
      {"Hom", {{S::space, {S::space, S::space}}}},
      {"PointedHom",
       {{S::space, {S::space, S::space}}, {S::space, {S::space, S::number, S::space, S::number}}}},
      {"Pullback", {{S::space, {S::map, S::map}}}},
      {"Quotient", {{S::space, {S::path}}}},
      {"Pi", {{S::space, {S::map, S::map}}}},
      {"SymUniverse", {{S::space, {S::number}}}},
      // maps
      {"Point", {{S::map, {S::space, S::number}, 1}}},
      {"Const", {{S::map, {S::space, S::space, S::number}, 1}}},
      {"Id", {{S::map, {S::space}}}},
      {"Terminal", {{S::map, {S::space}}}},
      {"Fst", {{S::map, {S::space}}}},
      {"Snd", {{S::map, {S::space}}}},
      {"Inl", {{S::map, {S::space}}}},
      {"Inr", {{S::map, {S::space}}}},
      {"Ev", {{S::map, {S::space, S::number}, 1}}},
      {"Map", {{S::map, {S::path, S::space, S::space}}}},
      {"Quot", {{S::map, {S::path}}}},
  };
  return table;
}

std::optional<long long> number_of(const Expr& e) {
  if (e.call || e.quoted) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(e.head.data(), e.head.data() + e.head.size(), v);
  if (ec != std::errc() || ptr != e.head.data() + e.head.size()) return std::nullopt;
  return v;
}

[[noreturn]] void fail_at(const Expr& e, const std::string& message) {
  throw SyntaxError(e.line, e.column, message);
}

std::size_t number(const Expr& e) {
  auto v = number_of(e);
  if (!v || *v < 0) fail_at(e, "expected a non-negative number, found '" + e.text() + "'");
  return static_cast<std::size_t>(*v);
}

const Signature& signature_of(const Expr& e) {
  const auto& table = signatures();
  auto it = table.find(e.head);
  if (it == table.end()) fail_at(e, "unknown constructor '" + e.head + "'");
  for (const auto& sig : it->second) {
    const auto n = e.args.size();
    const auto full = sig.args.size();
    if (sig.variadic ? n >= full : (n <= full && n + sig.optional >= full)) return sig;
  }
  std::string expected;
  for (const auto& sig : it->second) {
    if (!expected.empty()) expected += " or ";
    expected += sig.variadic ? "at least " + std::to_string(sig.args.size())
                : sig.optional ? std::to_string(sig.args.size() - sig.optional) + "-" +
                                     std::to_string(sig.args.size())
                               : std::to_string(sig.args.size());
  }
  fail_at(e, e.head + " takes " + expected + " arguments, got " + std::to_string(e.args.size()));
}

Sort check(const Expr& e, Sort expected);

void check_group(const Expr& e) {
  if (e.call) fail_at(e, "expected a group, found '" + e.text() + "'");
  if (builtin_group(e.head)) return;
  // otherwise a table file, read at evaluation time
  if (!e.quoted && e.head.find('.') == std::string::npos && !std::filesystem::exists(e.head)) {
    fail_at(e, "unknown group '" + e.head + "' (expected Z/n, S_n, A_n, D_n, 1, GxH or a file)");
  }
}

Sort check(const Expr& e, Sort expected) {
  switch (expected) {
    case Sort::number:
      number(e);
      return expected;
    case Sort::group:
      check_group(e);
      return expected;
    case Sort::path:
      if (e.call) fail_at(e, "expected a file name, found '" + e.text() + "'");
      return expected;
    default:
      break;
  }
  if (!e.call) {
    fail_at(e, std::string("expected ") + sort_name(expected) + ", found '" + e.text() + "'");
  }
  const auto& sig = signature_of(e);
  if (sig.result != expected) {
    fail_at(e, e.head + " is " + sort_name(sig.result) + ", expected " + sort_name(expected));
  }
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    check(e.args[i], sig.args[std::min(i, sig.args.size() - 1)]);
  }
  if (e.head == "K") {
    const auto g = builtin_group(e.args[0].head);
    if (number(e.args[1]) >= 2 && g && !g->is_abelian()) {
      throw NonAbelian(e.where() + ": K(" + e.args[0].head + ", " + e.args[1].head +
                       ") needs an abelian group");
    }
  }
  if ((e.head == "Fst" || e.head == "Snd") && !(e.args[0].head == "Prod" && e.args[0].args.size() == 2)) {
    fail_at(e, e.head + " needs a two-factor Prod(..)");
  }
  if ((e.head == "Inl" || e.head == "Inr") && !(e.args[0].head == "Sum" && e.args[0].args.size() == 2)) {
    fail_at(e, e.head + " needs a two-summand Sum(..)");
  }
  if (e.head == "Ev" && e.args[0].head != "Hom") fail_at(e, "Ev needs a Hom(..)");
  return expected;
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

void elaborate(const Expr& e) { check(e, Sort::space); }

// -- evaluation -------------------------------------------------------------

std::string LogEntry::str() const {
  std::string s = expression + ": bound " + std::to_string(bound) + ", sizes [";
  for (std::size_t k = 0; k < sizes.size(); ++k) s += (k ? "," : "") + std::to_string(sizes[k]);
  return s + "], " + std::to_string(elapsed.count()) + " ms";
}

std::filesystem::path Evaluator::file(const Expr& e) const {
  std::filesystem::path p(e.head);
  return p.is_absolute() || base_.empty() ? p : base_ / p;
}

BoundedKanComplex Evaluator::space(const Expr& e) {
  const auto start = std::chrono::steady_clock::now();
  BoundedKanComplex x;
  try {
    x = build_space(e);
  } catch (const EvaluationError&) {
    throw;
  } catch (const SyntaxError&) {
    throw;
  } catch (const SizeCapExceeded& err) {
    throw SizeCapExceeded("in " + e.text() + " at " + e.where() + ": " + err.what());
  } catch (const Timeout& err) {
    throw Timeout("in " + e.text() + " at " + e.where() + ": " + err.what());
  } catch (const std::exception& err) {
    throw EvaluationError("in " + e.text() + " at " + e.where() + ": " + err.what());
  }
  LogEntry entry{e.text(), x.bound(), {},
                 std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)};
  for (int k = 0; k <= x.bound(); ++k) entry.sizes.push_back(x.data().size(k));
  if (on_step) on_step(entry);
  log_.push_back(std::move(entry));
  return x;
}

SimplicialMap Evaluator::map(const Expr& e) {
  try {
    return build_map(e);
  } catch (const EvaluationError&) {
    throw;
  } catch (const SizeCapExceeded&) {
    throw;
  } catch (const Timeout&) {
    throw;
  } catch (const std::exception& err) {
    throw EvaluationError("in " + e.text() + " at " + e.where() + ": " + err.what());
  }
}

BoundedKanComplex Evaluator::build_space(const Expr& e) {
  const auto& h = e.head;
  const auto& a = e.args;
  if (h == "Fin") return discrete(number(a[0]));
  if (h == "B") return classifying_space(resolve_group(file(a[0]).string()));
  if (h == "K") {
    return eilenberg_maclane(resolve_group(builtin_group(a[0].head) ? a[0].head : file(a[0]).string()),
                             static_cast<int>(number(a[1])));
  }
  if (h == "Nerve") return nerve_groupoid(groupoid_from_json(read_json(file(a[0]))));
  if (h == "Load") return load_kan_complex(file(a[0]));
  if (h == "Prod" || h == "Sum") {
    auto acc = space(a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
      acc = h == "Prod" ? product(acc, space(a[i])) : coproduct(acc, space(a[i]));
    }
    return acc;
  }
  if (h == "Omega") {
    return loop_space(space(a[0]), a.size() > 1 ? static_cast<SimplexId>(number(a[1])) : 0);
  }
  if (h == "Trunc") return truncate(space(a[0]), static_cast<int>(number(a[1])));
  if (h == "Hom") return hom_complex(space(a[0]), space(a[1]));
  if (h == "PointedHom") {
    if (a.size() == 2) return pointed_hom(space(a[0]), 0, space(a[1]), 0);
    return pointed_hom(space(a[0]), static_cast<SimplexId>(number(a[1])), space(a[2]),
                       static_cast<SimplexId>(number(a[3])));
  }
  if (h == "Pullback") {
    auto f = map(a[0]);
    auto g = map(a[1]);
    if (f.bound() != g.bound()) throw BoundMismatch("the two legs live at different bounds");
    if (!(f.target() == g.target())) throw InvalidData("the two legs have different targets");
    return homotopy_pullback(f, SimplicialMap(g.source_ptr(), f.target_ptr(), g.images())).space;
  }
  if (h == "Quotient") {
    return homotopy_quotient(action_from_json(read_json(file(a[0])), file(a[0]).parent_path()));
  }
  if (h == "Pi") {
    auto p = map(a[0]);
    auto f = map(a[1]);
    if (!(p.target() == f.source())) throw InvalidData("Pi(p, f) needs p to land in the source of f");
    return dependent_product(SimplicialMap(p.source_ptr(), f.source_ptr(), p.images()), f).space;
  }
  if (h == "SymUniverse") return symmetric_universe(static_cast<int>(number(a[0])));
  throw EvaluationError(e.where() + ": '" + h + "' is not a space");
}

SimplicialMap Evaluator::build_map(const Expr& e) {
  const auto& h = e.head;
  const auto& a = e.args;
  auto vertex = [&](std::size_t i) {
    return a.size() > i ? static_cast<SimplexId>(number(a[i])) : SimplexId{0};
  };
  auto checked_vertex = [](const BoundedKanComplex& x, SimplexId v) {
    if (v >= x.data().size(0)) {
      throw InvalidData("vertex " + std::to_string(v) + " out of range (" +
                        std::to_string(x.data().size(0)) + " vertices)");
    }
    return v;
  };
  if (h == "Point") {
    auto x = space(a[0]);
    return SimplicialMap::constant(point(x.bound()).ptr(), x.ptr(), checked_vertex(x, vertex(1)));
  }
  if (h == "Const") {
    auto [x, y] = equalize_bounds(space(a[0]), space(a[1]));
    return SimplicialMap::constant(x.ptr(), y.ptr(), checked_vertex(y, vertex(2)));
  }
  if (h == "Id") return SimplicialMap::identity(space(a[0]).ptr());
  if (h == "Terminal") {
    auto x = space(a[0]);
    return SimplicialMap::constant(x.ptr(), point(x.bound()).ptr(), 0);
  }
  if (h == "Fst" || h == "Snd") {
    auto p = product_with_projections(space(a[0].args[0]), space(a[0].args[1]));
    return h == "Fst" ? p.first : p.second;
  }
  if (h == "Inl" || h == "Inr") {
    auto s = coproduct_with_inclusions(space(a[0].args[0]), space(a[0].args[1]));
    return h == "Inl" ? s.left : s.right;
  }
  if (h == "Ev") {
    auto y = space(a[0].args[1]);
    const auto& dom = a[0].args[0];
    auto x = space(dom);
    MappingSpace m(domain_at_bound(x, y.bound()), y);
    return m.evaluation(checked_vertex(x, vertex(1)));
  }
  if (h == "Map") {
    auto x = space(a[1]);
    auto y = space(a[2]);
    return map_from_json(read_json(file(a[0])), x.ptr(), y.ptr());
  }
  if (h == "Quot") {
    auto action = action_from_json(read_json(file(a[0])), file(a[0]).parent_path());
    return quotient_map(action, homotopy_quotient(action));
  }
  throw EvaluationError(e.where() + ": '" + h + "' is not a map");
}

BoundedKanComplex evaluate(std::string_view text, Evaluator& evaluator) {
  auto e = parse(text);
  elaborate(e);
  return evaluator.space(e);
}

}  // namespace tcs::cli
