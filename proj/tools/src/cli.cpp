#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "expression.hpp"
#include "tcs/errors.hpp"
#include "tcs/invariants.hpp"
#include "tcs/io.hpp"
#include "tcs/laws.hpp"
#include "tcs/limits.hpp"
#include "tcs/mapping.hpp"

namespace tcs::cli {

namespace {

struct Options {
  std::optional<std::size_t> cap;
  std::optional<double> timeout;
  std::string format = "text";
  bool verbose = false;

  bool machine() const { return format == "machine"; }
};

// A space argument is a complex file when such a file exists, otherwise an
// expression.
BoundedKanComplex load_space(const std::string& arg, const Options& opts, std::ostream& err) {
  if (std::filesystem::is_regular_file(arg)) return load_kan_complex(arg);
  Evaluator ev;
  if (opts.verbose) ev.on_step = [&err](const LogEntry& e) { err << "tcs: " << e.str() << "\n"; };
  return evaluate(arg, ev);
}

int cmd_build(const std::string& expr, const std::string& output, const Options& opts,
              std::ostream& out, std::ostream& err) {
  auto x = load_space(expr, opts, err);
  auto j = complex_to_json(x.data());
  if (output.empty()) {
    out << j.dump() << "\n";
    return kSuccess;
  }
  write_json(output, j);
  if (opts.machine()) {
    out << nlohmann::json{{"file", output}, {"bound", x.bound()}}.dump() << "\n";
  } else {
    out << "wrote " << output << " (bound " << x.bound() << ")\n";
  }
  return kSuccess;
}

int cmd_pi(const std::string& space, int n, SimplexId basepoint, const Options& opts,
           std::ostream& out, std::ostream& err) {
  auto x = load_space(space, opts, err);
  if (basepoint >= x.data().size(0)) {
    throw InvalidData("basepoint " + std::to_string(basepoint) + " out of range (" +
                      std::to_string(x.data().size(0)) + " vertices)");
  }
  if (n == 0) {
    auto c = pi0(x);
    if (opts.machine()) {
      out << nlohmann::json{{"n", 0}, {"order", c.count()}, {"basepoints", c.basepoints}}.dump()
          << "\n";
    } else {
      out << "pi_0 has " << c.count() << " element(s); basepoints:";
      for (auto v : c.basepoints) out << " " << v;
      out << "\n";
    }
    return kSuccess;
  }
  auto g = pi_n(x, basepoint, n);
  if (opts.machine()) {
    out << nlohmann::json{{"n", n},
                          {"basepoint", basepoint},
                          {"order", g.order()},
                          {"group", identify_group(g.group())},
                          {"representatives", g.representatives()},
                          {"table", g.group().table()}}
               .dump()
        << "\n";
  } else {
    out << group_table_text(g);
  }
  return kSuccess;
}

int cmd_card(const std::string& space, const Options& opts, std::ostream& out, std::ostream& err) {
  auto c = homotopy_cardinality(load_space(space, opts, err));
  if (opts.machine()) {
    out << nlohmann::json{{"cardinality", c.str()}}.dump() << "\n";
  } else {
    out << c.str() << "\n";
  }
  return kSuccess;
}

int cmd_info(const std::string& space, const Options& opts, std::ostream& out, std::ostream& err) {
  auto r = invariant_report(load_space(space, opts, err));
  out << (opts.machine() ? to_json(r) + "\n" : to_text(r));
  return kSuccess;
}

int cmd_equiv(const std::string& a, const std::string& b, const std::string& witness,
              const Options& opts, std::ostream& out, std::ostream& err) {
  auto x = load_space(a, opts, err);
  auto y = load_space(b, opts, err);
  auto d = are_equivalent(x, y);
  if (d.verdict == Verdict::yes && d.witness) {
    write_json(witness, nlohmann::json{{"format_version", kFormatVersion},
                                       {"source", complex_to_json(d.witness->source())},
                                       {"target", complex_to_json(d.witness->target())},
                                       {"map", map_to_json(*d.witness)}});
  }
  const bool wrote = d.verdict == Verdict::yes && d.witness;
  if (opts.machine()) {
    nlohmann::json j{{"verdict", to_string(d.verdict)},
                     {"candidates", d.candidates},
                     {"reason", d.reason}};
    if (wrote) j["witness"] = witness;
    out << j.dump() << "\n";
  } else {
    out << to_string(d.verdict);
    if (!d.reason.empty()) out << ": " << d.reason;
    out << "\n";
    if (wrote) out << "witness: " << witness << "\n";
  }
  switch (d.verdict) {
    case Verdict::yes: return kSuccess;
    case Verdict::no: return kNegative;
    default: return kError;
  }
}

int cmd_hom(const std::string& a, const std::string& b, const std::string& output,
            const Options& opts, std::ostream& out, std::ostream& err) {
  auto x = load_space(a, opts, err);
  auto y = load_space(b, opts, err);
  auto h = hom_complex(x, y);
  write_json(output, complex_to_json(h.data()));
  if (opts.machine()) {
    std::vector<std::size_t> sizes;
    for (int k = 0; k <= h.bound(); ++k) sizes.push_back(h.data().size(k));
    out << nlohmann::json{{"file", output}, {"bound", h.bound()}, {"sizes", sizes}}.dump() << "\n";
  } else {
    out << "wrote " << output << " (bound " << h.bound() << ", " << h.data().size(0)
        << " vertices)\n";
  }
  return kSuccess;
}

int cmd_laws(std::uint64_t seed, std::size_t cap, const std::string& dir, const Options& opts,
             std::ostream& out) {
  SuiteOptions so;
  so.seed = seed;
  so.simplex_cap = cap;
  so.witness_dir = dir;
  auto reports = run_suite(so);
  std::size_t fails = 0;
  std::size_t inconclusive = 0;
  for (const auto& r : reports) {
    if (r.verdict == LawVerdict::fail) ++fails;
    if (r.verdict == LawVerdict::inconclusive) ++inconclusive;
    if (opts.machine()) {
      nlohmann::json j{{"law", r.law},
                       {"instance", r.instance_hash()},
                       {"verdict", to_string(r.verdict)},
                       {"detail", r.detail}};
      out << j.dump() << "\n";
    } else {
      out << r.line() << "\n";
    }
  }
  if (!opts.machine()) {
    out << reports.size() << " instances, " << fails << " failed, " << inconclusive
        << " inconclusive\n";
  }
  if (fails > 0) return kNegative;
  return inconclusive > 0 ? kError : kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite homotopy types as bounded Kan complexes", "tcs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--cap", opts.cap, "Simplex cap per level (overrides TCS_SIMPLEX_CAP)");
  app.add_option("--timeout", opts.timeout, "Per-operation timeout in seconds (overrides TCS_TIMEOUT)");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("-v,--verbose", opts.verbose, "Log every evaluated subexpression to stderr");

  std::string expr;
  std::string output;
  auto* build = app.add_subcommand("build", "Evaluate an expression and write the complex file");
  build->add_option("expr", expr, "Space expression")->required();
  build->add_option("-o", output, "Output file (stdout when omitted)");

  std::string space;
  int n = 1;
  SimplexId basepoint = 0;
  auto* pi = app.add_subcommand("pi", "Print pi_n at a basepoint");
  pi->add_option("-n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
  pi->add_option("space", space, "Complex file or expression")->required();
  pi->add_option("--basepoint", basepoint, "Basepoint vertex");

  auto* card = app.add_subcommand("card", "Print the homotopy cardinality");
  card->add_option("space", space, "Complex file or expression")->required();

  auto* info = app.add_subcommand("info", "Print the invariant report");
  info->add_option("space", space, "Complex file or expression")->required();

  std::string other;
  std::string witness = "equiv-witness.json";
  auto* equiv = app.add_subcommand("equiv", "Decide whether two spaces are equivalent");
  equiv->add_option("first", space, "Complex file or expression")->required();
  equiv->add_option("second", other, "Complex file or expression")->required();
  equiv->add_option("-o", witness, "Witness file written on a positive answer")->capture_default_str();

  auto* hom = app.add_subcommand("hom", "Write the mapping complex hom(F, G)");
  hom->add_option("source", space, "Complex file or expression")->required();
  hom->add_option("target", other, "Complex file or expression")->required();
  hom->add_option("-o", output, "Output file")->required();

  std::uint64_t seed = 1;
  std::string witness_dir = ".";
  auto* laws = app.add_subcommand("laws", "Run the seeded law suite");
  laws->add_option("--seed", seed, "Generator seed")->capture_default_str();
  laws->add_option("-o", witness_dir, "Directory for failure witnesses")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kSuccess : kError;
  }

  Limits lim = limits_from_environment(limits());
  if (opts.cap) lim.simplex_cap = *opts.cap;
  // The suite applies the cap to checking only; instance generation runs
  // under the default limits.
  const std::size_t cap = lim.simplex_cap;
  if (*laws) lim.simplex_cap = Limits{}.simplex_cap;
  if (opts.timeout) {
    lim.timeout = std::chrono::milliseconds(static_cast<long long>(*opts.timeout * 1000));
  }
  ScopedLimits scope(lim);

  try {
    if (*build) return cmd_build(expr, output, opts, out, err);
    if (*pi) return cmd_pi(space, n, basepoint, opts, out, err);
    if (*card) return cmd_card(space, opts, out, err);
    if (*info) return cmd_info(space, opts, out, err);
    if (*equiv) return cmd_equiv(space, other, witness, opts, out, err);
    if (*hom) return cmd_hom(space, other, output, opts, out, err);
    if (*laws) return cmd_laws(seed, cap, witness_dir, opts, out);
  } catch (const SizeCapExceeded& e) {
    err << "tcs: inconclusive, simplex cap exceeded: " << e.what() << "\n";
  } catch (const Timeout& e) {
    err << "tcs: inconclusive, timeout: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    err << "tcs: syntax error at " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "tcs: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace tcs::cli
