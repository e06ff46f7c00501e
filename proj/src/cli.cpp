#include "lrs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "lrs/text.hpp"
#include "lrs/wedge.hpp"

namespace lrs::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxTableSide = 1024;
constexpr unsigned kMaxJobs = 256;

const char* command_name(Command c) {
  switch (c) {
    case Command::kWedge: return "wedge";
    case Command::kFactor: return "factor";
    case Command::kMul: return "mul";
    case Command::kVerify: return "verify";
    case Command::kTable: return "table";
    case Command::kBatch: return "batch";
  }
  return "?";
}

std::uint64_t parse_u64(const std::string& token, const std::string& what) {
  std::uint64_t v = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("invalid " + what + " '" + token + "': expected a non-negative integer");
  }
  return v;
}

std::string caret_message(const std::string& what, const ParseError& e) {
  return "malformed " + what + ": " + e.what() + " at position " + std::to_string(e.position()) + "\n  " +
         e.input() + "\n  " + std::string(e.position(), ' ') + "^";
}

FieldDescriptor field_or_usage(const std::string& spec) {
  try {
    return parse_field(spec);
  } catch (const ParseError& e) {
    throw UsageError(caret_message("field '" + spec + "'", e));
  } catch (const DomainError& e) {
    throw UsageError("invalid field '" + spec + "': " + e.what());
  }
}

Polynomial poly_or_usage(const std::string& text, const FieldDescriptor& field, std::size_t index) {
  try {
    return parse_polynomial(text, field);
  } catch (const ParseError& e) {
    throw UsageError(caret_message("polynomial #" + std::to_string(index + 1), e));
  }
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget";
  if (dynamic_cast<const IrrationalRoots*>(&e)) return "irrational_roots";
  if (dynamic_cast<const DescentError*>(&e)) return "descent";
  if (dynamic_cast<const FieldMismatch*>(&e)) return "field_mismatch";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const Error*>(&e)) return "error";
  return "internal";
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string digits_string(const PExpansion& e) {
  std::vector<std::string> parts;
  for (auto d : e.digits) parts.push_back(std::to_string(d));
  return "[" + join(parts, ",") + "]";
}

// ---------------------------------------------------------------------------
// Commands

int run_wedge(const Invocation& inv, std::ostream& out) {
  const WedgeContext ctx(inv.characteristic);
  const auto ex = explain_wedge(inv.integers[0], inv.integers[1], ctx);
  if (inv.json) {
    Json j{{"command", "wedge"},       {"ok", true},  {"characteristic", inv.characteristic},
           {"i", ex.i},                {"j", ex.j},   {"value", ex.value},
           {"i_minus_one_digits", ex.i_minus_one.digits},
           {"j_minus_one_digits", ex.j_minus_one.digits},
           {"q", ex.q}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << ex.value << "\n";
  if (!inv.explain) return kExitOk;
  const std::uint64_t p = inv.characteristic;
  if (ex.i == 0 || ex.j == 0) {
    out << "a zero argument gives 0\n";
  } else if (p == 0) {
    out << "characteristic 0: i^j = i+j-1 = " << ex.value << "\n";
  } else {
    out << "i-1 = " << ex.i - 1 << " = " << digits_string(ex.i_minus_one) << " in base " << p
        << " (least significant digit first)\n";
    out << "j-1 = " << ex.j - 1 << " = " << digits_string(ex.j_minus_one) << " in base " << p << "\n";
    out << "q = " << ex.q << " (digit sums i_m+j_m stay below " << p << " from position q on)\n";
    out << "d = " << p << "^" << ex.q;
    const std::size_t len = std::max(ex.i_minus_one.digits.size(), ex.j_minus_one.digits.size());
    for (std::size_t m = ex.q; m < len; ++m) {
      const auto s = ex.i_minus_one.digit(m) + ex.j_minus_one.digit(m);
      if (s) out << " + " << s << "*" << p << "^" << m;
    }
    out << " = " << ex.value << "\n";
  }
  return kExitOk;
}

int run_table(const Invocation& inv, std::ostream& out) {
  const WedgeContext ctx(inv.characteristic);
  const std::uint64_t rows = inv.integers[0], cols = inv.integers[1];
  std::vector<std::vector<std::uint64_t>> values(rows, std::vector<std::uint64_t>(cols));
  for (std::uint64_t i = 1; i <= rows; ++i) {
    for (std::uint64_t j = 1; j <= cols; ++j) values[i - 1][j - 1] = wedge(i, j, ctx);
  }
  if (inv.json) {
    Json j{{"command", "table"}, {"ok", true}, {"characteristic", inv.characteristic},
           {"rows", rows},       {"cols", cols}, {"values", values}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const int width = static_cast<int>(std::to_string(std::max({rows, cols, rows + cols})).size()) + 1;
  out << std::setw(width) << "^";
  for (std::uint64_t j = 1; j <= cols; ++j) out << std::setw(width) << j;
  out << "\n";
  for (std::uint64_t i = 1; i <= rows; ++i) {
    out << std::setw(width) << i;
    for (std::uint64_t j = 1; j <= cols; ++j) out << std::setw(width) << values[i - 1][j - 1];
    out << "\n";
  }
  return kExitOk;
}

int run_factor(const Invocation& inv, std::ostream& out) {
  const Polynomial& p = inv.polys.front();
  const Factorization f = factor(p, inv.seed);
  const std::string factored = factored_string(p, inv.seed);
  if (inv.json) {
    Json factors = Json::array();
    for (const auto& fp : f.factors) {
      factors.push_back(Json{{"factor", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
    }
    Json j{{"command", "factor"},
           {"ok", true},
           {"field", p.field().name()},
           {"input", p.to_string()},
           {"unit", f.unit.to_string()},
           {"factors", factors},
           {"remainder", f.remainder ? Json(f.remainder->to_string()) : Json(nullptr)},
           {"factored", factored}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "field: " << p.field().name() << "\n";
  out << "input: " << p.to_string() << "\n";
  out << "factored: " << factored << "\n";
  if (f.remainder) out << "remainder without rational roots: " << f.remainder->to_string() << "\n";
  return kExitOk;
}

std::string theta_string(const std::vector<std::size_t>& theta) {
  std::vector<std::string> parts;
  for (auto t : theta) parts.push_back(std::to_string(t));
  return "{" + join(parts, ",") + "}";
}

int run_mul(const Invocation& inv, std::ostream& out) {
  const auto r = product_char_poly(inv.polys, {inv.seed, inv.cap});
  const FieldDescriptor& base = inv.polys.front().field();
  const Polynomial upsilon = r.result.divmod(Polynomial::monomial(base, r.rho)).first;
  const std::string split_name = r.upsilon.spectrum.field().name();
  if (inv.json) {
    Json classes = Json::array();
    for (const auto& c : r.upsilon.classes) {
      std::vector<std::string> witness;
      for (const auto& w : c.witness) witness.push_back(w.to_string());
      classes.push_back(Json{{"value", c.product_value.to_string()}, {"multiplicity", c.best}, {"witness", witness}});
    }
    Json j{{"command", "mul"},
           {"ok", true},
           {"field", base.name()},
           {"inputs", poly_strings(inv.polys)},
           {"result", r.result.to_string()},
           {"factored", factored_string(r.result, inv.seed)},
           {"fold_result", r.fold_result.to_string()},
           {"rho", r.rho},
           {"theta", r.theta},
           {"zero_mults", r.zero_mults},
           {"nonzero_parts", poly_strings(r.nonzero_parts)},
           {"upsilon", upsilon.to_string()},
           {"splitting_field", split_name},
           {"splitting_degree", r.splitting_degree},
           {"tuple_count", r.upsilon.tuple_count},
           {"classes", classes}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "field: " << base.name() << "\n";
  out << "product: " << r.result.to_string() << "\n";
  out << "factored: " << factored_string(r.result, inv.seed) << "\n";
  out << "rho: " << r.rho << "\n";
  out << "theta: " << theta_string(r.theta) << "\n";
  out << "upsilon: " << upsilon.to_string() << "\n";
  if (r.upsilon.classes.empty()) {
    out << "classes: none\n";
    return kExitOk;
  }
  out << "classes in " << split_name << " (" << r.upsilon.tuple_count << " tuples):\n";
  std::vector<std::array<std::string, 3>> rows{{"value", "multiplicity", "witness"}};
  for (const auto& c : r.upsilon.classes) {
    std::vector<std::string> witness;
    for (const auto& w : c.witness) witness.push_back(w.to_string());
    rows.push_back({c.product_value.to_string(), std::to_string(c.best), "(" + join(witness, ", ") + ")"});
  }
  std::array<std::size_t, 2> width{};
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < 2; ++k) width[k] = std::max(width[k], row[k].size());
  }
  for (const auto& row : rows) {
    out << "  " << std::left << std::setw(static_cast<int>(width[0])) << row[0] << "  "
        << std::setw(static_cast<int>(width[1])) << row[1] << "  " << row[2] << std::right << "\n";
  }
  return kExitOk;
}

struct VerifyOutcome {
  bool equal = false;
  Polynomial formula;
  Polynomial oracle;
  std::size_t rank = 0;
};

VerifyOutcome verify_polys(const std::vector<Polynomial>& polys, const Invocation& inv) {
  const auto formula = product_char_poly(polys, {inv.seed, inv.cap});
  const auto oracle = oracle_product_char_poly(polys, inv.budget);
  return {formula.result == oracle.annihilator, formula.result, oracle.annihilator, oracle.rank};
}

int run_verify(const Invocation& inv, std::ostream& out) {
  const VerifyOutcome v = verify_polys(inv.polys, inv);
  const char* status = v.equal ? "EQUAL" : "DIFFER";
  if (inv.json) {
    Json j{{"command", "verify"},
           {"ok", true},
           {"field", inv.polys.front().field().name()},
           {"inputs", poly_strings(inv.polys)},
           {"status", status},
           {"formula", v.formula.to_string()},
           {"oracle", v.oracle.to_string()},
           {"rank", v.rank}};
    out << j.dump(2) << "\n";
  } else {
    out << status << "\n";
    out << "formula: " << v.formula.to_string() << "\n";
    out << "oracle:  " << v.oracle.to_string() << "\n";
    out << "rank: " << v.rank << "\n";
  }
  return v.equal ? kExitOk : kExitFailure;
}

struct BatchCase {
  std::size_t line = 0;
  std::string text;
  std::string status;
  std::string field;
  std::vector<std::string> inputs;
  std::optional<std::string> formula;
  std::optional<std::string> oracle;
  std::optional<std::string> error;
};

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void run_case(BatchCase& c, const Invocation& inv) {
  try {
    std::vector<std::string> parts;
    std::stringstream ss(c.text);
    for (std::string part; std::getline(ss, part, ';');) parts.push_back(strip(part));
    if (parts.size() < 3) throw UsageError("expected 'FIELD ; P1 ; P2 [; ...]'");
    const FieldDescriptor field = field_or_usage(parts[0]);
    c.field = field.name();
    std::vector<Polynomial> polys;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      polys.push_back(poly_or_usage(parts[i], field, i - 1));
      c.inputs.push_back(polys.back().to_string());
    }
    const VerifyOutcome v = verify_polys(polys, inv);
    c.status = v.equal ? "EQUAL" : "DIFFER";
    c.formula = v.formula.to_string();
    c.oracle = v.oracle.to_string();
  } catch (const std::exception& e) {
    c.status = "FAILED";
    c.error = e.what();
  }
}

int run_batch(const Invocation& inv, std::ostream& out) {
  std::ifstream in(inv.batch_path, std::ios::binary);
  if (!in) throw UsageError("cannot open batch file '" + inv.batch_path + "'");
  std::vector<BatchCase> cases;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    cases.push_back({line_no, line, "", "", {}, {}, {}, {}});
  }

  const unsigned jobs = std::min<unsigned>(inv.jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  if (jobs <= 1) {
    for (auto& c : cases) run_case(c, inv);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) run_case(cases[i], inv);
      });
    }
    for (auto& t : workers) t.join();
  }

  std::size_t equal = 0, differ = 0, failed = 0;
  for (const auto& c : cases) {
    if (c.status == "EQUAL") ++equal;
    else if (c.status == "DIFFER") ++differ;
    else ++failed;
  }
  const auto opt = [](const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); };
  if (inv.json) {
    Json list = Json::array();
    for (const auto& c : cases) {
      list.push_back(Json{{"line", c.line},
                          {"status", c.status},
                          {"field", c.field.empty() ? Json(nullptr) : Json(c.field)},
                          {"inputs", c.inputs},
                          {"formula", opt(c.formula)},
                          {"oracle", opt(c.oracle)},
                          {"error", opt(c.error)}});
    }
    Json j{{"command", "batch"},
           {"ok", true},
           {"cases", list},
           {"summary", Json{{"total", cases.size()}, {"equal", equal}, {"differ", differ}, {"failed", failed}}}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : cases) {
      out << "line " << c.line << ": " << c.status;
      if (c.error) {
        out << ": " << *c.error << "\n";
        continue;
      }
      out << " " << c.field << " [" << join(c.inputs, " ; ") << "] formula=" << *c.formula;
      if (c.status != "EQUAL") out << " oracle=" << *c.oracle;
      out << "\n";
    }
    out << cases.size() << " cases: " << equal << " EQUAL, " << differ << " DIFFER, " << failed << " FAILED\n";
  }
  return equal == cases.size() ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------
// Argument parsing

struct HelpRequested {
  std::string text;
};

const std::vector<std::pair<std::string, Command>> kCommands{
    {"wedge", Command::kWedge}, {"factor", Command::kFactor}, {"mul", Command::kMul},
    {"verify", Command::kVerify}, {"table", Command::kTable}, {"batch", Command::kBatch}};

Invocation parse_or_help(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
      std::ranges::none_of(kCommands, [&](const auto& c) { return c.first == args[0]; })) {
    throw UsageError("unknown command '" + args[0] + "' (expected wedge, factor, mul, verify, table or batch)");
  }

  CLI::App app{"Characteristic polynomials of products of linear recurrence spaces."};
  app.name("lrs");
  app.require_subcommand(1);

  Invocation inv;
  std::vector<std::string> positionals;
  std::optional<std::uint64_t> seed;

  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", inv.field_spec, "Q, GF(p), GF(q), GF(p^k) or GF(p^k)/m(x)")->required();
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed for factoring (default 0, or LRS_SEED)");
  };
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", inv.cap, "limit on enumerated root tuples")->capture_default_str();
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", inv.budget, "limit on the product of degrees for the sequence oracle")
        ->capture_default_str();
  };
  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", inv.json, "emit one JSON object"); };

  auto* wedge_cmd = app.add_subcommand("wedge", "i^j in a given characteristic");
  wedge_cmd->add_option("--char", inv.characteristic, "0 or a prime")->required();
  wedge_cmd->add_flag("--explain", inv.explain, "show the base-p digits and q");
  wedge_cmd->add_option("operands", positionals, "i j");
  add_json(wedge_cmd);

  auto* table_cmd = app.add_subcommand("table", "i^j for 1<=i<=ROWS, 1<=j<=COLS");
  table_cmd->add_option("--char", inv.characteristic, "0 or a prime")->required();
  table_cmd->add_option("size", positionals, "ROWS COLS (default 8 8)");
  add_json(table_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over the field");
  add_field(factor_cmd);
  add_seed(factor_cmd);
  add_json(factor_cmd);
  factor_cmd->add_option("polynomial", positionals, "the polynomial");

  auto* mul_cmd = app.add_subcommand("mul", "characteristic polynomial of L(P1)...L(Pm)");
  add_field(mul_cmd);
  add_seed(mul_cmd);
  add_cap(mul_cmd);
  add_json(mul_cmd);
  mul_cmd->add_option("polynomials", positionals, "P1 P2 ...");

  auto* verify_cmd = app.add_subcommand("verify", "compare mul against the sequence oracle");
  add_field(verify_cmd);
  add_seed(verify_cmd);
  add_cap(verify_cmd);
  add_budget(verify_cmd);
  add_json(verify_cmd);
  verify_cmd->add_option("polynomials", positionals, "P1 P2 ...");

  auto* batch_cmd = app.add_subcommand("batch", "run verify on every line 'FIELD ; P1 ; P2 ...' of a file");
  batch_cmd->add_option("file", inv.batch_path, "batch file")->required();
  add_seed(batch_cmd);
  add_cap(batch_cmd);
  add_budget(batch_cmd);
  add_json(batch_cmd);
  batch_cmd->add_option("--jobs", inv.jobs, "worker threads; output keeps input order")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\nRun 'lrs --help' for usage.");
  }

  for (const auto& [name, cmd] : kCommands) {
    if (app.got_subcommand(name)) inv.command = cmd;
  }

  if (seed) {
    inv.seed = *seed;
  } else if (env_seed) {
    inv.seed = parse_u64(*env_seed, "LRS_SEED");
  }
  if (inv.cap == 0) throw UsageError("--cap must be positive");
  if (inv.budget == 0) throw UsageError("--budget must be positive");
  if (inv.jobs == 0) inv.jobs = std::max(1u, std::thread::hardware_concurrency());
  inv.jobs = std::min(inv.jobs, kMaxJobs);

  switch (inv.command) {
    case Command::kWedge:
    case Command::kTable: {
      if (inv.characteristic != 0 && !is_prime(inv.characteristic)) {
        throw UsageError("--char must be 0 or a prime, got " + std::to_string(inv.characteristic));
      }
      const bool wedge_cmd_used = inv.command == Command::kWedge;
      if (wedge_cmd_used && positionals.size() != 2) {
        throw UsageError("wedge takes exactly two integers i j, got " + std::to_string(positionals.size()));
      }
      if (!wedge_cmd_used && positionals.size() != 0 && positionals.size() != 2) {
        throw UsageError("table takes ROWS COLS or nothing, got " + std::to_string(positionals.size()) + " arguments");
      }
      for (std::size_t k = 0; k < positionals.size(); ++k) {
        inv.integers.push_back(parse_u64(positionals[k], k == 0 ? "first operand" : "second operand"));
      }
      if (inv.integers.empty()) inv.integers = {8, 8};
      if (!wedge_cmd_used) {
        for (auto v : inv.integers) {
          if (v < 1 || v > kMaxTableSide) {
            throw UsageError("table sides must be between 1 and " + std::to_string(kMaxTableSide));
          }
        }
      }
      break;
    }
    case Command::kFactor:
    case Command::kMul:
    case Command::kVerify: {
      const bool single = inv.command == Command::kFactor;
      if (single && positionals.size() != 1) {
        throw UsageError("factor takes exactly one polynomial, got " + std::to_string(positionals.size()));
      }
      if (!single && positionals.size() < 2) {
        throw UsageError(std::string(command_name(inv.command)) + " takes at least two polynomials, got " +
                         std::to_string(positionals.size()));
      }
      inv.field = field_or_usage(inv.field_spec);
      inv.poly_texts = positionals;
      for (std::size_t k = 0; k < positionals.size(); ++k) {
        inv.polys.push_back(poly_or_usage(positionals[k], *inv.field, k));
      }
      break;
    }
    case Command::kBatch:
      break;
  }
  return inv;
}

}  // namespace

Invocation parse_invocation(const std::vector<std::string>& args, const std::optional<std::string>& env_seed) {
  try {
    return parse_or_help(args, env_seed);
  } catch (const HelpRequested&) {
    throw UsageError("help requested");
  }
}

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    switch (inv.command) {
      case Command::kWedge: return run_wedge(inv, out);
      case Command::kTable: return run_table(inv, out);
      case Command::kFactor: return run_factor(inv, out);
      case Command::kMul: return run_mul(inv, out);
      case Command::kVerify: return run_verify(inv, out);
      case Command::kBatch: return run_batch(inv, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    if (inv.json) {
      Json j{{"command", command_name(inv.command)},
             {"ok", false},
             {"error", Json{{"kind", error_kind(e)}, {"message", e.what()}}}};
      out << j.dump(2) << "\n";
    } else {
      err << "error (" << error_kind(e) << "): " << e.what() << "\n";
    }
    return kExitFailure;
  }
  return kExitFailure;
}

int main_entry(const std::vector<std::string>& args, const std::optional<std::string>& env_seed, std::ostream& out,
               std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_or_help(args, env_seed);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(inv, out, err);
}

std::string factored_string(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero()) return "0";
  const Factorization f = factor(p, seed);
  std::vector<std::string> parts;
  const bool has_factors = !f.factors.empty() || f.remainder;
  if (!f.unit.is_one() || !has_factors) parts.push_back(f.unit.to_string());
  const auto single_term = [](const Polynomial& q) {
    return std::ranges::count_if(q.coefficients(), [](const FieldElement& c) { return !c.is_zero(); }) == 1;
  };
  for (const auto& fp : f.factors) {
    std::string s = fp.factor.to_string();
    if (!single_term(fp.factor)) s = "(" + s + ")";
    if (fp.multiplicity > 1) s += "^" + std::to_string(fp.multiplicity);
    parts.push_back(s);
  }
  if (f.remainder) parts.push_back("(" + f.remainder->to_string() + ")");
  return join(parts, "*");
}

}  // namespace lrs::cli
