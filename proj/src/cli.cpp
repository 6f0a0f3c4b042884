#include "riviera/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "riviera/caps.hpp"
#include "riviera/complexity.hpp"
#include "riviera/enum1d.hpp"
#include "riviera/error.hpp"
#include "riviera/family.hpp"
#include "riviera/gfcount.hpp"
#include "riviera/grid2d.hpp"

namespace riviera::cli {
namespace {

using json = nlohmann::ordered_json;
using Value = std::variant<std::monostate, std::string, long long, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

struct Result {
  Table table;
  std::optional<std::string> text;  // payload for --format text
  int code = kExitOk;
};

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc{} ? std::string(buffer, end) : std::string("nan");
}

std::string csv_field(const Value& value) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') quoted.push_back('"');
        quoted.push_back(ch);
      }
      return quoted + "\"";
    }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, value);
}

json json_value(const Value& value) {
  struct {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const std::string& s) const { return s; }
    json operator()(long long v) const { return v; }
    json operator()(double v) const { return v; }
    json operator()(bool v) const { return v; }
  } visitor;
  return std::visit(visitor, value);
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table, const json& job) {
  json doc;
  doc["meta"] = {{"tool", "riviera"}, {"version", kVersion}, {"job", job}};
  doc["rows"] = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_value(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

Value big(const mpz_class& value) { return value.get_str(); }
Value integer(long long value) { return value; }

[[noreturn]] void bad_argument(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

// ---- 1D counting ----------------------------------------------------------

// F is a jammed Flory strip iff 1 + complement(F) + 1 is predator-resistant,
// so J^F(k, n) = J^P(n + 2 - k, n + 2).
CountTable complement_to_flory(const CountTable& predator) {
  CountTable out(Family::flory, predator.max_length() - 2);
  for (const auto& [key, value] : predator.entries()) {
    const auto [n, k] = key;
    if (n >= 2) out.set(n - 2, n - k, value);
  }
  return out;
}

CountTable predator_closed_table(int n_max) {
  CountTable out(Family::predator, n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) out.set(n, k, predator_closed_form(k, n));
  }
  return out;
}

std::vector<std::string> applicable_methods(Family family) {
  if (family == Family::predator) return {"recurrence", "series", "brute", "closed-form", "digraph"};
  return {"recurrence", "series", "brute"};
}

CountTable count_with(Family family, const std::string& method, int n_max, const EnumCaps& caps) {
  if (n_max < 0) bad_argument("--n-max must be >= 0");
  if (method == "brute") return count_table_brute(n_max, family, caps);
  if (family == Family::flory) return complement_to_flory(count_with(Family::predator, method, n_max + 2, caps));
  if (method == "series") return series_expand(gf_closed(family), n_max);
  if (method == "recurrence") return counts_by_recurrence(family, n_max);
  if (family != Family::predator) bad_argument("method " + method + " exists only for the predator family");
  if (method == "closed-form") return predator_closed_table(n_max);
  if (method == "digraph") return series_from_digraph(predator_digraph(), n_max, Family::predator);
  bad_argument("unknown counting method " + method);
}

Result do_count(Family family, const std::string& method, int n_max, const EnumCaps& caps) {
  const auto table = count_with(family, method, n_max, caps);
  Result result;
  result.table.columns = {"family", "n", "k", "count"};
  for (const auto& [key, value] : table.entries()) {
    result.table.rows.push_back({std::string(to_string(family)), integer(key.first), integer(key.second), big(value)});
  }
  return result;
}

Result do_verify(Family family, int n_max, const EnumCaps& caps, std::ostream& err) {
  const auto methods = applicable_methods(family);
  const auto reference = count_with(family, methods.front(), n_max, caps);
  Result result;
  result.table.columns = {"family", "method", "reference", "n_max", "status", "first_n", "first_k"};
  for (std::size_t i = 1; i < methods.size(); ++i) {
    const auto other = count_with(family, methods[i], n_max, caps);
    const auto diff = first_difference(reference, other);
    std::vector<Value> row = {std::string(to_string(family)), methods[i], methods.front(), integer(n_max),
                              std::string(diff ? "mismatch" : "ok"), std::monostate{}, std::monostate{}};
    if (diff) {
      row[5] = integer(diff->first);
      row[6] = integer(diff->second);
      err << "mismatch: " << methods[i] << " vs " << methods.front() << " first differs at (n,k) = ("
          << diff->first << "," << diff->second << "): " << other.at(diff->first, diff->second).get_str()
          << " != " << reference.at(diff->first, diff->second).get_str() << '\n';
      result.code = kExitMismatch;
    }
    result.table.rows.push_back(std::move(row));
  }
  return result;
}

Result do_sequence(Family family, const std::string& axis_name, int max_index) {
  if (family == Family::flory) bad_argument("sequence needs a generating function; flory has none");
  if (max_index < 0) bad_argument("--max must be >= 0");
  const auto gf = gf_closed(family);
  const Axis axis = axis_name == "length" ? Axis::length : Axis::occupancy;
  const auto seq = axis == Axis::length ? length_totals_by_recurrence(gf, max_index)
                                        : totals(counts_by_recurrence(gf, 2 * max_index + 1), axis, max_index);
  const auto residual = recurrence_residuals(gf, axis, seq);
  Result result;
  result.table.columns = {"family", "axis", "index", "total", "residual"};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    result.table.rows.push_back(
        {std::string(to_string(family)), axis_name, integer(static_cast<long long>(i)), big(seq[i]), big(residual[i])});
  }
  return result;
}

// ---- complexity -----------------------------------------------------------

struct RhoGrid {
  std::optional<double> from;
  std::optional<double> to;
  int points = 50;
};

std::vector<double> rho_values(Family family, const RhoGrid& grid) {
  if (grid.points < 1) bad_argument("--points must be >= 1");
  if (grid.from.has_value() != grid.to.has_value()) bad_argument("give both --rho-from and --rho-to, or neither");
  if (!grid.from) return support(family).interior_grid(grid.points);
  std::vector<double> out;
  for (int i = 0; i < grid.points; ++i) {
    const int last = grid.points - 1;
    out.push_back(last == 0 ? *grid.from : (*grid.from * (last - i) + *grid.to * i) / last);
  }
  return out;
}

bool has_closed_curve(Family family) { return family != Family::riviera; }

Result do_complexity(Family family, const std::string& method, const RhoGrid& grid, int n) {
  const auto rhos = rho_values(family, grid);
  Result result;
  const std::string name(to_string(family));
  if (method == "closed") {
    result.table.columns = {"family", "method", "rho", "s"};
    for (double rho : rhos) result.table.rows.push_back({name, method, rho, s_closed(family, rho)});
  } else if (method == "kl") {
    result.table.columns = {"family", "method", "rho", "s", "x0", "y0", "s_closed"};
    const auto denominator = gf_closed(family).denominator;
    for (double rho : rhos) {
      const auto p = kl_solve(denominator, rho);
      Value closed = has_closed_curve(family) ? Value(s_closed(family, rho)) : Value(std::monostate{});
      result.table.rows.push_back({name, method, rho, p.s, *p.x0, *p.y0, closed});
    }
  } else {
    result.table.columns = {"family", "method", "n", "rho", "s"};
    for (const auto& p : s_empirical_curve(family, rhos, n)) {
      result.table.rows.push_back({name, method, integer(n), p.rho, p.s});
    }
  }
  return result;
}

Result do_seed_figures(int points, int n) {
  Result result;
  result.table.columns = {"family", "method", "n", "rho", "s"};
  for (Family family : {Family::predator, Family::altruist, Family::es}) {
    for (double rho : support(family).interior_grid(points)) {
      result.table.rows.push_back({std::string(to_string(family)), std::string("closed"), std::monostate{}, rho,
                                   s_closed(family, rho)});
    }
  }
  for (const auto& p : s_empirical_curve(Family::riviera, support(Family::riviera).interior_grid(points), n)) {
    result.table.rows.push_back({std::string("riviera"), std::string("empirical"), integer(n), p.rho, p.s});
  }
  return result;
}

// ---- 2D -------------------------------------------------------------------

std::string grids_text(const std::vector<Grid2D>& grids) {
  std::string out;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (i) out += '\n';
    out += grids[i].str();
  }
  return out;
}

Result do_grid_enumerate(int m, int n, Family family, const EnumCaps& caps) {
  const auto grids = enumerate_2d(m, n, family, caps);
  Result result;
  result.table.columns = {"m", "n", "family", "index", "occupancy", "grid"};
  for (std::size_t i = 0; i < grids.size(); ++i) {
    result.table.rows.push_back({integer(m), integer(n), std::string(to_string(family)),
                                 integer(static_cast<long long>(i)), integer(grids[i].occupancy()), grids[i].str()});
  }
  result.text = grids_text(grids);
  return result;
}

Result do_grid_es_count(int m, int n, const std::string& method, const EnumCaps& caps) {
  const CountMethod how = method == "brute" ? CountMethod::brute : method == "lr" ? CountMethod::lr
                                                                                   : CountMethod::automatic;
  const auto count = es_count(m, n, how, caps);
  Result result;
  result.table.columns = {"m", "n", "method", "count"};
  result.table.rows.push_back({integer(m), integer(n), method, big(count)});
  result.text = count.get_str() + "\n";
  return result;
}

Result do_grid_pattern(const std::string& name, int m, int n) {
  const auto g = generate_pattern(name, m, n);
  const auto flags = classify_2d(g);
  Result result;
  result.table.columns = {"pattern", "m", "n", "occupancy", "permissible", "jammed",
                          "p_resistant", "a_resistant", "es", "grid"};
  result.table.rows.push_back({name, integer(m), integer(n), integer(g.occupancy()), flags.permissible, flags.jammed,
                               flags.p_resistant, flags.a_resistant, flags.es, g.str()});
  result.text = g.str();
  return result;
}

Result do_grid_bounds(int m, int n, bool brute, const EnumCaps& caps) {
  Result result;
  result.table.columns = {"m", "n", "min_occupancy_bound", "es_occupancy", "brute_min_occupancy"};
  Value es = std::monostate{};
  try {
    es = integer(es_occupancy(m, n));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoESExists) throw;
  }
  Value brute_min = std::monostate{};
  if (brute) {
    const auto grids = enumerate_2d(m, n, Family::riviera, caps);
    int best = m * n;
    for (const auto& g : grids) best = std::min(best, g.occupancy());
    brute_min = integer(best);
  }
  result.table.rows.push_back({integer(m), integer(n), integer(min_occupancy_bound(m, n)), es, brute_min});
  return result;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return kExitCapExceeded;
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfSupport:
    case ErrorKind::UnsupportedSize:
    case ErrorKind::NoESExists:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InsufficientTable: return kExitBadArguments;
    default: return kExitMismatch;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, generating functions and entropy curves for jammed Riviera configurations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--out", out_path, "write to a file instead of stdout");
  };

  std::string family_name = "predator";
  std::string method;
  int n_max = 18;
  int max_index = 30;
  std::string axis = "length";
  RhoGrid grid;
  int n_lots = 2000;
  int m = 3;
  int n = 3;
  std::string pattern;
  bool brute = false;

  auto* count = app.add_subcommand("count", "J(k,n) rows for one family and method");
  count->add_option("--family", family_name)->required();
  count->add_option("--n-max", n_max)->required();
  count->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "series", "recurrence", "closed-form", "digraph"}))
      ->default_str("recurrence");
  add_output(count);

  auto* verify = app.add_subcommand("verify", "cross-check every applicable counting method");
  verify->add_option("--family", family_name)->required();
  verify->add_option("--n-max", n_max)->required();
  add_output(verify);

  auto* sequence = app.add_subcommand("sequence", "length or occupancy totals with recurrence residuals");
  sequence->add_option("--family", family_name)->required();
  sequence->add_option("--axis", axis)->check(CLI::IsMember({"length", "occupancy"}));
  sequence->add_option("--max", max_index);
  add_output(sequence);

  auto* complexity = app.add_subcommand("complexity", "entropy curve samples");
  complexity->add_option("--family", family_name)->required();
  complexity->add_option("--method", method)->check(CLI::IsMember({"closed", "kl", "empirical"}))->default_str("closed");
  complexity->add_option("--rho-from", grid.from);
  complexity->add_option("--rho-to", grid.to);
  complexity->add_option("--points", grid.points);
  complexity->add_option("--n", n_lots, "strip length for the empirical method");
  add_output(complexity);

  auto* seed = app.add_subcommand("seed-figures", "closed curves and empirical riviera points");
  int seed_points = 50;
  int seed_n = 400;
  seed->add_option("--points", seed_points);
  seed->add_option("--n", seed_n);
  add_output(seed);

  auto* grid2d = app.add_subcommand("grid2d", "two-dimensional jobs");
  grid2d->require_subcommand(1);
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--m", m, "rows")->required();
    sub->add_option("--n", n, "columns")->required();
    add_output(sub);
  };
  auto* g_enum = grid2d->add_subcommand("enumerate", "all family members on an m x n tract");
  add_dims(g_enum);
  g_enum->add_option("--family", family_name);
  auto* g_es = grid2d->add_subcommand("es-count", "number of ES configurations");
  add_dims(g_es);
  std::string es_method = "auto";
  g_es->add_option("--method", es_method)->check(CLI::IsMember({"brute", "lr", "auto"}));
  auto* g_pattern = grid2d->add_subcommand("pattern", "generate check, brick, rake, stripe or rake_stripe");
  add_dims(g_pattern);
  g_pattern->add_option("--name", pattern)->required();
  auto* g_bounds = grid2d->add_subcommand("bounds", "occupancy bounds for an m x n tract");
  add_dims(g_bounds);
  g_bounds->add_flag("--brute", brute, "also brute-force the minimum jammed occupancy");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  const EnumCaps caps = EnumCaps::from_env();
  json job = json::object();
  Result result;
  try {
    if (method.empty()) method = complexity->parsed() ? "closed" : "recurrence";
    if (count->parsed()) {
      const Family family = parse_family(family_name);
      job = {{"subcommand", "count"}, {"family", to_string(family)}, {"n_max", n_max}, {"method", method}};
      result = do_count(family, method, n_max, caps);
    } else if (verify->parsed()) {
      const Family family = parse_family(family_name);
      job = {{"subcommand", "verify"}, {"family", to_string(family)}, {"n_max", n_max}};
      result = do_verify(family, n_max, caps, err);
    } else if (sequence->parsed()) {
      const Family family = parse_family(family_name);
      job = {{"subcommand", "sequence"}, {"family", to_string(family)}, {"axis", axis}, {"max", max_index}};
      result = do_sequence(family, axis, max_index);
    } else if (complexity->parsed()) {
      const Family family = parse_family(family_name);
      job = {{"subcommand", "complexity"}, {"family", to_string(family)}, {"method", method}, {"points", grid.points}};
      if (grid.from) job["rho_from"] = *grid.from;
      if (grid.to) job["rho_to"] = *grid.to;
      if (method == "empirical") job["n"] = n_lots;
      result = do_complexity(family, method, grid, n_lots);
    } else if (seed->parsed()) {
      job = {{"subcommand", "seed-figures"}, {"points", seed_points}, {"n", seed_n}};
      if (seed_points < 1) bad_argument("--points must be >= 1");
      result = do_seed_figures(seed_points, seed_n);
    } else if (g_enum->parsed()) {
      const Family family = parse_family(family_name);
      job = {{"subcommand", "grid2d enumerate"}, {"m", m}, {"n", n}, {"family", to_string(family)}};
      result = do_grid_enumerate(m, n, family, caps);
    } else if (g_es->parsed()) {
      job = {{"subcommand", "grid2d es-count"}, {"m", m}, {"n", n}, {"method", es_method}};
      result = do_grid_es_count(m, n, es_method, caps);
    } else if (g_pattern->parsed()) {
      job = {{"subcommand", "grid2d pattern"}, {"m", m}, {"n", n}, {"name", pattern}};
      result = do_grid_pattern(pattern, m, n);
    } else if (g_bounds->parsed()) {
      job = {{"subcommand", "grid2d bounds"}, {"m", m}, {"n", n}, {"brute", brute}};
      result = do_grid_bounds(m, n, brute, caps);
    }
    if (format == "text" && !result.text) bad_argument("--format text is only available for grid2d jobs");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitBadArguments;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;
  if (format == "json") {
    write_json(sink, result.table, job);
  } else if (format == "text") {
    sink << *result.text;
  } else {
    write_csv(sink, result.table);
  }
  return result.code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace riviera::cli
