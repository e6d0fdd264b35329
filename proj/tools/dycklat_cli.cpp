// dycklat: enumerate, count and cross-check the lattices F_n^p.
//
//   dycklat enum   --n 5 --p 2 [--format steps|catalan|composition|subset]
//   dycklat count  --n 5 --p inf --what intervals [--by height]
//   dycklat series --p 2 --gf L [--order 12]
//   dycklat check  --n-max 8 --p 2,3,inf
//   dycklat hasse  --n 5 --p 2
//   dycklat biject --target motzkin --direction to < intervals.jsonl
//
// Exit codes: 0 ok, 1 check mismatch, 2 usage or bad input, 3 size guard.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dycklat/kernels.hpp"
#include "dycklat/records.hpp"
#include "dycklat/series.hpp"
#include "dycklat/verify.hpp"

using namespace dycklat;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

struct Args {
  int n = -1;
  std::string p = "inf";
  int order = kDefaultOrder;
  std::string format = "steps";
  std::string by = "none";
  std::string out;
  std::string what = "elements";
  std::string gf = "F";
  int n_max = 8;
  bool inject_fault = false;
  std::string target = "motzkin";
  std::string direction = "to";
};

std::string csv_family(FamilyParam p) { return p.to_string(); }

void emit_counts(std::ostream& out, const Args& a, FamilyParam p, const std::map<int, std::uint64_t>& by_height) {
  if (a.by == "height") {
    out << "n,p,kind,height,count\n";
    for (const auto& [h, c] : by_height) out << a.n << ',' << csv_family(p) << ',' << a.what << ',' << h << ',' << c << '\n';
    return;
  }
  std::uint64_t total = 0;
  for (const auto& [h, c] : by_height) total += c;
  out << "n,p,kind,count\n" << a.n << ',' << csv_family(p) << ',' << a.what << ',' << total << '\n';
}

void cmd_enum(std::ostream& out, const Args& a) {
  const FamilyParam p = FamilyParam::parse(a.p);
  const PathFormat format = parse_path_format(a.format);
  for (const DyckPath& e : enumerate_family(a.n, p)) out << path_to_json(e, p, format).dump() << '\n';
}

void cmd_count(std::ostream& out, const Args& a) {
  const FamilyParam p = FamilyParam::parse(a.p);
  std::map<int, std::uint64_t> hist;
  if (a.what == "elements" || a.what == "meet-irr") {
    const std::vector<DyckPath> paths = a.what == "elements" ? enumerate_family(a.n, p) : meet_irreducibles(a.n, p);
    for (const DyckPath& e : paths) ++hist[area(e)];
    if (paths.empty()) hist[0] = 0;
  } else if (a.what == "covers") {
    // Grouped by height this is the distribution of upper-cover counts per element.
    if (a.by == "height") {
      hist = kernels::upper_cover_histogram(Lattice(a.n, p));
    } else {
      hist[0] = a.n == 0 ? 0 : hasse_edges(a.n, p).size();
    }
  } else if (a.what == "boolean" || a.what == "linear" || a.what == "intervals") {
    const IntervalKind kind = a.what == "boolean"  ? IntervalKind::Boolean
                              : a.what == "linear" ? IntervalKind::Linear
                                                   : IntervalKind::All;
    hist = count_intervals(Lattice(a.n, p), kind).counts;
  } else {
    throw CLI::ValidationError("--what", "unknown kind " + a.what);
  }
  emit_counts(out, a, p, hist);
}

TruncatedSeries pick_series(const std::string& name, FamilyParam p, int order) {
  if (name == "fib") return gf_family_size(p, order);
  if (name == "F") return gf_F(p, order);
  if (name == "B") return gf_B(p, order);
  if (name == "coverings") return gf_coverings(p, order);
  if (name == "meet-irr") return gf_meet_irreducible(p, order);
  if (name == "L") return gf_L(p, order);
  if (name == "I") return gf_I(order);
  if (name == "J") return gf_J(order);
  if (name == "J1") return gf_J_at_one(order);
  throw CLI::ValidationError("--gf", "unknown series " + name);
}

void cmd_series(std::ostream& out, const Args& a) {
  const FamilyParam p = FamilyParam::parse(a.p);
  const TruncatedSeries s = pick_series(a.gf, p, a.order);
  for (int n = 0; n < s.order(); ++n) out << n << ' ' << s.coeff(n).to_string() << '\n';
}

std::vector<FamilyParam> parse_family_list(const std::string& text) {
  std::vector<FamilyParam> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(FamilyParam::parse(item));
  if (out.empty()) throw Error(ErrorKind::InvalidFamily, "empty family list");
  return out;
}

int cmd_check(std::ostream& out, const Args& a) {
  CheckOptions options;
  options.n_max = a.n_max;
  options.families = parse_family_list(a.p);
  options.order = a.order;
  options.inject_cover_fault = a.inject_fault;
  const CheckReport report = run_checks(options);
  out << report.render();
  return report.ok() ? 0 : kExitMismatch;
}

void cmd_hasse(std::ostream& out, const Args& a) {
  const FamilyParam p = FamilyParam::parse(a.p);
  out << "digraph F_" << a.n << '_' << p.to_string() << " {\n";
  for (const DyckPath& e : enumerate_family(a.n, p)) out << "  \"" << e.to_string() << "\";\n";
  if (a.n > 0) {
    for (const auto& [lo, hi] : hasse_edges(a.n, p)) {
      out << "  \"" << lo.to_string() << "\" -> \"" << hi.to_string() << "\";\n";
    }
  }
  out << "}\n";
}

void cmd_biject(std::istream& in, std::ostream& out, const Args& a) {
  std::optional<FamilyParam> fallback;
  if (!a.p.empty()) fallback = FamilyParam::parse(a.p);
  const bool forward = a.direction == "to";
  if (!forward && a.direction != "from") throw CLI::ValidationError("--direction", "expected to|from");
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::BadRecord, e.what());
    }
    if (a.target == "motzkin") {
      if (forward) {
        const Interval iv = interval_from_json(record, fallback);
        out << motzkin_to_json(interval_to_motzkin(iv), iv.family()).dump() << '\n';
      } else {
        const MotzkinRecord w = motzkin_from_json(record, fallback);
        out << interval_to_json(motzkin_to_interval(w.word, w.p)).dump() << '\n';
      }
      continue;
    }
    const PathFormat format = parse_path_format(a.target);
    const PathRecord r = path_from_json(record, fallback);
    out << path_to_json(r.path, r.p, forward ? format : PathFormat::Steps).dump() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dyck path lattices avoiding DUU and long descents"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--out", a.out, "Write output to this file instead of stdout");
  app.add_option("--order", a.order, "Truncation order for series")->check(CLI::Range(1, 200));
  app.add_option("--n", a.n, "Semilength")->check(CLI::Range(0, DyckPath::kMaxSemilength));
  app.add_option("--p", a.p, "Descent bound: an integer >= 2 or inf (check accepts a comma list)");
  app.add_option("--format", a.format, "Path format")->check(CLI::IsMember({"steps", "catalan", "composition", "subset"}));
  app.add_option("--by", a.by, "Group counts")->check(CLI::IsMember({"none", "height"}));

  CLI::App* enum_cmd = app.add_subcommand("enum", "List the elements of F_n^p as JSON lines")->fallthrough();
  CLI::App* count_cmd = app.add_subcommand("count", "Count elements, covers, irreducibles or intervals")->fallthrough();
  count_cmd->add_option("--what", a.what)
      ->check(CLI::IsMember({"elements", "covers", "meet-irr", "boolean", "linear", "intervals"}));
  CLI::App* series_cmd = app.add_subcommand("series", "Print generating-function coefficients")->fallthrough();
  series_cmd->add_option("--gf", a.gf)
      ->check(CLI::IsMember({"fib", "F", "B", "coverings", "meet-irr", "L", "I", "J", "J1"}));
  CLI::App* check_cmd = app.add_subcommand("check", "Compare brute-force counts with the series")->fallthrough();
  check_cmd->add_option("--n-max", a.n_max)->check(CLI::Range(0, DyckPath::kMaxSemilength));
  check_cmd->add_flag("--inject-fault", a.inject_fault)->group("");
  CLI::App* hasse_cmd = app.add_subcommand("hasse", "Print the Hasse diagram as DOT")->fallthrough();
  CLI::App* biject_cmd = app.add_subcommand("biject", "Convert JSON-line records read from stdin")->fallthrough();
  biject_cmd->add_option("--target", a.target)
      ->check(CLI::IsMember({"motzkin", "catalan", "composition", "subset"}));
  biject_cmd->add_option("--direction", a.direction)->check(CLI::IsMember({"to", "from"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }
  const bool needs_n = enum_cmd->parsed() || count_cmd->parsed() || hasse_cmd->parsed();
  if (needs_n && a.n < 0) {
    std::cerr << "--n is required\n";
    return kExitUsage;
  }
  if (biject_cmd->parsed() && app.count("--p") == 0) a.p.clear();

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      std::cerr << "cannot open " << a.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = a.out.empty() ? std::cout : file;
  try {
    if (enum_cmd->parsed()) cmd_enum(out, a);
    if (count_cmd->parsed()) cmd_count(out, a);
    if (series_cmd->parsed()) cmd_series(out, a);
    if (hasse_cmd->parsed()) cmd_hasse(out, a);
    if (biject_cmd->parsed()) cmd_biject(std::cin, out, a);
    if (check_cmd->parsed()) return cmd_check(out, a);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::SizeGuard ? kExitTooLarge : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
