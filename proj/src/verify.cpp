#include "dycklat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

#include "dycklat/bijections.hpp"
#include "dycklat/kernels.hpp"
#include "dycklat/motzkin.hpp"
#include "dycklat/reference.hpp"

namespace dycklat {
namespace {

using Histogram = std::map<int, std::int64_t>;

template <typename Map>
Histogram signed_histogram(const Map& m) {
  Histogram out;
  for (const auto& [k, v] : m) {
    if (v != 0) out[k] = static_cast<std::int64_t>(v);
  }
  return out;
}

std::string show(const Histogram& h) {
  std::string out = "{";
  for (const auto& [k, v] : h) {
    if (out.size() > 1) out += ',';
    out += std::to_string(k) + ':' + std::to_string(v);
  }
  return out + '}';
}

std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const std::string& v) { return v; }

class Cell {
 public:
  Cell(std::string check, FamilyParam p) { result_.check = std::move(check), result_.family = p; }

  void touch(std::initializer_list<const char*> ops) { ops_.insert(ops.begin(), ops.end()); }

  template <typename T>
  void expect(int n, const std::string& what, const T& expected, const T& got) {
    ++result_.comparisons;
    if (expected == got || !result_.passed) {
      if (!(expected == got)) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.counterexample = "n=" + std::to_string(n) + " " + what + ": expected " + show(expected) + ", got " + show(got);
  }

  void expect_true(int n, const std::string& what, bool ok) { expect(n, what, true, ok); }

  /// Runs `body`, turning library errors into a failure of this cell.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      result_.passed = false;
      if (result_.counterexample.empty()) result_.counterexample = std::string("error: ") + e.what();
    }
  }

  CheckCell& result() { return result_; }
  const std::set<std::string>& ops() const { return ops_; }

 private:
  CheckCell result_;
  std::set<std::string> ops_;
};

struct Context {
  FamilyParam p;
  int n_max;
  int order;
  bool fault;
};

bool is_two(FamilyParam p) { return !p.is_infinite() && p.value() == 2; }

void check_elements(Cell& c, const Context& ctx) {
  c.touch({"parse_path", "enumerate_family", "in_family", "path_type", "decompose", "height_profile", "area",
           "lattice_rank", "leq", "meet", "join"});
  const TruncatedSeries sizes = gf_family_size(ctx.p, ctx.order);
  for (int n = 0; n <= ctx.n_max; ++n) {
    const std::vector<DyckPath> elems = enumerate_family(n, ctx.p);
    const auto count = static_cast<std::int64_t>(elems.size());
    c.expect(n, "family size vs series", integer_total(sizes, n), count);
    c.expect(n, "family size vs recurrence", static_cast<std::int64_t>(family_size(n, ctx.p)), count);
    if (n == 0) continue;
    int max_area = 0;
    for (const DyckPath& e : elems) {
      c.expect(n, "parse round trip", e.to_string(), parse_path(e.to_string()).to_string());
      c.expect_true(n, "member " + e.to_string(), in_family(e, ctx.p));
      const Decomposition d = decompose(e, ctx.p);
      c.expect(n, "type of " + e.to_string(), static_cast<std::int64_t>(path_type(e)), static_cast<std::int64_t>(d.type));
      c.expect(n, "reassemble " + e.to_string(), e.to_string(), reassemble(d.type, d.inner).to_string());
      c.expect(n, "profile round trip", e.to_string(), height_profile(e).to_path().to_string());
      max_area = std::max(max_area, area(e));
    }
    c.expect(n, "rank", lattice_rank(n, ctx.p), static_cast<std::int64_t>(max_area));
    c.expect(n, "top has maximal area", static_cast<std::int64_t>(max_area),
             static_cast<std::int64_t>(area(lattice_top(n, ctx.p))));
    for (const DyckPath& a : elems) {
      c.expect_true(n, "bottom below " + a.to_string(), leq(lattice_bottom(n), a));
      for (const DyckPath& b : elems) {
        const DyckPath m = meet(a, b);
        const DyckPath j = join(a, b);
        c.expect_true(n, "meet of " + a.to_string() + "," + b.to_string(),
                      in_family(m, ctx.p) && leq(m, a) && leq(m, b));
        c.expect_true(n, "join of " + a.to_string() + "," + b.to_string(),
                      in_family(j, ctx.p) && leq(a, j) && leq(b, j));
      }
    }
  }
}

// Upper covers counted directly from the step string; with `fault` the
// descent bound is one too small.
int direct_upper_covers(const DyckPath& e, FamilyParam p, bool fault) {
  int count = 0;
  for (int i = 0; i + 1 < e.length(); ++i) {
    if (e.is_up(i) || !e.is_up(i + 1)) continue;
    const DyckPath q = e.with_swapped(i);
    if (contains_duu(q)) continue;
    if (!p.is_infinite() && longest_descent_run(q) > p.value() - (fault ? 1 : 0)) continue;
    ++count;
  }
  return count;
}

void check_covers(Cell& c, const Context& ctx) {
  c.touch({"upper_covers", "lower_covers", "gf_F"});
  const TruncatedSeries f = gf_F(ctx.p, ctx.order);
  for (int n = 1; n <= ctx.n_max; ++n) {
    const Histogram expected = integer_coefficients(f, n);
    std::map<int, std::int64_t> direct;
    std::map<int, std::int64_t> up;
    std::map<int, std::int64_t> down;
    for (const DyckPath& e : enumerate_family(n, ctx.p)) {
      ++direct[direct_upper_covers(e, ctx.p, ctx.fault)];
      ++up[static_cast<int>(upper_covers(e, ctx.p).size())];
      ++down[static_cast<int>(lower_covers(e, ctx.p).size())];
    }
    const Lattice lattice(n, ctx.p);
    c.expect(n, "upper covers (direct) vs series", expected, signed_histogram(direct));
    c.expect(n, "upper covers vs series", expected, signed_histogram(up));
    c.expect(n, "lower covers vs series", expected, signed_histogram(down));
    c.expect(n, "upper kernel vs series", expected, signed_histogram(kernels::upper_cover_histogram(lattice)));
    c.expect(n, "lower kernel vs series", expected, signed_histogram(kernels::lower_cover_histogram(lattice)));
  }
}

void check_coverings(Cell& c, const Context& ctx) {
  c.touch({"hasse_edges", "gf_coverings"});
  const TruncatedSeries cov = gf_coverings(ctx.p, ctx.order);
  for (int n = 0; n <= ctx.n_max; ++n) {
    const auto edges = static_cast<std::int64_t>(n == 0 ? 0 : hasse_edges(n, ctx.p).size());
    c.expect(n, "cover pairs vs series", integer_total(cov, n), edges);
  }
}

void check_meet_irreducibles(Cell& c, const Context& ctx) {
  c.touch({"meet_irreducibles", "gf_meet_irreducible", "turan_edges"});
  const TruncatedSeries f1 = gf_meet_irreducible(ctx.p, ctx.order);
  for (int n = 1; n <= ctx.n_max; ++n) {
    const auto count = static_cast<std::int64_t>(meet_irreducibles(n, ctx.p).size());
    c.expect(n, "meet-irreducibles vs series", integer_total(f1, n), count);
    c.expect(n, "meet-irreducibles vs floor formula", closed_b(n, ctx.p), count);
    if (!ctx.p.is_infinite()) c.expect(n, "meet-irreducibles vs Turan graph", turan_edges(n, ctx.p.value()), count);
  }
}

void check_boolean(Cell& c, const Context& ctx) {
  c.touch({"gf_B", "is_boolean", "count_intervals", "mobius", "mobius_bruteforce", "interval_elements"});
  const TruncatedSeries b = gf_B(ctx.p, ctx.order);
  for (int n = 1; n <= ctx.n_max; ++n) {
    const Lattice lattice(n, ctx.p);
    const Histogram counted = signed_histogram(count_intervals(lattice, IntervalKind::Boolean).counts);
    c.expect(n, "boolean intervals vs series", integer_coefficients(b, n), counted);
    const MobiusSweep sweep = kernels::mobius_sweep(lattice);
    std::string where = "none";
    if (sweep.first_failure) {
      where = lattice.element(sweep.first_failure->first).to_string() + " .. " +
              lattice.element(sweep.first_failure->second).to_string();
    }
    c.expect(n, "Moebius closed form and row sums", std::string("none"), where);
    if (n <= 6) {
      c.expect(n, "boolean kernel vs pair loop", counted,
               signed_histogram(reference::count_intervals(n, ctx.p, IntervalKind::Boolean).counts));
    }
    if (n <= 5) c.expect_true(n, "Moebius by direct recursion", reference::mobius_sweep(n, ctx.p).ok());
  }
}

void check_linear(Cell& c, const Context& ctx) {
  c.touch({"gf_L", "is_linear", "classify_linear", "interval_height"});
  const TruncatedSeries l = gf_L(ctx.p, ctx.order);
  for (int n = 1; n <= ctx.n_max; ++n) {
    const Histogram counted = signed_histogram(count_intervals(Lattice(n, ctx.p), IntervalKind::Linear).counts);
    c.expect(n, "linear intervals vs series", integer_coefficients(l, n), counted);
    if (n > 7) continue;
    c.expect(n, "linear kernel vs pair loop", counted,
             signed_histogram(reference::count_intervals(n, ctx.p, IntervalKind::Linear).counts));
    const std::vector<DyckPath> elems = enumerate_family(n, ctx.p);
    for (const DyckPath& lo : elems) {
      for (const DyckPath& hi : elems) {
        if (lo == hi || !leq(lo, hi)) continue;
        const Interval iv(lo, hi, ctx.p);
        const bool shaped = classify_linear(iv) != LinearForm::NotLinear;
        c.expect(n, "classify [" + lo.to_string() + "," + hi.to_string() + "]", is_linear(iv), shaped);
      }
    }
  }
}

void check_intervals(Cell& c, const Context& ctx) {
  c.touch({"count_intervals", "count_avoiding", "forbidden_patterns"});
  const std::int64_t patterns = ctx.p.is_infinite() ? 0 : is_two(ctx.p) ? 7 : (std::int64_t{2} << ctx.p.value()) - 1;
  c.expect(0, "forbidden pattern count", patterns, static_cast<std::int64_t>(forbidden_patterns(ctx.p).size()));
  const bool has_series = ctx.p.is_infinite() || is_two(ctx.p);
  TruncatedSeries series(0);
  if (ctx.p.is_infinite()) {
    c.touch({"gf_I"});
    series = gf_I(ctx.order);
  } else if (is_two(ctx.p)) {
    c.touch({"gf_J"});
    series = gf_J(ctx.order);
  }
  const TruncatedSeries j1 = is_two(ctx.p) ? gf_J_at_one(ctx.order) : TruncatedSeries(0);
  for (int n = 1; n <= ctx.n_max; ++n) {
    const Histogram counted = signed_histogram(count_intervals(Lattice(n, ctx.p), IntervalKind::All).counts);
    if (has_series) c.expect(n, "intervals vs series", integer_coefficients(series, n), counted);
    if (is_two(ctx.p)) {
      std::int64_t total = 0;
      for (const auto& [k, v] : counted) total += v;
      c.expect(n, "interval total vs J(x,1)", integer_total(j1, n), total);
    }
    c.expect(n, "intervals vs Motzkin words", signed_histogram(count_avoiding_by_height(n - 1, ctx.p)), counted);
  }
}

void check_motzkin(Cell& c, const Context& ctx) {
  c.touch({"interval_to_motzkin", "motzkin_to_interval"});
  for (int n = 1; n <= std::min(ctx.n_max, 7); ++n) {
    const std::vector<DyckPath> elems = enumerate_family(n, ctx.p);
    for (const DyckPath& lo : elems) {
      for (const DyckPath& hi : elems) {
        if (!leq(lo, hi)) continue;
        const Interval iv(lo, hi, ctx.p);
        const BicoloredMotzkinPath w = interval_to_motzkin(iv);
        c.expect(n, "interval round trip [" + lo.to_string() + "," + hi.to_string() + "]", true,
                 motzkin_to_interval(w, ctx.p) == iv);
        c.expect(n, "final height", static_cast<std::int64_t>(first_ascent(hi) - first_ascent(lo)),
                 static_cast<std::int64_t>(w.final_height()));
      }
    }
    for (const BicoloredMotzkinPath& w : enumerate_avoiding(n - 1, ctx.p)) {
      c.expect(n, "word round trip " + w.to_string(), w.to_string(),
               interval_to_motzkin(motzkin_to_interval(w, ctx.p)).to_string());
    }
  }
}

void check_bijections(Cell& c, const Context& ctx) {
  c.touch({"to_catalan_word", "from_catalan_word", "to_composition", "from_composition", "dominance_leq", "to_subset",
           "from_subset", "subset_rank", "subset_interval_check", "catalan_interval_check"});
  for (int n = 1; n <= ctx.n_max; ++n) {
    const std::vector<DyckPath> elems = enumerate_family(n, ctx.p);
    for (const DyckPath& e : elems) {
      const std::string s = e.to_string();
      c.expect(n, "Catalan round trip " + s, s, from_catalan_word(to_catalan_word(e), ctx.p).to_string());
      c.expect(n, "composition round trip " + s, s, from_composition(to_composition(e), ctx.p).to_string());
      c.expect(n, "subset round trip " + s, s, from_subset(to_subset(e), ctx.p).to_string());
      c.expect(n, "subset rank " + s, static_cast<std::int64_t>(area(e)),
               static_cast<std::int64_t>(subset_rank(to_subset(e))));
    }
    for (const DyckPath& a : elems) {
      for (const DyckPath& b : elems) {
        const bool below = leq(a, b);
        const std::string pair = "[" + a.to_string() + "," + b.to_string() + "]";
        c.expect(n, "dominance " + pair, below, dominance_leq(to_composition(a), to_composition(b)));
        c.expect(n, "Catalan order " + pair, below, catalan_interval_check(to_catalan_word(a), to_catalan_word(b)));
        // Only the necessary direction of the subset criterion holds in general.
        if (below) c.expect_true(n, "subset criterion " + pair, subset_interval_check(to_subset(a), to_subset(b), ctx.p));
      }
    }
    if (ctx.p.is_infinite()) {
      c.touch({"complement_involution"});
      const auto edges = hasse_edges(n, ctx.p);
      std::set<std::pair<std::string, std::string>> edge_set;
      for (const auto& [lo, hi] : edges) edge_set.emplace(lo.to_string(), hi.to_string());
      for (const auto& [lo, hi] : edges) {
        const DyckPath clo = from_subset(complement_involution(to_subset(lo)), ctx.p);
        const DyckPath chi = from_subset(complement_involution(to_subset(hi)), ctx.p);
        c.expect_true(n, "complement reverses " + lo.to_string() + " < " + hi.to_string(),
                      edge_set.count({chi.to_string(), clo.to_string()}) == 1);
        c.expect_true(n, "complement is an involution",
                      complement_involution(complement_involution(to_subset(lo))) == to_subset(lo));
      }
    }
  }
}

void check_series(Cell& c, const Context& ctx) {
  c.touch({"add", "div", "sqrt", "deriv_y", "eval_y", "subst_y_shift"});
  const int order = ctx.order;
  const TruncatedSeries x = TruncatedSeries::x(order);
  const TruncatedSeries y = TruncatedSeries::y(order);
  const TruncatedSeries one = TruncatedSeries::constant(Rational(1), order);
  const TruncatedSeries radicand = one - TruncatedSeries::constant(Rational(4), order) * x;
  const TruncatedSeries root = sqrt(radicand);
  c.expect_true(0, "sqrt squared", root * root == radicand);
  const TruncatedSeries num = one + x * y.pow(2) - x.pow(3);
  const TruncatedSeries den = one - TruncatedSeries::constant(Rational(2), order) * x + x.pow(3) * y;
  c.expect_true(0, "quotient times denominator", (num / den) * den == num);
  c.expect_true(0, "addition inverts subtraction", (num - den) + den == num);

  const TruncatedSeries f = gf_F(ctx.p, order);
  c.expect_true(0, "B is F shifted in y", gf_B(ctx.p, order) == subst_y_shift(f));
  c.expect_true(0, "coverings are dF/dy at 1", gf_coverings(ctx.p, order) == eval_y(deriv_y(f), Rational(1)));
  c.expect_true(0, "F at y=1 counts elements", eval_y(f, Rational(1)) == gf_family_size(ctx.p, order));
  if (!ctx.p.is_infinite()) {
    const TruncatedSeries f_inf = gf_F(FamilyParam::infinity(), order);
    for (int n = 0; n < std::min(ctx.p.value(), order); ++n) {
      c.expect(n, "F_p agrees with F_inf below x^p", integer_coefficients(f_inf, n), integer_coefficients(f, n));
    }
  }
  std::vector<TruncatedSeries> counting = {f, gf_B(ctx.p, order), gf_coverings(ctx.p, order),
                                           gf_meet_irreducible(ctx.p, order), gf_L(ctx.p, order)};
  if (ctx.p.is_infinite()) counting.push_back(gf_I(order));
  if (is_two(ctx.p)) {
    counting.push_back(gf_J(order));
    counting.push_back(gf_J_at_one(order));
  }
  for (const TruncatedSeries& s : counting) {
    for (int n = 0; n < s.order(); ++n) integer_coefficients(s, n);  // throws NonIntegral
  }
  c.expect_true(0, "counting coefficients are integers", true);
}

struct CheckDef {
  const char* name;
  void (*run)(Cell&, const Context&);
};

constexpr CheckDef kChecks[] = {
    {"elements", check_elements},
    {"covers", check_covers},
    {"coverings", check_coverings},
    {"meet-irreducibles", check_meet_irreducibles},
    {"boolean+moebius", check_boolean},
    {"linear", check_linear},
    {"intervals", check_intervals},
    {"motzkin", check_motzkin},
    {"bijections", check_bijections},
    {"series", check_series},
};

}  // namespace

const std::vector<std::string>& checked_operations() {
  static const std::vector<std::string> ops = {
      "parse_path", "in_family", "enumerate_family", "path_type", "decompose", "height_profile", "area", "leq",
      "meet", "join", "upper_covers", "lower_covers", "meet_irreducibles", "turan_edges", "lattice_rank",
      "hasse_edges", "interval_height", "interval_elements", "is_boolean", "mobius", "mobius_bruteforce",
      "is_linear", "classify_linear", "count_intervals", "forbidden_patterns", "count_avoiding",
      "interval_to_motzkin", "motzkin_to_interval", "to_catalan_word", "from_catalan_word", "to_composition",
      "from_composition", "dominance_leq", "to_subset", "from_subset", "subset_rank", "complement_involution",
      "subset_interval_check", "catalan_interval_check", "add", "div", "sqrt", "deriv_y", "eval_y",
      "subst_y_shift", "gf_F", "gf_B", "gf_coverings", "gf_meet_irreducible", "gf_L", "gf_I", "gf_J"};
  return ops;
}

bool CheckReport::ok() const {
  return std::all_of(cells.begin(), cells.end(), [](const CheckCell& c) { return c.passed; });
}

std::string CheckReport::render() const {
  std::vector<std::string> checks;
  std::vector<std::string> families;
  std::map<std::pair<std::string, std::string>, const CheckCell*> grid;
  for (const CheckCell& cell : cells) {
    if (std::find(checks.begin(), checks.end(), cell.check) == checks.end()) checks.push_back(cell.check);
    const std::string fam = "p=" + cell.family.to_string();
    if (std::find(families.begin(), families.end(), fam) == families.end()) families.push_back(fam);
    grid[{cell.check, fam}] = &cell;
  }
  std::ostringstream out;
  out << std::left;
  out.width(20);
  out << "check";
  for (const std::string& f : families) {
    out.width(8);
    out << f;
  }
  out << '\n';
  for (const std::string& check : checks) {
    out.width(20);
    out << check;
    for (const std::string& f : families) {
      out.width(8);
      out << (grid[{check, f}]->passed ? "PASS" : "FAIL");
    }
    out << '\n';
  }
  for (const CheckCell& cell : cells) {
    if (!cell.passed) out << "counterexample " << cell.check << " p=" << cell.family.to_string() << ": " << cell.counterexample << '\n';
  }
  out << "coverage: " << exercised.size() << '/' << checked_operations().size() << " operations";
  if (!missing.empty()) {
    out << ", missing:";
    for (const std::string& m : missing) out << ' ' << m;
  }
  out << '\n' << (ok() ? "ALL PASS" : "MISMATCH") << '\n';
  return out.str();
}

CheckReport run_checks(const CheckOptions& options) {
  for (const FamilyParam& p : options.families) {
    const std::uint64_t size = family_size(options.n_max, p);
    if (size > kMaxPairComparisons / size) {
      throw Error(ErrorKind::SizeGuard, "n-max " + std::to_string(options.n_max) + " too large for p=" + p.to_string());
    }
  }
  const Context base{FamilyParam::infinity(), options.n_max, std::max(options.order, options.n_max + 2),
                     options.inject_cover_fault};
  const std::size_t n_checks = std::size(kChecks);
  const std::size_t n_cells = n_checks * options.families.size();
  std::vector<Cell> cells;
  cells.reserve(n_cells);
  for (const FamilyParam& p : options.families) {
    for (const CheckDef& def : kChecks) cells.emplace_back(def.name, p);
  }

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n_cells); ++k) {
    Cell& cell = cells[static_cast<std::size_t>(k)];
    Context ctx = base;
    ctx.p = cell.result().family;
    const CheckDef& def = kChecks[static_cast<std::size_t>(k) % n_checks];
    cell.guarded([&] { def.run(cell, ctx); });
  }

  CheckReport report;
  // Cells are laid out family-major; present them check-major.
  for (const CheckDef& def : kChecks) {
    for (Cell& cell : cells) {
      if (cell.result().check == def.name) report.cells.push_back(cell.result());
    }
  }
  for (const Cell& cell : cells) report.exercised.insert(cell.ops().begin(), cell.ops().end());
  for (const std::string& op : checked_operations()) {
    if (report.exercised.count(op) == 0) report.missing.push_back(op);
  }
  return report;
}

}  // namespace dycklat
