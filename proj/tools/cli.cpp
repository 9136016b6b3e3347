#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "dvp/dvp.hpp"

namespace dvp::cli {

std::string format_machine(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_human(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

double round15(double v) { return std::strtod(format_machine(v).c_str(), nullptr); }

namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;

constexpr double kDefaultQuadTol = 1e-10;
constexpr std::int64_t kMaxGrid = 10'000'000;
constexpr std::int64_t kMaxLebesgueN = 2000;
constexpr std::int64_t kVerifyMaxS = 12;
constexpr std::int64_t kVerifyMaxN = 16;

enum class Format { Human, Json, Csv };

// A failure that maps straight to an exit code.
struct CommandError {
  int code;
  std::string message;
};

// ---------------------------------------------------------------------------
// Output assembly

using Cell = std::variant<std::string, std::int64_t, double>;

struct Table {
  std::string title;  // human format only
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  json doc;
  std::vector<std::string> notes;    // human preamble
  std::vector<Table> tables;
  std::vector<std::string> summary;  // human trailer
};

std::string render_cell(const Cell& c, Format fmt) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const double v = std::get<double>(c);
  return fmt == Format::Human ? format_human(v) : format_machine(v);
}

void render_human(const Report& rep, std::ostream& os) {
  for (const auto& line : rep.notes) os << line << '\n';
  for (const Table& t : rep.tables) {
    if (!rep.notes.empty() || &t != &rep.tables.front()) os << '\n';
    if (!t.title.empty()) os << t.title << '\n';
    std::vector<std::vector<std::string>> text;
    text.push_back(t.header);
    for (const auto& row : t.rows) {
      std::vector<std::string> line;
      for (const Cell& c : row) line.push_back(render_cell(c, Format::Human));
      text.push_back(std::move(line));
    }
    std::vector<std::size_t> width(t.header.size(), 0);
    for (const auto& line : text) {
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    for (const auto& line : text) {
      std::string s;
      for (std::size_t i = 0; i < line.size(); ++i) {
        s += line[i];
        if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
      }
      os << s << '\n';
    }
  }
  if (!rep.summary.empty()) os << '\n';
  for (const auto& line : rep.summary) os << line << '\n';
}

void render_csv(const Report& rep, std::ostream& os) {
  for (const Table& t : rep.tables) {
    if (&t != &rep.tables.front()) os << '\n';
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render_cell(row[i], Format::Csv);
      os << '\n';
    }
  }
}

void render(const Report& rep, Format fmt, std::ostream& os) {
  switch (fmt) {
    case Format::Human: render_human(rep, os); break;
    case Format::Csv: render_csv(rep, os); break;
    case Format::Json: os << rep.doc.dump(2) << '\n'; break;
  }
}

json num(double v) { return round15(v); }

json complex_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json params_json(const KernelParams& p) {
  return json{{"r", p.r()}, {"s", p.s()}, {"N", p.N()}, {"n", p.n()}, {"p", p.p()}};
}

std::string params_note(const KernelParams& p) {
  return "kernel V_{rN,sN}: r=" + std::to_string(p.r()) + " s=" + std::to_string(p.s()) +
         " N=" + std::to_string(p.N()) + " (n=" + std::to_string(p.n()) + ", p=" + std::to_string(p.p()) + ")";
}

std::string rational_text(const Rational& q) {
  return std::to_string(q.num()) + "/" + std::to_string(q.den());
}

// ---------------------------------------------------------------------------
// Shared argument handling

struct ParamArgs {
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::int64_t N = 0;

  void attach(CLI::App* app) {
    app->add_option("--r", r, "delay ratio numerator r (0 <= r < s)")->required();
    app->add_option("--s", s, "s, coprime to r")->required();
    app->add_option("--N", N, "family index N >= 1")->required();
  }
  KernelParams make() const { return make_params(r, s, N); }
};

struct PointArgs {
  std::vector<double> x;
  std::string grid;

  void attach(CLI::App* app) {
    auto* xo = app->add_option("--x", x, "evaluation points")->allow_extra_args();
    auto* go = app->add_option("--grid", grid, "K or count=K: the points j/K, j = 0..K-1");
    xo->excludes(go);
  }
};

std::int64_t parse_count(const std::string& text, const char* what) {
  std::string digits = text;
  if (digits.rfind("count=", 0) == 0) digits = digits.substr(6);
  std::int64_t k = 0;
  std::size_t used = 0;
  try {
    k = std::stoll(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != digits.size() || k < 1 || k > kMaxGrid) {
    throw CommandError{kInvalidInput, std::string(what) + ": expected a count between 1 and " +
                                          std::to_string(kMaxGrid) + ", got '" + text + "'"};
  }
  return k;
}

std::vector<double> resolve_points(const PointArgs& a, std::int64_t default_grid) {
  if (!a.x.empty()) {
    for (double v : a.x) {
      if (!std::isfinite(v)) throw CommandError{kInvalidInput, "--x: points must be finite"};
    }
    return a.x;
  }
  const std::int64_t K = a.grid.empty() ? default_grid : parse_count(a.grid, "--grid");
  if (K < 1) throw CommandError{kInvalidInput, "one of --x or --grid is required"};
  std::vector<double> pts(static_cast<std::size_t>(K));
  for (std::int64_t j = 0; j < K; ++j) pts[j] = static_cast<double>(j) / static_cast<double>(K);
  return pts;
}

// Default quadrature tolerance, overridable through DVP_TOL.
double default_tolerance() {
  const char* env = std::getenv("DVP_TOL");
  if (env == nullptr || *env == '\0') return kDefaultQuadTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || v < 1e-13) {
    throw CommandError{kInvalidInput, std::string("DVP_TOL: expected a number >= 1e-13, got '") + env + "'"};
  }
  return v;
}

QuadratureSpec quad_spec(std::optional<double> tol) {
  QuadratureSpec spec;
  spec.abs_tol = tol ? *tol : default_tolerance();
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------
// Commands

Report cmd_eval(const ParamArgs& pa, const PointArgs& pts_args) {
  const KernelParams params = pa.make();
  const std::vector<double> xs = resolve_points(pts_args, 0);
  Report rep;
  rep.notes.push_back(params_note(params));
  Table t{"", {"x", "value"}, {}};
  json points = json::array();
  for (double x : xs) {
    const double v = eval_vp(params, x);
    t.rows.push_back({x, v});
    points.push_back({{"x", num(x)}, {"value", num(v)}});
  }
  rep.tables.push_back(std::move(t));
  rep.doc = {{"command", "eval"}, {"params", params_json(params)}, {"points", std::move(points)}};
  return rep;
}

Report cmd_coeffs(const ParamArgs& pa) {
  const KernelParams params = pa.make();
  Report rep;
  rep.notes.push_back(params_note(params));
  rep.notes.push_back("V(x) = sum_{|j| < sN} c_j e(jx), c_j = v(j/N); c_{-j} = c_j");
  Table t{"", {"j", "coefficient"}, {}};
  json coeffs = json::array();
  for (std::int64_t j = 0; j < params.sN(); ++j) {
    const double c = coefficient(params, j);
    t.rows.push_back({j, c});
    coeffs.push_back(num(c));
  }
  rep.tables.push_back(std::move(t));
  rep.doc = {{"command", "coeffs"}, {"params", params_json(params)}, {"coefficients", std::move(coeffs)}};
  return rep;
}

Report cmd_zeros(const ParamArgs& pa) {
  const KernelParams params = pa.make();
  const ZeroSet zs = enumerate_zeros(params);
  Report rep;
  rep.notes.push_back(params_note(params));
  Table t{"", {"location", "x", "kind", "multiplicity", "a", "b"}, {}};
  json entries = json::array();
  for (const Zero& z : zs.entries) {
    t.rows.push_back({rational_text(z.location), z.location.to_double(), std::string(zero_kind_name(z.kind)),
                      std::int64_t{z.multiplicity}, z.a, z.b});
    entries.push_back({{"location", rational_text(z.location)},
                       {"x", num(z.location.to_double())},
                       {"kind", zero_kind_name(z.kind)},
                       {"multiplicity", z.multiplicity},
                       {"a", z.a},
                       {"b", z.b}});
  }
  rep.tables.push_back(std::move(t));
  rep.summary.push_back("total multiplicity " + std::to_string(zs.total_multiplicity()) + ", double zeros " +
                        std::to_string(zs.double_zero_count()));
  rep.doc = {{"command", "zeros"},
             {"params", params_json(params)},
             {"total_multiplicity", zs.total_multiplicity()},
             {"double_zero_count", zs.double_zero_count()},
             {"zeros", std::move(entries)}};
  return rep;
}

struct NormArgs {
  ParamArgs params;
  std::string method = "all";
  std::optional<double> tol;
};

Report cmd_norm(const NormArgs& a) {
  const KernelParams params = a.params.make();
  const QuadratureSpec spec = quad_spec(a.tol);
  std::vector<std::pair<std::string, NormReport>> results;
  if (a.method == "closed" || a.method == "all") {
    results.emplace_back("closed", norm_closed_form(params.r(), params.s()));
  }
  if (a.method == "piecewise" || a.method == "all") results.emplace_back("piecewise", norm_piecewise_exact(params));
  if (a.method == "quad" || a.method == "all") {
    results.emplace_back("quad", NormReport::make(integrate_abs_kernel(params, spec), NormMethod::Quadrature));
  }

  Report rep;
  rep.notes.push_back(params_note(params));
  Table t{"", {"method", "value", "area_plus", "area_minus"}, {}};
  json list = json::array();
  for (const auto& [name, r] : results) {
    t.rows.push_back({name, r.value, r.area_plus, r.area_minus});
    list.push_back({{"method", name},
                    {"value", num(r.value)},
                    {"area_plus", num(r.area_plus)},
                    {"area_minus", num(r.area_minus)}});
  }
  rep.tables.push_back(std::move(t));
  rep.doc = {{"command", "norm"},
             {"params", params_json(params)},
             {"upper_bound", num(params.norm_upper_bound())},
             {"quadrature_tol", num(spec.abs_tol)},
             {"results", std::move(list)}};
  if (results.size() > 1) {
    double dev = 0.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (std::size_t j = i + 1; j < results.size(); ++j) {
        dev = std::max(dev, std::abs(results[i].second.value - results[j].second.value));
      }
    }
    rep.summary.push_back("max pairwise deviation " + format_human(dev));
    rep.doc["max_deviation"] = num(dev);
  }
  return rep;
}

Report cmd_lebesgue(const std::vector<std::int64_t>& ns, std::optional<double> tol) {
  const QuadratureSpec spec = quad_spec(tol);
  for (std::int64_t n : ns) {
    if (n < 0 || n > kMaxLebesgueN) {
      throw CommandError{kInvalidInput, "--n: expected 0 <= n <= " + std::to_string(kMaxLebesgueN)};
    }
  }
  Report rep;
  rep.notes.push_back("L_n = integral of |D_n| over a period; closed column is the norm of V_{n,n+1}");
  Table t{"", {"n", "quadrature", "closed", "deviation"}, {}};
  json list = json::array();
  for (std::int64_t n : ns) {
    const double q = lebesgue_constant(n, spec);
    const double c = norm_closed_form(n, n + 1).value;
    t.rows.push_back({n, q, c, std::abs(q - c)});
    list.push_back({{"n", n}, {"quadrature", num(q)}, {"closed", num(c)}, {"deviation", num(std::abs(q - c))}});
  }
  rep.tables.push_back(std::move(t));
  rep.doc = {{"command", "lebesgue"}, {"quadrature_tol", num(spec.abs_tol)}, {"values", std::move(list)}};
  return rep;
}

// Runs tasks on up to hardware_concurrency threads. Each task writes only its own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  for (auto& th : pool) th.join();
}

struct VerifyArgs {
  std::int64_t max_s = 5;
  std::int64_t max_N = 6;
  double tol = 1e-7;
};

struct VerifyCell {
  std::int64_t r = 0, s = 0, N = 0;
  double closed = 0, piecewise = 0, quad = 0, deviation = 0, area_plus = 0;
  bool in_bounds = false;
  bool area_ok = false;
  bool pass = false;
  bool budget = false;
  std::string error{};
};

struct LebesgueCheck {
  std::int64_t n = 0;
  double closed = 0, quad = 0;
  bool pass = false;
  bool budget = false;
  std::string error{};
};

struct DecayCheck {
  std::int64_t r = 0, s = 0, N = 0;
  double worst_ratio = 0, worst_x = 0;
  bool pass = false;
};

constexpr std::int64_t kDecayN[] = {64, 512};
constexpr std::size_t kDecayGrid = 10'000;

// Runs a check body, turning engine exceptions into a recorded failure.
template <class Check, class Body>
void guarded(Check& c, Body&& body) {
  try {
    body();
  } catch (const BudgetExceededError& e) {
    c.pass = false;
    c.budget = true;
    c.error = e.what();
  } catch (const std::exception& e) {
    c.pass = false;
    c.error = e.what();
  }
}

std::pair<Report, int> cmd_verify(const VerifyArgs& a) {
  if (a.max_s < 1 || a.max_s > kVerifyMaxS || a.max_N < 1 || a.max_N > kVerifyMaxN) {
    throw CommandError{kInvalidInput, "verify: need 1 <= max-s <= " + std::to_string(kVerifyMaxS) +
                                          " and 1 <= max-N <= " + std::to_string(kVerifyMaxN)};
  }
  if (!(a.tol > 0.0) || !std::isfinite(a.tol)) throw CommandError{kInvalidInput, "verify: --tol must be positive"};
  QuadratureSpec spec;
  spec.abs_tol = std::max(1e-13, std::min(default_tolerance(), a.tol / 100.0));

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // ordered by (s, r)
  for (std::int64_t s = 1; s <= a.max_s; ++s) {
    for (std::int64_t r = 0; r < s; ++r) {
      if (std::gcd(r, s) == 1) pairs.emplace_back(r, s);
    }
  }

  std::vector<VerifyCell> cells;
  for (auto [r, s] : pairs) {
    for (std::int64_t N = 1; N <= a.max_N; ++N) cells.push_back(VerifyCell{.r = r, .s = s, .N = N});
  }
  std::vector<LebesgueCheck> leb(static_cast<std::size_t>(a.max_s));
  for (std::size_t i = 0; i < leb.size(); ++i) leb[i].n = static_cast<std::int64_t>(i);
  std::vector<DecayCheck> decay;
  for (auto [r, s] : pairs) {
    for (std::int64_t N : kDecayN) decay.push_back(DecayCheck{.r = r, .s = s, .N = N});
  }

  const std::size_t total = cells.size() + leb.size() + decay.size();
  parallel_for(total, [&](std::size_t i) {
    if (i < cells.size()) {
      VerifyCell& c = cells[i];
      guarded(c, [&] {
        const KernelParams p = make_params(c.r, c.s, c.N);
        c.closed = norm_closed_form(c.r, c.s).value;
        c.piecewise = norm_piecewise_exact(p).value;
        c.quad = integrate_abs_kernel(p, spec);
        c.deviation = std::max({std::abs(c.closed - c.piecewise), std::abs(c.closed - c.quad),
                                std::abs(c.piecewise - c.quad)});
        const double ub = p.norm_upper_bound();
        c.in_bounds = true;
        for (double v : {c.closed, c.piecewise, c.quad}) c.in_bounds &= v >= 1.0 - a.tol && v <= ub + a.tol;
        c.area_plus = area_split(p).plus;
        c.area_ok = std::abs(c.area_plus - 0.5 * (1.0 + c.closed)) <= a.tol;
        c.pass = c.deviation <= a.tol && c.in_bounds && c.area_ok;
      });
      return;
    }
    i -= cells.size();
    if (i < leb.size()) {
      LebesgueCheck& c = leb[i];
      guarded(c, [&] {
        c.closed = norm_closed_form(c.n, c.n + 1).value;
        c.quad = lebesgue_constant(c.n, spec);
        c.pass = std::abs(c.closed - c.quad) <= a.tol;
      });
      return;
    }
    i -= leb.size();
    DecayCheck& d = decay[i];
    const DecayReport rep = decay_bound_check(make_params(d.r, d.s, d.N), kDecayGrid);
    d.worst_ratio = rep.worst_ratio;
    d.worst_x = rep.worst_x;
    d.pass = rep.within_bound();
  });

  bool all_pass = true;
  bool budget = false;
  std::size_t cells_pass = 0, leb_pass = 0, decay_pass = 0;

  Report rep;
  rep.notes.push_back("norm agreement, bounds and area split for coprime (r,s), s <= " + std::to_string(a.max_s) +
                      ", N <= " + std::to_string(a.max_N) + "; tol " + format_human(a.tol));
  Table tc{"norms", {"r", "s", "N", "closed", "piecewise", "quad", "deviation", "area_plus", "pass"}, {}};
  json jc = json::array();
  for (const VerifyCell& c : cells) {
    cells_pass += c.pass;
    all_pass &= c.pass;
    budget |= c.budget;
    tc.rows.push_back({c.r, c.s, c.N, c.closed, c.piecewise, c.quad, c.deviation, c.area_plus,
                       std::string(c.pass ? "yes" : "no")});
    json row = {{"r", c.r},
                {"s", c.s},
                {"N", c.N},
                {"closed", num(c.closed)},
                {"piecewise", num(c.piecewise)},
                {"quad", num(c.quad)},
                {"deviation", num(c.deviation)},
                {"area_plus", num(c.area_plus)},
                {"in_bounds", c.in_bounds},
                {"area_ok", c.area_ok},
                {"pass", c.pass}};
    if (!c.error.empty()) row["error"] = c.error;
    jc.push_back(std::move(row));
  }
  Table tl{"lebesgue constants", {"n", "closed", "quad", "pass"}, {}};
  json jl = json::array();
  for (const LebesgueCheck& c : leb) {
    leb_pass += c.pass;
    all_pass &= c.pass;
    budget |= c.budget;
    tl.rows.push_back({c.n, c.closed, c.quad, std::string(c.pass ? "yes" : "no")});
    json row = {{"n", c.n}, {"closed", num(c.closed)}, {"quad", num(c.quad)}, {"pass", c.pass}};
    if (!c.error.empty()) row["error"] = c.error;
    jl.push_back(std::move(row));
  }
  Table td{"decay bound |V| N^(1/3) / 4 <= 1", {"r", "s", "N", "worst_ratio", "worst_x", "pass"}, {}};
  json jd = json::array();
  for (const DecayCheck& d : decay) {
    decay_pass += d.pass;
    all_pass &= d.pass;
    td.rows.push_back({d.r, d.s, d.N, d.worst_ratio, d.worst_x, std::string(d.pass ? "yes" : "no")});
    jd.push_back({{"r", d.r},
                  {"s", d.s},
                  {"N", d.N},
                  {"worst_ratio", num(d.worst_ratio)},
                  {"worst_x", num(d.worst_x)},
                  {"pass", d.pass}});
  }
  rep.tables = {std::move(tc), std::move(tl), std::move(td)};
  for (const VerifyCell& c : cells) {
    if (!c.error.empty()) {
      rep.summary.push_back("error at r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) +
                            " N=" + std::to_string(c.N) + ": " + c.error);
    }
  }
  for (const LebesgueCheck& c : leb) {
    if (!c.error.empty()) rep.summary.push_back("error at n=" + std::to_string(c.n) + ": " + c.error);
  }
  rep.summary.push_back("norms " + std::to_string(cells_pass) + "/" + std::to_string(cells.size()) +
                        ", lebesgue " + std::to_string(leb_pass) + "/" + std::to_string(leb.size()) +
                        ", decay " + std::to_string(decay_pass) + "/" + std::to_string(decay.size()) + ": " +
                        (all_pass ? "PASS" : "FAIL"));
  rep.doc = {{"command", "verify"},
             {"max_s", a.max_s},
             {"max_N", a.max_N},
             {"tol", num(a.tol)},
             {"quadrature_tol", num(spec.abs_tol)},
             {"cells", std::move(jc)},
             {"lebesgue", std::move(jl)},
             {"decay", std::move(jd)},
             {"pass", all_pass}};
  const int code = budget ? kBudgetExceeded : (all_pass ? kOk : kVerificationFailed);
  return {std::move(rep), code};
}

Report cmd_approx(const std::string& name, const ParamArgs& pa, const PointArgs& pts_args) {
  const KernelParams params = pa.make();
  const FourierFunction f = catalog_function(name);
  const std::vector<double> xs = resolve_points(pts_args, 16);
  const std::int64_t degree = params.sN() - 1;
  const auto vp = delayed_mean(f, params.n(), params.p(), xs);
  const auto fj = fejer_mean(f, degree, xs);
  const auto ps = partial_sum(f, degree, xs);

  Report rep;
  rep.notes.push_back("function " + name + ", " + params_note(params));
  rep.notes.push_back("delayed = sigma_{n,p}, fejer = sigma_{sN-1}, partial = S_{sN-1}");
  const bool real = f.real_valued();
  Table t{"", {}, {}};
  t.header = real ? std::vector<std::string>{"x", "f", "delayed", "fejer", "partial"}
                  : std::vector<std::string>{"x", "f_re", "f_im", "delayed_re", "delayed_im",
                                             "fejer_re", "fejer_im", "partial_re", "partial_im"};
  json points = json::array();
  double err[3] = {0, 0, 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const cplx fx = f.evaluate(xs[i]);
    const cplx vals[3] = {vp[i], fj[i], ps[i]};
    for (int m = 0; m < 3; ++m) err[m] = std::max(err[m], std::abs(vals[m] - fx));
    std::vector<Cell> row{xs[i]};
    json pt = {{"x", num(xs[i])}};
    if (real) {
      row.push_back(fx.real());
      pt["f"] = num(fx.real());
      const char* keys[3] = {"delayed", "fejer", "partial"};
      for (int m = 0; m < 3; ++m) {
        const double v = real_value(f, vals[m]);
        row.push_back(v);
        pt[keys[m]] = num(v);
      }
    } else {
      row.insert(row.end(), {fx.real(), fx.imag()});
      pt["f"] = complex_json(fx);
      const char* keys[3] = {"delayed", "fejer", "partial"};
      for (int m = 0; m < 3; ++m) {
        row.insert(row.end(), {vals[m].real(), vals[m].imag()});
        pt[keys[m]] = complex_json(vals[m]);
      }
    }
    t.rows.push_back(std::move(row));
    points.push_back(std::move(pt));
  }
  rep.tables.push_back(std::move(t));
  rep.summary.push_back("max |error|: delayed " + format_human(err[0]) + ", fejer " + format_human(err[1]) +
                        ", partial " + format_human(err[2]));
  rep.doc = {{"command", "approx"},
             {"function", name},
             {"real_valued", real},
             {"params", params_json(params)},
             {"degree", degree},
             {"points", std::move(points)},
             {"max_error", {{"delayed", num(err[0])}, {"fejer", num(err[1])}, {"partial", num(err[2])}}}};
  return rep;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw CommandError{kInvalidInput, "cannot open '" + path.string() + "': " + std::strerror(errno)};
  return os;
}

void close_checked(std::ofstream& os, const std::filesystem::path& path) {
  os.close();
  if (!os) throw CommandError{kInvalidInput, "error writing '" + path.string() + "': " + std::strerror(errno)};
}

std::filesystem::path companion(const std::filesystem::path& path, const std::string& suffix) {
  return path.parent_path() / (path.stem().string() + suffix + path.extension().string());
}

Report cmd_export_plot(const ParamArgs& pa, const std::string& grid, const std::string& path_text) {
  const KernelParams params = pa.make();
  const std::int64_t K = parse_count(grid, "--grid");
  const std::filesystem::path curve_path = path_text;
  const std::filesystem::path zeros_path = companion(curve_path, "_zeros");
  const std::filesystem::path profile_path = companion(curve_path, "_profile");

  // Curve on the closed interval [0, 1]: K + 1 points.
  {
    std::ofstream os = open_for_write(curve_path);
    os << "x,kernel_value\n";
    for (std::int64_t j = 0; j <= K; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(K);
      os << format_machine(x) << ',' << format_machine(eval_vp(params, x)) << '\n';
    }
    close_checked(os, curve_path);
  }
  const ZeroSet zs = enumerate_zeros(params);
  {
    std::ofstream os = open_for_write(zeros_path);
    os << "location,x,kind,multiplicity\n";
    for (const Zero& z : zs.entries) {
      os << rational_text(z.location) << ',' << format_machine(z.location.to_double()) << ','
         << zero_kind_name(z.kind) << ',' << z.multiplicity << '\n';
    }
    close_checked(os, zeros_path);
  }
  // Corners of the trapezoid multiplier on the frequency axis: +-rN and +-sN.
  std::vector<std::int64_t> nodes{-params.sN(), -params.n(), params.n(), params.sN()};
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  {
    std::ofstream os = open_for_write(profile_path);
    os << "u,v\n";
    for (std::int64_t u : nodes) {
      const double v = trapezoid_multiplier(static_cast<double>(params.n()), static_cast<double>(params.p()),
                                            static_cast<double>(u));
      os << u << ',' << format_machine(v) << '\n';
    }
    close_checked(os, profile_path);
  }

  Report rep;
  rep.notes.push_back(params_note(params));
  Table t{"", {"file", "content", "rows"}, {}};
  t.rows.push_back({curve_path.string(), std::string("curve"), K + 1});
  t.rows.push_back({zeros_path.string(), std::string("zeros"), static_cast<std::int64_t>(zs.entries.size())});
  t.rows.push_back({profile_path.string(), std::string("profile"), static_cast<std::int64_t>(nodes.size())});
  rep.tables.push_back(std::move(t));
  rep.doc = {{"command", "export-plot"},
             {"params", params_json(params)},
             {"files",
              {{"curve", curve_path.string()}, {"zeros", zeros_path.string()}, {"profile", profile_path.string()}}},
             {"rows", {{"curve", K + 1}, {"zeros", zs.entries.size()}, {"profile", nodes.size()}}}};
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"de la Vallee Poussin kernels and their L1 norms", "dvp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "human";
  std::string output_path;
  app.add_option("--format", format_text, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", output_path, "write results to this file instead of stdout");

  ParamArgs eval_params, coeff_params, zero_params, approx_params, plot_params;
  PointArgs eval_points, approx_points;
  NormArgs norm_args;
  std::vector<std::int64_t> leb_n{1, 2, 3};
  std::optional<double> leb_tol;
  VerifyArgs verify_args;
  std::string approx_function;
  std::string plot_grid = "512";
  std::string plot_path;

  auto* eval = app.add_subcommand("eval", "kernel values at points or on a grid");
  eval_params.attach(eval);
  eval_points.attach(eval);

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients v(j/N), j = 0..sN-1");
  coeff_params.attach(coeffs);

  auto* zeros = app.add_subcommand("zeros", "exact zeros in (0, 1) with multiplicities");
  zero_params.attach(zeros);

  auto* norm = app.add_subcommand("norm", "L1 norm by closed form, piecewise integration or quadrature");
  norm_args.params.attach(norm);
  norm->add_option("--method", norm_args.method, "closed | piecewise | quad | all")
      ->check(CLI::IsMember({"closed", "piecewise", "quad", "all"}))
      ->capture_default_str();
  norm->add_option("--tol", norm_args.tol, "quadrature absolute tolerance (default 1e-10 or DVP_TOL)");

  auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants L_n");
  lebesgue->add_option("--n", leb_n, "orders n")->capture_default_str();
  lebesgue->add_option("--tol", leb_tol, "quadrature absolute tolerance (default 1e-10 or DVP_TOL)");

  auto* verify = app.add_subcommand("verify", "cross-check the three norm methods over a parameter sweep");
  verify->add_option("--max-s", verify_args.max_s, "largest s (<= 12)")->capture_default_str();
  verify->add_option("--max-N", verify_args.max_N, "largest N (<= 16)")->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "agreement tolerance")->capture_default_str();

  auto* approx = app.add_subcommand("approx", "delayed, Fejer and partial sums of a catalog function");
  approx->add_option("--function", approx_function, "catalog function")
      ->required()
      ->check(CLI::IsMember(catalog_names()));
  approx_params.attach(approx);
  approx_points.attach(approx);

  auto* plot = app.add_subcommand("export-plot", "write curve, zeros and multiplier CSV files");
  plot_params.attach(plot);
  plot->add_option("--grid", plot_grid, "K: the points j/K, j = 0..K")->capture_default_str();
  plot->add_option("--path", plot_path, "curve CSV; companions get _zeros and _profile suffixes")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const Format fmt = format_text == "json" ? Format::Json : format_text == "csv" ? Format::Csv : Format::Human;
  Report rep;
  int code = kOk;
  try {
    if (*eval) {
      if (eval_points.x.empty() && eval_points.grid.empty()) {
        throw CommandError{kInvalidInput, "eval: one of --x or --grid is required"};
      }
      rep = cmd_eval(eval_params, eval_points);
    } else if (*coeffs) {
      rep = cmd_coeffs(coeff_params);
    } else if (*zeros) {
      rep = cmd_zeros(zero_params);
    } else if (*norm) {
      rep = cmd_norm(norm_args);
    } else if (*lebesgue) {
      rep = cmd_lebesgue(leb_n, leb_tol);
    } else if (*verify) {
      std::tie(rep, code) = cmd_verify(verify_args);
    } else if (*approx) {
      rep = cmd_approx(approx_function, approx_params, approx_points);
    } else if (*plot) {
      rep = cmd_export_plot(plot_params, plot_grid, plot_path);
    }
  } catch (const CommandError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (output_path.empty()) {
    render(rep, fmt, out);
  } else {
    try {
      std::ofstream os = open_for_write(output_path);
      render(rep, fmt, os);
      close_checked(os, output_path);
    } catch (const CommandError& e) {
      err << "error: " << e.message << '\n';
      return e.code;
    }
  }
  if (code == kVerificationFailed) err << "verification failed\n";
  if (code == kBudgetExceeded) err << "quadrature budget exceeded\n";
  return code;
}

}  // namespace dvp::cli
