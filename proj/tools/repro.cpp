#include "repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "problem_io.hpp"

namespace dispsolve::cli {

namespace {

namespace inst = instances;

class ApiError : public std::runtime_error {
 public:
  explicit ApiError(dsv_status s)
      : std::runtime_error(std::string(dsv_status_string(s)) + ": " + dsv_last_error()),
        status(s) {}
  dsv_status status;
};

void check(dsv_status s) {
  if (s != DSV_OK) throw ApiError(s);
}

struct Report {
  dsv_report* p = nullptr;
  Report() = default;
  Report(const Report&) = delete;
  Report& operator=(const Report&) = delete;
  ~Report() { dsv_report_destroy(p); }
  dsv_report** out() {
    dsv_report_destroy(p);
    p = nullptr;
    return &p;
  }
  Block solution() const {
    Block x(dsv_report_rows(p), dsv_report_cols(p));
    dsv_report_solution(p, x.data.data());
    return x;
  }
  std::pair<double, double> growth() const {
    double l = 0, r = 0;
    dsv_report_growth(p, &l, &r);
    return {l, r};
  }
};

struct Cauchy {
  dsv_cauchy* p = nullptr;
  explicit Cauchy(const inst::CauchyData& c) {
    const Block t = to_block(c.t), s = to_block(c.s), g = to_block(c.g), h = to_block(c.h);
    check(dsv_cauchy_create(t.rows, s.rows, g.cols, t.data.data(), s.data.data(),
                            g.data.data(), h.data.data(), &p));
  }
  Cauchy(const Cauchy&) = delete;
  Cauchy& operator=(const Cauchy&) = delete;
  ~Cauchy() { dsv_cauchy_destroy(p); }
  Block dense() const {
    Block a(dsv_cauchy_rows(p), dsv_cauchy_cols(p));
    check(dsv_cauchy_to_dense(p, a.data.data()));
    return a;
  }
  Block times(const Block& x) const {
    Block y(dsv_cauchy_rows(p), x.cols);
    check(dsv_cauchy_multiply(p, x.cols, x.data.data(), y.data.data()));
    return y;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double norm_inf(const Block& x) {
  double best = 0;
  for (std::ptrdiff_t i = 0; i < x.rows; ++i) {
    double s = 0;
    for (std::ptrdiff_t j = 0; j < x.cols; ++j) s += std::hypot(x(i, j).re, x(i, j).im);
    best = std::max(best, s);
  }
  return best;
}

double rel_err(const Block& x, const Block& ref) {
  Block d = x;
  for (std::size_t k = 0; k < d.data.size(); ++k) {
    d.data[k].re -= ref.data[k].re;
    d.data[k].im -= ref.data[k].im;
  }
  const double den = norm_inf(ref);
  return den == 0 ? norm_inf(d) : norm_inf(d) / den;
}

Block matmul(const Block& a, const Block& x) {
  Block y(a.rows, x.cols);
  for (std::ptrdiff_t c = 0; c < x.cols; ++c)
    for (std::ptrdiff_t k = 0; k < a.cols; ++k) {
      const auto xk = to_std(x(k, c));
      for (std::ptrdiff_t i = 0; i < a.rows; ++i) {
        const auto v = to_std(y(i, c)) + to_std(a(i, k)) * xk;
        y(i, c) = {v.real(), v.imag()};
      }
    }
  return y;
}

Block random_rhs(inst::SplitMix64& rng, std::ptrdiff_t n, bool complex = true) {
  return to_block(inst::random_block(rng, n, 1, complex));
}

Block toeplitz_dense(const Block& col, const Block& row) {
  Block a(col.rows, col.rows);
  check(dsv_toeplitz_dense(col.rows, col.data.data(), row.data.data(), a.data.data()));
  return a;
}

Block dense_solve(const Block& a, const Block& b) {
  Block x(b.rows, b.cols);
  check(dsv_dense_solve(a.rows, a.data.data(), b.cols, b.data.data(), x.data.data()));
  return x;
}

double dense_cond(const Block& a) {
  double c = 0;
  check(dsv_dense_cond1(a.rows, a.data.data(), &c));
  return c;
}

dsv_options options(int piv, int gu_period = 10) {
  dsv_options o;
  dsv_options_init(&o);
  o.piv = piv;
  o.gu_period = gu_period;
  return o;
}

class Csv {
 public:
  Csv(const std::string& path, const std::string& header) : path_(path), out_(path) {
    if (!out_) throw InputError(path + ": cannot open for writing");
    out_ << header << '\n';
    out_.precision(6);
    out_ << std::scientific;
  }
  template <class... T>
  void row(const T&... v) {
    std::size_t k = 0;
    ((out_ << (k++ ? "," : "") << v), ...);
    out_ << '\n';
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::vector<std::ptrdiff_t> sizes_or(const std::vector<std::ptrdiff_t>& s,
                                     std::vector<std::ptrdiff_t> fallback) {
  return s.empty() ? fallback : s;
}

// --- t1: four structures at one size ---------------------------------------

int repro_t1(const ReproOptions& o) {
  const std::ptrdiff_t n = o.n > 0 ? o.n : 512;
  inst::SplitMix64 rng(o.seed);
  Csv csv(join(o.out_dir, "t1.csv"), "structure,n,seconds,error,cond,bound,within_bound");
  const dsv_options opt = options(DSV_PIV_PARTIAL);
  int failures = 0;

  auto record = [&](const std::string& name, const Block& a, const Block& xtrue,
                    const std::function<void(const Block&, dsv_report**)>& solve) {
    const Block b = matmul(a, xtrue);
    Report rep;
    const double secs = timed([&] { solve(b, rep.out()); });
    const double err = rel_err(rep.solution(), xtrue);
    const double cond = dense_cond(a);
    const double bound = cond * double(n) * 1e-13;
    const bool ok = err <= bound;
    failures += !ok;
    csv.row(name, n, secs, err, cond, bound, ok ? 1 : 0);
    std::cout << name << ": n = " << n << ", error " << sci(err) << ", cond " << sci(cond)
              << ", " << sci(secs) << " s" << (ok ? "" : "  (above bound)") << '\n';
  };

  {
    const Block w = to_block(inst::unit_circle_nodes(rng, n));
    Block a(n, n);
    check(dsv_vandermonde_dense(n, w.data.data(), a.data.data()));
    record("vandermonde", a, random_rhs(rng, n), [&](const Block& b, dsv_report** out) {
      check(dsv_solve_vandermonde(n, w.data.data(), nullptr, 1, b.data.data(), &opt, out));
    });
  }
  {
    const auto t = inst::random_toeplitz(rng, n, true);
    const Block col = to_block(t.col), row = to_block(t.row);
    record("toeplitz", toeplitz_dense(col, row), random_rhs(rng, n),
           [&](const Block& b, dsv_report** out) {
             check(dsv_solve_toeplitz(n, col.data.data(), row.data.data(), 1, b.data.data(),
                                      &opt, out));
           });
  }
  {
    const auto k = inst::random_toeplitz_hankel(rng, n, true);
    const Block tv = to_block(k.t), hv = to_block(k.h);
    Block a(n, n);
    check(dsv_toeplitz_hankel_dense(n, tv.data.data(), hv.data.data(), a.data.data()));
    record("toeplitz_hankel", a, random_rhs(rng, n), [&](const Block& b, dsv_report** out) {
      check(dsv_solve_toeplitz_hankel(n, tv.data.data(), hv.data.data(), 1, b.data.data(),
                                      &opt, out));
    });
  }
  {
    const Cauchy c(inst::random_cauchy(rng, n, 5));
    record("cauchy_like", c.dense(), random_rhs(rng, n),
           [&](const Block& b, dsv_report** out) {
             check(dsv_solve_cauchy_like(c.p, 1, b.data.data(), &opt, out));
           });
  }
  std::cout << failures << " of 4 structures above the bound\n";
  std::cout << "wrote " << csv.path() << '\n';
  return 0;
}

// --- t2: Toeplitz error vs size across pivoting strategies -----------------

int repro_t2(const ReproOptions& o) {
  const auto sizes = sizes_or(o.sizes, {64, 128, 256, 512});
  inst::SplitMix64 rng(o.seed);
  Csv csv(join(o.out_dir, "t2.csv"), "n,piv,seconds,error,rcond_u");
  for (std::ptrdiff_t n : sizes) {
    const auto t = inst::random_toeplitz(rng, n, true);
    const Block col = to_block(t.col), row = to_block(t.row);
    const Block xtrue = random_rhs(rng, n);
    const Block b = matmul(toeplitz_dense(col, row), xtrue);
    for (int piv = 0; piv <= 5; ++piv) {
      const dsv_options opt = options(piv, o.gu_period);
      Report rep;
      const double secs = timed([&] {
        check(dsv_solve_toeplitz(n, col.data.data(), row.data.data(), 1, b.data.data(),
                                 &opt, rep.out()));
      });
      const double err = rel_err(rep.solution(), xtrue);
      csv.row(n, piv, secs, err, dsv_report_rcond(rep.p));
      std::cout << "n = " << n << " piv = " << piv << ": error " << sci(err) << '\n';
    }
  }
  std::cout << "wrote " << csv.path() << '\n';
  return 0;
}

// --- t3: Toeplitz solvers on random and Gaussian Toeplitz matrices ---------

int repro_t3(const ReproOptions& o) {
  const auto sizes = sizes_or(o.sizes, {64, 128, 256, 512, 1024});
  inst::SplitMix64 rng(o.seed);
  Csv csv(join(o.out_dir, "t3.csv"), "family,n,method,error");
  for (std::ptrdiff_t n : sizes) {
    for (const std::string family : {"random", "gaussian"}) {
      const auto t = family == "random" ? inst::random_toeplitz(rng, n, false)
                                        : inst::gaussian_toeplitz(n, 0.3);
      const Block col = to_block(t.col), row = to_block(t.row);
      const Block a = toeplitz_dense(col, row);
      const Block xtrue = random_rhs(rng, n, false);
      const Block b = matmul(a, xtrue);

      auto emit = [&](const std::string& method, const Block& x) {
        const double err = rel_err(x, xtrue);
        csv.row(family, n, method, err);
        std::cout << family << " n = " << n << " " << method << ": error " << sci(err) << '\n';
      };
      for (int piv : {DSV_PIV_PARTIAL, DSV_PIV_GU_PERIODIC}) {
        const dsv_options opt = options(piv, o.gu_period);
        Report rep;
        check(dsv_solve_toeplitz(n, col.data.data(), row.data.data(), 1, b.data.data(), &opt,
                                 rep.out()));
        emit(piv == DSV_PIV_PARTIAL ? "toeplitz_partial" : "toeplitz_gu", rep.solution());
      }
      // The same matrix as a Toeplitz+Hankel one with zero Hankel part.
      Block tv(2 * n - 1, 1), hv(2 * n - 1, 1);
      for (std::ptrdiff_t k = 1 - n; k <= n - 1; ++k)
        tv.data[std::size_t(k + n - 1)] = k >= 0 ? col.data[std::size_t(k)]
                                                 : row.data[std::size_t(-k)];
      const dsv_options opt = options(DSV_PIV_PARTIAL);
      Report rep;
      check(dsv_solve_toeplitz_hankel(n, tv.data.data(), hv.data.data(), 1, b.data.data(),
                                      &opt, rep.out()));
      emit("toeplitz_hankel_partial", rep.solution());
      if (n <= o.oracle_cap) emit("dense", dense_solve(a, b));
    }
  }
  std::cout << "wrote " << csv.path() << '\n';
  return 0;
}

// --- t4: generator growth on a perturbed rank-deficient family -------------

int repro_t4(const ReproOptions& o) {
  const std::ptrdiff_t n = o.n > 0 ? o.n : 128;
  inst::SplitMix64 rng(o.seed);
  const auto tl = inst::deficient_toeplitz_like(rng, n, std::max<std::ptrdiff_t>(1, n / 16),
                                                1e-12);
  const Block g = to_block(tl.g), h = to_block(tl.h);
  const Block b = random_rhs(rng, n);
  const dsv_complex xi{tl.xi.real(), tl.xi.imag()}, eta{tl.eta.real(), tl.eta.imag()};

  struct Run {
    const char* name;
    int piv;
    std::vector<double> left, right;
    double growth_left = 0, growth_right = 0, rcond = 0;
  };
  std::vector<Run> runs = {{"partial", DSV_PIV_PARTIAL, {}, {}},
                           {"gu", DSV_PIV_GU_PERIODIC, {}, {}},
                           {"complete", DSV_PIV_COMPLETE, {}, {}}};
  Csv summary(join(o.out_dir, "t4.csv"), "piv,growth_left,growth_right,rcond_u");
  for (Run& run : runs) {
    dsv_options opt = options(run.piv, o.gu_period);
    opt.track_growth = 1;
    Report rep;
    check(dsv_solve_toeplitz_like(n, g.cols, g.data.data(), h.data.data(), xi, eta, 1,
                                  b.data.data(), &opt, rep.out()));
    const std::ptrdiff_t steps = dsv_report_trace(rep.p, nullptr, nullptr);
    run.left.resize(std::size_t(steps));
    run.right.resize(std::size_t(steps));
    dsv_report_trace(rep.p, run.left.data(), run.right.data());
    std::tie(run.growth_left, run.growth_right) = rep.growth();
    run.rcond = dsv_report_rcond(rep.p);
    summary.row(run.name, run.growth_left, run.growth_right, run.rcond);
    std::cout << run.name << ": growth left " << sci(run.growth_left) << ", right "
              << sci(run.growth_right) << ", rcond_u " << sci(run.rcond) << '\n';
  }
  Csv trace(join(o.out_dir, "t4_trace.csv"),
            "step,partial_left,partial_right,gu_left,gu_right,complete_left,complete_right");
  for (std::size_t k = 0; k < runs[0].left.size(); ++k)
    trace.row(k, runs[0].left[k], runs[0].right[k], runs[1].left[k], runs[1].right[k],
              runs[2].left[k], runs[2].right[k]);
  std::cout << "wrote " << summary.path() << " and " << trace.path() << '\n';
  return 0;
}

// --- t5: the two generator pairs of the Sweet-Brent matrix -----------------

int repro_t5(const ReproOptions& o) {
  const std::ptrdiff_t n = o.n > 0 ? o.n : 512;
  const Cauchy classic(inst::sweet_brent(n, o.tau, false));
  const Cauchy alternative(inst::sweet_brent(n, o.tau, true));
  inst::SplitMix64 rng(o.seed);
  const Block xtrue = random_rhs(rng, n);
  const Block b = alternative.times(xtrue);

  Csv csv(join(o.out_dir, "t5.csv"), "generators,piv,error,growth_left,growth_right");
  for (const auto* c : {&classic, &alternative}) {
    const char* name = c == &classic ? "sweet_brent" : "alternative";
    for (int piv : {DSV_PIV_PARTIAL, DSV_PIV_GU}) {
      dsv_options opt = options(piv, o.gu_period);
      opt.track_growth = 1;
      Report rep;
      check(dsv_solve_cauchy_like(c->p, 1, b.data.data(), &opt, rep.out()));
      const double err = rel_err(rep.solution(), xtrue);
      const auto [gl, gr] = rep.growth();
      csv.row(name, piv, err, gl, gr);
      std::cout << name << " piv = " << piv << ": error " << sci(err) << ", growth left "
                << sci(gl) << ", right " << sci(gr) << '\n';
    }
  }
  std::cout << "wrote " << csv.path() << '\n';
  return 0;
}

// --- t6: almost-multiple knots, with and without collapsing ----------------

int repro_t6(const ReproOptions& o) {
  const std::ptrdiff_t clusters = o.n > 0 ? o.n : 8, copies = 5, r = 5;
  Csv csv(join(o.out_dir, "t6.csv"),
          "tau,plain_status,plain_error,collapsed_status,collapsed_error");
  std::vector<double> taus;
  for (int e = 8; e <= 16; ++e) taus.push_back(std::pow(10.0, -e));
  taus.push_back(0.0);
  for (double tau : taus) {
    inst::SplitMix64 rng(o.seed);
    const Cauchy c(inst::clustered_knots(rng, clusters, copies, r, tau));
    const std::ptrdiff_t n = clusters * copies;
    const Block xtrue = random_rhs(rng, n);
    const Block b = c.times(xtrue);

    auto attempt = [&](const dsv_options& opt, std::string& status, std::string& err) {
      Report rep;
      const dsv_status s = dsv_solve_cauchy_like(c.p, 1, b.data.data(), &opt, rep.out());
      status = s == DSV_OK ? "ok" : dsv_status_string(s);
      err = s == DSV_OK ? sci(rel_err(rep.solution(), xtrue)) : "";
    };
    // Distinct knots stay on the plain path; exact duplicates must not.
    dsv_options plain = options(DSV_PIV_PARTIAL);
    if (tau == 0) plain.gathering = DSV_GATHER_NEVER;
    dsv_options collapsed = options(DSV_PIV_PARTIAL);
    collapsed.collapse_tol = 2 * tau;
    std::string ps, pe, cs, ce;
    attempt(plain, ps, pe);
    attempt(collapsed, cs, ce);
    csv.row(tau, ps, pe, cs, ce);
    std::cout << "tau = " << sci(tau) << ": plain " << (pe.empty() ? ps : pe)
              << ", collapsed " << (ce.empty() ? cs : ce) << '\n';
  }
  std::cout << "wrote " << csv.path() << '\n';
  return 0;
}

int bench(const BenchOptions& o) {
  static const std::vector<std::string> tags = {"cauchy_like", "toeplitz", "toeplitz_hankel",
                                                "vandermonde", "dense"};
  if (std::find(tags.begin(), tags.end(), o.structure) == tags.end())
    throw InputError("structure: bench supports cauchy_like, toeplitz, toeplitz_hankel, "
                     "vandermonde, dense");
  if (o.sizes.empty()) throw InputError("sizes: at least one size is required");
  for (std::size_t k = 0; k < o.sizes.size(); ++k)
    if (o.sizes[k] < 2 || (k > 0 && o.sizes[k] <= o.sizes[k - 1]))
      throw InputError("sizes: must be ascending and >= 2");
  if (o.repetitions < 3) throw InputError("repetitions: must be >= 3");

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw InputError(o.out + ": cannot open for writing");
  }
  std::ostream& out = o.out.empty() ? std::cout : file;
  out << "n,median_seconds,min_seconds,error,ratio\n";
  out.precision(6);
  out << std::scientific;

  const dsv_options opt = options(o.piv, o.gu_period);
  double previous = 0;
  for (std::ptrdiff_t n : o.sizes) {
    inst::SplitMix64 rng(o.seed ^ std::uint64_t(n));
    const Block b = random_rhs(rng, n);
    std::function<Block()> solve;
    std::function<Block()> dense;
    Block w, col, row, tv, hv, a;
    std::unique_ptr<Cauchy> c;
    if (o.structure == "cauchy_like") {
      c = std::make_unique<Cauchy>(inst::random_cauchy(rng, n, o.rank));
      dense = [&] { return c->dense(); };
      solve = [&] {
        Report rep;
        check(dsv_solve_cauchy_like(c->p, 1, b.data.data(), &opt, rep.out()));
        return rep.solution();
      };
    } else if (o.structure == "toeplitz") {
      const auto t = inst::random_toeplitz(rng, n, true);
      col = to_block(t.col);
      row = to_block(t.row);
      dense = [&] { return toeplitz_dense(col, row); };
      solve = [&] {
        Report rep;
        check(dsv_solve_toeplitz(n, col.data.data(), row.data.data(), 1, b.data.data(), &opt,
                                 rep.out()));
        return rep.solution();
      };
    } else if (o.structure == "toeplitz_hankel") {
      const auto k = inst::random_toeplitz_hankel(rng, n, true);
      tv = to_block(k.t);
      hv = to_block(k.h);
      dense = [&] {
        Block d(n, n);
        check(dsv_toeplitz_hankel_dense(n, tv.data.data(), hv.data.data(), d.data.data()));
        return d;
      };
      solve = [&] {
        Report rep;
        check(dsv_solve_toeplitz_hankel(n, tv.data.data(), hv.data.data(), 1,
                                        b.data.data(), &opt, rep.out()));
        return rep.solution();
      };
    } else if (o.structure == "vandermonde") {
      w = to_block(inst::unit_circle_nodes(rng, n));
      dense = [&] {
        Block d(n, n);
        check(dsv_vandermonde_dense(n, w.data.data(), d.data.data()));
        return d;
      };
      solve = [&] {
        Report rep;
        check(dsv_solve_vandermonde(n, w.data.data(), nullptr, 1, b.data.data(), &opt,
                                    rep.out()));
        return rep.solution();
      };
    } else {
      a = to_block(inst::random_block(rng, n, n, true));
      dense = [&] { return a; };
      solve = [&] { return dense_solve(a, b); };
    }

    std::vector<double> times;
    Block x;
    for (int rep = 0; rep < o.repetitions; ++rep) times.push_back(timed([&] { x = solve(); }));
    const double med = median(times);
    out << n << ',' << med << ',' << *std::min_element(times.begin(), times.end()) << ',';
    if (n <= o.oracle_cap) out << rel_err(x, dense_solve(dense(), b));
    out << ',';
    if (previous > 0) out << med / previous;
    out << '\n';
    previous = med;
  }
  return 0;
}

}  // namespace

int run_bench(const BenchOptions& o) {
  try {
    return bench(o);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_status(e.status);
  }
}

int run_repro(const std::string& id, const ReproOptions& o) {
  static const std::map<std::string, int (*)(const ReproOptions&)> table = {
      {"t1", repro_t1}, {"t2", repro_t2}, {"t3", repro_t3},
      {"t4", repro_t4}, {"t5", repro_t5}, {"t6", repro_t6}};
  const auto it = table.find(id);
  if (it == table.end()) throw InputError("id: unknown experiment '" + id + "' (t1..t6)");
  std::filesystem::create_directories(o.out_dir);
  try {
    return it->second(o);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_status(e.status);
  }
}

}  // namespace dispsolve::cli
