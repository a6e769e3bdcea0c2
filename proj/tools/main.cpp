// dispsolve command-line tool.
//
//   dispsolve solve PROBLEM.json [--out RESULT.json] [--piv K] [--gu-period K]
//                                [--collapse-tol TOL]
//   dispsolve gen --structure TAG --n N [--r R] [--d D] [--seed S] [--out PATH]
//   dispsolve bench --structure TAG --sizes N1,N2,.. [--piv K] [--reps R]
//                   [--r R] [--seed S] [--oracle-cap N] [--out CSV]
//   dispsolve repro t1|..|t6 [--out DIR] [--seed S] [--sizes ..] [--n N]
//                   [--tau T] [--gu-period K] [--oracle-cap N]
//
// Exit status: 0 success, 1 singular or structural failure, 2 invalid input.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "problem_io.hpp"
#include "repro.hpp"

namespace {

using namespace dispsolve::cli;

struct SolveArgs {
  std::string input, output;
  std::optional<int> piv, gu_period;
  std::optional<double> collapse_tol;
};

int cmd_solve(const SolveArgs& a) {
  Problem p = read_problem(a.input);
  if (a.piv) {
    if (*a.piv < 0 || *a.piv > 5) throw InputError("--piv: expected 0..5");
    p.piv = *a.piv;
  }
  if (a.gu_period) {
    if (*a.gu_period < 1) throw InputError("--gu-period: must be >= 1");
    p.gu_period = *a.gu_period;
  }
  if (a.collapse_tol) {
    if (!(*a.collapse_tol >= 0)) throw InputError("--collapse-tol: must be >= 0");
    p.collapse_tol = *a.collapse_tol;
  }

  dsv_report* rep = nullptr;
  const auto t0 = std::chrono::steady_clock::now();
  const dsv_status st = solve_problem(p, &rep);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (st != DSV_OK) {
    std::cerr << "error: " << dsv_status_string(st) << ": " << dsv_last_error() << '\n';
    return exit_status(st);
  }
  const json result = result_to_json(p, rep, secs);
  if (dsv_report_ill_conditioned(rep))
    std::cerr << "warning: matrix is ill-conditioned, rcond_u = " << dsv_report_rcond(rep)
              << "; the solution may be inaccurate\n";
  dsv_report_destroy(rep);
  if (a.output.empty())
    std::cout << dump(result);
  else
    write_text(a.output, dump(result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured linear-system solver (Cauchy-like, Toeplitz, Toeplitz+Hankel, "
               "Vandermonde)"};
  app.set_version_flag("--version", std::string(dsv_version()));
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve the system in a problem file");
  solve->add_option("input", sa.input, "Problem file (JSON)")->required();
  solve->add_option("--out", sa.output, "Result file (default: stdout)");
  solve->add_option("--piv", sa.piv, "Pivoting code 0..5 (overrides the file)");
  solve->add_option("--gu-period", sa.gu_period, "Refresh period for pivoting code 4");
  solve->add_option("--collapse-tol", sa.collapse_tol,
                    "Merge right knots closer than this before solving");

  std::string gen_structure, gen_out;
  std::ptrdiff_t gen_n = 0, gen_r = 2, gen_d = 1;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a reproducible random problem file");
  gen->add_option("--structure", gen_structure, "Structure tag")->required();
  gen->add_option("--n", gen_n, "Matrix size")->required();
  gen->add_option("--r", gen_r, "Displacement rank (generator-based structures)");
  gen->add_option("--d", gen_d, "Number of right-hand sides");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output path (default: stdout)");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Time a solver over a list of sizes");
  bench->add_option("--structure", bo.structure,
                    "cauchy_like, toeplitz, toeplitz_hankel, vandermonde or dense");
  bench->add_option("--sizes", bo.sizes, "Ascending sizes, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--piv", bo.piv, "Pivoting code 0..5");
  bench->add_option("--gu-period", bo.gu_period, "Refresh period for pivoting code 4");
  bench->add_option("--reps", bo.repetitions, "Repetitions per size (>= 3)");
  bench->add_option("--r", bo.rank, "Displacement rank for cauchy_like");
  bench->add_option("--seed", bo.seed, "Random seed");
  bench->add_option("--oracle-cap", bo.oracle_cap, "Largest size checked against dense LU");
  bench->add_option("--out", bo.out, "CSV output (default: stdout)");

  std::string repro_id;
  ReproOptions ro;
  auto* repro = app.add_subcommand("repro", "Run one of the experiment series t1..t6");
  repro->add_option("id", repro_id, "t1, t2, t3, t4, t5 or t6")->required();
  repro->add_option("--out", ro.out_dir, "Output directory");
  repro->add_option("--seed", ro.seed, "Random seed");
  repro->add_option("--sizes", ro.sizes, "Sizes for t2/t3, comma separated")->delimiter(',');
  repro->add_option("--n", ro.n, "Size for t1/t4/t5, cluster count for t6");
  repro->add_option("--tau", ro.tau, "Perturbation for t5");
  repro->add_option("--gu-period", ro.gu_period, "Refresh period for pivoting code 4");
  repro->add_option("--oracle-cap", ro.oracle_cap, "Largest size checked against dense LU");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*gen) {
      const Problem p = generate(gen_structure, gen_n, gen_r, gen_d, gen_seed);
      if (gen_out.empty())
        std::cout << dump(problem_to_json(p));
      else
        write_text(gen_out, dump(problem_to_json(p)));
      return 0;
    }
    if (*bench) return run_bench(bo);
    if (*repro) return run_repro(repro_id, ro);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
