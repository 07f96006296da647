#include "insitu/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "insitu/errors.hpp"
#include "insitu/factorize.hpp"
#include "insitu/io.hpp"
#include "insitu/online.hpp"
#include "insitu/penrose.hpp"
#include "insitu/profile.hpp"
#include "insitu/solve.hpp"

namespace insitu {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_vector(std::ostream& out, const char* name, std::span<const Complex> v) {
  out << "# " << name << ' ' << v.size() << '\n';
  for (const Complex& z : v) out << format_pair(z) << '\n';
}

void print_matrix(std::ostream& out, const char* name, const Matrix& a) {
  out << "# " << name << ' ' << a.rows() << 'x' << a.cols() << '\n';
  write_matrix_market(out, a);
}

void print_result(std::ostream& out, const SolveResult& r, Mode mode, std::size_t m,
                  std::size_t n) {
  print_vector(out, "x_p", r.x_p.span());
  if (r.g) print_matrix(out, "G", *r.g);
  if (r.p) print_matrix(out, "P", *r.p);
  out << "# summary\n";
  out << "mode " << to_string(mode) << '\n';
  out << "m " << m << '\n';
  out << "n " << n << '\n';
  out << "rank " << r.rank << '\n';
  out << "residual_norm " << format_real(r.residual_norm) << '\n';
  if (r.b_projected_norm) out << "b_projected_norm " << format_real(*r.b_projected_norm) << '\n';
  out << "inconsistent " << yes_no(r.inconsistent) << '\n';
  out << "tol " << format_real(r.tol) << '\n';
  out << "verify_tol " << format_real(r.verify_tol) << '\n';
}

void print_penrose(std::ostream& out, const PenroseReport& r, Mode mode, std::size_t rank) {
  out << "# penrose\n";
  out << "mode " << to_string(mode) << '\n';
  out << "rank " << rank << '\n';
  for (std::size_t k = 0; k < 4; ++k) {
    out << 'c' << (k + 1) << ' ' << yes_no(r.holds[k]) << ' ' << format_real(r.defects[k]) << '\n';
  }
  out << "class " << r.class_label << '\n';
  out << "tol " << format_real(r.tol) << '\n';
}

void print_profile(std::ostream& out, const ComplexityReport& r, std::optional<double> tau) {
  out << "# profile " << to_string(r.mode) << '\n';
  out << "m " << r.m << '\n';
  out << "n " << r.n << '\n';
  out << "trials " << r.trials << '\n';
  out << "deterministic " << yes_no(r.deterministic) << '\n';
  out << "fit_points " << r.fit_points << '\n';
  out << "slope " << format_real(r.per_step_fit.slope) << '\n';
  out << "intercept " << format_real(r.per_step_fit.intercept) << '\n';
  out << "slope_ratio " << format_real(r.slope_ratio) << '\n';
  out << "reference_slope " << format_real(r.reference_slope) << '\n';
  out << "lower_bound_ops " << r.lower_bound_ops << '\n';
  out << "upper_bound_ops " << r.upper_bound_ops << '\n';
  out << "lower_model " << format_real(r.lower_model) << '\n';
  out << "upper_model " << format_real(r.upper_model) << '\n';
  out << "bound_constant " << format_real(r.bound_constant) << '\n';
  if (tau) out << "added_work " << format_real(added_work(r.per_step, *tau)) << '\n';
  out << "model_consistent " << yes_no(r.model_consistent) << '\n';
  out << "per_step";
  for (std::uint64_t d : r.per_step) out << ' ' << d;
  out << '\n';
}

// --tol beats INSITU_TOL beats the built-in default.
std::optional<double> resolve_tol(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw ArgumentError("--tol must be > 0");
    return flag;
  }
  if (const char* env = std::getenv(kTolEnvVar); env && *env) {
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ArgumentError(std::string(kTolEnvVar) + " is not a number: '" + env + "'");
    }
    if (!(v > 0.0)) throw ArgumentError(std::string(kTolEnvVar) + " must be > 0");
    return v;
  }
  return std::nullopt;
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ArgumentError("cannot open output file '" + path + "'");
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct SolveArgs {
  std::string mode = "row";
  std::string matrix;
  std::string rhs;
  std::optional<double> tol;
  double verify_tol = kDefaultVerifyTol;
  bool emit_g = false;
  bool emit_p = false;
  bool strict = false;
  std::string out;
};

struct StreamArgs {
  std::string mode = "row";
  std::string input = "-";
  std::string rhs;
  std::optional<double> tol;
  double verify_tol = kDefaultVerifyTol;
  bool watch = false;
  bool emit_g = false;
  bool emit_p = false;
  bool strict = false;
  std::string out;
};

struct PenroseArgs {
  std::string mode = "row";
  std::string matrix;
  std::optional<double> tol;
  std::optional<double> penrose_tol;
};

struct ProfileArgs {
  std::size_t m = 64;
  std::size_t n = 32;
  std::size_t trials = 3;
  std::string mode = "both";
  std::optional<double> tau;
  std::uint64_t seed = 1;
};

struct MultiArgs {
  std::string mode = "row";
  std::string matrix;
  std::string rhs;
  std::optional<double> tol;
  std::string out;
};

int run_solve(const SolveArgs& args, std::ostream& out) {
  const Mode mode = parse_mode(args.mode);
  const Matrix a = read_matrix_file(args.matrix);
  const Vector b = as_vector(read_matrix_file(args.rhs));
  SolveOptions opts;
  opts.tol = resolve_tol(args.tol);
  opts.want_g = args.emit_g;
  opts.want_p = args.emit_p;
  opts.verify_tol = args.verify_tol;
  const SolveResult r =
      mode == Mode::Row ? solve_row_minnorm(a, b, opts) : solve_col_lsq(a, b, opts);
  Sink sink(args.out, out);
  print_result(sink.get(), r, mode, a.rows(), a.cols());
  return args.strict && r.inconsistent ? kExitInconsistent : kExitOk;
}

void print_step(std::ostream& out, const StepReport& s, double running_norm) {
  out << "step " << (s.index + 1) << ' ' << (s.was_dependent ? "dependent" : "independent")
      << " norm " << format_real(running_norm) << " ops " << s.ops_used;
  if (s.inconsistent) out << " inconsistent";
  out << " increment";
  for (const Complex& z : s.increment.entries()) out << ' ' << format_pair(z);
  out << '\n';
}

int run_stream(const StreamArgs& args, std::istream& in, std::ostream& out) {
  const Mode mode = parse_mode(args.mode);
  std::ifstream file;
  std::istream* source = &in;
  if (args.input != "-") {
    file.open(args.input);
    if (!file) throw ArgumentError("cannot open input file '" + args.input + "'");
    source = &file;
  }
  VectorStreamReader reader(*source);
  OnlineOptions opts;
  opts.tol = resolve_tol(args.tol);
  opts.accumulate_g = args.emit_g;
  opts.verify_tol = args.verify_tol;

  Sink sink(args.out, out);
  std::ostream& os = sink.get();
  std::size_t inconsistent_steps = 0;
  SolveResult result{Vector(1)};
  std::size_t m = 0;
  std::size_t n = 0;

  if (mode == Mode::Row) {
    std::optional<OnlineRowSolver> solver;
    while (auto v = reader.next()) {
      if (!solver) {
        if (v->size() < 2) throw ParseError(reader.line(), "row stream lines need a_i... b_i");
        solver.emplace(v->size() - 1, opts);
      }
      if (v->size() != solver->n() + 1) {
        throw ParseError(reader.line(), "expected " + std::to_string(solver->n() + 1) +
                                            " entries (row of A then b_i)");
      }
      const StepReport s = solver->push(std::span<const Complex>(*v).first(solver->n()), v->back());
      inconsistent_steps += s.inconsistent ? 1 : 0;
      if (args.watch) print_step(os, s, solver->norm_history().back());
    }
    if (!solver) throw ParseError(reader.line(), "stream contained no rows");
    m = solver->rows_seen();
    n = solver->n();
    result = solver->finalize(args.emit_p);
  } else {
    std::optional<Vector> b;
    if (!args.rhs.empty()) b = as_vector(read_matrix_file(args.rhs));
    std::optional<OnlineColSolver> solver;
    while (auto v = reader.next()) {
      if (!b) {
        b = Vector(*v);
        continue;
      }
      if (!solver) solver.emplace(*b, opts);
      if (v->size() != b->dim()) {
        throw ParseError(reader.line(), "expected " + std::to_string(b->dim()) +
                                            " entries per column");
      }
      const StepReport s = solver->push(*v);
      if (args.watch) {
        print_step(os, s, norm(std::span<const Complex>(solver->x_p())));
      }
    }
    if (!solver) throw ParseError(reader.line(), "stream contained no columns");
    m = solver->m();
    n = solver->cols_seen();
    result = solver->finalize(args.emit_p);
  }

  print_result(os, result, mode, m, n);
  os << "steps " << (mode == Mode::Row ? m : n) << '\n';
  os << "inconsistent_steps " << inconsistent_steps << '\n';
  os << "terminated " << (reader.saw_end_marker() ? "end-marker" : "end-of-input") << '\n';
  return args.strict && result.inconsistent ? kExitInconsistent : kExitOk;
}

int run_penrose(const PenroseArgs& args, std::ostream& out) {
  const Mode mode = parse_mode(args.mode);
  const Matrix a = read_matrix_file(args.matrix);
  const std::optional<double> tol = resolve_tol(args.tol);
  const Factorization f =
      mode == Mode::Row ? row_orthonormalize(a, tol) : col_orthonormalize(a, tol);
  const Matrix g = mode == Mode::Row ? gen_inverse_row(f) : gen_inverse_col(f);
  print_penrose(out, penrose_check(a, g, args.penrose_tol), mode, f.rank());
  return kExitOk;
}

int run_profile(const ProfileArgs& args, std::ostream& out) {
  if (args.mode != "both") parse_mode(args.mode);
  if (args.mode == "row" || args.mode == "both") {
    print_profile(out, profile_row_solver(args.m, args.n, args.trials, args.seed), args.tau);
  }
  if (args.mode == "col" || args.mode == "column" || args.mode == "both") {
    print_profile(out, profile_col_solver(args.m, args.n, args.trials, args.seed), args.tau);
  }
  return kExitOk;
}

int run_multi(const MultiArgs& args, std::ostream& out) {
  const Mode mode = parse_mode(args.mode);
  const Matrix a = read_matrix_file(args.matrix);
  const Matrix b = read_matrix_file(args.rhs);
  const MatrixSolveResult r = solve_matrix_rhs(a, b, mode, resolve_tol(args.tol));
  Sink sink(args.out, out);
  std::ostream& os = sink.get();
  print_matrix(os, "X_p", r.x_p);
  os << "# summary\n";
  os << "mode " << to_string(mode) << '\n';
  os << "m " << a.rows() << '\n';
  os << "n " << a.cols() << '\n';
  os << "rhs " << b.cols() << '\n';
  os << "rank " << r.rank << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Direct solver for A x = b by in-place Gram-Schmidt orthonormalization", "insitu"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Batch solve of A x = b");
  solve_cmd->add_option("--mode", solve.mode, "row (minimum norm) or col (least squares)")
      ->check(CLI::IsMember({"row", "col", "column"}));
  solve_cmd->add_option("--matrix", solve.matrix, "A (Matrix Market or dense text)")->required();
  solve_cmd->add_option("--rhs", solve.rhs, "b (single row or column)")->required();
  solve_cmd->add_flag("--emit-g", solve.emit_g, "Print the generalized inverse G");
  solve_cmd->add_flag("--emit-p", solve.emit_p, "Print the null-space projector P");
  solve_cmd->add_option("--tol", solve.tol, "Zero-vector tolerance");
  solve_cmd->add_option("--verify-tol", solve.verify_tol, "Relative residual threshold");
  solve_cmd->add_flag("--strict", solve.strict, "Exit 1 if the system is inconsistent");
  solve_cmd->add_option("--out", solve.out, "Write output to FILE");

  StreamArgs stream;
  CLI::App* stream_cmd =
      app.add_subcommand("stream", "Online solve, one row of [A|b] (or column of A) per line");
  stream_cmd->add_option("--mode", stream.mode, "row or col")
      ->check(CLI::IsMember({"row", "col", "column"}));
  stream_cmd->add_option("--input", stream.input, "Input file, '-' for standard input");
  stream_cmd->add_option("--rhs", stream.rhs, "b for col mode (otherwise the first line)");
  stream_cmd->add_flag("--watch", stream.watch, "Print each increment and the running norm");
  stream_cmd->add_flag("--emit-g", stream.emit_g, "Accumulate and print G");
  stream_cmd->add_flag("--emit-p", stream.emit_p, "Print P");
  stream_cmd->add_option("--tol", stream.tol, "Zero-vector tolerance");
  stream_cmd->add_option("--verify-tol", stream.verify_tol, "Relative residual threshold");
  stream_cmd->add_flag("--strict", stream.strict, "Exit 1 if the system is inconsistent");
  stream_cmd->add_option("--out", stream.out, "Write output to FILE");

  PenroseArgs penrose;
  CLI::App* penrose_cmd =
      app.add_subcommand("penrose", "Check the Penrose conditions of the method's G");
  penrose_cmd->add_option("--matrix", penrose.matrix, "A")->required();
  penrose_cmd->add_option("--mode", penrose.mode, "row or col")
      ->check(CLI::IsMember({"row", "col", "column"}));
  penrose_cmd->add_option("--tol", penrose.tol, "Zero-vector tolerance");
  penrose_cmd->add_option("--penrose-tol", penrose.penrose_tol, "Defect threshold");

  ProfileArgs profile;
  CLI::App* profile_cmd =
      app.add_subcommand("profile", "Count per-step operations of the online solvers");
  profile_cmd->add_option("--m", profile.m, "Rows")->check(CLI::Range(2, 100000));
  profile_cmd->add_option("--n", profile.n, "Columns")->check(CLI::Range(2, 100000));
  profile_cmd->add_option("--trials", profile.trials, "Random instances")
      ->check(CLI::Range(1, 100000));
  profile_cmd->add_option("--mode", profile.mode, "row, col or both")
      ->check(CLI::IsMember({"row", "col", "column", "both"}));
  profile_cmd->add_option("--tau", profile.tau, "Acquisition interval in op units")
      ->check(CLI::NonNegativeNumber);
  profile_cmd->add_option("--seed", profile.seed, "Random seed");

  MultiArgs multi;
  CLI::App* multi_cmd = app.add_subcommand("solve-multi", "Solve A X = B");
  multi_cmd->add_option("--matrix", multi.matrix, "A")->required();
  multi_cmd->add_option("--rhs", multi.rhs, "B")->required();
  multi_cmd->add_option("--mode", multi.mode, "row or col")
      ->check(CLI::IsMember({"row", "col", "column"}));
  multi_cmd->add_option("--tol", multi.tol, "Zero-vector tolerance");
  multi_cmd->add_option("--out", multi.out, "Write output to FILE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve, out);
    if (*stream_cmd) return run_stream(stream, in, out);
    if (*penrose_cmd) return run_penrose(penrose, out);
    if (*profile_cmd) return run_profile(profile, out);
    if (*multi_cmd) return run_multi(multi, out);
  } catch (const std::exception& e) {
    err << "insitu: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace insitu
