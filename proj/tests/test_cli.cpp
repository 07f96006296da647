#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "insitu/cli.hpp"
#include "insitu/io.hpp"
#include "insitu/penrose.hpp"
#include "insitu/solve.hpp"
#include "cli_output.hpp"
#include "support.hpp"

using namespace insitu;
using namespace insitu::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "insitu");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("insitu-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string matrix(const std::string& name, const Matrix& a) const {
    return write(name, to_matrix_market(a));
  }

 private:
  fs::path path_;
};

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv(kTolEnvVar, value, 1); }
  ~EnvGuard() { ::unsetenv(kTolEnvVar); }
};

}  // namespace

TEST_CASE("cli solve: minimum-norm example") {
  TempDir dir;
  const std::string a = dir.write("a.txt", "1 1\n");
  const std::string b = dir.write("b.txt", "2\n");
  const Run r = cli({"solve", "--mode", "row", "--matrix", a, "--rhs", b});
  CHECK(r.code == kExitOk);
  CHECK(max_abs_diff(Vector(read_block(r.out, "# x_p ")), Vector{1, 1}) <= 1e-15);
  const auto kv = summary(r.out);
  CHECK(kv.at("rank") == "1");
  CHECK(kv.at("inconsistent") == "false");
  CHECK(kv.at("mode") == "row");
}

TEST_CASE("cli solve output matches the library bit for bit") {
  std::mt19937_64 rng(81);
  TempDir dir;
  for (const char* mode : {"row", "col"}) {
    const Matrix a = random_rank(7, 5, 3, true, rng);
    const Vector b = random_vector(7, true, rng);
    const Run r = cli({"solve", "--mode", mode, "--matrix", dir.matrix("a.mtx", a), "--rhs",
                       dir.matrix("b.mtx", Matrix::column(b)), "--emit-g", "--emit-p", "--tol",
                       "1e-9"});
    REQUIRE(r.code == kExitOk);
    const SolveOptions opts{.tol = 1e-9, .want_g = true, .want_p = true};
    const SolveResult lib = std::string(mode) == "row" ? solve_row_minnorm(a, b, opts)
                                                       : solve_col_lsq(a, b, opts);
    const std::vector<Complex> x = read_block(r.out, "# x_p ");
    CHECK(Vector(x) == lib.x_p);
    std::ostringstream g;
    write_matrix_market(g, *lib.g);
    CHECK(r.out.find("# G 5x7\n" + g.str()) != std::string::npos);
    std::ostringstream p;
    write_matrix_market(p, *lib.p);
    CHECK(r.out.find("# P 5x5\n" + p.str()) != std::string::npos);
    CHECK(summary(r.out).at("residual_norm") == format_real(lib.residual_norm));
  }
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  const std::string a = dir.write("a.txt", "1 0\n2 0\n");
  const std::string bad_b = dir.write("b.txt", "1\n7\n");
  SUBCASE("inconsistent, strict and lax") {
    const Run lax = cli({"solve", "--matrix", a, "--rhs", bad_b});
    CHECK(lax.code == kExitOk);
    CHECK(summary(lax.out).at("inconsistent") == "true");
    CHECK(cli({"solve", "--matrix", a, "--rhs", bad_b, "--strict"}).code == kExitInconsistent);
  }
  SUBCASE("usage and parse errors") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"solve", "--matrix", a}).code == kExitUsage);
    CHECK(cli({"solve", "--mode", "diag", "--matrix", a, "--rhs", bad_b}).code == kExitUsage);
    const Run missing = cli({"solve", "--matrix", "/nonexistent.mtx", "--rhs", bad_b});
    CHECK(missing.code == kExitUsage);
    CHECK(missing.err.rfind("insitu: ", 0) == 0);
    const std::string junk = dir.write("junk.mtx", "%%MatrixMarket matrix array real general\n2 2\n1\n");
    const Run parse = cli({"penrose", "--matrix", junk});
    CHECK(parse.code == kExitUsage);
    CHECK(parse.err.find("line") != std::string::npos);
    const std::string wide = dir.write("w.txt", "1 2 3\n");
    CHECK(cli({"solve", "--matrix", a, "--rhs", wide}).code == kExitUsage);
    CHECK(cli({"solve", "--matrix", a, "--rhs", bad_b, "--tol", "-1"}).code == kExitUsage);
  }
  SUBCASE("help") {
    const Run help = cli({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("stream") != std::string::npos);
  }
}

TEST_CASE("cli tolerance: flag over environment over default") {
  TempDir dir;
  const std::string a = dir.write("a.txt", "1 1\n");
  const std::string b = dir.write("b.txt", "2\n");
  CHECK(summary(cli({"solve", "--matrix", a, "--rhs", b}).out).at("tol") ==
        format_real(default_tolerance(1, 2)));
  {
    EnvGuard env("1e-6");
    CHECK(summary(cli({"solve", "--matrix", a, "--rhs", b}).out).at("tol") == format_real(1e-6));
    CHECK(summary(cli({"solve", "--matrix", a, "--rhs", b, "--tol", "1e-4"}).out).at("tol") ==
          format_real(1e-4));
  }
  {
    EnvGuard env("abc");
    CHECK(cli({"solve", "--matrix", a, "--rhs", b}).code == kExitUsage);
  }
}

TEST_CASE("cli penrose: column method on a full-column-rank matrix") {
  TempDir dir;
  const std::string a = dir.write("a.txt", "1 0\n2 1\n0 3\n");
  const Run r = cli({"penrose", "--mode", "col", "--matrix", a});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("{1234}") != std::string::npos);
  const std::string dup = dir.write("d.txt", "1 2 3\n1 2 3\n0 1 1\n");
  const auto kv = summary(cli({"penrose", "--mode", "row", "--matrix", dup}).out);
  CHECK(kv.at("class") == "{124}");
  CHECK(kv.at("c3").rfind("false ", 0) == 0);
}

TEST_CASE("cli stream --watch on three rows") {
  const Run r = cli({"stream", "--mode", "row", "--watch"}, "1 0 0 1\n0 2 0 2\n1 1 1 3\n#end\n");
  CHECK(r.code == kExitOk);
  std::vector<double> norms;
  for (const WatchLine& w : watch_lines(r.out)) {
    CHECK(w.increment.size() == 3);
    norms.push_back(w.norm);
  }
  REQUIRE(norms.size() == 3);
  CHECK(norms[1] >= norms[0]);
  CHECK(norms[2] >= norms[1]);
  const auto kv = summary(r.out);
  CHECK(kv.at("terminated") == "end-marker");
  CHECK(kv.at("steps") == "3");
  CHECK(read_block(r.out, "# x_p ").size() == 3);
}

TEST_CASE("cli stream equals cli solve") {
  std::mt19937_64 rng(82);
  TempDir dir;
  for (int t = 0; t < 4; ++t) {
    const Matrix a = random_rank(6, 4, t < 2 ? 4 : 2, t % 2 == 1, rng);
    const Vector b = t % 3 == 0 ? random_vector(6, true, rng) : matvec(a, random_vector(4, true, rng));
    const Run s = cli({"solve", "--mode", "row", "--matrix", dir.matrix("a.mtx", a), "--rhs",
                       dir.matrix("b.mtx", Matrix::column(b))});
    const Run o = cli({"stream", "--mode", "row", "--input", dir.write("s.txt", row_stream_text(a, b))});
    REQUIRE(s.code == kExitOk);
    REQUIRE(o.code == kExitOk);
    const Vector xs(read_block(s.out, "# x_p "));
    const Vector xo(read_block(o.out, "# x_p "));
    CHECK(rel_diff(xo, xs) <= 1e-10);
    CHECK(summary(o.out).at("terminated") == "end-marker");

    const Run cs = cli({"solve", "--mode", "col", "--matrix", dir.matrix("a.mtx", a), "--rhs",
                        dir.matrix("b.mtx", Matrix::column(b))});
    const Run co = cli({"stream", "--mode", "col"}, col_stream_text(a, b));
    REQUIRE(co.code == kExitOk);
    CHECK(rel_diff(Vector(read_block(co.out, "# x_p ")), Vector(read_block(cs.out, "# x_p "))) <= 1e-10);
    CHECK(summary(co.out).at("terminated") == "end-of-input");
  }
}

TEST_CASE("cli stream errors") {
  CHECK(cli({"stream"}, "1 2\n1 2 3\n").code == kExitUsage);
  CHECK(cli({"stream"}, "").code == kExitUsage);
  CHECK(cli({"stream"}, "1\n").code == kExitUsage);
  CHECK(cli({"stream", "--mode", "col"}, "1 2\n1\n").code == kExitUsage);
  CHECK(cli({"stream", "--strict"}, "1 0 1\n2 0 7\n").code == kExitInconsistent);
}

TEST_CASE("cli profile and solve-multi") {
  const Run p = cli({"profile", "--m", "16", "--n", "8", "--trials", "2", "--tau", "50"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("# profile row") != std::string::npos);
  CHECK(p.out.find("# profile col") != std::string::npos);
  CHECK(p.out.find("model_consistent true") != std::string::npos);
  CHECK(p.out.find("added_work ") != std::string::npos);
  CHECK(cli({"profile", "--m", "1"}).code == kExitUsage);

  TempDir dir;
  const Matrix a{{2, 0}, {0, 4}};
  const Matrix b{{2, 4, 6}, {4, 8, 12}};
  const Run m = cli({"solve-multi", "--matrix", dir.matrix("a.mtx", a), "--rhs", dir.matrix("b.mtx", b)});
  CHECK(m.code == kExitOk);
  std::ostringstream want;
  write_matrix_market(want, solve_matrix_rhs(a, b, Mode::Row).x_p);
  CHECK(m.out.find("# X_p 2x3\n" + want.str()) != std::string::npos);
}

TEST_CASE("cli --out writes to a file") {
  TempDir dir;
  const std::string a = dir.write("a.txt", "1 1\n");
  const std::string b = dir.write("b.txt", "2\n");
  const std::string out = dir.write("out.txt", "");
  const Run r = cli({"solve", "--matrix", a, "--rhs", b, "--out", out});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream f(out);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.find("rank 1") != std::string::npos);
}
