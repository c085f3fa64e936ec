#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mols/design.hpp"
#include "mols/sha256.hpp"

using namespace mols;

namespace {

std::string cli_path() {
  const char* p = std::getenv("MOLS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "MOLS_CLI must point at the command-line binary");
  return p;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  static int serial = 0;
  std::string out = "/tmp/mols_cli_out_" + std::to_string(++serial);
  std::string err = "/tmp/mols_cli_err_" + std::to_string(serial);
  std::string cmd = cli_path() + " " + args + " >" + out + " 2>" + err;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

} // namespace

TEST_CASE("cli exit codes: success, domain error, usage error") {
  RunResult ok = run("check --q 13 --alphas 1,2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("VIOLATED") != std::string::npos);
  CHECK(ok.out.find("a1,a2,C1") != std::string::npos);

  RunResult domain = run("build --q 0 --pairs 1:1 --out /tmp/mols_cli_never.alist");
  CHECK(domain.exit_code == 1);
  CHECK(domain.err.find("NotPrimePower") != std::string::npos);
  // single-line diagnostic
  CHECK(std::count(domain.err.begin(), domain.err.end(), '\n') == 1);

  RunResult usage = run("simulate");
  CHECK(usage.exit_code == 2);
  CHECK(usage.err.find("Usage") != std::string::npos);

  RunResult badsub = run("frobnicate");
  CHECK(badsub.exit_code == 2);

  RunResult badpairs = run("build --q 5 --pairs 1:zz --out /tmp/mols_cli_never.alist");
  CHECK(badpairs.exit_code == 2);

  RunResult help = run("--help");
  CHECK(help.exit_code == 0);
  for (const char* sub :
       {"inspect", "check", "search", "build", "stopsets", "simulate", "export-alist"})
    CHECK(help.out.find(sub) != std::string::npos);
}

TEST_CASE("cli inspect and search output") {
  RunResult ins = run("inspect --q 4 --pairs 1:1,2:1");
  CHECK(ins.exit_code == 0);
  CHECK(ins.out.find("orthogonal(0,1) = yes") != std::string::npos);
  CHECK(ins.out.find("latin=yes") != std::string::npos);

  RunResult sr = run("search --q 13 --m 2 --limit 100");
  CHECK(sr.exit_code == 0);
  CHECK(sr.out == "1,3\n1,5\n1,6\n1,8\n1,9\n1,11\n");

  RunResult none = run("search --q 4 --m 2 --limit 10");
  CHECK(none.exit_code == 1);
  CHECK(none.err.find("NoneFound") != std::string::npos);
}

TEST_CASE("cli build, manifest digests, and the alist round trip") {
  std::string dir = "/tmp/mols_cli_case1";
  std::string mk = "mkdir -p " + dir;
  REQUIRE(std::system(mk.c_str()) == 0);

  RunResult build = run("build --q 7 --pairs 1:1,3:1 --out " + dir + "/h.alist");
  CHECK(build.exit_code == 0);
  CHECK(build.out.find("28 x 49") != std::string::npos);

  // the library reads back the same structure
  SparseMatrix h = read_alist(dir + "/h.alist");
  CHECK(h.rows() == 28);
  CHECK(h.cols() == 49);

  // manifest digest matches the artifact
  std::string manifest = slurp(dir + "/h.alist.manifest.json");
  CHECK(manifest.find("\"subcommand\": \"build\"") != std::string::npos);
  CHECK(manifest.find(sha256_file_hex(dir + "/h.alist")) != std::string::npos);

  // reruns are byte-identical (manifest included)
  RunResult again = run("build --q 7 --pairs 1:1,3:1 --out " + dir + "/h2.alist");
  CHECK(again.exit_code == 0);
  CHECK(slurp(dir + "/h.alist") == slurp(dir + "/h2.alist"));

  // export-alist round trip preserves the digest
  RunResult exp = run("export-alist --in " + dir + "/h.alist --out " + dir + "/h3.alist");
  CHECK(exp.exit_code == 0);
  CHECK(sha256_file_hex(dir + "/h.alist") == sha256_file_hex(dir + "/h3.alist"));

  std::string rm = "rm -rf " + dir;
  CHECK(std::system(rm.c_str()) == 0);
}

TEST_CASE("cli stopsets report with provenance") {
  std::string dir = "/tmp/mols_cli_case2";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);

  REQUIRE(run("build --q 5 --pairs 1:1,2:1 --out " + dir + "/h.alist").exit_code == 0);
  RunResult census =
      run("stopsets --in " + dir + "/h.alist --cap 8 --q 5 --pairs 1:1,2:1 --out " + dir +
          "/report.json");
  CHECK(census.exit_code == 0);
  std::string report = slurp(dir + "/report.json");
  CHECK(report.find("\"q\": 5") != std::string::npos);
  CHECK(report.find("\"used_symmetry\": true") != std::string::npos);

  // provenance that does not match the file is rejected
  RunResult lie =
      run("stopsets --in " + dir + "/h.alist --cap 6 --q 5 --pairs 1:1,3:1 --out " + dir +
          "/lie.json");
  CHECK(lie.exit_code == 1);
  CHECK(lie.err.find("OrderMismatch") != std::string::npos);

  // --q without --pairs is a usage error
  RunResult incomplete =
      run("stopsets --in " + dir + "/h.alist --cap 6 --q 5 --out " + dir + "/x.json");
  CHECK(incomplete.exit_code == 2);

  // census without provenance still works, on the generic path
  RunResult plain = run("stopsets --in " + dir + "/h.alist --cap 6 --out " + dir + "/plain.json");
  CHECK(plain.exit_code == 0);
  CHECK(slurp(dir + "/plain.json").find("\"used_symmetry\": false") != std::string::npos);
  CHECK(slurp(dir + "/plain.json").find("\"q\": null") != std::string::npos);

  // minimal-only mode runs and keeps the histogram keys
  RunResult minimal =
      run("stopsets --in " + dir + "/h.alist --cap 8 --q 5 --pairs 1:1,2:1 --minimal-only "
          "--out " + dir + "/minimal.json");
  CHECK(minimal.exit_code == 0);

  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("cli simulate is reproducible and log level does not leak into artifacts") {
  std::string dir = "/tmp/mols_cli_case3";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  REQUIRE(run("build --q 5 --pairs 1:1,2:1 --out " + dir + "/h.alist").exit_code == 0);

  std::string sim_args = "simulate --in " + dir + "/h.alist --eps 0.1:0.2:0.05 --trials 500 "
                         "--seed 99 --out ";
  CHECK(run(sim_args + dir + "/a.csv").exit_code == 0);
  CHECK(run(sim_args + dir + "/b.csv").exit_code == 0);
  CHECK(slurp(dir + "/a.csv") == slurp(dir + "/b.csv"));
  std::string csv = slurp(dir + "/a.csv");
  CHECK(csv.find("epsilon,trials,bit_errors,ber,word_failures,det_1") != std::string::npos);
  CHECK(csv.find("det_overflow") != std::string::npos);
  // three epsilon rows plus the header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);

  // seed recorded in the manifest
  CHECK(slurp(dir + "/a.csv.manifest.json").find("\"seed\": 99") != std::string::npos);

  // MOLS_LOG changes stderr only, never the artifact
  std::string logged = "MOLS_LOG=info " + cli_path() + " " + sim_args + dir +
                       "/c.csv >" + dir + "/log_out 2>" + dir + "/log_err";
  REQUIRE(std::system(logged.c_str()) == 0);
  CHECK(slurp(dir + "/c.csv") == csv);

  // workers never change the results
  CHECK(run(sim_args + dir + "/d.csv --workers 4").exit_code == 0);
  CHECK(slurp(dir + "/d.csv") == csv);

  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("cli qc build with generator export") {
  std::string dir = "/tmp/mols_cli_case4";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);

  RunResult qc = run("build --q 13 --pairs 1,3 --qc --out " + dir + "/qc.alist --gen " + dir +
                     "/g.txt");
  CHECK(qc.exit_code == 0);
  CHECK(qc.out.find("k=120") != std::string::npos);
  CHECK(qc.out.find("rank=49") != std::string::npos);
  std::string gen = slurp(dir + "/g.txt");
  CHECK(gen.rfind("MOLSG1 169 120", 0) == 0);
  CHECK(slurp(dir + "/g.txt.manifest.json").find("sha256") != std::string::npos);

  // truncation changes the column count
  RunResult tr = run("build --q 13 --pairs 1:1,3:1 --truncate 6 --out " + dir + "/t.alist");
  CHECK(tr.exit_code == 0);
  CHECK(tr.out.find("52 x 78") != std::string::npos);

  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
}
