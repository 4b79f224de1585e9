// End-to-end checks of the command-line binary. Arguments: path to the
// agriont executable and the bundled data directory.
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

struct RunResult {
  int exitCode = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run(const std::string& command) {
  RunResult r;
  std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void check(bool cond, const std::string& what, const RunResult& r) {
  if (cond) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAILED: " << what << "\n--- exit " << r.exitCode
              << ", output:\n" << r.output << "---\n";
  }
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <agriont-binary> <data-dir>\n";
    return 64;
  }
  std::string bin = quoted(argv[1]);
  std::string dataDir = argv[2];
  fs::path tmp =
      fs::temp_directory_path() / ("agriont_cli_test_" +
                                   std::to_string(::getpid()));
  fs::create_directories(tmp);
  std::string schemaTtl = quoted((tmp / "core.ttl").string());
  std::string exampleTtl = quoted((tmp / "example.ttl").string());

  {
    RunResult r = run(bin);
    check(r.exitCode == 1, "no subcommand exits 1 with usage text", r);
    check(r.output.find("Usage") != std::string::npos ||
              r.output.find("usage") != std::string::npos ||
              r.output.find("subcommand") != std::string::npos,
          "usage text mentions subcommands", r);
  }
  {
    RunResult r = run(bin + " --version");
    check(r.exitCode == 0 && !r.output.empty(), "--version prints and exits 0",
          r);
  }
  {
    RunResult r = run(bin + " schema --out " + schemaTtl);
    check(r.exitCode == 0, "schema subcommand writes a file", r);
    RunResult stats = run(bin + " stats " + schemaTtl + " --format json");
    check(stats.exitCode == 0 &&
              stats.output.find("\"classCount\"") != std::string::npos &&
              stats.output.find("\"classCount\": 0") == std::string::npos,
          "stats reports a non-zero classCount as JSON", stats);
  }
  {
    RunResult r = run(bin + " example --out " + exampleTtl);
    check(r.exitCode == 0, "example subcommand writes the bundled dataset", r);
    RunResult q = run(
        bin + " query " + exampleTtl +
        " --query \"SELECT ?w WHERE { agriont:field_0365 "
        "agriont:hasCondition ?w }\" --infer");
    check(q.exitCode == 0 &&
              q.output.find("weather_1150") != std::string::npos,
          "example query returns the weather condition", q);
  }
  {
    std::string inferred = quoted((tmp / "inferred.ttl").string());
    RunResult r = run(bin + " infer " + exampleTtl + " --out " + inferred);
    check(r.exitCode == 0, "infer subcommand succeeds", r);
    RunResult q = run(bin + " query " + inferred +
                      " --query \"SELECT ?x WHERE { ?x a agriont:Product }\"");
    check(q.exitCode == 0 &&
              q.output.find("product_0871") != std::string::npos,
          "materialized file answers a hierarchy query", q);
  }
  {
    std::string sql = quoted((tmp / "schema.sql").string());
    RunResult r = run(bin + " gen-ddl " + exampleTtl + " --out " + sql);
    check(r.exitCode == 0, "gen-ddl succeeds on the example graph", r);
    std::ifstream in(tmp / "schema.sql");
    std::string ddl((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
    RunResult fake;
    fake.output = ddl;
    check(ddl.find("CREATE TABLE farm") != std::string::npos,
          "DDL contains the farm table", fake);
  }
  {
    std::string graph = quoted((tmp / "geo.ttl").string());
    RunResult s = run(bin + " schema --out " + graph);
    RunResult r = run(bin + " ingest geo --countries " +
                      quoted(dataDir + "/countries.csv") + " --subdivisions " +
                      quoted(dataDir + "/subdivisions.csv") + " " + graph);
    check(s.exitCode == 0 && r.exitCode == 0, "geo ingest succeeds", r);
    RunResult d = run(bin + " ingest diseases " +
                      quoted(dataDir + "/diseases.csv") + " " + graph);
    check(d.exitCode == 0, "disease ingest succeeds", d);
  }
  {
    std::ofstream bad(tmp / "bad.ttl");
    bad << "this is not turtle\n";
    bad.close();
    RunResult r = run(bin + " stats " + quoted((tmp / "bad.ttl").string()));
    check(r.exitCode == 1, "parse errors exit 1", r);
    RunResult missing =
        run(bin + " stats " + quoted((tmp / "missing.ttl").string()));
    check(missing.exitCode == 2, "missing input files exit 2", missing);
  }

  fs::remove_all(tmp);
  return failures;
}
