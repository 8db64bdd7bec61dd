// Drives the built CLI binary end to end: exit codes, JSON stability, and
// the blow-up -> classify round trip. Usage: resgraph_cli_test <cli-path>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++failures;
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    expect(false, "popen failed for: " + command);
    return result;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: resgraph_cli_test <cli-path>\n";
    return 2;
  }
  const std::string cli = argv[1];

  // catalog listing
  {
    RunResult r = run(cli + " catalog");
    expect(r.exit_code == 0, "catalog exits 0");
    for (const char* name : {"A1", "E8", "simple-elliptic-deg1", "laufer-chain",
                             "genus2-deg2", "cusp-triangle", "nonnegdef"}) {
      expect(contains(r.output, name), std::string("catalog lists ") + name);
    }
  }

  // classify: content and byte stability
  {
    RunResult first = run(cli + " classify catalog:laufer-chain --json");
    RunResult second = run(cli + " classify catalog:laufer-chain --json");
    expect(first.exit_code == 0, "classify exits 0");
    expect(first.output == second.output, "classify --json is byte-stable");
    expect(contains(first.output, "\"is_elliptic\": true"), "laufer-chain is elliptic");
    expect(contains(first.output, "\"degree\": 1"), "laufer-chain degree 1");
    expect(contains(first.output, "\"E2\": 1"), "E_min contains E2");
    expect(contains(first.output, "\"is_numerically_gorenstein\": true"),
           "numerically Gorenstein");
    expect(contains(first.output, "\"3/1\""), "rationals as p/q strings");
  }

  // exit code table
  {
    expect(run(cli + " check catalog:A1").exit_code == 0, "check A1 -> 0");
    expect(run(cli + " check catalog:nonnegdef").exit_code == 2, "check nonnegdef -> 2");
    expect(run(cli + " classify catalog:nonnegdef").exit_code == 2,
           "classify nonnegdef -> 2 (domain)");
    expect(run(cli + " classify /no/such/file.json").exit_code == 1,
           "missing file -> 1");
    expect(run(cli + " classify catalog:no-such-graph").exit_code == 1,
           "unknown catalog name -> 1");
    expect(run(cli + " kato catalog:laufer-chain --cycle 'E2=1,E1=1,E0=1' --q 2 --pg 2")
                   .exit_code == 3,
           "kato with colength < 1 -> 3");
    expect(run(cli + " kato catalog:A1 --cycle 'E=1' --q 0 --pg 0").exit_code == 0,
           "kato sane inputs -> 0");
    expect(run(cli + " maxell-check catalog:A1").exit_code == 2,
           "maxell-check on a rational graph -> 2");
    expect(run(cli + " maxell-check catalog:cusp-triangle").exit_code == 2,
           "maxell-check at degree 3 -> 2");
    expect(run(cli + " pg-max-ideal catalog:laufer-chain --cycle 'E2=1'").exit_code == 2,
           "pg-max-ideal below Z_E -> 2");
  }

  // kato content
  {
    RunResult r = run(cli + " kato catalog:A1 --cycle 'E=1' --q 0 --pg 0 --json");
    expect(r.exit_code == 0, "kato exits 0");
    expect(contains(r.output, "\"colength\": 1"), "kato colength 1 on A1");
  }

  // blow-up output re-ingests cleanly
  {
    const std::string path = "/tmp/resgraph_cli_test_blown.json";
    RunResult blow = run(cli + " blowup catalog:laufer-chain --center E0 --json > " + path +
                         " && cat " + path);
    expect(blow.exit_code == 0, "blowup writes JSON");
    RunResult round = run(cli + " classify " + path);
    expect(round.exit_code == 0, "blowup output re-ingested by classify");
    expect(contains(round.output, "F1"), "classified graph contains the new vertex");
    std::remove(path.c_str());
  }

  // pullback command
  {
    RunResult r = run(cli + " pullback catalog:genus2-deg2 --center E --cycle 'E=2' --json");
    expect(r.exit_code == 0, "pullback exits 0");
    expect(contains(r.output, "\"F1\": 2"), "pullback coefficient at the new vertex");
  }

  // command matrix over the catalog
  {
    const std::vector<std::string> definite = {"A1",          "E8",
                                               "simple-elliptic-deg1", "laufer-chain",
                                               "genus2-deg2", "cusp-triangle"};
    const std::vector<std::string> elliptic = {"simple-elliptic-deg1", "laufer-chain",
                                               "cusp-triangle"};
    for (const std::string& name : definite) {
      for (const char* command :
           {"check", "fundamental-cycle", "canonical-cycle", "classify", "degree",
            "reduction"}) {
        RunResult r = run(cli + " " + command + " catalog:" + name);
        expect(r.exit_code == 0, std::string(command) + " on " + name + " -> 0");
      }
      const std::string bound = name == "E8" ? " --bound 1" : " --bound 2";
      RunResult r = run(cli + " oracle catalog:" + name + bound);
      expect(r.exit_code == 0, "oracle on " + name + " -> 0");
    }
    for (const std::string& name : elliptic) {
      expect(run(cli + " elliptic-sequence catalog:" + name).exit_code == 0,
             "elliptic-sequence on " + name + " -> 0");
      expect(run(cli + " tomari-verify catalog:" + name).exit_code == 0,
             "tomari-verify on " + name + " -> 0");
    }
    for (const char* name : {"A1", "E8", "genus2-deg2"}) {
      expect(run(cli + " elliptic-sequence catalog:" + std::string(name)).exit_code == 2,
             std::string("elliptic-sequence on ") + name + " -> 2");
    }
  }

  // relative support for the elliptic sequence
  {
    RunResult r =
        run(cli + " elliptic-sequence catalog:laufer-chain --support E2,E1 --json");
    expect(r.exit_code == 0, "elliptic-sequence with explicit support");
    expect(contains(r.output, "\"m\": 1"), "relative sequence has m = 1");
  }

  if (failures == 0) {
    std::cout << "cli test: all checks passed\n";
    return 0;
  }
  std::cout << "cli test: " << failures << " checks failed\n";
  return 1;
}
