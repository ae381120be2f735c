#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Path to the built binary, injected by the build so the test never guesses.
#ifndef LATENTFS_CLI_PATH
#error "LATENTFS_CLI_PATH must point at the latentfs binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string &stem) {
  static int counter = 0;
  return fs::temp_directory_path() / (stem + "_" + std::to_string(counter++));
}

RunResult run_cli(const std::string &args) {
  const fs::path out_path = temp_file("cli_out");
  const fs::path err_path = temp_file("cli_err");
  const std::string cmd = std::string(LATENTFS_CLI_PATH) + " " + args + " >" +
                          out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

// The bracketed slice following "key": [ ... ].
std::string json_array(const std::string &json, const std::string &key) {
  const auto at = json.find("\"" + key + "\": [");
  REQUIRE(at != std::string::npos);
  const auto open = json.find('[', at);
  const auto close = json.find(']', open);
  return json.substr(open + 1, close - open - 1);
}

int entry_count(const std::string &array_body) {
  if (array_body.empty()) return 0;
  int commas = 0;
  for (char c : array_body) commas += (c == ',');
  return commas + 1;
}

std::vector<int> parse_int_array(const std::string &array_body) {
  std::vector<int> values;
  std::istringstream in(array_body);
  std::string token;
  while (std::getline(in, token, ',')) values.push_back(std::stoi(token));
  return values;
}

// One shared synthetic table for the rank tests.
const fs::path &fixture_csv() {
  static fs::path path = [] {
    fs::path p = temp_file("cli_fixture");
    p += ".csv";
    RunResult res = run_cli("synth --samples 40 --informative 3 --noise 7 --seed 5 --output " +
                            p.string());
    REQUIRE(res.code == 0);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("help exits zero and lists the subcommands") {
  RunResult res = run_cli("--help");
  CHECK(res.code == 0);
  CHECK(contains(res.out, "rank"));
  CHECK(contains(res.out, "synth"));
  CHECK(contains(res.out, "verify"));
}

TEST_CASE("flag misuse exits 2") {
  CHECK(run_cli("").code == 2);                                // missing subcommand
  CHECK(run_cli("rank").code == 2);                            // missing --input
  CHECK(run_cli("rank --input /no/such/file.csv").code == 2);  // ExistingFile check
  CHECK(run_cli("frob").code == 2);                            // unknown subcommand
  CHECK(run_cli("verify --trials 0").code == 2);
  CHECK(run_cli("verify --no-such-flag").code == 2);
  CHECK(run_cli("synth --output x.csv --separation 0").code == 2);
  const std::string in = fixture_csv().string();
  CHECK(run_cli("rank --input " + in + " --damping 1.5").code == 2);
  CHECK(run_cli("rank --input " + in + " --bins 1").code == 2);
  CHECK(run_cli("rank --input " + in + " --phi-mode wild").code == 2);
}

TEST_CASE("synth writes the table and its sidecar") {
  fs::path csv = temp_file("cli_synth");
  csv += ".csv";
  RunResult res = run_cli("synth --samples 30 --informative 2 --noise 3 --seed 9 --output " +
                          csv.string());
  CHECK(res.code == 0);
  CHECK(contains(res.err, "synth: wrote"));

  const std::string table = slurp(csv);
  CHECK(contains(table, "f0,f1,f2,f3,f4,label"));
  int lines = 0;
  for (char c : table) lines += (c == '\n');
  CHECK(lines == 31);  // header plus 30 rows

  const std::string meta = slurp(csv.string() + ".meta.json");
  CHECK(contains(meta, "\"informative\": ["));
  CHECK(contains(meta, "\"n_samples\": 30"));
  CHECK(contains(meta, "\"seed\": 9"));
  CHECK(entry_count(json_array(meta, "informative")) == 2);
}

TEST_CASE("synth output is a pure function of the seed") {
  fs::path a = temp_file("cli_seed_a"), b = temp_file("cli_seed_b"), c = temp_file("cli_seed_c");
  REQUIRE(run_cli("synth --samples 25 --seed 77 --output " + a.string()).code == 0);
  REQUIRE(run_cli("synth --samples 25 --seed 77 --output " + b.string()).code == 0);
  REQUIRE(run_cli("synth --samples 25 --seed 78 --output " + c.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a.string() + ".meta.json") == slurp(b.string() + ".meta.json"));
  CHECK(slurp(a) != slurp(c));
}

TEST_CASE("rank emits the ranking JSON and a summary line") {
  RunResult res = run_cli("rank --input " + fixture_csv().string());
  CHECK(res.code == 0);
  CHECK(contains(res.out, "\"order\": ["));
  CHECK(contains(res.out, "\"scores\": ["));
  CHECK(contains(res.out, "\"spectral_radius\": "));
  CHECK(contains(res.out, "\"top\": null"));
  CHECK(entry_count(json_array(res.out, "order")) == 10);
  CHECK(entry_count(json_array(res.out, "scores")) == 10);
  CHECK(contains(res.err, "rank: n=10 m=40 K=2"));
  CHECK(contains(res.err, "converged="));
}

TEST_CASE("rank output is byte-stable across runs") {
  const std::string args = "rank --input " + fixture_csv().string();
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.err == second.err);
}

TEST_CASE("--top truncates the order but not the scores") {
  RunResult res = run_cli("rank --top 4 --input " + fixture_csv().string());
  CHECK(res.code == 0);
  CHECK(entry_count(json_array(res.out, "order")) == 4);
  CHECK(entry_count(json_array(res.out, "scores")) == 10);
  CHECK(contains(res.out, "\"top\": 4"));
}

TEST_CASE("--output, --dump-model and --dump-graph write files") {
  fs::path json = temp_file("cli_rank_json");
  fs::path model = temp_file("cli_model");
  fs::path graph = temp_file("cli_graph");
  RunResult res = run_cli("rank --input " + fixture_csv().string() + " --output " +
                          json.string() + " --dump-model " + model.string() +
                          " --dump-graph " + graph.string());
  CHECK(res.code == 0);
  CHECK(res.out.empty());  // the ranking went to the file instead

  const std::string ranking = slurp(json);
  CHECK(contains(ranking, "\"order\": ["));

  const std::string model_text = slurp(model);
  CHECK(contains(model_text, "\"p_z\": ["));
  CHECK(contains(model_text, "\"p_z_given_f\": ["));
  CHECK(contains(model_text, "\"trace\": ["));

  const std::string graph_text = slurp(graph);
  int lines = 0;
  for (char c : graph_text) lines += (c == '\n');
  CHECK(lines == 10);
  const auto first_line = graph_text.substr(0, graph_text.find('\n'));
  CHECK(entry_count(first_line) == 10);
}

TEST_CASE("module failures exit 1 with a tagged stderr line") {
  fs::path bad = temp_file("cli_bad");
  bad += ".csv";
  std::ofstream(bad) << "a,label\nnot_a_number,x\n2,y\n";
  RunResult res = run_cli("rank --input " + bad.string());
  CHECK(res.code == 1);
  CHECK(res.err.rfind("error:ParseError: ", 0) == 0);
  CHECK(res.out.empty());

  fs::path nolabel = temp_file("cli_nolabel");
  nolabel += ".csv";
  std::ofstream(nolabel) << "a,b\n1,2\n3,4\n";
  RunResult res2 = run_cli("rank --input " + nolabel.string());
  CHECK(res2.code == 1);
  CHECK(res2.err.rfind("error:MissingColumn: ", 0) == 0);

  fs::path oneclass = temp_file("cli_oneclass");
  oneclass += ".csv";
  std::ofstream(oneclass) << "a,label\n1,x\n2,x\n";
  RunResult res3 = run_cli("rank --input " + oneclass.string());
  CHECK(res3.code == 1);
  CHECK(res3.err.rfind("error:SingleClass: ", 0) == 0);
}

TEST_CASE("verify prints one line per suite and is deterministic") {
  RunResult res = run_cli("verify --trials 3 --seed 21");
  CHECK(res.code == 0);
  CHECK(contains(res.out, "series: trials=3"));
  CHECK(contains(res.out, "enumeration: trials=3"));
  CHECK(contains(res.out, "markov: trials=3"));
  CHECK(contains(res.out, "tolerance="));
  int passes = 0;
  size_t at = 0;
  while ((at = res.out.find(" pass\n", at)) != std::string::npos) {
    ++passes;
    at += 1;
  }
  CHECK(passes == 3);
  CHECK(res.err.empty());

  RunResult again = run_cli("verify --trials 3 --seed 21");
  CHECK(again.out == res.out);
}

TEST_CASE("a ranked synth table puts signal columns on top") {
  fs::path csv = temp_file("cli_signal");
  csv += ".csv";
  REQUIRE(run_cli("synth --samples 120 --informative 2 --noise 8 --separation 4 --seed 3 "
                  "--output " + csv.string()).code == 0);
  const std::string meta = slurp(csv.string() + ".meta.json");
  const std::vector<int> informative = parse_int_array(json_array(meta, "informative"));
  REQUIRE(informative.size() == 2);

  RunResult res = run_cli("rank --top 2 --input " + csv.string());
  CHECK(res.code == 0);
  std::vector<int> top = parse_int_array(json_array(res.out, "order"));
  REQUIRE(top.size() == 2);
  std::sort(top.begin(), top.end());
  CHECK(top == informative);  // the meta list is already ascending
}
