// Copyright 2026 The GraphSort Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "graphsort/cli/bench.hpp"
#include "graphsort/cli/dot.hpp"
#include "graphsort/cli/io.hpp"
#include "test_support.hpp"

namespace graphsort::cli {
namespace {

namespace fs = std::filesystem;

std::vector<Token> parse(const std::string& s) {
  std::istringstream in(s);
  return parse_tokens(in);
}

std::vector<Token> example_tokens() {
  return read_token_file(fs::path(GRAPHSORT_DATA_DIR) / "example.txt");
}

// Scratch directory removed at the end of each test.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("graphsort_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const TempDir& dir, const std::string& args) {
  const auto out = dir.path() / "stdout.txt";
  const std::string cmd = std::string("\"") + GRAPHSORT_CLI_PATH + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + (dir.path() / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::size_t count_arcs(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++n;
  return n;
}

TEST(ParseTokensTest, AcceptsDecimalForms) {
  const auto t = parse("3.5\n  -2\n\n+7\n1e3\n\t0.25 \n");
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0].value, 3.5);
  EXPECT_EQ(t[1].text, "-2");
  EXPECT_EQ(t[2].value, 7.0);
  EXPECT_EQ(t[3].value, 1000.0);
  EXPECT_EQ(t[4].text, "0.25");
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("\n\n  \n").empty());
}

TEST(ParseTokensTest, ReportsOffendingLine) {
  try {
    parse("1\n2\n\nabc\n");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse("nan\n"), parse_error);
  EXPECT_THROW(parse("1 2\n"), parse_error);
  EXPECT_THROW(parse("++1\n"), parse_error);
  EXPECT_THROW(parse("1.5x\n"), parse_error);
  EXPECT_THROW(parse("1e999999\n"), parse_error);
}

TEST(ReadTokenFileTest, MissingFileIsIoError) {
  EXPECT_THROW(read_token_file("/nonexistent/graphsort/input.txt"), io_error);
}

TEST(ParseSizesTest, Forms) {
  EXPECT_EQ(parse_sizes("1000"), (std::vector<std::size_t>{1000}));
  EXPECT_EQ(parse_sizes("2^10"), (std::vector<std::size_t>{1024}));
  EXPECT_EQ(parse_sizes("100,200,300"), (std::vector<std::size_t>{100, 200, 300}));
  EXPECT_EQ(parse_sizes("2^8..2^11"), (std::vector<std::size_t>{256, 512, 1024, 2048}));
  EXPECT_THROW(parse_sizes("abc"), config_error);
  EXPECT_THROW(parse_sizes("2^9..2^8"), config_error);
  EXPECT_THROW(parse_sizes("10..20"), config_error);
}

TEST(ParseEnumsTest, RoundTrip) {
  for (auto a : {Algorithm::trivial, Algorithm::graph, Algorithm::graph_merge, Algorithm::reference}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  for (auto d : {Distribution::random, Distribution::sorted, Distribution::reverse,
                 Distribution::partial, Distribution::duplicates}) {
    EXPECT_EQ(parse_distribution(to_string(d)), d);
  }
  EXPECT_THROW(parse_algorithm("bogo"), config_error);
  EXPECT_THROW(parse_distribution("zipf"), config_error);
}

TEST(GenerateTest, DeterministicPerSeedAndTrial) {
  for (auto d : {Distribution::random, Distribution::partial, Distribution::duplicates}) {
    EXPECT_EQ(generate(d, 500, 7, 0), generate(d, 500, 7, 0));
    EXPECT_NE(generate(d, 500, 7, 0), generate(d, 500, 8, 0));
    EXPECT_NE(generate(d, 500, 7, 0), generate(d, 500, 7, 1));
  }
  const auto s = generate(Distribution::sorted, 100, 1, 0);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  const auto r = generate(Distribution::reverse, 100, 1, 0);
  EXPECT_TRUE(std::is_sorted(r.rbegin(), r.rend()));
  const auto dup = generate(Distribution::duplicates, 1000, 1, 0);
  for (double x : dup) EXPECT_TRUE(x >= 0 && x < 16 && x == static_cast<int>(x));
}

TEST(ValidateTest, RejectsBadConfigs) {
  BenchConfig cfg;
  cfg.sizes = {100};
  EXPECT_NO_THROW(validate(cfg));
  cfg.algorithms = {Algorithm::trivial};
  cfg.sizes = {kTrivialMaxN + 1};
  EXPECT_THROW(validate(cfg), config_error);
  cfg.sizes = {kTrivialMaxN};
  EXPECT_NO_THROW(validate(cfg));
  cfg.trials = 0;
  EXPECT_THROW(validate(cfg), config_error);
  cfg.trials = 1;
  cfg.sizes.clear();
  EXPECT_THROW(validate(cfg), config_error);
  cfg.distribution = Distribution::file;
  EXPECT_THROW(validate(cfg), config_error);
}

TEST(BenchTest, CsvLayout) {
  EXPECT_EQ(kCsvHeader,
            "algorithm,n,distribution,seed,comparisons,arcs_added,dfs_traversals,merge_rounds,"
            "first_forest_components,wall_time_ns");
  BenchRow row;
  row.algorithm = Algorithm::graph_merge;
  row.n = 8;
  row.distribution = Distribution::sorted;
  row.seed = 3;
  row.comparisons = 10;
  row.arcs_added = 11;
  row.dfs_traversals = 12;
  row.merge_rounds = 2;
  row.first_forest_components = 4;
  row.wall_time_ns = 99;
  EXPECT_EQ(to_csv(row), "graph-merge,8,sorted,3,10,11,12,2,4,99");
}

TEST(BenchTest, ExampleFileRow) {
  BenchConfig cfg;
  cfg.distribution = Distribution::file;
  cfg.fixed_input = token_values(example_tokens());
  const auto rows = run_bench(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].n, 7u);
  EXPECT_EQ(rows[0].merge_rounds, 2u);
  EXPECT_EQ(rows[0].first_forest_components, 3u);
  EXPECT_TRUE(rows[0].sorted_ok);
}

TEST(BenchTest, SortedAndReverseRows) {
  BenchConfig cfg;
  cfg.sizes = {1024};
  cfg.distribution = Distribution::sorted;
  auto rows = run_bench(cfg);
  EXPECT_EQ(rows[0].merge_rounds, 0u);
  EXPECT_EQ(rows[0].first_forest_components, 1u);

  cfg.distribution = Distribution::reverse;
  cfg.visit_order = VisitOrder::index;
  rows = run_bench(cfg);
  EXPECT_EQ(rows[0].first_forest_components, 1024u);
  EXPECT_EQ(rows[0].merge_rounds, 10u);
  EXPECT_TRUE(rows[0].sorted_ok);
}

TEST(BenchTest, RowOrderAndReference) {
  BenchConfig cfg;
  cfg.algorithms = {Algorithm::reference, Algorithm::graph_merge};
  cfg.sizes = {64, 128};
  cfg.trials = 2;
  const auto rows = run_bench(cfg);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].algorithm, Algorithm::reference);
  EXPECT_EQ(rows[3].n, 128u);
  EXPECT_EQ(rows[3].trial, 1u);
  EXPECT_EQ(rows[4].algorithm, Algorithm::graph_merge);
  for (const auto& r : rows) EXPECT_TRUE(r.sorted_ok);
  EXPECT_GT(rows[0].comparisons, 0u);
}

TEST(DotTest, ExampleStages) {
  const auto tokens = example_tokens();
  const auto files = render_stages(tokens, Algorithm::graph);
  ASSERT_EQ(files.size(), 6u);
  EXPECT_EQ(files[0].name, "00_construct.dot");
  EXPECT_EQ(files[1].name, "01_forest0.dot");
  EXPECT_EQ(files[5].name, "05_forest2.dot");
  EXPECT_EQ(count_arcs(files[0].content), 7u);
  EXPECT_EQ(count_arcs(files[1].content), 4u);
  EXPECT_NE(files[0].content.find("label=\"-2.2\""), std::string::npos);
  EXPECT_NE(files[1].content.find("doublecircle"), std::string::npos);
  EXPECT_NE(files[2].content.find("style=dashed"), std::string::npos);
  EXPECT_EQ(count_arcs(files[5].content), 6u);
  // Deterministic output.
  const auto again = render_stages(tokens, Algorithm::graph);
  for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(files[i].content, again[i].content);
}

TEST(DotTest, SingleElementAndSeed) {
  const auto one = parse("4\n");
  EXPECT_EQ(render_stages(one, Algorithm::graph).size(), 1u);
  const auto files = render_stages(example_tokens(), Algorithm::graph_merge);
  ASSERT_FALSE(files.empty());
  EXPECT_EQ(count_arcs(files[0].content), 3u);
  EXPECT_THROW(render_stages(example_tokens(), Algorithm::reference), config_error);
}

TEST(CliBinaryTest, SortsExampleFile) {
  TempDir dir;
  const auto input = (fs::path(GRAPHSORT_DATA_DIR) / "example.txt").string();
  for (const std::string algo : {"graph", "trivial", "graph-merge"}) {
    const auto r = run_cli(dir, "sort \"" + input + "\" --algorithm " + algo);
    EXPECT_EQ(r.exit_code, 0) << algo;
    EXPECT_EQ(r.out, "-2.2\n1\n2\n3.5\n5\n9\n11\n") << algo;
  }
  const auto out_file = dir.path() / "sorted.txt";
  const auto r = run_cli(dir, "sort \"" + input + "\" --visit-order index --out \"" +
                                  out_file.string() + "\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(slurp(out_file), "-2.2\n1\n2\n3.5\n5\n9\n11\n");
}

TEST(CliBinaryTest, EmptyInputAndStableDuplicates) {
  TempDir dir;
  auto r = run_cli(dir, "sort \"" + dir.write("empty.txt", "\n\n").string() + "\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "");
  r = run_cli(dir, "sort \"" + dir.write("dups.txt", "1.0\n1\n0.5\n+1\n1e0\n").string() + "\"");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0.5\n1.0\n1\n+1\n1e0\n");
}

TEST(CliBinaryTest, ExitCodes) {
  TempDir dir;
  EXPECT_EQ(run_cli(dir, "").exit_code, 1);
  EXPECT_EQ(run_cli(dir, "--help").exit_code, 0);
  EXPECT_EQ(run_cli(dir, "sort").exit_code, 1);
  EXPECT_EQ(run_cli(dir, "frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli(dir, "bench --sizes 2^9..2^8").exit_code, 1);
  EXPECT_EQ(run_cli(dir, "bench --algorithm trivial --sizes 5000").exit_code, 1);
  EXPECT_EQ(run_cli(dir, "sort \"" + (dir.path() / "missing.txt").string() + "\"").exit_code, 2);
  EXPECT_EQ(run_cli(dir, "sort \"" + dir.write("bad.txt", "1\nx\n").string() + "\"").exit_code,
            2);
  std::string many;
  for (int i = 0; i < 20; ++i) many += std::to_string(i) + "\n";
  EXPECT_EQ(run_cli(dir, "inspect \"" + dir.write("many.txt", many).string() + "\" --max-n 5 --out-dir \"" +
                             dir.path().string() + "\"")
                .exit_code,
            1);
}

TEST(CliBinaryTest, BenchCsv) {
  TempDir dir;
  const auto r = run_cli(dir, "bench --algorithm graph,reference --sizes 2^6..2^7 --seed 5");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
  }
  EXPECT_EQ(rows, 4u);
  const auto input = (fs::path(GRAPHSORT_DATA_DIR) / "example.txt").string();
  const auto f = run_cli(dir, "bench --input \"" + input + "\"");
  ASSERT_EQ(f.exit_code, 0);
  EXPECT_NE(f.out.find("graph,7,file,0,"), std::string::npos);
  EXPECT_NE(f.out.find(",2,3,"), std::string::npos);
}

TEST(CliBinaryTest, InspectWritesDotFiles) {
  TempDir dir;
  const auto input = (fs::path(GRAPHSORT_DATA_DIR) / "example.txt").string();
  const auto out_dir = dir.path() / "dots";
  const auto r = run_cli(dir, "inspect \"" + input + "\" --out-dir \"" + out_dir.string() + "\"");
  ASSERT_EQ(r.exit_code, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out_dir)) {
    EXPECT_EQ(e.path().extension(), ".dot");
    ++files;
  }
  EXPECT_EQ(files, 6u);
  EXPECT_EQ(slurp(out_dir / "00_construct.dot"),
            render_stages(example_tokens(), Algorithm::graph)[0].content);
}

TEST(CliBinaryTest, RandomFilesSortLikeStableReference) {
  TempDir dir;
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    std::uniform_int_distribution<int> d(-20, 20);
    std::vector<std::string> texts;
    std::vector<double> values;
    std::string content;
    for (std::size_t i = 0; i < n; ++i) {
      const int x = d(rng);
      // Same value, different spellings, so stability is visible in the text.
      std::string t = std::to_string(x);
      if (i % 3 == 1) t += ".0";
      if (i % 5 == 2 && x >= 0) t = "+" + t;
      texts.push_back(t);
      values.push_back(x);
      content += t + "\n";
    }
    std::string expected;
    for (Vertex v : testing::reference_permutation(values)) expected += texts[v - 1] + "\n";
    const auto file = dir.write("in" + std::to_string(trial) + ".txt", content);
    for (const std::string algo : {"graph", "trivial", "graph-merge"}) {
      const auto r = run_cli(dir, "sort \"" + file.string() + "\" --algorithm " + algo);
      EXPECT_EQ(r.exit_code, 0);
      EXPECT_EQ(r.out, expected) << algo << " trial " << trial;
    }
    const auto r = run_cli(dir, "sort \"" + file.string() + "\" --shuffle-visits 9");
    EXPECT_EQ(r.out, expected);
  }
}

}  // namespace
}  // namespace graphsort::cli
