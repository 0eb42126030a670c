// Copyright 2026 The puncteval Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <random>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "puncteval/corpus.h"
#include "puncteval/decoder.h"
#include "puncteval/lm.h"

namespace fs = std::filesystem;

namespace {

std::string BinaryPath() {
  const char* env = std::getenv("PUNCTEVAL_BIN");
  REQUIRE_MESSAGE(env != nullptr,
                  "PUNCTEVAL_BIN must point at the puncteval binary");
  return env;
}

struct RunResult {
  int exit_code = 0;
  std::string output;
};

RunResult Run(const std::string& args) {
  std::string command = BinaryPath() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("puncteval_cli_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }

  std::string File(const std::string& name, const std::string& content) const {
    fs::path p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
  std::string Path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  fs::path path_;
  static int counter_;
};

int TempDir::counter_ = 0;

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string out((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  return out;
}

}  // namespace

TEST_CASE("score of identical files reports zero error") {
  TempDir dir;
  std::string ref = dir.File("ref.txt", "a b , c .\nd e f ?\n");
  RunResult r = Run("score " + ref + " " + ref + " --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["schema"] == 1);
  CHECK(j["aggregate"]["wer"] == 0.0);
  CHECK(j["aggregate"]["dlev_ser"] == 0.0);
  CHECK(j["aggregate"]["f_score"] == 1.0);
  CHECK(j["segments"].size() == 2);
}

TEST_CASE("score reproduces the word-mismatch example") {
  TempDir dir;
  std::string ref = dir.File("ref.txt", "w one w two , w four\n");
  std::string hyp = dir.File("hyp.txt", "w one . w four\n");
  RunResult r = Run("score " + ref + " " + hyp + " --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["aggregate"]["dlev_ser"] == 1.0);
  CHECK(j["aggregate"]["counts"]["substitutions"] == 1);
}

TEST_CASE("score exit codes") {
  TempDir dir;
  std::string ref = dir.File("ref.txt", "a b\n");
  CHECK(Run("score " + ref + " " + dir.Path("missing.txt")).exit_code == 2);

  std::string hyp2 = dir.File("hyp2.txt", "a b\nc d\n");
  CHECK(Run("score " + ref + " " + hyp2).exit_code == 3);
  CHECK(Run("score " + ref + " " + hyp2 + " --pair-by-index").exit_code == 0);

  // Raw text without --normalize is a parse failure.
  std::string raw = dir.File("raw.txt", "Hello there.\n");
  CHECK(Run("score " + raw + " " + raw).exit_code == 2);
  CHECK(Run("score " + raw + " " + raw + " --normalize").exit_code == 0);
}

TEST_CASE("per-punct flag adds the exclamation rate") {
  TempDir dir;
  std::string ref = dir.File("ref.txt", "a ! b\n");
  RunResult without = Run("score " + ref + " " + ref + " --format json");
  nlohmann::json j = nlohmann::json::parse(without.output);
  CHECK_FALSE(j["aggregate"]["per_punct_ser"].contains("exclamation"));

  RunResult with_flag =
      Run("score " + ref + " " + ref + " --format json --per-punct");
  j = nlohmann::json::parse(with_flag.output);
  CHECK(j["aggregate"]["per_punct_ser"].contains("exclamation"));
  CHECK(j["aggregate"]["per_punct_ser"]["exclamation"] == 0.0);
}

TEST_CASE("punctuate transfers marks onto the stm words") {
  TempDir dir;
  std::string stm = dir.File(
      "talk.stm",
      "[1.56] [10.56] this is a nine second segment each sentence\n"
      "[10.86] [15.73] may be segmented into multiple audio pieces\n");
  std::string online = dir.File(
      "online.txt",
      "This is a nine second segment. Each sentence may be segmented into "
      "multiple audio pieces.\n");
  std::string out = dir.Path("out.stm");
  RunResult r = Run("punctuate " + online + " " + stm + " -o " + out);
  CHECK(r.exit_code == 0);

  auto segments = puncteval::ParseStm(ReadAll(out));
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].start == doctest::Approx(1.56));
  CHECK(segments[0].text ==
        "this is a nine second segment . each sentence");
  CHECK(segments[1].text ==
        "may be segmented into multiple audio pieces .");
}

TEST_CASE("punctuate is the identity on an already punctuated stm") {
  TempDir dir;
  std::string stm = dir.File(
      "talk.stm",
      "[1.56] [10.56] this is a nine second segment. Each sentence\n"
      "[10.86] [15.73] may be segmented into multiple audio pieces\n");
  std::string online = dir.File(
      "online.txt",
      "this is a nine second segment. Each sentence may be segmented into "
      "multiple audio pieces\n");
  std::string out = dir.Path("out.stm");
  CHECK(Run("punctuate " + online + " " + stm + " -o " + out).exit_code == 0);
  auto segments = puncteval::ParseStm(ReadAll(out));
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].text == "this is a nine second segment . each sentence");
  CHECK(segments[1].text == "may be segmented into multiple audio pieces");
}

TEST_CASE("punctuate discards dissimilar recordings") {
  TempDir dir;
  std::string stm = dir.File("talk.stm", "[0.00] [2.00] alpha beta gamma\n");
  std::string online = dir.File("online.txt", "unrelated words entirely.\n");
  CHECK(Run("punctuate " + online + " " + stm).exit_code == 4);
}

TEST_CASE("match picks the closest candidate") {
  TempDir dir;
  std::string stm = dir.File("talk.stm", "[0.00] [2.00] we use dna today\n");
  std::string good = dir.File("good.txt", "We use DNA today.\n");
  std::string bad = dir.File("bad.txt", "something else entirely here\n");
  RunResult r = Run("match " + stm + " " + bad + " " + good);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("good.txt") != std::string::npos);

  CHECK(Run("match " + stm + " " + bad).exit_code == 4);
}

TEST_CASE("decode matches the exhaustive oracle on a small instance") {
  TempDir dir;
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> real(0.05, 1.0);
  const int frames = 5;
  std::vector<int> symbols = {0, puncteval::CtcCharSymbol('a'),
                              puncteval::CtcCharSymbol('b'),
                              puncteval::CtcCharSymbol(' '),
                              puncteval::CtcCharSymbol('.')};
  std::vector<std::vector<double>> rows;
  std::string file = std::to_string(frames) + " 33\n";
  for (int t = 0; t < frames; ++t) {
    std::vector<double> row(33, 0.0);
    double total = 0.0;
    for (int s : symbols) total += row[s] = real(rng);
    for (double& p : row) p /= total;
    rows.push_back(row);
    for (int s = 0; s < 33; ++s) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", row[s]);
      file += buf;
      file += s + 1 < 33 ? ' ' : '\n';
    }
  }
  std::string post = dir.File("post.txt", file);
  RunResult r = Run("decode " + post + " --lm uniform --gamma 0 --beam 8192");
  CHECK(r.exit_code == 0);

  puncteval::UniformLm lm;
  auto expected = puncteval::ExhaustiveDecode(
      puncteval::Posteriorgram::FromRows(rows), lm, 0.0);
  CHECK(r.output == expected.Render() + "\n");
}

TEST_CASE("decode emits one line per block") {
  TempDir dir;
  // Two single-frame blocks: argmax 'a', then argmax blank.
  std::string rows_a, rows_blank;
  for (int s = 0; s < 33; ++s) {
    rows_a += s == 3 ? "0.68" : "0.01";
    rows_a += s + 1 < 33 ? " " : "\n";
    rows_blank += s == 0 ? "0.68" : "0.01";
    rows_blank += s + 1 < 33 ? " " : "\n";
  }
  std::string post =
      dir.File("post.txt", "1 33\n" + rows_a + "1 33\n" + rows_blank);
  RunResult r = Run("decode " + post + " --lm uniform --gamma 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "a\n\n");

  std::string bad = dir.File("bad.txt", "1 32\n");
  CHECK(Run("decode " + bad).exit_code == 2);
}

TEST_CASE("filter-wiki drops failing paragraphs") {
  TempDir dir;
  std::string in = dir.File(
      "wiki.txt",
      "Too short. Really.\n"
      "\n"
      "The quick brown fox jumps over the lazy dog near the river. A second "
      "sentence keeps this paragraph long enough. The third sentence closes "
      "it out nicely.\n");
  RunResult r = Run("filter-wiki " + in);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Too short") == std::string::npos);
  CHECK(r.output.find("quick brown fox") != std::string::npos);
}

TEST_CASE("deterministic output across runs and worker counts") {
  TempDir dir;
  std::string ref = dir.File("ref.txt", "a b , c .\nd e ?\nf g h !\n");
  std::string hyp = dir.File("hyp.txt", "a b .\nd , e\nf h !\n");
  RunResult first = Run("score " + ref + " " + hyp + " --format json");
  RunResult second = Run("score " + ref + " " + hyp + " --format json");
  CHECK(first.output == second.output);

  std::string forced =
      "PUNCTEVAL_WORKERS=1 " + BinaryPath() + " score " + ref + " " + hyp +
      " --format json 2>/dev/null";
  FILE* pipe = popen(forced.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, n);
  pclose(pipe);
  CHECK(output == first.output);
}
