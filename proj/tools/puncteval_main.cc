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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "puncteval/align.h"
#include "puncteval/corpus.h"
#include "puncteval/decoder.h"
#include "puncteval/lm.h"
#include "puncteval/metrics.h"
#include "puncteval/normalize.h"
#include "puncteval/parallel.h"
#include "puncteval/report.h"

namespace {

using namespace puncteval;

// Exit statuses: 0 success, 2 I/O or parse failure, 3 pairing mismatch,
// 4 quality-gate rejection.
constexpr int kExitParse = 2;
constexpr int kExitPairing = 3;
constexpr int kExitQualityGate = 4;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QualityGateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
}

std::vector<std::string> SplitLines(const std::string& content) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) {
      lines.push_back(content.substr(pos));
      break;
    }
    std::string line = content.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = eol + 1;
  }
  return lines;
}

struct ScoreArgs {
  std::string ref_path;
  std::string hyp_path;
  std::string out_path;
  std::string format = "text";
  bool pair_by_index = false;
  bool normalize = false;
  bool per_punct = false;
  bool csd_denominator = false;
  bool wer_include_punct = false;
};

NormalizedTranscript ParseSegmentLine(const std::string& line, bool normalize) {
  return normalize ? Normalize(line) : TokenizeNormalized(line);
}

nlohmann::json ReportJson(const MetricsReport& report) {
  return nlohmann::json::parse(ReportToJson(report));
}

int CmdScore(const ScoreArgs& args) {
  std::vector<std::string> ref_lines = SplitLines(ReadFileOrThrow(args.ref_path));
  std::vector<std::string> hyp_lines = SplitLines(ReadFileOrThrow(args.hyp_path));

  if (ref_lines.size() != hyp_lines.size()) {
    if (!args.pair_by_index)
      throw PairingError("segment counts differ (" +
                         std::to_string(ref_lines.size()) + " vs " +
                         std::to_string(hyp_lines.size()) +
                         "); use --pair-by-index to pad the shorter side");
    std::size_t n = std::max(ref_lines.size(), hyp_lines.size());
    ref_lines.resize(n);
    hyp_lines.resize(n);
  }

  ScoreOptions options;
  options.include_punct_in_wer = args.wer_include_punct;
  options.csd_denominator = args.csd_denominator;
  if (args.per_punct) options.per_punct_kinds.push_back(TokenKind::kExclamation);

  std::vector<SegmentStats> stats(ref_lines.size());
  ParallelFor(ref_lines.size(), [&](std::size_t i) {
    NormalizedTranscript ref = ParseSegmentLine(ref_lines[i], args.normalize);
    NormalizedTranscript hyp = ParseSegmentLine(hyp_lines[i], args.normalize);
    stats[i] = ScoreSegment(ref, hyp, options);
  });
  if (stats.empty()) throw IoError("no segments to score");

  MetricsReport aggregate = Aggregate(stats, args.csd_denominator);

  std::string out;
  if (args.format == "json") {
    nlohmann::json root;
    root["schema"] = 1;
    root["aggregate"] = ReportJson(aggregate);
    nlohmann::json segments = nlohmann::json::array();
    for (const SegmentStats& s : stats) {
      MetricsReport r = Aggregate(std::span<const SegmentStats>(&s, 1),
                                  args.csd_denominator);
      segments.push_back(ReportJson(r));
    }
    root["segments"] = segments;
    out = root.dump(2) + "\n";
  } else {
    std::ostringstream text;
    for (std::size_t i = 0; i < stats.size(); ++i) {
      MetricsReport r = Aggregate(std::span<const SegmentStats>(&stats[i], 1),
                                  args.csd_denominator);
      char line[160];
      std::snprintf(line, sizeof(line),
                    "segment %zu wer %.4f cer %.4f dlev_ser %.4f\n", i + 1,
                    r.wer, r.cer, r.dlev_ser);
      text << line;
    }
    text << "\n" << ReportToText(aggregate);
    out = text.str();
  }
  WriteOutput(args.out_path, out);
  return 0;
}

struct PunctuateArgs {
  std::string online_path;
  std::string stm_path;
  std::string out_path;
  double threshold = 0.6;
  ScoreScheme scheme;
};

int CmdPunctuate(const PunctuateArgs& args) {
  NormalizedTranscript online = Normalize(ReadFileOrThrow(args.online_path));
  std::vector<StmSegment> segments = ParseStm(ReadFileOrThrow(args.stm_path));

  std::vector<std::size_t> words_per_segment;
  NormalizedTranscript stm_words;
  for (const StmSegment& seg : segments) {
    NormalizedTranscript words = StripPunctuation(Normalize(seg.text));
    words_per_segment.push_back(words.size());
    for (Token& t : words.tokens) stm_words.tokens.push_back(std::move(t));
  }

  double ratio = 0.0;
  try {
    ratio = SimilarityRatio(online, stm_words);
  } catch (const EmptyReferenceError&) {
    throw QualityGateError("stm transcript has no words");
  }
  if (ratio <= args.threshold)
    throw QualityGateError("similarity ratio " + std::to_string(ratio) +
                           " does not exceed threshold " +
                           std::to_string(args.threshold) +
                           "; recording discarded");

  NormalizedTranscript punctuated;
  try {
    punctuated = TransferPunctuation(online, stm_words, args.scheme);
  } catch (const UnusablePairError& e) {
    throw QualityGateError(e.what());
  }

  // Split the punctuated stream back into the original segments; marks
  // follow the word they attach to.
  std::vector<StmSegment> out_segments;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    NormalizedTranscript piece;
    std::size_t words_taken = 0;
    while (cursor < punctuated.size() &&
           (words_taken < words_per_segment[i] ||
            IsPunct(punctuated.tokens[cursor].kind))) {
      if (punctuated.tokens[cursor].kind == TokenKind::kWord) {
        if (words_taken == words_per_segment[i]) break;
        ++words_taken;
      }
      piece.tokens.push_back(punctuated.tokens[cursor]);
      ++cursor;
    }
    out_segments.push_back(StmSegment{segments[i].start, segments[i].end,
                                      piece.Render()});
  }
  WriteOutput(args.out_path, WriteStm(out_segments));
  return 0;
}

struct MatchArgs {
  std::string stm_path;
  std::vector<std::string> candidate_paths;
  double threshold = 0.6;
};

int CmdMatch(const MatchArgs& args) {
  std::vector<StmSegment> segments = ParseStm(ReadFileOrThrow(args.stm_path));
  std::string joined;
  for (const StmSegment& seg : segments) {
    joined += seg.text;
    joined += '\n';
  }
  NormalizedTranscript stm = Normalize(joined);

  std::vector<NormalizedTranscript> candidates(args.candidate_paths.size());
  ParallelFor(candidates.size(), [&](std::size_t i) {
    candidates[i] = Normalize(ReadFileOrThrow(args.candidate_paths[i]));
  });

  std::optional<std::size_t> best =
      SelectBestTranscript(candidates, stm, args.threshold);
  if (!best)
    throw QualityGateError("no candidate ratio exceeds " +
                           std::to_string(args.threshold) +
                           "; recording discarded");
  double ratio = SimilarityRatio(candidates[*best], stm);
  char line[64];
  std::snprintf(line, sizeof(line), "\t%.6f\n", ratio);
  std::cout << args.candidate_paths[*best] << line;
  return 0;
}

struct DecodeArgs {
  std::string post_path;
  std::string out_path;
  std::string lm_path = "uniform";
  double gamma = 0.5;
  int beam = 64;
};

int CmdDecode(const DecodeArgs& args) {
  std::ifstream in(args.post_path);
  if (!in) throw IoError("cannot open '" + args.post_path + "' for reading");

  std::vector<Posteriorgram> blocks;
  while (auto block = Posteriorgram::ReadBlock(in)) blocks.push_back(*block);

  std::unique_ptr<LmScorer> lm;
  if (args.lm_path == "uniform") {
    lm = std::make_unique<UniformLm>();
  } else {
    std::vector<NormalizedTranscript> corpus;
    for (const std::string& line : SplitLines(ReadFileOrThrow(args.lm_path))) {
      NormalizedTranscript t = Normalize(line);
      if (!t.empty()) corpus.push_back(std::move(t));
    }
    if (corpus.empty())
      throw IoError("language model corpus '" + args.lm_path + "' is empty");
    lm = std::make_unique<BigramLm>(TrainBigram(corpus));
  }

  DecodeConfig config;
  config.gamma = args.gamma;
  config.beam_width = args.beam;

  std::vector<std::string> lines(blocks.size());
  ParallelFor(blocks.size(), [&](std::size_t i) {
    lines[i] = CtcPrefixBeamSearch(blocks[i], *lm, config).Render();
  });

  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  WriteOutput(args.out_path, out);
  return 0;
}

int CmdNormalize(const std::string& in_path, const std::string& out_path) {
  std::vector<std::string> lines = SplitLines(ReadFileOrThrow(in_path));
  std::vector<std::string> rendered(lines.size());
  ParallelFor(lines.size(), [&](std::size_t i) {
    rendered[i] = Normalize(lines[i]).Render();
  });
  std::string out;
  for (const std::string& line : rendered) {
    out += line;
    out += '\n';
  }
  WriteOutput(out_path, out);
  return 0;
}

int CmdFilterWiki(const std::string& in_path, const std::string& out_path) {
  std::vector<std::string> lines = SplitLines(ReadFileOrThrow(in_path));
  WikiDocument doc;
  std::string paragraph;
  auto flush = [&] {
    if (!paragraph.empty()) doc.paragraphs.push_back(std::move(paragraph));
    paragraph.clear();
  };
  for (const std::string& line : lines) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      flush();
      continue;
    }
    if (!paragraph.empty()) paragraph += ' ';
    paragraph += line;
  }
  flush();

  WikiDocument filtered = FilterWiki(doc);
  std::string out;
  for (std::size_t i = 0; i < filtered.paragraphs.size(); ++i) {
    if (i > 0) out += '\n';
    out += filtered.paragraphs[i];
    out += '\n';
  }
  WriteOutput(out_path, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "puncteval - punctuation-aware transcript preparation, scoring and "
      "decoding"};
  app.require_subcommand(1);

  const CLI::Validator open_unit_interval(
      [](std::string& value) -> std::string {
        double v = 0.0;
        try {
          v = std::stod(value);
        } catch (...) {
          return "not a number";
        }
        if (v <= 0.0 || v >= 1.0) return "must lie strictly between 0 and 1";
        return {};
      },
      "FLOAT in (0,1)");

  // normalize
  std::string norm_in, norm_out;
  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "Clean up raw transcript text, one "
                                      "segment per line");
  normalize_cmd->add_option("input", norm_in, "UTF-8 text file")->required();
  normalize_cmd->add_option("-o,--output", norm_out, "Output path (default stdout)");

  // match
  MatchArgs match_args;
  CLI::App* match_cmd = app.add_subcommand(
      "match", "Pick the online transcript most similar to an stm file");
  match_cmd->add_option("stm", match_args.stm_path, "stm reference file")
      ->required();
  match_cmd
      ->add_option("candidates", match_args.candidate_paths,
                   "candidate transcript text files")
      ->required();
  match_cmd
      ->add_option("--threshold", match_args.threshold,
                   "similarity ratio the winner must exceed")
      ->check(open_unit_interval);

  // punctuate
  PunctuateArgs punct_args;
  CLI::App* punct_cmd = app.add_subcommand(
      "punctuate", "Transfer punctuation from an online transcript onto an "
                   "stm word stream");
  punct_cmd->add_option("online", punct_args.online_path, "punctuated text file")
      ->required();
  punct_cmd->add_option("stm", punct_args.stm_path, "stm file")->required();
  punct_cmd->add_option("-o,--output", punct_args.out_path,
                        "output stm path (default stdout)");
  punct_cmd
      ->add_option("--threshold", punct_args.threshold,
                   "similarity ratio gate")
      ->check(open_unit_interval);
  punct_cmd->add_option("--match-score", punct_args.scheme.match,
                        "alignment score for identical words");
  punct_cmd->add_option("--mismatch-score", punct_args.scheme.mismatch,
                        "alignment score for differing words");
  punct_cmd->add_option("--gap-open", punct_args.scheme.gap_open,
                        "alignment score for opening a gap");
  punct_cmd->add_option("--gap-extend", punct_args.scheme.gap_extend,
                        "alignment score for extending a gap");

  // score
  ScoreArgs score_args;
  CLI::App* score_cmd = app.add_subcommand(
      "score", "Score a hypothesis transcript against a reference");
  score_cmd->add_option("ref", score_args.ref_path, "reference, one segment per line")
      ->required();
  score_cmd->add_option("hyp", score_args.hyp_path, "hypothesis, one segment per line")
      ->required();
  score_cmd->add_option("-o,--output", score_args.out_path,
                        "output path (default stdout)");
  score_cmd->add_option("--format", score_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  score_cmd->add_flag("--pair-by-index", score_args.pair_by_index,
                      "pair lines by index, padding the shorter file");
  score_cmd->add_flag("--normalize", score_args.normalize,
                      "normalize raw lines before scoring");
  score_cmd->add_flag("--per-punct", score_args.per_punct,
                      "additionally report the exclamation-specific rate");
  score_cmd->add_flag("--csd-denominator", score_args.csd_denominator,
                      "use C+S+D instead of the reference mark count");
  score_cmd->add_flag("--wer-include-punct", score_args.wer_include_punct,
                      "count punctuation tokens in the word error rate");

  // filter-wiki
  std::string wiki_in, wiki_out;
  CLI::App* wiki_cmd = app.add_subcommand(
      "filter-wiki", "Filter a plain-text corpus for language model training");
  wiki_cmd->add_option("input", wiki_in, "paragraphs separated by blank lines")
      ->required();
  wiki_cmd->add_option("-o,--output", wiki_out, "output path (default stdout)");

  // decode
  DecodeArgs decode_args;
  CLI::App* decode_cmd = app.add_subcommand(
      "decode", "CTC prefix beam search over posteriorgram files");
  decode_cmd->add_option("posteriorgram", decode_args.post_path,
                         "file of `T 33` blocks")
      ->required();
  decode_cmd->add_option("-o,--output", decode_args.out_path,
                         "output path (default stdout)");
  decode_cmd->add_option("--lm", decode_args.lm_path,
                         "'uniform' or a text corpus to train a bigram on");
  decode_cmd->add_option("--gamma", decode_args.gamma,
                         "language model fusion weight");
  decode_cmd->add_option("--beam", decode_args.beam, "beam width")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize_cmd->parsed()) return CmdNormalize(norm_in, norm_out);
    if (match_cmd->parsed()) return CmdMatch(match_args);
    if (punct_cmd->parsed()) return CmdPunctuate(punct_args);
    if (score_cmd->parsed()) return CmdScore(score_args);
    if (wiki_cmd->parsed()) return CmdFilterWiki(wiki_in, wiki_out);
    if (decode_cmd->parsed()) return CmdDecode(decode_args);
  } catch (const PairingError& e) {
    std::cerr << "puncteval: " << e.what() << "\n";
    return kExitPairing;
  } catch (const QualityGateError& e) {
    std::cerr << "puncteval: " << e.what() << "\n";
    return kExitQualityGate;
  } catch (const std::exception& e) {
    std::cerr << "puncteval: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
