// Copyright 2026 The Propeval Authors.
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

#include "propeval/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "propeval/annotations.h"
#include "propeval/baselines.h"
#include "propeval/combiner.h"
#include "propeval/corpus.h"
#include "propeval/error.h"
#include "propeval/leaderboard.h"
#include "propeval/scoring.h"
#include "propeval/stats.h"
#include "propeval/validate.h"

namespace propeval {
namespace {

// Bad flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string out;
  std::string format = "json";
  std::string task = "si";
  std::string articles;
  std::vector<std::string> articles_list;
  std::string gold;
  std::vector<std::string> gold_list;
  std::string pred;
  std::vector<std::string> preds;
  std::string spans;
  std::string phase = "dev";
  std::string aliases;
  std::string convention = "corrected";
  bool per_document = false;
  std::uint64_t seed = 0;
  int spans_per_doc = 2;
  int max_len = 20;
  std::string train;
  std::string input;
  double learning_rate = 0.1;
  int epochs = 500;
  double l2 = 1e-4;
  std::string model_out;
  std::string model_in;
  std::string method = "union";
  std::vector<std::string> methods{"union", "intersection", "majority"};
  int k_max = 0;
  std::string svg;
  std::vector<std::string> partitions;
  bool duplicates = false;
  int ngram = 4;
  double threshold = 0.8;
  std::string scores;
  std::vector<std::string> systems;
};

const std::vector<std::string> kTasks{"si", "tc"};
const std::vector<std::string> kMethods{"union", "intersection", "majority"};
const std::vector<std::string> kConventions{"corrected", "literal-paper"};

void AddOut(CLI::App *sub, Options &o) {
  sub->add_option("--out", o.out, "Write the result to this file instead of stdout");
}

void AddFormat(CLI::App *sub, Options &o, std::vector<std::string> choices,
               const std::string &def) {
  std::string desc = "Output format:";
  for (const auto &c : choices) desc += " " + c;
  sub->add_option("--format", o.format, desc + " (default " + def + ")")
      ->check(CLI::IsMember(std::move(choices)));
}

void AddAliases(CLI::App *sub, Options &o) {
  sub->add_option("--aliases", o.aliases,
                  "Technique alias table (alias<TAB>canonical token per line)");
}

// Registers every subcommand. Defaults for --format are applied per
// subcommand after parsing.
void BuildApp(CLI::App &app, Options &o) {
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("propeval ") + kVersion);

  auto *validate = app.add_subcommand(
      "validate", "Check an annotation file against an article directory");
  validate->add_option("--articles", o.articles, "Directory of article<ID>.txt files")
      ->required();
  validate->add_option("--spans", o.spans, "Annotation file to check")->required();
  validate->add_option("--task", o.task, "Annotation format: si or tc")
      ->check(CLI::IsMember(kTasks));
  validate
      ->add_option("--phase", o.phase,
                   "dev: labeled files; test: TC input must be an unlabeled "
                   "span list")
      ->check(CLI::IsMember({"dev", "test"}));
  AddAliases(validate, o);
  AddFormat(validate, o, {"json", "md", "csv"}, "json");
  AddOut(validate, o);

  auto *score_si = app.add_subcommand("score-si", "Score span identification predictions");
  score_si->add_option("--articles", o.articles, "Directory of article<ID>.txt files")
      ->required();
  score_si->add_option("--gold", o.gold, "Gold SI annotation file")->required();
  score_si->add_option("--pred", o.pred, "Predicted SI annotation file")->required();
  score_si
      ->add_option("--eq-convention", o.convention,
                   "Overlap normalization: corrected (default) or literal-paper")
      ->check(CLI::IsMember(kConventions));
  score_si->add_flag("--per-document", o.per_document,
                     "Include per-document scores in the JSON report");
  AddFormat(score_si, o, {"json", "text"}, "json");
  AddOut(score_si, o);

  auto *score_tc = app.add_subcommand("score-tc", "Score technique classification predictions");
  score_tc->add_option("--gold", o.gold, "Gold TC annotation file")->required();
  score_tc->add_option("--pred", o.pred, "Predicted TC annotation file")->required();
  score_tc->add_option("--articles", o.articles,
                       "Optional article directory; both files are validated against it");
  AddAliases(score_tc, o);
  AddFormat(score_tc, o, {"json", "text"}, "json");
  AddOut(score_tc, o);

  auto *baseline_si = app.add_subcommand("baseline-si", "Generate the random span baseline");
  baseline_si->add_option("--articles", o.articles, "Directory of article<ID>.txt files")
      ->required();
  baseline_si->add_option("--seed", o.seed, "Random seed (default 0)");
  baseline_si->add_option("--spans-per-doc", o.spans_per_doc, "Spans per document (default 2)")
      ->check(CLI::PositiveNumber);
  baseline_si->add_option("--max-len", o.max_len, "Maximum span length (default 20)")
      ->check(CLI::PositiveNumber);
  AddOut(baseline_si, o);

  auto *baseline_tc = app.add_subcommand(
      "baseline-tc", "Label spans with the fragment-length logistic regression");
  baseline_tc->add_option("--train", o.train, "Training TC annotation file");
  baseline_tc->add_option("--input", o.input,
                          "Spans to label (doc<TAB>start<TAB>end or doc<TAB>?<TAB>start<TAB>end)")
      ->required();
  baseline_tc->add_option("--model-in", o.model_in, "Load a fitted model instead of training");
  baseline_tc->add_option("--model-out", o.model_out, "Write the fitted model as JSON");
  baseline_tc->add_option("--learning-rate", o.learning_rate, "Gradient descent step (default 0.1)")
      ->check(CLI::PositiveNumber);
  baseline_tc->add_option("--epochs", o.epochs, "Full-batch epochs (default 500)")
      ->check(CLI::PositiveNumber);
  baseline_tc->add_option("--l2", o.l2, "L2 penalty on weights (default 1e-4)")
      ->check(CLI::NonNegativeNumber);
  baseline_tc->add_option("--seed", o.seed, "Seed recorded in the model (default 0)");
  AddAliases(baseline_tc, o);
  AddOut(baseline_tc, o);

  auto *combine = app.add_subcommand("combine", "Combine several systems' predictions");
  combine->add_option("--task", o.task, "si or tc")->check(CLI::IsMember(kTasks));
  combine->add_option("--method", o.method, "SI rule: union, intersection or majority")
      ->check(CLI::IsMember(kMethods));
  combine->add_option("--pred", o.preds, "Prediction file; repeat once per system")
      ->required();
  combine->add_option("--articles", o.articles, "Article directory (required for si)");
  combine->add_option("--train", o.train, "Training TC file for the tie-break prior (tc)");
  AddAliases(combine, o);
  AddOut(combine, o);

  auto *sweep = app.add_subcommand("sweep", "Score combinations of the top-k systems");
  sweep->add_option("--task", o.task, "si or tc")->check(CLI::IsMember(kTasks));
  sweep->add_option("--pred", o.preds, "Prediction file; repeat, best system first")
      ->required();
  sweep->add_option("--gold", o.gold, "Gold annotation file")->required();
  sweep->add_option("--articles", o.articles, "Article directory (required for si)");
  sweep->add_option("--methods", o.methods,
                    "Comma-separated SI rules (default union,intersection,majority)")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethods));
  sweep->add_option("--k-max", o.k_max, "Largest k (default: number of systems)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--train", o.train, "Training TC file for the tie-break prior (tc)");
  sweep->add_option("--eq-convention", o.convention, "corrected (default) or literal-paper")
      ->check(CLI::IsMember(kConventions));
  sweep->add_option("--svg", o.svg, "Also write a line chart of the curve to this file");
  AddAliases(sweep, o);
  AddFormat(sweep, o, {"json", "csv", "md"}, "json");
  AddOut(sweep, o);

  auto *stats = app.add_subcommand("stats", "Corpus statistics per partition");
  stats->add_option("--articles", o.articles_list,
                    "Article directory; repeat once per partition")
      ->required();
  stats->add_option("--gold", o.gold_list, "Gold TC file; one per --articles")->required();
  stats->add_option("--partition", o.partitions,
                    "Partition name (training, development, test, unlabeled); one per --articles");
  stats->add_flag("--duplicates", o.duplicates,
                  "Also list near-duplicate article pairs (word n-gram Jaccard)");
  stats->add_option("--ngram", o.ngram, "n-gram order for --duplicates (default 4)")
      ->check(CLI::PositiveNumber);
  stats->add_option("--threshold", o.threshold,
                    "Similarity threshold for --duplicates (default 0.8)")
      ->check(CLI::Range(0.0, 1.0));
  AddAliases(stats, o);
  AddFormat(stats, o, {"json", "csv", "md"}, "json");
  AddOut(stats, o);

  auto *leaderboard = app.add_subcommand("leaderboard", "Rank systems into a results table");
  leaderboard->add_option("--task", o.task, "si or tc")->check(CLI::IsMember(kTasks));
  leaderboard->add_option("--scores", o.scores, "Score table CSV (values in percent)");
  leaderboard->add_option("--system", o.systems,
                          "NAME=FILE prediction to score; repeat per system");
  leaderboard->add_option("--gold", o.gold, "Gold file for --system entries");
  leaderboard->add_option("--articles", o.articles, "Article directory for si --system entries");
  leaderboard->add_option("--eq-convention", o.convention, "corrected (default) or literal-paper")
      ->check(CLI::IsMember(kConventions));
  AddAliases(leaderboard, o);
  AddFormat(leaderboard, o, {"json", "csv", "md"}, "json");
  AddOut(leaderboard, o);
}

class Runner {
 public:
  Runner(const Options &o, std::ostream &out, std::ostream &err)
      : o_(o), out_(out), err_(err) {
    if (!o_.aliases.empty()) aliases_ = AliasTable::FromFile(o_.aliases);
  }

  int Dispatch(const std::string &command) {
    if (command == "validate") return Validate();
    if (command == "score-si") return ScoreSiCommand();
    if (command == "score-tc") return ScoreTcCommand();
    if (command == "baseline-si") return BaselineSi();
    if (command == "baseline-tc") return BaselineTc();
    if (command == "combine") return Combine();
    if (command == "sweep") return Sweep();
    if (command == "stats") return Stats();
    if (command == "leaderboard") return LeaderboardCommand();
    throw UsageError("unknown subcommand " + command);
  }

 private:
  const AliasTable *aliases() const { return aliases_ ? &*aliases_ : nullptr; }
  Mode task() const { return o_.task == "tc" ? Mode::kTc : Mode::kSi; }

  void Emit(const std::string &text) const {
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.out, std::ios::binary);
    if (!file) throw IoError(o_.out + ": cannot open for writing");
    file << text;
    if (!file) throw IoError(o_.out + ": write error");
  }

  void Warn(const std::vector<std::string> &warnings) const {
    for (const auto &w : warnings) err_ << "warning: " << w << "\n";
  }

  std::string RequireArticles() const {
    if (o_.articles.empty()) {
      throw UsageError("--articles is required for task " + o_.task);
    }
    return o_.articles;
  }

  int Validate() {
    const Corpus corpus = LoadCorpus(o_.articles);
    AnnotationSet set;
    if (task() == Mode::kTc && o_.phase == "test") {
      set = ParseSpanTemplate(o_.spans);
    } else {
      set = ParseSpanFile(o_.spans, task(), aliases());
    }
    const ValidationReport report = propeval::Validate(corpus, set);
    Emit(FormatReport(report));
    for (const auto &e : report.errors) {
      err_ << o_.spans << ":" << e.line << ": error: " << e.message << "\n";
    }
    return report.ok() ? kExitOk : kExitValidation;
  }

  std::string FormatReport(const ValidationReport &report) const {
    if (o_.format == "md") {
      std::string s = "| severity | line | kind | message |\n|---|---:|---|---|\n";
      auto rows = [&](const auto &issues, const char *sev) {
        for (const auto &i : issues) {
          s += std::string("| ") + sev + " | " + std::to_string(i.line) + " | " +
               i.kind + " | " + i.message + " |\n";
        }
      };
      rows(report.errors, "error");
      rows(report.warnings, "warning");
      return s;
    }
    if (o_.format == "csv") {
      std::string s = "severity,line,kind,message\n";
      auto rows = [&](const auto &issues, const char *sev) {
        for (const auto &i : issues) {
          s += std::string(sev) + "," + std::to_string(i.line) + "," + i.kind +
               ",\"" + i.message + "\"\n";
        }
      };
      rows(report.errors, "error");
      rows(report.warnings, "warning");
      return s;
    }
    nlohmann::ordered_json j;
    j["ok"] = report.ok();
    auto list = [](const auto &issues) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto &i : issues) {
        a.push_back({{"line", i.line}, {"kind", i.kind}, {"message", i.message}});
      }
      return a;
    };
    j["errors"] = list(report.errors);
    j["warnings"] = list(report.warnings);
    return j.dump(2) + "\n";
  }

  int ScoreSiCommand() {
    const Corpus corpus = LoadCorpus(o_.articles);
    const AnnotationSet gold = ParseSpanFile(o_.gold, Mode::kSi);
    const AnnotationSet pred = ParseSpanFile(o_.pred, Mode::kSi);
    const SiScore score =
        ScoreSi(gold, pred, corpus, *ParseConvention(o_.convention));
    Emit(o_.format == "text" ? SiScoreToText(score)
                             : SiScoreToJson(score, o_.per_document));
    return kExitOk;
  }

  int ScoreTcCommand() {
    const AnnotationSet gold = ParseSpanFile(o_.gold, Mode::kTc, aliases());
    const AnnotationSet pred = ParseSpanFile(o_.pred, Mode::kTc, aliases());
    if (!o_.articles.empty()) {
      const Corpus corpus = LoadCorpus(o_.articles);
      RequireValid(corpus, gold, "gold");
      RequireValid(corpus, pred, "prediction");
    }
    const TcScore score = ScoreTc(gold, pred);
    Emit(o_.format == "text" ? TcScoreToText(score) : TcScoreToJson(score));
    return kExitOk;
  }

  int BaselineSi() {
    const Corpus corpus = LoadCorpus(o_.articles);
    RandomSiConfig cfg;
    cfg.seed = o_.seed;
    cfg.spans_per_doc = o_.spans_per_doc;
    cfg.max_len = o_.max_len;
    const RandomSiResult result = RandomSiBaseline(corpus, cfg);
    Warn(result.warnings);
    Emit(SerializeSpans(result.spans));
    return kExitOk;
  }

  int BaselineTc() {
    LengthLogRegModel model;
    if (!o_.model_in.empty()) {
      model = ModelFromJson(ReadFile(o_.model_in));
    } else {
      if (o_.train.empty()) throw UsageError("baseline-tc needs --train or --model-in");
      TrainConfig cfg;
      cfg.learning_rate = o_.learning_rate;
      cfg.epochs = o_.epochs;
      cfg.l2_penalty = o_.l2;
      cfg.seed = o_.seed;
      model = FitLengthLogReg(ParseSpanFile(o_.train, Mode::kTc, aliases()), cfg).model;
    }
    if (!o_.model_out.empty()) {
      std::ofstream file(o_.model_out, std::ios::binary);
      if (!file) throw IoError(o_.model_out + ": cannot open for writing");
      file << ModelToJson(model);
    }
    Emit(SerializeSpans(PredictLengthLogReg(model, ParseSpanTemplate(o_.input))));
    return kExitOk;
  }

  std::vector<AnnotationSet> LoadSystems(Mode mode) const {
    std::vector<AnnotationSet> systems;
    for (const auto &path : o_.preds) {
      systems.push_back(ParseSpanFile(path, mode, aliases()));
    }
    return systems;
  }

  ClassPrior Prior() const {
    if (o_.train.empty()) return {};
    ClassPrior prior = ComputeClassPrior(ParseSpanFile(o_.train, Mode::kTc, aliases()));
    if (!prior.usable()) {
      err_ << "warning: training file has no labels; ties fall back to class order\n";
    }
    return prior;
  }

  int Combine() {
    if (task() == Mode::kSi) {
      const Corpus corpus = LoadCorpus(RequireArticles());
      const auto systems = LoadSystems(Mode::kSi);
      Emit(SerializeSpans(CombineSi(systems, *ParseMethod(o_.method), corpus)));
    } else {
      const auto systems = LoadSystems(Mode::kTc);
      Emit(SerializeSpans(CombineTc(systems, Prior())));
    }
    return kExitOk;
  }

  int Sweep() {
    const int k_max = o_.k_max > 0 ? o_.k_max : static_cast<int>(o_.preds.size());
    std::string table;
    std::string svg;
    if (task() == Mode::kSi) {
      const Corpus corpus = LoadCorpus(RequireArticles());
      const auto systems = LoadSystems(Mode::kSi);
      const AnnotationSet gold = ParseSpanFile(o_.gold, Mode::kSi);
      std::vector<CombinationMethod> methods;
      for (const auto &m : o_.methods) methods.push_back(*ParseMethod(m));
      const SiSweepCurve curve = SweepTopKSi(systems, methods, gold, corpus, k_max,
                                             *ParseConvention(o_.convention));
      Warn(curve.warnings);
      table = o_.format == "csv" ? SweepToCsv(curve)
              : o_.format == "md" ? SweepToMarkdown(curve)
                                  : SweepToJson(curve);
      if (!o_.svg.empty()) svg = SweepToSvg(curve);
    } else {
      const auto systems = LoadSystems(Mode::kTc);
      const AnnotationSet gold = ParseSpanFile(o_.gold, Mode::kTc, aliases());
      const TcSweepCurve curve = SweepTopKTc(systems, gold, Prior(), k_max);
      Warn(curve.warnings);
      table = o_.format == "csv" ? SweepToCsv(curve)
              : o_.format == "md" ? SweepToMarkdown(curve)
                                  : SweepToJson(curve);
      if (!o_.svg.empty()) svg = SweepToSvg(curve);
    }
    if (!o_.svg.empty()) {
      std::ofstream file(o_.svg, std::ios::binary);
      if (!file) throw IoError(o_.svg + ": cannot open for writing");
      file << svg;
    }
    Emit(table);
    return kExitOk;
  }

  int Stats() {
    const auto n = o_.articles_list.size();
    if (o_.gold_list.size() != n ||
        (!o_.partitions.empty() && o_.partitions.size() != n)) {
      throw UsageError("--articles, --gold and --partition must be repeated the same number of times");
    }
    std::vector<Corpus> corpora;
    std::vector<AnnotationSet> golds;
    for (std::size_t i = 0; i < n; ++i) {
      Partition p = Partition::kUnlabeled;
      if (!o_.partitions.empty()) {
        auto parsed = ParsePartition(o_.partitions[i]);
        if (!parsed) throw UsageError("unknown partition '" + o_.partitions[i] + "'");
        p = *parsed;
      }
      corpora.push_back(LoadCorpus(o_.articles_list[i], p));
      golds.push_back(ParseSpanFile(o_.gold_list[i], Mode::kTc, aliases()));
      RequireValid(corpora.back(), golds.back(), "gold " + o_.gold_list[i]);
    }
    std::vector<PartitionInput> inputs;
    for (std::size_t i = 0; i < n; ++i) inputs.push_back({&corpora[i], &golds[i]});
    const StatsReport report = ComputeStats(inputs);

    std::vector<std::pair<std::string, std::vector<DuplicatePair>>> dups;
    if (o_.duplicates) {
      for (std::size_t i = 0; i < n; ++i) {
        dups.emplace_back(std::string(PartitionName(corpora[i].partition())),
                          FindNearDuplicates(corpora[i], o_.ngram, o_.threshold));
      }
    }

    if (o_.format == "csv") {
      std::string s = StatsToCsv(report);
      if (o_.duplicates) {
        s += "\npartition,first,second,similarity\n";
        for (const auto &[name, pairs] : dups) {
          for (const auto &d : pairs) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.5f", d.similarity);
            s += name + "," + std::to_string(d.first) + "," +
                 std::to_string(d.second) + "," + buf + "\n";
          }
        }
      }
      Emit(s);
    } else if (o_.format == "md") {
      std::string s = StatsToMarkdown(report);
      if (o_.duplicates) {
        s += "\n| partition | first | second | similarity |\n|---|---:|---:|---:|\n";
        for (const auto &[name, pairs] : dups) {
          for (const auto &d : pairs) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.5f", d.similarity);
            s += "| " + name + " | " + std::to_string(d.first) + " | " +
                 std::to_string(d.second) + " | " + buf + " |\n";
          }
        }
      }
      Emit(s);
    } else {
      auto j = nlohmann::ordered_json::parse(StatsToJson(report));
      if (o_.duplicates) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto &[name, pairs] : dups) {
          for (const auto &d : pairs) {
            list.push_back({{"partition", name},
                            {"first", d.first},
                            {"second", d.second},
                            {"similarity", RoundReported(d.similarity)}});
          }
        }
        j["near_duplicates"] = std::move(list);
      }
      Emit(j.dump(2) + "\n");
    }
    return kExitOk;
  }

  int LeaderboardCommand() {
    std::vector<LeaderboardEntry> entries;
    if (!o_.scores.empty()) entries = ReadScoreTableFile(o_.scores, task());
    if (!o_.systems.empty()) {
      if (o_.gold.empty()) throw UsageError("--system entries need --gold");
      std::optional<Corpus> corpus;
      if (task() == Mode::kSi) corpus = LoadCorpus(RequireArticles());
      const AnnotationSet gold = ParseSpanFile(o_.gold, task(), aliases());
      for (const auto &spec : o_.systems) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw UsageError("--system expects NAME=FILE, got '" + spec + "'");
        }
        LeaderboardEntry e;
        e.system = spec.substr(0, eq);
        const AnnotationSet pred = ParseSpanFile(spec.substr(eq + 1), task(), aliases());
        if (task() == Mode::kSi) {
          const SiScore s = ScoreSi(gold, pred, *corpus, *ParseConvention(o_.convention));
          e.values = {100 * s.f1, 100 * s.precision, 100 * s.recall};
        } else {
          const TcScore s = ScoreTc(gold, pred);
          e.values.push_back(100 * s.micro_f1);
          for (const auto &c : s.per_class) e.values.push_back(100 * c.f1);
        }
        entries.push_back(std::move(e));
      }
    }
    if (entries.empty()) throw UsageError("leaderboard needs --scores or --system");
    const Leaderboard board = BuildLeaderboard(task(), std::move(entries));
    Emit(o_.format == "csv"  ? LeaderboardToCsv(board)
         : o_.format == "md" ? LeaderboardToMarkdown(board)
                             : LeaderboardToJson(board));
    return kExitOk;
  }

  const Options &o_;
  std::ostream &out_;
  std::ostream &err_;
  std::optional<AliasTable> aliases_;
};

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Evaluation toolkit for propaganda span identification and "
               "technique classification",
               args.empty() ? "propeval" : args[0]};
  Options options;
  BuildApp(app, options);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const CLI::App *command = app.get_subcommands().front();
  try {
    Runner runner(options, out, err);
    return runner.Dispatch(command->get_name());
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInputError &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MissingPredictionError &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MisalignedEnsembleError &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitIoOrParse;
  }
}

std::vector<OptionInfo> ListOptions() {
  CLI::App app;
  Options options;
  BuildApp(app, options);
  std::vector<OptionInfo> infos;
  for (const CLI::App *sub : app.get_subcommands({})) {
    for (const CLI::Option *opt : sub->get_options()) {
      infos.push_back({sub->get_name(), opt->get_name(), opt->get_description()});
    }
  }
  return infos;
}

}  // namespace propeval
