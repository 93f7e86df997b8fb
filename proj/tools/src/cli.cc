#include "metaqa/app/cli.h"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "metaqa/app/config.h"
#include "metaqa/app/pipeline.h"
#include "metaqa/app/service.h"

namespace metaqa::app {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::vector<double> interval;

  CLI::App app{"Meta-sequence question generation: learning, generation, filtering and distractors"};
  app.set_config("--config", "", "TOML-style key = value file; keys are the long flag names");
  app.allow_config_extras(false);
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--msdip", c.msdip, "MSDIP store file")->capture_default_str();
  app.add_option("--pairs", c.pairs, "training pair corpus (JSONL)");
  app.add_option("--corpus", c.corpus, "tagged sentence corpus (JSONL)");
  app.add_option("--questions", c.questions, "external questions for filter (JSONL)");
  app.add_option("--embeddings", c.embeddings, "word vectors, text format");
  app.add_option("--lexicon", c.lexicon, "lexical graph (JSON)");
  app.add_option("--unigrams", c.unigrams, "unigram probabilities (TSV)");
  app.add_option("--kb", c.kb, "entity buckets (JSON)");
  app.add_option("--qaps", c.qaps, "QAP file")->capture_default_str();
  app.add_option("--teach", c.teach, "teach request output")->capture_default_str();
  app.add_option("--distractors", c.distractors, "distractor file")->capture_default_str();
  app.add_option("--mcqs", c.mcqs, "MCQ output")->capture_default_str();
  app.add_option("--verdicts", c.verdicts, "filter verdict output")->capture_default_str();
  app.add_option("--mode", c.mode, "merging mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MergeMode>{{"ideal", MergeMode::kIdeal}, {"phrasal_aware", MergeMode::kPhrasalAware}},
          CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--interval", interval, "embedding similarity interval lo,hi")->expected(2)->delimiter(',');
  app.add_option("--seed", c.seed, "run seed")->capture_default_str();
  app.add_option("--host", c.host, "listen address")->capture_default_str();
  app.add_option("--port", c.port, "listen port")->capture_default_str();
  app.add_option("--tagger", c.tagger, "command tagging raw text (stdin) into a JSON sentence (stdout)");
  app.add_option("--ui", c.ui, "static UI directory served at /");
  app.add_option("--disable-rule", c.disabled_rules, "TP3 rule id to switch off (repeatable)");

  auto* learn = app.add_subcommand("learn", "learn MSDIP pairs from a training pair corpus");
  auto* generate = app.add_subcommand("generate", "generate QAPs and teach requests for a corpus");
  auto* filter = app.add_subcommand("filter", "apply the question filters to external questions");
  auto* distract = app.add_subcommand("distract", "generate distractors for a QAP file");
  auto* assemble = app.add_subcommand("assemble", "assemble MCQs from QAPs and distractors");
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP teach service");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  if (!interval.empty()) {
    c.lo = interval[0];
    c.hi = interval[1];
  }

  try {
    if (learn->parsed()) {
      cmd_learn(c, out, err);
    } else if (generate->parsed()) {
      cmd_generate(c, out, err);
    } else if (filter->parsed()) {
      cmd_filter(c, out, err);
    } else if (distract->parsed()) {
      cmd_distract(c, out, err);
    } else if (assemble->parsed()) {
      cmd_assemble(c, out, err);
    } else if (serve_cmd->parsed()) {
      serve(c, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace metaqa::app
