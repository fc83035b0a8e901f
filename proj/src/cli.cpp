#include "arud/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "arud/corpus.hpp"
#include "arud/error.hpp"
#include "arud/filler.hpp"
#include "arud/masking.hpp"
#include "arud/metrics.hpp"
#include "arud/parallel.hpp"
#include "arud/taqti.hpp"

namespace arud::cli {

namespace {

struct Options {
  std::string data_dir;
  std::string input = "-";
  std::string output = "-";
  unsigned jobs = 1;

  // scan
  bool golden = false;
  bool verse_final = false;
  bool not_sentence_initial = false;

  // normalize
  std::string rejections;
  bool hemistich_pairs = false;
  bool no_clean = false, no_known_words = false, no_wasl = false, no_lam_kasra = false,
       no_silent = false, no_default_sukun = false, no_verify = false;

  // mask
  std::optional<std::uint64_t> seed;
  MaskConfig mask;
  std::string markers;
  bool no_reduce = false;

  // fill
  std::string lexicon;
  std::string target;
  std::string left, right;
  std::string queries;
  std::size_t max_words = 3;
  std::size_t max_results = 100;
  std::size_t beam = 0;
  bool no_prune = false;
  bool json = false;
};

// Exit-status carrying error for problems found after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Streams {
 public:
  Streams(const Options& opt, std::istream& in, std::ostream& out) {
    if (opt.input == "-") {
      in_ = &in;
    } else {
      file_in_ = std::make_unique<std::ifstream>(opt.input, std::ios::binary);
      if (!*file_in_) throw Error(ErrorCode::Io, "cannot open " + opt.input);
      in_ = file_in_.get();
    }
    if (opt.output == "-") {
      out_ = &out;
    } else {
      file_out_ = std::make_unique<std::ofstream>(opt.output, std::ios::binary);
      if (!*file_out_) throw Error(ErrorCode::Io, "cannot write " + opt.output);
      out_ = file_out_.get();
    }
  }

  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

  void finish() {
    out_->flush();
    if (!*out_) throw Error(ErrorCode::Io, "write failed");
  }

 private:
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
};

std::vector<std::string> read_file_lines(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Io, "cannot open " + path);
  return corpus::read_lines(f);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

void diag(std::ostream& err, std::size_t line, const std::string& what) {
  err << "line " << line << ": " << what << '\n';
}

int cmd_scan(const Options& opt, Streams& io, std::ostream& err, const DataTables& tables) {
  const auto lines = corpus::read_lines(io.in());
  struct Slot {
    std::string out, diag;
  };
  std::vector<Slot> slots(lines.size());
  parallel_for(lines.size(), resolve_jobs(opt.jobs), [&](std::size_t i) {
    try {
      ScriptLine line = script::parse_line(lines[i]);
      line.verse_final = opt.verse_final;
      const ScanResult r = taqti::scan(line, tables, !opt.not_sentence_initial);
      slots[i].out = r.beats.str();
      if (opt.golden) slots[i].out += "\t" + render(r.transcription);
      for (const auto& w : r.warnings) slots[i].diag += "line " + std::to_string(i + 1) + ": warning: " + w + "\n";
    } catch (const Error& e) {
      slots[i].diag = "line " + std::to_string(i + 1) + ": " + e.what() + "\n";
    }
  });
  for (const Slot& s : slots) {
    io.out() << s.out << '\n';
    err << s.diag;
  }
  return 0;
}

corpus::PipelineConfig pipeline_config(const Options& opt) {
  corpus::PipelineConfig cfg;
  cfg.clean = !opt.no_clean;
  cfg.known_words = !opt.no_known_words;
  cfg.wasl_heuristic = !opt.no_wasl;
  cfg.lam_kasra = !opt.no_lam_kasra;
  cfg.silent_letters = !opt.no_silent;
  cfg.default_sukun = !opt.no_default_sukun;
  cfg.verify_scan = !opt.no_verify;
  cfg.hemistich_pairs = opt.hemistich_pairs;
  cfg.jobs = resolve_jobs(opt.jobs);
  return cfg;
}

int cmd_normalize(const Options& opt, Streams& io, std::ostream& err, const DataTables& tables) {
  const auto lines = corpus::read_lines(io.in());
  const auto result = corpus::run_pipeline(lines, pipeline_config(opt), tables);
  for (const auto& l : result.accepted) io.out() << script::render_line(l) << '\n';
  std::unique_ptr<std::ofstream> log;
  if (!opt.rejections.empty()) {
    log = std::make_unique<std::ofstream>(opt.rejections, std::ios::binary);
    if (!*log) throw Error(ErrorCode::Io, "cannot write " + opt.rejections);
  }
  for (const auto& r : result.rejections) {
    if (log) *log << r.to_json() << '\n';
    else diag(err, r.line, r.reason + (r.detail.empty() ? "" : " (" + r.detail + ")"));
  }
  if (log && !log->flush()) throw Error(ErrorCode::Io, "write failed: " + opt.rejections);
  err << "accepted " << result.accepted.size() << " of " << lines.size() << " lines\n";
  return 0;
}

int cmd_filter(const Options&, Streams& io, std::ostream& err, const DataTables&) {
  const auto lines = corpus::read_lines(io.in());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    FilterDecision d;
    try {
      d = corpus::filter_line(script::parse_words(lines[i]));
    } catch (const Error& e) {
      d = {false, FilterReason::ForeignResidue};
      diag(err, i + 1, e.what());
    }
    io.out() << (d.accepted ? "accept" : "reject") << '\t' << to_string(d.reason) << '\n';
  }
  return 0;
}

int cmd_stats(const Options&, Streams& io, std::ostream& err, const DataTables&) {
  const auto lines = corpus::read_lines(io.in());
  DiacriticStats stats;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    try {
      stats.add(script::parse_line(lines[i]));
    } catch (const Error& e) {
      diag(err, i + 1, e.what());
    }
  }
  io.out() << stats.report();
  return 0;
}

std::array<std::string, 3> parse_markers(const std::string& spec) {
  std::array<std::string, 3> m;
  std::stringstream ss(spec);
  std::size_t n = 0;
  for (std::string part; std::getline(ss, part, ',');) {
    if (n == 3) throw UsageError("--markers takes exactly three comma-separated markers");
    m[n++] = part;
  }
  if (n != 3) throw UsageError("--markers takes exactly three comma-separated markers");
  return m;
}

int cmd_mask(const Options& opt, Streams& io, std::ostream& err, const DataTables& tables) {
  MaskConfig cfg = opt.mask;
  cfg.seed = *opt.seed;
  cfg.reduce_context = !opt.no_reduce;
  if (!opt.markers.empty()) cfg.markers = parse_markers(opt.markers);
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const auto raw = corpus::read_lines(io.in());
  std::vector<ScriptLine> lines(raw.size());
  std::set<std::size_t> unparsed;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      lines[i] = script::parse_line(raw[i]);
      lines[i].verse_final = opt.verse_final;
    } catch (const Error& e) {
      // An empty line keeps the numbering (and so the seeds) of the rest.
      unparsed.insert(i + 1);
      diag(err, i + 1, e.what());
    }
  }
  const auto data = masking::generate_dataset(lines, cfg, tables, resolve_jobs(opt.jobs));
  for (const auto& ex : data.examples) io.out() << ex.to_json() << '\n';
  for (const auto& s : data.skipped) {
    if (!unparsed.count(s.line)) diag(err, s.line, s.detail.empty() ? s.reason : s.detail);
  }
  return 0;
}

FillQuery base_query(const Options& opt) {
  FillQuery q;
  q.left_context = opt.left;
  q.right_context = opt.right;
  q.max_words = opt.max_words;
  q.max_results = opt.max_results;
  q.verse_final = opt.verse_final;
  q.sentence_initial = !opt.not_sentence_initial;
  q.beam_width = opt.beam;
  q.prune = !opt.no_prune;
  return q;
}

FillQuery query_from_json(const std::string& text, const FillQuery& defaults) {
  try {
    const auto j = nlohmann::json::parse(text);
    FillQuery q = defaults;
    q.target = BeatPattern::parse(j.contains("target") ? j.at("target").get<std::string>()
                                                       : j.at("beats").get<std::string>());
    q.left_context = j.value("left_context", q.left_context);
    q.right_context = j.value("right_context", q.right_context);
    q.verse_final = j.value("verse_final", q.verse_final);
    q.sentence_initial = j.value("sentence_initial", q.sentence_initial);
    q.max_words = j.value("max_words", q.max_words);
    q.max_results = j.value("max_results", q.max_results);
    q.beam_width = j.value("beam_width", q.beam_width);
    q.validate();
    return q;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::MalformedRecord, ex.what());
  }
}

int cmd_fill(const Options& opt, Streams& io, std::ostream& err, const DataTables& tables) {
  if (opt.queries.empty() == opt.target.empty()) {
    throw UsageError("fill needs exactly one of --target and --queries");
  }
  const auto words = read_file_lines(opt.lexicon);
  std::vector<corpus::Rejection> skipped;
  const Lexicon lexicon = Lexicon::index(words, tables, &skipped);
  for (const auto& s : skipped) {
    if (!blank(words[s.line - 1])) err << opt.lexicon << ":" << s.line << ": " << s.detail << '\n';
  }
  const FillQuery defaults = base_query(opt);

  if (!opt.target.empty()) {
    FillQuery q = defaults;
    try {
      q.target = BeatPattern::parse(opt.target);
      q.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const auto results = fill(q, lexicon, tables);
    if (opt.json) {
      nlohmann::ordered_json j;
      j["target"] = q.target.str();
      j["results"] = results;
      io.out() << j.dump() << '\n';
    } else {
      for (const auto& r : results) io.out() << r << '\n';
    }
    return 0;
  }

  std::vector<std::string> lines;
  if (opt.queries == "-") lines = corpus::read_lines(io.in());
  else lines = read_file_lines(opt.queries);
  std::vector<std::string> records(lines.size());
  std::vector<std::string> errors(lines.size());
  parallel_for(lines.size(), resolve_jobs(opt.jobs), [&](std::size_t i) {
    if (blank(lines[i])) return;
    nlohmann::ordered_json j;
    j["query"] = i + 1;
    try {
      const FillQuery q = query_from_json(lines[i], defaults);
      j["target"] = q.target.str();
      j["results"] = fill(q, lexicon, tables);
    } catch (const Error& e) {
      j["error"] = std::string(to_string(e.code()));
      errors[i] = e.what();
    }
    records[i] = j.dump();
  });
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!records[i].empty()) io.out() << records[i] << '\n';
    if (!errors[i].empty()) diag(err, i + 1, errors[i]);
  }
  return 0;
}

int cmd_eval(const Options& opt, Streams& io, std::ostream& err, const DataTables& tables) {
  const auto lines = corpus::read_lines(io.in());
  std::vector<corpus::Rejection> malformed;
  const EvalReport rep = evaluate_prediction_lines(lines, tables, resolve_jobs(opt.jobs), &malformed);
  for (const auto& m : malformed) diag(err, m.line, m.detail);
  io.out() << rep.report().str();
  return 0;
}

std::string version_text(const DataTables& t) {
  auto v = [](const std::string& s) { return s.empty() ? std::string("unversioned") : s; };
  return std::string("arud ") + ARUD_VERSION + "\n" +
         "special_words " + v(t.special_words.version) + "\n" +
         "juncture " + v(t.juncture.version) + "\n" +
         "known_words " + v(t.known_words.version) + "\n" +
         "silent_letters " + v(t.silent_letters.version) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  bool show_version = false;
  CLI::App app{"Arabic poetry scansion and rhythm-constrained text tools", "arud"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_flag("--version", show_version, "Print tool and table versions");
  app.add_option("--data-dir", opt.data_dir, "Table directory (default $ARUD_DATA_DIR or built-in)");

  auto io_options = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "Input file, - for stdin");
    sub->add_option("-o,--output", opt.output, "Output file, - for stdout");
  };
  auto jobs_option = [&](CLI::App* sub) {
    sub->add_option("-j,--jobs", opt.jobs, "Worker threads, 0 for all cores");
  };

  CLI::App* scan = app.add_subcommand("scan", "Lines to beat patterns, one per line");
  io_options(scan);
  jobs_option(scan);
  scan->add_flag("--golden", opt.golden, "Also print the prosodic transcription");
  scan->add_flag("--verse-final", opt.verse_final, "Treat every line as ending a verse");
  scan->add_flag("--not-sentence-initial", opt.not_sentence_initial,
                 "Lines continue a sentence (line-initial wasl is dropped)");

  CLI::App* normalize = app.add_subcommand("normalize", "Raw corpus lines to scan-ready lines");
  io_options(normalize);
  jobs_option(normalize);
  normalize->add_option("--rejections", opt.rejections, "Write rejected lines as JSON records here");
  normalize->add_flag("--hemistich-pairs", opt.hemistich_pairs, "Input lines are TAB-separated hemistich pairs");
  normalize->add_flag("--no-clean", opt.no_clean);
  normalize->add_flag("--no-known-words", opt.no_known_words);
  normalize->add_flag("--no-wasl", opt.no_wasl);
  normalize->add_flag("--no-lam-kasra", opt.no_lam_kasra);
  normalize->add_flag("--no-silent", opt.no_silent);
  normalize->add_flag("--no-default-sukun", opt.no_default_sukun);
  normalize->add_flag("--no-verify", opt.no_verify);

  CLI::App* filter = app.add_subcommand("filter", "Acceptance decision per line");
  io_options(filter);

  CLI::App* stats = app.add_subcommand("stats", "Diacritic statistics report");
  io_options(stats);

  CLI::App* mask = app.add_subcommand("mask", "Corpus lines to masked training examples");
  io_options(mask);
  jobs_option(mask);
  mask->add_option("--seed", opt.seed, "Random seed")->required();
  mask->add_option("--per-line", opt.mask.per_line, "Examples per line");
  mask->add_option("--span-p", opt.mask.span_p, "Span length parameter");
  mask->add_option("--keep-p", opt.mask.keep_p, "Context mark keep parameter");
  mask->add_option("--sukun-drop", opt.mask.sukun_drop, "Context sukun drop probability");
  mask->add_option("--markers", opt.markers, "Three comma-separated markers");
  mask->add_flag("--no-reduce-context", opt.no_reduce, "Keep context fully diacritized");
  mask->add_flag("--verse-final", opt.verse_final, "Every line ends a verse");

  CLI::App* fill_cmd = app.add_subcommand("fill", "Lexicon phrases matching a beat pattern");
  io_options(fill_cmd);
  jobs_option(fill_cmd);
  fill_cmd->add_option("--lexicon", opt.lexicon, "One diacritized word per line")->required();
  fill_cmd->add_option("--target", opt.target, "Beat pattern to fill");
  fill_cmd->add_option("--left", opt.left, "Words before the gap");
  fill_cmd->add_option("--right", opt.right, "Words after the gap");
  fill_cmd->add_option("--queries", opt.queries, "JSON query per line, - for stdin");
  fill_cmd->add_option("--max-words", opt.max_words);
  fill_cmd->add_option("--max-results", opt.max_results);
  fill_cmd->add_option("--beam", opt.beam, "Partial phrases kept per level, 0 for all");
  fill_cmd->add_flag("--no-prune", opt.no_prune);
  fill_cmd->add_flag("--verse-final", opt.verse_final);
  fill_cmd->add_flag("--not-sentence-initial", opt.not_sentence_initial);
  fill_cmd->add_flag("--json", opt.json, "Print the single query result as a JSON record");

  CLI::App* eval = app.add_subcommand("eval", "Prediction records to an evaluation report");
  io_options(eval);
  jobs_option(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "arud: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  const auto subs = app.get_subcommands();
  if (!show_version && subs.empty()) {
    err << "arud: a subcommand is required\n\n" << app.help();
    return 1;
  }

  try {
    const DataTables tables =
        load_tables(opt.data_dir.empty() ? default_data_dir() : std::filesystem::path(opt.data_dir));
    if (show_version) {
      out << version_text(tables);
      return 0;
    }
    CLI::App* sub = subs.front();
    Streams io(opt, in, out);
    int rc = 0;
    if (sub == scan) rc = cmd_scan(opt, io, err, tables);
    else if (sub == normalize) rc = cmd_normalize(opt, io, err, tables);
    else if (sub == filter) rc = cmd_filter(opt, io, err, tables);
    else if (sub == stats) rc = cmd_stats(opt, io, err, tables);
    else if (sub == mask) rc = cmd_mask(opt, io, err, tables);
    else if (sub == fill_cmd) rc = cmd_fill(opt, io, err, tables);
    else if (sub == eval) rc = cmd_eval(opt, io, err, tables);
    io.finish();
    return rc;
  } catch (const UsageError& e) {
    err << "arud: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "arud: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidConfig ? 1 : 2;
  }
}

}  // namespace arud::cli
