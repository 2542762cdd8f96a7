#include "textgraph/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "textgraph/compare.hpp"
#include "textgraph/corpus.hpp"
#include "textgraph/errors.hpp"
#include "textgraph/kernels.hpp"
#include "textgraph/report.hpp"
#include "textgraph/stemmer.hpp"
#include "text_util.hpp"

namespace textgraph::cli {
namespace {

namespace fs = std::filesystem;

struct Settings {
  std::string corpus_path;
  std::string stopword_path;
  std::string abbreviation_path;
  std::string synonym_path;
  std::string alias_path;
  std::string format = "human";
  SpreadParams spread;
  PhraseParams phrase;
  CompareParams compare;
  std::string mode = "redundancy";
  std::vector<std::string> topic;
  std::vector<std::string> docs;
  std::string input_dir;
  std::string output_path;
  std::size_t top_k = 5;
  std::size_t limit = 10;
  bool raw = false;
};

// Everything loaded from disk before any document is processed.
struct Runtime {
  TextResources resources;
  ReferenceCorpus corpus = ReferenceCorpus::uniform();
  SynonymLexicon synonyms;
};

Runtime load_runtime(const Settings& s) {
  s.spread.validate();
  s.compare.validate();
  if (!(s.phrase.beta_coefficient >= 0.0)) throw ConfigError("beta must be non-negative");
  Runtime rt;
  if (!s.stopword_path.empty()) rt.resources.stopwords.merge(StopWords::load(s.stopword_path));
  if (!s.abbreviation_path.empty()) rt.resources.abbreviations.merge(Abbreviations::load(s.abbreviation_path));
  if (!s.alias_path.empty()) rt.resources.aliases = AliasLexicon::load(s.alias_path);
  if (!s.synonym_path.empty()) rt.synonyms = SynonymLexicon::load(s.synonym_path);
  if (!s.corpus_path.empty()) rt.corpus = load_corpus(s.corpus_path);
  return rt;
}

std::shared_ptr<const DocumentGraph> make_graph(std::string doc_id, AnalyzedText analyzed, const Runtime& rt,
                                                const Settings& s) {
  auto graph = std::make_shared<DocumentGraph>(
      build_graph(std::move(doc_id), std::move(analyzed), rt.corpus, rt.synonyms, rt.resources.aliases));
  extract_phrases(*graph, s.phrase);
  return graph;
}

std::string doc_id_for(const std::string& path) { return fs::path(path).stem().string(); }

std::shared_ptr<const DocumentGraph> load_graph(const std::string& path, const Runtime& rt, const Settings& s) {
  return make_graph(doc_id_for(path), analyze(detail::read_file(path), rt.resources), rt, s);
}

Topic topic_from(const Settings& s, const Runtime& rt) {
  if (s.topic.empty()) throw ConfigError("a --topic is required");
  return Topic::from_terms(s.topic, rt.resources.stopwords);
}

void write_suggestions(std::ostream& err, const std::vector<TopicSuggestion>& suggestions) {
  err << "suggested topics:";
  if (suggestions.empty()) err << " (none)";
  for (const TopicSuggestion& t : suggestions) err << ' ' << '"' << t.term << '"';
  err << '\n';
}

void require_format(const Settings& s, std::initializer_list<std::string_view> allowed, std::string_view command) {
  if (std::find(allowed.begin(), allowed.end(), s.format) == allowed.end()) {
    throw CLI::ValidationError("--format", "format '" + s.format + "' is not available for " + std::string(command));
  }
}

int cmd_build_corpus(const Settings& s, const Runtime& rt, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(s.input_dir)) throw ConfigError("not a directory: " + s.input_dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(s.input_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  std::vector<std::string> documents;
  std::size_t unreadable = 0;
  for (const fs::path& path : paths) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    if (!(in && buffer << in.rdbuf())) {
      // An empty stream also fails operator<<, so tell the two cases apart.
      if (in && fs::file_size(path) == 0) {
        err << "warning: skipping empty file " << path.string() << '\n';
      } else {
        err << "error: cannot read " << path.string() << '\n';
        ++unreadable;
      }
      continue;
    }
    std::string text = buffer.str();
    if (tokenize_words(text).empty()) {
      err << "warning: skipping empty file " << path.string() << '\n';
      continue;
    }
    documents.push_back(std::move(text));
  }
  if (unreadable > 0) throw ConfigError(std::to_string(unreadable) + " file(s) could not be read");
  if (documents.empty()) throw EmptyDocumentError("no non-empty .txt documents in " + s.input_dir);

  const ReferenceCorpus corpus = build_corpus(documents, rt.resources.stopwords);
  save_corpus(corpus, s.output_path);
  out << "n=" << corpus.n() << " vocabulary=" << corpus.vocabulary_size() << '\n';
  return kExitOk;
}

int cmd_summarize(const Settings& s, const Runtime& rt, std::ostream& out, std::ostream& err) {
  require_format(s, {"human", "json"}, "summarize");
  const Topic topic = topic_from(s, rt);
  const auto graph = load_graph(s.docs.at(0), rt, s);
  const ActivatedGraph activated = spread(graph, topic, rt.resources.aliases, s.spread);
  if (activated.status == SpreadStatus::kTopicNotFound) {
    err << "topic not found in " << graph->doc_id << '\n';
    write_suggestions(err, suggest_topics(*graph, *graph, rt.resources.aliases, s.limit));
    return kExitTopicNotFound;
  }

  struct Ranked {
    std::size_t sentence;
    double score;
  };
  std::vector<Ranked> ranked;
  for (std::size_t i = 0; i < graph->sentences.size(); ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t p = graph->sentences[i].begin; p < graph->sentences[i].end; ++p) {
      if (!activated.is_reached(p)) continue;
      sum += activated.activation[p];
      ++count;
    }
    if (count > 0) ranked.push_back({i, sum / static_cast<double>(count)});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.score > b.score; });
  if (ranked.size() > s.top_k) ranked.resize(s.top_k);
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.sentence < b.sentence; });

  if (s.format == "json") {
    nlohmann::json sentences = nlohmann::json::array();
    for (const Ranked& r : ranked) {
      sentences.push_back({{"sentence_index", r.sentence}, {"score", r.score}, {"text", graph->sentence_text(r.sentence)}});
    }
    out << nlohmann::json{{"doc_id", graph->doc_id}, {"topic", topic.terms}, {"sentences", sentences}}.dump(2) << '\n';
    return kExitOk;
  }
  for (const Ranked& r : ranked) out << '[' << r.sentence << "] " << graph->sentence_text(r.sentence) << '\n';
  return kExitOk;
}

int cmd_compare(const Settings& s, const Runtime& rt, std::ostream& out, std::ostream& err) {
  require_format(s, {"human", "json"}, "compare");
  const Topic topic = topic_from(s, rt);
  std::vector<std::string> texts{detail::read_file(s.docs.at(0)), detail::read_file(s.docs.at(1))};
  std::vector<AnalyzedText> analyzed = kernels::analyze_all(texts, rt.resources);

  std::string id1 = doc_id_for(s.docs[0]);
  std::string id2 = doc_id_for(s.docs[1]);
  if (id1 == id2) {
    id1 += "~1";
    id2 += "~2";
  }
  const auto g1 = make_graph(id1, std::move(analyzed[0]), rt, s);
  const auto g2 = make_graph(id2, std::move(analyzed[1]), rt, s);
  const ActivatedGraph a1 = spread(g1, topic, rt.resources.aliases, s.spread);
  const ActivatedGraph a2 = spread(g2, topic, rt.resources.aliases, s.spread);
  if (a1.status == SpreadStatus::kTopicNotFound || a2.status == SpreadStatus::kTopicNotFound) {
    for (const ActivatedGraph* a : {&a1, &a2}) {
      err << a->graph->doc_id << ": " << (a->status == SpreadStatus::kOk ? "ok" : "topic not found") << '\n';
    }
    write_suggestions(err, suggest_topics(*g1, *g2, rt.resources.aliases, s.limit));
    return kExitTopicNotFound;
  }

  const ComparisonResult result = compare_graphs(a1, a2, rt.synonyms, rt.resources.aliases, s.compare);
  const ThresholdOutcome thresholds = apply_thresholds(result, s.compare);
  const ComparisonReport report{a1, a2, topic, result, thresholds};
  if (s.format == "json") {
    out << report_json(report).dump(2) << '\n';
  } else {
    write_human_report(out, report);
  }
  if (!thresholds.passed) {
    err << "comparison below threshold\n";
    return kExitBelowThreshold;
  }
  return kExitOk;
}

int cmd_profile(const Settings& s, const Runtime& rt, std::ostream& out, std::ostream& err) {
  require_format(s, {"human", "csv"}, "profile");
  if (!s.raw && s.topic.empty()) throw CLI::ValidationError("--topic", "profile needs --topic or --raw");
  const auto graph = load_graph(s.docs.at(0), rt, s);
  if (s.raw) {
    write_profile_csv(out, raw_profile(*graph));
    return kExitOk;
  }
  const ActivatedGraph activated = spread(graph, topic_from(s, rt), rt.resources.aliases, s.spread);
  if (activated.status == SpreadStatus::kTopicNotFound) {
    err << "topic not found in " << graph->doc_id << '\n';
    write_suggestions(err, suggest_topics(*graph, *graph, rt.resources.aliases, s.limit));
    return kExitTopicNotFound;
  }
  write_profile_csv(out, sentence_profile(activated));
  return kExitOk;
}

int cmd_suggest_topics(const Settings& s, const Runtime& rt, std::ostream& out) {
  require_format(s, {"human", "json"}, "suggest-topics");
  const auto g1 = load_graph(s.docs.at(0), rt, s);
  const auto g2 = load_graph(s.docs.at(1), rt, s);
  const auto suggestions = suggest_topics(*g1, *g2, rt.resources.aliases, s.limit);
  if (s.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const TopicSuggestion& t : suggestions) list.push_back({{"term", t.term}, {"weight", t.weight}});
    out << list.dump(2) << '\n';
    return kExitOk;
  }
  for (const TopicSuggestion& t : suggestions) out << t.term << '\t' << format_weight(t.weight) << '\n';
  return kExitOk;
}

int cmd_dump_graph(const Settings& s, const Runtime& rt, std::ostream& out) {
  out << dump_graph(*load_graph(s.docs.at(0), rt, s));
  return kExitOk;
}

void add_topic(CLI::App* sub, Settings& s, bool required) {
  auto* opt = sub->add_option("-t,--topic", s.topic, "Topic term or name; repeat or separate with commas")
                  ->delimiter(',')
                  ->always_capture_default(false)
                  ->default_str("");
  if (required) opt->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Topic-driven text graphs: summarize one document or compare two."};
  app.name("textgraph");
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "TOML/INI file with option values (command-line flags win)")
      ->envname("TEXTGRAPH_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--corpus", s.corpus_path, "Reference corpus file (default: every term has df=1, n=1)");
  app.add_option("--stopwords", s.stopword_path, "Extra stop words, one per line");
  app.add_option("--abbreviations", s.abbreviation_path, "Extra abbreviations, one per line");
  app.add_option("--synonyms", s.synonym_path, "Synonym lexicon: word<TAB>word<TAB>strength");
  app.add_option("--aliases", s.alias_path, "Alias lexicon: name<TAB>name");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
  app.add_option("--decay", s.spread.decay_rate, "Decay rate per unit of distance");
  app.add_option("--sentence-cost", s.spread.sentence_crossing_cost, "Distance added per sentence boundary");
  app.add_option("--paragraph-cost", s.spread.paragraph_crossing_cost, "Distance added per paragraph boundary");
  app.add_option("--link-same", s.spread.link_weights.same, "SAME link weight");
  app.add_option("--link-phrase", s.spread.link_weights.phrase, "PHRASE link weight");
  app.add_option("--link-name", s.spread.link_weights.name, "NAME link weight");
  app.add_option("--link-coref", s.spread.link_weights.coref, "COREF link weight");
  app.add_option("--max-nodes", s.spread.max_output_nodes, "Stop spreading after this many output nodes");
  app.add_option("--beta", s.phrase.beta_coefficient, "Phrase length bonus per word");
  app.add_option("--limit", s.limit, "Number of suggestions shown");

  auto* build = app.add_subcommand("build-corpus", "Count document frequencies over a directory of .txt files");
  build->add_option("input_dir", s.input_dir, "Directory of .txt documents")->required();
  build->add_option("output", s.output_path, "Corpus file to write")->required();

  auto* summarize = app.add_subcommand("summarize", "Top sentences of one document for a topic");
  summarize->add_option("doc", s.docs, "Document")->required()->expected(1);
  add_topic(summarize, s, true);
  summarize->add_option("-k,--top-k", s.top_k, "Number of sentences")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Similarities and differences of two documents for a topic");
  compare->add_option("docs", s.docs, "Two documents")->required()->expected(2);
  add_topic(compare, s, true);
  compare->add_option("--max-common", s.compare.max_common_sentences, "Sentence cap for COMMON");
  compare->add_option("--max-diff", s.compare.max_difference_sentences, "Sentence cap for each UNIQUE section");
  compare->add_option("--min-unique", s.compare.min_unique_concepts, "Fail below this many unique concepts");
  compare->add_option("--min-coverage", s.compare.min_coverage_weight, "Fail below this total selected score");
  compare->add_option("--mode", s.mode, "Sentence selection")->check(CLI::IsMember({"redundancy", "topk"}));

  auto* profile = app.add_subcommand("profile", "Per-sentence mean activation as CSV");
  profile->add_option("doc", s.docs, "Document")->required()->expected(1);
  add_topic(profile, s, false);
  profile->add_flag("--raw", s.raw, "Use tf.idf weights without spreading");

  auto* suggest = app.add_subcommand("suggest-topics", "Candidate topics shared by two documents");
  suggest->add_option("docs", s.docs, "Two documents")->required()->expected(2);

  auto* dump = app.add_subcommand("dump-graph", "Print the nodes, edges, phrases and names of a document graph");
  dump->add_option("doc", s.docs, "Document")->required()->expected(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    s.compare.mode = s.mode == "topk" ? SelectionMode::kPlainTopK : SelectionMode::kRedundancyReducing;
    const Runtime rt = load_runtime(s);
    if (*build) return cmd_build_corpus(s, rt, out, err);
    if (*summarize) return cmd_summarize(s, rt, out, err);
    if (*compare) return cmd_compare(s, rt, out, err);
    if (*profile) return cmd_profile(s, rt, out, err);
    if (*suggest) return cmd_suggest_topics(s, rt, out);
    return cmd_dump_graph(s, rt, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    if (dynamic_cast<const CLI::ConfigError*>(&e) || dynamic_cast<const CLI::FileError*>(&e)) return kExitConfig;
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EmptyDocumentError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace textgraph::cli
