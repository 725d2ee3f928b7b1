#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kuniv/counting.hpp"
#include "kuniv/errors.hpp"
#include "kuniv/hardness.hpp"
#include "kuniv/nfa.hpp"
#include "kuniv/oracle.hpp"
#include "kuniv/regex.hpp"
#include "kuniv/scc.hpp"
#include "kuniv/sigma_dp.hpp"
#include "kuniv/states_fpt.hpp"
#include "kuniv/word.hpp"

namespace kuniv::cli {

namespace {

using json = nlohmann::ordered_json;

// Thresholds for --algo auto.
constexpr std::size_t kAutoSigmaLetters = 20;
constexpr std::size_t kAutoStates = 24;

struct Options {
  std::string word;
  std::string nfa_path;
  std::optional<std::string> regex;
  std::string cnf_path;
  std::size_t sigma = 0;
  std::size_t k = 0;
  std::optional<std::size_t> len;
  std::string mode = "exact";
  std::string algo = "auto";
  std::string format = "text";
  bool perfect = false;
  bool paths = false;
  bool dump_scc = false;
  bool print_regex = false;
  bool print_nfa = false;
  std::size_t max_subset_states = StatesOptions{}.max_states;
  std::size_t workers = 1;
  std::size_t max_len = 8;
};

// Collects text lines and a JSON object; one of them is printed at the end.
class Report {
 public:
  explicit Report(bool as_json) : json_(as_json) {}

  void line(const std::string& text) { lines_.push_back(text); }
  json& field(const std::string& name) { return obj_[name]; }

  void emit(std::ostream& out) const {
    if (json_) {
      out << obj_.dump() << '\n';
    } else {
      for (const auto& l : lines_) out << l << '\n';
    }
  }

 private:
  bool json_;
  std::vector<std::string> lines_;
  json obj_ = json::object();
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

json max_index_json(const std::optional<MaxIndex>& m) {
  if (!m) return nullptr;
  if (m->is_unbounded()) return "unbounded";
  return m->value();
}

std::string max_index_text(const std::optional<MaxIndex>& m) {
  return m ? m->to_string() : std::string("empty");
}

// The automaton or regex named on the command line.
struct Source {
  std::optional<RegexAst> regex;
  Nfa nfa;
};

Source load_source(const Options& o) {
  const bool has_nfa = !o.nfa_path.empty();
  if (has_nfa == o.regex.has_value()) throw InputError("give exactly one of --nfa or --regex");
  if (has_nfa) {
    if (o.sigma != 0) throw InputError("--sigma is read from the NFA file");
    return Source{std::nullopt, parse_nfa(read_file(o.nfa_path))};
  }
  if (o.sigma == 0) throw InputError("--regex needs --sigma");
  RegexAst r = parse_regex(*o.regex, Alphabet(o.sigma));
  Nfa n = thompson(r);
  return Source{std::move(r), std::move(n)};
}

std::optional<NormalizedNfa> normalized(const Nfa& n) {
  auto v = normalize(n);
  if (std::holds_alternative<EmptyLanguage>(v)) return std::nullopt;
  return std::get<NormalizedNfa>(std::move(v));
}

std::string resolve_algo(const Options& o, const Source& s, const std::optional<NormalizedNfa>& a) {
  if (o.algo != "auto") return o.algo;
  if (s.nfa.alphabet().size() <= kAutoSigmaLetters) return "sigma";
  if (!a || a->num_states() <= std::min(kAutoStates, o.max_subset_states)) return "states";
  throw CapacityError("no algorithm applies: sigma > " + std::to_string(kAutoSigmaLetters) +
                      " and more than " + std::to_string(kAutoStates) + " states");
}

std::optional<MaxIndex> compute_max_index(const Options& o, const Source& s, Report& report) {
  const auto a = normalized(s.nfa);
  const std::string algo = resolve_algo(o, s, a);
  report.field("algo") = algo;
  if (o.dump_scc && a) {
    std::ostringstream dump;
    dump_scc(dump, decompose(*a));
    std::string text = dump.str();
    report.field("scc") = text;
    std::istringstream lines(text);
    for (std::string l; std::getline(lines, l);) report.line(l);
  }
  if (algo == "sigma" && s.regex) return max_universality_regex(*s.regex);
  if (!a) return std::nullopt;
  if (algo == "sigma") return max_universality_sigma(*a);
  if (algo == "states") {
    return max_universality_states(*a, StatesOptions{o.max_subset_states, o.workers});
  }
  return max_universality_product(*a);
}

void cmd_index(const Options& o, Report& report) {
  if (o.sigma == 0) throw InputError("index needs --sigma");
  const Word w = parse_word(o.word, Alphabet(o.sigma));
  const ArchFactorization f = arch_factorize(w);
  std::string arches;
  json arch_list = json::array();
  for (const Word& a : f.arches) {
    if (!arches.empty()) arches += '|';
    arches += format_word(a);
    arch_list.push_back(format_word(a));
  }
  report.line("index " + std::to_string(f.arches.size()));
  report.line("arches " + (arches.empty() ? std::string("_") : arches));
  report.line("rest " + (f.rest.empty() ? std::string("_") : format_word(f.rest)));
  report.field("index") = f.arches.size();
  report.field("arches") = arch_list;
  report.field("rest") = format_word(f.rest);
}

void cmd_esu(const Options& o, Report& report) {
  const Source s = load_source(o);
  const auto m = compute_max_index(o, s, report);
  const bool verdict = m && m->reaches(o.k);
  report.line(bool_text(verdict));
  report.field("verdict") = verdict;
  report.field("max_index") = max_index_json(m);
}

void cmd_usu(const Options& o, Report& report) {
  const Source s = load_source(o);
  const auto a = normalized(s.nfa);
  // Every word of the empty language is k-universal.
  const bool verdict = !a || usu_decide(*a, o.k);
  report.line(bool_text(verdict));
  report.field("verdict") = verdict;
}

void cmd_maxindex(const Options& o, Report& report) {
  const Source s = load_source(o);
  const auto m = compute_max_index(o, s, report);
  report.line(max_index_text(m));
  report.field("max_index") = max_index_json(m);
}

RankMode parse_mode(const std::string& mode) {
  if (mode == "exact") return RankMode::Exact;
  if (mode == "atmost" || mode == "at_most") return RankMode::AtMost;
  if (mode == "total") return RankMode::Total;
  throw InputError("unknown mode: " + mode);
}

std::optional<Nfa> counting_automaton(const Options& o) {
  const Source s = load_source(o);
  const auto a = normalized(s.nfa);
  if (!a) return std::nullopt;
  return remove_epsilon(*a);
}

void cmd_count(const Options& o, Report& report) {
  const RankMode mode = parse_mode(o.mode);
  if (mode != RankMode::Total && !o.len) throw InputError("--len is required for this mode");
  const auto semantics = o.paths ? CountSemantics::Paths : CountSemantics::Words;
  const auto a = counting_automaton(o);
  std::string text = "0";
  if (a) {
    switch (mode) {
      case RankMode::Exact:
        text = count_exact(*a, *o.len, o.k, o.perfect, semantics).str();
        break;
      case RankMode::AtMost:
        text = count_at_most(*a, *o.len, o.k, o.perfect, semantics).str();
        break;
      case RankMode::Total: {
        const TotalCount t = count_total(*a, o.k, o.perfect, semantics);
        text = std::holds_alternative<Infinite>(t) ? "infinite" : std::get<BigCount>(t).str();
        break;
      }
    }
  }
  report.line(text);
  report.field("count") = text;
}

void cmd_rank(const Options& o, Report& report) {
  const RankMode mode = parse_mode(o.mode);
  const auto semantics = o.paths ? CountSemantics::Paths : CountSemantics::Words;
  const Source s = load_source(o);
  const Word w = parse_word(o.word, s.nfa.alphabet());
  const auto a = normalized(s.nfa);
  std::string text = "0";
  if (a) text = rank(remove_epsilon(*a), w, o.k, mode, o.perfect, semantics).str();
  report.line(text);
  report.field("rank") = text;
}

void cmd_reduce(const Options& o, Report& report) {
  if (!o.regex) throw InputError("reduce needs --regex");
  if (o.sigma == 0) throw InputError("--regex needs --sigma");
  const RegexAst r = parse_regex(*o.regex, Alphabet(o.sigma));
  const RegexAst reduced = star_free_reduce(r);
  report.line(to_string(reduced));
  report.field("regex") = to_string(reduced);
  report.field("size") = reduced.size();
}

void cmd_sat2regex(const Options& o, Report& report) {
  if (o.cnf_path.empty()) throw InputError("sat2regex needs --cnf");
  if (o.print_regex && o.print_nfa) throw InputError("choose one of --print-regex and --print-nfa");
  const CnfInstance c = parse_dimacs(read_file(o.cnf_path));
  const RegexAst r = reduce_to_regex(c);
  report.field("sigma") = r.alphabet().size();
  if (o.print_nfa) {
    const std::string text = format_nfa(thompson(r));
    std::istringstream lines(text);
    for (std::string l; std::getline(lines, l);) report.line(l);
    report.field("nfa") = text;
  } else {
    report.line(to_string(r));
    report.field("regex") = to_string(r);
  }
}

void cmd_oracle(const Options& o, Report& report) {
  const Source s = load_source(o);
  const auto words = enumerate_language(s.nfa, o.max_len);
  std::map<std::size_t, std::size_t> histogram;
  for (const Word& w : words) ++histogram[universality_index(w)];
  const auto a = normalized(s.nfa);
  const std::optional<MaxIndex> m =
      a ? std::optional<MaxIndex>(max_universality_product(*a)) : std::nullopt;

  report.line("words " + std::to_string(words.size()));
  std::string hist = "histogram";
  json hist_json = json::object();
  for (const auto& [iota, count] : histogram) {
    hist += ' ' + std::to_string(iota) + ':' + std::to_string(count);
    hist_json[std::to_string(iota)] = count;
  }
  report.line(hist);
  report.line("max_index " + max_index_text(m));
  report.field("words") = words.size();
  report.field("histogram") = hist_json;
  report.field("max_index") = max_index_json(m);
  if (o.k > 0) {
    const bool esu = m && m->reaches(o.k);
    const bool usu = !a || usu_decide(*a, o.k);
    report.line(std::string("esu ") + bool_text(esu));
    report.line(std::string("usu ") + bool_text(usu));
    report.field("esu") = esu;
    report.field("usu") = usu;
  }
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--nfa", o.nfa_path, "NFA file ('-' for stdin)");
  sub->add_option("--regex", o.regex, "regular expression");
  sub->add_option("--sigma", o.sigma, "alphabet size for --regex");
}

void add_k(CLI::App* sub, Options& o, bool required) {
  auto* opt = sub->add_option("--k", o.k, "universality parameter")->check(CLI::PositiveNumber);
  if (required) opt->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"k-subsequence universality analyses"};
  app.name("kuniv");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* index = app.add_subcommand("index", "universality index and arch factorization of a word");
  index->add_option("--word", o.word, "word (a..z or comma-separated letters)")->required();
  index->add_option("--sigma", o.sigma, "alphabet size")->required();

  const std::vector<std::string> algos{"sigma", "states", "product", "auto"};
  for (const char* name : {"esu", "maxindex"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "esu"
                                             ? "does the language hold a k-universal word"
                                             : "largest universality index in the language");
    add_source(sub, o);
    if (std::string(name) == "esu") add_k(sub, o, true);
    sub->add_option("--algo", o.algo, "algorithm")->check(CLI::IsMember(algos))->capture_default_str();
    sub->add_option("--workers", o.workers, "threads for --algo states")->check(CLI::PositiveNumber);
    sub->add_option("--max-subset-states", o.max_subset_states, "state cap for --algo states");
    sub->add_flag("--dump-scc", o.dump_scc, "print the component decomposition");
  }

  auto* usu = app.add_subcommand("usu", "is every word of the language k-universal");
  add_source(usu, o);
  add_k(usu, o, true);

  const std::vector<std::string> modes{"exact", "atmost", "at_most", "total"};
  auto* count = app.add_subcommand("count", "count k-universal words");
  add_source(count, o);
  add_k(count, o, true);
  count->add_option("--len", o.len, "word length m");
  count->add_option("--mode", o.mode, "exact|atmost|total")->check(CLI::IsMember(modes));
  count->add_flag("--perfect", o.perfect, "only words with empty rest");
  count->add_flag("--paths", o.paths, "count accepting paths instead of words");

  auto* rank_cmd = app.add_subcommand("rank", "rank of a word among k-universal words");
  add_source(rank_cmd, o);
  add_k(rank_cmd, o, true);
  rank_cmd->add_option("--word", o.word, "word to rank")->required();
  rank_cmd->add_option("--mode", o.mode, "exact|atmost|total")->check(CLI::IsMember(modes));
  rank_cmd->add_flag("--perfect", o.perfect, "only words with empty rest");
  rank_cmd->add_flag("--paths", o.paths, "rank accepting paths instead of words");

  auto* reduce = app.add_subcommand("reduce", "star-free form of a bounded regex");
  reduce->add_option("--regex", o.regex, "regular expression")->required();
  reduce->add_option("--sigma", o.sigma, "alphabet size")->required();

  auto* sat = app.add_subcommand("sat2regex", "regex encoding of a CNF formula");
  sat->add_option("--cnf", o.cnf_path, "DIMACS file ('-' for stdin)")->required();
  sat->add_flag("--print-regex", o.print_regex, "print the regex (default)");
  sat->add_flag("--print-nfa", o.print_nfa, "print the Thompson automaton");

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration and product oracles");
  add_source(oracle, o);
  add_k(oracle, o, false);
  oracle->add_option("--max-len", o.max_len, "enumeration length bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report(o.format == "json");
  try {
    if (*index) cmd_index(o, report);
    if (*app.get_subcommand("esu")) cmd_esu(o, report);
    if (*app.get_subcommand("maxindex")) cmd_maxindex(o, report);
    if (*usu) cmd_usu(o, report);
    if (*count) cmd_count(o, report);
    if (*rank_cmd) cmd_rank(o, report);
    if (*reduce) cmd_reduce(o, report);
    if (*sat) cmd_sat2regex(o, report);
    if (*oracle) cmd_oracle(o, report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  report.emit(out);
  return 0;
}

}  // namespace kuniv::cli
