#include "sbraid/cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbraid/error.hpp"
#include "sbraid/group_ring.hpp"
#include "sbraid/notation.hpp"
#include "sbraid/singular.hpp"
#include "sbraid/word_problem.hpp"

namespace sbraid {

namespace {

constexpr int kUnequal = 1;
constexpr int kError = 2;

int arity(const std::string& command) {
  if (command == "eq") return 2;
  if (command == "bench") return 0;
  return 1;
}

int resolve_strands(const Query& q, const std::vector<std::string>& words) {
  if (q.strands) {
    if (*q.strands < 2 || *q.strands > kMaxStrands) {
      throw IndexOutOfRange("strand count must be in [2, " +
                            std::to_string(kMaxStrands) + "]");
    }
    return *q.strands;
  }
  int top = 1;
  for (const auto& w : words) {
    for (const auto& t : parse_terms(w, kMaxStrands)) top = std::max(top, t.index);
  }
  return top + 1;
}

std::string eq_line(const Verdict& v, bool json) {
  if (json) return v.to_json();
  return std::string(v.equal ? "EQUAL" : "UNEQUAL") + " (" +
         to_string(v.certificate) + ")";
}

int run_eq_batch(const Query& q, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  int status = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw Error("expected two words separated by a tab");
      }
      const std::vector<std::string> words{line.substr(0, tab), line.substr(tab + 1)};
      const int n = resolve_strands(q, words);
      const Verdict v = decide_equal(parse_word(words[0], n), parse_word(words[1], n));
      out << eq_line(v, q.json) << "\n";
      if (!v.equal) status = std::max(status, kUnequal);
    } catch (const std::exception& e) {
      err << "line " << lineno << ": " << e.what() << "\n";
      out << (q.json ? "{\"error\":true}" : "ERROR") << "\n";
      status = kError;
    }
  }
  return status;
}

int dispatch(const Query& q, std::istream& in, std::ostream& out,
             std::ostream& err) {
  if (q.command == "bench") {
    const BenchReport report = bench(q.bench);
    out << (q.json ? report.to_json() : report.to_text()) << "\n";
    if (report.wrong() > 0) {
      err << report.wrong() << " bench verdicts disagree with their construction\n";
      return kError;
    }
    return 0;
  }
  if (q.command == "eq" && q.words.empty()) return run_eq_batch(q, in, out, err);

  const int want = arity(q.command);
  if (want == 0 && q.command != "bench") throw Error("unknown command: " + q.command);
  if (static_cast<int>(q.words.size()) != want) {
    throw Error(q.command + " takes " + std::to_string(want) + " word(s), got " +
                std::to_string(q.words.size()));
  }
  const int n = resolve_strands(q, q.words);

  if (q.command == "eq") {
    const Verdict v = decide_equal(parse_word(q.words[0], n), parse_word(q.words[1], n));
    out << eq_line(v, q.json) << "\n";
    return v.equal ? 0 : kUnequal;
  }
  if (q.command == "nf") {
    const GarsideNormalForm nf = normal_form(parse_braid_word(q.words[0], n));
    if (q.json) {
      nlohmann::ordered_json j;
      j["key"] = nf.key();
      j["inf"] = nf.inf;
      j["factors"] = nlohmann::ordered_json::array();
      for (const auto& f : nf.factors) j["factors"].push_back(f.one_line());
      out << j.dump() << "\n";
    } else {
      out << nf.key() << "\n";
    }
    return 0;
  }
  if (q.command == "eta") {
    const GroupRingElement e = eta(parse_word(q.words[0], n));
    if (q.json) {
      nlohmann::ordered_json j;
      j["terms"] = nlohmann::ordered_json::array();
      for (const auto& [nf, c] : e.terms()) {
        j["terms"].push_back({{"key", nf.key()}, {"coefficient", c.str()}});
      }
      out << j.dump() << "\n";
    } else {
      out << e.render() << "\n";
    }
    return 0;
  }
  if (q.command == "perm") {
    const Permutation p = permutation_of_terms(parse_terms(q.words[0], n), n);
    if (q.json) {
      nlohmann::ordered_json j;
      j["one_line"] = p.one_line();
      j["mapsto"] = p.mapsto_string();
      out << j.dump() << "\n";
    } else {
      out << p.mapsto_string() << "\n";
    }
    return 0;
  }
  if (q.command == "britton") {
    const BrittonForm b = to_britton_form(parse_word(q.words[0], n));
    if (q.json) {
      nlohmann::ordered_json j;
      j["segments"] = nlohmann::ordered_json::array();
      for (const auto& s : b.segments) j["segments"].push_back(format_word(s));
      j["letters"] = nlohmann::ordered_json::array();
      for (const auto& l : b.letters) j["letters"].push_back(l.to_string());
      out << j.dump() << "\n";
    } else {
      out << b.serialize() << "\n";
    }
    return 0;
  }
  throw Error("unknown command: " + q.command);
}

}  // namespace

int run_command(const Query& q, std::istream& in, std::ostream& out,
                std::ostream& err) {
  try {
    return dispatch(q, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Word problem in the singular braid monoid"};
  app.require_subcommand(1);
  Query q;
  int strands = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--strands,-n", strands, "number of strands");
    sub->add_flag("--json", q.json, "JSON output");
  };
  struct Command {
    const char* name;
    const char* help;
  };
  for (const Command s : {Command{"eq", "decide equality of two words (reads tab separated pairs from stdin when none are given)"},
                       Command{"nf", "Garside normal form of a braid word"},
                       Command{"eta", "image in the group ring"},
                       Command{"perm", "permutation of a word"},
                       Command{"britton", "Britton form of a pure singular word"}}) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->add_option("words", q.words, "words in s/t token syntax");
  }
  CLI::App* b = app.add_subcommand("bench", "timing of decide_equal on random pairs");
  add_common(b);
  b->add_option("--trials", q.bench.trials)->check(CLI::NonNegativeNumber);
  b->add_option("--max-len", q.bench.max_len)->check(CLI::PositiveNumber);
  b->add_option("--max-sing", q.bench.max_sing)->check(CLI::PositiveNumber);
  b->add_option("--seed", q.bench.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  q.command = app.get_subcommands().front()->get_name();
  if (strands != 0 || app.get_subcommands().front()->count("--strands") > 0) {
    q.strands = strands;
  }
  if (q.command == "bench") {
    if (q.strands) q.bench.strands = *q.strands;
    if (q.bench.strands < 3 || q.bench.strands > kMaxStrands) {
      err << "error: bench needs between 3 and " << kMaxStrands << " strands\n";
      return kError;
    }
  }
  return run_command(q, in, out, err);
}

}  // namespace sbraid
