// barmu: command line front end for the Bar-muTL toolkit.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "barmu/decide.hpp"
#include "barmu/errors.hpp"
#include "barmu/gen.hpp"

using namespace barmu;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int kHolds = 0, kFails = 1, kUnknown = 2, kError = 3;

struct Globals {
  bool json = false;
  std::size_t pool_size = 0;
  std::size_t budget = 100000;
  std::uint64_t seed = 1;
  bool stats = false;
  int maxlen = 4;
  fs::path base;  // batch entries resolve paths against the manifest
};

// Outcome of one command: exit code, human text and a JSON record.
struct Outcome {
  int code = kError;
  std::string text;
  json record;
};

std::string slurp(const Globals& g, const std::string& arg) {
  fs::path p = g.base.empty() ? fs::path(arg) : g.base / arg;
  std::ifstream in(p);
  if (!in) {
    // Not a file: treat the argument as inline text.
    if (!fs::exists(p)) return arg;
    throw Error(ErrorCode::Syntax, "cannot read " + p.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_automaton(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '%') continue;
    return line.compare(i, 7, "states:") == 0 || line.compare(i, 8, "initial:") == 0;
  }
  return false;
}

DecideOptions decide_options(const Globals& g) {
  DecideOptions o;
  o.translate.pool_size = g.pool_size;
  o.translate.budget = g.budget;
  return o;
}

int exit_code(Result r) { return r == Result::Holds ? kHolds : r == Result::Fails ? kFails : kUnknown; }

Outcome render(const Verdict& v, const char* yes, const char* no) {
  Outcome o;
  o.code = exit_code(v.result);
  o.record["result"] = result_name(v.result);
  o.record["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
  if (v.data_witness) o.record["data_witness"] = to_string(*v.data_witness);
  o.record["stats"] = {{"states", v.states}, {"explored", v.explored}, {"millis", v.millis}};
  if (!v.note.empty()) o.record["note"] = v.note;
  o.text = v.result == Result::Holds ? yes : v.result == Result::Fails ? no : "unknown-bounded";
  o.text += "\n";
  if (v.witness) o.text += "witness: " + to_string(*v.witness) + "\n";
  if (v.data_witness) o.text += "data witness: " + to_string(*v.data_witness) + "\n";
  if (!v.note.empty()) o.text += "note: " + v.note + "\n";
  return o;
}

Outcome cmd_sat(const Globals& g, const std::string& f) {
  return render(satisfiable(parse_formula(slurp(g, f)), decide_options(g)), "sat", "unsat");
}

Outcome cmd_valid(const Globals& g, const std::string& f, bool local) {
  Formula phi = parse_formula(slurp(g, f));
  return render(local ? valid_local(phi, decide_options(g)) : valid_global(phi, decide_options(g)), "valid", "not valid");
}

Outcome cmd_refine(const Globals& g, const std::string& psi, const std::string& phi) {
  return render(refines_global(parse_formula(slurp(g, psi)), parse_formula(slurp(g, phi)), decide_options(g)), "refines",
                "does not refine");
}

Outcome cmd_mc(const Globals& g, const std::string& a, const std::string& f, bool local) {
  ExtBarNFA aut = parse_automaton(slurp(g, a));
  Formula phi = parse_formula(slurp(g, f));
  if (local) return render(model_check_local_bounded(aut, phi, g.maxlen), "holds", "fails");
  return render(model_check_global(aut, phi, decide_options(g)), "holds", "fails");
}

Outcome cmd_member(const Globals& g, const std::string& src, const std::string& word) {
  std::string text = slurp(g, src);
  BarString w = parse_barstring(word);
  bool in;
  if (looks_like_automaton(text)) {
    in = accepts_alpha(parse_automaton(text), w);
  } else {
    if (!is_closed(w)) throw PreconditionError("bar string " + to_string(w) + " is not closed");
    in = evaluate({}, w, parse_formula(text));
  }
  Outcome o;
  o.code = in ? kHolds : kFails;
  o.record = {{"result", in ? "holds" : "fails"}, {"witness", nullptr}, {"word", to_string(w)}};
  o.text = in ? "member\n" : "not a member\n";
  return o;
}

Outcome cmd_translate(const Globals& g, const std::string& f) {
  Formula phi = parse_formula(slurp(g, f));
  TranslateStats st;
  ExtBarNFA a = formula_to_automaton(phi, decide_options(g).translate, &st);
  Outcome o;
  o.code = kHolds;
  o.text = to_string(a);
  json stats = {{"states", st.states},       {"literal_states", st.literal_states}, {"edges", st.edges},
                {"eps_edges", st.eps_edges}, {"pool_size", st.pool_size},           {"degree", st.degree}};
  if (g.stats)
    for (auto& [k, v] : stats.items()) o.text += "% " + k + ": " + v.dump() + "\n";
  o.record = {{"result", "holds"}, {"automaton", to_string(a)}, {"stats", stats}};
  return o;
}

Outcome cmd_negate(const Globals& g, const std::string& f) {
  Formula n = negate(parse_formula(slurp(g, f)));
  Outcome o;
  o.code = kHolds;
  o.text = to_string(n) + "\n";
  o.record = {{"result", "holds"}, {"formula", to_string(n)}};
  return o;
}

Outcome cmd_enumerate(const Globals& g, const std::string& f) {
  Formula phi = parse_formula(slurp(g, f));
  std::vector<Name> pool;
  for (Name i = 0; i < (g.pool_size ? g.pool_size : 3); ++i) pool.push_back(i);
  Outcome o;
  json models = json::array();
  for (auto& w : enumerate_closed(g.maxlen, pool))
    if (evaluate({}, w, phi)) {
      o.text += to_string(w) + "\n";
      models.push_back(to_string(w));
    }
  o.code = models.empty() ? kFails : kHolds;
  o.record = {{"result", models.empty() ? "fails" : "holds"}, {"models", models}};
  return o;
}

Outcome cmd_random(const Globals& g, std::size_t size, std::size_t deg) {
  std::mt19937_64 rng(g.seed);
  Formula f = random_formula(rng, {size, deg});
  Outcome o;
  o.code = kHolds;
  o.text = to_string(f) + "\n";
  o.record = {{"result", "holds"}, {"formula", to_string(f)}};
  return o;
}

Outcome error_outcome(const std::string& code, const std::string& msg) {
  Outcome o;
  o.code = kError;
  o.text = "error " + code + ": " + msg + "\n";
  o.record = {{"result", "error"}, {"code", code}, {"message", msg}};
  return o;
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_outcome(code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_outcome("E-INTERNAL", e.what());
  }
}

Outcome run_line(const Globals& g, const std::vector<std::string>& args);

// Manifest lines: "VERB ARGS... => EXPECTED", where EXPECTED is one of
// holds, fails, unknown-bounded, error. Blank lines and '%' comments are
// skipped.
Outcome cmd_batch(Globals g, const std::string& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::Syntax, "cannot read manifest " + manifest);
  g.base = fs::path(manifest).parent_path();
  Outcome total;
  total.code = kHolds;
  json entries = json::array();
  std::string line;
  int lineno = 0, passed = 0, failed = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '%') continue;
    auto arrow = line.find("=>");
    if (arrow == std::string::npos) throw ParseError(ErrorCode::Syntax, lineno, 1, "manifest entry without '=>'");
    std::istringstream lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
    std::vector<std::string> args;
    for (std::string t; lhs >> t;) args.push_back(t);
    std::string expected;
    rhs >> expected;
    // Quoted bar strings: member FILE "#a a"
    std::vector<std::string> merged;
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (!args[k].empty() && args[k][0] == '"') {
        std::string s = args[k].substr(1);
        while (s.empty() || s.back() != '"') {
          if (++k >= args.size()) throw ParseError(ErrorCode::Syntax, lineno, 1, "unterminated quote");
          s += " " + args[k];
        }
        s.pop_back();
        merged.push_back(s);
      } else {
        merged.push_back(args[k]);
      }
    }
    Outcome o = run_line(g, merged);
    std::string got = o.record.value("result", "error");
    bool ok = got == expected;
    ok ? ++passed : ++failed;
    total.text += std::string(ok ? "PASS" : "FAIL") + "  line " + std::to_string(lineno) + ": " + line.substr(i, arrow - i) +
                  "=> " + got + (ok ? "" : " (expected " + expected + ")") + "\n";
    entries.push_back({{"line", lineno}, {"expected", expected}, {"got", got}, {"ok", ok}});
  }
  total.text += std::to_string(passed) + " passed, " + std::to_string(failed) + " failed\n";
  total.code = failed ? kFails : kHolds;
  total.record = {{"result", failed ? "fails" : "holds"}, {"entries", entries}, {"passed", passed}, {"failed", failed}};
  return total;
}

Outcome run_line(const Globals& g0, const std::vector<std::string>& args) {
  return guarded([&]() -> Outcome {
    if (args.empty()) throw Error(ErrorCode::Syntax, "empty manifest entry");
    Globals g = g0;
    std::vector<std::string> pos;
    bool local = false;
    for (std::size_t k = 1; k < args.size(); ++k) {
      const std::string& a = args[k];
      if (a == "--local") local = true;
      else if (a == "--global") local = false;
      else if (a == "--maxlen" && k + 1 < args.size()) g.maxlen = std::stoi(args[++k]);
      else if (a == "--pool-size" && k + 1 < args.size()) g.pool_size = std::stoul(args[++k]);
      else if (a == "--budget" && k + 1 < args.size()) g.budget = std::stoul(args[++k]);
      else pos.push_back(a);
    }
    const std::string& verb = args[0];
    auto need = [&](std::size_t n) {
      if (pos.size() != n) throw Error(ErrorCode::Syntax, verb + " expects " + std::to_string(n) + " arguments");
    };
    if (verb == "sat") return need(1), cmd_sat(g, pos[0]);
    if (verb == "valid") return need(1), cmd_valid(g, pos[0], local);
    if (verb == "refine") return need(2), cmd_refine(g, pos[0], pos[1]);
    if (verb == "mc") return need(2), cmd_mc(g, pos[0], pos[1], local);
    if (verb == "member") return need(2), cmd_member(g, pos[0], pos[1]);
    if (verb == "translate") return need(1), cmd_translate(g, pos[0]);
    if (verb == "negate") return need(1), cmd_negate(g, pos[0]);
    if (verb == "enumerate") return need(1), cmd_enumerate(g, pos[0]);
    throw Error(ErrorCode::Syntax, "unknown verb " + verb);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"barmu: Bar-muTL satisfiability, validity, refinement and model checking"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit a JSON verdict record");
  app.add_option("--pool-size", g.pool_size, "Tableau name pool (enumerate: binder pool, default 3)");
  app.add_option("--budget", g.budget, "State budget for formula translation")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random formulas")->capture_default_str();
  app.add_flag("--stats", g.stats, "Print translation statistics");

  std::string f1, f2, word;
  bool global = false, local = false;
  std::size_t size = 8, deg = 2;

  auto* sat = app.add_subcommand("sat", "Satisfiability of a closed formula");
  sat->add_option("FORMULA", f1)->required();
  auto* valid = app.add_subcommand("valid", "Validity under global or local freshness");
  valid->add_option("FORMULA", f1)->required();
  auto* vg = valid->add_flag("--global", global, "Global freshness (default)");
  valid->add_flag("--local", local, "Local freshness")->excludes(vg);
  auto* refine = app.add_subcommand("refine", "Whether every model of the first formula is a model of the second");
  refine->add_option("PSI", f1)->required();
  refine->add_option("PHI", f2)->required();
  auto* mc = app.add_subcommand("mc", "Model checking of an automaton against a formula");
  mc->add_option("AUTOMATON", f1)->required();
  mc->add_option("FORMULA", f2)->required();
  mc->add_flag("--local", local, "Bounded check under local freshness");
  mc->add_option("--maxlen", g.maxlen, "Length bound for --local")->capture_default_str();
  auto* member = app.add_subcommand("member", "Membership of a bar string");
  member->add_option("SOURCE", f1, "Automaton or formula file")->required();
  member->add_option("BARSTRING", word)->required();
  auto* translate = app.add_subcommand("translate", "Formula to automaton");
  translate->add_option("FORMULA", f1)->required();
  auto* neg = app.add_subcommand("negate", "Negation normal form of the negation");
  neg->add_option("FORMULA", f1)->required();
  auto* en = app.add_subcommand("enumerate", "Closed models up to a length");
  en->add_option("FORMULA", f1)->required();
  en->add_option("--maxlen", g.maxlen, "Length bound")->capture_default_str();
  auto* rnd = app.add_subcommand("random", "Random closed guarded formula");
  rnd->add_option("--size", size, "Maximal node count")->capture_default_str();
  rnd->add_option("--degree", deg, "Number of distinct names")->capture_default_str();
  auto* batch = app.add_subcommand("batch", "Run a manifest of commands with expected results");
  batch->add_option("MANIFEST", f1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  Outcome o = guarded([&]() -> Outcome {
    if (*sat) return cmd_sat(g, f1);
    if (*valid) return cmd_valid(g, f1, local);
    if (*refine) return cmd_refine(g, f1, f2);
    if (*mc) return cmd_mc(g, f1, f2, local);
    if (*member) return cmd_member(g, f1, word);
    if (*translate) return cmd_translate(g, f1);
    if (*neg) return cmd_negate(g, f1);
    if (*en) return cmd_enumerate(g, f1);
    if (*rnd) return cmd_random(g, size, deg);
    return cmd_batch(g, f1);
  });
  if (g.json)
    std::cout << o.record.dump() << "\n";
  else
    (o.code == kError ? std::cerr : std::cout) << o.text;
  return o.code;
}
