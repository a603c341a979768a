// Command-line front end: exact counts, bounds, diagrams, enumeration,
// surveys, rendering, and surgery with machine-readable output.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pants/bounds.hpp"
#include "pants/harness.hpp"
#include "pants/si.hpp"
#include "pants/skeleton.hpp"
#include "pants/surgery.hpp"
#include "pants/svg.hpp"
#include "pants/word.hpp"

using nlohmann::ordered_json;
using namespace pants;

namespace {

CyclicWord read_word(const std::string& s, bool linear) {
  CyclicWord w = CyclicWord::from_linear(s);
  if (linear) {
    std::printf("cyclic reduction: %s\n", w.str().c_str());
  } else if (w.length() != s.size()) {
    throw Error(ErrorCode::ParseError, "word is not cyclically reduced (pass --linear to reduce it)");
  }
  return w;
}

std::string six(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::vector<std::string> strings_of(const std::vector<CyclicWord>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const CyclicWord& w : ws) out.push_back(w.str());
  return out;
}

ordered_json si_json(const SIResult& r) {
  ordered_json j;
  j["word"] = r.word.str();
  j["si"] = r.si;
  j["methods"] = r.methods;
  j["agreed"] = r.agreed;
  j["basmajian_m"] = six(basmajian_m(r.si));
  return j;
}

ordered_json bound_json(const BoundReport& rep) {
  ordered_json j;
  j["L"] = rep.L;
  j["upper"] = rep.upper;
  j["lower"] = rep.lower;
  j["odd_conjecture"] = rep.odd_conjecture ? ordered_json(*rep.odd_conjecture) : ordered_json(nullptr);
  if (rep.rotation) {
    j["rotation"] = {{"t_values", rep.rotation->t_values},
                     {"min_index", rep.rotation->min_index},
                     {"bound", rep.rotation->bound}};
  } else {
    j["rotation"] = nullptr;
  }
  if (rep.odd_case) {
    j["odd_case"] = {{"applies", rep.odd_case->applies}, {"reason", rep.odd_case->reason}};
  } else {
    j["odd_case"] = nullptr;
  }
  j["max_forms"] = strings_of(rep.max_forms);
  j["min_forms"] = strings_of(rep.min_forms);
  return j;
}

ordered_json diagram_json(const CyclicWord& w, const Diagram& d) {
  ordered_json j;
  j["word"] = w.str();
  j["chords"] = d.arc_count();
  j["crossings"] = compute_crossings(d).count();
  RotationBound rb = rotation_bound(w);
  j["t_sequence"] = rb.t_values;
  return j;
}

void emit(const ordered_json& j) { std::printf("%s\n", j.dump().c_str()); }

unsigned job_count(unsigned flag_jobs) {
  if (const char* env = std::getenv("PANTS_SI_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return flag_jobs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact self-intersection numbers of free homotopy classes on the doubly-punctured plane"};
  app.require_subcommand(1);
  bool linear = false;

  std::string word_arg, methods = "auto", out_path, format = "csv", stage = "minimal";
  long length_arg = 0;
  int rotation = 0;
  bool up_to_inverse = false;
  unsigned jobs = 0;

  CLI::App* c_si = app.add_subcommand("si", "exact self-intersection number of a word");
  c_si->add_option("word", word_arg)->required();
  c_si->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");
  c_si->add_option("--methods", methods, "bigon,linked,auto");

  CLI::App* c_bound = app.add_subcommand("bound", "closed-form bound report for a word or a length");
  c_bound->add_option("word", word_arg);
  c_bound->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");
  c_bound->add_option("--length", length_arg);

  CLI::App* c_skel = app.add_subcommand("skeleton", "skeleton diagram summary of a block word");
  c_skel->add_option("word", word_arg)->required();
  c_skel->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");

  CLI::App* c_thick = app.add_subcommand("thicken", "thickened diagram summary of a block word");
  c_thick->add_option("word", word_arg)->required();
  c_thick->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");
  c_thick->add_option("--rotation", rotation);

  CLI::App* c_enum = app.add_subcommand("enumerate", "all reduced cyclic words of a length");
  c_enum->add_option("--length", length_arg)->required();
  c_enum->add_flag("--up-to-inverse", up_to_inverse);

  CLI::App* c_survey = app.add_subcommand("survey", "exhaustive per-length surveys with claim checks");
  long max_length = 0;
  c_survey->add_option("--max-length", max_length)->required();
  c_survey->add_option("--out", out_path);
  c_survey->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  c_survey->add_option("--jobs", jobs, "worker threads (default: available cores)");

  CLI::App* c_render = app.add_subcommand("render", "write an SVG of a word's diagram");
  c_render->add_option("word", word_arg)->required();
  c_render->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");
  c_render->add_option("--out", out_path)->required();
  c_render->add_option("--stage", stage)->check(CLI::IsMember({"skeleton", "thickened", "minimal"}));
  c_render->add_option("--rotation", rotation);

  CLI::App* c_surgery = app.add_subcommand("surgery", "word surgeries with count bookkeeping");
  c_surgery->require_subcommand(1);
  CLI::App* c_pos = c_surgery->add_subcommand("positivize", "invert capital runs until no capitals remain");
  c_pos->add_option("word", word_arg)->required();
  c_pos->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");
  CLI::App* c_split = c_surgery->add_subcommand("split", "split a minimal diagram at each crossing");
  c_split->add_option("word", word_arg)->required();
  c_split->add_flag("--linear", linear, "treat input as linear; report its cyclic reduction first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_si) {
      SIOptions opts;
      if (methods == "bigon" || methods == "bigon,linked" || methods == "linked,bigon")
        opts.with_bigon = true;
      else if (methods == "linked")
        opts.linked_only = true;
      else if (methods != "auto")
        throw Error(ErrorCode::ParseError, "unknown methods '" + methods + "'");
      emit(si_json(si_exact(read_word(word_arg, linear), opts)));
    } else if (*c_bound) {
      if (!word_arg.empty())
        emit(bound_json(bound_report(read_word(word_arg, linear))));
      else if (length_arg > 0)
        emit(bound_json(bound_report_for_length(length_arg)));
      else
        throw Error(ErrorCode::ParseError, "bound needs a word or --length");
    } else if (*c_skel) {
      CyclicWord w = read_word(word_arg, linear);
      emit(diagram_json(w, build_skeleton(w).diagram));
    } else if (*c_thick) {
      CyclicWord w = read_word(word_arg, linear);
      emit(diagram_json(w, thicken(w, rotation)));
    } else if (*c_enum) {
      for (const CyclicWord& w : enumerate_words(length_arg, up_to_inverse))
        std::printf("%s\n", w.str().c_str());
    } else if (*c_survey) {
      std::vector<LengthSurvey> surveys;
      size_t violation_total = 0;
      for (long L = 1; L <= max_length; ++L) {
        surveys.push_back(survey(L, job_count(jobs)));
        violation_total += surveys.back().violations.size();
      }
      std::fputs(surveys_to_csv(surveys).c_str(), stdout);
      if (!out_path.empty()) export_surveys(surveys, format, out_path);
      return violation_total > 0 ? 1 : 0;
    } else if (*c_render) {
      CyclicWord w = read_word(word_arg, linear);
      if (stage == "minimal" && primitive_root(w).second != 1)
        throw Error(ErrorCode::NonPrimitive, "minimal stage needs a primitive word; render its root");
      Diagram d = stage == "skeleton"    ? build_skeleton(w, rotation).diagram
                  : stage == "thickened" ? thicken(w, rotation)
                                         : reduce_to_minimal(starting_diagram(w)).first;
      std::string svg = render_svg(d);
      std::ofstream f(out_path, std::ios::binary);
      if (!f || !(f << svg)) throw Error(ErrorCode::IOFailure, "cannot write " + out_path);
      std::printf("%s: %zu chords, %zu crossings\n", out_path.c_str(), d.arc_count(),
                  compute_crossings(d).count());
    } else if (*c_pos) {
      CyclicWord w = read_word(word_arg, linear);
      SIOptions fast{.linked_only = true};
      auto caps = [](const CyclicWord& x) {
        size_t n = 0;
        for (char c : x.str())
          if (is_upper(c)) ++n;
        return n;
      };
      std::vector<CyclicWord> chain{w};
      if (caps(w) == w.length()) chain.push_back(w.inverse());
      while (caps(chain.back()) > 0) chain.push_back(positivize_step(chain.back()));
      ordered_json steps = ordered_json::array();
      for (const CyclicWord& v : chain)
        steps.push_back({{"word", v.str()}, {"si", si_exact(v, fast).si}});
      ordered_json j;
      j["word"] = w.str();
      j["result"] = chain.back().str();
      j["steps"] = steps;
      emit(j);
    } else if (*c_split) {
      CyclicWord w = read_word(word_arg, linear);
      if (primitive_root(w).second != 1)
        throw Error(ErrorCode::NonPrimitive, "split needs a primitive word; split its root");
      SIOptions fast{.linked_only = true};
      long sw = si_exact(w, fast).si;
      auto [d, count] = reduce_to_minimal(starting_diagram(w));
      CrossingSet cs = compute_crossings(d);
      ordered_json splits = ordered_json::array();
      for (size_t i = 0; i < cs.all.size(); ++i) {
        auto [u, v] = split_at_crossing(d, cs.all[i]);
        long su = si_exact(u, fast).si, sv = si_exact(v, fast).si;
        splits.push_back({{"crossing", i},
                          {"u", u.str()},
                          {"v", v.str()},
                          {"si_u", su},
                          {"si_v", sv},
                          {"slack", sw - su - sv - 1}});
      }
      ordered_json j;
      j["word"] = w.str();
      j["si"] = sw;
      j["splits"] = splits;
      emit(j);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  return 0;
}
