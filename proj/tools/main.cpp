// bandlab command line front end: word-problem verdicts, disk-diagram
// search, band reports, Cayley-ball exports, and pushout experiments.
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bandlab/bands.hpp"
#include "bandlab/cayley.hpp"
#include "bandlab/diagram.hpp"
#include "bandlab/extended.hpp"
#include "bandlab/fill.hpp"
#include "bandlab/lamp.hpp"
#include "bandlab/semistability.hpp"
#include "bandlab/trace.hpp"
#include "bandlab/word.hpp"

namespace {

char flipCase(char c) {
  if (std::islower(static_cast<unsigned char>(c))) {
    return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Expand `<letter>^<int>` runs so that words themselves never carry numbers:
// "aX^2ax^2" -> "aXXaxx", "x^-3" -> "XXX", "a^0" -> "".
std::string expandPowers(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '^') {
      throw std::invalid_argument("'^' needs a single letter to its left");
    }
    if (i + 1 < text.size() && text[i + 1] == '^') {
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("'^' needs a single letter to its left");
      }
      std::size_t j = i + 2;
      bool negative = false;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) {
        negative = text[j] == '-';
        ++j;
      }
      std::size_t end = j;
      while (end < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      if (end == j) {
        throw std::invalid_argument("'^' must be followed by an integer");
      }
      int exponent = std::stoi(text.substr(j, end - j));
      char letter = negative ? flipCase(c) : c;
      out.append(static_cast<std::size_t>(exponent), letter);
      i = end;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

bandlab::Word parseWordArg(const std::string& raw) {
  return bandlab::Word::parse(expandPowers(raw));
}

// "-" routes to stdout, anything else is a file path.
void writeOutput(const std::string& target, const std::string& text) {
  if (target == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(target);
  if (!out) throw std::runtime_error("cannot open '" + target + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + target + "' failed");
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmdWp(const std::string& wordArg, const std::string& target) {
  bandlab::Word w = parseWordArg(wordArg);
  bool trivial = false;
  std::string canonical;
  if (target == "L") {
    if (!w.usesOnlyLampAlphabet()) {
      throw std::invalid_argument("target L takes words over a, x, X only");
    }
    bandlab::LampElement p = bandlab::evalWord(w);
    trivial = p == bandlab::LampElement::identity();
    canonical = bandlab::toText(p);
  } else if (target.rfind("G1:", 0) == 0) {
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(target.substr(3), &used);
      if (used != target.size() - 3) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level in '" + target + "'");
    }
    if (!w.usesOnlyLampAlphabet()) {
      throw std::invalid_argument("target G1:n takes words over a, x, X only");
    }
    bandlab::G1Element p = bandlab::g1FromWord(w, level);
    trivial = bandlab::g1IsIdentity(p);
    canonical = bandlab::toJsonText(p);
  } else if (target == "E") {
    bandlab::EElement p = bandlab::eFromWord(w);
    trivial = p.isIdentity();
    canonical = bandlab::toJsonText(p);
  } else {
    throw std::invalid_argument("--in must be L, G1:<n>, or E");
  }
  std::cout << (trivial ? "trivial" : "nontrivial") << ' ' << canonical << '\n';
  return trivial ? 0 : 1;
}

int cmdFill(const std::string& wordArg, int level, int maxArea,
            const std::string& jsonOut, const std::string& dotOut) {
  bandlab::Word w = parseWordArg(wordArg);
  if (!w.usesOnlyLampAlphabet()) {
    throw std::invalid_argument("fill takes words over a, x, X only");
  }
  bandlab::FillResult r = bandlab::fill(w, level, maxArea);
  if (r.status == bandlab::FillStatus::Found) {
    std::cout << "found area=" << r.area << " states=" << r.statesExplored
              << '\n';
    if (!jsonOut.empty()) writeOutput(jsonOut, bandlab::toJsonText(*r.diagram));
    if (!dotOut.empty()) writeOutput(dotOut, bandlab::toDotText(*r.diagram));
    return 0;
  }
  std::cout << "not-found-within-bound reason=\"" << r.reason
            << "\" states=" << r.statesExplored << '\n';
  return 1;
}

int cmdBands(const std::string& diagramPath, const std::string& jsonOut) {
  bandlab::Diagram d = bandlab::diagramFromJsonText(readFile(diagramPath));
  std::vector<std::string> violations = bandlab::validate(d);
  if (!violations.empty()) {
    std::cerr << "invalid diagram:\n";
    for (const std::string& v : violations) std::cerr << "  - " << v << '\n';
    return 2;
  }
  writeOutput(jsonOut.empty() ? "-" : jsonOut, bandlab::bandReportJson(d));
  return 0;
}

int cmdBall(int radius, int level, const std::string& dotOut,
            const std::string& jsonOut) {
  bandlab::Complex2 ball = bandlab::buildBall(radius, level);
  if (!dotOut.empty()) writeOutput(dotOut, bandlab::toDotText(ball));
  if (!jsonOut.empty()) writeOutput(jsonOut, bandlab::toJsonText(ball));
  if (dotOut.empty() && jsonOut.empty()) {
    std::cout << "radius=" << radius << " level=" << level
              << " vertices=" << ball.vertices().size()
              << " edges=" << ball.edges().size()
              << " cells=" << ball.cells().size() << '\n';
  }
  return 0;
}

int cmdExperiment(const bandlab::ExperimentConfig& cfg, bool noBall,
                  int workers, bool materialize, const std::string& jsonOut) {
  bandlab::ExperimentReport report =
      bandlab::runExperiment(cfg, workers, materialize);
  long betas = report.candidates;
  long fillable = report.fillable;
  if (noBall) {
    // Lifting the ball constraint admits the one loop it is there to
    // exclude: the backtracking control, which is always fillable.
    betas += 1;
    fillable +=
        report.control.status == bandlab::PushoutStatus::Fillable ? 1 : 0;
  }
  std::cout << "n=" << cfg.level << " m=" << cfg.baseOffset
            << " k=" << cfg.push << " betas=" << betas
            << " fillable=" << fillable << '\n';
  if (!jsonOut.empty()) writeOutput(jsonOut, bandlab::reportJsonText(report));
  return 0;
}

int cmdExt(const std::string& wordArg, const std::string& jsonOut) {
  bandlab::Word w = parseWordArg(wordArg);
  bandlab::EElement p = bandlab::eFromWord(w);
  auto [m, q] = bandlab::abelianImage(p);
  std::string canonical = bandlab::toJsonText(p);
  std::cout << canonical << '\n' << "abelian m=" << m << " q=" << q << '\n';
  if (!jsonOut.empty()) writeOutput(jsonOut, canonical);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word problems, disk diagrams, bands, balls and experiments "
               "for the lamplighter family"};
  app.require_subcommand(1);

  std::string word;
  std::string target = "L";
  std::string diagramPath;
  std::string jsonOut;
  std::string dotOut;
  int level = 1;
  int radius = 1;
  int maxArea = 16;
  int base = 0;
  int push = 0;
  int betaLen = 0;
  int ballRadius = 0;
  bool noBall = false;
  int workers = 1;
  bool materialize = false;

  CLI::App* wp = app.add_subcommand("wp", "decide whether a word is trivial");
  wp->add_option("--word", word, "word over the command's alphabet")
      ->required();
  wp->add_option("--in", target, "L, G1:<n>, or E");

  CLI::App* fillCmd =
      app.add_subcommand("fill", "search for a disk diagram over a boundary");
  fillCmd->add_option("--word", word, "boundary word over a, x, X")
      ->required();
  fillCmd->add_option("--level", level, "relator family level n >= 1");
  fillCmd->add_option("--max-area", maxArea, "cell budget for the search");
  fillCmd->add_option("--json", jsonOut, "write the diagram as JSON ('-' = stdout)");
  fillCmd->add_option("--dot", dotOut, "write the diagram as DOT ('-' = stdout)");

  CLI::App* bands =
      app.add_subcommand("bands", "report the a-bands of a diagram");
  bands->add_option("--diagram", diagramPath, "diagram JSON file")->required();
  bands->add_option("--json", jsonOut, "write the report here instead of stdout");

  CLI::App* ballCmd =
      app.add_subcommand("ball", "export a ball of the presentation complex");
  ballCmd->add_option("--radius", radius, "ball radius");
  ballCmd->add_option("--level", level, "relator family level n >= 1");
  ballCmd->add_option("--dot", dotOut, "write DOT here ('-' = stdout)");
  ballCmd->add_option("--json", jsonOut, "write JSON here ('-' = stdout)");

  CLI::App* experiment = app.add_subcommand(
      "experiment", "push a far loop outward over all admissible detours");
  experiment->add_option("--level", level, "relator family level n >= 1")
      ->required();
  experiment->add_option("--base", base, "base offset m of the loop")
      ->required();
  experiment->add_option("--push", push, "push distance k")->required();
  experiment->add_option("--beta-len", betaLen, "detour length cap")
      ->required();
  experiment->add_option("--ball", ballRadius,
                         "detours must stay outside this ball");
  experiment->add_flag("--no-ball", noBall,
                       "admit the backtracking control into the census");
  experiment->add_option("--max-area", maxArea,
                         "cell budget when materializing diagrams");
  experiment->add_option("--workers", workers, "worker pool size");
  experiment->add_flag("--materialize-diagrams", materialize,
                       "search for an explicit diagram per fillable verdict");
  experiment->add_option("--json", jsonOut, "write the full report here");

  CLI::App* ext = app.add_subcommand(
      "ext", "canonical form in the stable-letter extension");
  ext->add_option("--word", word, "word over a, x, X, t, T")->required();
  ext->add_option("--json", jsonOut, "write the canonical form here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (wp->parsed()) return cmdWp(word, target);
    if (fillCmd->parsed()) return cmdFill(word, level, maxArea, jsonOut, dotOut);
    if (bands->parsed()) return cmdBands(diagramPath, jsonOut);
    if (ballCmd->parsed()) return cmdBall(radius, level, dotOut, jsonOut);
    if (experiment->parsed()) {
      bandlab::ExperimentConfig cfg;
      cfg.level = level;
      cfg.baseOffset = base;
      cfg.push = push;
      cfg.betaLenMax = betaLen;
      cfg.ballRadius = ballRadius;
      cfg.areaBound = maxArea;
      return cmdExperiment(cfg, noBall, workers, materialize, jsonOut);
    }
    if (ext->parsed()) return cmdExt(word, jsonOut);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
