// Command-line front end: encode, decode, classify, concentrate, separate,
// render. Exit codes: 0 success, 1 domain/config/DSL error, 2 usage error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schottky/schottky.hpp"

namespace {

using namespace schottky;

struct GlobalOptions {
  std::string config_path;
  std::string out_path;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> max_len;
  double epsilon = kDefaultEpsilon;
  bool json = false;
  std::string seq;
  unsigned threads = 1;
  bool timings = false;
};

struct CommandOptions {
  double angle = 0;
  bool control = false;
  std::optional<double> v_width;
  std::optional<std::size_t> u_cylinder;
  std::string direction;
  std::size_t crossings = 6;
};

class Timer {
 public:
  void mark(const std::string& name) {
    auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  const Json& laps() const { return laps_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json laps_ = Json::object();
};

std::string format(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out_path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write output file '" + g.out_path + "'");
  out << text;
}

void finish(const GlobalOptions& g, Json& report, const Timer& timer, const std::string& text) {
  if (g.timings) report["timings"] = timer.laps();
  emit(g, g.json ? report.dump(2) + "\n" : text);
}

const std::string& require_seq(const GlobalOptions& g) {
  if (g.seq.empty()) throw InvalidArgument("--seq is required for this command");
  return g.seq;
}

int run_encode(const GlobalOptions& g, const CommandOptions& c, const Group& group, const SchottkyConfig& config) {
  Timer timer;
  std::size_t max_len = g.max_len.value_or(kDefaultMaxLength);
  GroupWord word = encode(group, BoundaryPoint<double>(c.angle), max_len);
  timer.mark("encode");
  Json report = make_report("encode", config);
  report["inputs"] = Json{{"angle", c.angle}, {"max_len", max_len}};
  report["verdicts"] = Json{{"word", word.to_string()}, {"length", word.size()}};
  finish(g, report, timer, word.to_string() + "\n");
  return 0;
}

int run_decode(const GlobalOptions& g, const Group& group, const SchottkyConfig& config) {
  Timer timer;
  FamilySpec spec = parse_family(require_seq(g));
  DecodeOptions options;
  options.epsilon = g.epsilon;
  options.min_depth = g.depth.value_or(0);
  DecodeResult<double> r = decode(group, expand(spec), options);
  timer.mark("decode");
  Json report = make_report("decode", config);
  report["inputs"] = Json{{"seq", render_family(spec)}, {"epsilon", g.epsilon}, {"min_depth", options.min_depth}};
  report["verdicts"] = Json{{"angle", r.point.angle()}, {"depth", r.depth}, {"diameter", r.diameter}};
  finish(g, report, timer,
         "angle " + format(r.point.angle()) + "\ndepth " + std::to_string(r.depth) + "\ndiameter " +
             format(r.diameter) + "\n");
  return 0;
}

int run_classify(const GlobalOptions& g, const Group& group, const SchottkyConfig& config) {
  Timer timer;
  FamilySpec spec = parse_family(require_seq(g));
  ClassifyOptions options;
  options.depth = g.depth.value_or(options.depth);
  options.max_len = g.max_len.value_or(options.max_len);
  options.epsilon = g.epsilon;
  options.threads = g.threads;
  ClassifyResult r = classify_sequence(group, spec, options);
  timer.mark("classify");
  Json report = classify_report(r, options, config);
  std::ostringstream text;
  text << "sequence       " << r.spec << "\n";
  text << "point          angle " << format(r.p.angle()) << "\n";
  text << "controlled     " << to_string(r.controlled);
  if (r.certificate) text << " (block " << r.certificate->block.to_string() << ")";
  if (r.chain.found()) text << " (chain word " << r.chain.word->to_string() << ")";
  text << "\n";
  text << "concentration  " << (r.concentration ? to_string(r.concentration->outcome) : "unknown");
  if (r.concentration && r.concentration->found()) text << " " << r.concentration->word->to_string();
  text << "\n";
  text << "separation     " << (r.separation ? to_string(r.separation->outcome) : "unknown");
  if (r.separation && r.separation->found())
    text << " " << r.separation->word->to_string() << " " << to_string(*r.separation->direction);
  text << "\n";
  text << "conical        " << (r.conical ? to_string(r.conical->evidence) : "unknown");
  if (r.conical) text << " (last-quartile minimum " << format(r.conical->last_quartile_minimum) << ")";
  text << "\n";
  text << "hierarchy      " << (r.hierarchy.consistent() ? "consistent" : "VIOLATED") << "\n";
  finish(g, report, timer, text.str());
  return 0;
}

struct SearchSetup {
  FamilySpec spec;
  SymbolicSequence s;
  BoundaryPoint<double> p;
  Bridge bridge;
  Arc<double> v;
  std::size_t from;
  std::size_t to;
};

SearchSetup setup_search(const GlobalOptions& g, const CommandOptions& c, const Group& group) {
  FamilySpec spec = parse_family(require_seq(g));
  SymbolicSequence s = expand(spec);
  BoundaryPoint<double> p = decode(group, s, 1e-13).point;
  std::size_t limit = g.depth.value_or(200);
  auto j = detail::next_recurrence_of_first(s, limit);
  if (!j) throw InvalidArgument("the first symbol does not recur within depth " + std::to_string(limit));
  Bridge br = bridge(group, s, 1, *j);
  if (c.u_cylinder) br.u = cylinder_arc(group, s, *c.u_cylinder);
  Arc<double> v = c.v_width ? Arc<double>::centered(p, *c.v_width) : cylinder_arc(group, s, *j);
  return {spec, s, p, br, v, 1, *j};
}

int run_concentrate(const GlobalOptions& g, const CommandOptions& c, const Group& group,
                    const SchottkyConfig& config) {
  Timer timer;
  SearchSetup setup = setup_search(g, c, group);
  std::size_t max_len = g.max_len.value_or(12);
  ConcentrationTask task(setup.p, setup.bridge.u, setup.v, c.control, max_len);
  WitnessReport r = search_concentration(group, task, SearchOptions{g.threads});
  timer.mark("search");
  Json report = make_report("concentrate", config);
  report["inputs"] = Json{{"seq", render_family(setup.spec)}, {"p", to_json(setup.p)}, {"U", to_json(task.u)},
                          {"V", to_json(task.v)},           {"control", c.control}, {"max_len", max_len}};
  report["verdicts"] = Json{{"concentration", to_string(r.outcome)}};
  add_search(report, "concentration", r);
  std::string text = std::string(to_string(r.outcome)) +
                     (r.found() ? " " + r.word->to_string() : " (max_len " + std::to_string(max_len) + ")") +
                     "\nwords examined " + std::to_string(r.words_examined) + "\n";
  finish(g, report, timer, text);
  return 0;
}

int run_separate(const GlobalOptions& g, const CommandOptions& c, const Group& group, const SchottkyConfig& config) {
  Timer timer;
  SearchSetup setup = setup_search(g, c, group);
  std::size_t max_len = g.max_len.value_or(12);
  std::optional<CrossingDirection> required;
  if (c.direction == "left-to-right") required = CrossingDirection::left_to_right;
  if (c.direction == "right-to-left") required = CrossingDirection::right_to_left;
  WitnessReport r =
      search_separation(group, setup.p, setup.bridge.lambda, setup.v, max_len, required, SearchOptions{g.threads});
  timer.mark("search");
  Json report = make_report("separate", config);
  report["inputs"] = Json{{"seq", render_family(setup.spec)},
                          {"p", to_json(setup.p)},
                          {"lambda", to_json(setup.bridge.lambda)},
                          {"V", to_json(setup.v)},
                          {"direction", c.direction.empty() ? Json(nullptr) : Json(c.direction)},
                          {"max_len", max_len}};
  report["verdicts"] = Json{{"separation", to_string(r.outcome)},
                            {"direction", r.direction ? Json(to_string(*r.direction)) : Json(nullptr)}};
  add_search(report, "separation", r);
  std::string text = std::string(to_string(r.outcome)) +
                     (r.found() ? " " + r.word->to_string() + " " + to_string(*r.direction)
                                : " (max_len " + std::to_string(max_len) + ")") +
                     "\nwords examined " + std::to_string(r.words_examined) + "\n";
  finish(g, report, timer, text);
  return 0;
}

int run_render(const GlobalOptions& g, const CommandOptions& c, const Group& group, const SchottkyConfig& config) {
  Timer timer;
  std::size_t depth = g.depth.value_or(3);
  RenderScene scene = build_scene(group, depth);
  if (!g.seq.empty()) add_sequence_overlay(scene, group, parse_sequence(g.seq), c.crossings);
  std::string svg = render_scene(scene);
  timer.mark("render");
  if (!g.json) {
    emit(g, svg);
    return 0;
  }
  // With --json the SVG still goes to --out and the report to stdout.
  if (g.out_path.empty()) throw InvalidArgument("render --json needs --out for the SVG");
  emit(g, svg);
  Json report = make_report("render", config);
  report["inputs"] = Json{{"depth", depth}, {"seq", g.seq.empty() ? Json(nullptr) : Json(g.seq)}};
  report["verdicts"] = Json{{"translate_circles", translate_circle_count(depth)}, {"svg_bytes", svg.size()}};
  if (g.timings) report["timings"] = timer.laps();
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schottky group limit point coding and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  CommandOptions c;
  app.add_option("--config", g.config_path, "JSON config {\"radius\": r}");
  app.add_option("--out", g.out_path, "write the report or SVG here instead of stdout");
  app.add_option("--depth", g.depth, "sequence depth (decode: minimum symbols; render: word length)");
  app.add_option("--max-len", g.max_len, "word length bound for encode and the searches");
  app.add_option("--epsilon", g.epsilon, "decode diameter target")->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "emit the JSON report");
  app.add_option("--seq", g.seq, "sequence in the family language, e.g. \"thm43(k)\"");
  app.add_option("--threads", g.threads, "search worker threads")->check(CLI::Range(1u, 64u));
  app.add_flag("--timings", g.timings, "record wall-clock timings in the report");

  auto* encode_cmd = app.add_subcommand("encode", "crossing symbols of a boundary point");
  encode_cmd->add_option("--angle", c.angle, "boundary point angle in radians")->required();
  auto* decode_cmd = app.add_subcommand("decode", "limit point of a sequence");
  auto* classify_cmd = app.add_subcommand("classify", "finite-depth classification of a sequence's limit point");
  auto* concentrate_cmd = app.add_subcommand("concentrate", "search for a concentration witness");
  concentrate_cmd->add_flag("--control", c.control, "also require p in image(V)");
  concentrate_cmd->add_option("--v-width", c.v_width, "V = arc of this half-width around p")
      ->check(CLI::PositiveNumber);
  concentrate_cmd->add_option("--u-cylinder", c.u_cylinder, "U = cylinder arc U_n instead of the bridge arc")
      ->check(CLI::PositiveNumber);
  auto* separate_cmd = app.add_subcommand("separate", "search for a geodesic separation witness");
  separate_cmd->add_option("--v-width", c.v_width, "V = arc of this half-width around p")
      ->check(CLI::PositiveNumber);
  separate_cmd->add_option("--direction", c.direction, "required crossing direction")
      ->check(CLI::IsMember({"left-to-right", "right-to-left"}));
  auto* render_cmd = app.add_subcommand("render", "SVG of the tiling");
  render_cmd->add_option("--crossings", c.crossings, "crossed translates drawn for --seq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    SchottkyConfig config = g.config_path.empty() ? SchottkyConfig{} : load_config(g.config_path);
    Group group = build_group(config);
    if (encode_cmd->parsed()) return run_encode(g, c, group, config);
    if (decode_cmd->parsed()) return run_decode(g, group, config);
    if (classify_cmd->parsed()) return run_classify(g, group, config);
    if (concentrate_cmd->parsed()) return run_concentrate(g, c, group, config);
    if (separate_cmd->parsed()) return run_separate(g, c, group, config);
    if (render_cmd->parsed()) return run_render(g, c, group, config);
  } catch (const schottky::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
