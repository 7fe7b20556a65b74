#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cvq/affine.hpp"
#include "cvq/classical.hpp"
#include "cvq/explorer.hpp"
#include "cvq/feed_io.hpp"
#include "cvq/linop.hpp"
#include "cvq/qdilog.hpp"
#include "cvq/qseries.hpp"

using json = nlohmann::json;
using namespace cvq;

namespace {

std::string with_newline(std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output path: " + out_path);
  os << text;
  std::cout << "report written to " << out_path << "\n";
}

std::complex<double> parse_complex(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json match_json(const SeriesMatch& m) {
  return {{"ok", m.ok}, {"window", m.window}, {"compared", m.compared},
          {"mismatched", m.mismatched}};
}

double scaled_residual(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::string render_seed_text(const Seed& s) {
  std::ostringstream os;
  os << "kind: " << seed_kind_name(s.kind) << "\n";
  os << "n: " << s.feed.n << "\nd:";
  for (auto v : s.feed.d) os << " " << v;
  os << "\neps:\n";
  for (int i = 0; i < s.feed.n; ++i) {
    os << " ";
    for (int j = 0; j < s.feed.n; ++j) os << " " << s.feed.at(i, j);
    os << "\n";
  }
  os << "labels:";
  for (const auto& l : s.labels) os << " " << l;
  os << "\n";
  return os.str();
}

Seed apply_word_seed(Seed s, const Word& w) {
  for (const auto& st : w) {
    if (st.kind == WordStep::Mutate)
      s.feed = mutate_feed(s.feed, st.k);
    else
      s = permute_seed(s, st.sigma);
  }
  return s;
}

int cmd_mutate(const std::string& feed_spec, const std::string& word_text,
               const std::string& format, const std::string& out_path) {
  Seed s = load_seed(feed_spec);
  Word w = parse_word(word_text, s.feed.n);
  Seed result = apply_word_seed(s, w);
  bool restored = result.feed == s.feed;
  if (format == "json") {
    json j{{"word", word_to_string(w)},
           {"seed", json::parse(seed_to_json(result))},
           {"returns_input_feed", restored}};
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "word: " << (w.empty() ? "(empty)" : word_to_string(w)) << "\n"
       << render_seed_text(result)
       << "returns input feed: " << (restored ? "yes" : "no") << "\n";
    emit(out_path, os.str());
  }
  return 0;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

PhaseRelation relation_from_name(const std::string& name) {
  for (PhaseRelation r : {PhaseRelation::A1, PhaseRelation::A1xA1, PhaseRelation::A2,
                          PhaseRelation::B2, PhaseRelation::G2})
    if (lower(relation_name(r)) == lower(name)) return r;
  throw CLI::ValidationError("--relation", "unknown relation: " + name);
}

int cmd_phase_check(const std::string& relation, const std::string& feed_spec, int i1, int j1,
                    bool negative_control, const std::string& format,
                    const std::string& out_path) {
  struct Row {
    std::string label;
    std::string relation;
    bool applies = false;
    bool identity = false;
    std::string residual;
  };
  std::vector<Row> rows;

  auto run_one = [&](const std::string& label, PhaseRelation rel, const Feed& f, int i, int j) {
    Row row{label, relation_name(rel), true, false, ""};
    ResidualWord word;
    try {
      word = build_residual_word(rel, f, i, j);
    } catch (const std::invalid_argument&) {
      row.applies = false;
      rows.push_back(row);
      return;
    }
    if (negative_control && !word.steps.empty()) word.steps.pop_back();
    AffineElement c = word.composed();
    row.identity = c.is_identity();
    if (!row.identity) row.residual = c.str();
    rows.push_back(row);
  };

  if (feed_spec.empty()) {
    for (const auto& pc : builtin_phase_cases()) {
      if (relation != "all" && relation_from_name(relation) != pc.relation) continue;
      run_one(pc.label, pc.relation, pc.feed, pc.i, pc.j);
    }
    if (rows.empty()) throw CLI::ValidationError("--relation", "no builtin case matches");
  } else {
    Feed f = load_seed(feed_spec).feed;
    int i = i1 - 1, j = j1 - 1;
    if (relation == "all") {
      for (PhaseRelation r : {PhaseRelation::A1, PhaseRelation::A1xA1, PhaseRelation::A2,
                              PhaseRelation::B2, PhaseRelation::G2})
        run_one(feed_spec, r, f, i, j);
    } else {
      // An explicitly requested relation must match the feed's pattern.
      PhaseRelation r = relation_from_name(relation);
      PhaseReport rep = verify_phase(r, f, i, j);
      if (negative_control) {
        run_one(feed_spec, r, f, i, j);
      } else {
        rows.push_back({feed_spec, relation_name(r), true, rep.identity,
                        rep.identity ? "" : rep.composed.str()});
      }
    }
  }

  int checked = 0, passed = 0;
  for (const auto& r : rows)
    if (r.applies) {
      ++checked;
      passed += r.identity ? 1 : 0;
    }
  bool all_ok = checked > 0 && passed == checked;

  if (format == "json") {
    json cases = json::array();
    for (const auto& r : rows)
      cases.push_back({{"label", r.label},
                       {"relation", r.relation},
                       {"applies", r.applies},
                       {"identity", r.identity},
                       {"residual", r.residual}});
    json j{{"negative_control", negative_control}, {"checked", checked},
           {"identity", passed}, {"ok", all_ok}, {"cases", cases}};
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    if (negative_control) os << "negative control: last residual factor dropped\n";
    for (const auto& r : rows) {
      if (!r.applies) {
        os << "[skip] " << r.label << "  " << r.relation << "  pattern does not match\n";
        continue;
      }
      os << (r.identity ? "[ok]   " : "[FAIL] ") << r.label << "  " << r.relation
         << (r.identity ? "  identity" : "  residual " + r.residual) << "\n";
    }
    os << "phase constants: " << passed << "/" << checked << " identity\n";
    emit(out_path, os.str());
  }
  return all_ok ? 0 : 1;
}

int cmd_series_check(const std::string& identity, int order, std::int64_t qcutoff,
                     const std::string& feed_spec, int dir1, const std::string& format,
                     const std::string& out_path) {
  if (identity == "conjugation") {
    Feed f = load_seed(feed_spec).feed;
    ConjugationFormReport rep =
        verify_conjugation_form(f, dir1 - 1, order > 0 ? order : 4, qcutoff > 0 ? qcutoff : 40);
    if (format == "json") {
      json j{{"identity", identity}, {"feed", feed_spec},   {"direction", dir1},
             {"order", rep.order},   {"qcutoff", rep.qcut}, {"window", rep.window},
             {"generator_ok", rep.generator_ok}, {"ok", rep.ok}};
      emit(out_path, j.dump(2) + "\n");
    } else {
      emit(out_path, with_newline(rep.str()));
    }
    return rep.ok ? 0 : 1;
  }

  std::int64_t qc = qcutoff > 0 ? qcutoff : 60;
  SeriesIdentityReport rep;
  if (identity == "pentagon")
    rep = verify_pentagon_series(order > 0 ? order : 6, qc);
  else if (identity == "hexagon")
    rep = verify_hexagon_series(order > 0 ? order : 4, qc);
  else
    rep = verify_octagon_series(order > 0 ? order : 3, qc);
  if (format == "json") {
    json j{{"identity", rep.name}, {"scalar", match_json(rep.scalar)},
           {"plane", match_json(rep.plane)}, {"ok", rep.ok}};
    emit(out_path, j.dump(2) + "\n");
  } else {
    emit(out_path, with_newline(rep.str()));
  }
  return rep.ok ? 0 : 1;
}

int cmd_rep_check(const std::string& feed_spec, int dir1, const std::string& format,
                  const std::string& out_path) {
  Feed f = load_seed(feed_spec).feed;
  std::vector<int> dirs;
  if (dir1 > 0)
    dirs.push_back(dir1 - 1);
  else
    for (int k = 0; k < f.n; ++k) dirs.push_back(k);

  bool all_ok = true;
  json jdirs = json::array();
  std::ostringstream os;
  os << "shift conjugation dichotomy for " << feed_spec << "\n";
  os << "direction | b old/new | x old | x new | verdict\n";
  for (int k : dirs) {
    bool b_old = verify_shift_conjugation_b(f, k, RepFlavor::Old);
    bool b_new = verify_shift_conjugation_b(f, k, RepFlavor::New);
    ShiftConjugationXReport x = verify_shift_conjugation_x(f, k);
    bool row_zero = true;
    for (int j = 0; j < f.n; ++j) row_zero = row_zero && f.at(k, j) == 0;
    // Old must intertwine; New must fail exactly when direction k couples.
    bool ok = b_old && b_new && x.old_ok && x.new_ok == row_zero;
    all_ok = all_ok && ok;
    os << "    " << k + 1 << "     |   " << (b_old ? "ok" : "NO") << "/" << (b_new ? "ok" : "NO")
       << "   |  " << (x.old_ok ? "ok" : "NO") << "   | " << (x.new_ok ? "holds" : "fails")
       << " | " << (ok ? "as predicted" : "UNEXPECTED") << "\n";
    json witnesses = json::array();
    for (int i = 0; i < f.n; ++i) {
      if (x.new_residual_x[static_cast<size_t>(i)].is_zero()) continue;
      os << "      witness x_" << i + 1 << " residual: "
         << x.new_residual_x[static_cast<size_t>(i)].str() << "\n";
      witnesses.push_back({{"generator", i + 1},
                           {"residual", x.new_residual_x[static_cast<size_t>(i)].str()}});
    }
    jdirs.push_back({{"direction", k + 1}, {"b_old", b_old}, {"b_new", b_new},
                     {"x_old", x.old_ok}, {"x_new", x.new_ok}, {"ok", ok},
                     {"witnesses", witnesses}});
  }
  os << (all_ok ? "dichotomy confirmed\n" : "dichotomy violated\n");
  if (format == "json") {
    emit(out_path, json{{"feed", feed_spec}, {"directions", jdirs}, {"ok", all_ok}}.dump(2) + "\n");
  } else {
    emit(out_path, os.str());
  }
  return all_ok ? 0 : 1;
}

int cmd_qdilog_eval(double hbar, double hbar_im, const std::string& z_text,
                    const std::string& format, const std::string& out_path) {
  DilogConfig cfg;
  cfg.hbar = hbar;
  std::complex<double> h{hbar, hbar_im};
  std::complex<double> z = parse_complex(z_text);
  std::complex<double> value;
  double err;
  std::string method;
  if (hbar_im != 0.0) {
    if (std::abs(z.imag()) >= strip_halfwidth(h))
      throw std::invalid_argument("z outside the convergence strip of the complex-h integral");
    value = phi_eval_at(cfg, h, z);
    DilogConfig wide = cfg;
    wide.circle_radius = 2 * cfg.circle_radius;
    err = scaled_residual(value, phi_eval_at(wide, h, z));
    method = "integral";
  } else if (in_strip(cfg, z)) {
    value = phi_eval(cfg, z);
    err = check_radius_independence(cfg, z);
    method = "integral";
  } else {
    value = phi_continue(cfg, z);
    // A-posteriori estimate: the 2 pi i step relation (which the continuation
    // does not use), floored by the integral quality at the anchor's real
    // part since the continuation factors are exact in comparison.
    std::complex<double> qd = std::exp(std::complex<double>(0, M_PI) / h);
    std::complex<double> lhs = phi_continue(cfg, z + std::complex<double>(0, 2 * M_PI));
    err = std::max(scaled_residual(lhs, (1.0 + qd * std::exp(z / h)) * value),
                   check_radius_independence(cfg, {z.real(), 0.0}));
    method = "continued";
  }
  if (format == "json") {
    json j{{"hbar", complex_json(h)}, {"z", complex_json(z)},
           {"value", complex_json(value)}, {"abs", std::abs(value)},
           {"error_estimate", err}, {"method", method}};
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os.precision(15);
    os << "phi(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i) = "
       << value.real() << (value.imag() < 0 ? "" : "+") << value.imag() << "i\n"
       << "|phi| = " << std::abs(value) << "\n"
       << "method: " << method << ", error estimate " << err << "\n";
    emit(out_path, os.str());
  }
  return 0;
}

int cmd_qdilog_check(const std::string& suite, double hbar, double tol,
                     const std::string& format, const std::string& out_path) {
  DilogConfig cfg;
  cfg.hbar = hbar;
  if (tol > 0) cfg.tol = tol;
  std::vector<DilogCheck> checks = run_dilog_suite(cfg);
  if (suite != "all") {
    std::vector<DilogCheck> filtered;
    for (const auto& c : checks)
      if (c.name.find(suite) != std::string::npos) filtered.push_back(c);
    if (filtered.empty()) throw CLI::ValidationError("--suite", "no check matches: " + suite);
    checks = std::move(filtered);
  }
  bool ok = suite_ok(checks);
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"samples", c.samples},
                     {"max_residual", c.max_residual}, {"tol", c.tol}, {"pass", c.pass}});
    emit(out_path, json{{"hbar", hbar}, {"checks", arr}, {"ok", ok}}.dump(2) + "\n");
  } else {
    emit(out_path, render_dilog_table(checks));
  }
  return ok ? 0 : 1;
}

int cmd_explore(const std::string& feed_spec, int depth, int words_len, const std::string& kind,
                int samples, std::uint64_t seed, const std::string& format,
                const std::string& out_path) {
  Feed f = load_seed(feed_spec).feed;
  ExploreResult r = explore(f, depth);
  if (format == "dot") {
    emit(out_path, r.dot());
    return 0;
  }
  SeedKind sk = kind == "a" ? SeedKind::A : kind == "d" ? SeedKind::D : SeedKind::X;
  std::vector<TrivialWordReport> words;
  if (words_len > 0) words = find_trivial_words(f, words_len, sk, samples, seed);
  if (format == "json") {
    json nodes = json::array(), edges = json::array(), jwords = json::array();
    for (const auto& n : r.nodes) nodes.push_back(n.str());
    for (const auto& e : r.edges) edges.push_back({{"from", e.from}, {"k", e.k}, {"to", e.to}});
    for (const auto& w : words)
      jwords.push_back({{"word", word_to_string(w.word)}, {"family", w.family},
                        {"kind", seed_kind_name(w.kind)}, {"pointwise", w.pointwise},
                        {"samples", w.samples}});
    json j{{"feed", feed_spec}, {"max_depth", depth}, {"nodes", nodes}, {"edges", edges},
           {"closed", r.closed}, {"depth_reached", r.depth_reached}};
    if (words_len > 0) {
      j["trivial_words"] = jwords;
      j["seed"] = seed;
    }
    emit(out_path, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "closure of " << feed_spec << " to depth " << depth << ": " << r.str();
    if (words_len > 0) {
      os << "trivial words to length " << words_len << " (seed " << seed << "): "
         << words.size() << "\n";
      for (const auto& w : words) os << "  " << w.str() << "\n";
    }
    emit(out_path, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for quantized cluster mutations"};
  app.require_subcommand(1);
  int rc = 0;

  std::string feed = "a2", word, format = "text", out_path;
  auto add_common = [&](CLI::App* sub, bool with_feed = true) {
    if (with_feed)
      sub->add_option("--feed", feed, "builtin name, JSON file path, or inline JSON");
    sub->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the report to this path");
  };

  auto* mutate = app.add_subcommand("mutate", "apply a mutation/relabeling word to a feed");
  mutate->add_option("--word", word, "word such as \"m1 p(1 2) m1\" (1-based)");
  add_common(mutate);
  mutate->callback([&] { rc = cmd_mutate(feed, word, format, out_path); });

  std::string relation = "all";
  int dir_i = 1, dir_j = 2;
  bool negative_control = false;
  std::string phase_feed;
  auto* phase = app.add_subcommand("phase-check",
                                   "compose residual shift words of the trivial relations");
  phase->add_option("--relation", relation, "A1, A1xA1, A2, B2, G2 or all");
  phase->add_option("--feed", phase_feed, "check this feed instead of the builtin suite");
  phase->add_option("--i", dir_i, "first direction (1-based)");
  phase->add_option("--j", dir_j, "second direction (1-based)");
  phase->add_flag("--negative-control", negative_control,
                  "drop the last residual factor; the verdict must flip");
  add_common(phase, false);
  phase->callback([&] {
    rc = cmd_phase_check(relation, phase_feed, dir_i, dir_j, negative_control, format, out_path);
  });

  std::string identity;
  int order = -1, direction = 1;
  std::int64_t qcutoff = -1;
  auto* series = app.add_subcommand("series-check", "quantum dilogarithm series identities");
  series->add_option("--identity", identity, "pentagon, hexagon, octagon or conjugation")
      ->required()
      ->check(CLI::IsMember({"pentagon", "hexagon", "octagon", "conjugation"}));
  series->add_option("--order", order, "argument-degree truncation (conjugation: ladder order)");
  series->add_option("--qcutoff", qcutoff, "q-exponent comparison window");
  series->add_option("--direction", direction, "mutation direction for conjugation (1-based)");
  add_common(series);
  series->callback([&] {
    rc = cmd_series_check(identity, order, qcutoff, feed, direction, format, out_path);
  });

  int rep_dir = 0;
  auto* rep = app.add_subcommand("rep-check", "shift conjugation dichotomy of the two flavors");
  rep->add_option("--direction", rep_dir, "single direction (1-based); default all");
  add_common(rep);
  rep->callback([&] { rc = cmd_rep_check(feed, rep_dir, format, out_path); });

  auto* qdilog = app.add_subcommand("qdilog", "numerical non-compact quantum dilogarithm");
  qdilog->require_subcommand(1);
  double hbar = DilogConfig{}.hbar, hbar_im = 0.0, tol = -1.0;
  std::string z_text = "0", suite = "all";
  auto* eval = qdilog->add_subcommand("eval", "evaluate phi at a point");
  eval->add_option("--hbar", hbar, "real part of the deformation parameter");
  eval->add_option("--hbar-im", hbar_im, "imaginary part (complex-h integral)");
  eval->add_option("--z", z_text, "evaluation point \"re[,im]\"");
  add_common(eval, false);
  eval->callback([&] { rc = cmd_qdilog_eval(hbar, hbar_im, z_text, format, out_path); });
  auto* check = qdilog->add_subcommand("check", "run the functional-equation suite");
  check->add_option("--suite", suite, "substring filter on check names, or all");
  check->add_option("--hbar", hbar, "deformation parameter");
  check->add_option("--tol", tol, "residual tolerance override");
  add_common(check, false);
  check->callback([&] { rc = cmd_qdilog_check(suite, hbar, tol, format, out_path); });

  int depth = 6, words_len = 0, samples = 20;
  std::uint64_t rng_seed = 7001;
  std::string kind = "x";
  auto* explore_cmd = app.add_subcommand("explore", "mutation closure graph of a feed");
  explore_cmd->add_option("--depth", depth, "breadth-first depth budget");
  explore_cmd->add_option("--words", words_len, "also search trivial words up to this length");
  explore_cmd->add_option("--kind", kind, "variable kind for certification")
      ->check(CLI::IsMember({"a", "x", "d"}));
  explore_cmd->add_option("--samples", samples, "certification sample points (>= 20)");
  explore_cmd->add_option("--seed", rng_seed, "sampling seed, recorded in the report");
  explore_cmd->add_option("--feed", feed, "builtin name, JSON file path, or inline JSON");
  explore_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  explore_cmd->add_option("--out", out_path, "write the report to this path");
  explore_cmd->callback([&] {
    rc = cmd_explore(feed, depth, words_len, kind, samples, rng_seed, format, out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
