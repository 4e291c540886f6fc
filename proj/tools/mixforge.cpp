#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixforge/chain_complex.hpp"
#include "mixforge/geometry.hpp"
#include "mixforge/grammar.hpp"
#include "mixforge/splitter.hpp"
#include "mixforge/svg.hpp"
#include "mixforge/words.hpp"

namespace {

using nlohmann::json;
using namespace mixforge;

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct RunConfig {
  int n = 2;
  int max_len = 6;
  std::uint64_t cap = kDefaultEnumerationCap;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string mode = "general";
  std::string out;
  std::string witness_path;
  std::string annotations_path;
  std::string dump_path;
  bool links = false;
  std::string word, w2, w3;
};

std::uint64_t effective_cap(std::uint64_t flag_cap, bool flag_given) {
  if (flag_given) return flag_cap;
  if (const char* env = std::getenv("MIXFORGE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return flag_cap;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

template <typename Fn>
void parallel_over(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) fn(i);
    });
  for (auto& th : pool) th.join();
}

void write_artifact(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump() << "\n";
}

std::vector<std::int64_t> displacement_components(const Displacement& d, int n) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < n; ++i) v.push_back(d.c[i]);
  return v;
}

int cmd_member(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word, cfg.n);
  const Displacement d = displacement(w);
  json j;
  j["command"] = "member";
  j["n"] = cfg.n;
  j["word"] = cfg.word;
  j["displacement"] = displacement_components(d, cfg.n);
  j["member"] = d.is_zero();
  emit(j);
  std::cerr << (d.is_zero() ? "member of O_" : "not in O_") << cfg.n << "\n";
  return d.is_zero() ? 0 : kExitNegative;
}

int cmd_derive(const RunConfig& cfg) {
  if (cfg.n == 2) {
    const Word w1 = parse_word(cfg.word, 2), w2 = parse_word(cfg.w2, 2);
    DerivationTree tree;
    try {
      tree = derive(w1, w2);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Incompleteness) throw;
      const json j{{"reason", e.what()}, {"w1", cfg.word}, {"w2", cfg.w2}};
      const std::string path =
          cfg.out.empty() ? "mixforge_counterexample.json" : cfg.out;
      write_artifact(path, j);
      emit(j);
      std::cerr << "counterexample written to " << path << "\n";
      return kExitViolation;
    }
    std::cout << tree_to_json(tree) << "\n";
    std::cerr << "derived, " << count_pair_insert_nodes(tree)
              << " pair-insert nodes\n";
    return 0;
  }
  const Word w1 = parse_word(cfg.word, 3), w2 = parse_word(cfg.w2, 3),
             w3 = parse_word(cfg.w3, 3);
  const auto result = derive3(w1, w2, w3);
  if (const auto* tree = std::get_if<DerivationTree>(&result)) {
    std::cout << tree_to_json(*tree) << "\n";
    std::cerr << "derived, " << count_pair_insert_nodes(*tree)
              << " pair-insert nodes\n";
    return 0;
  }
  const auto& ce = std::get<Counterexample3>(result);
  const std::string path =
      cfg.out.empty() ? "mixforge_counterexample.json" : cfg.out;
  write_artifact(path, json::parse(counterexample_to_json(ce)));
  std::cout << counterexample_to_json(ce) << "\n";
  std::cerr << "counterexample written to " << path << "\n";
  return kExitViolation;
}

int cmd_sweep(const RunConfig& cfg) {
  const auto words = enumerate_on_up_to(cfg.max_len, cfg.n, cfg.cap);
  struct Outcome {
    bool failed = false;
    bool witness = false;
    bool strict_witness = false;
    int derivations = 0;
    json detail;
  };
  std::vector<Outcome> outcomes(words.size());

  if (cfg.n == 2) {
    parallel_over(words.size(), cfg.workers, [&](std::size_t i) {
      const Word& w = words[i];
      Outcome& o = outcomes[i];
      for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        Word w1, w2;
        w1.n = w2.n = 2;
        w1.letters.assign(w.letters.begin(), w.letters.begin() + cut);
        w2.letters.assign(w.letters.begin() + cut, w.letters.end());
        try {
          const DerivationTree tree = derive(w1, w2);
          if (count_pair_insert_nodes(tree) !=
              static_cast<int>(w.size()) / 2)
            throw Error(ErrorCode::Incompleteness, "pair-insert count");
          ++o.derivations;
        } catch (const std::exception& e) {
          o.failed = true;
          o.detail = {{"w1", format_word(w1)},
                      {"w2", format_word(w2)},
                      {"reason", e.what()}};
        }
      }
    });
  } else if (cfg.mode == "alternating") {
    parallel_over(words.size(), cfg.workers, [&](std::size_t i) {
      const Word& w = words[i];
      Outcome& o = outcomes[i];
      if (w.size() < 4) return;  // base cases carry no decomposition step
      const Word empty = parse_word("", 3);
      const auto witness = find_alternating_split3(w, empty, empty);
      o.witness = witness.has_value();
      if (!o.witness) {
        o.failed = true;
        o.detail = {{"word", format_word(w)}, {"reason", "no alternating witness"}};
        return;
      }
      bool strict = true;
      const auto& c = witness->cuts;
      const int m = static_cast<int>(w.size());
      const int bounds[7] = {0, c[0], c[1], c[2], c[3], c[4], m};
      for (int k = 0; k < 6; ++k)
        if (bounds[k] == bounds[k + 1]) strict = false;
      if (strict) {
        o.strict_witness = true;
      } else {
        // a canonical witness with empty pieces does not rule out a strict one
        for (int c1 = 1; c1 < m && !o.strict_witness; ++c1)
          for (int c2 = c1 + 1; c2 < m && !o.strict_witness; ++c2)
            for (int c3 = c2 + 1; c3 < m && !o.strict_witness; ++c3)
              for (int c4 = c3 + 1; c4 < m && !o.strict_witness; ++c4)
                for (int c5 = c4 + 1; c5 < m && !o.strict_witness; ++c5) {
                  Displacement dx;
                  auto piece = [&](int b, int e) {
                    Word part;
                    part.n = 3;
                    part.letters.assign(w.letters.begin() + b,
                                        w.letters.begin() + e);
                    return displacement(part);
                  };
                  dx = piece(0, c1) + piece(c2, c3) + piece(c4, c5);
                  if (dx.is_zero()) o.strict_witness = true;
                }
      }
    });
  } else {
    parallel_over(words.size(), cfg.workers, [&](std::size_t i) {
      const Word& w = words[i];
      Outcome& o = outcomes[i];
      const Word empty = parse_word("", 3);
      const auto result = derive3(w, empty, empty);
      if (const auto* tree = std::get_if<DerivationTree>(&result)) {
        if (count_pair_insert_nodes(*tree) == static_cast<int>(w.size()) / 2) {
          ++o.derivations;
          return;
        }
        o.failed = true;
        o.detail = {{"word", format_word(w)}, {"reason", "pair-insert count"}};
        return;
      }
      o.failed = true;
      o.detail = json::parse(counterexample_to_json(std::get<Counterexample3>(result)));
    });
  }

  std::map<int, json> per_length;
  json failures = json::array();
  std::size_t total_derivations = 0, total_witnesses = 0, total_strict = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const int len = static_cast<int>(words[i].size());
    json& bucket = per_length[len];
    bucket["length"] = len;
    bucket["words"] = bucket.value("words", 0) + 1;
    if (cfg.n == 2 || cfg.mode == "general") {
      bucket["derivations"] =
          bucket.value("derivations", 0) + outcomes[i].derivations;
      total_derivations += outcomes[i].derivations;
    } else {
      bucket["witnesses"] = bucket.value("witnesses", 0) + (outcomes[i].witness ? 1 : 0);
      bucket["strict_witnesses"] =
          bucket.value("strict_witnesses", 0) + (outcomes[i].strict_witness ? 1 : 0);
      total_witnesses += outcomes[i].witness ? 1 : 0;
      total_strict += outcomes[i].strict_witness ? 1 : 0;
    }
    if (outcomes[i].failed) failures.push_back(outcomes[i].detail);
  }
  for (const auto& [len, bucket] : per_length) {
    json line = bucket;
    line["command"] = "sweep";
    line["mode"] = cfg.n == 2 ? "general" : cfg.mode;
    emit(line);
  }
  json summary;
  summary["command"] = "sweep";
  summary["mode"] = cfg.n == 2 ? "general" : cfg.mode;
  summary["n"] = cfg.n;
  summary["max_len"] = cfg.max_len;
  summary["seed"] = cfg.seed;
  summary["total_words"] = words.size();
  if (cfg.n == 2 || cfg.mode == "general")
    summary["total_derivations"] = total_derivations;
  else {
    summary["total_witnesses"] = total_witnesses;
    summary["total_strict_witnesses"] = total_strict;
  }
  summary["failures"] = failures.size();
  emit(summary);
  std::cerr << "sweep: " << words.size() << " words, " << failures.size()
            << " failures\n";
  if (!failures.empty()) {
    const std::string path =
        cfg.out.empty() ? "mixforge_counterexamples.json" : cfg.out;
    write_artifact(path, failures);
    std::cerr << "counterexamples written to " << path << "\n";
    return kExitViolation;
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  const Grammar g = cfg.n == 2 ? grammar_o2() : grammar_o3();
  const auto closure = enumerate_derivable(g, cfg.max_len);
  std::set<std::string> closure_words;
  bool sound = true;
  for (const auto& tuple : closure) {
    std::string word;
    for (const auto& comp : tuple) word += comp;
    closure_words.insert(word);
    if (!in_on(parse_word(word, cfg.n))) sound = false;
  }
  std::set<std::string> enumerated;
  for (const Word& w : enumerate_on_up_to(cfg.max_len, cfg.n, cfg.cap))
    enumerated.insert(format_word(w));

  bool equal = closure_words == enumerated;
  std::map<int, std::pair<int, int>> sizes;
  for (const auto& w : closure_words) sizes[static_cast<int>(w.size())].first++;
  for (const auto& w : enumerated) sizes[static_cast<int>(w.size())].second++;
  for (const auto& [len, counts] : sizes) {
    json line;
    line["command"] = "enumerate";
    line["length"] = len;
    line["closure"] = counts.first;
    line["enumerated"] = counts.second;
    line["equal"] = counts.first == counts.second;
    emit(line);
  }
  json summary;
  summary["command"] = "enumerate";
  summary["n"] = cfg.n;
  summary["max_len"] = cfg.max_len;
  summary["closure_size"] = closure_words.size();
  summary["enumerated_size"] = enumerated.size();
  summary["closure_subset_of_on"] = sound;
  summary["equal"] = equal;
  if (!equal) {
    json samples = json::array();
    int emitted = 0;
    for (const auto& w : closure_words)
      if (!enumerated.count(w) && emitted < 5) {
        samples.push_back(json{{"only_in", "closure"}, {"word", w}});
        ++emitted;
      }
    for (const auto& w : enumerated)
      if (!closure_words.count(w) && emitted < 10) {
        samples.push_back(json{{"only_in", "enumeration"}, {"word", w}});
        ++emitted;
      }
    summary["difference_samples"] = samples;
  }
  emit(summary);
  std::cerr << "enumerate: closure " << closure_words.size() << ", O_" << cfg.n
            << " " << enumerated.size() << (equal ? ", equal" : ", UNEQUAL")
            << "\n";
  if (!sound) return kExitViolation;  // closure words outside O_n
  if (cfg.n == 2 && !equal) return kExitViolation;  // so is O2 equality
  return 0;
}

int cmd_complex(const RunConfig& cfg) {
  const CellComplexData c = build_complex();
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass) {
    json j;
    j["check"] = name;
    j["command"] = "complex";
    j["pass"] = pass;
    emit(j);
    std::cerr << (pass ? "PASS " : "FAIL ") << name << "\n";
    if (!pass) all_pass = false;
  };

  report("dd_zero", verify_dd_zero(c));
  auto two_chain = [&](std::initializer_list<std::pair<int, int>> entries) {
    Chain chain(12, 0);
    for (const auto& [i, v] : entries) chain[i] = v;
    return chain;
  };
  report("cycle_E_minus_F", is_cycle(c, two_chain({{4, 1}, {5, -1}})));
  report("cycle_G_minus_H", is_cycle(c, two_chain({{6, 1}, {7, -1}})));
  report("cycle_I_minus_J", is_cycle(c, two_chain({{8, 1}, {9, -1}})));
  report("cycle_K_minus_L", is_cycle(c, two_chain({{10, 1}, {11, -1}})));
  report("cycle_A_B_C_D",
         is_cycle(c, two_chain({{0, 1}, {1, 1}, {2, 1}, {3, 1}})));
  {
    Chain ab(8, 0);
    ab[0] = 1;
    ab[1] = 1;
    const auto cert = is_boundary(c, ab);
    Chain expected(12, 0);
    expected[4] = 1;  // E
    report("alpha_beta_bounds_E", cert.bounds && cert.certificate == expected);
  }
  const LinkGraph l1 = link_graph(c, 0);
  const LinkGraph l4 = link_graph(c, 3);
  report("link_p1_4v_8e", l1.vertices.size() == 4 && l1.edges.size() == 8);
  report("link_p4_4v_8e", l4.vertices.size() == 4 && l4.edges.size() == 8);
  {
    std::set<std::string> v1(l1.vertices.begin(), l1.vertices.end());
    bool disjoint = true;
    for (const auto& v : l4.vertices)
      if (v1.count(v)) disjoint = false;
    report("links_disjoint", disjoint);
  }
  const HomologyReport h = homology_ranks(c);
  report("euler_characteristic_8", h.euler_characteristic() == 8);
  report("connected_b0_1", h.b0 == 1);
  {
    json j;
    j["b"] = {h.b0, h.b1, h.b2};
    j["command"] = "complex";
    j["h1_torsion"] = h.h1_torsion;
    emit(j);
  }
  if (cfg.links) {
    for (const LinkGraph* l : {&l1, &l4}) {
      json j;
      j["base"] = l->base;
      j["command"] = "complex";
      j["edges"] = json::array();
      for (const auto& e : l->edges)
        j["edges"].push_back(json{{"cell", e.cell},
                                  {"v1", l->vertices[e.v1]},
                                  {"v2", l->vertices[e.v2]}});
      j["vertices"] = l->vertices;
      emit(j);
    }
  }
  if (!cfg.dump_path.empty()) {
    std::ofstream out(cfg.dump_path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + cfg.dump_path);
    out << complex_to_json(c) << "\n";
    std::cerr << "complex dumped to " << cfg.dump_path << "\n";
  }
  return all_pass ? 0 : kExitViolation;
}

int cmd_render(const RunConfig& cfg) {
  const Word w = parse_word(cfg.word, 2);
  const LatticePath path = to_path(w);
  SvgAnnotations ann;
  if (!cfg.annotations_path.empty()) {
    std::ifstream in(cfg.annotations_path);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + cfg.annotations_path);
    json j;
    in >> j;
    if (j.contains("p")) ann.p = j["p"].get<int>();
    if (j.contains("q")) ann.q = j["q"].get<int>();
    if (j.contains("r")) ann.r = j["r"].get<int>();
    if (j.contains("s")) ann.s = j["s"].get<int>();
  }
  if (!cfg.witness_path.empty()) {
    std::ifstream in(cfg.witness_path);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + cfg.witness_path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const SplitWitness witness = witness_from_json(text);
    ann.p = witness.decomposition.p_index;
    ann.q = witness.decomposition.q_index;
    ann.r = witness.decomposition.r_index;
    ann.s = witness.decomposition.s_index;
    int pos = 0;
    for (const auto& arc : witness.decomposition.arcs) {
      ann.arc_ranges.push_back({pos, pos + static_cast<int>(arc.size())});
      pos += static_cast<int>(arc.size());
    }
  }
  const std::string svg = render_svg(path, ann);
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(cfg.out);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + cfg.out);
    out << svg;
    std::cerr << "svg written to " << cfg.out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixforge: balanced-word grammar derivations, lattice loop "
               "decompositions and the verification complex"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool cap_given = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-n,--dimension", cfg.n, "alphabet dimension (2 or 3)")
        ->check(CLI::Range(1, 3));
    sub->add_option("--cap", cfg.cap, "enumeration cap")
        ->each([&](const std::string&) { cap_given = true; });
    sub->add_option("--workers", cfg.workers, "worker threads")
        ->check(CLI::Range(1, 256));
    sub->add_option("--seed", cfg.seed, "seed recorded in reports");
  };

  CLI::App* member = app.add_subcommand("member", "O_n membership of a word");
  member->add_option("word", cfg.word, "the word");
  add_common(member);

  CLI::App* derive_cmd =
      app.add_subcommand("derive", "derivation tree for a component pair");
  derive_cmd->add_option("w1", cfg.word, "first component");
  derive_cmd->add_option("w2", cfg.w2, "second component");
  derive_cmd->add_option("w3", cfg.w3, "third component (n = 3)");
  derive_cmd->add_option("--out", cfg.out, "counterexample artifact path");
  add_common(derive_cmd);

  CLI::App* sweep = app.add_subcommand("sweep", "derive every word up to a bound");
  sweep->add_option("--max-len", cfg.max_len, "maximum word length");
  sweep->add_option("--mode", cfg.mode, "general or alternating")
      ->check(CLI::IsMember({"general", "alternating"}));
  sweep->add_option("--out", cfg.out, "counterexample artifact path");
  add_common(sweep);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "grammar closure vs direct enumeration");
  enumerate_cmd->add_option("--max-len", cfg.max_len, "maximum word length");
  add_common(enumerate_cmd);

  CLI::App* complex_cmd =
      app.add_subcommand("complex", "verify the 2-complex and its links");
  complex_cmd->add_option("--dump", cfg.dump_path, "write the complex as JSON");
  complex_cmd->add_flag("--links", cfg.links, "print the link graphs");
  add_common(complex_cmd);

  CLI::App* render = app.add_subcommand("render", "render a word's path as SVG");
  render->add_option("word", cfg.word, "the word");
  render->add_option("out", cfg.out, "output file, - for stdout");
  render->add_option("--witness", cfg.witness_path, "split witness JSON");
  render->add_option("--annotations", cfg.annotations_path,
                     "marker JSON with optional p/q/r/s indices");
  add_common(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.cap = effective_cap(cfg.cap, cap_given);

  try {
    if (member->parsed()) return cmd_member(cfg);
    if (derive_cmd->parsed()) return cmd_derive(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (enumerate_cmd->parsed()) return cmd_enumerate(cfg);
    if (complex_cmd->parsed()) return cmd_complex(cfg);
    if (render->parsed()) return cmd_render(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotInOn:
        return kExitNegative;
      case ErrorCode::Incompleteness:
        return kExitViolation;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
