#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmpn/enumerate.hpp"
#include "gmpn/errors.hpp"
#include "gmpn/gmpn.hpp"

namespace gmpn {
namespace cli_detail {

using nlohmann::ordered_json;

inline const char* bool_text(bool b) { return b ? "true" : "false"; }

inline GroupParams parse_group(const std::string& text) {
  std::vector<std::string> pieces;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    pieces.push_back(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (pieces.size() != 3)
    throw parse_error("--group expects exactly three fields m,p,n, got \"" +
                      text + "\"");
  long long v[3];
  for (int k = 0; k < 3; ++k) {
    const char* b = pieces[k].data();
    const char* e = b + pieces[k].size();
    auto [ptr, ec] = std::from_chars(b, e, v[k]);
    if (ec != std::errc() || ptr != e || b == e)
      throw parse_error("--group expects m,p,n with integer fields, got \"" +
                        text + "\"");
  }
  if (v[0] < 1 || v[0] > 1'000'000 || v[1] < 1 || v[1] > 1'000'000 ||
      v[2] < 1 || v[2] > 1'000'000)
    throw parse_error("--group fields out of range in \"" + text + "\"");
  return GroupParams(static_cast<int>(v[0]), static_cast<int>(v[1]),
                     static_cast<int>(v[2]));
}

inline std::string cycles_text(const CycleData& data,
                               const std::vector<int>& block) {
  std::string s;
  for (int ci : block) {
    s += "(";
    const Cycle& c = data.cycles[ci];
    for (std::size_t q = 0; q < c.seq.size(); ++q)
      s += (q ? " " : "") + std::to_string(c.seq[q]);
    s += ")";
  }
  return s;
}

inline ordered_json block_json(const CycleData& data,
                               const std::vector<int>& block, int weight) {
  ordered_json cycles = ordered_json::array();
  for (int ci : block) cycles.push_back(data.cycles[ci].seq);
  return ordered_json{{"cycles", cycles}, {"weight", weight}};
}

inline ordered_json fingerprint_json(const SubgroupFingerprint& fp) {
  ordered_json components = ordered_json::array();
  for (const ComponentFingerprint& c : fp.components)
    components.push_back(ordered_json{{"support", c.support},
                                      {"r", c.r},
                                      {"d", c.d},
                                      {"group", c.sub_params.str()},
                                      {"delta", c.delta}});
  return ordered_json{{"text", fp.str()}, {"components", components}};
}

/** Everything parsed from the command line that handlers need. */
struct Request {
  GroupParams group;
  Guards guards;
  bool json = false;
  std::ostream* out = nullptr;

  ordered_json report; // filled by handlers in json mode

  void emit_line(const std::string& line) {
    if (!json) *out << line << "\n";
  }
};

inline int cmd_reflen(Request& req, const std::string& element_text) {
  Element g = parse_element(req.group, element_text);
  CycleData data = cycle_data(g);
  int length = reflection_length(g, req.guards);
  std::vector<CyclePartition> maxima = max_cycle_partitions(data, req.guards);
  std::sort(maxima.begin(), maxima.end());

  req.emit_line("group: " + req.group.str());
  req.emit_line("element: " + print(g));
  req.emit_line("length: " + std::to_string(length));
  req.emit_line("maximum partitions (" + std::to_string(maxima.size()) + "):");
  ordered_json parts = ordered_json::array();
  for (const CyclePartition& P : maxima) {
    std::string line = "  ";
    ordered_json blocks = ordered_json::array();
    for (std::size_t b = 0; b < P.blocks.size(); ++b) {
      if (b) line += " ";
      line += "{" + cycles_text(data, P.blocks[b]) +
              " w=" + std::to_string(P.block_weights[b]) + "}";
      blocks.push_back(block_json(data, P.blocks[b], P.block_weights[b]));
    }
    line += " -> value " + std::to_string(partition_value(P));
    req.emit_line(line);
    parts.push_back(
        ordered_json{{"blocks", blocks}, {"value", partition_value(P)}});
  }
  if (req.json)
    req.report = ordered_json{{"subcommand", "reflen"},
                              {"group", req.group.str()},
                              {"element", print(g)},
                              {"length", length},
                              {"max_partitions", parts}};
  return 0;
}

inline int cmd_reflections(Request& req) {
  std::vector<Reflection> refl = enumerate_reflections(req.group);
  req.emit_line("group: " + req.group.str());
  req.emit_line("reflections (" + std::to_string(refl.size()) + "):");
  ordered_json list = ordered_json::array();
  for (const Reflection& t : refl) {
    req.emit_line(print(t));
    list.push_back(print(t));
  }
  if (req.json)
    req.report = ordered_json{{"subcommand", "reflections"},
                              {"group", req.group.str()},
                              {"count", refl.size()},
                              {"reflections", list}};
  return 0;
}

inline int cmd_factorize(Request& req, const std::string& element_text) {
  Element g = parse_element(req.group, element_text);
  std::vector<Factorization> fs =
      enumerate_shortest_factorizations(g, req.guards);
  req.emit_line("group: " + req.group.str());
  req.emit_line("element: " + print(g));
  req.emit_line("length: " + std::to_string(reflection_length(g, req.guards)));
  req.emit_line("factorizations (" + std::to_string(fs.size()) + "):");
  ordered_json list = ordered_json::array();
  for (const Factorization& f : fs) {
    req.emit_line(print(f));
    list.push_back(print(f));
  }
  if (req.json)
    req.report =
        ordered_json{{"subcommand", "factorize"},
                     {"group", req.group.str()},
                     {"element", print(g)},
                     {"length", reflection_length(g, req.guards)},
                     {"count", fs.size()},
                     {"factorizations", list}};
  return 0;
}

inline int cmd_orbit_count(Request& req, const std::string& element_text) {
  Element g = parse_element(req.group, element_text);
  CycleData data = cycle_data(g);
  std::uint64_t total = count_orbits_formula(g, req.guards);
  std::vector<CyclePartition> maxima = max_cycle_partitions(data, req.guards);
  std::sort(maxima.begin(), maxima.end());

  req.emit_line("group: " + req.group.str());
  req.emit_line("element: " + print(g));
  req.emit_line("orbits: " + std::to_string(total));
  req.emit_line("maximum partitions (" + std::to_string(maxima.size()) + "):");
  ordered_json parts = ordered_json::array();
  std::uint64_t recomputed = 0;
  for (const CyclePartition& P : maxima) {
    std::string line = "  ";
    ordered_json blocks = ordered_json::array();
    std::uint64_t contribution = 1;
    for (std::size_t b = 0; b < P.blocks.size(); ++b) {
      int r = block_gcd(data, P.blocks[b]);
      std::size_t size = P.blocks[b].size();
      for (std::size_t q = 1; q < size; ++q)
        contribution *= static_cast<std::uint64_t>(r);
      if (b) line += " ";
      line += "{" + cycles_text(data, P.blocks[b]) +
              " w=" + std::to_string(P.block_weights[b]) +
              "}[r=" + std::to_string(r) + " |B|=" + std::to_string(size) + "]";
      ordered_json bj = block_json(data, P.blocks[b], P.block_weights[b]);
      bj["r"] = r;
      bj["size"] = size;
      blocks.push_back(std::move(bj));
    }
    line += " -> contribution " + std::to_string(contribution);
    req.emit_line(line);
    parts.push_back(
        ordered_json{{"blocks", blocks}, {"contribution", contribution}});
    recomputed += contribution;
  }
  if (recomputed != total)
    throw std::logic_error("orbit-count: breakdown does not sum to the total");
  if (req.json)
    req.report = ordered_json{{"subcommand", "orbit-count"},
                              {"group", req.group.str()},
                              {"element", print(g)},
                              {"orbits", total},
                              {"max_partitions", parts}};
  return 0;
}

inline int cmd_orbit_enumerate(Request& req, const std::string& element_text) {
  Element g = parse_element(req.group, element_text);
  std::vector<Factorization> fs =
      enumerate_shortest_factorizations(g, req.guards);
  OrbitCensus census = hurwitz_orbits(fs, req.guards);
  req.emit_line("group: " + req.group.str());
  req.emit_line("element: " + print(g));
  req.emit_line("factorizations: " + std::to_string(census.total()));
  req.emit_line("orbits: " + std::to_string(census.orbits.size()));
  ordered_json list = ordered_json::array();
  for (std::size_t k = 0; k < census.orbits.size(); ++k) {
    const OrbitRecord& rec = census.orbits[k];
    req.emit_line("orbit " + std::to_string(k + 1) + ": size " +
                  std::to_string(rec.size));
    req.emit_line("  representative: " + print(rec.representative));
    ordered_json entry{{"size", rec.size},
                       {"representative", print(rec.representative)}};
    if (rec.fingerprint) {
      req.emit_line("  subgroup: " + rec.fingerprint->str());
      entry["subgroup"] = fingerprint_json(*rec.fingerprint);
    }
    list.push_back(std::move(entry));
  }
  if (req.json)
    req.report = ordered_json{{"subcommand", "orbit-enumerate"},
                              {"group", req.group.str()},
                              {"element", print(g)},
                              {"total", census.total()},
                              {"orbit_count", census.orbits.size()},
                              {"orbits", list}};
  return 0;
}

inline int cmd_equivalent(Request& req, const std::string& f1_text,
                          const std::string& f2_text) {
  Factorization f1 = parse_factorization(req.group, f1_text);
  Factorization f2 = parse_factorization(req.group, f2_text);
  OrbitComparison cmp = compare_orbits(f1, f2, req.guards);
  req.emit_line(std::string("equivalent: ") + bool_text(cmp.equivalent));
  req.emit_line("reason: " + cmp.reason);
  if (req.json)
    req.report = ordered_json{{"subcommand", "equivalent"},
                              {"group", req.group.str()},
                              {"equivalent", cmp.equivalent},
                              {"reason", cmp.reason}};
  return 0;
}

inline int cmd_connect(Request& req, const std::string& f1_text,
                       const std::string& f2_text) {
  Factorization f1 = parse_factorization(req.group, f1_text);
  Factorization f2 = parse_factorization(req.group, f2_text);
  Element g = product(f1);
  if (!(product(f2) == g)) throw domain_error("connect: products differ");
  NormalizeResult n1 = normalize(f1, req.guards);
  NormalizeResult n2 = normalize(f2, req.guards);
  std::optional<BraidWord> bridge =
      connect_standard(n1.standard, n2.standard);
  if (!bridge) {
    req.emit_line("inequivalent");
    if (req.json)
      req.report = ordered_json{{"subcommand", "connect"},
                                {"group", req.group.str()},
                                {"equivalent", false}};
    return 0;
  }
  // f2 --n2.word--> standard(f2) --bridge--> standard(f1) --w1 reversed--> f1.
  BraidWord word = n2.word;
  word.insert(word.end(), bridge->begin(), bridge->end());
  BraidWord undo = inverse_word(n1.word);
  word.insert(word.end(), undo.begin(), undo.end());
  if (!(apply_braid(f2, word) == f1))
    throw std::logic_error("connect: assembled word failed verification");
  req.emit_line("word: " + (word.empty() ? "(empty)" : print(word)));
  if (req.json)
    req.report = ordered_json{{"subcommand", "connect"},
                              {"group", req.group.str()},
                              {"equivalent", true},
                              {"word", word}};
  return 0;
}

inline int cmd_normalize(Request& req, const std::string& f_text) {
  Factorization f = parse_factorization(req.group, f_text);
  NormalizeResult res = normalize(f, req.guards);
  req.emit_line("standard: " + print(res.standard));
  req.emit_line("word: " + (res.word.empty() ? "(empty)" : print(res.word)));
  if (req.json)
    req.report = ordered_json{{"subcommand", "normalize"},
                              {"group", req.group.str()},
                              {"standard", print(res.standard)},
                              {"word", res.word}};
  return 0;
}

inline int cmd_subgroup(Request& req, const std::string& f_text) {
  Factorization f = parse_factorization(req.group, f_text);
  SubgroupFingerprint fp = identify_generated_subgroup(f, req.guards);
  constexpr std::uint64_t kOrderCap = 1'000'000'000'000'000'000ULL;
  std::optional<std::uint64_t> order = fp.order_within(kOrderCap);
  std::optional<std::size_t> closure_size;
  try {
    closure_size = generated_subgroup(f, req.guards).size();
  } catch (const guard_exceeded&) {
    // closure size is reported only when it fits the guard
  }
  req.emit_line("group: " + req.group.str());
  req.emit_line("product: " + print(product(f)));
  req.emit_line("fingerprint: " + fp.str());
  req.emit_line("order: " +
                (order ? std::to_string(*order) : std::string("beyond 10^18")));
  req.emit_line("closure: " +
                (closure_size
                     ? std::to_string(*closure_size)
                     : "beyond guard (" +
                           std::to_string(req.guards.max_closure) + ")"));
  if (req.json) {
    req.report = ordered_json{{"subcommand", "subgroup"},
                              {"group", req.group.str()},
                              {"product", print(product(f))},
                              {"fingerprint", fingerprint_json(fp)}};
    req.report["order"] = order ? ordered_json(*order) : ordered_json(nullptr);
    req.report["closure"] =
        closure_size ? ordered_json(*closure_size) : ordered_json(nullptr);
  }
  return 0;
}

inline int cmd_qc(Request& req, const std::string& element_text) {
  Element g = parse_element(req.group, element_text);
  QcReport rep = qc_report(g);
  RankLengthClassification cls = classify_rank_length(req.group, g);
  req.emit_line("group: " + req.group.str());
  req.emit_line("element: " + print(g));
  req.emit_line(std::string("cond_i: ") + bool_text(rep.cond_i));
  req.emit_line(std::string("cond_ii: ") + bool_text(rep.cond_ii));
  req.emit_line(std::string("cond_iii: ") + bool_text(rep.cond_iii));
  req.emit_line(std::string("weak: ") + bool_text(rep.weak));
  req.emit_line(std::string("strong: ") + bool_text(rep.strong));
  req.emit_line("length: " + std::to_string(cls.length));
  req.emit_line(std::string("full-length quasi-Coxeter: ") +
                bool_text(cls.qc_rank_length));
  req.emit_line("reason: " + cls.reason);
  if (req.json)
    req.report = ordered_json{{"subcommand", "qc"},
                              {"group", req.group.str()},
                              {"element", print(g)},
                              {"cond_i", rep.cond_i},
                              {"cond_ii", rep.cond_ii},
                              {"cond_iii", rep.cond_iii},
                              {"weak", rep.weak},
                              {"strong", rep.strong},
                              {"length", cls.length},
                              {"qc_rank_length", cls.qc_rank_length},
                              {"reason", cls.reason}};
  return 0;
}

inline int cmd_cross_check(Request& req) {
  const GroupParams& gp = req.group;
  std::vector<Element> elements = enumerate_group(gp, req.guards);
  LengthTable table(gp, req.guards);
  bool has_special = gp.p == 1 || gp.p == gp.m;
  std::size_t total = elements.size();
  std::size_t length_ok = 0, special_ok = 0, orbit_ok = 0, transitive_ok = 0;
  for (const Element& g : elements) {
    int shi = reflection_length(g, req.guards);
    if (shi == table.at(g)) ++length_ok;
    if (has_special && reflection_length_special(g, req.guards) == shi)
      ++special_ok;
    std::vector<Factorization> fs =
        enumerate_shortest_factorizations(g, req.guards);
    OrbitPartition part = hurwitz_orbit_partition(fs, req.guards);
    std::uint64_t formula = count_orbits_formula(g, req.guards);
    if (formula == part.orbits.size()) ++orbit_ok;
    if (is_hurwitz_transitive(g, req.guards) == (formula == 1))
      ++transitive_ok;
  }
  bool pass = length_ok == total && orbit_ok == total &&
              transitive_ok == total && (!has_special || special_ok == total);

  auto ratio = [&](std::size_t ok) {
    return std::to_string(ok) + "/" + std::to_string(total);
  };
  req.emit_line("group: " + gp.str() + ", " + std::to_string(total) +
                " elements");
  req.emit_line("length formula vs BFS oracle: " + ratio(length_ok));
  req.emit_line("special-case formula: " +
                (has_special ? ratio(special_ok)
                             : std::string("n/a (1 < p < m)")));
  req.emit_line("orbit-count formula vs orbit search: " + ratio(orbit_ok));
  req.emit_line("transitivity flag vs count: " + ratio(transitive_ok));
  req.emit_line(std::string("result: ") + (pass ? "PASS" : "FAIL"));
  if (req.json) {
    req.report = ordered_json{{"subcommand", "cross-check"},
                              {"group", gp.str()},
                              {"elements", total},
                              {"length_ok", length_ok},
                              {"orbit_ok", orbit_ok},
                              {"transitive_ok", transitive_ok},
                              {"pass", pass}};
    req.report["special_ok"] =
        has_special ? ordered_json(special_ok) : ordered_json(nullptr);
  }
  return pass ? 0 : 1;
}

} // namespace cli_detail

/** Entry point behind the `gmpn` binary; also callable in-process by tests.
 *  Returns the process exit status: 0 success, 1 parse/domain error, 2 guard
 *  exceeded. */
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::Request;

  CLI::App app{"exact computations in the complex reflection groups G(m,p,n):"
               " reflection lengths, shortest reflection factorizations, the"
               " Hurwitz braid action, and generated subgroups"};
  app.require_subcommand(1);

  std::string group_text;
  bool json_mode = false;
  long long max_states = -1, max_factorizations = -1;
  int threads = 1;
  app.add_option("--group", group_text,
                 "group parameters m,p,n with p dividing m (required)");
  app.add_flag("--json", json_mode, "emit one JSON object instead of text");
  app.add_option("--max-states", max_states,
                 "cap on enumerated/closed states (default 1000000; also caps"
                 " subgroup closures at min(cap, 100000))");
  app.add_option("--max-factorizations", max_factorizations,
                 "cap on enumerated factorizations (default 1000000)");
  app.add_option("--threads", threads,
                 "worker cap for parallel searches (this build is sequential;"
                 " accepted for interface stability)")
      ->check(CLI::PositiveNumber);

  std::string element_text, f1_text, f2_text;
  CLI::App* reflen = app.add_subcommand("reflen", "reflection length and the"
                                                  " maximum cycle partitions");
  reflen->add_option("element", element_text, "element literal")->required();
  CLI::App* reflections =
      app.add_subcommand("reflections", "list the reflections of the group");
  CLI::App* factorize = app.add_subcommand(
      "factorize", "enumerate all shortest reflection factorizations");
  factorize->add_option("element", element_text, "element literal")->required();
  CLI::App* orbit_count = app.add_subcommand(
      "orbit-count", "number of Hurwitz orbits by the closed formula, with"
                     " per-partition breakdown");
  orbit_count->add_option("element", element_text, "element literal")
      ->required();
  CLI::App* orbit_enumerate = app.add_subcommand(
      "orbit-enumerate", "orbit census of the shortest factorizations");
  orbit_enumerate->add_option("element", element_text, "element literal")
      ->required();
  CLI::App* equivalent = app.add_subcommand(
      "equivalent", "decide structurally whether two shortest factorizations"
                    " lie in one Hurwitz orbit");
  equivalent->add_option("f1", f1_text, "first factorization")->required();
  equivalent->add_option("f2", f2_text, "second factorization")->required();
  CLI::App* connect = app.add_subcommand(
      "connect", "braid word carrying the second factorization to the first,"
                 " or \"inequivalent\"");
  connect->add_option("f1", f1_text, "first factorization")->required();
  connect->add_option("f2", f2_text, "second factorization")->required();
  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "standard form of a shortest factorization plus the braid"
                   " word reaching it");
  normalize_cmd->add_option("factorization", f1_text, "factorization literal")
      ->required();
  CLI::App* subgroup = app.add_subcommand(
      "subgroup", "identify the subgroup generated by the factors");
  subgroup->add_option("factorization", f1_text, "factorization literal")
      ->required();
  CLI::App* qc = app.add_subcommand(
      "qc", "quasi-Coxeter report and rank-length classification");
  qc->add_option("element", element_text, "element literal")->required();
  CLI::App* cross_check = app.add_subcommand(
      "cross-check", "run the formula-vs-oracle suites over a whole small"
                     " group");
  for (CLI::App* sub :
       {reflen, reflections, factorize, orbit_count, orbit_enumerate,
        equivalent, connect, normalize_cmd, subgroup, qc, cross_check})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (group_text.empty())
      throw parse_error("--group m,p,n is required");
    Request req;
    req.group = cli_detail::parse_group(group_text);
    if (max_states >= 0) {
      if (max_states == 0) throw parse_error("--max-states must be positive");
      req.guards.max_states = static_cast<std::size_t>(max_states);
      req.guards.max_closure =
          std::min<std::size_t>(req.guards.max_closure,
                                static_cast<std::size_t>(max_states));
    }
    if (max_factorizations >= 0) {
      if (max_factorizations == 0)
        throw parse_error("--max-factorizations must be positive");
      req.guards.max_factorizations =
          static_cast<std::size_t>(max_factorizations);
    }
    req.json = json_mode;
    req.out = &out;

    int status = 0;
    if (app.got_subcommand(reflen))
      status = cli_detail::cmd_reflen(req, element_text);
    else if (app.got_subcommand(reflections))
      status = cli_detail::cmd_reflections(req);
    else if (app.got_subcommand(factorize))
      status = cli_detail::cmd_factorize(req, element_text);
    else if (app.got_subcommand(orbit_count))
      status = cli_detail::cmd_orbit_count(req, element_text);
    else if (app.got_subcommand(orbit_enumerate))
      status = cli_detail::cmd_orbit_enumerate(req, element_text);
    else if (app.got_subcommand(equivalent))
      status = cli_detail::cmd_equivalent(req, f1_text, f2_text);
    else if (app.got_subcommand(connect))
      status = cli_detail::cmd_connect(req, f1_text, f2_text);
    else if (app.got_subcommand(normalize_cmd))
      status = cli_detail::cmd_normalize(req, f1_text);
    else if (app.got_subcommand(subgroup))
      status = cli_detail::cmd_subgroup(req, f1_text);
    else if (app.got_subcommand(qc))
      status = cli_detail::cmd_qc(req, element_text);
    else if (app.got_subcommand(cross_check))
      status = cli_detail::cmd_cross_check(req);

    if (req.json) out << req.report.dump(2) << "\n";
    return status;
  } catch (const guard_exceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gmpn");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace gmpn
