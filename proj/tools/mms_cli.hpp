#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 size guard or
// enumeration cap exceeded, 4 a `verify` cross-check failed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mms/mms.hpp"

namespace mms::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kGuard = 3, kCheckFailed = 4 };

inline json to_json(const Edge& e) { return json::array({e.u, e.v}); }

inline json to_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(to_json(e));
  return arr;
}

inline json to_json(const VertexSet& s) { return json(s.members()); }

inline json to_json(const MuCertificate& c) {
  return {{"value", c.value}, {"S", to_json(c.S)}, {"T", to_json(c.T)}, {"deleted", to_json(c.deleted)},
          {"weights", c.weights}};
}

inline MuCertificate certificate_from_json(const json& j) {
  MuCertificate c;
  c.value = j.at("value").get<int>();
  c.S = VertexSet(j.at("S").get<std::vector<int>>());
  c.T = VertexSet(j.at("T").get<std::vector<int>>());
  for (const auto& e : j.at("deleted")) c.deleted.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  c.weights = j.at("weights").get<std::vector<long long>>();
  return c;
}

inline std::string format_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.members()[i]);
  }
  return out + "}";
}

inline std::string format_edges(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "(none)" : out;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_graph(in);
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << text;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += ' ';
    s += p;
  }
  return s;
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::GuardExceeded:
    case ErrorCode::CapExceeded:
      return kGuard;
    default:
      return kInvalidInput;
  }
}

inline json envelope(const std::string& command, json input, json result) {
  return {{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}, {"status", kOk}};
}

// ---------------------------------------------------------------------------
// verify: library cross-checks at desk scale.

struct VerifyConfig {
  int max_n = 6;
  std::uint64_t seed = 1;
  int trials = 50;
};

inline bool contiguous(const std::vector<int>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[i - 1] + 1) return false;
  }
  return !values.empty();
}

inline int run_verify(const VerifyConfig& cfg, std::ostream& out) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << '\n';
    if (!ok) ++failures;
  };

  {
    int checked = 0;
    bool ok = true;
    for (int n = 1; n <= cfg.max_n; ++n) {
      for (int k = 0; k < n; ++k) {
        if ((k * n) % 2 != 0) continue;
        RegularSpec spec(k, n);
        int closed = lower_mu_regular(spec);
        ok &= lower_mu(DegreeSequence::regular(k, n)).value == closed;
        if (n <= 24) {
          ok &= mu_exact(construct_lower_extremal(spec)).value == closed;
          ok &= mu_exact(construct_upper_extremal(spec).graph).value == upper_mu_regular(spec);
        }
        ++checked;
      }
    }
    report("regular closed forms", ok, std::to_string(checked) + " (k,n) pairs");
  }

  {
    const int limit = std::min(cfg.max_n, 8);
    int sequences = 0;
    bool ok = true;
    for (int n = 1; n <= limit; ++n) {
      for_each_degree_sequence(n, [&](const DegreeSequence& d) {
        if (!is_graphical(d)) return;
        int best = std::numeric_limits<int>::max();
        std::vector<int> values;
        for (const Graph& g : enumerate_realizations(d, 10'000'000)) {
          MuCertificate c = mu_exact(g);
          ok &= static_cast<bool>(verify_certificate(g, c));
          best = std::min(best, c.value);
          values.push_back(c.value);
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        ok &= lower_mu(d).value == best && contiguous(values);
        ++sequences;
      });
    }
    report("lower mu vs realizations", ok, std::to_string(sequences) + " graphical sequences, n <= " + std::to_string(limit));
  }

  {
    std::mt19937_64 rng(cfg.seed);
    const int limit = std::max(2, std::min(cfg.max_n, 9));
    std::uniform_int_distribution<int> pick_n(2, limit);
    std::uniform_real_distribution<double> pick_p(0.3, 0.9);
    bool ok = true;
    for (int t = 0; t < cfg.trials; ++t) {
      Graph g = random_graph(pick_n(rng), pick_p(rng), rng);
      ok &= mu_exact(g).value == mu_via_blocking(g).size;
    }
    report("mu vs blocking oracle", ok, std::to_string(cfg.trials) + " random graphs, seed " + std::to_string(cfg.seed));
  }
  return failures == 0 ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mu(G) computation and degree-sequence extremal values", "mmsgraph"};
  app.require_subcommand(1);

  bool as_json = false;
  bool with_cert = false;
  bool force = false;
  std::string graph_file;
  std::vector<std::string> degseq_parts;
  std::string output;
  int k = -1;
  int n = -1;
  std::size_t cap = 1'000'000;
  VerifyConfig vcfg;

  auto* mu = app.add_subcommand("mu", "exact mu of a graph file");
  mu->add_option("graph_file", graph_file, "edge-list file")->required();
  mu->add_flag("--certificate", with_cert, "print S, T, deleted edges and weights");
  mu->add_flag("--json", as_json, "machine-readable output");
  mu->add_flag("--force", force, "allow n > 24");

  auto* lmu = app.add_subcommand("lower-mu", "minimum mu over realizations of a degree sequence");
  lmu->add_option("degseq", degseq_parts, "degrees, e.g. 2,2,2 or @file")->required();
  lmu->add_flag("--json", as_json);

  auto* graphical = app.add_subcommand("graphical", "Erdős–Gallai graphicality test");
  graphical->add_option("degseq", degseq_parts)->required();
  graphical->add_flag("--json", as_json);

  auto* realize = app.add_subcommand("realize", "Havel–Hakimi realization as an edge-list file");
  realize->add_option("degseq", degseq_parts)->required();
  realize->add_option("-o,--output", output, "output path (default stdout)");

  auto* kundu = app.add_subcommand("kundu", "does some realization contain a perfect matching");
  kundu->add_option("degseq", degseq_parts)->required();
  kundu->add_flag("--json", as_json);

  auto* p2m = app.add_subcommand("has-p2m", "perfect 2-matching test for a graph file");
  p2m->add_option("graph_file", graph_file)->required();
  p2m->add_flag("--certificate", with_cert, "print the components");
  p2m->add_flag("--json", as_json);

  auto* circ = app.add_subcommand("circulant", "write the circulant C(k, n)");
  circ->add_option("--k", k)->required();
  circ->add_option("--n", n)->required();
  circ->add_option("-o,--output", output);

  auto* reg = app.add_subcommand("regular", "closed-form lower and upper mu of k^n");
  reg->add_option("--k", k)->required();
  reg->add_option("--n", n)->required();
  reg->add_flag("--json", as_json);

  auto* interval = app.add_subcommand("interval", "all mu values over realizations (small n)");
  interval->add_option("degseq", degseq_parts)->required();
  interval->add_option("--cap", cap, "maximum number of realizations");
  interval->add_flag("--force", force, "allow n > 8");
  interval->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "run the built-in cross-checks");
  verify->add_option("--max-n", vcfg.max_n, "largest order checked");
  verify->add_option("--seed", vcfg.seed, "random seed");
  verify->add_option("--trials", vcfg.trials, "random graphs for the oracle check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string degseq_text = join(degseq_parts);
  try {
    if (*mu) {
      Graph g = read_graph_file(graph_file);
      MuOptions opt;
      opt.force = force;
      MuCertificate cert = mu_exact(g, opt);
      if (auto check = verify_certificate(g, cert); !check) {
        err << "internal error: certificate rejected: " << check.reason << '\n';
        return kCheckFailed;
      }
      if (as_json) {
        json j = envelope("mu", {{"graph_file", graph_file}, {"n", g.order()}, {"m", g.size()}},
                          {{"mu", cert.value}});
        if (with_cert) j["certificate"] = to_json(cert);
        out << j.dump(2) << '\n';
      } else {
        out << "mu = " << cert.value << '\n';
        if (with_cert) {
          out << "S = " << format_set(cert.S) << '\n';
          out << "T = " << format_set(cert.T) << '\n';
          out << "deleted = " << format_edges(cert.deleted) << '\n';
          out << "weights =";
          for (long long w : cert.weights) out << ' ' << w;
          out << '\n';
        }
      }
    } else if (*lmu) {
      DegreeSequence d = parse_degree_sequence(degseq_text);
      LowerMuResult r = lower_mu(d);
      if (as_json) {
        json j = envelope("lower-mu", {{"degrees", d.degrees()}}, {{"lower_mu", r.value}, {"k_star", r.k_star}, {"opt", r.opt}});
        j["certificate"] = {{"S", to_json(r.S)},
                            {"T", to_json(r.T)},
                            {"witness", {{"n", r.witness.order()}, {"edges", to_json(r.witness.edges())}}}};
        out << j.dump(2) << '\n';
      } else {
        out << "lower_mu = " << r.value << '\n';
        out << "k* = " << r.k_star << '\n';
      }
    } else if (*graphical) {
      DegreeSequence d = parse_degree_sequence(degseq_text);
      bool ok = is_graphical(d);
      if (as_json) {
        out << envelope("graphical", {{"degrees", d.degrees()}}, {{"graphical", ok}}).dump(2) << '\n';
      } else {
        out << "graphical = " << (ok ? "true" : "false") << '\n';
      }
    } else if (*realize) {
      DegreeSequence d = parse_degree_sequence(degseq_text);
      write_text(output, write_graph(havel_hakimi_realize(d)), out);
    } else if (*kundu) {
      DegreeSequence d = parse_degree_sequence(degseq_text);
      bool ok = kundu_has_pm_realization(d);
      if (as_json) {
        out << envelope("kundu", {{"degrees", d.degrees()}}, {{"has_pm_realization", ok}}).dump(2) << '\n';
      } else {
        out << "has_pm_realization = " << (ok ? "true" : "false") << '\n';
      }
    } else if (*p2m) {
      Graph g = read_graph_file(graph_file);
      bool ok = has_perfect_2_matching(g);
      std::optional<PerfectTwoMatching> comp;
      if (ok && with_cert) comp = extract_p2m(g);
      if (as_json) {
        json j = envelope("has-p2m", {{"graph_file", graph_file}, {"n", g.order()}, {"m", g.size()}},
                          {{"has_p2m", ok}});
        if (comp) j["certificate"] = {{"k2", to_json(comp->k2_components)}, {"odd_cycles", comp->odd_cycles}};
        out << j.dump(2) << '\n';
      } else {
        out << "has_p2m = " << (ok ? "true" : "false") << '\n';
        if (comp) {
          out << "K2 = " << format_edges(comp->k2_components) << '\n';
          for (const auto& cyc : comp->odd_cycles) {
            out << "odd cycle =";
            for (int v : cyc) out << ' ' << v;
            out << '\n';
          }
        }
      }
    } else if (*circ) {
      write_text(output, write_graph(circulant(k, n)), out);
    } else if (*reg) {
      RegularSpec spec(k, n);
      int lo = lower_mu_regular(spec);
      int hi = upper_mu_regular(spec);
      if (as_json) {
        out << envelope("regular", {{"k", k}, {"n", n}},
                        {{"lower", lo}, {"upper", hi}, {"upper_exceptional", hi != k}})
                   .dump(2)
            << '\n';
      } else {
        out << "lower " << lo << ", upper " << hi << '\n';
      }
    } else if (*interval) {
      DegreeSequence d = parse_degree_sequence(degseq_text);
      if (d.length() > 8 && !force) {
        err << "error: interval refuses n > 8 without --force\n";
        return kGuard;
      }
      auto graphs = enumerate_realizations(d, cap);
      std::vector<int> values;
      for (const Graph& g : graphs) {
        MuCertificate c = mu_exact(g);
        if (!verify_certificate(g, c)) {
          err << "internal error: certificate rejected\n";
          return kCheckFailed;
        }
        values.push_back(c.value);
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      if (as_json) {
        out << envelope("interval", {{"degrees", d.degrees()}},
                        {{"values", values}, {"realizations", graphs.size()}, {"contiguous", contiguous(values)}})
                   .dump(2)
            << '\n';
      } else {
        out << "mu values = {";
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
        out << "}\n";
        out << "interval = [" << values.front() << ", " << values.back() << "]\n";
        out << "realizations = " << graphs.size() << '\n';
      }
    } else if (*verify) {
      return run_verify(vcfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kOk;
}

}  // namespace mms::cli
