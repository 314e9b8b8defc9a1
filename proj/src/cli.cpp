// Copyright 2026 The Rainbow Index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rainbow/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/index_search.hpp"
#include "rainbow/montecarlo.hpp"
#include "rainbow/packing.hpp"
#include "rainbow/ramsey.hpp"
#include "rainbow/trees.hpp"

namespace rainbow {
namespace {

struct Options {
  std::vector<int> classes;
  int colors = 0;
  int k = 0;
  int l = 1;
  int cap = 0;  // 0 means uncapped
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  int attempts = 0;
  std::string case_tag;
  std::string in;
  std::string out;
  int jobs = 1;
  std::string pattern = "constant";
  int size = 0;
  long n = 0;
  long n_max = 0;
  std::string event;
  std::vector<std::string> terminals;
  bool all_sets = false;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string vertices_text(const std::vector<VertexId>& vs) {
  std::string s;
  for (VertexId v : vs) s += " " + to_string(v);
  return s;
}

std::string set_line(const TerminalSet& s) {
  return "S " + std::to_string(s.size()) + vertices_text(s.vertices());
}

void emit_certificate(const Options& o, const Certificate& cert,
                      std::ostream& out) {
  if (o.out.empty()) {
    write_certificate(out, cert);
  } else {
    save_certificate(o.out, cert);
  }
}

TerminalSet terminals_from(const Options& o, const MultipartiteGraph& g) {
  if (!o.terminals.empty()) {
    std::vector<VertexId> vs;
    for (const auto& t : o.terminals) vs.push_back(parse_vertex(t));
    return TerminalSet(g, vs);
  }
  if (!o.case_tag.empty()) {
    if (o.k < 2) throw std::invalid_argument("--case needs --k >= 2");
    return place_terminals(g, parse_placement(o.case_tag), o.k);
  }
  throw std::invalid_argument("give --terminals or --case");
}

int cmd_gen(const Options& o, std::ostream& out) {
  const MultipartiteGraph g(o.classes);
  if (o.k > 0) {
    const SearchOutcome found = search_good_coloring(
        g, o.colors, o.k, o.l, o.attempts > 0 ? o.attempts : 1, o.seed);
    if (!found.witness) {
      out << "gen exhausted " << found.attempts_used << "\n";
      out << "# " << found.explanation << "\n";
      return kExitOk;
    }
    out << "gen found " << found.attempts_used << "\n";
    emit_certificate(o, {g, *found.witness, {}}, out);
    return kExitOk;
  }
  RandomStream stream = trial_stream(o.seed, 0);
  emit_certificate(o, {g, random_coloring(g, o.colors, stream), {}}, out);
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out) {
  const MultipartiteGraph g(o.classes);
  std::optional<Coloring> c;
  if (o.pattern == "constant") {
    c = Coloring::constant(g, o.colors, 1);
  } else if (o.pattern == "latin") {
    c = latin_coloring(g, o.colors);
  } else if (o.pattern == "planted") {
    // Color 1 on the block {0:0..size-1} x {1:0..size-1}, cyclic elsewhere
    // over colors 2..t.
    if (o.colors < 2) throw std::invalid_argument("planted needs --colors >= 2");
    std::vector<int> a;
    for (const Edge& e : g.edges()) {
      const bool block = e.a.cls == 0 && e.b.cls == 1 && e.a.offset < o.size &&
                         e.b.offset < o.size;
      a.push_back(block ? 1 : (e.a.offset + e.b.offset) % (o.colors - 1) + 2);
    }
    c.emplace(g, o.colors, std::move(a));
  } else {
    throw std::invalid_argument("unknown pattern '" + o.pattern + "'");
  }
  emit_certificate(o, {g, *c, {}}, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Certificate cert = read_certificate(o.in);
  if (o.k == 0 && cert.packings.empty()) {
    throw std::invalid_argument("nothing to verify: give --k or a packing");
  }
  int status = kExitOk;
  for (std::size_t i = 0; i < cert.packings.size(); ++i) {
    const PackingVerdict v =
        verify_packing(cert.graph, cert.coloring, cert.packings[i]);
    out << "verify packing " << i << ' '
        << cert.packings[i].trees.size() << (v.ok ? " ok" : " fail") << "\n";
    if (!v.ok) {
      out << "# " << v.violation << "\n";
      status = kExitCounterexample;
    }
  }
  if (o.k > 0) {
    const ColoringVerdict v = verify_coloring(cert.graph, cert.coloring, o.k, o.l);
    if (v.pass) {
      out << "verify pass k=" << o.k << " l=" << o.l << "\n";
    } else {
      out << "verify fail k=" << o.k << " l=" << o.l << "\n"
          << "verify " << set_line(*v.failing_set) << "\n";
      status = kExitCounterexample;
    }
  }
  return status;
}

int cmd_rx(const Options& o, std::ostream& out) {
  const MultipartiteGraph g(o.classes);
  const int t_max = o.colors > 0 ? o.colors : g.edge_count();
  const RxResult r = rx_exact(g, o.k, o.l, t_max, o.jobs);
  out << "rx lower-bound " << r.lower_bound << "\n";
  switch (r.status) {
    case RxStatus::kFound:
      out << "rx found " << *r.value << "\n";
      emit_certificate(o, {g, *r.witness, {}}, out);
      break;
    case RxStatus::kInfeasible:
      out << "rx infeasible\n" << "rx " << set_line(*r.failing_set) << "\n";
      break;
    case RxStatus::kUnresolved:
      out << "rx unresolved " << t_max << "\n";
      break;
  }
  out << "rx colorings-checked " << r.colorings_checked << "\n";
  return kExitOk;
}

int cmd_pack(const Options& o, std::ostream& out) {
  Certificate cert = read_certificate(o.in);
  const TerminalSet s = terminals_from(o, cert.graph);
  const int cap = o.cap > 0 ? o.cap : cert.graph.edge_count();
  const PackingResult r = max_rainbow_packing(cert.graph, cert.coloring, s, cap);
  out << "pack " << r.count << " " << set_line(s) << "\n";
  cert.packings.push_back(r.packing);
  if (!o.out.empty()) save_certificate(o.out, cert);
  for (const STree& t : r.packing.trees) {
    out << "pack tree " << t.edges.size();
    for (int e : t.edges) out << ' ' << e;
    out << "\n";
  }
  return kExitOk;
}

void print_report_table(const std::vector<BoundReport>& reports,
                        std::ostream& out) {
  out << std::left << std::setw(24) << "# case" << std::setw(8) << "n"
      << std::setw(22) << "value" << std::setw(13) << "kind" << "scope\n";
  for (const BoundReport& r : reports) {
    out << "# " << std::setw(22) << r.case_tag << std::setw(8) << r.n
        << std::setw(22) << fmt(r.value) << std::setw(13) << to_string(r.kind)
        << r.scope << "\n";
  }
  out << std::right;
  for (const BoundReport& r : reports) {
    out << "bound " << r.case_tag << ' ' << r.n << ' '
        << (r.exact ? r.exact->get_str() : std::string("-")) << ' '
        << fmt(r.value) << "\n";
  }
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const std::string& tag = o.case_tag;
  if (tag == "star" || tag == "double-star") {
    const Rational p = tag == "star" ? star_rainbow_prob(o.k, o.colors)
                                     : double_star_rainbow_prob(o.k);
    out << "bound " << tag << " " << o.k << " " << p.get_str() << " "
        << fmt(p.get_d()) << "\n";
    return kExitOk;
  }
  if (tag == "ramsey") {
    const RamseyEstimates e = bipartite_ramsey_estimates(o.k, o.colors);
    out << "# leading-order asymptotic estimates, not certified bounds\n"
        << "bound ramsey " << o.k << " " << o.colors << " " << fmt(e.lower)
        << " " << fmt(e.upper) << " estimate\n";
    return kExitOk;
  }
  if (o.n < 1) throw std::invalid_argument("--n is required");
  const long last = o.n_max > 0 ? o.n_max : o.n;
  std::vector<BoundReport> reports;
  for (long n = o.n; n <= last; ++n) {
    if (tag == "union-success") {
      reports.push_back(union_bound_success(n, o.k, o.l));
    } else if (tag.rfind("bip-", 0) == 0) {
      reports.push_back(
          bipartite_two_tree_failure(n, parse_bipartite_case(tag.substr(4))));
    } else if (tag.rfind("tri-", 0) == 0) {
      reports.push_back(tripartite_three_tree_failure(
          n, parse_tripartite_case(tag.substr(4))));
    } else {
      throw std::invalid_argument("unknown bound case '" + tag + "'");
    }
  }
  print_report_table(reports, out);
  return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  const long n = union_bound_threshold(o.k, o.l);
  out << "threshold " << o.k << ' ' << o.l << ' ' << n << "\n";
  std::vector<BoundReport> reports;
  if (n - 1 > static_cast<long>(o.k) + o.l - 1) {
    reports.push_back(union_bound_success(n - 1, o.k, o.l));
  }
  reports.push_back(union_bound_success(n, o.k, o.l));
  print_report_table(reports, out);
  return kExitOk;
}

int cmd_mc(const Options& o, std::ostream& out) {
  const MultipartiteGraph g(o.classes);
  McConfig config;
  config.master_seed = o.seed;
  config.trials = o.trials;
  config.colors = o.colors;
  config.k = o.k > 0 ? o.k : 3;
  config.l = o.l;
  config.jobs = o.jobs;
  if (o.all_sets) {
    config.selector = AllTerminalSets{};
  } else if (!o.terminals.empty()) {
    config.selector = terminals_from(o, g);
  } else {
    config.selector =
        parse_placement(o.case_tag.empty() ? "one-class" : o.case_tag);
  }
  const McEvent event = parse_event(o.event);
  const McEstimate e = estimate_event(g, config, event);
  out << "mc " << to_string(event) << ' ' << e.trials << ' ' << e.successes
      << ' ' << fmt(e.estimate()) << ' ' << fmt(e.standard_error()) << "\n";
  return kExitOk;
}

int cmd_ramsey(const Options& o, std::ostream& out) {
  const Certificate cert = read_certificate(o.in);
  const auto b = find_mono_biclique(cert.graph, cert.coloring, o.size);
  if (!b) {
    out << "ramsey none\n";
  } else {
    out << "ramsey color " << b->color << " U" << vertices_text(b->side_u)
        << " V" << vertices_text(b->side_v) << "\n";
  }
  return kExitOk;
}

int cmd_refute(const Options& o, std::ostream& out) {
  const Certificate cert = read_certificate(o.in);
  const auto proof = refute_by_biclique(cert.graph, cert.coloring, o.k);
  if (!proof) {
    out << "refute none\n";
    return kExitOk;
  }
  out << "refute " << set_line(proof->terminals) << "\n"
      << "refute biclique color " << proof->biclique.color << " U"
      << vertices_text(proof->biclique.side_u) << " V"
      << vertices_text(proof->biclique.side_v) << "\n"
      << "refute trees-examined " << proof->trees_examined << " rainbow "
      << proof->rainbow_trees << "\n";
  return kExitCounterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Rainbow index toolkit for complete multipartite graphs",
               "rainbow-index"};
  app.require_subcommand(1);

  auto classes = [&](CLI::App* c) {
    c->add_option("--classes", o.classes, "class sizes n1,n2,...")
        ->delimiter(',')
        ->required();
  };
  auto colors = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--colors", o.colors, "number of colors t")
                    ->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  auto kl = [&](CLI::App* c, bool k_required) {
    auto* k = c->add_option("--k", o.k, "terminal set size")
                  ->check(CLI::PositiveNumber);
    if (k_required) k->required();
    c->add_option("--l", o.l, "number of trees")->check(CLI::PositiveNumber);
  };
  auto in = [&](CLI::App* c) {
    c->add_option("--in", o.in, "certificate file")->required();
  };
  auto outfile = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write the certificate here");
  };
  auto seed = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "master seed")->required();
  };
  auto jobs = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto terminals = [&](CLI::App* c) {
    c->add_option("--terminals", o.terminals, "terminal set c:o,c:o,...")
        ->delimiter(',');
    c->add_option("--case", o.case_tag, "one-class, two-class or spread");
  };

  CLI::App* gen = app.add_subcommand("gen", "random coloring, or search for a passing one");
  classes(gen);
  colors(gen, true);
  seed(gen);
  kl(gen, false);
  gen->add_option("--attempts", o.attempts, "search attempts")
      ->check(CLI::PositiveNumber);
  outfile(gen);

  CLI::App* color = app.add_subcommand("color", "deterministic coloring");
  classes(color);
  colors(color, true);
  color->add_option("--pattern", o.pattern, "constant, latin or planted");
  color->add_option("--size", o.size, "planted biclique size");
  outfile(color);

  CLI::App* verify = app.add_subcommand("verify", "check a certificate");
  in(verify);
  kl(verify, false);

  CLI::App* rx = app.add_subcommand("rx", "exact (k,l)-rainbow index");
  classes(rx);
  kl(rx, true);
  colors(rx, false);
  jobs(rx);
  outfile(rx);

  CLI::App* pack = app.add_subcommand("pack", "maximum rainbow packing for one terminal set");
  in(pack);
  pack->add_option("--k", o.k, "terminal count for --case")
      ->check(CLI::PositiveNumber);
  pack->add_option("--l", o.cap, "stop once this many trees are packed")
      ->check(CLI::PositiveNumber);
  terminals(pack);
  outfile(pack);

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
  bounds->add_option("--case", o.case_tag, "bound to evaluate")->required();
  bounds->add_option("--n", o.n, "class size n");
  bounds->add_option("--n-max", o.n_max, "evaluate n..n-max");
  kl(bounds, false);
  colors(bounds, false);

  CLI::App* threshold = app.add_subcommand("threshold", "least n with a positive union bound");
  kl(threshold, true);

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo event frequency");
  classes(mc);
  colors(mc, true);
  seed(mc);
  kl(mc, false);
  mc->add_option("--trials", o.trials, "number of trials")
      ->required()
      ->check(CLI::PositiveNumber);
  mc->add_option("--event", o.event, "event tag")->required();
  mc->add_flag("--all-sets", o.all_sets, "event must hold for every k-set");
  terminals(mc);
  jobs(mc);

  CLI::App* ramsey = app.add_subcommand("ramsey", "monochromatic K_{t,t} search");
  in(ramsey);
  ramsey->add_option("--t", o.size, "biclique side size")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* refute = app.add_subcommand("refute", "refute a k-coloring through a monochromatic K_{k,k}");
  in(refute);
  kl(refute, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*color) return cmd_color(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*rx) return cmd_rx(o, out);
    if (*pack) return cmd_pack(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*threshold) return cmd_threshold(o, out);
    if (*mc) return cmd_mc(o, out);
    if (*ramsey) return cmd_ramsey(o, out);
    if (*refute) return cmd_refute(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rainbow
