// Command line front end: classify graphs, verify certificates, and run the
// individual pipeline stages (cover, match, factor, label, orbital, dot,
// canon) over the line-oriented document formats.
//
// Exit codes: 0 success (classify: direct labeling), 1 verification found
// violations, 2 parse or validation failure, 3 precondition violation,
// 10 classify: not Schreier (labeled cover witness), 11 classify: half-edge
// input (cover only), 70 internal defect.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "heg/cover.hpp"
#include "heg/factorization.hpp"
#include "heg/graph.hpp"
#include "heg/io.hpp"
#include "heg/matching.hpp"
#include "heg/schreier.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

heg::Graph load_graph(const std::string& path) {
  heg::Graph g = heg::parse_graph(read_file(path));
  if (auto errs = heg::validate(g); !errs.empty()) {
    std::string all = "invalid graph";
    for (const auto& e : errs) all += "\n  " + e;
    throw std::runtime_error(all);
  }
  return g;
}

// Full soundness check of a classification certificate against the input
// graph, including re-solving for matching maximality. Used both before the
// CLI writes a certificate and when verifying a stored one.
std::vector<std::string> check_classification(
    const heg::Graph& g, const heg::ClassificationCertificate& c) {
  std::vector<std::string> out;
  auto take = [&out](std::vector<std::string> v) {
    out.insert(out.end(), v.begin(), v.end());
  };

  if (c.verdict == heg::Verdict::kDirectSchreier) {
    if (!c.labeling) {
      out.push_back("direct verdict without a labeling");
      return out;
    }
    take(heg::verify_labeling(g, *c.labeling));
    return out;
  }

  if (!c.covering || !c.cover_labeling) {
    out.push_back("cover verdict without a labeled covering");
    return out;
  }
  const heg::CoveringCertificate& cc = *c.covering;
  for (const auto& e : heg::validate(cc.cover)) {
    out.push_back("cover graph: " + e);
  }
  if (!out.empty()) return out;

  heg::CoveringMap map{cc.cover, g, cc.vertex_map, cc.arc_map};
  auto cover_violations = heg::verify_covering(map);
  const bool covering_ok = cover_violations.empty();
  take(std::move(cover_violations));
  if (covering_ok && !heg::is_double_cover(map)) {
    out.push_back("covering is not a double cover");
  }
  take(heg::verify_labeling(cc.cover, *c.cover_labeling));

  if (c.verdict == heg::Verdict::kNotSchreier) {
    if (!c.deficiency || !c.max_matching) {
      out.push_back("not-schreier verdict without a matching witness");
      return out;
    }
    const heg::Matching& m = *c.max_matching;
    std::vector<bool> used(g.vertex_count(), false);
    bool valid = true;
    for (heg::EdgeId e : m.edges) {
      if (e >= g.arc_count() || e != g.edge_of(e) || g.is_half_edge(e) ||
          g.iota(e) == g.tau(e)) {
        out.push_back("matching contains an invalid edge");
        valid = false;
        break;
      }
      if (used[g.iota(e)] || used[g.tau(e)]) {
        out.push_back("matching edges share a vertex");
        valid = false;
        break;
      }
      used[g.iota(e)] = used[g.tau(e)] = true;
    }
    if (valid) {
      if (heg::max_matching_general(g).edges.size() != m.edges.size()) {
        out.push_back("matching is not maximum");
      }
      if (*c.deficiency != g.vertex_count() - 2 * m.edges.size()) {
        out.push_back("deficiency does not match the matching");
      }
      if (*c.deficiency == 0) {
        out.push_back("not-schreier verdict with zero deficiency");
      }
    }
  }
  return out;
}

int cmd_classify(const std::string& graph_path, const std::string& out_path) {
  heg::Graph g = load_graph(graph_path);
  heg::ClassificationResult r = heg::classify(g);
  heg::ClassificationCertificate cert = heg::to_certificate(r);
  auto violations = check_classification(g, cert);
  if (!violations.empty()) {
    for (const auto& v : violations) {
      std::cerr << "internal error: emitted certificate fails: " << v << "\n";
    }
    return 70;
  }
  write_output(out_path, heg::serialize_classification(cert));
  switch (cert.verdict) {
    case heg::Verdict::kDirectSchreier:
      return 0;
    case heg::Verdict::kNotSchreier:
      return 10;
    case heg::Verdict::kCoverOnly:
      return 11;
  }
  return 70;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  heg::Graph g = load_graph(graph_path);
  heg::CertificateDocument doc = heg::parse_certificate(read_file(cert_path));
  std::vector<std::string> violations = std::visit(
      [&g](const auto& cert) -> std::vector<std::string> {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, heg::SchreierLabeling>) {
          return heg::verify_labeling(g, cert);
        } else if constexpr (std::is_same_v<T, heg::CoveringCertificate>) {
          std::vector<std::string> out;
          for (const auto& e : heg::validate(cert.cover)) {
            out.push_back("cover graph: " + e);
          }
          if (!out.empty()) return out;
          heg::CoveringMap map{cert.cover, g, cert.vertex_map, cert.arc_map};
          return heg::verify_covering(map);
        } else {
          return check_classification(g, cert);
        }
      },
      doc);
  for (const auto& v : violations) std::cout << v << "\n";
  return violations.empty() ? 0 : 1;
}

int cmd_cover(const std::string& graph_path, const std::string& out_path,
              const std::string& cert_path) {
  heg::Graph g = load_graph(graph_path);
  auto [cover, map] = heg::canonical_double_cover(g);
  write_output(out_path, heg::serialize_graph(cover));
  if (!cert_path.empty()) {
    write_output(cert_path,
                 heg::serialize_covering(heg::to_covering_certificate(map)));
  }
  return 0;
}

int cmd_match(const std::string& graph_path, const std::string& out_path) {
  heg::Graph g = load_graph(graph_path);
  heg::MatchabilityCertificate cert = heg::is_matchable(g);
  std::string out = "matchable: ";
  out += cert.matchable ? "true" : "false";
  out += ", max: " + std::to_string(cert.matching.edges.size());
  out += ", deficiency: " + std::to_string(cert.deficiency) + "\n";
  for (heg::EdgeId e : cert.matching.edges) {
    out += "arc " + std::to_string(e) + "\n";
  }
  write_output(out_path, out);
  return 0;
}

int cmd_factor(const std::string& graph_path, const std::string& out_path) {
  heg::Graph g = load_graph(graph_path);
  std::vector<heg::TwoFactor> factors = heg::two_factorization(g);
  std::string out = "factors " + std::to_string(factors.size()) + "\n";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out += "factor " + std::to_string(i) + "\n";
    for (heg::VertexId v = 0; v < factors[i].successor.size(); ++v) {
      out += "succ " + std::to_string(v) + " " +
             std::to_string(factors[i].successor[v]) + "\n";
    }
  }
  write_output(out_path, out);
  return 0;
}

int cmd_label(const std::string& graph_path, const std::string& out_path,
              bool involutions) {
  heg::Graph g = load_graph(graph_path);
  if (involutions) {
    auto b = heg::bipartition(g);
    if (!b) throw std::invalid_argument("graph is not bipartite");
    heg::SchreierLabeling l = heg::label_bipartite_involutions(g, *b);
    write_output(out_path, heg::serialize_labeling(l));
    return 0;
  }
  heg::ClassificationResult r = heg::classify(g);
  if (const auto* direct = std::get_if<heg::DirectSchreier>(&r)) {
    auto violations = heg::verify_labeling(g, direct->labeling);
    if (!violations.empty()) {
      for (const auto& v : violations) {
        std::cerr << "internal error: emitted labeling fails: " << v << "\n";
      }
      return 70;
    }
    write_output(out_path, heg::serialize_labeling(direct->labeling));
    return 0;
  }
  if (std::holds_alternative<heg::NotSchreierWithCover>(r)) {
    std::cerr << "graph is not a Schreier graph (imperfect maximum matching);"
                 " run 'classify' for the labeled double cover\n";
    return 10;
  }
  std::cerr << "half-edge graph: direct labeling is not decided; run"
               " 'classify' for the labeled double cover\n";
  return 11;
}

int cmd_orbital(const std::string& action_path, const std::string& out_path,
                const std::string& cert_path) {
  heg::PermutationAction action = heg::parse_action(read_file(action_path));
  auto [g, labeling] = heg::orbital_graph(action);
  // Renumber arcs into document order so the labeling matches the emitted
  // graph after a reparse.
  auto [canon, perm] = heg::canonical_copy(g);
  std::string graph_doc = heg::serialize_graph(canon);
  std::string labeling_doc =
      heg::serialize_labeling(heg::permute_labeling(labeling, perm));
  if (out_path.empty() && cert_path.empty()) {
    std::cout << graph_doc << labeling_doc;
    return 0;
  }
  write_output(out_path, graph_doc);
  if (!cert_path.empty()) write_output(cert_path, labeling_doc);
  return 0;
}

int cmd_dot(const std::string& graph_path, const std::string& labeling_path,
            const std::string& out_path) {
  heg::Graph g = load_graph(graph_path);
  if (labeling_path.empty()) {
    write_output(out_path, heg::export_dot(g));
    return 0;
  }
  heg::CertificateDocument doc =
      heg::parse_certificate(read_file(labeling_path));
  const auto* labeling = std::get_if<heg::SchreierLabeling>(&doc);
  if (!labeling) {
    throw std::runtime_error("certificate is not a labeling");
  }
  write_output(out_path, heg::export_dot(g, labeling));
  return 0;
}

int cmd_canon(const std::string& graph_path, const std::string& out_path) {
  write_output(out_path, heg::serialize_graph(load_graph(graph_path)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graph toolkit: classification, certificates, covers"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string cert_path;
  std::string out_path;
  std::string labeling_path;
  std::string action_path;
  bool involutions = false;

  auto* classify = app.add_subcommand(
      "classify", "decide Schreier-ness, write a classification certificate");
  classify->add_option("graph", graph_path, "graph document")->required();
  classify->add_option("--out", out_path, "output path (default stdout)");

  auto* verify =
      app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", graph_path, "graph document")->required();
  verify->add_option("certificate", cert_path, "certificate document")
      ->required();

  auto* cover =
      app.add_subcommand("cover", "emit the canonical double cover");
  cover->add_option("graph", graph_path, "graph document")->required();
  cover->add_option("--out", out_path, "output path (default stdout)");
  cover->add_option("--cert", cert_path, "also write the covering certificate");

  auto* match =
      app.add_subcommand("match", "report matchability and a maximum matching");
  match->add_option("graph", graph_path, "graph document")->required();
  match->add_option("--out", out_path, "output path (default stdout)");

  auto* factor = app.add_subcommand(
      "factor", "split an even-regular graph into 2-factors");
  factor->add_option("graph", graph_path, "graph document")->required();
  factor->add_option("--out", out_path, "output path (default stdout)");

  auto* label = app.add_subcommand(
      "label", "emit a direct Schreier labeling when one exists");
  label->add_option("graph", graph_path, "graph document")->required();
  label->add_option("--out", out_path, "output path (default stdout)");
  label->add_flag("--involutions", involutions,
                  "all-involutions labeling of a bipartite regular graph");

  auto* orbital = app.add_subcommand(
      "orbital", "build the graph of a permutation action");
  orbital->add_option("action", action_path, "generator document")->required();
  orbital->add_option("--out", out_path, "graph output path (default stdout)");
  orbital->add_option("--cert", cert_path, "labeling output path");

  auto* dot = app.add_subcommand("dot", "export DOT");
  dot->add_option("graph", graph_path, "graph document")->required();
  dot->add_option("--labeling", labeling_path, "labeling certificate");
  dot->add_option("--out", out_path, "output path (default stdout)");

  auto* canon =
      app.add_subcommand("canon", "reserialize a graph in canonical form");
  canon->add_option("graph", graph_path, "graph document")->required();
  canon->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(graph_path, out_path);
    if (app.got_subcommand(verify)) return cmd_verify(graph_path, cert_path);
    if (app.got_subcommand(cover)) {
      return cmd_cover(graph_path, out_path, cert_path);
    }
    if (app.got_subcommand(match)) return cmd_match(graph_path, out_path);
    if (app.got_subcommand(factor)) return cmd_factor(graph_path, out_path);
    if (app.got_subcommand(label)) {
      return cmd_label(graph_path, out_path, involutions);
    }
    if (app.got_subcommand(orbital)) {
      return cmd_orbital(action_path, out_path, cert_path);
    }
    if (app.got_subcommand(dot)) {
      return cmd_dot(graph_path, labeling_path, out_path);
    }
    if (app.got_subcommand(canon)) return cmd_canon(graph_path, out_path);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const heg::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
