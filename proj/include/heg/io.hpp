// Line-oriented text formats: graph documents (heg), certificate documents
// (labeling / covering / classification), permutation action input, and DOT
// export. Serialization is canonical: serialize(parse(text)) is a fixpoint.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "heg/cover.hpp"
#include "heg/graph.hpp"
#include "heg/matching.hpp"
#include "heg/schreier.hpp"

namespace heg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Document: "heg 1", "vertices N", then records "edge u v" | "loop v" |
// "half v" appended in order. '#' lines and blank lines are skipped.
Graph parse_graph(std::string_view text);

// Canonical form: edge records sorted by (min endpoint, max endpoint), then
// loops and half-edges sorted by vertex.
std::string serialize_graph(const Graph& g);

// Rebuilds g with arcs renumbered into record order, the numbering
// parse(serialize(g)) produces. Returns the copy and the old->new arc map.
// Lets certificates built against in-memory graphs survive a round trip
// through the text format.
std::pair<Graph, std::vector<ArcId>> canonical_copy(const Graph& g);

// Applies an old->new arc renumbering (e.g. from canonical_copy) to a
// labeling's arc table.
SchreierLabeling permute_labeling(const SchreierLabeling& l,
                                  const std::vector<ArcId>& perm);

// A cover graph plus its vertex and arc maps onto a target graph supplied
// separately at verification time.
struct CoveringCertificate {
  Graph cover;
  std::vector<VertexId> vertex_map;
  std::vector<ArcId> arc_map;

  friend bool operator==(const CoveringCertificate&,
                         const CoveringCertificate&) = default;
};

enum class Verdict { kDirectSchreier, kNotSchreier, kCoverOnly };

// Flat view of a ClassificationResult, ready for (de)serialization. Which
// fields are present depends on the verdict: direct carries a labeling of the
// input graph; the cover verdicts carry a covering plus the cover's labeling;
// not-schreier additionally carries the maximum matching and its deficiency.
struct ClassificationCertificate {
  Verdict verdict = Verdict::kDirectSchreier;
  std::optional<SchreierLabeling> labeling;
  std::optional<std::size_t> deficiency;
  std::optional<Matching> max_matching;
  std::optional<CoveringCertificate> covering;
  std::optional<SchreierLabeling> cover_labeling;
};

// Both constructors canonicalize the cover graph (and remap the maps and the
// cover labeling to match), so the certificate agrees with its own serialized
// graph section.
CoveringCertificate to_covering_certificate(const CoveringMap& m);
ClassificationCertificate to_certificate(const ClassificationResult& r);

std::string serialize_labeling(const SchreierLabeling& l);
std::string serialize_covering(const CoveringCertificate& c);
std::string serialize_classification(const ClassificationCertificate& c);

using CertificateDocument =
    std::variant<SchreierLabeling, CoveringCertificate,
                 ClassificationCertificate>;

// Dispatches on the "cert <kind>" header line.
CertificateDocument parse_certificate(std::string_view text);

// One generator per line in one-line image notation, e.g. "0: 1 2 3 0"; an
// optional leading "<k>:" tag is ignored and a trailing "inv" token marks the
// generator as an involution. All lines must list the same number of images.
PermutationAction parse_action(std::string_view text);

// One statement per vertex and per edge; loops render as self-arcs and
// half-edges as dotted self-arcs. With a labeling, edges carry a<i> / t<j>
// labels and free edges are written from the a<i>+ side.
std::string export_dot(const Graph& g,
                       const SchreierLabeling* labeling = nullptr);

}  // namespace heg
