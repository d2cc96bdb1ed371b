// Schreier labelings over groups F_d * (Z/2Z)^{*n}: construction from
// factorizations, verification, the correspondence with permutation actions,
// and the classification trichotomy (direct labeling, non-matchability
// witness with a labeled double cover, or cover-only for half-edge inputs).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "heg/cover.hpp"
#include "heg/factorization.hpp"
#include "heg/graph.hpp"
#include "heg/matching.hpp"

namespace heg {

// F_d * (Z/2Z)^{*n}: a rank-d free group with n order-2 factors. Its labeled
// graphs are exactly (2d + n)-regular.
struct GroupSignature {
  std::size_t free_rank = 0;
  std::size_t involution_count = 0;

  std::size_t degree() const { return 2 * free_rank + involution_count; }

  friend bool operator==(const GroupSignature&,
                         const GroupSignature&) = default;
};

// One generator or its inverse: a<i>+ / a<i>- for the free part, t<j> for the
// self-inverse involutions.
struct GeneratorLetter {
  enum class Kind : std::uint8_t { kFreePlus, kFreeMinus, kInvolution };

  Kind kind = Kind::kFreePlus;
  std::uint32_t index = 0;

  GeneratorLetter inverse() const;

  friend bool operator==(const GeneratorLetter&,
                         const GeneratorLetter&) = default;
};

// Dense rank: free letters first as +/- pairs, involutions after. Ranges over
// [0, 2 * free_rank + involution_count).
std::size_t letter_ordinal(const GeneratorLetter& x, std::size_t free_rank);

std::string to_string(const GeneratorLetter& x);
// Accepts exactly the to_string forms ("a3+", "t0", ...).
std::optional<GeneratorLetter> parse_letter(std::string_view text);

// Arc labeling certifying a graph as the orbital graph of an action. Valid
// when inverse arcs carry inverse letters, half-edges carry involution
// letters, and every letter appears exactly once in every star.
struct SchreierLabeling {
  GroupSignature signature;
  std::vector<GeneratorLetter> label;  // indexed by arc id

  friend bool operator==(const SchreierLabeling&,
                         const SchreierLabeling&) = default;
};

// Generators as one-line permutations of [0, set_size).
struct PermutationAction {
  std::size_t set_size = 0;
  std::vector<std::vector<VertexId>> free_gens;
  std::vector<std::vector<VertexId>> inv_gens;  // each squares to identity

  friend bool operator==(const PermutationAction&,
                         const PermutationAction&) = default;
};

// Labels factor i with a<i> (successor arcs get +) and matching j with t<j>.
// The factors and matchings must partition the edges; throws
// std::invalid_argument otherwise. The result always verifies.
SchreierLabeling label_from_factorization(const Graph& g,
                                          const std::vector<TwoFactor>& factors,
                                          const std::vector<Matching>& matchings);

// One message per violated labeling condition; empty result certifies g as a
// Schreier graph of the signature's group.
std::vector<std::string> verify_labeling(const Graph& g,
                                         const SchreierLabeling& l);

// Reads the action back off a labeled graph: free generator i sends v to the
// endpoint of the a<i>+ arc at v, involution j pairs vertices along t<j>
// edges and fixes half-edge vertices. Requires a valid labeling on a
// connected graph (the action is then transitive).
PermutationAction action_from_labeling(const Graph& g,
                                       const SchreierLabeling& l);

// Graph of the action: one vertex per point, a labeled arc pair per free
// generator application (fixed point becomes a loop), one edge per involution
// orbit pair, and a half-edge per involution fixed point.
std::pair<Graph, SchreierLabeling> orbital_graph(const PermutationAction& a);

// All-involutions labeling of a connected d-regular bipartite graph:
// d orthogonal perfect matchings labeled t0..t(d-1), signature (0, d).
SchreierLabeling label_bipartite_involutions(const Graph& g,
                                             const Bipartition& b);

struct DirectSchreier {
  SchreierLabeling labeling;
};

// The graph is certified not Schreier by an imperfect maximum matching; the
// canonical double cover is Schreier-labeled instead.
struct NotSchreierWithCover {
  MatchabilityCertificate certificate;  // deficiency > 0
  CoveringMap cover;
  SchreierLabeling cover_labeling;
};

// Half-edge inputs: direct Schreier-ness is not decided, only the labeled
// double cover is produced.
struct CoverOnly {
  CoveringMap cover;
  SchreierLabeling cover_labeling;
};

using ClassificationResult =
    std::variant<DirectSchreier, NotSchreierWithCover, CoverOnly>;

// Trichotomy for a connected regular graph g:
//   - no half-edges, even degree 2d: DirectSchreier over F_d
//   - no half-edges, odd degree, matchable: DirectSchreier over
//     F_d * (Z/2Z), one matching as t0
//   - no half-edges, odd degree, not matchable: NotSchreierWithCover
//   - any half-edge: CoverOnly
// Cover labelings use the parity-minimal signature of the cover's degree.
// Throws std::invalid_argument on empty, invalid, non-regular, or
// disconnected input.
ClassificationResult classify(const Graph& g);

// True when both labelings induce the same (vertex, letter) -> endpoint
// table: for every vertex v and letter x, the x-arc at v ends at the same
// vertex in both graphs. Both labelings must be valid for the table to be
// well defined.
bool labelings_agree(const Graph& a, const SchreierLabeling& la,
                     const Graph& b, const SchreierLabeling& lb);

}  // namespace heg
