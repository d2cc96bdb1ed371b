#include "heg/schreier.hpp"

#include <charconv>
#include <stdexcept>

namespace heg {

namespace {

using Kind = GeneratorLetter::Kind;

GeneratorLetter letter_from_ordinal(std::size_t k, std::size_t free_rank) {
  if (k < 2 * free_rank) {
    return {k % 2 == 0 ? Kind::kFreePlus : Kind::kFreeMinus,
            static_cast<std::uint32_t>(k / 2)};
  }
  return {Kind::kInvolution, static_cast<std::uint32_t>(k - 2 * free_rank)};
}

bool parse_index(std::string_view text, std::uint32_t& out) {
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size();
}

}  // namespace

GeneratorLetter GeneratorLetter::inverse() const {
  switch (kind) {
    case Kind::kFreePlus:
      return {Kind::kFreeMinus, index};
    case Kind::kFreeMinus:
      return {Kind::kFreePlus, index};
    case Kind::kInvolution:
      return *this;
  }
  throw std::logic_error("corrupt letter kind");
}

std::size_t letter_ordinal(const GeneratorLetter& x, std::size_t free_rank) {
  switch (x.kind) {
    case Kind::kFreePlus:
      return 2 * static_cast<std::size_t>(x.index);
    case Kind::kFreeMinus:
      return 2 * static_cast<std::size_t>(x.index) + 1;
    case Kind::kInvolution:
      return 2 * free_rank + x.index;
  }
  throw std::logic_error("corrupt letter kind");
}

std::string to_string(const GeneratorLetter& x) {
  switch (x.kind) {
    case Kind::kFreePlus:
      return "a" + std::to_string(x.index) + "+";
    case Kind::kFreeMinus:
      return "a" + std::to_string(x.index) + "-";
    case Kind::kInvolution:
      return "t" + std::to_string(x.index);
  }
  throw std::logic_error("corrupt letter kind");
}

std::optional<GeneratorLetter> parse_letter(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  std::uint32_t index = 0;
  if (text.front() == 't') {
    if (!parse_index(text.substr(1), index)) return std::nullopt;
    return GeneratorLetter{Kind::kInvolution, index};
  }
  if (text.front() == 'a') {
    const char sign = text.back();
    if (sign != '+' && sign != '-') return std::nullopt;
    if (!parse_index(text.substr(1, text.size() - 2), index)) {
      return std::nullopt;
    }
    return GeneratorLetter{sign == '+' ? Kind::kFreePlus : Kind::kFreeMinus,
                           index};
  }
  return std::nullopt;
}

SchreierLabeling label_from_factorization(
    const Graph& g, const std::vector<TwoFactor>& factors,
    const std::vector<Matching>& matchings) {
  CoveringMap cm = cover_to_bouquet(g, factors, matchings);
  const std::size_t d = factors.size();
  SchreierLabeling l;
  l.signature = {d, matchings.size()};
  l.label.resize(g.arc_count());
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    l.label[e] = letter_from_ordinal(cm.arc_map[e], d);
  }
  return l;
}

std::vector<std::string> verify_labeling(const Graph& g,
                                         const SchreierLabeling& l) {
  std::vector<std::string> out;
  if (l.label.size() != g.arc_count()) {
    out.push_back("label table size mismatch");
    return out;
  }
  const std::size_t d = l.signature.free_rank;
  const std::size_t ni = l.signature.involution_count;

  std::vector<bool> in_range(g.arc_count(), true);
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const GeneratorLetter& x = l.label[e];
    const std::size_t bound = x.kind == Kind::kInvolution ? ni : d;
    if (x.index >= bound) {
      out.push_back("arc " + std::to_string(e) + ": letter index out of range");
      in_range[e] = false;
      continue;
    }
    if (g.is_half_edge(e) && x.kind != Kind::kInvolution) {
      out.push_back("arc " + std::to_string(e) +
                    ": half-edge needs an involution letter");
    }
    if (e < g.inv(e) && in_range[g.inv(e)] &&
        l.label[g.inv(e)] != x.inverse()) {
      out.push_back("arc " + std::to_string(e) +
                    ": inverse arc carries a non-inverse letter");
    }
  }

  const std::size_t letters = 2 * d + ni;
  std::vector<std::size_t> count(letters);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (ArcId a : star(g, v)) {
      if (in_range[a]) ++count[letter_ordinal(l.label[a], d)];
    }
    for (std::size_t k = 0; k < letters; ++k) {
      if (count[k] != 1) {
        out.push_back("vertex " + std::to_string(v) + ": letter " +
                      to_string(letter_from_ordinal(k, d)) + " appears " +
                      std::to_string(count[k]) +
                      " times in star, expected exactly once");
      }
    }
  }
  return out;
}

PermutationAction action_from_labeling(const Graph& g,
                                       const SchreierLabeling& l) {
  if (!verify_labeling(g, l).empty()) {
    throw std::invalid_argument("labeling does not verify");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("graph is not connected");
  }
  const std::size_t n = g.vertex_count();
  PermutationAction act;
  act.set_size = n;
  act.free_gens.assign(l.signature.free_rank,
                       std::vector<VertexId>(n, kNoVertex));
  act.inv_gens.assign(l.signature.involution_count,
                      std::vector<VertexId>(n, kNoVertex));
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    const GeneratorLetter& x = l.label[e];
    if (x.kind == Kind::kFreePlus) {
      act.free_gens[x.index][g.iota(e)] = g.tau(e);
    } else if (x.kind == Kind::kInvolution) {
      act.inv_gens[x.index][g.iota(e)] = g.tau(e);
    }
  }

  auto is_permutation = [n](const std::vector<VertexId>& p) {
    std::vector<bool> hit(n, false);
    for (VertexId y : p) {
      if (y >= n || hit[y]) return false;
      hit[y] = true;
    }
    return true;
  };
  for (const auto& p : act.free_gens) {
    if (!is_permutation(p)) {
      throw std::logic_error("free generator is not a permutation");
    }
  }
  for (const auto& p : act.inv_gens) {
    if (!is_permutation(p)) {
      throw std::logic_error("involution generator is not a permutation");
    }
    for (VertexId x = 0; x < n; ++x) {
      if (p[p[x]] != x) {
        throw std::logic_error(
            "involution generator does not square to identity");
      }
    }
  }

  // Transitivity mirrors connectivity of g; re-derive it from the
  // permutations alone.
  std::vector<bool> seen(n, false);
  std::vector<VertexId> queue{0};
  seen[0] = true;
  auto visit = [&](VertexId y) {
    if (!seen[y]) {
      seen[y] = true;
      queue.push_back(y);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (const auto& p : act.free_gens) visit(p[x]);
    for (const auto& p : act.inv_gens) visit(p[x]);
    for (const auto& p : act.free_gens) {
      for (VertexId w = 0; w < n; ++w) {
        if (p[w] == x) visit(w);
      }
    }
  }
  if (queue.size() != n) {
    throw std::logic_error("action is not transitive");
  }
  return act;
}

std::pair<Graph, SchreierLabeling> orbital_graph(const PermutationAction& a) {
  const std::size_t n = a.set_size;
  if (n == 0) throw std::invalid_argument("action on an empty set");

  auto is_permutation = [n](const std::vector<VertexId>& p) {
    if (p.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (VertexId y : p) {
      if (y >= n || hit[y]) return false;
      hit[y] = true;
    }
    return true;
  };
  for (const auto& p : a.free_gens) {
    if (!is_permutation(p)) {
      throw std::invalid_argument("free generator is not a permutation");
    }
  }
  for (const auto& p : a.inv_gens) {
    if (!is_permutation(p)) {
      throw std::invalid_argument("involution generator is not a permutation");
    }
    for (VertexId x = 0; x < n; ++x) {
      if (p[p[x]] != x) {
        throw std::invalid_argument(
            "non-involutive permutation flagged as involution");
      }
    }
  }

  Graph g(n);
  std::vector<GeneratorLetter> labels;
  for (std::uint32_t i = 0; i < a.free_gens.size(); ++i) {
    for (VertexId x = 0; x < n; ++x) {
      const VertexId y = a.free_gens[i][x];
      if (y == x) {
        g.add_loop(x);
      } else {
        g.add_edge(x, y);
      }
      labels.push_back({Kind::kFreePlus, i});
      labels.push_back({Kind::kFreeMinus, i});
    }
  }
  for (std::uint32_t j = 0; j < a.inv_gens.size(); ++j) {
    for (VertexId x = 0; x < n; ++x) {
      const VertexId y = a.inv_gens[j][x];
      if (y == x) {
        g.add_half_edge(x);
        labels.push_back({Kind::kInvolution, j});
      } else if (x < y) {
        g.add_edge(x, y);
        labels.push_back({Kind::kInvolution, j});
        labels.push_back({Kind::kInvolution, j});
      }
    }
  }

  SchreierLabeling l{{a.free_gens.size(), a.inv_gens.size()},
                     std::move(labels)};
  if (!verify_labeling(g, l).empty()) {
    throw std::logic_error("orbital graph labeling does not verify");
  }
  return {std::move(g), std::move(l)};
}

SchreierLabeling label_bipartite_involutions(const Graph& g,
                                             const Bipartition& b) {
  auto deg = regularity(g);
  if (!deg) throw std::invalid_argument("graph is not regular");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");

  SchreierLabeling l;
  l.signature = {0, *deg};
  l.label.assign(g.arc_count(), {});
  std::vector<Matching> matchings = orthogonal_matchings(g, b, *deg);
  for (std::uint32_t j = 0; j < matchings.size(); ++j) {
    for (EdgeId c : matchings[j].edges) {
      l.label[c] = {Kind::kInvolution, j};
      l.label[g.inv(c)] = {Kind::kInvolution, j};
    }
  }
  if (!verify_labeling(g, l).empty()) {
    throw std::logic_error("involution labeling does not verify");
  }
  return l;
}

namespace {

// Labels g with one perfect matching as t0 and a 2-factorization of the
// remainder as the free part.
SchreierLabeling label_with_matching(const Graph& g, const Matching& m) {
  RemovedMatching rem = remove_matching(g, m);
  std::vector<ArcId> new_to_old(rem.graph.arc_count(), kNoArc);
  for (ArcId e = 0; e < g.arc_count(); ++e) {
    if (rem.arc_map[e] != kNoArc) new_to_old[rem.arc_map[e]] = e;
  }
  std::vector<TwoFactor> factors = two_factorization(rem.graph);
  for (TwoFactor& f : factors) {
    for (ArcId& a : f.successor) a = new_to_old[a];
  }
  return label_from_factorization(g, factors, {m});
}

// Parity-minimal labeling of a connected regular graph without half-edges
// whose odd-degree case is guaranteed matchable (regular bipartite covers).
SchreierLabeling label_cover(const Graph& cover) {
  const std::size_t deg = *regularity(cover);
  if (deg % 2 == 0) {
    return label_from_factorization(cover, two_factorization(cover), {});
  }
  auto b = bipartition(cover);
  if (!b) throw std::logic_error("double cover is not bipartite");
  Matching m = max_matching_bipartite(cover, *b);
  if (2 * m.edges.size() != cover.vertex_count()) {
    throw std::logic_error("regular bipartite cover has no perfect matching");
  }
  return label_with_matching(cover, m);
}

}  // namespace

ClassificationResult classify(const Graph& g) {
  if (auto errs = validate(g); !errs.empty()) {
    throw std::invalid_argument("invalid graph: " + errs.front());
  }
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("graph is empty");
  }
  auto deg = regularity(g);
  if (!deg) {
    throw std::invalid_argument("graph is not regular");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("a Schreier graph is necessarily connected");
  }

  if (has_half_edge(g)) {
    auto [cover, cm] = canonical_double_cover(g);
    if (!is_connected(cover)) {
      throw std::logic_error("double cover of a half-edge graph must connect");
    }
    SchreierLabeling cl = label_cover(cover);
    return CoverOnly{std::move(cm), std::move(cl)};
  }

  if (*deg % 2 == 0) {
    return DirectSchreier{
        label_from_factorization(g, two_factorization(g), {})};
  }

  MatchabilityCertificate cert = is_matchable(g);
  if (cert.matchable) {
    return DirectSchreier{label_with_matching(g, cert.matching)};
  }

  // Odd-regular bipartite graphs are matchable, so this branch only sees
  // non-bipartite inputs, whose double cover stays connected.
  if (bipartition(g)) {
    throw std::logic_error("regular bipartite graph reported unmatchable");
  }
  auto [cover, cm] = canonical_double_cover(g);
  if (!is_connected(cover)) {
    throw std::logic_error("double cover of a non-bipartite graph must connect");
  }
  SchreierLabeling cl = label_cover(cover);
  return NotSchreierWithCover{std::move(cert), std::move(cm), std::move(cl)};
}

bool labelings_agree(const Graph& a, const SchreierLabeling& la,
                     const Graph& b, const SchreierLabeling& lb) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (la.signature != lb.signature) return false;
  if (la.label.size() != a.arc_count() || lb.label.size() != b.arc_count()) {
    return false;
  }
  const std::size_t letters = la.signature.degree();
  const std::size_t d = la.signature.free_rank;
  auto endpoint_table = [&](const Graph& g, const SchreierLabeling& l) {
    std::vector<VertexId> table(g.vertex_count() * letters, kNoVertex);
    for (ArcId e = 0; e < g.arc_count(); ++e) {
      table[g.iota(e) * letters + letter_ordinal(l.label[e], d)] = g.tau(e);
    }
    return table;
  };
  return endpoint_table(a, la) == endpoint_table(b, lb);
}

}  // namespace heg
