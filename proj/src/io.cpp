#include "heg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <utility>

namespace heg {

namespace {

using Kind = GeneratorLetter::Kind;

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Token lines with 1-based numbers; blank lines and '#' comments dropped.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos
            ? text.substr(pos)
            : text.substr(pos, nl - pos);
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{lineno, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens[0][0] != '#') {
      lines.push_back(std::move(line));
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::size_t line_at(const std::vector<Line>& lines, std::size_t i) {
  if (i < lines.size()) return lines[i].number;
  return lines.empty() ? 1 : lines.back().number + 1;
}

std::uint64_t parse_number(const Line& line, std::string_view token,
                           const char* what) {
  std::uint64_t value = 0;
  auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line.number, std::string("malformed ") + what + " '" +
                                      std::string(token) + "'");
  }
  return value;
}

// Ids that must fit the 32-bit id types, with the top value reserved.
std::uint32_t parse_id32(const Line& line, std::string_view token,
                         const char* what) {
  const std::uint64_t value = parse_number(line, token, what);
  if (value >= kNoVertex) {
    throw ParseError(line.number,
                     std::string(what) + " " + std::string(token) + " too large");
  }
  return static_cast<std::uint32_t>(value);
}

VertexId parse_vertex(const Line& line, std::string_view token,
                      std::size_t vertex_count) {
  const std::uint64_t v = parse_number(line, token, "vertex");
  if (v >= vertex_count) {
    throw ParseError(line.number,
                     "vertex " + std::to_string(v) + " out of range");
  }
  return static_cast<VertexId>(v);
}

// "vertices N" plus edge/loop/half records. With a terminator, consumes the
// matching "end <terminator>" line; otherwise runs to the end of input.
Graph parse_graph_body(const std::vector<Line>& lines, std::size_t& i,
                       const char* terminator) {
  if (i >= lines.size() || lines[i].tokens[0] != "vertices" ||
      lines[i].tokens.size() != 2) {
    throw ParseError(line_at(lines, i), "expected 'vertices <count>'");
  }
  const std::uint64_t n =
      parse_number(lines[i], lines[i].tokens[1], "vertex count");
  if (n >= kNoVertex) {
    throw ParseError(lines[i].number, "vertex count too large");
  }
  ++i;
  Graph g(static_cast<std::size_t>(n));
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string_view kw = line.tokens[0];
    if (terminator && kw == "end") {
      if (line.tokens.size() == 2 && line.tokens[1] == terminator) {
        ++i;
        return g;
      }
      throw ParseError(line.number, "mismatched section end");
    }
    if (kw == "edge") {
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'edge <u> <v>'");
      }
      g.add_edge(parse_vertex(line, line.tokens[1], g.vertex_count()),
                 parse_vertex(line, line.tokens[2], g.vertex_count()));
    } else if (kw == "loop") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected 'loop <v>'");
      }
      g.add_loop(parse_vertex(line, line.tokens[1], g.vertex_count()));
    } else if (kw == "half") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "expected 'half <v>'");
      }
      g.add_half_edge(parse_vertex(line, line.tokens[1], g.vertex_count()));
    } else {
      throw ParseError(line.number,
                       "unknown record '" + std::string(kw) + "'");
    }
    ++i;
  }
  if (terminator) {
    throw ParseError(line_at(lines, i), "unterminated graph section");
  }
  return g;
}

void append_graph_body(std::string& out, const Graph& g) {
  out += "vertices " + std::to_string(g.vertex_count()) + "\n";
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> loops;
  std::vector<VertexId> halves;
  for (EdgeId c : edge_list(g)) {
    if (g.is_half_edge(c)) {
      halves.push_back(g.iota(c));
    } else if (g.is_loop(c)) {
      loops.push_back(g.iota(c));
    } else {
      edges.push_back({std::min(g.iota(c), g.tau(c)),
                       std::max(g.iota(c), g.tau(c))});
    }
  }
  std::sort(edges.begin(), edges.end());
  std::sort(loops.begin(), loops.end());
  std::sort(halves.begin(), halves.end());
  for (const auto& [u, v] : edges) {
    out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  for (VertexId v : loops) out += "loop " + std::to_string(v) + "\n";
  for (VertexId v : halves) out += "half " + std::to_string(v) + "\n";
}

void expect_begin(const std::vector<Line>& lines, std::size_t& i,
                  const char* section) {
  if (i >= lines.size() || lines[i].tokens.size() != 2 ||
      lines[i].tokens[0] != "begin" || lines[i].tokens[1] != section) {
    throw ParseError(line_at(lines, i),
                     std::string("expected 'begin ") + section + "'");
  }
  ++i;
}

void append_labeling_body(std::string& out, const SchreierLabeling& l) {
  out += "signature " + std::to_string(l.signature.free_rank) + " " +
         std::to_string(l.signature.involution_count) + "\n";
  for (std::size_t e = 0; e < l.label.size(); ++e) {
    out += "arc " + std::to_string(e) + " " + to_string(l.label[e]) + "\n";
  }
}

SchreierLabeling parse_labeling_body(const std::vector<Line>& lines,
                                     std::size_t& i, const char* terminator) {
  if (i >= lines.size() || lines[i].tokens[0] != "signature" ||
      lines[i].tokens.size() != 3) {
    throw ParseError(line_at(lines, i),
                     "expected 'signature <free rank> <involution count>'");
  }
  SchreierLabeling l;
  l.signature.free_rank =
      parse_number(lines[i], lines[i].tokens[1], "free rank");
  l.signature.involution_count =
      parse_number(lines[i], lines[i].tokens[2], "involution count");
  ++i;
  while (i < lines.size()) {
    const Line& line = lines[i];
    if (terminator && line.tokens[0] == "end") {
      if (line.tokens.size() == 2 && line.tokens[1] == terminator) {
        ++i;
        return l;
      }
      throw ParseError(line.number, "mismatched section end");
    }
    if (line.tokens[0] != "arc" || line.tokens.size() != 3) {
      throw ParseError(line.number, "expected 'arc <id> <letter>'");
    }
    if (parse_number(line, line.tokens[1], "arc id") != l.label.size()) {
      throw ParseError(line.number, "arc records must be dense and ascending");
    }
    const auto letter = parse_letter(line.tokens[2]);
    if (!letter) {
      throw ParseError(line.number, "malformed letter '" +
                                        std::string(line.tokens[2]) + "'");
    }
    l.label.push_back(*letter);
    ++i;
  }
  if (terminator) {
    throw ParseError(line_at(lines, i), "unterminated labeling section");
  }
  return l;
}

void append_cover_sections(std::string& out, const CoveringCertificate& c) {
  out += "begin graph\n";
  append_graph_body(out, c.cover);
  out += "end graph\nbegin covering\n";
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v) {
    out += "v " + std::to_string(v) + " " + std::to_string(c.vertex_map[v]) +
           "\n";
  }
  for (std::size_t e = 0; e < c.arc_map.size(); ++e) {
    out += "a " + std::to_string(e) + " " + std::to_string(c.arc_map[e]) + "\n";
  }
  out += "end covering\n";
}

CoveringCertificate parse_cover_sections(const std::vector<Line>& lines,
                                         std::size_t& i) {
  expect_begin(lines, i, "graph");
  CoveringCertificate c{parse_graph_body(lines, i, "graph"), {}, {}};
  expect_begin(lines, i, "covering");
  bool closed = false;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string_view kw = line.tokens[0];
    if (kw == "end") {
      if (line.tokens.size() == 2 && line.tokens[1] == "covering") {
        ++i;
        closed = true;
        break;
      }
      throw ParseError(line.number, "mismatched section end");
    }
    if (kw == "v") {
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'v <source> <target>'");
      }
      if (!c.arc_map.empty()) {
        throw ParseError(line.number,
                         "vertex map records must precede arc map records");
      }
      if (parse_number(line, line.tokens[1], "vertex") !=
          c.vertex_map.size()) {
        throw ParseError(line.number,
                         "vertex map records must be dense and ascending");
      }
      c.vertex_map.push_back(parse_id32(line, line.tokens[2], "vertex"));
    } else if (kw == "a") {
      if (line.tokens.size() != 3) {
        throw ParseError(line.number, "expected 'a <source> <target>'");
      }
      if (parse_number(line, line.tokens[1], "arc") != c.arc_map.size()) {
        throw ParseError(line.number,
                         "arc map records must be dense and ascending");
      }
      c.arc_map.push_back(parse_id32(line, line.tokens[2], "arc"));
    } else {
      throw ParseError(line.number,
                       "unknown record '" + std::string(kw) + "'");
    }
    ++i;
  }
  if (!closed) {
    throw ParseError(line_at(lines, i), "unterminated covering section");
  }
  if (c.vertex_map.size() != c.cover.vertex_count()) {
    throw ParseError(line_at(lines, i - 1),
                     "vertex map does not cover every vertex");
  }
  if (c.arc_map.size() != c.cover.arc_count()) {
    throw ParseError(line_at(lines, i - 1),
                     "arc map does not cover every arc");
  }
  return c;
}

Matching parse_matching_body(const std::vector<Line>& lines, std::size_t& i) {
  Matching m;
  while (i < lines.size()) {
    const Line& line = lines[i];
    if (line.tokens[0] == "end") {
      if (line.tokens.size() == 2 && line.tokens[1] == "matching") {
        ++i;
        return m;
      }
      throw ParseError(line.number, "mismatched section end");
    }
    if (line.tokens[0] != "arc" || line.tokens.size() != 2) {
      throw ParseError(line.number, "expected 'arc <id>'");
    }
    const EdgeId id = parse_id32(line, line.tokens[1], "arc");
    if (!m.edges.empty() && id <= m.edges.back()) {
      throw ParseError(line.number, "matching arcs must be ascending");
    }
    m.edges.push_back(id);
    ++i;
  }
  throw ParseError(line_at(lines, i), "unterminated matching section");
}

const char* verdict_word(Verdict v) {
  switch (v) {
    case Verdict::kDirectSchreier:
      return "direct";
    case Verdict::kNotSchreier:
      return "not-schreier";
    case Verdict::kCoverOnly:
      return "cover-only";
  }
  throw std::logic_error("corrupt verdict");
}

}  // namespace

std::pair<Graph, std::vector<ArcId>> canonical_copy(const Graph& g) {
  struct Rec {
    int kind;  // 0 edge, 1 loop, 2 half-edge: record-block order
    VertexId u;
    VertexId v;
    EdgeId c;
  };
  std::vector<Rec> recs;
  for (EdgeId c : edge_list(g)) {
    if (g.is_half_edge(c)) {
      recs.push_back({2, g.iota(c), g.iota(c), c});
    } else if (g.is_loop(c)) {
      recs.push_back({1, g.iota(c), g.iota(c), c});
    } else {
      recs.push_back({0, std::min(g.iota(c), g.tau(c)),
                      std::max(g.iota(c), g.tau(c)), c});
    }
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    return std::tie(a.kind, a.u, a.v, a.c) < std::tie(b.kind, b.u, b.v, b.c);
  });

  Graph out(g.vertex_count());
  std::vector<ArcId> perm(g.arc_count(), kNoArc);
  for (const Rec& r : recs) {
    switch (r.kind) {
      case 0: {
        const ArcId k = out.add_edge(r.u, r.v);
        if (g.iota(r.c) == r.u) {
          perm[r.c] = k;
          perm[g.inv(r.c)] = k + 1;
        } else {
          perm[r.c] = k + 1;
          perm[g.inv(r.c)] = k;
        }
        break;
      }
      case 1: {
        const ArcId k = out.add_loop(r.u);
        perm[r.c] = k;
        perm[g.inv(r.c)] = k + 1;
        break;
      }
      default:
        perm[r.c] = out.add_half_edge(r.u);
    }
  }
  return {std::move(out), std::move(perm)};
}

namespace {

std::pair<CoveringCertificate, std::vector<ArcId>> canonical_cover_cert(
    const CoveringMap& m) {
  auto [canon, perm] = canonical_copy(m.source);
  std::vector<ArcId> arc_map(m.arc_map.size(), kNoArc);
  for (ArcId a = 0; a < m.arc_map.size(); ++a) {
    arc_map[perm[a]] = m.arc_map[a];
  }
  return {CoveringCertificate{std::move(canon), m.vertex_map,
                              std::move(arc_map)},
          std::move(perm)};
}

}  // namespace

SchreierLabeling permute_labeling(const SchreierLabeling& l,
                                  const std::vector<ArcId>& perm) {
  if (perm.size() != l.label.size()) {
    throw std::invalid_argument("permutation does not match the labeling");
  }
  SchreierLabeling out;
  out.signature = l.signature;
  out.label.resize(l.label.size());
  for (ArcId a = 0; a < l.label.size(); ++a) {
    out.label[perm[a]] = l.label[a];
  }
  return out;
}

CoveringCertificate to_covering_certificate(const CoveringMap& m) {
  return canonical_cover_cert(m).first;
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "heg" ||
      lines[0].tokens.size() != 2) {
    throw ParseError(line_at(lines, 0), "expected header 'heg 1'");
  }
  if (lines[0].tokens[1] != "1") {
    throw ParseError(lines[0].number, "unsupported format version '" +
                                          std::string(lines[0].tokens[1]) +
                                          "'");
  }
  std::size_t i = 1;
  return parse_graph_body(lines, i, nullptr);
}

std::string serialize_graph(const Graph& g) {
  std::string out = "heg 1\n";
  append_graph_body(out, g);
  return out;
}

ClassificationCertificate to_certificate(const ClassificationResult& r) {
  ClassificationCertificate c;
  if (const auto* direct = std::get_if<DirectSchreier>(&r)) {
    c.verdict = Verdict::kDirectSchreier;
    c.labeling = direct->labeling;
  } else if (const auto* ns = std::get_if<NotSchreierWithCover>(&r)) {
    c.verdict = Verdict::kNotSchreier;
    c.deficiency = ns->certificate.deficiency;
    c.max_matching = ns->certificate.matching;
    auto [cert, perm] = canonical_cover_cert(ns->cover);
    c.covering = std::move(cert);
    c.cover_labeling = permute_labeling(ns->cover_labeling, perm);
  } else {
    const auto& co = std::get<CoverOnly>(r);
    c.verdict = Verdict::kCoverOnly;
    auto [cert, perm] = canonical_cover_cert(co.cover);
    c.covering = std::move(cert);
    c.cover_labeling = permute_labeling(co.cover_labeling, perm);
  }
  return c;
}

std::string serialize_labeling(const SchreierLabeling& l) {
  std::string out = "cert labeling\n";
  append_labeling_body(out, l);
  return out;
}

std::string serialize_covering(const CoveringCertificate& c) {
  std::string out = "cert covering\n";
  append_cover_sections(out, c);
  return out;
}

std::string serialize_classification(const ClassificationCertificate& c) {
  std::string out = "cert classification\nverdict ";
  out += verdict_word(c.verdict);
  out += "\n";
  if (c.verdict == Verdict::kDirectSchreier) {
    if (!c.labeling) {
      throw std::invalid_argument("direct verdict without a labeling");
    }
    out += "begin labeling\n";
    append_labeling_body(out, *c.labeling);
    out += "end labeling\n";
    return out;
  }
  if (c.verdict == Verdict::kNotSchreier) {
    if (!c.deficiency || !c.max_matching) {
      throw std::invalid_argument(
          "not-schreier verdict without a matching witness");
    }
    out += "deficiency " + std::to_string(*c.deficiency) + "\n";
    out += "begin matching\n";
    for (EdgeId e : c.max_matching->edges) {
      out += "arc " + std::to_string(e) + "\n";
    }
    out += "end matching\n";
  }
  if (!c.covering || !c.cover_labeling) {
    throw std::invalid_argument("cover verdict without a labeled covering");
  }
  append_cover_sections(out, *c.covering);
  out += "begin labeling\n";
  append_labeling_body(out, *c.cover_labeling);
  out += "end labeling\n";
  return out;
}

CertificateDocument parse_certificate(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "cert" ||
      lines[0].tokens.size() != 2) {
    throw ParseError(line_at(lines, 0), "expected header 'cert <kind>'");
  }
  const std::string_view kind = lines[0].tokens[1];
  std::size_t i = 1;
  if (kind == "labeling") {
    return parse_labeling_body(lines, i, nullptr);
  }
  if (kind == "covering") {
    CoveringCertificate c = parse_cover_sections(lines, i);
    if (i != lines.size()) {
      throw ParseError(lines[i].number, "unexpected trailing content");
    }
    return c;
  }
  if (kind == "classification") {
    if (i >= lines.size() || lines[i].tokens[0] != "verdict" ||
        lines[i].tokens.size() != 2) {
      throw ParseError(line_at(lines, i), "expected 'verdict <word>'");
    }
    ClassificationCertificate c;
    const std::string_view word = lines[i].tokens[1];
    if (word == "direct") {
      c.verdict = Verdict::kDirectSchreier;
    } else if (word == "not-schreier") {
      c.verdict = Verdict::kNotSchreier;
    } else if (word == "cover-only") {
      c.verdict = Verdict::kCoverOnly;
    } else {
      throw ParseError(lines[i].number,
                       "unknown verdict '" + std::string(word) + "'");
    }
    ++i;
    if (c.verdict == Verdict::kDirectSchreier) {
      expect_begin(lines, i, "labeling");
      c.labeling = parse_labeling_body(lines, i, "labeling");
    } else {
      if (c.verdict == Verdict::kNotSchreier) {
        if (i >= lines.size() || lines[i].tokens[0] != "deficiency" ||
            lines[i].tokens.size() != 2) {
          throw ParseError(line_at(lines, i), "expected 'deficiency <count>'");
        }
        c.deficiency = parse_number(lines[i], lines[i].tokens[1],
                                    "deficiency");
        ++i;
        expect_begin(lines, i, "matching");
        c.max_matching = parse_matching_body(lines, i);
      }
      c.covering = parse_cover_sections(lines, i);
      expect_begin(lines, i, "labeling");
      c.cover_labeling = parse_labeling_body(lines, i, "labeling");
    }
    if (i != lines.size()) {
      throw ParseError(lines[i].number, "unexpected trailing content");
    }
    return c;
  }
  throw ParseError(lines[0].number,
                   "unknown certificate kind '" + std::string(kind) + "'");
}

PermutationAction parse_action(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "no generators");
  PermutationAction a;
  bool first = true;
  for (const Line& line : lines) {
    std::size_t begin = 0;
    std::size_t end = line.tokens.size();
    if (line.tokens[begin].back() == ':') ++begin;
    bool involution = false;
    if (end > begin && line.tokens[end - 1] == "inv") {
      involution = true;
      --end;
    }
    if (end == begin) {
      throw ParseError(line.number, "generator line has no images");
    }
    std::vector<VertexId> images;
    images.reserve(end - begin);
    for (std::size_t k = begin; k < end; ++k) {
      images.push_back(parse_id32(line, line.tokens[k], "image"));
    }
    if (first) {
      a.set_size = images.size();
      first = false;
    } else if (images.size() != a.set_size) {
      throw ParseError(line.number,
                       "generator line has the wrong number of images");
    }
    (involution ? a.inv_gens : a.free_gens).push_back(std::move(images));
  }
  return a;
}

std::string export_dot(const Graph& g, const SchreierLabeling* labeling) {
  if (labeling && labeling->label.size() != g.arc_count()) {
    throw std::invalid_argument("labeling does not match the graph");
  }
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (EdgeId c : edge_list(g)) {
    VertexId u = g.iota(c);
    VertexId w = g.tau(c);
    std::string text;
    if (labeling) {
      GeneratorLetter x = labeling->label[c];
      if (x.kind == Kind::kFreeMinus) {
        // Write free edges from the forward side.
        u = g.iota(g.inv(c));
        w = g.tau(g.inv(c));
        x = x.inverse();
      }
      text = (x.kind == Kind::kInvolution ? "t" : "a") +
             std::to_string(x.index);
    }
    out += "  " + std::to_string(u) + " -- " + std::to_string(w);
    if (g.is_half_edge(c) && !text.empty()) {
      out += " [style=dotted, label=\"" + text + "\"]";
    } else if (g.is_half_edge(c)) {
      out += " [style=dotted]";
    } else if (!text.empty()) {
      out += " [label=\"" + text + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace heg
