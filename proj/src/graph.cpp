#include "trihex/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "json.hpp"
#include "trihex/errors.hpp"

namespace trihex::graph {

namespace {

constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t n) {
  return (a - mod_floor(a, n)) / n;
}

// Hexagon centres live on the lattice spanned by N (one hexagon up the
// column) and NE (one column to the right, half a hexagon up). A point is
// (column, height) in that basis. The rotocenter lattice L is spanned by
// (0, s+1) and (b+1, f); the torus is the plane modulo 2L.
class HexTorus {
 public:
  explicit HexTorus(const Signature& sig)
      : columns_(2 * (sig.b + 1)), height_(2 * (sig.s + 1)), shift_(2 * sig.f) {}

  std::int64_t cell_count() const { return columns_ * height_; }

  Vertex index(std::int64_t column, std::int64_t row) const {
    const std::int64_t q = floor_div(column, columns_);
    column -= q * columns_;
    row = mod_floor(row - q * shift_, height_);
    return static_cast<Vertex>(column * height_ + row);
  }

  std::int64_t column_of(Vertex v) const { return v / height_; }
  std::int64_t row_of(Vertex v) const { return v % height_; }

 private:
  std::int64_t columns_;
  std::int64_t height_;
  std::int64_t shift_;
};

// Darts are (vertex, slot); back[3v + k] is the slot of v in the rotation of
// rot[v][k].
std::vector<unsigned> back_slots(const EmbeddedGraph& g) {
  std::vector<unsigned> back(3 * g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    for (unsigned k = 0; k < 3; ++k) back[3 * v + k] = g.slot_of(g.rotation(v)[k], v);
  }
  return back;
}

struct PassResult {
  std::vector<std::uint32_t> code;
  std::uint64_t hits = 0;
};

// Minimal BFS code over every starting dart for one orientation sense.
PassResult minimal_code(const EmbeddedGraph& g, const std::vector<unsigned>& back,
                        bool reversed) {
  const std::size_t n = g.size();
  const unsigned step = reversed ? 2 : 1;  // -1 == +2 (mod 3)
  PassResult best;
  std::vector<std::uint32_t> candidate(3 * n);
  std::vector<std::uint32_t> label(n);
  std::vector<unsigned> ref(n);
  std::vector<Vertex> queue(n);

  for (Vertex start = 0; start < n; ++start) {
    for (unsigned first_slot = 0; first_slot < 3; ++first_slot) {
      std::fill(label.begin(), label.end(), 0);
      label[start] = 1;
      ref[start] = first_slot;
      queue[0] = start;
      std::size_t head = 0, tail = 1, pos = 0;
      std::uint32_t next_label = 2;
      int order = best.code.empty() ? -1 : 0;  // -1: already smaller
      bool worse = false;
      while (head < tail && !worse) {
        const Vertex x = queue[head++];
        for (unsigned i = 0; i < 3; ++i) {
          const unsigned slot = (ref[x] + step * i) % 3;
          const Vertex y = g.rotation(x)[slot];
          if (label[y] == 0) {
            label[y] = next_label++;
            ref[y] = back[3 * x + slot];
            queue[tail++] = y;
          }
          const std::uint32_t value = label[y];
          if (order == 0) {
            if (value > best.code[pos]) {
              worse = true;
              break;
            }
            if (value < best.code[pos]) order = -1;
          }
          candidate[pos++] = value;
        }
      }
      if (worse) continue;
      if (order == -1) {
        best.code = candidate;
        best.hits = 1;
      } else {
        ++best.hits;
      }
    }
  }
  return best;
}

void put_entry(std::string& out, std::uint32_t value, bool wide) {
  if (wide) {
    out.push_back(static_cast<char>(value & 0xff));
    out.push_back(static_cast<char>((value >> 8) & 0xff));
  } else {
    out.push_back(static_cast<char>(value));
  }
}

}  // namespace

EmbeddedGraph::EmbeddedGraph(std::vector<Rotation> rotations, Signature source)
    : rot_(std::move(rotations)), source_(source) {
  const std::size_t n = rot_.size();
  for (Vertex v = 0; v < n; ++v) {
    const Rotation& r = rot_[v];
    for (unsigned k = 0; k < 3; ++k) {
      if (r[k] >= n || r[k] == v) {
        throw InternalInconsistency("vertex " + std::to_string(v) +
                                    " has an invalid neighbour");
      }
    }
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2]) {
      throw InternalInconsistency("vertex " + std::to_string(v) +
                                  " has a repeated neighbour");
    }
    for (Vertex w : r) {
      const Rotation& rw = rot_[w];
      if (std::find(rw.begin(), rw.end(), v) == rw.end()) {
        throw InternalInconsistency("adjacency is not symmetric at " +
                                    std::to_string(v) + "-" + std::to_string(w));
      }
    }
  }
}

unsigned EmbeddedGraph::slot_of(Vertex v, Vertex neighbour) const {
  const Rotation& r = rot_.at(v);
  for (unsigned k = 0; k < 3; ++k) {
    if (r[k] == neighbour) return k;
  }
  throw InternalInconsistency(std::to_string(neighbour) +
                              " is not adjacent to " + std::to_string(v));
}

EmbeddedGraph build(const Signature& sig) {
  const Signature checked = Signature::make(sig.s, sig.b, sig.f);
  const HexTorus torus(checked);
  // Each hexagon (c, r) owns its east corner. The half-turn about the origin
  // sends the east corner of (c, r) to the west corner of (-c, -r), so the
  // quotient vertex of that pair is named by (c, r). The east corner's
  // neighbours, counterclockwise from due east, are the west corners of
  // (c+2, r-1), (c+1, r) and (c+1, r-1).
  std::vector<Rotation> rot(static_cast<std::size_t>(torus.cell_count()));
  for (Vertex v = 0; v < rot.size(); ++v) {
    const std::int64_t c = torus.column_of(v);
    const std::int64_t r = torus.row_of(v);
    rot[v] = {torus.index(-(c + 2), -(r - 1)), torus.index(-(c + 1), -r),
              torus.index(-(c + 1), -(r - 1))};
  }
  EmbeddedGraph g(std::move(rot), checked);
  const auto problems = trihex_violations(g);
  if (!problems.empty()) {
    throw InternalInconsistency("build" + to_string(checked) + ": " +
                                problems.front());
  }
  return g;
}

std::vector<std::vector<Vertex>> faces(const EmbeddedGraph& g) {
  const auto back = back_slots(g);
  std::vector<char> seen(3 * g.size(), 0);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t dart = 0; dart < seen.size(); ++dart) {
    if (seen[dart]) continue;
    std::vector<Vertex> face;
    std::size_t d = dart;
    while (!seen[d]) {
      seen[d] = 1;
      const Vertex v = static_cast<Vertex>(d / 3);
      face.push_back(v);
      const Vertex w = g.rotation(v)[d % 3];
      d = 3 * std::size_t{w} + (back[d] + 1) % 3;
    }
    if (d != dart) throw InternalInconsistency("face walk did not close");
    out.push_back(std::move(face));
  }
  return out;
}

std::map<std::size_t, std::size_t> face_census(const EmbeddedGraph& g) {
  std::map<std::size_t, std::size_t> census;
  for (const auto& face : faces(g)) ++census[face.size()];
  return census;
}

bool is_connected(const EmbeddedGraph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(g.size(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.rotation(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == g.size();
}

std::vector<std::string> trihex_violations(const EmbeddedGraph& g) {
  std::vector<std::string> problems;
  const auto n = static_cast<std::int64_t>(g.size());
  const std::int64_t h = hexagon_count(g.source());
  if (n != vertex_count(g.source())) {
    problems.push_back("vertex count " + std::to_string(n) + " != " +
                       std::to_string(vertex_count(g.source())));
  }
  if (!is_connected(g)) problems.emplace_back("not connected");
  const auto census = face_census(g);
  std::size_t face_total = 0;
  for (const auto& [length, count] : census) {
    face_total += count;
    if (length != 3 && length != 6) {
      problems.push_back("face of length " + std::to_string(length));
    }
  }
  const auto count_of = [&](std::size_t length) {
    const auto it = census.find(length);
    return it == census.end() ? std::size_t{0} : it->second;
  };
  if (count_of(3) != 4) {
    problems.push_back(std::to_string(count_of(3)) + " triangles");
  }
  if (static_cast<std::int64_t>(count_of(6)) != h) {
    problems.push_back(std::to_string(count_of(6)) + " hexagons, expected " +
                       std::to_string(h));
  }
  const std::int64_t euler =
      n - 3 * n / 2 + static_cast<std::int64_t>(face_total);
  if (euler != 2) problems.push_back("Euler characteristic " + std::to_string(euler));
  return problems;
}

EmbeddedGraph reflect(const EmbeddedGraph& g) {
  std::vector<Rotation> rot(g.rotations().begin(), g.rotations().end());
  for (auto& r : rot) std::swap(r[1], r[2]);
  return EmbeddedGraph(std::move(rot), g.source());
}

EmbeddedGraph relabel(const EmbeddedGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.size()) throw InvalidInput("relabel: size mismatch");
  std::vector<bool> seen(g.size(), false);
  for (Vertex v : perm) {
    if (v >= g.size() || seen[v]) throw InvalidInput("relabel: not a permutation");
    seen[v] = true;
  }
  std::vector<Rotation> rot(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const Rotation& r = g.rotation(v);
    rot.at(perm[v]) = {perm[r[0]], perm[r[1]], perm[r[2]]};
  }
  return EmbeddedGraph(std::move(rot), g.source());
}

CanonicalCode canonical_code(const EmbeddedGraph& g, bool use_reflection) {
  const auto back = back_slots(g);
  PassResult forward = minimal_code(g, back, false);
  CanonicalCode out;
  out.oriented_aut_count = forward.hits;
  if (use_reflection) {
    PassResult reversed = minimal_code(g, back, true);
    if (reversed.code < forward.code) {
      out.code = std::move(reversed.code);
      out.reflective = true;
      return out;
    }
  }
  out.code = std::move(forward.code);
  return out;
}

bool are_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b,
                    bool allow_reflection) {
  if (a.size() != b.size()) return false;
  return canonical_code(a, allow_reflection).code ==
         canonical_code(b, allow_reflection).code;
}

bool is_chiral(const EmbeddedGraph& g) {
  const auto back = back_slots(g);
  return minimal_code(g, back, false).code != minimal_code(g, back, true).code;
}

std::string planar_code(std::span<const EmbeddedGraph> graphs) {
  std::string out(kPlanarCodeHeader);
  for (const auto& g : graphs) {
    const bool wide = g.size() > 255;
    if (g.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw InvalidInput("planar_code supports at most 65535 vertices");
    }
    if (wide) out.push_back('\0');
    put_entry(out, static_cast<std::uint32_t>(g.size()), wide);
    for (const auto& r : g.rotations()) {
      for (Vertex w : r) put_entry(out, w + 1, wide);
      put_entry(out, 0, wide);
    }
  }
  return out;
}

std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes) {
  if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader) {
    throw InvalidInput("missing >>planar_code<< header");
  }
  std::size_t pos = kPlanarCodeHeader.size();
  const auto take = [&](bool wide) -> std::uint32_t {
    const std::size_t width = wide ? 2 : 1;
    if (pos + width > bytes.size()) throw InvalidInput("truncated planar_code");
    std::uint32_t value = static_cast<unsigned char>(bytes[pos]);
    if (wide) value |= std::uint32_t{static_cast<unsigned char>(bytes[pos + 1])} << 8;
    pos += width;
    return value;
  };
  std::vector<EmbeddedGraph> out;
  while (pos < bytes.size()) {
    std::uint32_t n = take(false);
    const bool wide = n == 0;
    if (wide) n = take(true);
    std::vector<Rotation> rot(n);
    for (auto& r : rot) {
      for (auto& w : r) {
        const std::uint32_t entry = take(wide);
        if (entry == 0 || entry > n) throw InvalidInput("bad neighbour entry");
        w = entry - 1;
      }
      if (take(wide) != 0) throw InvalidInput("vertex is not cubic");
    }
    try {
      out.emplace_back(std::move(rot), Signature{});
    } catch (const InternalInconsistency& e) {
      throw InvalidInput(std::string("planar_code: ") + e.what());
    }
  }
  return out;
}

std::string export_graph(const EmbeddedGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::planar_code:
      return planar_code(std::span<const EmbeddedGraph>(&g, 1));
    case ExportFormat::dot: {
      std::string out = "graph \"" + to_string(g.source()) + "\" {\n";
      for (Vertex v = 0; v < g.size(); ++v) {
        for (Vertex w : g.rotation(v)) {
          if (v < w) out += "  " + std::to_string(v) + " -- " + std::to_string(w) + ";\n";
        }
      }
      out += "}\n";
      return out;
    }
    case ExportFormat::structured: {
      nlohmann::ordered_json doc;
      doc["schema_version"] = 1;
      doc["n"] = g.size();
      doc["source"] = {g.source().s, g.source().b, g.source().f};
      nlohmann::ordered_json rot = nlohmann::ordered_json::array();
      for (const auto& r : g.rotations()) rot.push_back({r[0], r[1], r[2]});
      doc["rot"] = std::move(rot);
      nlohmann::ordered_json census = nlohmann::ordered_json::object();
      for (const auto& [length, count] : face_census(g)) {
        census[std::to_string(length)] = count;
      }
      doc["faces"] = std::move(census);
      return doc.dump(2) + "\n";
    }
  }
  throw InvalidInput("unknown export format");
}

}  // namespace trihex::graph
