#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "trihex/signature.hpp"

namespace trihex::graph {

using Vertex = std::uint32_t;
using Rotation = std::array<Vertex, 3>;

/// Rotation system of a cubic plane graph: for every vertex, its three
/// neighbours in counterclockwise order.
class EmbeddedGraph {
 public:
  /// Checks that every rotation names three distinct neighbours other than
  /// the vertex itself and that adjacency is symmetric. Throws
  /// InternalInconsistency otherwise.
  EmbeddedGraph(std::vector<Rotation> rotations, Signature source);

  std::size_t size() const noexcept { return rot_.size(); }
  const Rotation& rotation(Vertex v) const { return rot_.at(v); }
  std::span<const Rotation> rotations() const noexcept { return rot_; }
  const Signature& source() const noexcept { return source_; }

  /// Position of `neighbour` in the rotation at `v`.
  unsigned slot_of(Vertex v, Vertex neighbour) const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  std::vector<Rotation> rot_;
  Signature source_;
};

struct CanonicalCode {
  std::vector<std::uint32_t> code;
  std::uint64_t oriented_aut_count = 0;
  // The minimal code came from the reversed orientation only.
  bool reflective = false;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

enum class ExportFormat { planar_code, dot, structured };

/// Realizes a signature as the quotient of the hexagonal tiling by the
/// half-turns about its rotocenter lattice. Throws InternalInconsistency if
/// the result is not a connected cubic plane graph with 4 triangles and
/// hexagon_count(sig) hexagons.
EmbeddedGraph build(const Signature& sig);

/// Face boundaries traced through the rotation system; every directed edge
/// lies on exactly one face.
std::vector<std::vector<Vertex>> faces(const EmbeddedGraph& g);

/// Face length -> number of faces.
std::map<std::size_t, std::size_t> face_census(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

/// Degree, connectivity, Euler and face-census checks for a trihex. Returns
/// the list of violated conditions (empty when valid).
std::vector<std::string> trihex_violations(const EmbeddedGraph& g);

/// Same graph with every rotation reversed.
EmbeddedGraph reflect(const EmbeddedGraph& g);

/// Renames vertex v to perm[v].
EmbeddedGraph relabel(const EmbeddedGraph& g, std::span<const Vertex> perm);

/// Breadth-first code minimized over all directed-edge starts, and over
/// both orientations when `use_reflection` is set.
CanonicalCode canonical_code(const EmbeddedGraph& g, bool use_reflection);

bool are_isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b,
                    bool allow_reflection);

/// Not isomorphic to its own mirror image by an orientation-preserving map.
bool is_chiral(const EmbeddedGraph& g);

std::string export_graph(const EmbeddedGraph& g, ExportFormat format);

/// `>>planar_code<<` followed by every graph in turn.
std::string planar_code(std::span<const EmbeddedGraph> graphs);

/// Inverse of planar_code; the source signature of each graph is left at
/// (0,0,0). Throws InvalidInput on malformed input.
std::vector<EmbeddedGraph> read_planar_code(std::string_view bytes);

}  // namespace trihex::graph
