#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsikit {

struct DisconnectedDiagram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Planar link diagram as a PD code: each crossing is a 4-tuple of arc
/// labels, counterclockwise from the incoming under-strand.  Crossingless
/// unknot components produced by smoothings are tracked in free_loops.
struct PDDiagram {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  static PDDiagram unknot() { return PDDiagram{{}, 1}; }
  static PDDiagram trefoil();
  static PDDiagram figure_eight();
  static PDDiagram hopf();

  size_t n_crossings() const { return crossings.size(); }
  int n_components() const;
  bool connected() const;

  /// Every arc label appears exactly twice; faces satisfy Euler's formula.
  void validate() const;

  std::string str() const;
};

/// |det(Goeritz matrix)| from a checkerboard coloring; equals the order of
/// H_1 of the double branched cover (0 encodes infinite).  Throws
/// DisconnectedDiagram for split diagrams; determinant_or_zero returns 0
/// for those instead.
long long determinant(const PDDiagram& d);
long long determinant_or_zero(const PDDiagram& d);

/// PD code with crossing i smoothed in direction r (0: join slots 0-1 and
/// 2-3; 1: join slots 0-3 and 1-2), arcs renumbered canonically.
PDDiagram resolve_crossing(const PDDiagram& d, size_t i, int r);

/// One greedy pass of Reidemeister I / II reductions; loops until stable.
PDDiagram simplify(const PDDiagram& d);

/// Inverse moves, used by randomized invariance tests.  arc_occurrence
/// selects which of the arc's two crossing slots gets the new kink/ripple.
PDDiagram add_kink(const PDDiagram& d, int arc, int variant);
PDDiagram add_ripple(const PDDiagram& d, int arc_x, int arc_y);

/// Memoization key: lexicographically minimal serialization over strand
/// traversal relabelings.
std::string canonical_code(const PDDiagram& d);

/// Node of a quasi-alternating recursion certificate.  At internal nodes
/// det == det0 + det1 with both children certified; leaves are diagrams
/// that reduce to a single crossingless circle.
struct QACertificate {
  PDDiagram diagram;  // simplified diagram the node certifies
  long long det = 1;
  bool leaf = true;
  size_t crossing = 0;
  long long det0 = 0, det1 = 0;
  std::shared_ptr<QACertificate> child0, child1;

  /// Recomputes every determinant in the tree and re-checks additivity.
  bool verify() const;
  int node_count() const;
};

/// Sound positive test only: a certificate proves quasi-alternating;
/// nullopt means unknown (never a disproof).
std::optional<QACertificate> certify_quasi_alternating(const PDDiagram& d,
                                                       int depth_limit = 16);

}  // namespace hsikit
