#pragma once

// Rotation optimization for r_B and Lyndon factorization sizes of all
// rotations via the left and right Lyndon trees.

#include <cstddef>
#include <vector>

#include "bbwt/strings.hpp"
#include "bbwt/suffix_sort.hpp"

namespace bbwt {

struct BestRotation {
  /// Number of rot() applications (last symbol to front).
  std::size_t shift;
  Text rotated;
  std::size_t r_b;
};

/// r_B of rot(w, k) for every k in [0, n). Quadratic-ish: one BBWT per shift.
std::vector<std::size_t> rotation_rb_table(std::string_view w);

/// Minimum r_B over all rotations, smallest shift on ties. Throws
/// std::invalid_argument on empty input.
BestRotation best_rotation(std::string_view w);

enum class TreeFlavor { right, left };

/// Binary tree over the half-open, 0-based spans of a Lyndon word. Leaves
/// span one symbol; every node spans a Lyndon word.
struct LyndonTree {
  static constexpr Index kNoChild = UINT32_MAX;

  struct Node {
    Index begin;
    Index end;
    Index left = kNoChild;
    Index right = kNoChild;

    bool is_leaf() const { return left == kNoChild; }
  };

  TreeFlavor flavor;
  std::vector<Node> nodes;
  Index root = kNoChild;

  const Node& node(Index id) const { return nodes[id]; }
  /// Start of the right child of an internal node.
  Index split(Index id) const { return nodes[nodes[id].right].begin; }
};

/// Right (standard) Lyndon tree: the right child spans the longest proper
/// Lyndon suffix. Linear time. Throws std::invalid_argument unless w is a
/// Lyndon word.
LyndonTree right_lyndon_tree(std::string_view w);

/// Left Lyndon tree: the left child spans the longest proper Lyndon prefix.
/// Linear time up to the LCE block size. Throws std::invalid_argument unless
/// w is a Lyndon word.
LyndonTree left_lyndon_tree(std::string_view w);

struct FactorizationSize {
  std::size_t total_factors;
  std::size_t necklace_count;
  bool operator==(const FactorizationSize&) const = default;
};

struct RotationSizes {
  /// by_start[p] describes the Lyndon factorization of w[p..n) w[0..p).
  std::vector<FactorizationSize> by_start;
};

/// Sizes of the Lyndon factorizations of all rotations in O(n). Works in the
/// frame of the Lyndon rotation of the primitive root and re-indexes to the
/// caller's positions. Throws std::invalid_argument on empty input.
RotationSizes all_rotation_factorization_sizes(std::string_view w);

}  // namespace bbwt
