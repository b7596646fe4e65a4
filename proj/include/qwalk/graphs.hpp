#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qwalk/common.hpp"

namespace qwalk {

/// Weighted circulant graph on Z_n: vertex j is adjacent to j +/- d for every
/// d in `conn`, with edge weight `weights[i]` for conn[i].  The connection set
/// must be closed under negation mod n so the adjacency matrix is symmetric.
struct CirculantSpec {
  index_t n = 0;
  std::vector<index_t> conn;    ///< sorted, values in [1, n-1], inverse-closed
  std::vector<double> weights;  ///< parallel to conn, strictly positive

  index_t order() const { return n; }
};

/// Circulant graph over a finite Abelian group Z_{n1} x ... x Z_{nk}.
/// Vertices are tuples, flattened in mixed-radix lexicographic order with the
/// last factor varying fastest.  All edges have weight 1.
struct GroupCirculantSpec {
  std::vector<index_t> factors;
  std::vector<std::vector<index_t>> conn;  ///< sorted lexicographically

  index_t order() const;
};

/// Cycle C_n for n >= 3; C_2 is the doubled-edge multigraph (conn {1} with
/// weight 2), the one circulant whose walk is both instantaneous- and
/// average-uniform.
CirculantSpec make_cycle(index_t n);

/// Complete graph K_n as a circulant: conn = {1, ..., n-1}, unit weights.
CirculantSpec make_complete(index_t n);

/// General circulant.  Validates n >= 2, no zero offsets, offsets in range,
/// closure under negation, and positive weights (default: all 1).
CirculantSpec make_circulant(index_t n, std::vector<index_t> conn,
                             std::vector<double> weights = {});

/// d-dimensional hypercube as a group circulant over (Z_2)^d with the unit
/// vectors as connection set.  Requires d >= 1.
GroupCirculantSpec make_hypercube(index_t d);

/// General group circulant.  Validates factor positivity, group order >= 2,
/// tuple ranges, absence of the identity, and closure under negation.
GroupCirculantSpec make_group_circulant(std::vector<index_t> factors,
                                        std::vector<std::vector<index_t>> conn);

/// Order of the group with the given cyclic factors.
index_t group_order(const std::vector<index_t>& factors);

/// Flat index of a tuple under mixed-radix ordering (last factor fastest).
index_t tuple_rank(const std::vector<index_t>& factors,
                   const std::vector<index_t>& tuple);

/// Inverse of tuple_rank.
std::vector<index_t> rank_tuple(const std::vector<index_t>& factors,
                                index_t rank);

/// Rank of the group inverse (componentwise negation) of the given element.
index_t negate_rank(const std::vector<index_t>& factors, index_t rank);

/// Character chi_a(x) = exp(2*pi*i * sum_j a_j x_j / n_j).  Components are
/// reduced mod the factors; mismatched tuple lengths are invalid.
cplx character(const std::vector<index_t>& factors,
               const std::vector<index_t>& a, const std::vector<index_t>& x);

/// Real spectrum of a circulant, indexed by character rank, together with the
/// partition of indices into classes of (numerically) equal eigenvalues.
struct Spectrum {
  std::vector<double> eigenvalues;
  /// Classes ordered by ascending eigenvalue; indices ascending within each.
  std::vector<std::vector<index_t>> collision_classes;
  /// Membership map: class_of[a] = position of a's class in collision_classes.
  std::vector<index_t> class_of;
  double collision_tol = default_collision_tol;

  index_t distinct_count() const {
    return static_cast<index_t>(collision_classes.size());
  }
  /// Number of ordered pairs (j, k), j != k, with equal eigenvalues.
  index_t collision_pair_count() const;
};

/// Eigenvalues lambda_j = sum_d w_d cos(2*pi*j*d/n) of a circulant, clustered
/// into collision classes with the given absolute tolerance.
Spectrum eigenvalues_circulant(const CirculantSpec& spec,
                               double collision_tol = default_collision_tol);

/// Eigenvalues lambda_a = sum_{x in conn} Re chi_a(x) of a group circulant.
Spectrum eigenvalues_group(const GroupCirculantSpec& spec,
                           double collision_tol = default_collision_tol);

/// Dense adjacency matrix; refuses orders above dense_order_cap.
std::vector<std::vector<double>> adjacency_matrix(const CirculantSpec& spec);
std::vector<std::vector<double>> adjacency_matrix(const GroupCirculantSpec& spec);

/// Sylvester-ordered Hadamard matrix of power-of-two order; entry (a, x) is
/// the character chi_a(x) of (Z_2)^k, so rows index characters.
struct HadamardMatrix {
  index_t order = 0;
  std::vector<std::int8_t> entries;  ///< row-major, values +/- 1

  int at(index_t row, index_t col) const {
    return entries[static_cast<std::size_t>(row * order + col)];
  }
};

HadamardMatrix hadamard_matrix(index_t order);

/// A pair of distinct indices with equal eigenvalues, preferring the
/// structural pair (a, -a); nullopt when every eigenvalue is simple.
std::optional<std::pair<index_t, index_t>> repeated_eigenvalue_witness(
    const CirculantSpec& spec);
std::optional<std::pair<index_t, index_t>> repeated_eigenvalue_witness(
    const GroupCirculantSpec& spec);

}  // namespace qwalk
