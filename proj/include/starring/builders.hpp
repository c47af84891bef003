#pragma once

#include <span>
#include <vector>

#include "starring/ring.hpp"
#include "starring/star_ring.hpp"

namespace starring {

/// Z/nZ; element i is residue i.
FiniteRing make_zmod(int n);

/// The field with q elements, q = p or p^2 for a prime p <= 13.
/// For q = p^2 the carrier is F_p[t]/(f) with f the lexicographically
/// smallest monic irreducible t^2 + b t + c (ordered by (b, c)), and
/// element c1*p + c0 represents c0 + c1*t. In particular ids 0..p-1 are
/// the prime subfield with its natural order.
FiniteRing make_gf(int q);

/// Characteristic of make_gf(q), i.e. its prime p.
int gf_characteristic(int q);

/// Direct product; element a*|b| + idb encodes the pair (a, b) with the
/// left component as the high digit.
FiniteRing make_product(const FiniteRing& a, const FiniteRing& b, int max_order = kDefaultMaxOrder);

/// n x n matrices over base. A matrix is encoded row-major as an n^2-digit
/// radix-|base| number with entry (0,0) as the most significant digit.
FiniteRing make_matrix_ring(const FiniteRing& base, int n, int max_order = kDefaultMaxOrder);

ElementId matrix_encode(int base_order, int n, std::span<const ElementId> entries);
std::vector<ElementId> matrix_decode(int base_order, int n, ElementId id);

/// Fully validated ring from raw tables; zero/one discovered. The seed
/// only matters above the exhaustive validation bound.
FiniteRing make_table_ring(int order, const std::vector<ElementId>& add,
                           const std::vector<ElementId>& mul, std::string label = "table",
                           std::uint64_t sample_seed = 0x5eedULL);

// ---- involution table generators ---------------------------------------

std::vector<ElementId> identity_star(const FiniteRing& r);

/// (a,b) -> (b,a) on make_product(a, b); requires identical factor tables.
std::vector<ElementId> swap_star(const FiniteRing& left, const FiniteRing& right);

/// Componentwise star on make_product(left, right) from factor stars.
std::vector<ElementId> componentwise_star(const FiniteRing& left,
                                          const std::vector<ElementId>& left_star,
                                          const FiniteRing& right,
                                          const std::vector<ElementId>& right_star);

/// x -> x^p on make_gf(p^2).
std::vector<ElementId> frobenius_star(const FiniteRing& field, int p);

/// A* = transpose of (a_ij*) on make_matrix_ring(base.ring(), n).
std::vector<ElementId> conjugate_transpose_star(const StarRing& base, int n);

}  // namespace starring
