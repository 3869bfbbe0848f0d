#pragma once

#include <vector>

#include "mvsr/semimodule.hpp"

namespace mvsr {

/// Commutative monoids with at most max_size elements, one per isomorphism
/// class. Identity is element 0; ordered by size, then by table.
std::vector<CommutativeMonoid> commutative_monoids(std::size_t max_size);

/// The max_size <= 3 family, computed once.
const std::vector<CommutativeMonoid>& small_monoid_family();

/// Finite join-semilattices with 0 (equivalently finite lattices) of exactly
/// `size` elements, one per isomorphism class. Bottom is 0 and top is
/// size-1; element order is a linear extension of the lattice order.
std::vector<CommutativeMonoid> semilattices(std::size_t size);

/// Semimodules over an additively idempotent S whose carrier has at most
/// max_size elements, one per isomorphism class, ordered by size and
/// discovery. Throws NotIdempotent.
std::vector<FiniteSemimodule> enumerate_modules(const SemiringPtr& scalars,
                                                std::size_t max_size);

}  // namespace mvsr
