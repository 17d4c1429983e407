#pragma once

#include "descmat/composition.hpp"
#include "descmat/rational.hpp"

namespace descmat {

/// Irreducible character value chi^lambda at cycle type mu (both partitions
/// of the same n), by the Murnaghan-Nakayama border-strip recursion.
/// Memoized; safe for concurrent callers.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// z_mu = prod over part sizes i of i^{m_i} * m_i!.
BigInt zee(const Partition& mu);

/// Size of the conjugacy class of cycle type mu: n! / z_mu.
BigInt conjugacy_class_size(const Partition& mu);

}  // namespace descmat
