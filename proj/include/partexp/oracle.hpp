#pragma once

// Naive reference implementations. Nothing here shares code with the fast
// paths it is compared against: counting is by direct recursion over parts,
// and matrix algebra is done on dense arrays with the textbook triple loop.

#include <cstdint>
#include <map>
#include <vector>

#include "partexp/rational.hpp"
#include "partexp/sequences.hpp"
#include "partexp/toeplitz.hpp"

namespace partexp::oracle {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Partitions of n with every part admitted by filter; 1 for n = 0.
BigInt brute_partition_count(std::int64_t n, DivisorFlavor filter = DivisorFlavor::all());

DenseMatrix dense_expand(const BandMatrix& m);

/// Throws std::domain_error if the matrices are not square of equal size.
DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b);

/// sum_{r=0}^{N-1} M^r / r! by repeated dense products. Throws
/// std::domain_error unless M is square and zero on and below the diagonal.
DenseMatrix dense_exp(const DenseMatrix& m);

/// Walks all 2^(n-1) ordered compositions of n and tallies them by the
/// partition they sort to (summands in non-increasing order).
std::map<std::vector<std::int64_t>, BigInt> composition_tally(std::int64_t n);

}  // namespace partexp::oracle
