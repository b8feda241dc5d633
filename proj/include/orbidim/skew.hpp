#pragma once
// Filtered dimensions of the basic idempotent subalgebra of A(P)*G for a
// d-symmetric plabic diagram P, assembled blockwise from per-(src,tgt)
// filtered dims: free-free orbit pairs summed over rotations, mixed and
// fixed-fixed blocks weighted by d.

#include "orbidim/qp.hpp"

namespace orbidim {

std::vector<long> skew_basic_dims(const Diagram& cover, int d, int m,
                                  const Field& field);

}  // namespace orbidim
