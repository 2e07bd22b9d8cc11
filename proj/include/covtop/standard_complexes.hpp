#pragma once

#include "covtop/complex.hpp"

namespace covtop {

/// One vertex x, one loop edge a.
Complex circle();
/// circle() with a face D glued along a.
Complex disc();
/// Vertices u, v and three parallel edges a, b, c from u to v.
Complex theta();
/// Wedge of n circles at x with edges a, b, c, ... (a1, a2, ... past 26).
Complex bouquet(int n);
/// circle() with a face R glued along a^k, so π1 = Z/k.
Complex cyclic(int k);

}  // namespace covtop
