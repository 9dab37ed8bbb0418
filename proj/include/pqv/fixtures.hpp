#pragma once

#include "pqv/pq_model.hpp"

namespace pqv::fixtures {

/// C^3/Z6 with C: y^2 = x0^6 + x1^6 in P(1,1,3).
ProductQuotientModel z6_cy3();

/// (C2 x C2 x C3)/Z8 with C2: y^2 = x0 x1 (x0^4 + x1^4) in P(1,1,3) and
/// C3: y^2 = x0^8 + x1^8 in P(1,1,4).
ProductQuotientModel z8_fake_cy();

/// (C x C)/(Z_n + Z_n), C the Fermat curve of degree n = a*b, the second
/// factor twisted by the generator change g2 = g1 h1^b, h2 = g1^-b h1^-1.
/// Requires gcd(ab, 1 - b^2) = 1, ab >= 4 and b >= 3.
ProductQuotientModel fermat(int a, int b);

}  // namespace pqv::fixtures
