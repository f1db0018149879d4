#include "leakycav/mp_complex.hpp"

// Header-only wrapper; this translation unit just anchors the target's
// dependency on mpfr so link errors surface here.
namespace leakycav {
static_assert(BigFloat::precision == 256);
} // namespace leakycav
