#pragma once

#include "modmat/numtheory.hpp"

namespace modmat {

// Free-function zero test so templates work uniformly over mpq_class and
// the project's own field types (which expose a member is_zero()).
template <class F>
inline bool is_zero(const F& x) {
    return x.is_zero();
}

inline bool is_zero(const Rat& x) { return x == 0; }

// gmpxx expression templates (results of mpq arithmetic before assignment)
template <class T, class U>
inline bool is_zero(const __gmp_expr<T, U>& x) {
    return Rat(x) == 0;
}

} // namespace modmat
