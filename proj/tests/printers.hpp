#pragma once

// Readable gtest output for kernel values.

#include <ostream>

#include "qclifford/coeff.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

inline void PrintTo(const RatFunc& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const Poly& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const Multivector& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace qcl
