#pragma once

#include "grouplabel/certificate.hpp"

namespace grouplabel {

/// The four reference labelings, certified against their notion:
///   1: tree on 8 vertices, A*-antimagic over Z2xZ2xZ2
///   2: P_24, EA-cordial over Z8xZ3
///   3: P_24, EA-cordial over Z24
///   4: P_8, A-antimagic over Z2xZ2xZ2
/// Throws std::out_of_range for any other number.
Certificate figure_certificate(int number);

}  // namespace grouplabel
