#pragma once

#include <type_traits>

#include "gieseker/ratfun.hpp"

namespace gieseker {

/// Coefficient rings used by the generic containers: Rat, QExpPoly, QRatFun.
template <class C>
concept Coefficient = std::is_same_v<C, Rat> || std::is_same_v<C, QExpPoly> || std::is_same_v<C, QRatFun>;

template <Coefficient C>
bool coef_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, Rat>) {
    return c == 0;
  } else {
    return c.is_zero();
  }
}

template <Coefficient C>
C coef_from(const Rat& r) {
  return C(r);
}

}  // namespace gieseker
