#pragma once

#include "operators.hpp"
#include "set_classes.hpp"

namespace topolab {

inline ClassFlags classify_set(const FiniteOps& ops, Mask a) {
  ops.space().require_fit(a);
  return classify_with(ops, a);
}

inline ClassFlags classify_set(const FiniteSpace& X, Mask a) {
  const FiniteOps ops(X);
  return classify_set(ops, a);
}

}  // namespace topolab
