#pragma once

#include "ezeta/lattice.hpp"

namespace ezeta::detail {

// tau' = gamma tau in the fundamental domain together with the automorphy
// data j = c tau + d needed to transport values back to tau.
struct Reduced {
  cplx tau_reduced;
  cplx j;
  double a, b, c, d;
};

inline Reduced reduce(const ModularPoint& tau) {
  const auto red = reduce_to_fundamental(tau);
  const auto& g = red.gamma;
  return {red.tau.tau(), g.automorphy(tau.tau()), g.a().convert_to<double>(),
          g.b().convert_to<double>(), g.c().convert_to<double>(), g.d().convert_to<double>()};
}

}  // namespace ezeta::detail
