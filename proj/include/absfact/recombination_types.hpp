#pragma once

#include <cstdint>
#include <vector>

#include "absfact/geometry.hpp"

namespace absfact {

// A Minkowski summand Q of the current polytope together with its branch
// targets d_i (lattice length of the minimizing face per exterior ray) and
// polar multiplicities e_i = -min_{m in Q} <m, eta_i> per fan ray.
struct CandidateSummand {
  LatticePolytope Q;
  std::vector<std::int64_t> targets;  // per fan ray; nonzero on exterior rays only
  std::vector<std::int64_t> e;        // per fan ray

  std::int64_t target_total() const {
    std::int64_t s = 0;
    for (auto t : targets) s += t;
    return s;
  }
};

}  // namespace absfact
