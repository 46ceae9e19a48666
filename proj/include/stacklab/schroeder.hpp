#pragma once

#include <vector>

#include "enumerate.hpp"
#include "generating.hpp"

namespace stacklab {

/// 2^(n-1) a_(n-2) with a the large Schroeder numbers, for n = 2..nmax.
inline std::vector<Count> schroeder_stack_prediction(int nmax) {
  std::vector<Count> out;
  if (nmax < 2) return out;
  IntSeries a = schroeder(nmax - 2);
  for (int n = 2; n <= nmax; ++n) {
    Count p = a[static_cast<std::size_t>(n - 2)];
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
    out.push_back(p);
  }
  return out;
}

/// Counts noncrossing graphs under the four readings and compares each with
/// the Schroeder prediction for n = 2..nmax.
inline std::vector<StackConventionResult> stack_convention_experiment(int nmax) {
  const auto predicted = schroeder_stack_prediction(nmax);
  std::vector<StackConventionResult> out;
  for (bool shared : {true, false})
    for (bool isolated : {true, false}) {
      StackConventionResult r{{shared, isolated}, {}, true};
      for (int n = 2; n <= nmax; ++n) {
        Count total = 0;
        for (const auto& v : count_by_arcs(n, r.convention.constraints())) total += v;
        r.counts.push_back(total);
        if (total != predicted[static_cast<std::size_t>(n - 2)]) r.matches = false;
      }
      out.push_back(r);
    }
  return out;
}

}  // namespace stacklab
