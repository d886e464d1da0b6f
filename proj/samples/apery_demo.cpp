// Nine routes to zeta(3), ranked by how many terms each needs.

#include <cstdio>

#include "zetakit/convergence.hpp"
#include "zetakit/specfun.hpp"

int main() {
  const double reference = zetakit::riemann_zeta(3.0).value;
  std::printf("zeta(3) by Euler-Maclaurin: %.17g\n\n", reference);
  for (const auto& row : zetakit::compare("zeta3", 1e-12)) {
    const auto& key = row.key;
    const double value = zetakit::assemble(key, zetakit::partial_sum(key, row.last_index).value);
    std::printf("%-16s %-9s %3lld terms  %.17g\n", key.to_string().c_str(), row.paper_eq.c_str(),
                static_cast<long long>(row.terms_needed), value);
  }
  std::printf("\nCl2(pi/2) = %.17g (Catalan %.17g)\n", zetakit::clausen_cl2(zetakit::kPi / 2).value,
              zetakit::catalan().value);
}
