// Small tour of the linear-algebra layer: companion matrices, RCF, orders.
#include <iostream>

#include "apnle/apnle.hpp"

int main() {
  using namespace apnle;
  const auto p = Gf2Poly::parse("X^5+X^2+1");
  std::cout << "p = " << p.to_string() << ", irreducible: " << is_irreducible(p) << ", ord(X) = " << order_of_x(p) << "\n";

  const auto c = Gf2Matrix::companion(p);
  std::cout << "Comp(p) rows: " << c.to_hex_rows(',') << "\n";
  std::cout << "order: " << order(c) << ", minimal polynomial: " << minimal_polynomial(c).to_string() << "\n";

  const auto m = Gf2Matrix::direct_sum(Gf2Matrix::companion(Gf2Poly::parse("X^2+X+1")), Gf2Matrix::companion(Gf2Poly::parse("X^2+X+1")));
  const auto r = rcf(m);
  std::cout << "RCF of Comp(X^2+X+1)^2 has invariant factors:";
  for (const auto& f : r.invariant_factors) std::cout << " " << f.to_string();
  std::cout << "\nfixed space dims at i=1,3: " << fixed_space(m, 1).dim << ", " << fixed_space(m, 3).dim << "\n";
  std::cout << "commutant size: " << commutant(m, kUnboundedBudget).elements.size() << "\n";
}
