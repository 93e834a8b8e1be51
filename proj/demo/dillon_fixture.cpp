// Prints properties of the 6-bit quadratic APN fixture and its fingerprint.
#include <iostream>

#include "apnle/apnle.hpp"

int main() {
  using namespace apnle;
  const auto f = dillon_fixture();
  std::cout << "APN: " << is_apn(f) << "\n";
  std::cout << "permutation: " << f.is_permutation() << "\n";
  std::cout << "algebraic degree: " << algebraic_degree(f) << "\n";
  std::cout << "differential uniformity: " << differential_uniformity(f) << "\n";
  const auto fp = fingerprint(f);
  std::cout << "fingerprint digest: " << fp.digest() << "\n";
  std::cout << fp.to_json().dump(2) << "\n";
}
