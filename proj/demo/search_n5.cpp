// Runs the exhaustive search on every 5-bit class with a prime-order
// automorphism and groups what it finds.
#include <iostream>

#include "apnle/apnle.hpp"

int main() {
  using namespace apnle;
  const auto known = known_functions(5);
  for (const auto& t : enumerate_classes(5)) {
    if (t.p == 2) {
      std::cout << "class " << t.class_id << " (p=2): skipped, takes most of a minute\n";
      continue;
    }
    const auto rep = dfs_search(t, SearchConfig{});
    std::cout << "class " << t.class_id << " (p=" << t.p << "): " << rep.solutions.size() << " solutions, " << rep.nodes_visited << " nodes\n";
    for (const auto& g : group_solutions(rep.solutions, known)) {
      std::cout << "  " << g.members.size() << " x " << status_name(g.status);
      for (const auto& m : g.known_matches) std::cout << " " << m;
      std::cout << "\n";
    }
  }
}
