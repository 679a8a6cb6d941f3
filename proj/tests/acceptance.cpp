#include <cstdlib>
#include <iostream>
#include <string>

#include "cbn/acceptance.hpp"

// One line per criterion; nonzero exit if any fails. Optional argument: seed.
int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : cbn::kDefaultSeed;
  std::cout << "acceptance run, seed " << seed << "\n";
  auto results = cbn::run_acceptance(seed, &std::cout);
  int failed = 0;
  for (auto const& r : results) failed += r.pass ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
