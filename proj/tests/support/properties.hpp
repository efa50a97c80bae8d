#pragma once

// Randomized property suites shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <string>

namespace freeimm::oracle {

struct PropertyResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

PropertyResult trig_ring_laws(std::uint64_t seed, int cases);
PropertyResult trig_leibniz(std::uint64_t seed, int cases);
PropertyResult evaluation_homomorphism(std::uint64_t seed, int cases);
PropertyResult sturm_vs_isolation(std::uint64_t seed, int cases);
PropertyResult bareiss_vs_cofactor(std::uint64_t seed, int cases);
/// Full osculating determinant (with R(x)) against the stripped one, for the built-in t2 and t3 maps.
PropertyResult x_independence(std::uint64_t seed, int cases);
PropertyResult weierstrass_roundtrip(std::uint64_t seed, int cases);

}  // namespace freeimm::oracle
