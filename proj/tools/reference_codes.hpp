#pragma once

// Published (1+2u)-constacyclic codes and their stated Z4 image parameters.

#include <cstddef>
#include <string>
#include <vector>

namespace z4u::reference {

struct Parameters {
  std::size_t length;
  std::size_t k1;
  std::size_t k2;
  unsigned min_lee;
};

/// C = <g1, u g2> in R[x]/<x^n - (1+2u)>.
struct PairCode {
  std::string name;
  std::size_t n;
  std::string g1;
  std::string g2;
  Parameters published;
};

/// The eleven length-7 codes, in published order.
const std::vector<PairCode>& length7_table();

/// The n = 9, 15 and 23 examples.
const std::vector<PairCode>& odd_length_examples();

/// One-generator even-length example: C = <a + u b>, n = 6.
struct OneGeneratorExample {
  std::size_t n;
  std::string a;
  std::string b;
  std::string printed_first;
  std::string printed_second;
  unsigned published_min_lee;
};
const OneGeneratorExample& even_length_example();

}  // namespace z4u::reference
