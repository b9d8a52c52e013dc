#include "reference_codes.hpp"

namespace z4u::reference {

const std::vector<PairCode>& length7_table() {
  static const std::vector<PairCode> rows = {
      {"row1", 7, "0", "3x^4+2x^3+x^2+3(1+2u)x+3", {14, 3, 0, 12}},
      {"row2", 7, "0", "x^4+(1+2u)x^3+3x^2+3", {14, 3, 3, 8}},
      {"row3", 7, "3x^4+2x^3+x^2+(3+2u)x+3", "x^4+(1+2u)x^3+3x^2+3", {14, 6, 3, 6}},
      {"row4", 7, "(3+2u)x^3+x^2+2x+1", "(1+2u)x^3+2x^2+(1+2u)x+1", {14, 8, 3, 4}},
      {"row5", 7, "(3+2u)x^3+x^2+2x+1", "(3+2u)x+1", {14, 10, 0, 4}},
      {"row6", 7, "(3+2u)x^3+x^2+2x+1", "(1+2u)x+1", {14, 10, 1, 4}},
      {"row7", 7, "(1+2u)x^3+2x^2+(1+2u)x+1", "(1+2u)x+1", {14, 10, 4, 2}},
      {"row8", 7, "(3+2u)x+1", "(3+2u)x+1", {14, 12, 0, 2}},
      {"row9", 7, "(3+2u)x+1", "(1+2u)x+1", {14, 12, 1, 2}},
      {"row10", 7, "(1+2u)x+1", "(1+2u)x+1", {14, 12, 2, 2}},
      {"row11", 7, "(3+2u)x+1", "3", {14, 13, 0, 2}},
  };
  return rows;
}

const std::vector<PairCode>& odd_length_examples() {
  static const std::vector<PairCode> rows = {
      {"n9", 9, "0", "x^8+(1+2u)x^7+x^6+(1+2u)x^5+x^4+(1+2u)x^3+3x^2+(3+2u)x+3", {18, 1, 6, 8}},
      {"n15", 15, "2x^10+2x^8+2x^5+2x^4+2x^2+2x",
       "(3+2u)x^13+x^12+3x^10+(1+2u)x^9+(3+2u)x^7+x^6+3x^4+(1+2u)x^3+(3+2u)x+1", {30, 2, 10, 8}},
      {"n23", 23, "0",
       "x^22+(1+2u)x^21+x^20+(1+2u)x^19+x^18+(1+2u)x^17+x^16+(1+2u)x^15+x^14+(1+2u)x^13+x^12+(3+2u)x^11"
       "+3x^10+(1+2u)x^9+x^8+(1+2u)x^7+3x^6+(3+2u)x^5+3x^4+(1+2u)x^3+3x^2+(1+2u)x+3",
       {46, 1, 11, 28}},
  };
  return rows;
}

const OneGeneratorExample& even_length_example() {
  static const OneGeneratorExample ex{6,
                                      "x+x^2+x^4+x^5",
                                      "2x+2x^3+2x^5",
                                      "2x^11+2x^10+2x^9+2x^8+2x^5+2x^3+2x",
                                      "x^11+x^10+x^8+x^7+x^5+x^4+x^2+x",
                                      8};
  return ex;
}

}  // namespace z4u::reference
