#ifndef GEOPROVE_CHAIN_HPP
#define GEOPROVE_CHAIN_HPP

#include <vector>

#include "geoprove/polynomial.hpp"

namespace geo {

struct ChainElement {
  Polynomial poly;
  Var main;
  Polynomial initial;  // initial_in(poly, main)
};

// Triangular system: main variables strictly increase, every element has
// positive degree in its main variable and involves no later main.
struct AscendingChain {
  OrderPtr order;
  std::vector<ChainElement> elems;

  bool is_main(Var v) const {
    for (auto& e : elems)
      if (e.main == v) return true;
    return false;
  }
};

struct NdgCondition {
  Polynomial poly;
  std::size_t origin;  // index of the chain element whose initial this is
};

}  // namespace geo

#endif
