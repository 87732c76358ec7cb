#include "helpers.hpp"

#include "ibound/independence.hpp"

namespace ibound::testing {

const std::vector<GadgetCopy>& paley17_gadgets() {
  static const std::vector<GadgetCopy> gadgets = enumerate_gadgets(paley(17), 3);
  return gadgets;
}

const std::vector<GadgetCopy>& paley17_minus0_gadgets() {
  static const std::vector<GadgetCopy> gadgets =
      enumerate_gadgets(delete_vertex(paley(17), 0).graph, 3);
  return gadgets;
}

}  // namespace ibound::testing
