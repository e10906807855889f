#include "toric/gfan.hpp"

namespace toric {

bool is_trivial_fan(const Fan& f, const Cone& sigma) {
  return f.maximal_cones().size() == 1 && f.maximal_cones()[0] == sigma;
}

}  // namespace toric
