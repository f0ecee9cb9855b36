#include "schur_ample/plucker.hpp"

namespace schur_ample {

long pullback_degree(const Partition& lambda, long epsilon, long delta) {
  return ampleness_weight(lambda) * (epsilon + delta);
}

}  // namespace schur_ample
