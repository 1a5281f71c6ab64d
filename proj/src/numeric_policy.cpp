#include "qmono/numeric_policy.hpp"

namespace qmono {

namespace {
NumericPolicy& mutable_policy() {
  static NumericPolicy policy;
  return policy;
}
}  // namespace

const NumericPolicy& numeric_policy() { return mutable_policy(); }

void set_numeric_policy(const NumericPolicy& policy) { mutable_policy() = policy; }

}  // namespace qmono
