#include "detkit/grading.hpp"

namespace detkit {

GradingSpec::GradingSpec(std::vector<unsigned> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw std::invalid_argument("grading weight of variable " + std::to_string(i) +
                                  " must be at least 1");
    }
  }
}

long GradingSpec::degree(const Monomial& m) const {
  long d = 0;
  for (const auto& [i, e] : m.sparse()) d += static_cast<long>(weights_.at(i)) * e;
  return d;
}

}  // namespace detkit
