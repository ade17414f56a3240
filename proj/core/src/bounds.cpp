#include "skelcov/bounds.hpp"

#include <cstdlib>

namespace skelcov {

Bounds Bounds::from_env() {
  if (const char* env = std::getenv("SKELCOV_BOUND")) {
    try {
      return with_master(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SKELCOV_BOUND is not a number: ") + env);
    }
  }
  return Bounds{};
}

}  // namespace skelcov
