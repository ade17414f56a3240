#pragma once

#include <stdexcept>
#include <string>

namespace skelcov {

/// Thrown when a search or enumeration would exceed the configured budget.
/// The CLI maps this to exit status 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Budgets for the exhaustive searches. A single scalar override (the --bound
/// flag or the SKELCOV_BOUND environment variable) caps all of them at once.
struct Bounds {
  unsigned long long group_order = 3628800;      // 10!, permutation group size
  unsigned long long gluing_total = 1000000;     // |G(Sigma',X)| enumerated
  unsigned long long automorphisms = 100000;     // |Aut_Sigma(Sigma')| enumerated
  int enum_degree = 7;                           // covering degree in enumerations
  int enum_rank = 3;                             // free rank / co-tree size
  int canonical_degree = 10;                     // degree for canonical forms

  static Bounds with_master(unsigned long long cap) {
    Bounds b;
    b.group_order = cap;
    b.gluing_total = cap;
    b.automorphisms = cap;
    return b;
  }

  /// Reads SKELCOV_BOUND if set; otherwise the defaults.
  static Bounds from_env();
};

}  // namespace skelcov
