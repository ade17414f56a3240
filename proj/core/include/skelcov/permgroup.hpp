#pragma once

#include <optional>
#include <vector>

#include "skelcov/bounds.hpp"
#include "skelcov/perm.hpp"

namespace skelcov {

/// Permutation group via a Schreier-Sims stabilizer chain with base 0,1,2,...
/// Deterministic: the chain depends only on the generator list.
class PermGroup {
public:
  static PermGroup generated(const std::vector<Perm>& generators, int degree,
                             unsigned long long order_bound);

  int degree() const { return degree_; }
  unsigned long long order() const { return order_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  bool is_transitive() const;

  /// All elements, sorted by image vector. Throws ResourceError above bound.
  std::vector<Perm> elements(unsigned long long bound) const;

  /// Stabilizer of a point, as a generated subgroup (Schreier generators).
  PermGroup point_stabilizer(int point, unsigned long long order_bound) const;

private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> generators;            // strong generators fixing earlier points
    std::vector<std::optional<Perm>> coset;  // point -> transversal element u with u(base)=point
  };

  void extend_level(std::size_t level_index, unsigned long long order_bound);
  void refresh_orbit(std::size_t level_index, unsigned long long order_bound,
                     std::vector<std::pair<Perm, std::size_t>>* work);
  bool sift(const Perm& p, std::size_t from_level, Perm* residue,
            std::size_t* stuck) const;
  void insert(const Perm& p, std::size_t from_level, unsigned long long order_bound);

  int degree_ = 0;
  unsigned long long order_ = 1;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

/// Subgroup generated by `sub` inside the centralizer check: true when every
/// element of `sub` commutes with every generator in `gens`.
bool centralizes(const std::vector<Perm>& sub, const std::vector<Perm>& gens);

}  // namespace skelcov
