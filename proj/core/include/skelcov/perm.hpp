#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skelcov {

/// A permutation of {1..n}, stored 0-based. Composition convention throughout
/// the library: a.then(b) applies a first, so sheets transported along a walk
/// compose left to right in traversal order.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  /// Cycle notation on 1-based points, e.g. "(1 2)(3 4)" or "()".
  static Perm from_cycles(const std::string& text, int degree);
  /// One-line notation on 1-based points, e.g. "2 1 3".
  static Perm from_one_line(const std::string& text);
  /// Accepts either notation (cycles must be parenthesized).
  static Perm parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }  // 0-based

  Perm then(const Perm& next) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * this * g, in then-order

  bool is_identity() const;

  std::string one_line() const;
  std::string cycles() const;

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

/// The sheet-translation i -> i + shift (mod n); the voltage of a cyclic cover.
Perm cyclic_shift(int degree, long long shift);

/// True when the given permutations generate a transitive subgroup.
bool generate_transitive(const std::vector<Perm>& gens, int degree);

/// Orbits of the generated group on {0..n-1}, each sorted, ordered by minimum.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);

}  // namespace skelcov
