#include "skelcov/permgroup.hpp"

#include <algorithm>
#include <deque>

namespace skelcov {

namespace {

int first_moved_point(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.apply(i) != i) return i;
  return -1;
}

}  // namespace

PermGroup PermGroup::generated(const std::vector<Perm>& generators, int degree,
                               unsigned long long order_bound) {
  PermGroup g;
  g.degree_ = degree;
  for (const Perm& p : generators) {
    if (p.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!p.is_identity()) g.generators_.push_back(p);
  }
  for (const Perm& p : g.generators_) g.insert(p, 0, order_bound);
  g.order_ = 1;
  for (const auto& level : g.levels_) {
    unsigned long long size = 0;
    for (const auto& c : level.coset)
      if (c) ++size;
    g.order_ *= std::max<unsigned long long>(size, 1);
  }
  return g;
}

// sifts from `from_level`; on failure leaves the unsiftable remainder in
// *residue and the level where it got stuck in *stuck
bool PermGroup::sift(const Perm& p, std::size_t from_level, Perm* residue,
                     std::size_t* stuck) const {
  Perm current = p;
  for (std::size_t li = from_level; li < levels_.size(); ++li) {
    if (current.is_identity()) return true;
    const Level& level = levels_[li];
    int image = current.apply(level.base_point);
    if (image == level.base_point) continue;
    if (!level.coset[image]) {
      *residue = current;
      *stuck = li;
      return false;
    }
    current = current.then(level.coset[image]->inverse());
  }
  if (current.is_identity()) return true;
  *residue = current;
  *stuck = levels_.size();
  return false;
}

void PermGroup::insert(const Perm& p, std::size_t from_level,
                       unsigned long long order_bound) {
  std::vector<std::pair<Perm, std::size_t>> work{{p, from_level}};
  while (!work.empty()) {
    auto [candidate, from] = work.back();
    work.pop_back();
    Perm residue;
    std::size_t stuck = 0;
    if (sift(candidate, from, &residue, &stuck)) continue;
    if (stuck == levels_.size()) {
      Level level;
      level.base_point = first_moved_point(residue);
      level.coset.assign(degree_, std::nullopt);
      level.coset[level.base_point] = Perm::identity(degree_);
      levels_.push_back(std::move(level));
    }
    levels_[stuck].generators.push_back(residue);
    // the stabilizer at level i is generated by everything stored at levels
    // >= i, so every orbit up to the stuck level may grow
    for (std::size_t i = stuck + 1; i-- > 0;) refresh_orbit(i, order_bound, &work);
  }
}

void PermGroup::extend_level(std::size_t level_index, unsigned long long order_bound) {
  std::vector<std::pair<Perm, std::size_t>> work;
  refresh_orbit(level_index, order_bound, &work);
  for (const auto& [p, from] : work) insert(p, from, order_bound);
}

void PermGroup::refresh_orbit(std::size_t level_index, unsigned long long order_bound,
                              std::vector<std::pair<Perm, std::size_t>>* work) {
  std::vector<Perm> gens;
  for (std::size_t j = level_index; j < levels_.size(); ++j)
    for (const Perm& g : levels_[j].generators) gens.push_back(g);

  Level& level = levels_[level_index];
  std::deque<int> queue;
  for (int i = 0; i < degree_; ++i)
    if (level.coset[i]) queue.push_back(i);
  while (!queue.empty()) {
    int point = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      int image = g.apply(point);
      if (!level.coset[image]) {
        level.coset[image] = level.coset[point]->then(g);
        queue.push_back(image);
        unsigned long long estimate = 1;
        for (const auto& l : levels_) {
          unsigned long long s = 0;
          for (const auto& c : l.coset)
            if (c) ++s;
          estimate *= std::max<unsigned long long>(s, 1);
        }
        if (estimate > order_bound)
          throw ResourceError("group order exceeds bound " +
                              std::to_string(order_bound));
      }
      Perm schreier =
          level.coset[point]->then(g).then(level.coset[image]->inverse());
      if (!schreier.is_identity()) work->push_back({schreier, level_index + 1});
    }
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  Perm residue;
  std::size_t stuck = 0;
  return sift(p, 0, &residue, &stuck);
}

bool PermGroup::is_transitive() const {
  return generate_transitive(generators_, degree_);
}

std::vector<Perm> PermGroup::elements(unsigned long long bound) const {
  if (order_ > bound)
    throw ResourceError("element enumeration exceeds bound " + std::to_string(bound));
  std::vector<Perm> out{Perm::identity(degree_)};
  // product over the stabilizer chain transversals, deepest level first
  for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
    std::vector<Perm> extended;
    extended.reserve(out.size() * 4);
    for (const auto& coset_rep : level->coset) {
      if (!coset_rep) continue;
      for (const Perm& tail : out) extended.push_back(tail.then(*coset_rep));
    }
    out = std::move(extended);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != order_)
    throw std::logic_error("stabilizer chain size disagrees with the order");
  return out;
}

PermGroup PermGroup::point_stabilizer(int point, unsigned long long order_bound) const {
  // transversal for the orbit of `point` under the whole group
  std::vector<std::optional<Perm>> coset(degree_);
  coset[point] = Perm::identity(degree_);
  std::deque<int> queue{point};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (const Perm& g : generators_) {
      int image = g.apply(p);
      if (!coset[image]) {
        coset[image] = coset[p]->then(g);
        queue.push_back(image);
      }
    }
  }
  std::vector<Perm> schreier;
  for (int p = 0; p < degree_; ++p) {
    if (!coset[p]) continue;
    for (const Perm& g : generators_) {
      Perm s = coset[p]->then(g).then(coset[g.apply(p)]->inverse());
      if (!s.is_identity()) schreier.push_back(s);
    }
  }
  std::sort(schreier.begin(), schreier.end());
  schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
  return PermGroup::generated(schreier, degree_, order_bound);
}

bool centralizes(const std::vector<Perm>& sub, const std::vector<Perm>& gens) {
  for (const Perm& s : sub)
    for (const Perm& g : gens)
      if (!(s.then(g) == g.then(s))) return false;
  return true;
}

}  // namespace skelcov
