#include "skelcov/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skelcov {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("bad cycle notation: '" + text + "'");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad cycle notation: '" + text + "'");
      int point = std::stoi(text.substr(i, j - i));
      if (point < 1 || point > degree)
        throw std::invalid_argument("cycle point " + std::to_string(point) +
                                    " out of range 1.." + std::to_string(degree));
      cycle.push_back(point - 1);
      i = j;
      skip_ws();
      if (i < text.size() && (text[i] == ',')) { ++i; skip_ws(); }
    }
    if (i >= text.size()) throw std::invalid_argument("unclosed cycle: '" + text + "'");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (img[from] != from)
        throw std::invalid_argument("point repeated in cycles: '" + text + "'");
      img[from] = to;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::from_one_line(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> img;
  int v = 0;
  while (in >> v) img.push_back(v - 1);
  if (!in.eof()) throw std::invalid_argument("bad one-line notation: '" + text + "'");
  return Perm(std::move(img));
}

Perm Perm::parse(const std::string& text, int degree) {
  for (char c : text)
    if (c == '(') return from_cycles(text, degree);
  Perm p = from_one_line(text);
  if (p.degree() != degree)
    throw std::invalid_argument("permutation '" + text + "' has degree " +
                                std::to_string(p.degree()) + ", expected " +
                                std::to_string(degree));
  return p;
}

Perm Perm::then(const Perm& next) const {
  if (next.degree() != degree())
    throw std::invalid_argument("composing permutations of unequal degree");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = next.images_[images_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<int>(i);
  return Perm(std::move(img));
}

Perm Perm::conjugated_by(const Perm& g) const {
  return g.inverse().then(*this).then(g);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Perm::one_line() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) {
      seen[start] = true;
      continue;
    }
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm cyclic_shift(int degree, long long shift) {
  long long s = ((shift % degree) + degree) % degree;
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<int>((i + s) % degree);
  return Perm(std::move(img));
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree) {
  std::vector<int> label(degree, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < degree; ++start) {
    if (label[start] != -1) continue;
    int c = static_cast<int>(out.size());
    std::vector<int> orbit{start};
    label[start] = c;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (const Perm& g : gens) {
        for (int q : {g.apply(p), g.inverse().apply(p)}) {
          if (label[q] == -1) {
            label[q] = c;
            orbit.push_back(q);
            queue.push_back(q);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool generate_transitive(const std::vector<Perm>& gens, int degree) {
  if (degree <= 1) return true;
  auto os = orbits(gens, degree);
  return os.size() == 1;
}

}  // namespace skelcov
