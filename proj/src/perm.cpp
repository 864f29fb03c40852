#include "cng/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cng {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v])
      throw Precondition("image table is not a bijection on {0..degree-1}");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw Precondition("degree mismatch in permutation composition");
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  if (degree() != g.degree())
    throw Precondition("degree mismatch in conjugation");
  // (g^-1 * this * g)(i) = g(this(g^-1(i))); iterate over j = g^-1(i).
  Permutation r;
  r.images_.resize(images_.size());
  for (unsigned j = 0; j < images_.size(); ++j)
    r.images_[g.images_[j]] = g.images_[images_[j]];
  return r;
}

Permutation Permutation::power(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
  Permutation acc = Permutation::identity(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

unsigned Permutation::first_moved_point() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation Permutation::parse_cycles(const std::string& text, unsigned degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw InvalidSpec("cycle syntax error at position " + std::to_string(pos) +
                        ": expected '('");
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidSpec("cycle syntax error at position " + std::to_string(pos) +
                          ": expected point or ')'");
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v > 0xFFFFFFFFull)
          throw InvalidSpec("point value out of range at position " + std::to_string(pos));
        ++pos;
      }
      if (v >= degree)
        throw InvalidSpec("degree inconsistency: point " + std::to_string(v) +
                          " not below degree " + std::to_string(degree));
      if (used[v])
        throw InvalidSpec("point " + std::to_string(v) + " appears twice");
      used[v] = true;
      cycle.push_back(static_cast<unsigned>(v));
      skip_ws();
    }
    if (pos >= text.size())
      throw InvalidSpec("unterminated cycle");
    ++pos; // ')'
    saw_cycle = true;
    for (size_t i = 0; i + 1 < cycle.size(); ++i) images[cycle[i]] = cycle[i + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  if (!saw_cycle)
    throw InvalidSpec("empty permutation string; identity is written \"()\"");
  return Permutation(std::move(images));
}

Permutation cycle_perm(unsigned degree, const std::vector<unsigned>& cycle) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (size_t i = 0; i < cycle.size(); ++i)
    images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(images));
}

} // namespace cng
