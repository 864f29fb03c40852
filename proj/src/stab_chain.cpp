#include "cng/stab_chain.hpp"

#include <algorithm>
#include <deque>

namespace cng {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw BoundExceeded("group order exceeds 64-bit range");
  return a * b;
}

} // namespace

StabChain::StabChain(unsigned degree, const std::vector<Permutation>& gens,
                     std::uint64_t known_order)
    : degree_(degree) {
  build(gens, {}, known_order);
}

StabChain::StabChain(unsigned degree, const std::vector<Permutation>& gens,
                     const std::vector<unsigned>& base_hint, std::uint64_t known_order)
    : degree_(degree) {
  build(gens, base_hint, known_order);
}

std::vector<unsigned> StabChain::base() const {
  std::vector<unsigned> b;
  b.reserve(levels_.size());
  for (const Level& lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

void StabChain::recompute_order() {
  order_ = 1;
  for (const Level& lvl : levels_) order_ = checked_mul(order_, lvl.orbit.size());
}

void StabChain::extend_orbit(size_t level, const std::vector<unsigned>& seeds,
                             bool new_gen_only, unsigned new_gen) {
  Level& lvl = levels_[level];
  std::deque<unsigned> queue(seeds.begin(), seeds.end());
  // Existing orbit points need scanning with the new generator only; points
  // discovered from them are processed with the full generator set.
  if (new_gen_only) {
    size_t existing = lvl.orbit.size();
    for (size_t i = 0; i < existing; ++i) {
      unsigned pt = lvl.orbit[i];
      unsigned img = strong_[new_gen][pt];
      if (lvl.tree_edge[img] == kAbsent) {
        lvl.tree_edge[img] = static_cast<int>(new_gen);
        lvl.tree_parent[img] = pt;
        lvl.orbit.push_back(img);
        queue.push_back(img);
      }
    }
  }
  while (!queue.empty()) {
    unsigned pt = queue.front();
    queue.pop_front();
    for (unsigned gi : lvl.gen_indices) {
      unsigned img = strong_[gi][pt];
      if (lvl.tree_edge[img] == kAbsent) {
        lvl.tree_edge[img] = static_cast<int>(gi);
        lvl.tree_parent[img] = pt;
        lvl.orbit.push_back(img);
        queue.push_back(img);
      }
    }
  }
}

Permutation StabChain::transversal(size_t level, unsigned point) const {
  const Level& lvl = levels_[level];
  // Collect the path from `point` up to the root, then compose forward.
  std::vector<unsigned> edges;
  unsigned cur = point;
  while (lvl.tree_edge[cur] != kRoot) {
    edges.push_back(static_cast<unsigned>(lvl.tree_edge[cur]));
    cur = lvl.tree_parent[cur];
  }
  Permutation u = Permutation::identity(degree_);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = u * strong_[*it];
  return u;
}

Permutation StabChain::fold_level(size_t level, Permutation x) const {
  const Level& lvl = levels_[level];
  unsigned img = x[lvl.base_point];
  // Multiply by inverse edges walking img up to the root; each step moves
  // the base image one level up the tree.
  while (lvl.tree_edge[img] != kRoot) {
    unsigned gi = static_cast<unsigned>(lvl.tree_edge[img]);
    x = x * strong_inv_[gi];
    img = lvl.tree_parent[img];
  }
  return x;
}

std::pair<Permutation, size_t> StabChain::sift(Permutation x, size_t from) const {
  for (size_t i = from; i < levels_.size(); ++i) {
    const Level& lvl = levels_[i];
    unsigned img = x[lvl.base_point];
    if (img == lvl.base_point) continue;
    if (lvl.tree_edge[img] == kAbsent) return {std::move(x), i};
    x = fold_level(i, std::move(x));
  }
  return {std::move(x), levels_.size()};
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw Precondition("degree mismatch in membership test");
  auto [residue, level] = sift(p, 0);
  return level == levels_.size() && residue.is_identity();
}

std::pair<Permutation, bool> StabChain::sift_residue(const Permutation& p) const {
  auto [residue, level] = sift(p, 0);
  return {std::move(residue), level == levels_.size()};
}

std::vector<unsigned> StabChain::base_images(const Permutation& p) const {
  std::vector<unsigned> key;
  key.reserve(levels_.size());
  for (const Level& lvl : levels_) key.push_back(p[lvl.base_point]);
  return key;
}

bool StabChain::add_generator(const Permutation& p, const std::vector<unsigned>& base_hint) {
  auto [residue, at] = sift(p, 0);
  if (at == levels_.size() && residue.is_identity()) return false;
  if (at == levels_.size()) {
    // Residue fixes every existing base point: extend the base.
    unsigned bp = degree_;
    for (unsigned hint : base_hint) {
      if (residue[hint] != hint) {
        bp = hint;
        break;
      }
    }
    if (bp == degree_) bp = residue.first_moved_point();
    Level lvl;
    lvl.base_point = bp;
    lvl.tree_edge.assign(degree_, kAbsent);
    lvl.tree_parent.assign(degree_, 0);
    lvl.tree_edge[bp] = kRoot;
    lvl.orbit.push_back(bp);
    levels_.push_back(std::move(lvl));
  }
  unsigned idx = static_cast<unsigned>(strong_.size());
  strong_.push_back(residue);
  strong_inv_.push_back(residue.inverse());
  for (size_t i = 0; i <= at && i < levels_.size(); ++i) {
    levels_[i].gen_indices.push_back(idx);
    extend_orbit(i, {}, true, idx);
  }
  recompute_order();
  return true;
}

void StabChain::build(const std::vector<Permutation>& gens,
                      const std::vector<unsigned>& base_hint, std::uint64_t known_order) {
  for (const Permutation& g : gens) {
    if (g.degree() != degree_) throw Precondition("generator degree mismatch");
    if (g.is_identity()) continue;
    add_generator(g, base_hint);
    if (known_order && order_ == known_order) return;
  }
  if (known_order && order_ == known_order) return;

  // Deterministic verification: process Schreier generators level by level,
  // bottom up; restart from the bottom whenever a new strong generator lands.
  size_t level = levels_.size();
  while (level > 0) {
    --level;
    bool restarted = false;
    for (size_t pos = 0; !restarted && pos < levels_[level].orbit.size(); ++pos) {
      unsigned beta = levels_[level].orbit[pos];
      Permutation u_beta = transversal(level, beta);
      for (size_t k = 0; !restarted && k < levels_[level].gen_indices.size(); ++k) {
        unsigned gi = levels_[level].gen_indices[k];
        Permutation s = fold_level(level, u_beta * strong_[gi]);
        auto [residue, at] = sift(std::move(s), level + 1);
        bool trivial = at == levels_.size() && residue.is_identity();
        if (trivial) continue;
        add_generator(residue, base_hint);
        if (known_order && order_ == known_order) return;
        level = levels_.size();
        restarted = true;
      }
    }
  }
  if (known_order && order_ != known_order)
    throw Precondition("known-order hint does not match computed group order");
}

bool StabChain::insert_generator(const Permutation& p) {
  if (p.degree() != degree_) throw Precondition("generator degree mismatch");
  if (p.is_identity()) return false;
  return add_generator(p, {});
}

std::uint64_t StabChain::stabilizer_order(size_t level) const {
  std::uint64_t o = 1;
  for (size_t i = level; i < levels_.size(); ++i)
    o = checked_mul(o, levels_[i].orbit.size());
  return o;
}

std::vector<Permutation> StabChain::stabilizer_generators(size_t level) const {
  std::vector<Permutation> gens;
  if (level >= levels_.size()) return gens;
  for (unsigned gi : levels_[level].gen_indices) gens.push_back(strong_[gi]);
  return gens;
}

bool StabChain::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  // Depth-first over each level's Schreier tree so the running product is
  // extended by one composition per tree edge; amortized about two
  // compositions per element regardless of tree depth.
  if (levels_.empty()) return fn(Permutation::identity(degree_));
  size_t n = levels_.size();
  std::vector<std::vector<std::vector<unsigned>>> children(n);
  for (size_t i = 0; i < n; ++i) {
    children[i].assign(degree_, {});
    for (unsigned pt : levels_[i].orbit)
      if (levels_[i].tree_edge[pt] != kRoot)
        children[i][levels_[i].tree_parent[pt]].push_back(pt);
  }
  // Levels are applied deepest first; walk(level, acc) ranges over
  // acc * u_{level,pt} for every orbit point pt.
  std::function<bool(size_t, const Permutation&)> walk =
      [&](size_t level, const Permutation& acc) -> bool {
    std::function<bool(unsigned, const Permutation&)> down =
        [&](unsigned pt, const Permutation& cur) -> bool {
      if (level == 0) {
        if (!fn(cur)) return false;
      } else if (!walk(level - 1, cur)) {
        return false;
      }
      for (unsigned child : children[level][pt])
        if (!down(child, cur * strong_[static_cast<unsigned>(
                             levels_[level].tree_edge[child])]))
          return false;
      return true;
    };
    return down(levels_[level].base_point, acc);
  };
  return walk(n - 1, Permutation::identity(degree_));
}

} // namespace cng
