#include "cng/standard_groups.hpp"

#include <cassert>
#include <numeric>

namespace cng {

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Permutation of the nonzero vectors of (Z/q)^2 induced by an invertible
// 2x2 matrix acting as row vector * matrix.
Permutation nonzero_vector_perm2(unsigned q, int m00, int m01, int m10, int m11) {
  unsigned count = q * q - 1;
  auto index = [&](unsigned x, unsigned y) { return x + q * y - 1; };
  std::vector<unsigned> images(count);
  auto norm = [&](long long v) { return static_cast<unsigned>(((v % q) + q) % q); };
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      unsigned nx = norm(static_cast<long long>(x) * m00 + static_cast<long long>(y) * m10);
      unsigned ny = norm(static_cast<long long>(x) * m01 + static_cast<long long>(y) * m11);
      images[index(x, y)] = index(nx, ny);
    }
  return Permutation(std::move(images));
}

} // namespace

PermGroup cyclic_group(unsigned n) {
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  return PermGroup(n, {cycle_perm(n, cyc)}, n);
}

PermGroup symmetric_group(unsigned n) {
  if (n <= 1) return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<unsigned> cyc(n);
  std::iota(cyc.begin(), cyc.end(), 0u);
  std::vector<Permutation> gens{cycle_perm(n, {0, 1})};
  if (n > 2) gens.push_back(cycle_perm(n, cyc));
  return PermGroup(n, std::move(gens), factorial(n));
}

PermGroup alternating_group(unsigned n) {
  if (n <= 2) return PermGroup::trivial(n == 0 ? 1 : n);
  if (n == 3) return PermGroup(3, {cycle_perm(3, {0, 1, 2})}, 3);
  std::vector<Permutation> gens{cycle_perm(n, {0, 1, 2})};
  if (n % 2 == 1) {
    std::vector<unsigned> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(cycle_perm(n, cyc));
  } else {
    std::vector<unsigned> cyc(n - 1);
    std::iota(cyc.begin(), cyc.end(), 1u);
    gens.push_back(cycle_perm(n, cyc));
  }
  return PermGroup(n, std::move(gens), factorial(n) / 2);
}

PermGroup dihedral_group(unsigned m) {
  if (m < 3) throw Precondition("dihedral group needs m >= 3");
  std::vector<unsigned> rot(m);
  std::iota(rot.begin(), rot.end(), 0u);
  std::vector<unsigned> refl(m);
  for (unsigned i = 0; i < m; ++i) refl[i] = (m - i) % m;
  return PermGroup(m, {cycle_perm(m, rot), Permutation(std::move(refl))},
                   2ull * m);
}

PermGroup dicyclic_group(unsigned m) {
  if (m < 2) throw Precondition("dicyclic group needs m >= 2");
  // Elements a^i b^j (0 <= i < 2m, j in {0,1}) with b^2 = a^m, b a = a^-1 b,
  // realized by right multiplication on themselves.
  unsigned n = 4 * m;
  auto id = [&](unsigned i, unsigned j) { return i + 2 * m * j; };
  std::vector<unsigned> ra(n), rb(n);
  for (unsigned i = 0; i < 2 * m; ++i) {
    ra[id(i, 0)] = id((i + 1) % (2 * m), 0);
    ra[id(i, 1)] = id((i + 2 * m - 1) % (2 * m), 1);
    rb[id(i, 0)] = id(i, 1);
    rb[id(i, 1)] = id((i + m) % (2 * m), 0);
  }
  return PermGroup(n, {Permutation(std::move(ra)), Permutation(std::move(rb))},
                   4ull * m);
}

PermGroup sl23_group() {
  Permutation t = nonzero_vector_perm2(3, 1, 1, 0, 1);
  Permutation s = nonzero_vector_perm2(3, 0, -1, 1, 0);
  PermGroup g(8, {t, s});
  assert(g.order() == 24);
  return g;
}

PermGroup gl23_group() {
  Permutation t = nonzero_vector_perm2(3, 1, 1, 0, 1);
  Permutation s = nonzero_vector_perm2(3, 0, -1, 1, 0);
  Permutation d = nonzero_vector_perm2(3, -1, 0, 0, 1);
  PermGroup g(8, {t, s, d});
  assert(g.order() == 48);
  return g;
}

PermGroup gl32_group() {
  // Transvection and a cyclic basis rotation generate GL(3,2).
  auto vec_perm = [&](const int m[3][3]) {
    std::vector<unsigned> images(7);
    for (unsigned v = 1; v < 8; ++v) {
      unsigned x[3] = {v & 1u, (v >> 1) & 1u, (v >> 2) & 1u};
      unsigned y[3] = {0, 0, 0};
      for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) y[c] ^= x[r] & static_cast<unsigned>(m[r][c]);
      images[v - 1] = (y[0] | (y[1] << 1) | (y[2] << 2)) - 1;
    }
    return Permutation(std::move(images));
  };
  const int t[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const int c[3][3] = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  PermGroup g(7, {vec_perm(t), vec_perm(c)});
  assert(g.order() == 168);
  return g;
}

} // namespace cng
