#include "cng/constructors.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "cng/recognition.hpp"
#include "cng/standard_groups.hpp"

namespace cng {

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  // Doubled coordinates: the product of two doubled values is four times
  // the true product, so halve once and insist on exactness.
  std::int64_t w = a.w2 * b.w2 - a.x2 * b.x2 - a.y2 * b.y2 - a.z2 * b.z2;
  std::int64_t x = a.w2 * b.x2 + a.x2 * b.w2 + a.y2 * b.z2 - a.z2 * b.y2;
  std::int64_t y = a.w2 * b.y2 - a.x2 * b.z2 + a.y2 * b.w2 + a.z2 * b.x2;
  std::int64_t z = a.w2 * b.z2 + a.x2 * b.y2 - a.y2 * b.x2 + a.z2 * b.w2;
  if ((w | x | y | z) % 2 != 0)
    throw Precondition("quaternion product left the half-integer lattice");
  return Quaternion{w / 2, x / 2, y / 2, z / 2};
}

const std::vector<Quaternion>& hurwitz_units() {
  static const std::vector<Quaternion> units = [] {
    std::vector<Quaternion> u;
    for (int s : {2, -2}) {
      u.push_back({s, 0, 0, 0});
      u.push_back({0, s, 0, 0});
      u.push_back({0, 0, s, 0});
      u.push_back({0, 0, 0, s});
    }
    for (int w : {1, -1})
      for (int x : {1, -1})
        for (int y : {1, -1})
          for (int z : {1, -1}) u.push_back({w, x, y, z});
    return u;
  }();
  return units;
}

size_t hurwitz_unit_index(const Quaternion& q) {
  const auto& units = hurwitz_units();
  for (size_t i = 0; i < units.size(); ++i)
    if (units[i] == q) return i;
  throw Precondition("not a Hurwitz unit");
}

namespace {

std::optional<std::uint64_t> cyclic_log_helper(const Permutation& base,
                                               const Permutation& x) {
  Permutation cur = Permutation::identity(base.degree());
  std::uint64_t n = base.order();
  for (std::uint64_t e = 0; e < n; ++e) {
    if (cur == x) return e;
    cur = cur * base;
  }
  return std::nullopt;
}

// Coordinates of a lattice quaternion in the basis (e0, i, j, k) with
// e0 = (1+i+j+k)/2: the e0-coordinate equals the doubled real part, and
// the rest are (doubled - doubled real)/2.
std::array<std::int64_t, 4> to_lattice_basis(const Quaternion& q) {
  std::array<std::int64_t, 4> c{};
  c[0] = q.w2;
  for (int t = 1; t < 4; ++t) {
    std::int64_t comp = t == 1 ? q.x2 : t == 2 ? q.y2 : q.z2;
    if ((comp - q.w2) % 2 != 0)
      throw Precondition("quaternion is not in the Hurwitz lattice");
    c[t] = (comp - q.w2) / 2;
  }
  return c;
}

std::array<std::array<std::int64_t, 4>, 4> left_mult_integer_matrix(const Quaternion& q) {
  const Quaternion basis[4] = {{1, 1, 1, 1}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
  std::array<std::array<std::int64_t, 4>, 4> m{};
  for (int r = 0; r < 4; ++r) {
    // Row r holds the coordinates of q * basis[r]: row-vector convention.
    auto coords = to_lattice_basis(quat_mul(q, basis[r]));
    for (int c = 0; c < 4; ++c) m[r][c] = coords[c];
  }
  return m;
}

} // namespace

Mat hurwitz_left_mult_matrix(const Quaternion& q, unsigned modulus) {
  auto im = left_mult_integer_matrix(q);
  Mat m = Mat::zero(4, modulus);
  for (unsigned r = 0; r < 4; ++r)
    for (unsigned c = 0; c < 4; ++c) {
      std::int64_t v = im[r][c] % static_cast<std::int64_t>(modulus);
      if (v < 0) v += modulus;
      m.at(r, c) = static_cast<unsigned>(v);
    }
  return m;
}

std::int64_t hurwitz_left_mult_det_minus_identity(const Quaternion& q) {
  auto im = left_mult_integer_matrix(q);
  for (int i = 0; i < 4; ++i) im[i][i] -= 1;
  // Direct 4x4 determinant by cofactor expansion.
  std::vector<std::int64_t> flat;
  for (auto& row : im) flat.insert(flat.end(), row.begin(), row.end());
  std::function<std::int64_t(const std::vector<std::int64_t>&, unsigned)> det =
      [&](const std::vector<std::int64_t>& a, unsigned n) -> std::int64_t {
    if (n == 1) return a[0];
    std::int64_t d = 0;
    for (unsigned c = 0; c < n; ++c) {
      if (!a[c]) continue;
      std::vector<std::int64_t> minor;
      for (unsigned i = 1; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
          if (j != c) minor.push_back(a[i * n + j]);
      std::int64_t term = a[c] * det(minor, n - 1);
      d += (c % 2 == 0) ? term : -term;
    }
    return d;
  };
  return det(flat, 4);
}

PermGroup hurwitz_unit_group() {
  const auto& units = hurwitz_units();
  auto left_mult_perm = [&](const Quaternion& q) {
    std::vector<unsigned> images(units.size());
    for (size_t i = 0; i < units.size(); ++i)
      images[i] = static_cast<unsigned>(hurwitz_unit_index(quat_mul(q, units[i])));
    return Permutation(std::move(images));
  };
  Quaternion i{0, 2, 0, 0};
  Quaternion omega{-1, 1, 1, 1}; // (-1+i+j+k)/2, order 3
  return PermGroup(24, {left_mult_perm(i), left_mult_perm(omega)}, 24);
}

std::optional<MatrixAction> quaternionic_synthesis(const PermGroup& k, unsigned dim,
                                                   unsigned modulus,
                                                   const Limits& limits) {
  if (dim != 4 || modulus % 2 == 0) return std::nullopt;
  if (k.order() % modulus == 0) return std::nullopt;
  auto shape = decompose_cyclic_odd_times_quaternion(k, limits);
  PermGroup odd = PermGroup::trivial(k.degree());
  PermGroup quat = PermGroup::trivial(k.degree());
  if (shape) {
    if (shape->quaternion_part.order() != 8) return std::nullopt; // Q8 only
    odd = shape->odd_part;
    quat = shape->quaternion_part;
  } else if (is_cyclic(k, limits) && k.order() % 2 == 1) {
    odd = k;
  } else {
    return std::nullopt;
  }

  std::uint64_t m_odd = odd.order();
  if ((static_cast<std::uint64_t>(modulus) - 1) % m_odd != 0)
    return std::nullopt; // needs a scalar of that order mod p
  // Least scalar of multiplicative order m_odd mod p.
  unsigned lambda = 1;
  if (m_odd > 1) {
    for (unsigned cand = 2; cand < modulus; ++cand) {
      std::uint64_t pow = 1;
      bool exact = true;
      for (std::uint64_t e = 1; e <= m_odd; ++e) {
        pow = pow * cand % modulus;
        if (pow == 1 && e < m_odd) {
          exact = false;
          break;
        }
      }
      if (exact && pow == 1) {
        lambda = cand;
        break;
      }
    }
    if (lambda == 1) return std::nullopt;
  }

  // Generator of the odd part (odd is cyclic).
  Permutation c = k.identity();
  if (m_odd > 1) {
    odd.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
      if (x.order() == m_odd) {
        c = x;
        return false;
      }
      return true;
    });
  }

  // Embed the Sylow 2-subgroup into the Hurwitz units: pick images for two
  // order-4 generators among the pure units and check multiplicativity on
  // the whole subgroup by the homomorphism certificate later.
  std::vector<std::pair<Permutation, Quaternion>> quat_map; // element -> unit
  if (quat.order() == 8) {
    std::vector<Permutation> qgens;
    quat.for_each_element(64, [&](const Permutation& x) {
      if (x.order() == 4) qgens.push_back(x);
      return true;
    });
    // Find two anticommuting order-4 elements as generators.
    Permutation gi = k.identity(), gj = k.identity();
    bool found = false;
    for (size_t a = 0; a < qgens.size() && !found; ++a)
      for (size_t b = a + 1; b < qgens.size() && !found; ++b) {
        if (qgens[a] * qgens[b] != qgens[b] * qgens[a]) {
          gi = qgens[a];
          gj = qgens[b];
          found = true;
        }
      }
    if (!found) return std::nullopt;
    // Map gi -> i, gj -> j; products follow the word expansion below.
    Quaternion qi{0, 2, 0, 0}, qj{0, 0, 2, 0};
    // Expand the eight elements as words in (gi, gj).
    std::vector<std::pair<Permutation, Quaternion>> closure{
        {k.identity(), Quaternion{2, 0, 0, 0}}};
    for (size_t pos = 0; pos < closure.size(); ++pos) {
      for (int which = 0; which < 2; ++which) {
        Permutation next = closure[pos].first * (which ? gj : gi);
        Quaternion nq = quat_mul(closure[pos].second, which ? qj : qi);
        bool known = false;
        for (auto& [p, q] : closure)
          if (p == next) {
            known = true;
            break;
          }
        if (!known) closure.emplace_back(std::move(next), nq);
      }
    }
    if (closure.size() != 8) return std::nullopt;
    quat_map = std::move(closure);
  }

  auto quat_matrix_of = [&](const Permutation& q2part) -> std::optional<Mat> {
    if (quat.order() != 8) return Mat::identity(4, modulus);
    for (const auto& [p, q] : quat_map)
      if (p == q2part) return hurwitz_left_mult_matrix(q, modulus);
    return std::nullopt;
  };

  // Matrices for the actual generators of K via the odd/2-part splitting
  // of a nilpotent group: g = g_odd * g_2 with commuting parts.
  std::vector<Mat> matrices;
  for (const Permutation& g : k.generators()) {
    std::uint64_t o = g.order();
    std::uint64_t two_part = p_part(o, 2);
    std::uint64_t odd_ord = o / two_part;
    // g_odd = g^(2part * inverse of 2part mod odd_ord), g_2 = g / g_odd.
    std::uint64_t inv = 1;
    if (odd_ord > 1) {
      inv = 0;
      for (std::uint64_t t = 0; t < odd_ord; ++t)
        if (t * two_part % odd_ord == 1) {
          inv = t;
          break;
        }
    }
    Permutation g_odd = g.power(static_cast<long long>(two_part * inv));
    Permutation g_two = g * g_odd.inverse();
    auto a = cyclic_log_helper(c, g_odd);
    if (!a) return std::nullopt;
    auto qm = quat_matrix_of(g_two);
    if (!qm) return std::nullopt;
    std::uint64_t scalar = 1;
    for (std::uint64_t e = 0; e < *a; ++e) scalar = scalar * lambda % modulus;
    Mat m = *qm;
    for (auto& v : m.a) v = static_cast<unsigned>(v * scalar % modulus);
    matrices.push_back(std::move(m));
  }
  return MatrixAction{4, modulus, matrices};
}

PermGroup example1(const PermGroup& k, unsigned p, const Limits& limits) {
  if (p < 2 || prime_divisors(p) != std::vector<unsigned>{p})
    throw Precondition("example1 needs a prime p");
  if (k.order() % p == 0) throw Precondition("example1 needs p coprime to |K|");
  bool cyclic = is_cyclic(k, limits);
  if (!cyclic && !decompose_cyclic_odd_times_quaternion(k, limits))
    throw Precondition(
        "example1 needs K cyclic or cyclic-odd times generalized quaternion");
  if (k.order() == 1) {
    MatrixAction trivial{1, p, {}};
    return semidirect(trivial, PermGroup::trivial(k.degree()), limits);
  }
  std::string last_error;
  for (unsigned d = 1; d <= 4; ++d) {
    std::uint64_t points = 1;
    for (unsigned i = 0; i < d; ++i) points *= p;
    if (points > limits.max_semidirect_degree) break;
    try {
      if (auto action = fpf_search(k, d, p, ExcludeClass::None, limits))
        return semidirect(*action, k, limits);
    } catch (const SearchExhausted& e) {
      last_error = e.what();
    }
  }
  throw SearchExhausted("example1: no fixed-point-free action found for |K|=" +
                        std::to_string(k.order()) + ", p=" + std::to_string(p) +
                        (last_error.empty() ? "" : " (" + last_error + ")"));
}

PermGroup example2(unsigned m, unsigned k, const Limits& limits) {
  if (m < 3 || m % 2 == 0) throw Precondition("example2 needs odd m >= 3");
  PermGroup d = dihedral_group(m);
  auto action = fpf_search(d, k, 2, ExcludeClass::TwoElements, limits);
  if (!action)
    throw SearchExhausted("example2: no 2'-semiregular action of D" +
                          std::to_string(2 * m) + " on (Z/2)^" + std::to_string(k));
  return semidirect(*action, d, limits);
}

Example3Result example3(unsigned p, unsigned n, const Limits& limits) {
  if (p < 5 || p % 2 == 0 || p % 3 == 0 || prime_divisors(p) != std::vector<unsigned>{p})
    throw Precondition("example3 needs an odd prime p not equal to 3");
  if (n < 1) throw Precondition("example3 needs n >= 1");
  unsigned two_n = 1u << n;
  std::uint64_t modulus = static_cast<std::uint64_t>(p) * two_n;
  std::uint64_t points = 1;
  for (int i = 0; i < 4; ++i) points *= modulus;
  if (points > limits.max_semidirect_degree)
    throw BoundExceeded("example3 degree " + std::to_string(points) +
                        " exceeds the semidirect degree bound");
  unsigned mu = static_cast<unsigned>(modulus);

  Quaternion qi{0, 2, 0, 0};
  Quaternion omega{-1, 1, 1, 1};
  Mat ma = hurwitz_left_mult_matrix(qi, mu);
  Mat md = hurwitz_left_mult_matrix(omega, mu);
  Permutation pa = matrix_perm(ma);
  Permutation pd = matrix_perm(md);

  // v: a nonzero element of V_2 = p*(Z/m)^4; the first lattice basis
  // direction scaled by p.
  std::vector<unsigned> v(4, 0);
  v[0] = p % mu;
  if (vector_index(v, mu) == 0) throw Precondition("example3: v must be nonzero");
  Permutation va = pa * translation_perm(4, mu, v);

  std::vector<Permutation> ggens{va, pd};
  for (unsigned i = 0; i < 4; ++i) {
    std::vector<unsigned> e(4, 0);
    e[i] = (two_n % mu);
    ggens.push_back(translation_perm(4, mu, e)); // V_p generators
  }
  PermGroup g(static_cast<unsigned>(points), ggens);

  // W = V_2 meet G: the 2-torsion translation subgroup that landed inside.
  std::vector<Permutation> wgens;
  std::uint64_t wcount = 0;
  {
    std::vector<unsigned> w(4, 0);
    unsigned count2 = two_n * two_n * two_n * two_n;
    for (unsigned idx = 0; idx < count2; ++idx) {
      unsigned t = idx;
      for (int i = 0; i < 4; ++i) {
        w[i] = static_cast<unsigned>((static_cast<std::uint64_t>(t % two_n) * p) % mu);
        t /= two_n;
      }
      Permutation tr = translation_perm(4, mu, w);
      if (g.contains(tr)) {
        ++wcount;
        if (!tr.is_identity()) wgens.push_back(std::move(tr));
      }
    }
  }
  std::vector<Permutation> ngens = wgens;
  for (unsigned i = 0; i < 4; ++i) {
    std::vector<unsigned> e(4, 0);
    e[i] = (two_n % mu);
    ngens.push_back(translation_perm(4, mu, e));
  }
  std::uint64_t p4 = static_cast<std::uint64_t>(p) * p * p * p;
  PermGroup normal(static_cast<unsigned>(points), std::move(ngens), wcount * p4);
  return Example3Result{std::move(g), std::move(normal), wcount};
}

PermGroup example4_a5(const Limits& limits) {
  // F4 = {0, 1, w, w+1} with w^2 = w + 1, encoded 0..3.
  auto f4mul = [](unsigned a, unsigned b) -> unsigned {
    static const unsigned table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return table[a][b];
  };
  using M2 = std::array<unsigned, 4>; // 2x2 over F4, row-major
  auto mul2 = [&](const M2& x, const M2& y) {
    M2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r[i * 2 + j] = f4mul(x[i * 2], y[j]) ^ f4mul(x[i * 2 + 1], y[2 + j]);
    return r;
  };

  const M2 u{1, 1, 0, 1};  // unipotent
  const M2 w{2, 0, 0, 3};  // diag(w, w^2)
  const M2 s{0, 1, 1, 0};  // swap

  // Projective line over F4: [1:0] and [x:1]; action by row-vector times
  // matrix, then renormalize.
  std::vector<std::array<unsigned, 2>> pts{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}};
  auto f4inv = [&](unsigned a) {
    for (unsigned b = 1; b < 4; ++b)
      if (f4mul(a, b) == 1) return b;
    throw Precondition("F4 inverse of zero");
  };
  auto proj_perm = [&](const M2& m) {
    std::vector<unsigned> images(5);
    for (size_t i = 0; i < pts.size(); ++i) {
      unsigned x = pts[i][0], y = pts[i][1];
      unsigned nx = f4mul(x, m[0]) ^ f4mul(y, m[2]);
      unsigned ny = f4mul(x, m[1]) ^ f4mul(y, m[3]);
      std::array<unsigned, 2> q;
      if (ny != 0) {
        q = {f4mul(nx, f4inv(ny)), 1};
      } else {
        q = {1, 0};
      }
      auto it = std::find(pts.begin(), pts.end(), q);
      images[i] = static_cast<unsigned>(it - pts.begin());
    }
    return Permutation(std::move(images));
  };

  // F2 4x4 blocks: F4 scalar e acts on coordinates (c0, c1) of x = c0+c1*w.
  auto scalar_block = [&](unsigned e) {
    std::array<unsigned, 4> b{};
    for (unsigned basis = 0; basis < 2; ++basis) {
      unsigned img = f4mul(basis == 0 ? 1 : 2, e);
      b[basis * 2 + 0] = img & 1u;
      b[basis * 2 + 1] = (img >> 1) & 1u;
    }
    return b;
  };
  auto f2_matrix = [&](const M2& m) {
    Mat out = Mat::zero(4, 2);
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj) {
        auto blk = scalar_block(m[bi * 2 + bj]);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) out.at(2 * bi + r, 2 * bj + c) = blk[r * 2 + c];
      }
    return out;
  };

  PermGroup k(5, {proj_perm(u), proj_perm(w), proj_perm(s)}, 60);
  MatrixAction action{4, 2, {f2_matrix(u), f2_matrix(w), f2_matrix(s)}};
  if (!certify_fixed_point_free(action, k, ExcludeClass::TwoElements))
    throw Precondition("example4: natural module is not 2'-semiregular");
  return semidirect(action, k, limits);
}

PermGroup negative_frobenius_sl23(unsigned p, const Limits& limits) {
  if (p < 5 || prime_divisors(p) != std::vector<unsigned>{p})
    throw Precondition("negative control needs a prime p >= 5");
  PermGroup k = sl23_group();
  auto action = fpf_search(k, 2, p, ExcludeClass::None, limits);
  if (!action)
    throw SearchExhausted("no fixed-point-free SL(2,3) action on (Z/" +
                          std::to_string(p) + ")^2");
  return semidirect(*action, k, limits);
}

} // namespace cng
