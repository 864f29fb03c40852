#include "cng/matrix_action.hpp"

#include <algorithm>
#include <numeric>

#include "cng/structure.hpp"

namespace cng {

Mat Mat::identity(unsigned dim, unsigned modulus) {
  Mat m{dim, modulus, std::vector<unsigned>(dim * dim, 0)};
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1 % modulus;
  return m;
}

Mat Mat::zero(unsigned dim, unsigned modulus) {
  return Mat{dim, modulus, std::vector<unsigned>(dim * dim, 0)};
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r = Mat::zero(x.dim, x.modulus);
  for (unsigned i = 0; i < x.dim; ++i)
    for (unsigned k = 0; k < x.dim; ++k) {
      std::uint64_t v = x.at(i, k);
      if (!v) continue;
      for (unsigned j = 0; j < x.dim; ++j)
        r.at(i, j) = static_cast<unsigned>((r.at(i, j) + v * y.at(k, j)) % x.modulus);
    }
  return r;
}

Mat mat_pow(const Mat& x, std::uint64_t e) {
  Mat acc = Mat::identity(x.dim, x.modulus);
  Mat base = x;
  while (e) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

Mat mat_sub_identity(const Mat& x) {
  Mat r = x;
  for (unsigned i = 0; i < x.dim; ++i)
    r.at(i, i) = (r.at(i, i) + x.modulus - (1 % x.modulus)) % x.modulus;
  return r;
}

namespace {

std::int64_t det_recursive(const std::vector<std::int64_t>& m, unsigned n) {
  if (n == 1) return m[0];
  std::int64_t det = 0;
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (unsigned c = 0; c < n; ++c) {
    if (m[c] != 0) {
      for (unsigned i = 1; i < n; ++i) {
        unsigned k = 0;
        for (unsigned j = 0; j < n; ++j) {
          if (j == c) continue;
          minor[(i - 1) * (n - 1) + k++] = m[i * n + j];
        }
      }
      std::int64_t term = m[c] * det_recursive(minor, n - 1);
      det += (c % 2 == 0) ? term : -term;
    }
  }
  return det;
}

} // namespace

unsigned det_mod(const Mat& x) {
  if (x.dim > 6) throw Precondition("determinant supported up to dimension 6");
  std::vector<std::int64_t> lift(x.a.begin(), x.a.end());
  std::int64_t d = det_recursive(lift, x.dim) % static_cast<std::int64_t>(x.modulus);
  if (d < 0) d += x.modulus;
  return static_cast<unsigned>(d);
}

bool mat_invertible(const Mat& x) {
  return std::gcd<std::uint64_t>(det_mod(x), x.modulus) == 1;
}

bool mat_fixed_point_free(const Mat& x) {
  return mat_invertible(mat_sub_identity(x));
}

std::uint64_t gl_order(unsigned dim, unsigned modulus) {
  // Multiplicative over prime powers; |GL(d, p^k)| = p^((k-1)d^2) |GL(d, p)|.
  auto saturating_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
  };
  std::uint64_t result = 1;
  std::uint64_t m = modulus;
  for (std::uint64_t p = 2; m > 1; ++p) {
    if (p * p > m) p = m;
    if (m % p != 0) continue;
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    std::uint64_t glp = 1;
    std::uint64_t pd = 1;
    for (unsigned i = 0; i < dim; ++i) pd = saturating_mul(pd, p);
    std::uint64_t pi = 1;
    for (unsigned i = 0; i < dim; ++i) {
      glp = saturating_mul(glp, pd - pi);
      pi = saturating_mul(pi, p);
    }
    for (unsigned e = 0; e < (k - 1) * dim * dim; ++e) glp = saturating_mul(glp, p);
    result = saturating_mul(result, glp);
  }
  return result;
}

unsigned vector_index(const std::vector<unsigned>& v, unsigned modulus) {
  unsigned idx = 0;
  unsigned base = 1;
  for (unsigned x : v) {
    idx += x * base;
    base *= modulus;
  }
  return idx;
}

Permutation matrix_perm(const Mat& m) {
  unsigned points = 1;
  for (unsigned i = 0; i < m.dim; ++i) points *= m.modulus;
  std::vector<unsigned> images(points);
  std::vector<unsigned> v(m.dim);
  for (unsigned idx = 0; idx < points; ++idx) {
    unsigned t = idx;
    for (unsigned i = 0; i < m.dim; ++i) {
      v[i] = t % m.modulus;
      t /= m.modulus;
    }
    unsigned out = 0;
    unsigned base = 1;
    for (unsigned j = 0; j < m.dim; ++j) {
      std::uint64_t s = 0;
      for (unsigned i = 0; i < m.dim; ++i) s += static_cast<std::uint64_t>(v[i]) * m.at(i, j);
      out += static_cast<unsigned>(s % m.modulus) * base;
      base *= m.modulus;
    }
    images[idx] = out;
  }
  return Permutation(std::move(images));
}

Permutation translation_perm(unsigned dim, unsigned modulus,
                             const std::vector<unsigned>& v) {
  unsigned points = 1;
  for (unsigned i = 0; i < dim; ++i) points *= modulus;
  std::vector<unsigned> images(points);
  std::vector<unsigned> w(dim);
  for (unsigned idx = 0; idx < points; ++idx) {
    unsigned t = idx;
    for (unsigned i = 0; i < dim; ++i) {
      w[i] = (t % modulus + v[i]) % modulus;
      t /= modulus;
    }
    images[idx] = vector_index(w, modulus);
  }
  return Permutation(std::move(images));
}

std::uint64_t validate_action(const MatrixAction& action, const PermGroup& k) {
  if (action.matrices.size() != k.generators().size())
    throw Precondition("one matrix per generator required");
  for (const Mat& m : action.matrices) {
    if (m.dim != action.dim || m.modulus != action.modulus)
      throw Precondition("matrix dimensions or moduli are inconsistent");
    if (!mat_invertible(m))
      throw Precondition("action matrix is not invertible mod " +
                         std::to_string(action.modulus));
  }
  std::vector<Permutation> perms;
  perms.reserve(action.matrices.size());
  for (const Mat& m : action.matrices) perms.push_back(matrix_perm(m));
  unsigned points = perms.empty() ? 1 : perms[0].degree();
  PermGroup realization(points, perms);
  GroupHom h = GroupHom::by_images(k, realization, perms);
  return h.image().order();
}

PermGroup semidirect(const MatrixAction& action, const PermGroup& k,
                     const Limits& limits) {
  std::uint64_t points = 1;
  for (unsigned i = 0; i < action.dim; ++i) {
    points *= action.modulus;
    if (points > limits.max_semidirect_degree)
      throw BoundExceeded("semidirect degree " + std::to_string(points) +
                          "+ exceeds bound " +
                          std::to_string(limits.max_semidirect_degree));
  }
  std::uint64_t image_order = validate_action(action, k);
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < action.dim; ++i) {
    std::vector<unsigned> e(action.dim, 0);
    e[i] = 1 % action.modulus;
    gens.push_back(translation_perm(action.dim, action.modulus, e));
  }
  for (const Mat& m : action.matrices) gens.push_back(matrix_perm(m));
  return PermGroup(static_cast<unsigned>(points), std::move(gens),
                   points * image_order);
}

std::vector<std::pair<Permutation, Mat>> action_element_table(
    const MatrixAction& action, const PermGroup& k, std::uint64_t max_order) {
  if (k.order() > max_order)
    throw BoundExceeded("acting group too large for element table");
  std::vector<std::pair<Permutation, Mat>> table;
  KeySet seen;
  std::vector<std::pair<Permutation, Mat>> queue{
      {k.identity(), Mat::identity(action.dim, action.modulus)}};
  seen.insert(k.element_key(queue[0].first));
  for (size_t pos = 0; pos < queue.size(); ++pos) {
    for (size_t gi = 0; gi < k.generators().size(); ++gi) {
      Permutation p = queue[pos].first * k.generators()[gi];
      auto key = k.element_key(p);
      if (!seen.insert(key).second) continue;
      queue.emplace_back(std::move(p), mat_mul(queue[pos].second, action.matrices[gi]));
    }
  }
  return queue;
}

bool certify_fixed_point_free(const MatrixAction& action, const PermGroup& k,
                              ExcludeClass exclude) {
  for (const auto& [perm, mat] : action_element_table(action, k)) {
    if (perm.is_identity()) continue;
    if (exclude == ExcludeClass::TwoElements && is_p_group_order(perm.order(), 2))
      continue;
    if (!mat_fixed_point_free(mat)) return false;
  }
  return true;
}

namespace {

// ---- honest lexicographic backtracking ------------------------------------

class LexSearch {
public:
  LexSearch(const PermGroup& k, unsigned dim, unsigned modulus, ExcludeClass exclude,
            std::uint64_t budget)
      : k_(k), dim_(dim), modulus_(modulus), exclude_(exclude), budget_(budget) {
    cells_ = dim * dim;
    total_ = 1;
    for (unsigned i = 0; i < cells_; ++i) {
      if (total_ > (std::uint64_t(1) << 62) / modulus) {
        total_ = UINT64_MAX;
        break;
      }
      total_ *= modulus;
    }
  }

  std::optional<MatrixAction> run() {
    std::vector<Mat> chosen;
    if (place(0, chosen)) {
      MatrixAction action{dim_, modulus_, found_};
      return action;
    }
    return std::nullopt;
  }

private:
  bool viable_generator_image(const Mat& m, const Permutation& gen) {
    std::uint64_t ord = gen.order();
    if (!(mat_pow(m, ord) == Mat::identity(dim_, modulus_))) return false;
    // Every non-excluded power of the generator must act without fixed
    // points; checking it here prunes most of the space.
    Mat acc = m;
    Permutation p = gen;
    for (std::uint64_t j = 1; j < ord; ++j) {
      bool excluded = exclude_ == ExcludeClass::TwoElements && is_p_group_order(p.order(), 2);
      if (!p.is_identity() && !excluded && !mat_fixed_point_free(acc)) return false;
      acc = mat_mul(acc, m);
      p = p * gen;
    }
    return true;
  }

  bool accept(const std::vector<Mat>& mats) {
    // Cheap rejection first: the paired closure cannot exceed |K|.
    unsigned points = 1;
    for (unsigned i = 0; i < dim_; ++i) points *= modulus_;
    std::vector<Permutation> pairs;
    for (size_t i = 0; i < mats.size(); ++i) {
      Permutation mp = matrix_perm(mats[i]);
      std::vector<unsigned> images(k_.degree() + points);
      for (unsigned j = 0; j < k_.degree(); ++j) images[j] = k_.generators()[i][j];
      for (unsigned j = 0; j < points; ++j) images[k_.degree() + j] = k_.degree() + mp[j];
      pairs.push_back(Permutation(std::move(images)));
    }
    StabChain probe(k_.degree() + points);
    for (const Permutation& p : pairs) {
      probe.insert_generator(p);
      if (probe.order() > k_.order()) return false;
    }
    MatrixAction action{dim_, modulus_, mats};
    try {
      validate_action(action, k_);
    } catch (const NotHomomorphism&) {
      return false;
    } catch (const Precondition&) {
      return false;
    }
    return certify_fixed_point_free(action, k_, exclude_);
  }

  bool place(size_t gi, std::vector<Mat>& chosen) {
    if (gi == k_.generators().size()) {
      if (accept(chosen)) {
        found_ = chosen;
        return true;
      }
      return false;
    }
    // All matrices over Z/m in lexicographic flattened order.
    Mat m = Mat::zero(dim_, modulus_);
    while (true) {
      if (++evaluated_ > budget_)
        throw SearchExhausted("fixed-point-free search budget exhausted after " +
                              std::to_string(budget_) + " candidate evaluations");
      if (mat_invertible(m) && viable_generator_image(m, k_.generators()[gi])) {
        chosen.push_back(m);
        if (place(gi + 1, chosen)) return true;
        chosen.pop_back();
      }
      // Increment the flattened entries like an odometer.
      unsigned cell = cells_;
      while (cell > 0) {
        --cell;
        if (++m.a[cell] < modulus_) break;
        m.a[cell] = 0;
        if (cell == 0) return false; // wrapped around: space covered
      }
    }
  }

  const PermGroup& k_;
  unsigned dim_;
  unsigned modulus_;
  ExcludeClass exclude_;
  std::uint64_t budget_;
  unsigned cells_;
  std::uint64_t total_;
  std::uint64_t evaluated_ = 0;
  std::vector<Mat> found_;
};

// ---- structured synthesis ---------------------------------------------------

// Discrete log in a small cyclic group.
std::optional<std::uint64_t> cyclic_log(const Permutation& base, const Permutation& x) {
  Permutation cur = Permutation::identity(base.degree());
  std::uint64_t n = base.order();
  for (std::uint64_t e = 0; e < n; ++e) {
    if (cur == x) return e;
    cur = cur * base;
  }
  return std::nullopt;
}

struct DihedralShape {
  Permutation rotation;   // order m (odd)
  Permutation reflection; // an involution inverting the rotation
};

std::optional<DihedralShape> recognize_dihedral(const PermGroup& k, const Limits& limits) {
  std::uint64_t n = k.order();
  if (n < 6 || n % 2 != 0) return std::nullopt;
  std::uint64_t m = n / 2;
  if (m % 2 == 0 || m < 3) return std::nullopt;
  std::optional<Permutation> rot, refl;
  k.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if (!rot && x.order() == m) rot = x;
    return !rot;
  });
  if (!rot) return std::nullopt;
  k.for_each_element(limits.max_enumeration, [&](const Permutation& x) {
    if (x.order() == 2 && rot->conjugated_by(x) == rot->inverse()) {
      refl = x;
      return false;
    }
    return true;
  });
  if (!refl) return std::nullopt;
  // <rot, refl> must be all of K.
  if (PermGroup(k.degree(), {*rot, *refl}).order() != n) return std::nullopt;
  return DihedralShape{*rot, *refl};
}

// F2 polynomial helpers (bitmask coefficients, bit i = coefficient of x^i).
unsigned poly_mod(unsigned a, unsigned f) {
  int df = 31 - __builtin_clz(f);
  while (a >= (1u << df)) {
    int da = 31 - __builtin_clz(a);
    a ^= f << (da - df);
  }
  return a;
}

unsigned poly_mulmod(unsigned a, unsigned b, unsigned f) {
  unsigned long long r = 0;
  unsigned long long aa = a;
  while (b) {
    if (b & 1) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  // reduce
  int df = 31 - __builtin_clz(f);
  for (int bit = 62; bit >= df; --bit)
    if (r & (1ull << bit)) r ^= static_cast<unsigned long long>(f) << (bit - df);
  return static_cast<unsigned>(r);
}

unsigned poly_powmod(unsigned a, std::uint64_t e, unsigned f) {
  unsigned acc = 1;
  while (e) {
    if (e & 1) acc = poly_mulmod(acc, a, f);
    a = poly_mulmod(a, a, f);
    e >>= 1;
  }
  return acc;
}

// Least irreducible degree-t binary polynomial whose root has
// multiplicative order exactly m.
std::optional<unsigned> order_m_polynomial(unsigned m, unsigned t) {
  for (unsigned f = (1u << t); f < (2u << t); ++f) {
    if (!(f & 1)) continue; // x must not divide f
    // Irreducible: no factor of degree <= t/2.
    bool irreducible = true;
    for (unsigned d = 1; 2 * d <= t && irreducible; ++d)
      for (unsigned g = (1u << d); g < (2u << d) && irreducible; ++g) {
        // trial division: f mod g == 0?
        unsigned r = f;
        int dg = static_cast<int>(d);
        while (r && (31 - __builtin_clz(r)) >= dg) {
          int dr = 31 - __builtin_clz(r);
          r ^= g << (dr - dg);
        }
        if (r == 0) irreducible = false;
      }
    if (!irreducible) continue;
    if (poly_powmod(2, m, f) != 1) continue; // x^m != 1
    bool exact = true;
    for (unsigned d = 1; d < m; ++d)
      if (m % d == 0 && poly_powmod(2, d, f) == 1) {
        exact = false;
        break;
      }
    if (exact) return f;
  }
  return std::nullopt;
}

// Matrix of u -> u * g(x) on F2[x]/f in the power basis, row convention.
Mat f2_multiplication_matrix(unsigned g, unsigned f, unsigned t) {
  Mat m = Mat::zero(t, 2);
  for (unsigned i = 0; i < t; ++i) {
    unsigned img = poly_mulmod(1u << i, g, f);
    for (unsigned j = 0; j < t; ++j) m.at(i, j) = (img >> j) & 1u;
  }
  return m;
}

Mat f2_frobenius_matrix(unsigned j, unsigned f, unsigned t) {
  Mat m = Mat::zero(t, 2);
  for (unsigned i = 0; i < t; ++i) {
    unsigned img = poly_powmod(1u << i, std::uint64_t(1) << j, f);
    for (unsigned jj = 0; jj < t; ++jj) m.at(i, jj) = (img >> jj) & 1u;
  }
  return m;
}

Mat block_diag(const std::vector<Mat>& blocks, unsigned modulus) {
  unsigned dim = 0;
  for (const Mat& b : blocks) dim += b.dim;
  Mat m = Mat::zero(dim, modulus);
  unsigned off = 0;
  for (const Mat& b : blocks) {
    for (unsigned i = 0; i < b.dim; ++i)
      for (unsigned j = 0; j < b.dim; ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.dim;
  }
  return m;
}

Mat mat_inverse_small(const Mat& x) {
  // Inverse via power: order of GL element divides |GL|; cheaper here to
  // iterate x^k until identity (orders involved are tiny).
  Mat acc = x;
  Mat prev = Mat::identity(x.dim, x.modulus);
  while (!(acc == Mat::identity(x.dim, x.modulus))) {
    prev = acc;
    acc = mat_mul(acc, x);
  }
  return prev;
}

// Dihedral D_2m acting on (Z/2)^k with all odd-order elements fixed point
// free: field blocks F_{2^t} with rotation = multiplication by an order-m
// root and reflection = an inverting Frobenius power, or the doubled
// swap-block when no Frobenius power inverts.
std::optional<MatrixAction> dihedral_f2_synthesis(const PermGroup& k, unsigned kdim,
                                                  const Limits& limits) {
  auto shape = recognize_dihedral(k, limits);
  if (!shape) return std::nullopt;
  unsigned m = static_cast<unsigned>(shape->rotation.order());
  // t = multiplicative order of 2 mod m.
  unsigned t = 1;
  {
    unsigned pow = 2 % m;
    while (pow != 1) {
      pow = (pow * 2) % m;
      ++t;
    }
  }
  std::optional<unsigned> inverting_j;
  {
    unsigned pow = 1;
    for (unsigned j = 1; j <= t; ++j) {
      pow = (pow * 2) % m;
      if (pow == m - 1) {
        inverting_j = j;
        break;
      }
    }
  }
  auto f = order_m_polynomial(m, t);
  if (!f) return std::nullopt;
  unsigned zeta = poly_mod(2, *f); // the class of x
  Mat rot_block = f2_multiplication_matrix(zeta, *f, t);
  Mat refl_block = Mat::zero(1, 2);
  unsigned block_dim;
  if (inverting_j) {
    refl_block = f2_frobenius_matrix(*inverting_j, *f, t);
    block_dim = t;
  } else {
    // Doubled block: rotation (R, R^-1), reflection swaps the halves.
    Mat rinv = mat_inverse_small(rot_block);
    Mat r2 = Mat::zero(2 * t, 2);
    Mat s2 = Mat::zero(2 * t, 2);
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = 0; j < t; ++j) {
        r2.at(i, j) = rot_block.at(i, j);
        r2.at(t + i, t + j) = rinv.at(i, j);
        s2.at(i, t + j) = (i == j) ? 1 : 0;
        s2.at(t + i, j) = (i == j) ? 1 : 0;
      }
    rot_block = r2;
    refl_block = s2;
    block_dim = 2 * t;
  }
  if (kdim % block_dim != 0) return std::nullopt;
  unsigned copies = kdim / block_dim;
  Mat big_r = block_diag(std::vector<Mat>(copies, rot_block), 2);
  Mat big_s = block_diag(std::vector<Mat>(copies, refl_block), 2);

  // Express each generator of K through (rotation, reflection).
  std::vector<Mat> matrices;
  for (const Permutation& g : k.generators()) {
    std::optional<std::uint64_t> a = cyclic_log(shape->rotation, g);
    if (a) {
      matrices.push_back(mat_pow(big_r, *a));
      continue;
    }
    a = cyclic_log(shape->rotation, g * shape->reflection);
    if (!a) return std::nullopt;
    matrices.push_back(mat_mul(mat_pow(big_r, *a), big_s));
  }
  return MatrixAction{kdim, 2, matrices};
}

} // namespace

std::optional<MatrixAction> fpf_search(const PermGroup& k, unsigned dim,
                                       unsigned modulus, ExcludeClass exclude,
                                       const Limits& limits) {
  if (dim == 0 || modulus < 2) throw Precondition("fpf_search needs dim >= 1, modulus >= 2");
  if (k.generators().empty()) return MatrixAction{dim, modulus, {}};

  std::uint64_t gl = gl_order(dim, modulus);
  std::uint64_t space = 1;
  bool overflow = false;
  for (size_t i = 0; i < k.generators().size(); ++i) {
    if (gl == 0 || space > limits.search_budget / gl) {
      overflow = true;
      break;
    }
    space *= gl;
  }
  if (!overflow && space <= limits.search_budget) {
    LexSearch search(k, dim, modulus, exclude, limits.search_budget);
    auto found = search.run();
    if (found) {
      if (!certify_fixed_point_free(*found, k, exclude))
        throw Precondition("search result failed the post-hoc certificate");
      return found;
    }
    return std::nullopt; // space covered: proven nonexistence at this size
  }

  // Structured synthesis for the shapes the example families need.
  if (modulus == 2 && exclude == ExcludeClass::TwoElements) {
    if (auto action = dihedral_f2_synthesis(k, dim, limits)) {
      if (!certify_fixed_point_free(*action, k, exclude))
        throw Precondition("synthesized action failed the post-hoc certificate");
      validate_action(*action, k);
      return action;
    }
  }
  if (exclude == ExcludeClass::None && modulus % 2 == 1) {
    if (auto action = quaternionic_synthesis(k, dim, modulus, limits)) {
      if (!certify_fixed_point_free(*action, k, exclude))
        throw Precondition("synthesized action failed the post-hoc certificate");
      validate_action(*action, k);
      return action;
    }
  }
  throw SearchExhausted(
      "search space |GL(" + std::to_string(dim) + ",Z/" + std::to_string(modulus) +
      ")|^" + std::to_string(k.generators().size()) +
      " exceeds the budget and no structured synthesis applies");
}

} // namespace cng
