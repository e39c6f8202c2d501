#pragma once

// Brute-force reference implementations for tests. They read structure
// constants out of kernel objects and share no evaluation, elimination or
// enumeration code with the kernel.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liekit/algebra.hpp"
#include "liekit/modules.hpp"

namespace oracle {

using Num = mpq_class;
using Vec = std::vector<Num>;
using Mat = std::vector<Vec>;  // rows

inline Num num(const liekit::Scalar& s) {
  return s.field().is_rational() ? s.rational() : Num(static_cast<unsigned long>(s.residue()));
}

// Exact test for x = 0 in Q (p = 0) or in F_p for integer x.
inline bool is_zero(const Num& x, std::uint32_t p) {
  if (p == 0) return x == 0;
  mpz_class r = x.get_num() % p;
  return x.get_den() == 1 && r == 0;
}

inline bool vec_zero(const Vec& v, std::uint32_t p) {
  return std::all_of(v.begin(), v.end(), [p](const Num& x) { return is_zero(x, p); });
}

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec scale(const Num& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Vec apply(const Mat& m, const Vec& x) {
  Vec out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += m[r][c] * x[c];
  return out;
}

inline int sign(int a, int b) { return (a & b & 1) ? -1 : 1; }

struct Alg {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t labels = 0;
  int family = 1;
  bool graded = false;
  std::vector<int> par;
  std::vector<Num> c;  // ((k*n + i)*n + j)*n + l
  std::array<std::vector<Mat>, 3> endo;

  const Num& at(std::size_t k, std::size_t i, std::size_t j, std::size_t l) const {
    return c[((k * n + i) * n + j) * n + l];
  }
};

inline Vec to_vec(const liekit::Vector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(num(x));
  return out;
}

inline Mat to_mat(const liekit::Matrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col) out[r][col] = num(m(r, col));
  return out;
}

inline Alg from(const liekit::MultiAlgebra& a) {
  Alg o;
  o.p = a.field().characteristic();
  o.n = a.dim();
  o.labels = a.label_count();
  o.family = liekit::kind_family(a.kind());
  o.graded = liekit::is_super(a.kind());
  for (std::size_t i = 0; i < o.n; ++i) o.par.push_back(a.parity(i));
  for (std::size_t k = 0; k < o.labels; ++k)
    for (std::size_t i = 0; i < o.n; ++i)
      for (std::size_t j = 0; j < o.n; ++j)
        for (std::size_t l = 0; l < o.n; ++l) o.c.push_back(num(a.bracket(k).entry(i, j, l)));
  if (a.endos())
    for (std::size_t f = 0; f < 3; ++f)
      for (const auto& m : a.endos()->family(f)) o.endo[f].push_back(to_mat(m));
  return o;
}

inline Vec mul(const Alg& a, std::size_t k, const Vec& x, const Vec& y) {
  Vec out(a.n, 0);
  for (std::size_t i = 0; i < a.n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t l = 0; l < a.n; ++l) out[l] += x[i] * y[j] * a.at(k, i, j, l);
    }
  }
  return out;
}

inline bool eq(const Alg& a, const Vec& x, const Vec& y) { return vec_zero(sub(x, y), a.p); }

// Each identity below is written out from its defining formula on basis vectors.

inline bool grading(const Alg& a) {
  for (std::size_t k = 0; k < a.labels; ++k)
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j < a.n; ++j) {
        Vec v = mul(a, k, unit(a.n, i), unit(a.n, j));
        for (std::size_t l = 0; l < a.n; ++l)
          if (a.par[l] != (a.par[i] ^ a.par[j]) && !is_zero(v[l], a.p)) return false;
      }
  return true;
}

inline bool antisymmetry(const Alg& a) {
  for (std::size_t k = 0; k < a.labels; ++k)
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t j = 0; j < a.n; ++j) {
        Vec x = unit(a.n, i), y = unit(a.n, j);
        int s = a.graded ? sign(a.par[i], a.par[j]) : 1;
        if (!eq(a, mul(a, k, x, y), scale(-s, mul(a, k, y, x)))) return false;
      }
  return true;
}

inline bool alternating(const Alg& a) {
  for (std::size_t k = 0; k < a.labels; ++k)
    for (std::size_t i = 0; i < a.n; ++i) {
      if (a.graded && a.par[i]) continue;
      Vec x = unit(a.n, i);
      if (!vec_zero(mul(a, k, x, x), a.p)) return false;
    }
  return true;
}

template <typename F>
bool all_triples(const Alg& a, F&& f) {
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j)
      for (std::size_t m = 0; m < a.n; ++m)
        if (!f(unit(a.n, i), unit(a.n, j), unit(a.n, m), a.par[i], a.par[j], a.par[m])) return false;
  return true;
}

inline bool jacobi_first(const Alg& a) {
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k) {
      bool ok = all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int, int be, int ga) {
        if (!a.graded) {
          // [[x,y]_h,z]_k + [[y,z]_k,x]_h + [[z,x]_h,y]_k = 0
          Vec s = add(add(mul(a, k, mul(a, h, x, y), z), mul(a, h, mul(a, k, y, z), x)),
                      mul(a, k, mul(a, h, z, x), y));
          return vec_zero(s, a.p);
        }
        // [[x,y]_h,z]_k = [x,[y,z]_k]_h + (-1)^{bg} [[x,z]_h,y]_k
        Vec lhs = mul(a, k, mul(a, h, x, y), z);
        Vec rhs = add(mul(a, h, x, mul(a, k, y, z)), scale(sign(be, ga), mul(a, k, mul(a, h, x, z), y)));
        return eq(a, lhs, rhs);
      });
      if (!ok) return false;
    }
  return true;
}

inline bool long_jacobi_first(const Alg& a) {
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = h; k < a.labels; ++k) {
      bool ok = all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int al, int be, int ga) {
        int sga = a.graded ? sign(ga, al) : 1, sab = a.graded ? sign(al, be) : 1, sbg = a.graded ? sign(be, ga) : 1;
        Vec s(a.n, 0);
        for (auto [u, v] : {std::pair{h, k}, std::pair{k, h}}) {
          s = add(s, scale(sga, mul(a, v, mul(a, u, x, y), z)));
          s = add(s, scale(sab, mul(a, v, mul(a, u, y, z), x)));
          s = add(s, scale(sbg, mul(a, v, mul(a, u, z, x), y)));
        }
        return vec_zero(s, a.p);
      });
      if (!ok) return false;
    }
  return true;
}

inline bool jacobi_second(const Alg& a) {
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k) {
      bool ok = all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int, int be, int ga) {
        if (!a.graded) {
          // <<x,y>_k,z>_h = <x,<y,z>_h>_k + <<x,z>_h,y>_k
          Vec lhs = mul(a, h, mul(a, k, x, y), z);
          Vec rhs = add(mul(a, k, x, mul(a, h, y, z)), mul(a, k, mul(a, h, x, z), y));
          return eq(a, lhs, rhs);
        }
        // <<x,y>_h,z>_k = <x,<y,z>_k>_h + (-1)^{bg} <<x,z>_k,y>_h
        Vec lhs = mul(a, k, mul(a, h, x, y), z);
        Vec rhs = add(mul(a, h, x, mul(a, k, y, z)), scale(sign(be, ga), mul(a, h, mul(a, k, x, z), y)));
        return eq(a, lhs, rhs);
      });
      if (!ok) return false;
    }
  return true;
}

inline bool label_flip(const Alg& a) {
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k) {
      bool ok = all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int, int, int) {
        return eq(a, mul(a, h, mul(a, k, x, y), z), mul(a, k, mul(a, h, x, y), z));
      });
      if (!ok) return false;
    }
  return true;
}

inline bool endo_even(const Alg& a) {
  for (const auto& fam : a.endo)
    for (const auto& m : fam)
      for (std::size_t i = 0; i < a.n; ++i) {
        Vec v = oracle::apply(m, unit(a.n, i));
        for (std::size_t l = 0; l < a.n; ++l)
          if (a.par[l] != a.par[i] && !is_zero(v[l], a.p)) return false;
      }
  return true;
}

inline bool jacobi_third(const Alg& a) {
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k)
      for (const auto& s0 : a.endo[0])
        for (const auto& s1 : a.endo[1])
          for (const auto& s2 : a.endo[2]) {
            bool ok = all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int, int be, int ga) {
              // (x o_h y) o_k s(z) = s1(x) o_h (y o_k z) + (-1)^{bg} (x o_k z) o_h s2(y)
              int s = a.graded ? sign(be, ga) : 1;
              Vec lhs = mul(a, k, mul(a, h, x, y), oracle::apply(s0, z));
              Vec rhs = add(mul(a, h, oracle::apply(s1, x), mul(a, k, y, z)),
                            scale(s, mul(a, h, mul(a, k, x, z), oracle::apply(s2, y))));
              return eq(a, lhs, rhs);
            });
            if (!ok) return false;
          }
  return true;
}

// [[x,y],s(z)] + [[y,z],s(x)] + [[z,x],s(y)] = 0 for label 0.
inline bool hom_lie(const Alg& a, const Mat& s) {
  return all_triples(a, [&](const Vec& x, const Vec& y, const Vec& z, int, int, int) {
    Vec t = add(add(mul(a, 0, mul(a, 0, x, y), oracle::apply(s, z)), mul(a, 0, mul(a, 0, y, z), oracle::apply(s, x))),
                mul(a, 0, mul(a, 0, z, x), oracle::apply(s, y)));
    return vec_zero(t, a.p);
  });
}

/// Identity name -> pass, for the checks the kernel runs on this kind.
inline std::map<std::string, bool> checks(const Alg& a, bool strict_alternating = false) {
  std::map<std::string, bool> out;
  if (a.graded) out["grading"] = grading(a);
  if (a.family == 1) {
    out["antisymmetry"] = antisymmetry(a);
    if (strict_alternating && a.p == 2) out["alternating"] = alternating(a);
    out["jacobi_first"] = jacobi_first(a);
    out["long_jacobi_first"] = long_jacobi_first(a);
  } else if (a.family == 2) {
    out["jacobi_second"] = jacobi_second(a);
    out["label_flip"] = label_flip(a);
  } else {
    if (a.graded) out["endo_even"] = endo_even(a);
    out["jacobi_third"] = jacobi_third(a);
  }
  return out;
}

inline bool valid(const Alg& a, bool strict_alternating = false) {
  for (const auto& [name, ok] : checks(a, strict_alternating))
    if (!ok) return false;
  return true;
}

// Gaussian elimination on a copy; values are reduced mod p when p > 0.
inline Num reduce(const Num& x, std::uint32_t p) {
  if (p == 0) return x;
  mpz_class r = x.get_num() % p;
  if (r < 0) r += p;
  return Num(r);
}

inline Num inv(const Num& x, std::uint32_t p) {
  if (p == 0) return 1 / x;
  mpz_class r, m = p, v = x.get_num();
  mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return Num(r);
}

inline std::size_t rank(Mat rows, std::uint32_t p) {
  for (auto& r : rows)
    for (auto& x : r) x = reduce(x, p);
  std::size_t rk = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rk]);
    Num iv = inv(rows[rk][c], p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rk || rows[r][c] == 0) continue;
      Num f = rows[r][c] * iv;
      for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] = reduce(rows[r][cc] - f * rows[rk][cc], p);
    }
    ++rk;
  }
  return rk;
}

inline bool in_span(const Mat& rows, const Vec& v, std::uint32_t p) {
  Mat ext = rows;
  ext.push_back(v);
  return rank(ext, p) == rank(rows, p);
}

inline bool same_span(const Mat& a, const Mat& b, std::uint32_t p) {
  Mat both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = rank(both, p);
  return r == rank(a, p) && r == rank(b, p);
}

inline Mat rows_of(const liekit::Subspace& s) { return to_mat(s.basis()); }

/// Annihilator generators over all basis pairs and ordered label pairs.
inline Mat annihilator_generators(const Alg& a, const std::string& which) {
  Mat out;
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k)
      for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
          Vec x = unit(a.n, i), y = unit(a.n, j);
          if (which == "first" || which == "super_first" || which == "second_minus" ||
              which == "super_second_minus") {
            out.push_back(sub(mul(a, h, x, y), mul(a, k, x, y)));
          } else if (which == "second_plus") {
            out.push_back(add(mul(a, h, x, y), mul(a, k, y, x)));
          } else if (which == "super_second_plus") {
            out.push_back(add(mul(a, h, x, y), scale(sign(a.par[i], a.par[j]), mul(a, k, y, x))));
          }
        }
  return out;
}

/// x * v and (two-sided) v * x stay inside span(rows) for every basis x and label.
inline bool closed(const Alg& a, const Mat& rows, bool two_sided) {
  for (const auto& v : rows)
    for (std::size_t k = 0; k < a.labels; ++k)
      for (std::size_t i = 0; i < a.n; ++i) {
        if (!in_span(rows, mul(a, k, unit(a.n, i), v), a.p)) return false;
        if (two_sided && !in_span(rows, mul(a, k, v, unit(a.n, i)), a.p)) return false;
      }
  return true;
}

// Vectors of F_p^n are coded as integers in [0, p^n), digit i = coordinate i.
struct Space {
  std::uint32_t p;
  std::size_t n;
  std::size_t size() const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= p;
    return s;
  }
  Vec decode(std::size_t code) const {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i, code /= p) v[i] = static_cast<unsigned long>(code % p);
    return v;
  }
  std::size_t encode(const Vec& v) const {
    std::size_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * p + static_cast<std::size_t>(reduce(v[i], p).get_num().get_ui());
    return code;
  }
};

using MemberSet = std::vector<bool>;

/// Every subspace of F_p^n as its set of members, grown one vector at a time.
inline std::vector<MemberSet> all_subspaces(const Space& sp) {
  const std::size_t N = sp.size();
  MemberSet zero(N, false);
  zero[0] = true;
  std::set<MemberSet> seen{zero};
  std::vector<MemberSet> frontier{zero};
  while (!frontier.empty()) {
    std::vector<MemberSet> next;
    for (const auto& s : frontier)
      for (std::size_t v = 0; v < N; ++v) {
        if (s[v]) continue;
        MemberSet t(N, false);
        Vec vv = sp.decode(v);
        for (std::size_t u = 0; u < N; ++u) {
          if (!s[u]) continue;
          Vec uu = sp.decode(u);
          for (std::uint32_t c = 0; c < sp.p; ++c) t[sp.encode(add(uu, scale(c, vv)))] = true;
        }
        if (seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline MemberSet members_of(const Space& sp, const Mat& rows) {
  MemberSet s(sp.size(), false);
  for (std::size_t v = 0; v < sp.size(); ++v) s[v] = in_span(rows, sp.decode(v), sp.p);
  return s;
}

inline std::size_t member_dim(const Space& sp, const MemberSet& s) {
  std::size_t count = std::count(s.begin(), s.end(), true), d = 0;
  while (count > 1) count /= sp.p, ++d;
  return d;
}

/// Members closed under the given maps and, with parities, split by parity.
template <typename Maps>
bool invariant(const Space& sp, const MemberSet& s, const Maps& maps, const std::vector<int>* par) {
  for (std::size_t v = 0; v < sp.size(); ++v) {
    if (!s[v]) continue;
    Vec vv = sp.decode(v);
    for (const auto& m : maps)
      if (!s[sp.encode(m(vv))]) return false;
    if (par) {
      Vec even = vv;
      for (std::size_t i = 0; i < sp.n; ++i)
        if ((*par)[i]) even[i] = 0;
      if (!s[sp.encode(even)]) return false;
    }
  }
  return true;
}

/// Entries of every tensor, stacked; trivial iff every 2x2 minor vanishes.
inline bool proportional(const Alg& a) {
  const std::size_t per = a.n * a.n * a.n;
  for (std::size_t k1 = 0; k1 < a.labels; ++k1)
    for (std::size_t k2 = k1 + 1; k2 < a.labels; ++k2)
      for (std::size_t x = 0; x < per; ++x)
        for (std::size_t y = x + 1; y < per; ++y) {
          Num m = a.c[k1 * per + x] * a.c[k2 * per + y] - a.c[k1 * per + y] * a.c[k2 * per + x];
          if (!is_zero(m, a.p)) return false;
        }
  return true;
}

// Module identities evaluated as operators on carrier basis vectors.
struct Rep {
  Alg alg;
  std::size_t m = 0;
  std::vector<int> cpar;
  std::vector<std::vector<Mat>> f, g;  // [label][basis]
  bool has_g = false;

  Vec act(const std::vector<std::vector<Mat>>& fam, std::size_t k, const Vec& x, const Vec& v) const {
    Vec out(m, 0);
    for (std::size_t i = 0; i < alg.n; ++i)
      if (x[i] != 0) out = add(out, scale(x[i], oracle::apply(fam[k][i], v)));
    return out;
  }
};

inline Rep from(const liekit::ModuleRep& r) {
  Rep o;
  o.alg = from(r.algebra());
  o.m = r.carrier_dim();
  for (std::size_t v = 0; v < o.m; ++v) o.cpar.push_back(r.carrier_parity(v));
  for (const auto& per_label : r.f()) {
    o.f.emplace_back();
    for (const auto& mat : per_label) o.f.back().push_back(to_mat(mat));
  }
  if (r.g()) {
    o.has_g = true;
    for (const auto& per_label : *r.g()) {
      o.g.emplace_back();
      for (const auto& mat : per_label) o.g.back().push_back(to_mat(mat));
    }
  }
  return o;
}

/// Adjoint maps built straight from the products: ad for 1st kinds,
/// f = -r and g = l for 2nd kinds.
inline Rep adjoint(const Alg& a) {
  Rep o;
  o.alg = a;
  o.m = a.n;
  o.cpar = a.par;
  o.has_g = a.family == 2;
  o.f.assign(a.labels, std::vector<Mat>(a.n, Mat(a.n, Vec(a.n, 0))));
  o.g = o.f;
  for (std::size_t k = 0; k < a.labels; ++k)
    for (std::size_t i = 0; i < a.n; ++i)
      for (std::size_t col = 0; col < a.n; ++col) {
        Vec x = unit(a.n, i), v = unit(a.n, col);
        Vec fv = a.family == 1 ? mul(a, k, x, v) : scale(-1, mul(a, k, v, x));
        Vec gv = mul(a, k, x, v);
        for (std::size_t r = 0; r < a.n; ++r) {
          o.f[k][i][r][col] = fv[r];
          o.g[k][i][r][col] = gv[r];
        }
      }
  return o;
}

inline bool module_valid(const Rep& r) {
  const Alg& a = r.alg;
  const bool gr = a.graded;
  for (std::size_t h = 0; h < a.labels; ++h)
    for (std::size_t k = 0; k < a.labels; ++k)
      for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
          for (std::size_t v = 0; v < r.m; ++v) {
            Vec x = unit(a.n, i), y = unit(a.n, j), w = unit(r.m, v);
            const int s = gr ? sign(a.par[i], a.par[j]) : 1;
            auto F = [&](std::size_t l, const Vec& e, const Vec& u) { return r.act(r.f, l, e, u); };
            auto G = [&](std::size_t l, const Vec& e, const Vec& u) { return r.act(r.g, l, e, u); };
            auto same = [&](const Vec& p, const Vec& q) { return vec_zero(sub(p, q), a.p); };
            if (a.family == 1) {
              // f_h([x,y]_k) = f_h(x) f_k(y) - s f_h(y) f_k(x);  f_k(x) f_h(y) = f_h(x) f_k(y)
              Vec lhs = F(h, mul(a, k, x, y), w);
              Vec rhs = sub(F(h, x, F(k, y, w)), scale(s, F(h, y, F(k, x, w))));
              if (!same(lhs, rhs)) return false;
              if (!same(F(k, x, F(h, y, w)), F(h, x, F(k, y, w)))) return false;
            } else {
              // f_h(<x,y>_k) = s f_h(x) f_k(y) - f_k(y) f_h(x), likewise for g_h
              if (!same(F(h, mul(a, k, x, y), w), sub(scale(s, F(h, x, F(k, y, w))), F(k, y, F(h, x, w)))))
                return false;
              if (!same(G(h, mul(a, k, x, y), w), sub(scale(s, G(h, x, F(k, y, w))), F(k, y, G(h, x, w)))))
                return false;
              // g_k(x) g_h(y) = g_h(x) f_k(y) = g_k(x) f_h(y)
              Vec gg = G(k, x, G(h, y, w));
              if (!same(gg, G(h, x, F(k, y, w))) || !same(gg, G(k, x, F(h, y, w)))) return false;
              // f_k(x) f_h(y) = f_h(x) f_k(y);  f_k(x) g_h(y) = f_h(x) g_k(y)
              if (!same(F(k, x, F(h, y, w)), F(h, x, F(k, y, w)))) return false;
              if (!same(F(k, x, G(h, y, w)), F(h, x, G(k, y, w)))) return false;
            }
          }
  if (gr) {
    // f_k(e_i) shifts carrier parity by the parity of e_i
    auto parity_ok = [&](const std::vector<std::vector<Mat>>& fam) {
      for (std::size_t k = 0; k < fam.size(); ++k)
        for (std::size_t i = 0; i < a.n; ++i)
          for (std::size_t row = 0; row < r.m; ++row)
            for (std::size_t col = 0; col < r.m; ++col)
              if ((r.cpar[row] != (r.cpar[col] ^ a.par[i])) && !is_zero(fam[k][i][row][col], a.p)) return false;
      return true;
    };
    if (!parity_ok(r.f) || (r.has_g && !parity_ok(r.g))) return false;
  }
  return true;
}

}  // namespace oracle
