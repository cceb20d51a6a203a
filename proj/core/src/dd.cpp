#include "toric/dd.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

IRow to_primitive_int(const QRow& v) {
  Int lcm_den(1), gcd_num(0);
  for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator_of(x));
  IRow r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = numerator_of(v[i] * lcm_den);
    gcd_num = gcd(gcd_num, r[i]);
  }
  if (gcd_num > 1)
    for (Int& x : r) x /= gcd_num;
  return r;
}

void normalize_content(IRow& v) {
  Int g(0);
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

Int dot(const IRow& a, const IRow& b) {
  Int s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QRow to_qrow(const IRow& v) {
  QRow r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Incidence of a ray with the rows processed so far.
using TightSet = std::vector<bool>;

bool subset_of(const TightSet& a, const TightSet& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

GeneratorDescription dual_description(size_t dim, const QMat& inequalities,
                                      const QMat& equations) {
  // Equations enter as opposite inequality pairs; the lineality computation
  // below sees them all uniformly.
  QMat rows = inequalities;
  for (const QRow& e : equations) {
    rows.push_back(e);
    QRow neg(e.size());
    for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    rows.push_back(std::move(neg));
  }
  for (const QRow& r : rows)
    if (r.size() != dim) throw ValidationError("dual_description: row dimension mismatch");

  GeneratorDescription out;

  // Lineality space = kernel of all rows.
  QMat lin = kernel_basis(rows, dim);
  for (const QRow& l : lin) out.lineality.push_back(to_qrow(to_primitive_int(l)));

  // Restrict to the row space; the cone there is pointed. Parameterize the
  // subspace by a primitive basis of the row space.
  QMat rspace;
  for (const QRow& row : rows) {
    QMat test = rspace;
    test.push_back(row);
    if (rank_of(test) > rspace.size()) rspace.push_back(row);
  }
  const size_t k = rspace.size();
  if (k == 0) return out;  // whole space

  IMat basis;  // k x dim, rows span the row space
  for (const QRow& b : rspace) basis.push_back(to_primitive_int(b));

  // Projected constraint matrix: a_i . b_j.
  IMat a;
  for (const QRow& row : rows) {
    const IRow ri = to_primitive_int(row);
    IRow pr(k);
    for (size_t j = 0; j < k; ++j) pr[j] = dot(ri, basis[j]);
    a.push_back(std::move(pr));
  }
  const size_t m = a.size();

  // Initial simplicial cone from k independent projected rows.
  std::vector<size_t> init;
  {
    QMat indep;
    for (size_t i = 0; i < m && init.size() < k; ++i) {
      QMat test = indep;
      test.push_back(to_qrow(a[i]));
      if (rank_of(test) > indep.size()) {
        indep.push_back(to_qrow(a[i]));
        init.push_back(i);
      }
    }
  }
  if (init.size() < k) throw Error("dual_description: projected rank deficiency");

  // Rays of { y : B0 y >= 0 } are the columns of B0^{-1}.
  IMat rays;
  {
    QMat b0;
    for (size_t i : init) b0.push_back(to_qrow(a[i]));
    for (size_t j = 0; j < k; ++j) {
      QRow e(k, Rat(0));
      e[j] = Rat(1);
      auto col = solve_unique(b0, e);
      if (!col) throw Error("dual_description: singular initial basis");
      rays.push_back(to_primitive_int(*col));
    }
  }

  std::vector<bool> processed(m, false);
  for (size_t i : init) processed[i] = true;

  auto tight_of = [&](const IRow& r) {
    TightSet t(m, false);
    for (size_t i = 0; i < m; ++i)
      if (processed[i] && dot(a[i], r) == 0) t[i] = true;
    return t;
  };

  std::vector<TightSet> tight;
  for (const IRow& r : rays) tight.push_back(tight_of(r));

  for (size_t step = 0; step < m; ++step) {
    if (processed[step]) continue;
    processed[step] = true;
    std::vector<Int> val(rays.size());
    bool any_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a[step], rays[i]);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) tight[i][step] = true;
      continue;
    }
    IMat next;
    std::vector<TightSet> next_tight;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) tight[i][step] = true;
      next.push_back(rays[i]);
      next_tight.push_back(tight[i]);
    }
    // Combinatorial adjacency: r+ and r- are adjacent iff no third ray is
    // tight on everything both are tight on.
    for (size_t ip = 0; ip < rays.size(); ++ip) {
      if (val[ip] <= 0) continue;
      for (size_t in = 0; in < rays.size(); ++in) {
        if (val[in] >= 0) continue;
        TightSet common(m, false);
        for (size_t c = 0; c < m; ++c) common[c] = tight[ip][c] && tight[in][c];
        bool adjacent = true;
        for (size_t w = 0; w < rays.size(); ++w) {
          if (w == ip || w == in) continue;
          if (subset_of(common, tight[w])) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IRow nr(k);
        for (size_t c = 0; c < k; ++c) nr[c] = val[ip] * rays[in][c] - val[in] * rays[ip][c];
        normalize_content(nr);
        next.push_back(nr);
        TightSet t = common;
        t[step] = true;
        // Recompute exactly; the combination can pick up extra incidences.
        next_tight.push_back(tight_of(next.back()));
      }
    }
    rays = std::move(next);
    tight = std::move(next_tight);
  }

  // Lift back: y -> sum y_j basis_j.
  for (const IRow& r : rays) {
    QRow x(dim, Rat(0));
    for (size_t j = 0; j < k; ++j)
      for (size_t c = 0; c < dim; ++c) x[c] += Rat(r[j]) * Rat(basis[j][c]);
    out.rays.push_back(to_qrow(to_primitive_int(x)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

}  // namespace toric
