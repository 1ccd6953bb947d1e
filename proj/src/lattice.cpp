#include "ssg/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace ssg {

// ---------------------------------------------------------------------------
// Integer matrices

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Matrix c(rows, std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = add(c[i][j], mul(a[i][k], b[k][j]));
    }
  return c;
}

Int determinant(const Matrix& input) {
  Matrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return mul(sign, m[n - 1][n - 1]);
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t n = std::min(diag.size(), diag.empty() ? std::size_t{0} : diag[0].size());
  for (std::size_t i = 0; i < n; ++i) d.push_back(diag[i][i]);
  return d;
}

namespace {

void add_row_multiple(Matrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = add(m[dst][j], mul(k, m[src][j]));
}

void add_col_multiple(Matrix& m, std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (auto& row : m) row[dst] = add(row[dst], mul(k, row[src]));
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm s{identity_matrix(rows), m, identity_matrix(cols)};
  Matrix& a = s.diag;
  const std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return s;  // trailing block is zero
      std::swap(a[t], a[pi]);
      std::swap(s.left[t], s.left[pi]);
      swap_cols(a, t, pj);
      swap_cols(s.right, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int q = floor_div(a[i][t], a[t][t]);
        add_row_multiple(a, i, t, neg(q));
        add_row_multiple(s.left, i, t, neg(q));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int q = floor_div(a[t][j], a[t][t]);
        add_col_multiple(a, j, t, neg(q));
        add_col_multiple(s.right, j, t, neg(q));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row_multiple(a, t, i, 1);
            add_row_multiple(s.left, t, i, 1);
            clean = false;
            break;
          }
      if (clean) break;
    }
    if (a[t][t] < 0) {
      for (Int& v : a[t]) v = neg(v);
      for (Int& v : s.left[t]) v = neg(v);
    }
  }
  return s;
}

Matrix column_hermite_form(const Matrix& gens) {
  Matrix m = gens;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  for (std::size_t i = 0; i < rows && t < cols; ++i) {
    while (true) {
      std::size_t p = cols;
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (p == cols || std::abs(m[i][j]) < std::abs(m[i][p]))) p = j;
      if (p == cols) break;
      swap_cols(m, t, p);
      bool clean = true;
      for (std::size_t j = t + 1; j < cols; ++j) {
        add_col_multiple(m, j, t, neg(floor_div(m[i][j], m[i][t])));
        if (m[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (t == cols || m[i][t] == 0) continue;  // no pivot in this row
    if (m[i][t] < 0)
      for (auto& row : m) row[t] = neg(row[t]);
    for (std::size_t j = 0; j < t; ++j) add_col_multiple(m, j, t, neg(floor_div(m[i][j], m[i][t])));
    ++t;
  }
  for (auto& row : m) row.resize(t);
  return m;
}

// ---------------------------------------------------------------------------
// Finite abelian groups

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
  const std::size_t n = orders.size();
  Matrix d(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (orders[i] == 0) throw std::invalid_argument("infinite cyclic factor");
    d[i][i] = orders[i];
  }
  std::vector<Int> f;
  for (Int v : smith_normal_form(d).diagonal())
    if (v > 1) f.push_back(v);
  return FiniteAbelianGroup(std::move(f));
}

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (Int d : factors_) o = mul(o, d);
  return o;
}

Element FiniteAbelianGroup::reduce(Element e) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = mod(e[i], factors_[i]);
  return e;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = mod(ssg::add(a[i], b[i]), factors_[i]);
  return r;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  Element e = zero();
  while (true) {
    out.push_back(e);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++e[i] < factors_[i]) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string format_group(const FiniteAbelianGroup& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.invariant_factors().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.invariant_factors()[i]);
  }
  return out + "]";
}

Subgroup::Subgroup(FiniteAbelianGroup ambient, const std::vector<Element>& generators) : ambient_(std::move(ambient)) {
  const std::size_t k = ambient_.num_factors();
  Matrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : generators) {
      if (g.size() != k) throw std::invalid_argument("generator has wrong length");
      m[i].push_back(mod(g[i], ambient_.invariant_factors()[i]));
    }
  }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) m[i].push_back(i == j ? ambient_.invariant_factors()[i] : 0);
  hermite_ = column_hermite_form(m);
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    Element e = g.zero();
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return Subgroup(g, gens);
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  const std::size_t k = ambient_.num_factors();
  for (std::size_t j = 0; j < k; ++j) {
    Element e(k);
    for (std::size_t i = 0; i < k; ++i) e[i] = hermite_[i][j];
    e = ambient_.reduce(std::move(e));
    if (std::any_of(e.begin(), e.end(), [](Int v) { return v != 0; })) out.push_back(std::move(e));
  }
  return out;
}

Int Subgroup::order() const {
  Int index = 1;
  for (std::size_t i = 0; i < hermite_.size(); ++i) index = mul(index, hermite_[i][i]);
  return ambient_.order() / index;
}

bool Subgroup::contains(const Element& e) const {
  const std::size_t k = ambient_.num_factors();
  std::vector<Int> v = e;
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i] % hermite_[i][i] != 0) return false;
    const Int q = v[i] / hermite_[i][i];
    for (std::size_t r = i; r < k; ++r) v[r] = sub(v[r], mul(q, hermite_[r][i]));
  }
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (!(ambient_ == other.ambient_)) return false;
  const std::size_t k = ambient_.num_factors();
  for (std::size_t j = 0; j < k; ++j) {
    Element col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = other.hermite_[i][j];
    if (!contains(col)) return false;
  }
  return true;
}

FiniteAbelianGroup Subgroup::abstract_group() const {
  // H = L / D Z^k; write the columns d_j e_j in the Hermite basis of L.
  const std::size_t k = ambient_.num_factors();
  Matrix x(k, std::vector<Int>(k, 0));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Int> v(k, 0);
    v[j] = ambient_.invariant_factors()[j];
    for (std::size_t i = 0; i < k; ++i) {
      const Int q = v[i] / hermite_[i][i];  // exact: D Z^k ⊂ L
      x[i][j] = q;
      for (std::size_t r = i; r < k; ++r) v[r] = sub(v[r], mul(q, hermite_[r][i]));
    }
  }
  std::vector<Int> f;
  for (Int d : smith_normal_form(x).diagonal())
    if (d > 1) f.push_back(d);
  return FiniteAbelianGroup(std::move(f));
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  const Int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  return a.hermite_ < b.hermite_;
}

std::string format_generators(const Subgroup& h) {
  std::string out = "[";
  bool first = true;
  for (const auto& g : h.generators()) {
    if (!first) out += ',';
    first = false;
    out += '[';
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(g[i]);
    }
    out += ']';
  }
  return out + "]";
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, Int cap) {
  if (g.order() > cap) {
    throw EnumerationCapError("group " + format_group(g) + " of order " + std::to_string(g.order()) +
                              " exceeds the subgroup enumeration cap " + std::to_string(cap));
  }
  const std::vector<Element> elems = g.elements();
  std::set<Subgroup> seen{Subgroup::trivial(g)};
  std::vector<Subgroup> frontier{Subgroup::trivial(g)};
  // Every subgroup is reached from the trivial one by adjoining one element at a time.
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      const std::vector<Element> base = h.generators();
      for (const auto& e : elems) {
        if (h.contains(e)) continue;
        std::vector<Element> gens = base;
        gens.push_back(e);
        Subgroup bigger(g, gens);
        if (seen.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// P/Q and diagrams

FundamentalQuotient::FundamentalQuotient(const CartanType& t) {
  const RootSystem rs(t);
  const SmithForm snf = smith_normal_form(rs.cartan_matrix());
  std::vector<Int> factors;
  const auto d = snf.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 1) {
      factors.push_back(d[i]);
      rows_.push_back(snf.left[i]);
    }
  }
  group_ = FiniteAbelianGroup(std::move(factors));
}

Element FundamentalQuotient::project(const Weight& w) const {
  Element e(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Int s = 0;
    for (std::size_t j = 0; j < w.rank(); ++j) s = add(s, mul(rows_[r][j], w[j]));
    e[r] = s;
  }
  return group_.reduce(std::move(e));
}

FiniteAbelianGroup fundamental_group(const CartanType& t) { return FundamentalQuotient(t).group(); }

std::vector<Diagram> diagrams(const CartanType& t, Int cap) {
  std::vector<Diagram> out;
  auto subs = enumerate_subgroups(fundamental_group(t), cap);
  for (std::size_t i = 0; i < subs.size(); ++i) out.push_back({t, std::move(subs[i]), i});
  return out;
}

FiniteAbelianGroup center_char_group(const Diagram& d) { return d.subgroup.abstract_group(); }

bool weight_in_lattice(const RootSystem& rs, const Weight& w, const Diagram& d) {
  if (!(rs.cartan_type() == d.cartan_type)) throw std::invalid_argument("root system and diagram have different types");
  if (w.rank() != rs.rank()) throw std::invalid_argument("weight rank does not match the root system");
  return d.subgroup.contains(FundamentalQuotient(rs.cartan_type()).project(w));
}

bool isogeny_order(const Diagram& d1, const Diagram& d2) {
  if (!(d1.cartan_type == d2.cartan_type)) throw std::invalid_argument("isogeny order needs diagrams of one type");
  return d1.subgroup.contains(d2.subgroup);
}

}  // namespace ssg
