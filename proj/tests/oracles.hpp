#pragma once

// Independent reference computations for the test suites.  None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ssg/lattice.hpp"
#include "ssg/repring.hpp"
#include "ssg/rootsys.hpp"

namespace oracle {

using ssg::Int;
using ssg::Matrix;
using ssg::Weight;

/// Roots as simple-root coordinate vectors, by reflection closure on the
/// simple-root side: s_i(beta) = beta - (sum_j A(i,j) beta_j) e_i.
inline std::set<std::vector<Int>> root_closure(const Matrix& a) {
  const std::size_t n = a.size();
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> stack;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a[i][j] * b[j];
      auto c = b;
      c[i] -= pairing;
      if (seen.insert(c).second) stack.push_back(c);
    }
  }
  return seen;
}

/// Textbook root counts.
inline std::size_t known_root_count(const ssg::SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case ssg::Family::A: return n * n + n;
    case ssg::Family::B:
    case ssg::Family::C: return 2 * n * n;
    case ssg::Family::D: return 2 * n * n - 2 * n;
    case ssg::Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case ssg::Family::F: return 48;
    case ssg::Family::G: return 12;
  }
  return 0;
}

inline Int det_bruteforce(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += ((c % 2) ? -1 : 1) * m[0][c] * det_bruteforce(minor);
  }
  return d;
}

/// Invariant factors via determinantal divisors: d_1...d_k = gcd of all k x k minors.
inline std::vector<Int> determinantal_invariant_factors(const Matrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Int> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Int g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.end() - static_cast<std::ptrdiff_t>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<std::ptrdiff_t>(k), csel.end(), true);
      do {
        Matrix sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<Int> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = std::gcd(g, det_bruteforce(sub));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    divisors.push_back(g);
  }
  std::vector<Int> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k)
    factors.push_back(divisors[k - 1] == 0 ? 0 : divisors[k] / divisors[k - 1]);
  return factors;
}

/// |C[n]| = #{x : n x = 0} for the cokernel C of an invertible square
/// integer matrix, by direct enumeration of (Z/N)^r modulo the column span,
/// N = |det|.
inline std::map<Int, Int> cokernel_torsion_counts(const Matrix& a) {
  const std::size_t r = a.size();
  const Int big = std::abs(det_bruteforce(a));
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= static_cast<std::size_t>(big);
  auto decode = [&](std::size_t code) {
    std::vector<Int> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = static_cast<Int>(code % static_cast<std::size_t>(big));
      code /= static_cast<std::size_t>(big);
    }
    return v;
  };
  auto encode = [&](const std::vector<Int>& v) {
    std::size_t code = 0;
    for (std::size_t i = r; i-- > 0;) code = code * static_cast<std::size_t>(big) + static_cast<std::size_t>(((v[i] % big) + big) % big);
    return code;
  };
  // H = image of the columns in (Z/N)^r, by closure.
  std::vector<bool> in_h(total, false);
  std::vector<std::size_t> stack{0};
  in_h[0] = true;
  while (!stack.empty()) {
    auto v = decode(stack.back());
    stack.pop_back();
    for (std::size_t c = 0; c < r; ++c) {
      auto w = v;
      for (std::size_t i = 0; i < r; ++i) w[i] += a[i][c];
      const std::size_t code = encode(w);
      if (!in_h[code]) {
        in_h[code] = true;
        stack.push_back(code);
      }
    }
  }
  const Int h_size = static_cast<Int>(std::count(in_h.begin(), in_h.end(), true));
  std::map<Int, Int> counts;
  for (Int n = 1; n <= big; ++n) {
    if (big % n) continue;
    Int killed = 0;
    for (std::size_t code = 0; code < total; ++code) {
      auto v = decode(code);
      for (auto& x : v) x *= n;
      if (in_h[encode(v)]) ++killed;
    }
    counts[n] = killed / h_size;
  }
  return counts;
}

/// |G[n]| = prod gcd(n, d_i) for a group in invariant-factor form.
inline Int torsion_count(const ssg::FiniteAbelianGroup& g, Int n) {
  Int c = 1;
  for (Int d : g.invariant_factors()) c *= std::gcd(n, d);
  return c;
}

/// Every subgroup of g as a sorted element set: subsets containing 0 and
/// closed under addition.  Practical for |g| <= 16.
inline std::set<std::vector<ssg::Element>> subgroups_by_powerset(const ssg::FiniteAbelianGroup& g) {
  const auto elems = g.elements();  // elems[0] is 0
  const std::size_t n = elems.size();
  std::set<std::vector<ssg::Element>> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<ssg::Element> s{elems[0]};
    for (std::size_t i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(elems[i]);
    std::set<ssg::Element> members(s.begin(), s.end());
    bool closed = true;
    for (std::size_t i = 0; i < s.size() && closed; ++i)
      for (std::size_t j = i; j < s.size(); ++j)
        if (!members.count(g.add(s[i], s[j]))) {
          closed = false;
          break;
        }
    if (closed) out.insert(std::vector<ssg::Element>(members.begin(), members.end()));
  }
  return out;
}

/// All elements of a subgroup, by closure from its generators.
inline std::vector<ssg::Element> subgroup_elements(const ssg::Subgroup& h) {
  const auto& g = h.ambient();
  std::set<ssg::Element> s{g.zero()};
  bool grew = true;
  const auto gens = h.generators();
  while (grew) {
    grew = false;
    std::vector<ssg::Element> cur(s.begin(), s.end());
    for (const auto& x : cur)
      for (const auto& y : gens)
        if (s.insert(g.add(x, y)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

/// Pointwise product (convolution) of two characters.
inline ssg::WeightMultiset convolve(const ssg::WeightMultiset& a, const ssg::WeightMultiset& b) {
  ssg::WeightMultiset out;
  for (const auto& [x, m] : a)
    for (const auto& [y, k] : b) out[x + y] += m * k;
  return out;
}

/// Decomposition by repeatedly peeling the character of the highest
/// remaining dominant weight off the product character.
inline ssg::Decomposition peel_decompose(const ssg::RootSystem& rs, ssg::WeightMultiset ch) {
  ssg::Decomposition out;
  auto height = [&](const Weight& w) {
    // (w, 2 rho): strictly positive on every positive root
    Int s = 0;
    for (const auto& r : rs.positive_roots()) s += rs.pair(w, r.simple_coords);
    return s;
  };
  while (!ch.empty()) {
    const Weight* top = nullptr;
    for (const auto& [w, m] : ch)
      if (m != 0 && (top == nullptr || height(w) > height(*top))) top = &w;
    if (!top) break;
    const Weight hw = *top;
    const Int k = ch[hw];
    out[hw] = k;
    for (const auto& [w, m] : ssg::weight_multiplicities(rs, hw)) ch[w] -= k * m;
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
  }
  return out;
}

/// Dominant weights with every coordinate in [0, max].
inline std::vector<Weight> box_weights(std::size_t rank, Int max) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rank);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rank) {
      out.push_back(w);
      return;
    }
    for (Int c = 0; c <= max; ++c) {
      w[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline Weight random_weight(std::mt19937& rng, std::size_t rank, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  Weight w = Weight::zero(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  Matrix m(rows, std::vector<Int>(cols));
  for (auto& row : m)
    for (auto& v : row) v = d(rng);
  return m;
}

}  // namespace oracle
