#include "ssg/grading.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssg {

namespace {

struct PairIndex {
  std::size_t left;
  std::size_t right;
};

std::vector<PairIndex> pairs_of(std::size_t n) {
  std::vector<PairIndex> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.push_back({i, j});
  return out;
}

Decomposition pair_product(const RootSystem& rs, const std::vector<Weight>& gens, const std::vector<WeightMultiset>& chars,
                           const std::vector<Int>& dims, const PairIndex& p) {
  // Expand the smaller factor.
  if (dims[p.right] <= dims[p.left]) return brauer_klimyk(rs, gens[p.left], chars[p.right]);
  return brauer_klimyk(rs, gens[p.right], chars[p.left]);
}

void append_relations(std::vector<TensorRelation>& out, const Weight& lam, const Weight& mu, const Decomposition& d) {
  for (const auto& [nu, m] : d) out.push_back({nu, lam, mu});
}

}  // namespace

std::vector<TensorRelation> generate_relations_serial(const RootSystem& rs, Int bound) {
  const std::vector<Weight> gens = dominant_weights_up_to(rs, bound);
  std::vector<WeightMultiset> chars;
  std::vector<Int> dims;
  for (const Weight& g : gens) {
    chars.push_back(weight_multiplicities(rs, g));
    dims.push_back(weyl_dim(rs, g));
  }
  std::vector<TensorRelation> out;
  for (const PairIndex& p : pairs_of(gens.size()))
    append_relations(out, gens[p.left], gens[p.right], pair_product(rs, gens, chars, dims, p));
  return out;
}

std::vector<TensorRelation> generate_relations(const RootSystem& rs, Int bound) {
  const std::vector<Weight> gens = dominant_weights_up_to(rs, bound);
  const std::int64_t n = static_cast<std::int64_t>(gens.size());
  std::vector<WeightMultiset> chars(gens.size());
  std::vector<Int> dims(gens.size());
  const std::vector<PairIndex> pairs = pairs_of(gens.size());
  const std::int64_t np = static_cast<std::int64_t>(pairs.size());
  std::vector<Decomposition> products(pairs.size());
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

#pragma omp parallel
  {
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        chars[i] = weight_multiplicities(rs, gens[i]);
        dims[i] = weyl_dim(rs, gens[i]);
      } catch (...) {
#pragma omp critical(ssg_relations_error)
        if (!failure) failure = std::current_exception();
        failed = true;
      }
    }
    // implicit barrier: every character is ready
#pragma omp for schedule(dynamic)
    for (std::int64_t k = 0; k < np; ++k) {
      if (failed) continue;
      try {
        products[k] = pair_product(rs, gens, chars, dims, pairs[k]);
      } catch (...) {
#pragma omp critical(ssg_relations_error)
        if (!failure) failure = std::current_exception();
        failed = true;
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TensorRelation> out;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    append_relations(out, gens[pairs[k].left], gens[pairs[k].right], products[k]);
  return out;
}

const Element& GradingPresentation::class_of(const Weight& w) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), w);
  if (it == generators.end() || *it != w) throw std::out_of_range("weight " + format_weight(w) + " is not a generator");
  return class_map[static_cast<std::size_t>(it - generators.begin())];
}

GradingPresentation universal_grading_group(const std::vector<TensorRelation>& rels, const std::vector<Weight>& gens) {
  GradingPresentation p;
  p.generators = gens;
  std::sort(p.generators.begin(), p.generators.end());
  p.generators.erase(std::unique(p.generators.begin(), p.generators.end()), p.generators.end());
  p.relations = rels;
  const std::size_t n = p.generators.size();

  auto column = [&](const Weight& w) {
    auto it = std::lower_bound(p.generators.begin(), p.generators.end(), w);
    if (it == p.generators.end() || *it != w)
      throw std::invalid_argument("relation mentions " + format_weight(w) + ", which is not a generator");
    return static_cast<std::size_t>(it - p.generators.begin());
  };

  Matrix rows;
  for (const auto& r : rels) {
    std::vector<Int> row(n, 0);
    row[column(r.child)] = add(row[column(r.child)], 1);
    row[column(r.left)] = sub(row[column(r.left)], 1);
    row[column(r.right)] = sub(row[column(r.right)], 1);
    rows.push_back(std::move(row));
  }

  // Row space of R maps to the row space of D under y -> y V, so generator j
  // has class (row j of V) modulo the diagonal.
  std::vector<Int> diag;
  Matrix right = identity_matrix(n);
  if (!rows.empty() && n > 0) {
    SmithForm snf = smith_normal_form(rows);
    diag = snf.diagonal();
    right = std::move(snf.right);
  }
  diag.resize(n, 0);

  std::vector<Int> factors;
  std::vector<std::size_t> torsion_idx, free_idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] == 0) {
      free_idx.push_back(i);
    } else if (diag[i] > 1) {
      torsion_idx.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  p.torsion = FiniteAbelianGroup(std::move(factors));
  p.free_rank = free_idx.size();
  for (std::size_t j = 0; j < n; ++j) {
    Element e;
    for (std::size_t t = 0; t < torsion_idx.size(); ++t) e.push_back(mod(right[j][torsion_idx[t]], diag[torsion_idx[t]]));
    for (std::size_t i : free_idx) e.push_back(right[j][i]);
    p.class_map.push_back(std::move(e));
  }
  return p;
}

GradingPresentation grading_presentation(const RootSystem& rs, Int bound) {
  const std::vector<Weight> gens = dominant_weights_up_to(rs, bound);
  std::vector<TensorRelation> rels;
  for (auto& r : generate_relations(rs, bound))
    if (r.child.level() <= bound) rels.push_back(std::move(r));
  return universal_grading_group(rels, gens);
}

Element grading_class(const RootSystem& rs, const Weight& w) {
  if (w.rank() != rs.rank()) throw std::invalid_argument("weight rank does not match the root system");
  return FundamentalQuotient(rs.cartan_type()).project(w);
}

bool class_map_matches(const RootSystem& rs, const GradingPresentation& p) {
  if (p.free_rank != 0) return false;
  const FundamentalQuotient fq(rs.cartan_type());
  const FiniteAbelianGroup& target = fq.group();
  if (p.torsion.order() != target.order()) return false;

  // The pairs (class_map(g), class(g)) must generate the graph of an
  // isomorphism: a subgroup of order |P/Q| surjecting onto both factors.
  const std::size_t a = p.torsion.num_factors(), b = target.num_factors();
  std::vector<Int> moduli = p.torsion.invariant_factors();
  moduli.insert(moduli.end(), target.invariant_factors().begin(), target.invariant_factors().end());
  Matrix gens(a + b);
  std::vector<Element> images;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    Element img = fq.project(p.generators[j]);
    for (std::size_t i = 0; i < a; ++i) gens[i].push_back(p.class_map[j][i]);
    for (std::size_t i = 0; i < b; ++i) gens[a + i].push_back(img[i]);
    images.push_back(std::move(img));
  }
  for (std::size_t k = 0; k < a + b; ++k)
    for (std::size_t i = 0; i < a + b; ++i) gens[i].push_back(i == k ? moduli[k] : 0);
  const Matrix h = column_hermite_form(gens);
  Int index = 1;
  for (std::size_t i = 0; i < a + b; ++i) index = mul(index, h[i][i]);
  const Int graph_order = mul(p.torsion.order(), target.order()) / index;
  if (graph_order != target.order()) return false;
  return Subgroup(target, images) == Subgroup::whole(target);
}

// ---------------------------------------------------------------------------
// Tensor-word search

EquivalenceSearch::EquivalenceSearch(const RootSystem& rs, Int bound, int depth)
    : rs_(rs), cache_(rs), letters_(dominant_weights_up_to(rs, bound)), depth_(depth) {
  std::vector<State> first;
  for (const Weight& x : letters_) {
    State s{{x}, {x}};
    if (seen_.insert(s.support).second) first.push_back(std::move(s));
  }
  levels_.push_back(std::move(first));
}

std::size_t EquivalenceSearch::states() const {
  std::size_t n = 0;
  for (const auto& l : levels_) n += l.size();
  return n;
}

bool EquivalenceSearch::extend() {
  if (static_cast<int>(levels_.size()) >= depth_) return false;
  std::vector<State> next;
  for (const State& s : levels_.back()) {
    for (const Weight& x : letters_) {
      std::set<Weight> support;
      for (const Weight& nu : s.support)
        for (const auto& [w, m] : *cache_.tensor(nu, x)) support.insert(w);
      std::vector<Weight> key(support.begin(), support.end());
      if (!seen_.insert(key).second) continue;
      std::vector<Weight> word = s.word;
      word.push_back(x);
      next.push_back({std::move(word), std::move(key)});
    }
  }
  levels_.push_back(std::move(next));
  return true;
}

EquivalenceResult EquivalenceSearch::find(const Weight& a, const Weight& b) {
  if (!a.is_dominant() || !b.is_dominant()) throw std::invalid_argument("tensor_equivalent needs dominant weights");
  if (a == b) return {true, {a}};
  for (std::size_t level = 0;; ++level) {
    if (level == levels_.size() && !extend()) return {};
    for (const State& s : levels_[level]) {
      if (std::binary_search(s.support.begin(), s.support.end(), a) &&
          std::binary_search(s.support.begin(), s.support.end(), b))
        return {true, s.word};
    }
  }
}

EquivalenceResult tensor_equivalent(const RootSystem& rs, const Weight& a, const Weight& b, Int bound, int depth) {
  EquivalenceSearch search(rs, bound, depth);
  return search.find(a, b);
}

}  // namespace ssg
