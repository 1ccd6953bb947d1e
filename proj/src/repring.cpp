#include "ssg/repring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssg {

namespace {

void require_dominant(const Weight& w, const char* what) {
  if (!w.is_dominant()) throw std::invalid_argument(std::string(what) + ": weight " + format_weight(w) + " is not dominant");
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const Weight& lam) {
  require_dominant(lam, "weyl_dim");
  const Weight shifted = lam + rho(rs);
  const Weight r = rho(rs);
  Int num = 1, den = 1;
  for (const Root& a : rs.positive_roots()) {
    Int p = rs.pair(shifted, a.simple_coords);
    Int q = rs.pair(r, a.simple_coords);
    Int g = gcd(p, q);
    p /= g;
    q /= g;
    Int g1 = gcd(p, den), g2 = gcd(num, q);
    num = mul(num / g2, p / g1);
    den = mul(den / g1, q / g2);
  }
  if (den != 1) throw ComputationError("Weyl dimension formula gave a non-integer");
  return num;
}

std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lam) {
  require_dominant(lam, "weight_multiplicities");
  const std::size_t n = rs.rank();

  // Dominant weights below lam, reached by subtracting positive roots while
  // staying dominant; each carries the simple-root coordinates of lam - mu.
  struct Node {
    Weight weight;
    std::vector<Int> depth;
    Int height;
  };
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  std::vector<Node> nodes{{lam, std::vector<Int>(n, 0), 0}};
  index.emplace(lam, 0);
  for (std::size_t at = 0; at < nodes.size(); ++at) {
    for (const Root& a : rs.positive_roots()) {
      Weight mu = nodes[at].weight - a.weight;
      if (!mu.is_dominant() || index.count(mu)) continue;
      std::vector<Int> depth = nodes[at].depth;
      for (std::size_t j = 0; j < n; ++j) depth[j] = add(depth[j], a.simple_coords[j]);
      const Int h = add(nodes[at].height, a.height());
      index.emplace(mu, nodes.size());
      nodes.push_back({std::move(mu), std::move(depth), h});
    }
  }
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nodes[a].height < nodes[b].height; });

  std::vector<Int> mult(nodes.size(), 0);
  const Weight two_rho = 2 * rho(rs);
  const Weight lam_rho = lam + two_rho;
  for (std::size_t idx : order) {
    const Node& node = nodes[idx];
    if (node.height == 0) {
      mult[idx] = 1;
      continue;
    }
    Int num = 0;
    for (const Root& a : rs.positive_roots()) {
      Weight up = node.weight;
      while (true) {
        up += a.weight;
        const DominantRep dom = dominant_representative(rs, up);
        auto it = index.find(dom.weight);
        if (it == index.end()) break;
        const Int m = mult[it->second];
        if (m == 0) break;
        num = add(num, mul(m, rs.pair(up, a.simple_coords)));
      }
    }
    num = mul(2, num);
    const Int den = rs.pair(lam_rho + node.weight, node.depth);
    if (den <= 0 || num % den != 0) throw ComputationError("Freudenthal recursion produced a non-integer multiplicity");
    mult[idx] = num / den;
  }

  std::map<Weight, Int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (mult[i] > 0) out.emplace(nodes[i].weight, mult[i]);
  return out;
}

WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lam) {
  WeightMultiset out;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lam))
    for (Weight& w : weyl_orbit(rs, mu)) out.emplace(std::move(w), m);
  return out;
}

Decomposition brauer_klimyk(const RootSystem& rs, const Weight& lam, const WeightMultiset& other) {
  require_dominant(lam, "tensor_decompose");
  const Weight r = rho(rs);
  const Weight shifted = lam + r;
  std::map<Weight, Int> acc;
  for (const auto& [nu, m] : other) {
    DominantRep dom = dominant_representative(rs, shifted + nu);
    if (dom.singular) continue;
    Int& slot = acc[dom.weight - r];
    slot = dom.sign > 0 ? add(slot, m) : sub(slot, m);
  }
  Decomposition out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw ComputationError("negative tensor multiplicity at " + format_weight(w));
    if (m > 0) out.emplace(w, m);
  }
  return out;
}

Decomposition tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  require_dominant(lam, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  if (weyl_dim(rs, mu) <= weyl_dim(rs, lam)) return brauer_klimyk(rs, lam, weight_multiplicities(rs, mu));
  return brauer_klimyk(rs, mu, weight_multiplicities(rs, lam));
}

Decomposition clebsch_gordan_sl2(Int m, Int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("clebsch_gordan_sl2 needs nonnegative arguments");
  if (n > m) std::swap(m, n);
  Decomposition out;
  for (Int k = m + n; k >= m - n; k -= 2) out.emplace(Weight{k}, 1);
  return out;
}

std::vector<Weight> dominant_weights_up_to(const RootSystem& rs, Int bound) {
  std::vector<Weight> out;
  Weight w = Weight::zero(rs.rank());
  auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
    if (i == w.rank()) {
      out.push_back(w);
      return;
    }
    for (Int c = 0; c <= left; ++c) {
      w[i] = c;
      self(self, i + 1, left - c);
    }
    w[i] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

Int decomposition_dim(const RootSystem& rs, const Decomposition& d) {
  Int total = 0;
  for (const auto& [w, m] : d) total = add(total, mul(m, weyl_dim(rs, w)));
  return total;
}

std::string format_decomposition(const Decomposition& d) {
  std::string out;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += format_weight(it->first) + ":" + std::to_string(it->second);
  }
  return out;
}

std::string format_multiset(const WeightMultiset& m) { return format_decomposition(m); }

std::shared_ptr<const WeightMultiset> RepCache::character(const Weight& lam) {
  {
    std::lock_guard lock(mu_);
    if (auto it = chars_.find(lam); it != chars_.end()) return it->second;
  }
  auto ch = std::make_shared<const WeightMultiset>(weight_multiplicities(rs_, lam));
  std::lock_guard lock(mu_);
  return chars_.emplace(lam, std::move(ch)).first->second;
}

Int RepCache::dim(const Weight& lam) {
  {
    std::lock_guard lock(mu_);
    if (auto it = dims_.find(lam); it != dims_.end()) return it->second;
  }
  const Int d = weyl_dim(rs_, lam);
  std::lock_guard lock(mu_);
  dims_.emplace(lam, d);
  return d;
}

std::shared_ptr<const Decomposition> RepCache::tensor(const Weight& lam, const Weight& mu) {
  auto key = lam < mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
  {
    std::lock_guard lock(mu_);
    if (auto it = tensors_.find(key); it != tensors_.end()) return it->second;
  }
  const bool expand_mu = dim(mu) <= dim(lam);
  const Weight& big = expand_mu ? lam : mu;
  const Weight& small = expand_mu ? mu : lam;
  auto d = std::make_shared<const Decomposition>(brauer_klimyk(rs_, big, *character(small)));
  std::lock_guard lock(mu_);
  return tensors_.emplace(std::move(key), std::move(d)).first->second;
}

}  // namespace ssg
