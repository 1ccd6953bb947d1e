#include "ssg/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace ssg {

// ---------------------------------------------------------------------------
// Weight

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
}

Int Weight::level() const {
  Int s = 0;
  for (Int c : coords_) s = add(s, c);
  return s;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add(coords_[i], o.coords_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = sub(coords_[i], o.coords_[i]);
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (Int& c : r.coords_) c = neg(c);
  return r;
}

Weight operator*(Int k, const Weight& w) {
  Weight r = w;
  for (Int& c : r.coords_) c = mul(k, c);
  return r;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Int c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

Int parse_int(std::string_view s, std::string_view context) {
  Int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::vector<Int> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    coords.push_back(parse_int(part, text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

Weight parse_weight(std::string_view text, std::size_t rank) {
  Weight w = parse_weight(text);
  if (w.rank() != rank) {
    throw ParseError("weight '" + std::string(text) + "' has " + std::to_string(w.rank()) +
                     " coordinates, expected " + std::to_string(rank));
  }
  return w;
}

std::string format_weight(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cartan types

bool admissible(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

CartanType::CartanType(std::vector<SimpleType> components) : components_(std::move(components)) {
  if (components_.empty()) throw ParseError("empty Cartan type");
  for (const auto& c : components_) {
    if (!admissible(c.family, c.rank)) {
      throw ParseError("inadmissible rank in component '" + format_simple_type(c) + "'");
    }
  }
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string format_simple_type(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

std::string format_cartan_type(const CartanType& t) {
  std::string out;
  for (const auto& c : t.components()) {
    if (!out.empty()) out += 'x';
    out += format_simple_type(c);
  }
  return out;
}

CartanType parse_cartan_type(std::string_view text) {
  if (text.empty()) throw ParseError("empty Cartan type");
  std::vector<SimpleType> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find('x', start);
    std::string_view part = text.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start);
    const std::string shown(part);
    if (part.size() < 2 || std::string_view("ABCDEFG").find(part[0]) == std::string_view::npos) {
      throw ParseError("malformed component '" + shown + "' in Cartan type '" + std::string(text) + "'");
    }
    std::string_view digits = part.substr(1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits[0] == '0') {
      throw ParseError("malformed component '" + shown + "' in Cartan type '" + std::string(text) + "'");
    }
    SimpleType st{static_cast<Family>(part[0]), n};
    if (!admissible(st.family, st.rank)) {
      throw ParseError("inadmissible rank in component '" + shown + "'");
    }
    comps.push_back(st);
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return CartanType(std::move(comps));
}

std::vector<SimpleType> irreducible_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
      if (admissible(f, n)) out.push_back({f, n});
    }
  }
  return out;
}

std::vector<Component> irreducible_components(const CartanType& t) {
  std::vector<Component> out;
  int first = 0;
  for (const auto& c : t.components()) {
    out.push_back({c, first});
    first += c.rank;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cartan matrices

Matrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank;
  Matrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based nodes, simply laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(2, 3);
      link(3, 4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short, alpha_2 long
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

Matrix block_cartan(const CartanType& t) {
  const int n = t.rank();
  Matrix a(n, std::vector<Int>(n, 0));
  for (const auto& comp : irreducible_components(t)) {
    Matrix block = cartan_matrix(comp.type);
    for (int i = 0; i < comp.type.rank; ++i)
      for (int j = 0; j < comp.type.rank; ++j) a[comp.first + i][comp.first + j] = block[i][j];
  }
  return a;
}

struct Fraction {
  Int num = 0;
  Int den = 1;
};

Fraction reduce(Int num, Int den) {
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  Int g = gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

// d_i a(i,j) = d_j a(j,i), propagated along the Dynkin graph from d = 1 on each component.
std::vector<Int> symmetrize(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Fraction> d(n);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    d[root] = {1, 1};
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[j] || a[i][j] == 0) continue;
        seen[j] = true;
        d[j] = reduce(mul(d[i].num, a[i][j]), mul(d[i].den, a[j][i]));
        queue.push_back(j);
      }
    }
  }
  Int l = 1;
  for (const auto& f : d) l = mul(l / gcd(l, f.den), f.den);
  std::vector<Int> out(n);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = mul(d[i].num, l / d[i].den);
    g = gcd(g, out[i]);
  }
  for (Int& v : out) v /= g;
  return out;
}

}  // namespace

Int Root::height() const {
  Int h = 0;
  for (Int c : simple_coords) h = add(h, c);
  return h;
}

bool Root::is_positive() const {
  return std::all_of(simple_coords.begin(), simple_coords.end(), [](Int c) { return c >= 0; });
}

RootSystem::RootSystem(CartanType type) : type_(std::move(type)) {
  rank_ = static_cast<std::size_t>(type_.rank());
  cartan_ = block_cartan(type_);
  sym_ = symmetrize(cartan_);
  for (std::size_t j = 0; j < rank_; ++j) {
    Weight w = Weight::zero(rank_);
    for (std::size_t i = 0; i < rank_; ++i) w[i] = cartan_[i][j];
    simple_.push_back(std::move(w));
  }

  // Closure of the simple roots under the simple reflections, carrying
  // simple-root coordinates along.
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<Int> c(rank_, 0);
    c[i] = 1;
    seen.insert(simple_[i]);
    queue.push_back({simple_[i], std::move(c)});
  }
  std::vector<Root> all;
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rank_; ++i) {
      const Int k = r.weight[i];
      if (k == 0) continue;
      Root s{r.weight - k * simple_[i], r.simple_coords};
      s.simple_coords[i] = sub(s.simple_coords[i], k);
      if (seen.insert(s.weight).second) queue.push_back(std::move(s));
    }
    all.push_back(std::move(r));
  }

  auto by_height = [](const Root& x, const Root& y) {
    const Int hx = std::abs(x.height()), hy = std::abs(y.height());
    if (hx != hy) return hx < hy;
    return x.weight > y.weight;
  };
  auto mid = std::partition(all.begin(), all.end(), [](const Root& r) { return r.is_positive(); });
  std::sort(all.begin(), mid, by_height);
  std::sort(mid, all.end(), by_height);
  num_positive_ = static_cast<std::size_t>(mid - all.begin());
  roots_ = std::move(all);
}

Int RootSystem::pair(const Weight& w, std::span<const Int> simple_coords) const {
  Int s = 0;
  for (std::size_t j = 0; j < rank_; ++j) {
    if (simple_coords[j] != 0) s = add(s, mul(mul(w[j], simple_coords[j]), sym_[j]));
  }
  return s;
}

bool RootSystem::root_coords(const Weight& w, std::vector<Int>& out) const {
  // Exact Gaussian elimination over the rationals on [A | w].
  const std::size_t n = rank_;
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = {cartan_[i][j], 1};
    m[i][n] = {w[i], 1};
  }
  auto fsub = [](Fraction a, Fraction b) {
    return reduce(sub(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
  };
  auto fmul = [](Fraction a, Fraction b) { return reduce(mul(a.num, b.num), mul(a.den, b.den)); };
  auto fdiv = [](Fraction a, Fraction b) { return reduce(mul(a.num, b.den), mul(a.den, b.num)); };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col].num == 0) ++piv;  // A is nonsingular
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].num == 0) continue;
      Fraction f = fdiv(m[r][col], m[col][col]);
      for (std::size_t c = col; c <= n; ++c) m[r][c] = fsub(m[r][c], fmul(f, m[col][c]));
    }
  }
  out.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Fraction v = fdiv(m[i][n], m[i][i]);
    if (v.den != 1) return false;
    out[i] = v.num;
  }
  return true;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  std::vector<Int> c;
  return root_coords(w, c);
}

RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

// ---------------------------------------------------------------------------
// Weyl group action

Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& w) {
  if (i >= rs.rank()) throw std::out_of_range("simple reflection index out of range");
  const Int k = w[i];
  if (k == 0) return w;
  return w - k * rs.simple_root(i);
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> stack{w};
  std::vector<Weight> out;
  while (!stack.empty()) {
    Weight v = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (v[i] == 0) continue;
      Weight s = simple_reflection(rs, i, v);
      if (seen.insert(s).second) stack.push_back(std::move(s));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DominantRep dominant_representative(const RootSystem& rs, Weight w) {
  int sign = 1;
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank() && w[i] >= 0) ++i;
    if (i == rs.rank()) break;
    w = simple_reflection(rs, i, w);
    sign = -sign;
  }
  // A weight has nontrivial stabilizer iff its dominant conjugate lies on a wall.
  const bool singular = std::any_of(w.coords().begin(), w.coords().end(), [](Int c) { return c == 0; });
  return {std::move(w), sign, singular};
}

Weight rho(const RootSystem& rs) { return Weight(std::vector<Int>(rs.rank(), 1)); }

}  // namespace ssg
