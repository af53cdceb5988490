#include "ydn/permcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ydn {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  require(degree >= 1, "degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  require(!images.empty(), "degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    require(v >= 0 && v < static_cast<int>(images.size()), "image out of range");
    require(!seen[static_cast<std::size_t>(v)], "images not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Perm p(static_cast<int>(images.size()));
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    require(!cyc.empty(), "empty cycle");
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1;
      int b = cyc[(i + 1) % cyc.size()] - 1;
      require(a >= 0 && a < degree, "cycle point out of range");
      require(!used[static_cast<std::size_t>(a)], "cycles not disjoint");
      used[static_cast<std::size_t>(a)] = true;
      p.img_[static_cast<std::size_t>(a)] = b;
    }
  }
  return p;
}

Perm Perm::parse(int degree, std::string_view text) {
  // "(1 2)(3 4)" with whitespace-separated points, "e" for the identity
  std::string s(text);
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  skip_ws();
  if (pos < s.size() && s[pos] == 'e') {
    ++pos;
    skip_ws();
    require(pos == s.size(), "trailing characters after identity");
    return Perm(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (pos < s.size()) {
    skip_ws();
    if (pos == s.size()) break;
    require(s[pos] == '(', "expected '('");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      require(pos < s.size(), "unterminated cycle");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      require(end > pos, "expected point number");
      cyc.push_back(std::stoi(s.substr(pos, end - pos)));
      pos = end;
    }
    require(!cyc.empty(), "empty cycle");
    cycles.push_back(std::move(cyc));
  }
  require(!cycles.empty(), "empty permutation text");
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  Perm p(degree());
  p.img_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& p, const Perm& q) {
  require(p.degree() == q.degree(), "degree mismatch");
  std::vector<int> img(p.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = p.img_[static_cast<std::size_t>(q.img_[i])];
  Perm r(p.degree());
  r.img_ = std::move(img);
  return r;
}

Perm compose(const Perm& p, const Perm& q) { return p * q; }

Perm conjugate(const Perm& g, const Perm& h) {
  require(g.degree() == h.degree(), "degree mismatch");
  return g * h * g.inverse();
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || apply(start) == start) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x + 1);
      x = apply(x);
    } while (x != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "e";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

CycleType::CycleType(int degree, std::map<int, int> multiplicities)
    : degree_(degree) {
  require(degree >= 1, "degree must be positive");
  long sum = 0;
  for (auto [j, m] : multiplicities) {
    require(j >= 1 && m >= 0, "invalid cycle type entry");
    if (m > 0) mult_[j] = m;
    sum += static_cast<long>(j) * m;
  }
  require(sum == degree, "cycle lengths do not sum to the degree");
}

CycleType CycleType::parse(int degree, std::string_view text) {
  std::map<int, int> mult;
  std::istringstream is{std::string(text)};
  std::string tok;
  long sum = 0;
  while (is >> tok) {
    int j = 0, m = 1;
    auto caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        j = std::stoi(tok);
      } else {
        j = std::stoi(tok.substr(0, caret));
        m = std::stoi(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed cycle type token: " + tok);
    }
    require(j >= 1 && m >= 1, "malformed cycle type token");
    mult[j] += m;
    sum += static_cast<long>(j) * m;
  }
  require(sum <= degree, "cycle lengths exceed the degree");
  if (sum < degree) mult[1] += static_cast<int>(degree - sum);  // fixed points inferred
  return CycleType(degree, std::move(mult));
}

int CycleType::multiplicity(int j) const {
  auto it = mult_.find(j);
  return it == mult_.end() ? 0 : it->second;
}

long CycleType::order() const {
  long l = 1;
  for (auto [j, m] : mult_) l = std::lcm(l, static_cast<long>(j));
  return l;
}

Int CycleType::centralizer_order() const {
  Int o = 1;
  for (auto [j, m] : mult_) {
    for (int i = 0; i < m; ++i) o *= j;
    o *= factorial(m);
  }
  return o;
}

Int CycleType::class_size() const { return factorial(degree_) / centralizer_order(); }

std::string CycleType::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [j, m] : mult_) {
    if (!first) os << ' ';
    first = false;
    os << j;
    if (m > 1) os << '^' << m;
  }
  return os.str();
}

CycleType cycle_type(const Perm& p) {
  std::map<int, int> mult;
  int moved = 0;
  for (const auto& c : p.cycles()) {
    ++mult[static_cast<int>(c.size())];
    moved += static_cast<int>(c.size());
  }
  if (moved < p.degree()) mult[1] = p.degree() - moved;
  return CycleType(p.degree(), std::move(mult));
}

long order(const Perm& p) { return cycle_type(p).order(); }

namespace {

// places disjoint cycles directly: the smallest unused point leads a cycle of
// each still-needed length, the rest of the cycle runs over arrangements of
// larger unused points
void enumerate_rec(int n, std::map<int, int>& need, std::vector<int>& img,
                   std::vector<bool>& used, std::vector<Perm>& out) {
  int lead = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[static_cast<std::size_t>(i)]) {
      lead = i;
      break;
    }
  }
  if (lead < 0) {
    out.push_back(Perm::from_images(img));
    return;
  }
  for (auto& [j, m] : need) {
    if (m == 0) continue;
    --m;
    used[static_cast<std::size_t>(lead)] = true;
    if (j == 1) {
      img[static_cast<std::size_t>(lead)] = lead;
      enumerate_rec(n, need, img, used, out);
    } else {
      std::vector<int> rest;
      for (int i = lead + 1; i < n; ++i)
        if (!used[static_cast<std::size_t>(i)]) rest.push_back(i);
      std::vector<int> pick(static_cast<std::size_t>(j - 1));
      // iterate over all (j-1)-arrangements of rest
      std::vector<int> idx(static_cast<std::size_t>(j - 1), 0);
      auto rec = [&](auto&& self, int depth) -> void {
        if (depth == j - 1) {
          int prev = lead;
          for (int t = 0; t < j - 1; ++t) {
            img[static_cast<std::size_t>(prev)] = pick[static_cast<std::size_t>(t)];
            prev = pick[static_cast<std::size_t>(t)];
          }
          img[static_cast<std::size_t>(prev)] = lead;
          enumerate_rec(n, need, img, used, out);
          return;
        }
        for (int v : rest) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = true;
          pick[static_cast<std::size_t>(depth)] = v;
          self(self, depth + 1);
          used[static_cast<std::size_t>(v)] = false;
        }
      };
      rec(rec, 0);
    }
    used[static_cast<std::size_t>(lead)] = false;
    ++m;
  }
}

}  // namespace

std::vector<Perm> enumerate_class(int n, const CycleType& t) {
  require(t.degree() == n, "cycle type degree mismatch");
  std::map<int, int> need = t.multiplicities();
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Perm> out;
  enumerate_rec(n, need, img, used, out);
  std::sort(out.begin(), out.end());
  if (Int(static_cast<long>(out.size())) != t.class_size())
    throw std::logic_error("class enumeration size mismatch");
  return out;
}

Perm canonical_rep(int n, const CycleType& t) {
  require(t.degree() == n, "cycle type degree mismatch");
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (auto it = t.multiplicities().rbegin(); it != t.multiplicities().rend(); ++it) {
    auto [j, m] = *it;
    for (int c = 0; c < m; ++c) {
      std::vector<int> cyc(static_cast<std::size_t>(j));
      std::iota(cyc.begin(), cyc.end(), next);
      next += j;
      if (j > 1) cycles.push_back(std::move(cyc));
    }
  }
  return Perm::from_cycles(n, cycles);
}

const std::vector<Perm>& Subgroup::elements() const {
  if (!elements_.empty()) return elements_;
  // breadth-first closure of the generators
  std::set<Perm> seen{Perm(degree_)};
  std::vector<Perm> frontier{Perm(degree_)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens_) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  elements_.assign(seen.begin(), seen.end());
  return elements_;
}

Int Subgroup::order() const {
  if (order_) return *order_;
  return Int(static_cast<long>(elements().size()));
}

bool Subgroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  if (centralized_) return conjugate(g, *centralized_) == *centralized_;
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), g);
}

Subgroup Subgroup::from_generators(int degree, std::vector<Perm> gens) {
  Subgroup s;
  s.degree_ = degree;
  for (const auto& g : gens) require(g.degree() == degree, "generator degree mismatch");
  s.gens_ = std::move(gens);
  s.structure_ = GroupStructure::Wreath;  // unknown; name reports generators
  if (s.gens_.empty()) s.structure_ = GroupStructure::Trivial;
  return s;
}

std::string Subgroup::structure_name() const {
  switch (structure_) {
    case GroupStructure::Trivial:
      return "1";
    case GroupStructure::Full:
      return "S" + std::to_string(degree_);
    case GroupStructure::Dihedral4:
      return "D4";
    case GroupStructure::Cyclic:
    case GroupStructure::ProductOfCyclics:
    case GroupStructure::Wreath: {
      // assemble from the wreath factors T_j = (Z/j)^{m_j} x| S_{m_j}
      std::ostringstream os;
      bool first = true;
      for (const auto& f : factors_) {
        int j = f.length, m = static_cast<int>(f.cycles.size());
        std::string part;
        if (j == 1) {
          if (m < 2) continue;
          part = m == 2 ? "Z2" : "S" + std::to_string(m);
        } else if (m == 1) {
          part = "Z" + std::to_string(j);
        } else if (j == 2 && m == 2) {
          part = "D4";
        } else {
          part = "(Z" + std::to_string(j) + ")^" + std::to_string(m) + ":S" + std::to_string(m);
        }
        if (!first) os << " x ";
        first = false;
        os << part;
      }
      if (first) return "1";
      return os.str();
    }
  }
  return "?";
}

Subgroup centralizer(int n, const Perm& p) {
  require(p.degree() == n, "degree mismatch");
  Subgroup s;
  s.degree_ = n;
  s.centralized_ = p;

  // wreath factor data from the disjoint cycles of p
  std::map<int, std::vector<std::vector<int>>> by_len;
  std::vector<bool> moved(static_cast<std::size_t>(n), false);
  for (const auto& c : p.cycles()) {
    by_len[static_cast<int>(c.size())].push_back(c);
    for (int pt : c) moved[static_cast<std::size_t>(pt - 1)] = true;
  }
  std::vector<int> fixed;
  for (int i = 0; i < n; ++i)
    if (!moved[static_cast<std::size_t>(i)]) fixed.push_back(i + 1);
  if (!fixed.empty()) {
    for (int pt : fixed) by_len[1].push_back({pt});
  }
  for (auto& [j, cycles] : by_len) {
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    s.factors_.push_back(WreathFactor{j, cycles});
  }

  // structural generators: each cycle of p, plus aligned swaps of adjacent
  // same-length cycles
  std::vector<Perm> gens;
  for (const auto& f : s.factors_) {
    if (f.length >= 2) {
      for (const auto& c : f.cycles) gens.push_back(Perm::from_cycles(n, {c}));
    }
    for (std::size_t i = 0; i + 1 < f.cycles.size(); ++i) {
      std::vector<std::vector<int>> swap_cycles;
      for (int t = 0; t < f.length; ++t) {
        swap_cycles.push_back({f.cycles[i][static_cast<std::size_t>(t)],
                               f.cycles[i + 1][static_cast<std::size_t>(t)]});
      }
      gens.push_back(Perm::from_cycles(n, swap_cycles));
    }
  }
  s.gens_ = std::move(gens);

  CycleType t = cycle_type(p);
  s.order_ = t.centralizer_order();

  // structure tag
  bool is_full = p.is_identity();
  int nontrivial = 0, cyclic_factors = 0;
  bool only_d4 = true;
  for (const auto& f : s.factors_) {
    int j = f.length, m = static_cast<int>(f.cycles.size());
    bool factor_trivial = (j == 1 && m <= 1);
    if (factor_trivial) continue;
    ++nontrivial;
    bool cyclic = (j >= 2 && m == 1) || (j == 1 && m == 2);
    if (cyclic) ++cyclic_factors;
    if (!(j == 2 && m == 2)) only_d4 = false;
  }
  if (is_full) {
    s.structure_ = GroupStructure::Full;
  } else if (nontrivial == 0) {
    s.structure_ = GroupStructure::Trivial;
  } else if (nontrivial == 1 && only_d4) {
    s.structure_ = GroupStructure::Dihedral4;
  } else if (cyclic_factors == nontrivial) {
    s.structure_ = nontrivial == 1 ? GroupStructure::Cyclic : GroupStructure::ProductOfCyclics;
  } else {
    s.structure_ = GroupStructure::Wreath;
  }

  // elements: brute filter keeps the ground truth for small degrees
  if (n <= 8) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> els;
    do {
      Perm g = Perm::from_images(img);
      if (conjugate(g, p) == p) els.push_back(std::move(g));
    } while (std::next_permutation(img.begin(), img.end()));
    if (Int(static_cast<long>(els.size())) != *s.order_)
      throw std::logic_error("centralizer order mismatch");
    s.elements_ = std::move(els);
  }
  return s;
}

int CosetSection::index_of(const Perm& t) const {
  auto it = std::lower_bound(cls.begin() + 1, cls.end(), t);
  if (it != cls.end() && *it == t) return static_cast<int>(it - cls.begin());
  if (t == base) return 0;
  return -1;
}

CosetSection coset_section(const std::vector<Perm>& cls, const Perm& s) {
  require(!cls.empty(), "empty class");
  const int n = s.degree();
  CosetSection sec{s, {}, {}};
  sec.cls.push_back(s);
  bool found = false;
  for (const auto& t : cls) {
    if (t == s) {
      found = true;
      continue;
    }
    sec.cls.push_back(t);
  }
  require(found, "base point not in class");
  std::sort(sec.cls.begin() + 1, sec.cls.end());

  sec.reps.assign(sec.cls.size(), Perm(n));
  std::vector<bool> have(sec.cls.size(), false);
  have[0] = true;  // g_1 = e
  std::size_t remaining = sec.cls.size() - 1;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  // one lexicographic sweep: the first g with g |> s = t_i wins for each i
  do {
    if (remaining == 0) break;
    Perm g = Perm::from_images(img);
    Perm t = conjugate(g, s);
    int idx = sec.index_of(t);
    if (idx > 0 && !have[static_cast<std::size_t>(idx)]) {
      sec.reps[static_cast<std::size_t>(idx)] = std::move(g);
      have[static_cast<std::size_t>(idx)] = true;
      --remaining;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  if (remaining != 0) throw std::logic_error("class is not a full conjugacy class");
  return sec;
}

Perm reversal_involution(const Perm& p) {
  const int n = p.degree();
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : p.cycles()) {
    const int j = static_cast<int>(c.size());
    // on the cycle (c_0 c_1 ... c_{j-1}) the position map is x -> -x-2 mod j,
    // which on (1 2 ... j) is exactly (1 j-1)(2 j-2)...
    for (int x = 0; x < j; ++x) {
      int from = c[static_cast<std::size_t>(x)] - 1;
      int to = c[static_cast<std::size_t>((2 * j - 2 - x) % j)] - 1;
      img[static_cast<std::size_t>(from)] = to;
    }
  }
  Perm sigma = Perm::from_images(std::move(img));
  if (conjugate(sigma, p) != p.inverse())
    throw std::logic_error("reversal involution postcondition failed");
  return sigma;
}

Perm concat(const Perm& pi, const Perm& tau) {
  const int n = pi.degree(), p = tau.degree();
  std::vector<int> img(static_cast<std::size_t>(n + p));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = pi.apply(i);
  for (int i = 0; i < p; ++i) img[static_cast<std::size_t>(n + i)] = tau.apply(i) + n;
  return Perm::from_images(std::move(img));
}

bool is_orthogonal(const CycleType& a, const CycleType& b) {
  for (auto [j, m] : a.multiplicities()) {
    if (m > 0 && b.multiplicity(j) > 0) return false;
  }
  return true;
}

bool is_orthogonal(const Perm& pi, const Perm& tau) {
  return is_orthogonal(cycle_type(pi), cycle_type(tau));
}

}  // namespace ydn
