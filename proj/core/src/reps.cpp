#include "ydn/reps.hpp"

#include <algorithm>
#include <sstream>

namespace ydn {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Cyclotomic Representation::char_value(const Perm& g) const {
  const Perm& base = char_->base;
  if (conjugate(g, base) != base)
    throw std::invalid_argument("element does not centralize the base point");
  Cyclotomic value(1);
  for (const auto& factor : group_.factors()) {
    const int j = factor.length;
    const auto& cycles = factor.cycles;
    auto it = char_->spec.parts.find(j);
    const int k = it == char_->spec.parts.end() ? 0 : it->second.first;
    const int sign = it == char_->spec.parts.end() ? 1 : it->second.second;
    // where does g send each cycle, and with which rotation offset?
    std::map<int, std::size_t> cycle_of_point;
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (int pt : cycles[c]) cycle_of_point[pt] = c;
    std::vector<std::size_t> block(cycles.size());
    long offset_sum = 0;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      int image = g.apply(cycles[c][0] - 1) + 1;
      auto target = cycle_of_point.find(image);
      require(target != cycle_of_point.end(), "element does not centralize the base point");
      block[c] = target->second;
      const auto& tc = cycles[target->second];
      auto pos = std::find(tc.begin(), tc.end(), image);
      offset_sum += static_cast<long>(pos - tc.begin());
    }
    if (k != 0) value *= root_of_unity(j, (k * offset_sum) % j);
    if (sign == -1) {
      // parity of the block permutation
      std::vector<bool> seen(block.size(), false);
      int transpositions = 0;
      for (std::size_t c = 0; c < block.size(); ++c) {
        if (seen[c]) continue;
        std::size_t len = 0, x = c;
        while (!seen[x]) {
          seen[x] = true;
          x = block[x];
          ++len;
        }
        transpositions += static_cast<int>(len) - 1;
      }
      if (transpositions % 2 == 1) value = -value;
    }
  }
  return value;
}

CycMatrix Representation::matrix(const Perm& g) const {
  switch (kind_) {
    case 0: {
      CycMatrix m(1, 1);
      m.at(0, 0) = char_value(g);
      return m;
    }
    case 1: {
      auto it = table_->table.find(g);
      if (it == table_->table.end())
        throw std::invalid_argument("element not in the representation's group");
      return it->second;
    }
    default: {
      const int n = tensor_->split;
      const int m = g.degree();
      std::vector<int> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(m - n));
      for (int i = 0; i < n; ++i) {
        int v = g.apply(i);
        require(v < n, "element does not preserve the tensor blocks");
        left[static_cast<std::size_t>(i)] = v;
      }
      for (int i = n; i < m; ++i) {
        int v = g.apply(i);
        require(v >= n, "element does not preserve the tensor blocks");
        right[static_cast<std::size_t>(i - n)] = v - n;
      }
      return tensor_->left->matrix(Perm::from_images(std::move(left)))
          .kronecker(tensor_->right->matrix(Perm::from_images(std::move(right))));
    }
  }
}

bool Representation::is_trivial() const {
  if (dim_ != 1) return false;
  for (const auto& g : group_.generators()) {
    if (!matrix(g).is_identity()) return false;
  }
  return true;
}

Representation Representation::character(const Subgroup& centralizer, CharacterSpec spec,
                                         std::string label) {
  require(centralizer.centralized().has_value(),
          "character construction needs a centralizer with wreath factors");
  for (auto [j, part] : spec.parts) {
    require(part.second == 1 || part.second == -1, "character sign must be +-1");
    require(part.first >= 0 && part.first < j, "character exponent out of range");
  }
  Representation r;
  r.dim_ = 1;
  r.group_ = centralizer;
  r.label_ = std::move(label);
  r.kind_ = 0;
  r.char_ = std::make_shared<CharBackend>(CharBackend{*centralizer.centralized(), std::move(spec)});
  return r;
}

Representation Representation::from_generator_matrices(const Subgroup& g,
                                                       const std::vector<CycMatrix>& images,
                                                       std::string label) {
  return from_generator_matrices(g, g.generators(), images, std::move(label));
}

Representation Representation::from_generator_matrices(const Subgroup& g,
                                                       const std::vector<Perm>& gens,
                                                       const std::vector<CycMatrix>& images,
                                                       std::string label) {
  require(images.size() == gens.size(), "one matrix per generator required");
  const std::size_t d = images.empty() ? 1 : images[0].rows();
  for (const auto& m : images)
    require(m.rows() == d && m.cols() == d, "generator matrices must share a square shape");

  TableBackend backend;
  backend.table.emplace(Perm(g.degree()), CycMatrix::identity(d));
  std::vector<Perm> frontier{Perm(g.degree())};
  while (!frontier.empty() && backend.consistent) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      const CycMatrix& mx = backend.table.at(x);
      for (std::size_t i = 0; i < images.size(); ++i) {
        Perm y = gens[i] * x;
        CycMatrix my = images[i] * mx;
        auto [it, inserted] = backend.table.emplace(y, my);
        if (inserted) {
          next.push_back(std::move(y));
        } else if (!(it->second == my)) {
          backend.consistent = false;
        }
      }
    }
    frontier = std::move(next);
  }

  Representation r;
  r.dim_ = static_cast<int>(d);
  r.group_ = g;
  r.label_ = std::move(label);
  r.kind_ = 1;
  r.table_ = std::make_shared<TableBackend>(std::move(backend));
  return r;
}

Representation outer_tensor(const Representation& rho, const Representation& lam) {
  const auto& pi = rho.group().centralized();
  const auto& tau = lam.group().centralized();
  require(pi.has_value() && tau.has_value(), "outer tensor needs centralizer factors");
  require(is_orthogonal(*pi, *tau), "outer tensor requires orthogonal supports");

  Representation r;
  r.dim_ = rho.dim() * lam.dim();
  r.group_ = centralizer(pi->degree() + tau->degree(), concat(*pi, *tau));
  r.label_ = rho.label() + "#" + lam.label();
  r.kind_ = 2;
  r.tensor_ = std::make_shared<Representation::TensorBackend>(Representation::TensorBackend{
      std::make_shared<Representation>(rho), std::make_shared<Representation>(lam),
      pi->degree()});
  return r;
}

bool verify_representation(const Representation& rho) {
  if (rho.kind_ == 1 && !rho.table_->consistent) return false;
  const auto& g = rho.group();
  if (!rho.matrix(Perm(g.degree())).is_identity()) return false;
  const bool exhaustive = g.order() <= 24;
  const auto& lhs = exhaustive ? g.elements() : g.generators();
  const auto& rhs = exhaustive ? g.elements() : g.generators();
  for (const auto& x : lhs) {
    CycMatrix mx = rho.matrix(x);
    for (const auto& y : rhs) {
      if (!(rho.matrix(x * y) == mx * rho.matrix(y))) return false;
    }
  }
  return true;
}

Cyclotomic q_ss(const Perm& s, const Representation& rho) {
  CycMatrix m = rho.matrix(s);
  auto lambda = m.scalar_value();
  if (!lambda)
    throw NonScalarAction("base point does not act by a scalar (rho not irreducible over this group?)");
  return *lambda;
}

namespace {

// the paper's presentation transported to any (2,2)-type base point:
// A = first 4-cycle with A^2 = s, B = its reversal involution
std::pair<Perm, Perm> dihedral_presentation(const Subgroup& group) {
  require(group.centralized().has_value() && group.order() == 8,
          "group not dihedral of order 8");
  const Perm& s = *group.centralized();
  std::optional<Perm> a;
  for (const auto& g : group.elements()) {
    if (order(g) == 4 && g * g == s) {
      a = g;
      break;
    }
  }
  require(a.has_value(), "group not dihedral of order 8");
  Perm b = reversal_involution(*a);
  require(group.contains(b), "group not dihedral of order 8");
  return {*a, b};
}

}  // namespace

Representation dihedral4_rho2(const Subgroup& group) {
  auto [a, b] = dihedral_presentation(group);
  CycMatrix ma(2, 2), mb(2, 2);
  ma.at(0, 1) = Cyclotomic(-1);
  ma.at(1, 0) = Cyclotomic(1);
  mb.at(0, 0) = Cyclotomic(-1);
  mb.at(1, 1) = Cyclotomic(1);
  return Representation::from_generator_matrices(group, {a, b}, {ma, mb}, "d4:rho2");
}

Representation dihedral4_character(const Subgroup& group, int e1, int e2) {
  require((e1 == 1 || e1 == -1) && (e2 == 1 || e2 == -1), "dihedral character signs must be +-1");
  auto [a, b] = dihedral_presentation(group);
  CycMatrix ma(1, 1), mb(1, 1);
  ma.at(0, 0) = Cyclotomic(e1);
  mb.at(0, 0) = Cyclotomic(e2);
  std::ostringstream label;
  label << "d4:(" << e1 << "," << e2 << ")";
  return Representation::from_generator_matrices(group, {a, b}, {ma, mb}, label.str());
}

std::vector<Representation> dihedral4_irreps(const Subgroup& group) {
  std::vector<Representation> out;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) out.push_back(dihedral4_character(group, e1, e2));
  out.push_back(dihedral4_rho2(group));
  return out;
}

namespace {

struct FactorInfo {
  int length;
  int count;
};

// nontrivial wreath factors, descending cycle length (the label order)
std::vector<FactorInfo> nontrivial_factors(const Subgroup& centralizer) {
  std::vector<FactorInfo> out;
  for (const auto& f : centralizer.factors()) {
    int m = static_cast<int>(f.cycles.size());
    if (f.length == 1 ? m >= 2 : m >= 1) out.push_back({f.length, m});
  }
  std::sort(out.begin(), out.end(),
            [](const FactorInfo& a, const FactorInfo& b) { return a.length > b.length; });
  return out;
}

std::pair<int, int> sgn_part(int j) {
  // restriction of the ambient sign character: (-1)^{j-1} on a j-cycle,
  // (-1)^j on a swap of two j-cycles
  return {j % 2 == 0 ? j / 2 : 0, j % 2 == 0 ? 1 : -1};
}

std::pair<int, int> word_to_part(const std::string& word, int j, int m) {
  if (word == "eps") return {0, 1};
  if (word == "sgn") return sgn_part(j);
  if (word.rfind("chi", 0) == 0) {
    std::string rest = word.substr(3);
    auto caret = rest.find('^');
    int jj, k = 1;
    try {
      jj = std::stoi(caret == std::string::npos ? rest : rest.substr(0, caret));
      if (caret != std::string::npos) k = std::stoi(rest.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed representation label word: " + word);
    }
    require(jj == j, "chi label length does not match the centralizer factor");
    require(m == 1, "chi label needs a cyclic factor (single cycle)");
    k %= j;
    if (k < 0) k += j;
    return {k, 1};
  }
  throw std::invalid_argument("unknown representation label word: " + word);
}

}  // namespace

Representation build_character(std::string_view label, const Subgroup& centralizer) {
  std::string text(label);
  if (text.rfind("d4:", 0) == 0) {
    if (text == "d4:rho2") return dihedral4_rho2(centralizer);
    std::string args = text.substr(3);
    require(args.size() >= 2 && args.front() == '(' && args.back() == ')',
            "malformed d4 label: " + text);
    args = args.substr(1, args.size() - 2);
    auto comma = args.find(',');
    require(comma != std::string::npos, "malformed d4 label: " + text);
    auto parse_sign = [&](std::string t) {
      if (t == "+" || t == "1" || t == "+1") return 1;
      if (t == "-" || t == "-1") return -1;
      throw std::invalid_argument("malformed d4 label: " + text);
    };
    return dihedral4_character(centralizer, parse_sign(args.substr(0, comma)),
                               parse_sign(args.substr(comma + 1)));
  }

  require(centralizer.centralized().has_value(),
          "label resolution needs a centralizer");
  auto factors = nontrivial_factors(centralizer);

  std::vector<std::string> words;
  std::size_t pos = 0;
  while (true) {
    auto star = text.find('*', pos);
    words.push_back(text.substr(pos, star == std::string::npos ? star : star - pos));
    if (star == std::string::npos) break;
    pos = star + 1;
  }

  CharacterSpec spec;
  if (words.size() == 1 && (words[0] == "eps" || words[0] == "sgn")) {
    // whole-group meaning: trivial character, or the ambient sign restriction
    for (const auto& f : centralizer.factors()) {
      spec.parts[f.length] = words[0] == "eps" ? std::pair<int, int>{0, 1} : sgn_part(f.length);
    }
    return Representation::character(centralizer, std::move(spec), text);
  }
  require(words.size() == factors.size(),
          "label has " + std::to_string(words.size()) + " factors but the centralizer has " +
              std::to_string(factors.size()) + " nontrivial ones");
  for (std::size_t i = 0; i < words.size(); ++i) {
    spec.parts[factors[i].length] = word_to_part(words[i], factors[i].length, factors[i].count);
  }
  return Representation::character(centralizer, std::move(spec), text);
}

}  // namespace ydn
