#include "ydn/ydmod.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ydn {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string basis_name(const YDModule& m, int a) {
  std::ostringstream os;
  os << "g" << (a / m.block_dim() + 1) << "(x)v" << (a % m.block_dim() + 1);
  return os.str();
}

}  // namespace

std::pair<int, CycMatrix> YDModule::act_block(const Perm& g, int i) const {
  Perm u = g * section_.reps[static_cast<std::size_t>(i)];
  Perm t = conjugate(u, section_.base);
  int h = section_.index_of(t);
  if (h < 0) throw std::logic_error("action left the class");
  Perm gamma = section_.reps[static_cast<std::size_t>(h)].inverse() * u;
  return {h, rho_.matrix(gamma)};
}

CycVector YDModule::act(const Perm& g, const CycVector& v) const {
  require(static_cast<int>(v.size()) == dim(), "vector dimension mismatch");
  const int r = block_dim();
  CycVector out(v.size());
  for (int i = 0; i < blocks(); ++i) {
    bool nonzero = false;
    for (int k = 0; k < r; ++k) {
      if (!v[static_cast<std::size_t>(index(i, k))].is_zero()) nonzero = true;
    }
    if (!nonzero) continue;
    auto [j, mat] = act_block(g, i);
    for (int k2 = 0; k2 < r; ++k2) {
      for (int k = 0; k < r; ++k) {
        const auto& x = v[static_cast<std::size_t>(index(i, k))];
        if (!x.is_zero() && !mat.at(static_cast<std::size_t>(k2), static_cast<std::size_t>(k)).is_zero())
          out[static_cast<std::size_t>(index(j, k2))] +=
              mat.at(static_cast<std::size_t>(k2), static_cast<std::size_t>(k)) * x;
      }
    }
  }
  return out;
}

YDModule build_module(const std::vector<Perm>& cls, const Perm& s, const Representation& rho) {
  // rho must represent the full centralizer of s
  require(rho.group().degree() == s.degree(), "rho's group has the wrong degree");
  for (const auto& g : rho.group().generators()) {
    require(conjugate(g, s) == s, "rho's group does not centralize s");
  }
  require(rho.group().order() == cycle_type(s).centralizer_order(),
          "rho's group is not the full centralizer of s");
  CosetSection section = coset_section(cls, s);
  return YDModule(std::move(section), rho);
}

BraidingOperator braiding(const YDModule& m) {
  const int blocks = m.blocks(), r = m.block_dim(), d = m.dim();
  BraidingOperator c(d);
  for (int i = 0; i < blocks; ++i) {
    const Perm& ti = m.degree_of_block(i);
    for (int j = 0; j < blocks; ++j) {
      auto [h, mat] = m.act_block(ti, j);
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          int a = m.index(i, k), b = m.index(j, l);
          auto& col = c.column(a, b);
          for (int l2 = 0; l2 < r; ++l2) {
            const auto& x = mat.at(static_cast<std::size_t>(l2), static_cast<std::size_t>(l));
            if (!x.is_zero()) col.push_back({m.index(h, l2), a, x});
          }
        }
      }
    }
  }
  return c;
}

BraidingOperator diagonal_braiding_operator(const DiagonalBraiding& q) {
  const int d = static_cast<int>(q.rank());
  BraidingOperator c(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      c.column(a, b).push_back({b, a, q.q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]});
  return c;
}

std::string braiding_to_json(const BraidingOperator& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (int a = 0; a < c.dim(); ++a) {
    for (int b = 0; b < c.dim(); ++b) {
      const auto& col = c.column(a, b);
      if (col.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : col) {
        terms.push_back({{"pair", {t.a, t.b}}, {"coeff", t.coeff.to_string()}});
      }
      entries.push_back({{"from", {a, b}}, {"to", std::move(terms)}});
    }
  }
  nlohmann::json out{{"schema_version", "1"}, {"dim", c.dim()}, {"entries", std::move(entries)}};
  return out.dump(2);
}

namespace {

// sparse vector on basis triples of V (x) V (x) V
using Triple = std::array<int, 3>;
using TripleVec = std::map<Triple, Cyclotomic>;

void add_term(TripleVec& v, const Triple& t, const Cyclotomic& x) {
  auto it = v.find(t);
  if (it == v.end()) {
    v.emplace(t, x);
  } else {
    it->second += x;
    if (it->second.is_zero()) v.erase(it);
  }
}

// apply c on legs (leg, leg+1)
TripleVec apply_leg(const BraidingOperator& c, const TripleVec& v, int leg) {
  TripleVec out;
  for (const auto& [t, x] : v) {
    const auto& col = c.column(t[static_cast<std::size_t>(leg)], t[static_cast<std::size_t>(leg) + 1]);
    for (const auto& term : col) {
      Triple u = t;
      u[static_cast<std::size_t>(leg)] = term.a;
      u[static_cast<std::size_t>(leg) + 1] = term.b;
      add_term(out, u, x * term.coeff);
    }
  }
  return out;
}

bool braid_equation_holds(const BraidingOperator& c, const Triple& t) {
  TripleVec v{{t, Cyclotomic(1)}};
  auto lhs = apply_leg(c, apply_leg(c, apply_leg(c, v, 0), 1), 0);
  auto rhs = apply_leg(c, apply_leg(c, apply_leg(c, v, 1), 0), 1);
  return lhs == rhs;
}

}  // namespace

AxiomReport verify_axioms(const YDModule& m) {
  AxiomReport report;
  const int n = m.base().degree();

  // YD compatibility delta(g.m) = (g |> deg m) (x) g.m for ambient generators
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(Perm::from_cycles(n, {{1, 2}}));
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  for (const auto& g : gens) {
    for (int i = 0; i < m.blocks() && report.yd_ok; ++i) {
      auto [j, mat] = m.act_block(g, i);
      if (m.degree_of_block(j) != conjugate(g, m.degree_of_block(i))) {
        report.yd_ok = false;
        report.witness = "coaction degree of " + g.to_cycle_string() + " . block " +
                         std::to_string(i + 1) + " is not the conjugated degree";
      }
    }
    if (!report.yd_ok) break;
  }

  // the action must compose: g.(h.m) = (gh).m; a corrupted table fails here
  std::vector<Perm> words = gens;
  for (const auto& g : gens)
    for (const auto& h : gens) words.push_back(g * h);
  for (const auto& g : words) {
    if (!report.yd_ok) break;
    for (const auto& h : words) {
      if (!report.yd_ok) break;
      Perm gh = g * h;
      for (int a = 0; a < m.dim() && report.yd_ok; ++a) {
        CycVector e(static_cast<std::size_t>(m.dim()));
        e[static_cast<std::size_t>(a)] = Cyclotomic(1);
        if (m.act(g, m.act(h, e)) != m.act(gh, e)) {
          report.yd_ok = false;
          report.witness = "action of " + g.to_cycle_string() + " after " +
                           h.to_cycle_string() + " differs from their product on " +
                           basis_name(m, a);
        }
      }
    }
  }

  // braid equation
  const int d = m.dim();
  auto c = braiding(m);
  auto check_triple = [&](int a, int b, int e) {
    if (!braid_equation_holds(c, {a, b, e})) {
      report.braid_ok = false;
      report.witness = "braid equation fails on (" + basis_name(m, a) + ", " +
                       basis_name(m, b) + ", " + basis_name(m, e) + ")";
      return false;
    }
    return true;
  };
  if (d <= 12) {
    for (int a = 0; a < d && report.braid_ok; ++a)
      for (int b = 0; b < d && report.braid_ok; ++b)
        for (int e = 0; e < d && report.braid_ok; ++e) check_triple(a, b, e);
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, d - 1);
    for (int iter = 0; iter < 2000 && report.braid_ok; ++iter)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
  return report;
}

std::variant<BraidingOperator, NotClosed> restrict_braiding(const BraidingOperator& c,
                                                            const std::vector<CycVector>& w) {
  require(!w.empty(), "empty subspace");
  const int d = c.dim();
  const int k = static_cast<int>(w.size());
  for (const auto& v : w) require(static_cast<int>(v.size()) == d, "vector dimension mismatch");
  require(linearly_independent(w), "restriction basis is linearly dependent");

  // columns of the pair basis w_a (x) w_b, as vectors in V (x) V
  CycMatrix pair_basis(static_cast<std::size_t>(d) * static_cast<std::size_t>(d),
                       static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < d; ++x) {
        if (w[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)].is_zero()) continue;
        for (int y = 0; y < d; ++y) {
          if (w[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)].is_zero()) continue;
          pair_basis.at(static_cast<std::size_t>(x) * static_cast<std::size_t>(d) +
                            static_cast<std::size_t>(y),
                        static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                            static_cast<std::size_t>(b)) =
              w[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] *
              w[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)];
        }
      }

  CycMatrix images(static_cast<std::size_t>(d) * static_cast<std::size_t>(d),
                   static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      // c(w_a (x) w_b)
      for (int x = 0; x < d; ++x) {
        const auto& xa = w[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
        if (xa.is_zero()) continue;
        for (int y = 0; y < d; ++y) {
          const auto& yb = w[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)];
          if (yb.is_zero()) continue;
          for (const auto& term : c.column(x, y)) {
            images.at(static_cast<std::size_t>(term.a) * static_cast<std::size_t>(d) +
                          static_cast<std::size_t>(term.b),
                      static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                          static_cast<std::size_t>(b)) += xa * yb * term.coeff;
          }
        }
      }
    }

  auto expansion = solve_matrix(pair_basis, images);
  if (!expansion) {
    // identify a failing pair for the report
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        CycVector rhs(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
        for (std::size_t row = 0; row < rhs.size(); ++row)
          rhs[row] = images.at(row, static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                                        static_cast<std::size_t>(b));
        if (!solve(pair_basis, rhs)) return NotClosed{a, b};
      }
    return NotClosed{0, 0};
  }

  BraidingOperator out(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto& col = out.column(a, b);
      for (int a2 = 0; a2 < k; ++a2)
        for (int b2 = 0; b2 < k; ++b2) {
          const auto& coeff = expansion->at(
              static_cast<std::size_t>(a2) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(b2),
              static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                  static_cast<std::size_t>(b));
          if (!coeff.is_zero()) col.push_back({a2, b2, coeff});
        }
    }
  return out;
}

std::optional<DiagonalBraiding> as_diagonal(const BraidingOperator& c) {
  const int d = c.dim();
  std::vector<std::vector<Cyclotomic>> q(static_cast<std::size_t>(d),
                                         std::vector<Cyclotomic>(static_cast<std::size_t>(d)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const auto& col = c.column(a, b);
      if (col.size() != 1 || col[0].a != b || col[0].b != a || col[0].coeff.is_zero())
        return std::nullopt;
      q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = col[0].coeff;
    }
  return DiagonalBraiding{std::move(q)};
}

Rank2Real rank2_real_subspace(const YDModule& m, const Perm& sigma) {
  const Perm& s = m.base();
  require(conjugate(sigma, s) == s.inverse() && !(s.inverse() == s),
          "need sigma s sigma^-1 = s^-1 != s");
  CycVector v1(static_cast<std::size_t>(m.dim()));
  v1[static_cast<std::size_t>(m.index(0, 0))] = Cyclotomic(1);  // g_1 (x) v, g_1 = e
  CycVector v2 = m.act(sigma, v1);                              // sigma (x) v
  auto restricted = restrict_braiding(braiding(m), {v1, v2});
  if (std::holds_alternative<NotClosed>(restricted))
    throw std::logic_error("rank-2 real subspace is not c-stable");
  auto op = std::get<BraidingOperator>(std::move(restricted));
  auto q = as_diagonal(op);
  if (!q) throw std::logic_error("rank-2 real subspace braiding is not diagonal");
  // the four braiding formulas force [[q, q^-1], [q^-1, q]]
  const Cyclotomic& qss = q->q[0][0];
  if (q->q[1][1] != qss || q->q[0][1] != qss.inverse() || q->q[1][0] != qss.inverse())
    throw std::logic_error("rank-2 real subspace q-matrix has the wrong shape");
  return Rank2Real{{std::move(v1), std::move(v2)}, std::move(op), std::move(*q)};
}

namespace {

struct EigenKey {
  long ord;
  long exp;
  bool operator<(const EigenKey& o) const {
    return ord != o.ord ? ord < o.ord : exp < o.exp;
  }
};

EigenKey eigen_key(const Cyclotomic& lambda, long r) {
  auto o = order_of(lambda);
  if (!o) throw std::logic_error("eigenvalue is not a root of unity");
  for (long k = 0; k < *o; ++k) {
    if (root_of_unity(*o, k) == lambda) return {*o, k};
  }
  (void)r;
  throw std::logic_error("eigenvalue not located");
}

// canonical basis of a span: rows of the reduced row echelon form
std::vector<CycVector> canonical_span_basis(const std::vector<CycVector>& vs) {
  CycMatrix m(vs.size(), vs[0].size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[0].size(); ++j) m.at(i, j) = vs[i][j];
  auto pivots = rref(m);
  std::vector<CycVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    CycVector row(vs[0].size());
    for (std::size_t j = 0; j < vs[0].size(); ++j) row[j] = m.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::variant<DiagonalizedModule, NotDiagonalizable> diagonalize_abelian_class(const YDModule& m) {
  const auto& cls = m.section().cls;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (cls[i] * cls[j] != cls[j] * cls[i])
        return NotDiagonalizable{"class elements " + cls[i].to_cycle_string() + " and " +
                                 cls[j].to_cycle_string() + " do not commute"};

  const int r = m.block_dim();
  std::vector<CycVector> full_basis;
  for (int block = 0; block < m.blocks(); ++block) {
    // commuting operators rho(g_j^-1 t_i g_j) on this block; the eigenvalues
    // of each lie among the roots of unity of the order of gamma
    std::vector<std::pair<CycMatrix, long>> ops;
    const Perm& gj = m.section().reps[static_cast<std::size_t>(block)];
    for (int i = 0; i < m.blocks(); ++i) {
      Perm u = m.degree_of_block(i) * gj;
      if (conjugate(u, m.base()) != m.degree_of_block(block))
        return NotDiagonalizable{"class action does not stabilize the blocks"};
      Perm gamma = gj.inverse() * u;
      ops.emplace_back(m.rho().matrix(gamma), order(gamma));
    }
    // recursive simultaneous eigen-splitting
    std::vector<std::vector<CycVector>> spaces;
    {
      std::vector<CycVector> whole;
      for (int k = 0; k < r; ++k) {
        CycVector e(static_cast<std::size_t>(r));
        e[static_cast<std::size_t>(k)] = Cyclotomic(1);
        whole.push_back(std::move(e));
      }
      spaces.push_back(std::move(whole));
    }
    for (const auto& [op, gamma_order] : ops) {
      std::vector<std::vector<CycVector>> next;
      for (const auto& space : spaces) {
        const std::size_t sd = space.size();
        // matrix of op on the subspace
        CycMatrix basis_cols(static_cast<std::size_t>(r), sd);
        CycMatrix image_cols(static_cast<std::size_t>(r), sd);
        for (std::size_t u = 0; u < sd; ++u) {
          CycVector img = op.apply(space[u]);
          for (int x = 0; x < r; ++x) {
            basis_cols.at(static_cast<std::size_t>(x), u) = space[u][static_cast<std::size_t>(x)];
            image_cols.at(static_cast<std::size_t>(x), u) = img[static_cast<std::size_t>(x)];
          }
        }
        auto op_on_space = solve_matrix(basis_cols, image_cols);
        if (!op_on_space)
          return NotDiagonalizable{"block operator does not stabilize an eigenspace"};
        std::vector<std::pair<EigenKey, Cyclotomic>> candidates;
        for (long k = 0; k < gamma_order; ++k) {
          Cyclotomic lambda = root_of_unity(gamma_order, k);
          candidates.emplace_back(eigen_key(lambda, gamma_order), lambda);
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t collected = 0;
        for (const auto& [key, lambda] : candidates) {
          CycMatrix shifted = *op_on_space;
          for (std::size_t u = 0; u < sd; ++u) shifted.at(u, u) -= lambda;
          auto ker = kernel_basis(shifted);
          if (ker.empty()) continue;
          std::vector<CycVector> sub;
          for (const auto& kv : ker) {
            CycVector lifted(static_cast<std::size_t>(r));
            for (std::size_t u = 0; u < sd; ++u)
              for (int x = 0; x < r; ++x)
                lifted[static_cast<std::size_t>(x)] += kv[u] * space[u][static_cast<std::size_t>(x)];
            sub.push_back(std::move(lifted));
          }
          collected += sub.size();
          next.push_back(std::move(sub));
        }
        if (collected != sd)
          return NotDiagonalizable{"block operators are not simultaneously diagonalizable"};
      }
      spaces = std::move(next);
    }
    for (auto& space : spaces) {
      for (const auto& v : canonical_span_basis(space)) {
        CycVector embedded(static_cast<std::size_t>(m.dim()));
        for (int x = 0; x < r; ++x)
          embedded[static_cast<std::size_t>(m.index(block, x))] = v[static_cast<std::size_t>(x)];
        full_basis.push_back(std::move(embedded));
      }
    }
  }

  // q-matrix straight from the class action on eigenvectors
  const int d = m.dim();
  std::vector<std::vector<Cyclotomic>> q(static_cast<std::size_t>(d),
                                         std::vector<Cyclotomic>(static_cast<std::size_t>(d)));
  auto block_of = [&](const CycVector& v) {
    for (int x = 0; x < d; ++x)
      if (!v[static_cast<std::size_t>(x)].is_zero()) return x / r;
    return 0;
  };
  for (int u = 0; u < d; ++u) {
    const Perm& tu = m.degree_of_block(block_of(full_basis[static_cast<std::size_t>(u)]));
    for (int v = 0; v < d; ++v) {
      CycVector image = m.act(tu, full_basis[static_cast<std::size_t>(v)]);
      // image must be lambda * basis[v]
      Cyclotomic lambda;
      bool found = false;
      for (int x = 0; x < d && !found; ++x) {
        if (!full_basis[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)].is_zero()) {
          lambda = image[static_cast<std::size_t>(x)] *
                   full_basis[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)].inverse();
          found = true;
        }
      }
      for (int x = 0; x < d; ++x) {
        if (image[static_cast<std::size_t>(x)] !=
            lambda * full_basis[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)])
          return NotDiagonalizable{"eigenbasis failed to diagonalize the class action"};
      }
      q[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = lambda;
    }
  }
  return DiagonalizedModule{std::move(full_basis), DiagonalBraiding::from(std::move(q))};
}

EmbeddingReport product_embedding(const YDModule& mpi, const YDModule& mprod, const CycVector& w) {
  const int n = mpi.base().degree();
  const int mdeg = mprod.base().degree();
  require(mdeg > n, "product module degree must exceed the factor degree");
  // tau = the tail block of the juxtaposed base point
  std::vector<int> tail(static_cast<std::size_t>(mdeg - n));
  for (int i = n; i < mdeg; ++i) {
    int v = mprod.base().apply(i);
    require(v >= n, "product base point does not preserve the blocks");
    tail[static_cast<std::size_t>(i - n)] = v - n;
  }
  Perm tau = Perm::from_images(std::move(tail));
  require(concat(mpi.base(), tau) == mprod.base(),
          "product base point is not pi # tau");
  require(is_orthogonal(mpi.base(), tau), "pi and tau must be orthogonal");

  const int dim_lambda = static_cast<int>(w.size());
  require(mpi.block_dim() * dim_lambda == mprod.block_dim(),
          "w must live in the second tensor factor");
  bool w_nonzero = false;
  for (const auto& x : w) w_nonzero = w_nonzero || !x.is_zero();
  require(w_nonzero, "w must be nonzero");

  // q_{tau,tau}: the scalar by which e # tau acts on the product fiber
  Cyclotomic scalar = q_ss(concat(Perm(n), tau), mprod.rho());

  // psi(g_i v_k) = (g_i # e)(v_k (x) w)
  const int dpi = mpi.dim(), dprod = mprod.dim();
  std::vector<CycVector> psi(static_cast<std::size_t>(dpi),
                             CycVector(static_cast<std::size_t>(dprod)));
  for (int i = 0; i < mpi.blocks(); ++i) {
    Perm u = concat(mpi.section().reps[static_cast<std::size_t>(i)], Perm(mdeg - n));
    Perm t = conjugate(u, mprod.base());
    int h = mprod.section().index_of(t);
    if (h < 0) throw std::logic_error("juxtaposed class element not found");
    Perm gamma = mprod.section().reps[static_cast<std::size_t>(h)].inverse() * u;
    CycMatrix mat = mprod.rho().matrix(gamma);
    for (int k = 0; k < mpi.block_dim(); ++k) {
      CycVector fiber(static_cast<std::size_t>(mprod.block_dim()));
      for (int l = 0; l < dim_lambda; ++l)
        fiber[static_cast<std::size_t>(k * dim_lambda + l)] = w[static_cast<std::size_t>(l)];
      CycVector mapped = mat.apply(fiber);
      for (int x = 0; x < mprod.block_dim(); ++x)
        psi[static_cast<std::size_t>(mpi.index(i, k))]
           [static_cast<std::size_t>(mprod.index(h, x))] = mapped[static_cast<std::size_t>(x)];
    }
  }

  auto c_pi = braiding(mpi);
  auto c_prod = braiding(mprod);

  auto pair_image = [&](const CycVector& x, const CycVector& y, const BraidingOperator& c,
                        int d) {
    std::map<std::pair<int, int>, Cyclotomic> out;
    for (int a = 0; a < d; ++a) {
      if (x[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b < d; ++b) {
        if (y[static_cast<std::size_t>(b)].is_zero()) continue;
        for (const auto& term : c.column(a, b)) {
          auto key = std::make_pair(term.a, term.b);
          auto val = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] * term.coeff;
          auto it = out.find(key);
          if (it == out.end())
            out.emplace(key, val);
          else {
            it->second += val;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
    return out;
  };

  EmbeddingReport report{scalar, true, false, ""};
  for (int a = 0; a < dpi && report.relation_ok; ++a) {
    for (int b = 0; b < dpi && report.relation_ok; ++b) {
      // lhs: c(psi a (x) psi b)
      auto lhs = pair_image(psi[static_cast<std::size_t>(a)], psi[static_cast<std::size_t>(b)],
                            c_prod, dprod);
      // rhs: scalar * (psi (x) psi) c(a (x) b)
      std::map<std::pair<int, int>, Cyclotomic> rhs;
      for (const auto& term : c_pi.column(a, b)) {
        const auto& pa = psi[static_cast<std::size_t>(term.a)];
        const auto& pb = psi[static_cast<std::size_t>(term.b)];
        for (int x = 0; x < dprod; ++x) {
          if (pa[static_cast<std::size_t>(x)].is_zero()) continue;
          for (int y = 0; y < dprod; ++y) {
            if (pb[static_cast<std::size_t>(y)].is_zero()) continue;
            auto key = std::make_pair(x, y);
            auto val = scalar * term.coeff * pa[static_cast<std::size_t>(x)] *
                       pb[static_cast<std::size_t>(y)];
            auto it = rhs.find(key);
            if (it == rhs.end())
              rhs.emplace(key, val);
            else {
              it->second += val;
              if (it->second.is_zero()) rhs.erase(it);
            }
          }
        }
      }
      if (lhs != rhs) {
        report.relation_ok = false;
        report.witness = "pair (" + basis_name(mpi, a) + ", " + basis_name(mpi, b) + ")";
      }
    }
  }
  report.braided_morphism = report.relation_ok && scalar.is_one();
  return report;
}

}  // namespace ydn
