#include "ncsparse/sparsify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ncsparse {

namespace {

struct Placement {
  std::size_t gamma;
  Word left, right;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct PlacementHash {
  std::size_t operator()(const Placement& p) const noexcept {
    std::size_t h = WordHash{}(p.left);
    h ^= WordHash{}(p.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ (p.gamma * 0x100000001b3ULL);
  }
};

using MonomialSet = std::unordered_set<ModuleMonomial, ModuleMonomialHash>;

// Occurrences of module monomials across the live elements; id -1 is alpha.
class Occurrences {
 public:
  void add(const ModuleElement& x, int id) {
    for (const auto& t : x.terms()) holders_[t.monomial].insert(id);
  }
  void remove(const ModuleElement& x, int id) {
    for (const auto& t : x.terms()) {
      auto it = holders_.find(t.monomial);
      it->second.erase(id);
      if (it->second.empty()) holders_.erase(it);
    }
  }
  std::size_t count(const ModuleMonomial& m) const {
    auto it = holders_.find(m);
    return it == holders_.end() ? 0 : it->second.size();
  }
  const std::set<int>& holders(const ModuleMonomial& m) const {
    static const std::set<int> none;
    auto it = holders_.find(m);
    return it == holders_.end() ? none : it->second;
  }

 private:
  std::unordered_map<ModuleMonomial, std::set<int>, ModuleMonomialHash> holders_;
};

Rational term_norm(const Rational& c, Norm n) { return n == Norm::L0 ? Rational(1) : abs(c); }

class Pruner {
 public:
  Pruner(RelevantSyzygies V, ModuleElement alpha, const PruneOptions& options)
      : bound_(V.bound), elems_(std::move(V.elements)), alive_(elems_.size(), true),
        alpha_(std::move(alpha)), options_(options), rng_(options.seed) {
    occ_.add(alpha_, -1);
    for (std::size_t i = 0; i < elems_.size(); ++i) occ_.add(elems_[i], static_cast<int>(i));
  }

  PruneResult run() {
    removal_round();
    if (options_.binomial_swaps) {
      binomial_swaps();
      removal_round();
    }
    for (int pass = 0; pass < options_.random_passes; ++pass) {
      random_swaps();
      removal_round();
    }
    PruneResult result;
    result.syzygies.bound = bound_;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) result.syzygies.elements.push_back(std::move(elems_[i]));
    result.alpha = std::move(alpha_);
    result.stats = stats_;
    return result;
  }

 private:
  ModuleElement& element(int id) { return id < 0 ? alpha_ : elems_[static_cast<std::size_t>(id)]; }

  void kill(std::size_t i) {
    occ_.remove(elems_[i], static_cast<int>(i));
    alive_[i] = false;
  }

  // element(id) -= q * elems_[src]
  void eliminate(int id, const Rational& q, std::size_t src) {
    ModuleElement& x = element(id);
    occ_.remove(x, id);
    x.add_scaled(elems_[src], -q, {}, {});
    occ_.add(x, id);
    if (id >= 0 && x.is_zero()) alive_[static_cast<std::size_t>(id)] = false;
  }

  // ||beta_V|| <= ||beta_U|| for W = {i} or W = {i, j}.
  bool redundant(std::size_t i, std::optional<std::size_t> partner) const {
    Rational unique = 0, shared = 0;
    for (const auto& t : elems_[i].terms()) {
      const auto& h = occ_.holders(t.monomial);
      std::size_t outside = h.size() - 1;
      if (partner && h.count(static_cast<int>(*partner))) --outside;
      if (h.size() == 1) unique += term_norm(t.coeff, options_.norm);
      else if (outside > 0) shared += term_norm(t.coeff, options_.norm);
    }
    return shared <= unique;
  }

  bool mostly_unique(std::size_t i) const {
    std::size_t u = 0;
    for (const auto& t : elems_[i].terms())
      if (occ_.count(t.monomial) == 1) ++u;
    return 3 * u >= elems_[i].size();
  }

  bool singleton_pass() {
    bool changed = false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!alive_[i]) continue;
      if (elems_[i].is_zero() || redundant(i, std::nullopt)) {
        kill(i);
        ++stats_.singletons_removed;
        changed = true;
      }
    }
    return changed;
  }

  bool pair_pass() {
    std::set<std::pair<std::size_t, std::size_t>> tried;
    bool changed = false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!alive_[i] || !mostly_unique(i)) continue;
      for (const auto& t : elems_[i].terms()) {
        if (!alive_[i]) break;
        for (int j : std::vector<int>(occ_.holders(t.monomial).begin(), occ_.holders(t.monomial).end())) {
          if (j < 0 || static_cast<std::size_t>(j) == i || !alive_[j]) continue;
          auto key = std::minmax(i, static_cast<std::size_t>(j));
          if (!tried.insert(key).second) continue;
          if (!mostly_unique(j)) continue;
          if (redundant(i, j) && redundant(j, i)) {
            kill(i);
            kill(j);
            stats_.pairs_removed += 2;
            changed = true;
            break;
          }
        }
      }
    }
    return changed;
  }

  void removal_round() {
    while (true) {
      bool changed = singleton_pass();
      if (options_.pairs) changed = pair_pass() || changed;
      if (!changed) break;
    }
  }

  // Each binomial mu - nu eliminates its signature nu from every other element.
  void binomial_swaps() {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i] && elems_[i].size() == 2) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return elems_[a].signature() > elems_[b].signature();
    });
    for (std::size_t d : order) {
      if (!alive_[d] || elems_[d].size() != 2) continue;
      ModuleMonomial nu = elems_[d].signature();
      Rational lead = elems_[d].leading_coeff();
      std::vector<int> targets(occ_.holders(nu).begin(), occ_.holders(nu).end());
      for (int id : targets) {
        if (id == static_cast<int>(d)) continue;
        Rational q = element(id).coeff(nu) / lead;
        eliminate(id, q, d);
        ++stats_.binomial_swaps;
      }
    }
  }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  // Replace eps by eps - q*delta when the cancelled part outweighs the added part
  // by more than the swap ratio.
  void random_swaps() {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) order.push_back(i);
    for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[pick(k)]);
    for (std::size_t d : order) {
      if (!alive_[d]) continue;
      const ModuleElement& delta = elems_[d];
      std::vector<const ModuleTerm*> shared;
      for (const auto& t : delta.terms())
        if (occ_.count(t.monomial) > 1) shared.push_back(&t);
      if (shared.empty()) continue;
      const ModuleTerm& nu = *shared[pick(shared.size())];
      std::vector<int> others;
      for (int id : occ_.holders(nu.monomial))
        if (id >= 0 && static_cast<std::size_t>(id) != d) others.push_back(id);
      if (others.empty()) continue;
      int e = others[pick(others.size())];
      const ModuleElement& eps = elems_[static_cast<std::size_t>(e)];
      Rational q = eps.coeff(nu.monomial) / nu.coeff;
      Rational removed = 0, added = 0;
      for (const auto& t : delta.terms()) {
        Rational before = eps.coeff(t.monomial);
        Rational after = before - q * t.coeff;
        if (before == 0) added += term_norm(after, options_.norm);
        else if (after == 0) removed += term_norm(before, options_.norm);
      }
      if (removed > options_.swap_ratio * added) {
        eliminate(e, q, d);
        ++stats_.random_swaps;
      }
    }
  }

  SignatureBound bound_;
  std::vector<ModuleElement> elems_;
  std::vector<bool> alive_;
  ModuleElement alpha_;
  PruneOptions options_;
  std::mt19937_64 rng_;
  Occurrences occ_;
  PruneStats stats_;
};

}  // namespace

std::vector<ModuleMonomial> RelevantSyzygies::support_with(const ModuleElement& alpha) const {
  MonomialSet seen;
  std::vector<ModuleMonomial> out;
  auto add = [&](const ModuleElement& x) {
    for (const auto& t : x.terms())
      if (seen.insert(t.monomial).second) out.push_back(t.monomial);
  };
  add(alpha);
  for (const auto& x : elements) add(x);
  std::sort(out.begin(), out.end());
  return out;
}

RelevantSyzygies relevant_syzygies(const ModuleElement& alpha, const SyzygyBasis& syz) {
  // (generator, left, right) of each term -> basis elements having that term
  std::unordered_map<ModuleMonomial, std::vector<std::size_t>, ModuleMonomialHash> index;
  for (std::size_t g = 0; g < syz.elements.size(); ++g)
    for (const auto& t : syz.elements[g].terms()) index[t.monomial].push_back(g);

  RelevantSyzygies V;
  V.bound = syz.bound;
  std::unordered_set<Placement, PlacementHash> placed;
  MonomialSet seen;
  std::deque<ModuleMonomial> todo;
  for (const auto& t : alpha.terms())
    if (seen.insert(t.monomial).second) todo.push_back(t.monomial);

  ModuleMonomial key;
  while (!todo.empty()) {
    ModuleMonomial mu = std::move(todo.front());
    todo.pop_front();
    key.generator = mu.generator;
    for (std::size_t i = 0; i <= mu.left.size(); ++i) {
      key.left = mu.left.substr(i);
      for (std::size_t j = 0; j <= mu.right.size(); ++j) {
        key.right = mu.right.substr(0, j);
        auto it = index.find(key);
        if (it == index.end()) continue;
        Word a = mu.left.substr(0, i), b = mu.right.substr(j);
        for (std::size_t g : it->second) {
          Placement p{g, a, b};
          if (placed.count(p)) continue;
          if (!syz.bound.admits(syz.elements[g].signature().multiplied(a, b))) continue;
          placed.insert(p);
          ModuleElement x = syz.elements[g].multiplied(a, b);
          for (const auto& t : x.terms())
            if (seen.insert(t.monomial).second) todo.push_back(t.monomial);
          V.elements.push_back(std::move(x));
        }
      }
    }
  }
  return V;
}

Rational norm(const ModuleElement& x, Norm n) {
  return n == Norm::L0 ? Rational(static_cast<long>(x.l0())) : x.l1();
}

PruneResult prune(RelevantSyzygies V, ModuleElement alpha, const PruneOptions& options) {
  return Pruner(std::move(V), std::move(alpha), options).run();
}

ModuleElement CofactorSystem::element(const RationalVector& y) const {
  std::vector<ModuleTerm> terms;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (y[static_cast<Eigen::Index>(j)] != 0) terms.push_back({basis[j], y[static_cast<Eigen::Index>(j)]});
  return ModuleElement::from_terms(std::move(terms));
}

RationalVector CofactorSystem::coordinates(const ModuleElement& x) const {
  RationalVector y = RationalVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& t : x.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t.monomial);
    if (it == basis.end() || !(*it == t.monomial))
      throw InconsistentInput("module element not supported on the system basis");
    y[it - basis.begin()] = t.coeff;
  }
  return y;
}

CofactorSystem build_system(const ModuleElement& alpha, const RelevantSyzygies& V,
                            const GeneratorSystem& sys, const NcPoly& f) {
  CofactorSystem cs;
  cs.basis = V.support_with(alpha);
  std::vector<NcPoly> columns;
  columns.reserve(cs.basis.size());
  std::set<Word, DeglexLess> rows;
  for (const auto& mu : cs.basis) {
    columns.push_back(sys.expand(mu));
    for (const auto& t : columns.back().terms()) rows.insert(t.word);
  }
  for (const auto& t : f.terms())
    if (!rows.count(t.word))
      throw InconsistentInput("claim monomial " + sys.vars().format(t.word) +
                              " occurs in no column expansion");
  cs.row_monomials.assign(rows.rbegin(), rows.rend());
  std::unordered_map<Word, Eigen::Index, WordHash> row_of;
  for (std::size_t i = 0; i < cs.row_monomials.size(); ++i)
    row_of[cs.row_monomials[i]] = static_cast<Eigen::Index>(i);
  std::vector<Eigen::Triplet<Rational>> trips;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms())
      trips.emplace_back(row_of.at(t.word), static_cast<Eigen::Index>(j), t.coeff);
  cs.matrix.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cs.basis.size()));
  cs.matrix.setFromTriplets(trips.begin(), trips.end());
  cs.rhs = RationalVector::Zero(static_cast<Eigen::Index>(rows.size()));
  for (const auto& t : f.terms()) cs.rhs[row_of.at(t.word)] = t.coeff;
  return cs;
}

bool tu_structural_check(const GeneratorSystem& sys, const NcPoly& f) {
  auto binomial = [](const NcPoly& p) {
    const auto& t = p.terms();
    if (t.size() > 2) return false;
    if (t.size() == 1) return t[0].coeff == 1 || t[0].coeff == -1;
    if (t.size() == 2)
      return (t[0].coeff == 1 && t[1].coeff == -1) || (t[0].coeff == -1 && t[1].coeff == 1);
    return true;
  };
  if (!binomial(f)) return false;
  return std::all_of(sys.gens().begin(), sys.gens().end(), binomial);
}

RationalVector Weights::resolve(const std::vector<ModuleMonomial>& basis) const {
  const auto d = static_cast<Eigen::Index>(basis.size());
  RationalVector w(d);
  if (!per_monomial.empty()) {
    if (per_monomial.size() != basis.size()) throw std::invalid_argument("weight vector length mismatch");
    for (Eigen::Index j = 0; j < d; ++j) {
      if (per_monomial[j] <= 0) throw std::invalid_argument("weights must be positive");
      w[j] = per_monomial[j];
    }
    return w;
  }
  for (Eigen::Index j = 0; j < d; ++j)
    w[j] = mode == WeightMode::Uniform ? 1 : std::max(basis[j].wdeg, 1);
  return w;
}

StandardLp<Rational> recast(const CofactorSystem& cs, const RationalVector& weights) {
  const Eigen::Index s = cs.matrix.rows(), d = cs.matrix.cols();
  StandardLp<Rational> lp;
  std::vector<Eigen::Triplet<Rational>> trips;
  trips.reserve(2 * static_cast<std::size_t>(cs.matrix.nonZeros()));
  for (Eigen::Index j = 0; j < d; ++j)
    for (SparseRationalMatrix::InnerIterator it(cs.matrix, j); it; ++it) {
      trips.emplace_back(it.row(), j, it.value());
      trips.emplace_back(it.row(), d + j, -it.value());
    }
  lp.U.resize(s, 2 * d);
  lp.U.setFromTriplets(trips.begin(), trips.end());
  lp.w = cs.rhs;
  lp.c.resize(2 * d);
  lp.c << weights, weights;
  return lp;
}

Minimum minimize(const CofactorSystem& cs, const Weights& weights) {
  RationalVector wts = weights.resolve(cs.basis);
  StandardLp<Rational> lp = recast(cs, wts);
  LpResult<Rational> r = solve_standard(lp);
  if (r.status == LpStatus::Infeasible) throw LpInfeasible("cofactor system has no solution");
  if (r.status == LpStatus::Unbounded) throw LpUnbounded("weighted l1 objective unbounded");
  if (!verify_certificate(lp, *r.solution)) throw std::logic_error("LP certificate failed verification");
  const Eigen::Index d = cs.matrix.cols();
  Minimum m;
  m.y = r.solution->v.head(d) - r.solution->v.tail(d);
  m.value = r.solution->value;
  m.pivots = r.pivots;
  return m;
}

SparseCertificate sparsify_pipeline(const NcPoly& f, const GeneratorSystem& sys,
                                    const SignatureBound& bound,
                                    const std::optional<ModuleElement>& alpha0,
                                    const PipelineOptions& options) {
  SigGbResult basis = syzygy_basis_up_to(sys, bound, options.gb);
  return sparsify_pipeline(f, sys, basis, alpha0, options);
}

SparseCertificate sparsify_pipeline(const NcPoly& f, const GeneratorSystem& sys,
                                    const SigGbResult& basis,
                                    const std::optional<ModuleElement>& alpha0,
                                    const PipelineOptions& options, CofactorSystem* system_out) {
  const SignatureBound& bound = basis.syz.bound;
  SparseCertificate cert;
  cert.claim = f;
  cert.bound = bound;
  cert.stats.gb_size = basis.gb.size();
  cert.stats.syzygy_basis_size = basis.syz.size();

  ModuleElement alpha;
  if (alpha0) {
    if (!(expand(*alpha0, sys) == f))
      throw std::invalid_argument("initial representation does not expand to the claim");
    if (!alpha0->is_zero() && !bound.admits(alpha0->signature()))
      throw std::invalid_argument("initial representation is not below the signature bound");
    alpha = *alpha0;
  } else {
    TraceResult tr = trace_membership(f, basis.gb, sys, bound);
    if (!tr.reduced_to_zero()) throw NotInIdealUpToBound(tr.remainder);
    alpha = std::move(*tr.representation);
  }
  cert.stats.initial_l0 = alpha.l0();
  cert.stats.initial_l1 = alpha.l1();
  cert.tu_structural = tu_structural_check(sys, f);

  if (f.is_zero()) {
    cert.l0_optimal_up_to_bound = cert.tu_structural && options.weights.is_uniform();
    return cert;
  }

  RelevantSyzygies V = relevant_syzygies(alpha, basis.syz);
  cert.stats.relevant_syzygies = V.size();
  cert.stats.basis_before_prune = V.support_with(alpha).size();
  if (options.prune) {
    PruneOptions po;
    po.seed = options.seed;
    PruneResult pr = prune(std::move(V), std::move(alpha), po);
    V = std::move(pr.syzygies);
    alpha = std::move(pr.alpha);
    cert.stats.prune = pr.stats;
  }
  cert.stats.syzygies_after_prune = V.size();

  CofactorSystem cs = build_system(alpha, V, sys, f);
  cert.stats.basis_after_prune = cs.basis.size();
  cert.stats.rows = static_cast<std::size_t>(cs.matrix.rows());
  cert.stats.cols = static_cast<std::size_t>(cs.matrix.cols());
  cert.stats.nonzeros = static_cast<std::size_t>(cs.matrix.nonZeros());

  Minimum m = minimize(cs, options.weights);
  cert.stats.lp_pivots = m.pivots;
  cert.stats.objective = m.value;
  cert.representation = cs.element(m.y);
  if (!(expand(cert.representation, sys) == f))
    throw std::logic_error("minimized representation does not expand to the claim");
  cert.l0_weight = cert.representation.l0();
  cert.l1_weight = cert.representation.l1();
  cert.l0_optimal_up_to_bound = cert.tu_structural && options.weights.is_uniform();
  if (system_out) *system_out = std::move(cs);
  return cert;
}

}  // namespace ncsparse
