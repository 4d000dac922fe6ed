#include "ncsparse/sig_gb.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace ncsparse {

std::vector<Ambiguity> ambiguities(const Word& u, const Word& w) {
  std::vector<Ambiguity> out;
  const std::size_t nu = u.size(), nw = w.size();
  // suffix of u == prefix of w, overlap length k
  for (std::size_t k = 1; k < nu && k < nw; ++k) {
    if (u.substr(nu - k) == w.substr(0, k)) {
      Word sup = u * w.substr(k);
      out.push_back({AmbiguityKind::Overlap, {}, w.substr(k), u.substr(0, nu - k), {}, sup});
    }
  }
  if (!(u == w)) {
    for (std::size_t k = 1; k < nu && k < nw; ++k) {
      if (w.substr(nw - k) == u.substr(0, k)) {
        Word sup = w * u.substr(k);
        out.push_back({AmbiguityKind::Overlap, w.substr(0, nw - k), {}, {}, u.substr(k), sup});
      }
    }
  }
  if (nw < nu) {
    for (std::size_t p = 0; p + nw <= nu; ++p) {
      if (u.substr(p, nw) == w)
        out.push_back({AmbiguityKind::Inclusion, {}, {}, u.substr(0, p), u.substr(p + nw), u});
    }
  } else if (nu < nw) {
    for (std::size_t p = 0; p + nu <= nw; ++p) {
      if (w.substr(p, nu) == u)
        out.push_back({AmbiguityKind::Inclusion, w.substr(0, p), w.substr(p + nu), {}, {}, w});
    }
  }
  return out;
}

namespace {

enum class CandidateKind { Trivial = 0, Regular = 1 };

struct Candidate {
  ModuleMonomial sig;
  CandidateKind kind;
  std::uint32_t g = 0, h = 0;
  Word middle;
};

struct CandidateAfter {
  bool operator()(const Candidate& x, const Candidate& y) const {
    if (auto c = x.sig <=> y.sig; c != 0) return c > 0;
    return x.kind > y.kind;
  }
};

struct Reducer {
  std::size_t index;
  Word left, right;
};

class Engine {
 public:
  Engine(const GeneratorSystem& sys, const SignatureBound& bound, const SigGbOptions& options)
      : sys_(sys), bound_(bound), options_(options), start_(std::chrono::steady_clock::now()) {}

  SigGbResult run() {
    int min_level = sys_.min_degree();
    for (std::uint32_t i = 0; i < sys_.size(); ++i) {
      ModuleMonomial e = sys_.monomial({}, i, {});
      if (bound_.admits(e)) push({e, CandidateKind::Regular, i, i, {}});
    }
    for (int level = min_level; level <= bound_.max_wdeg(); ++level) {
      level_ = level;
      generate_trivial_all(level);
      while (!queue_.empty() && queue_.top().sig.wdeg == level) {
        Candidate top = queue_.top();
        queue_.pop();
        bool has_regular = top.kind == CandidateKind::Regular;
        while (!queue_.empty() && queue_.top().sig == top.sig) {
          has_regular = has_regular || queue_.top().kind == CandidateKind::Regular;
          queue_.pop();
        }
        process(top, has_regular);
        check_time();
      }
    }
    SigGbResult result;
    result.gb = std::move(g_);
    result.syz.elements = std::move(h_);
    result.syz.bound = bound_;
    result.stats = stats_;
    return result;
  }

 private:
  void check_time() {
    if (options_.time_budget.count() <= 0) return;
    if (++tick_ % 64 != 0) return;
    if (std::chrono::steady_clock::now() - start_ > options_.time_budget)
      throw Timeout("syzygy basis computation exceeded the time budget");
  }

  void push(Candidate c) {
    if (queue_.size() >= options_.max_candidates)
      throw BoundTooLarge("too many candidate signatures below the bound");
    ++stats_.candidates;
    queue_.push(std::move(c));
  }

  template <class Map>
  static auto find_divisor(const Map& map, const ModuleMonomial& mu) -> const typename Map::mapped_type* {
    ModuleMonomial key;
    key.generator = mu.generator;
    for (std::size_t i = 0; i <= mu.left.size(); ++i) {
      key.left = mu.left.substr(i);
      for (std::size_t j = 0; j <= mu.right.size(); ++j) {
        key.right = mu.right.substr(0, j);
        if (auto it = map.find(key); it != map.end()) return &it->second;
      }
    }
    return nullptr;
  }

  bool syzygy_divides(const ModuleMonomial& mu) const { return find_divisor(h_sigs_, mu) != nullptr; }

  // Reducer of the word w with placement signature strictly below mu,
  // smallest signature first, then lowest index.
  std::optional<Reducer> find_reducer(const Word& w, const ModuleMonomial& mu) const {
    std::optional<Reducer> best;
    ModuleMonomial best_sig;
    for (std::size_t len = min_lm_; len <= max_lm_ && len <= w.size(); ++len) {
      if (!lm_lengths_.count(len)) continue;
      for (std::size_t p = 0; p + len <= w.size(); ++p) {
        auto it = lm_index_.find(w.substr(p, len));
        if (it == lm_index_.end()) continue;
        for (std::size_t idx : it->second) {
          Word a = w.substr(0, p), b = w.substr(p + len);
          ModuleMonomial s = g_[idx].signature.multiplied(a, b);
          if (!(s < mu)) continue;
          if (!best || s < best_sig || (s == best_sig && idx < best->index)) {
            best = Reducer{idx, std::move(a), std::move(b)};
            best_sig = std::move(s);
          }
        }
      }
    }
    return best;
  }

  void process(const Candidate& c, bool has_regular) {
    const ModuleMonomial& mu = c.sig;
    if (syzygy_divides(mu)) {
      ++stats_.skipped_by_syzygy;
      return;
    }
    ++stats_.processed_signatures;
    if (c.kind == CandidateKind::Trivial) {
      ModuleElement tau = trivial_syzygy(c.g, c.h, c.middle);
      if (!tau.is_zero() && tau.signature() == mu) {
        ++stats_.trivial_syzygies;
        add_syzygy(std::move(tau));
        return;
      }
      if (!has_regular) return;
    }

    // Rewriter: the multiple x*r*y with signature mu and smallest leading monomial.
    NcPoly poly;
    ModuleElement label;
    bool found = false;
    Word best_lm;
    std::size_t best_idx = 0;
    Word bx, by;
    ModuleMonomial key;
    key.generator = mu.generator;
    for (std::size_t i = 0; i <= mu.left.size(); ++i) {
      key.left = mu.left.substr(i);
      for (std::size_t j = 0; j <= mu.right.size(); ++j) {
        key.right = mu.right.substr(0, j);
        auto it = sig_index_.find(key);
        if (it == sig_index_.end()) continue;
        std::size_t idx = it->second;
        Word x = mu.left.substr(0, i), y = mu.right.substr(j);
        Word lm = x * g_[idx].poly.lm() * y;
        if (!found || cmp_deglex(lm, best_lm) < 0 || (lm == best_lm && idx < best_idx)) {
          found = true;
          best_lm = std::move(lm);
          best_idx = idx;
          bx = std::move(x);
          by = std::move(y);
        }
      }
    }
    if (found) {
      ++stats_.rewriter_hits;
      if (!find_reducer(best_lm, mu)) return;
      poly = g_[best_idx].poly.multiplied(bx, by);
      label = g_[best_idx].label.multiplied(bx, by);
    } else if (mu.left.empty() && mu.right.empty()) {
      poly = sys_.gen(mu.generator);
      label = ModuleElement::monomial(mu);
    } else {
      return;
    }

    while (!poly.is_zero()) {
      auto r = find_reducer(poly.lm(), mu);
      if (!r) break;
      const LabeledPoly& red = g_[r->index];
      Rational q = poly.lc() / red.poly.lc();
      poly.add_scaled(red.poly, -q, r->left, r->right);
      label.add_scaled(red.label, -q, r->left, r->right);
      ++stats_.reductions;
      check_time();
    }
    if (poly.is_zero()) {
      ++stats_.reduction_syzygies;
      add_syzygy(std::move(label));
    } else {
      add_basis_element(std::move(poly), std::move(label), mu);
    }
  }

  ModuleElement trivial_syzygy(std::uint32_t gi, std::uint32_t hi, const Word& e) const {
    const LabeledPoly& g = g_[gi];
    const LabeledPoly& h = g_[hi];
    ModuleElement tau;
    for (const auto& t : h.poly.terms()) tau.add_scaled(g.label, t.coeff, {}, e * t.word);
    for (const auto& t : g.poly.terms()) tau.add_scaled(h.label, -t.coeff, t.word * e, {});
    return tau;
  }

  void add_syzygy(ModuleElement s) {
    Rational lc = s.leading_coeff();
    s *= 1 / lc;
    h_sigs_.emplace(s.signature(), h_.size());
    h_.push_back(std::move(s));
  }

  void add_basis_element(NcPoly poly, ModuleElement label, const ModuleMonomial& mu) {
    std::size_t idx = g_.size();
    Word lm = poly.lm();
    g_.push_back({std::move(poly), std::move(label), mu});
    sig_index_.emplace(mu, idx);
    lm_index_[lm].push_back(idx);
    lm_lengths_.insert(lm.size());
    min_lm_ = std::min(min_lm_, lm.size());
    max_lm_ = std::max(max_lm_, lm.size());
    for (std::size_t other = 0; other <= idx; ++other) {
      push_pairs(idx, other);
      generate_trivial(idx, other, level_);
      if (other != idx) generate_trivial(other, idx, level_);
    }
  }

  void push_pairs(std::size_t qi, std::size_t hi) {
    const LabeledPoly& q = g_[qi];
    const LabeledPoly& h = g_[hi];
    auto consider = [&](const Word& ql, const Word& qr, const Word& hl, const Word& hr) {
      ModuleMonomial s1 = q.signature.multiplied(ql, qr);
      ModuleMonomial s2 = h.signature.multiplied(hl, hr);
      if (s1 == s2) return;
      ModuleMonomial s = s1 > s2 ? std::move(s1) : std::move(s2);
      if (s.wdeg < level_ || !bound_.admits(s) || syzygy_divides(s)) return;
      push({std::move(s), CandidateKind::Regular, static_cast<std::uint32_t>(qi),
            static_cast<std::uint32_t>(hi), {}});
    };
    for (const auto& a : ambiguities(q.poly.lm(), h.poly.lm()))
      consider(a.first_left, a.first_right, a.second_left, a.second_right);
    if (qi != hi && q.poly.lm() == h.poly.lm()) consider({}, {}, {}, {});
  }

  // Trivial syzygies alpha_g*e*h - g*e*alpha_h whose signature has weighted degree `level`.
  void generate_trivial(std::size_t gi, std::size_t hi, int level) {
    if (level > bound_.max_wdeg()) return;
    const LabeledPoly& g = g_[gi];
    const LabeledPoly& h = g_[hi];
    int da = g.signature.wdeg + static_cast<int>(h.poly.lm().size());
    int db = static_cast<int>(g.poly.lm().size()) + h.signature.wdeg;
    int len = level - std::max(da, db);
    if (len < 0) return;
    for (const Word& e : words_for(len)) {
      ModuleMonomial a = g.signature.multiplied({}, e * h.poly.lm());
      ModuleMonomial b = h.signature.multiplied(g.poly.lm() * e, {});
      if (a == b) continue;
      ModuleMonomial s = a > b ? std::move(a) : std::move(b);
      if (!bound_.admits(s) || syzygy_divides(s)) continue;
      push({std::move(s), CandidateKind::Trivial, static_cast<std::uint32_t>(gi),
            static_cast<std::uint32_t>(hi), e});
    }
  }

  void generate_trivial_all(int level) {
    for (std::size_t gi = 0; gi < g_.size(); ++gi)
      for (std::size_t hi = 0; hi < g_.size(); ++hi) generate_trivial(gi, hi, level);
  }

  const std::vector<Word>& words_for(int len) {
    auto it = words_cache_.find(len);
    if (it == words_cache_.end())
      it = words_cache_.emplace(len, words_of_length(sys_.vars().size(), len)).first;
    return it->second;
  }

  const GeneratorSystem& sys_;
  SignatureBound bound_;
  SigGbOptions options_;
  std::chrono::steady_clock::time_point start_;
  std::size_t tick_ = 0;
  int level_ = 0;

  std::vector<LabeledPoly> g_;
  std::unordered_map<ModuleMonomial, std::size_t, ModuleMonomialHash> sig_index_;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> lm_index_;
  std::unordered_set<std::size_t> lm_lengths_;
  std::size_t min_lm_ = std::numeric_limits<std::size_t>::max();
  std::size_t max_lm_ = 0;

  std::vector<ModuleElement> h_;
  std::unordered_map<ModuleMonomial, std::size_t, ModuleMonomialHash> h_sigs_;

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter> queue_;
  std::unordered_map<int, std::vector<Word>> words_cache_;
  SigGbStats stats_;
};

}  // namespace

SigGbResult syzygy_basis_up_to(const GeneratorSystem& sys, const SignatureBound& bound,
                               const SigGbOptions& options) {
  return Engine(sys, bound, options).run();
}

TraceResult trace_membership(const NcPoly& f, const std::vector<LabeledPoly>& gb,
                             const GeneratorSystem& sys, const SignatureBound& bound) {
  (void)sys;
  std::unordered_map<Word, std::vector<std::size_t>, WordHash> index;
  std::size_t max_len = 0;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    index[gb[i].poly.lm()].push_back(i);
    max_len = std::max(max_len, gb[i].poly.lm().size());
  }
  NcPoly p = f;
  NcPoly remainder;
  ModuleElement label;
  while (!p.is_zero()) {
    const Word& w = p.lm();
    std::optional<ModuleMonomial> best_sig;
    std::size_t best = 0;
    Word bl, br;
    for (std::size_t len = 0; len <= max_len && len <= w.size(); ++len) {
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
        auto it = index.find(w.substr(pos, len));
        if (it == index.end()) continue;
        for (std::size_t idx : it->second) {
          Word a = w.substr(0, pos), b = w.substr(pos + len);
          ModuleMonomial s = gb[idx].signature.multiplied(a, b);
          if (!bound.admits(s)) continue;
          if (!best_sig || s < *best_sig || (s == *best_sig && idx < best)) {
            best_sig = std::move(s);
            best = idx;
            bl = std::move(a);
            br = std::move(b);
          }
        }
      }
    }
    if (!best_sig) {
      remainder.add_scaled(NcPoly::monomial(w, p.lc()), 1, {}, {});
      p.add_scaled(NcPoly::monomial(w, p.lc()), -1, {}, {});
      continue;
    }
    Rational q = p.lc() / gb[best].poly.lc();
    p.add_scaled(gb[best].poly, -q, bl, br);
    label.add_scaled(gb[best].label, q, bl, br);
  }
  TraceResult result;
  if (remainder.is_zero()) result.representation = std::move(label);
  result.remainder = std::move(remainder);
  return result;
}

ModuleElement reduce_by_syzygies(ModuleElement gamma, const SyzygyBasis& syz) {
  std::unordered_map<ModuleMonomial, std::size_t, ModuleMonomialHash> index;
  for (std::size_t i = 0; i < syz.elements.size(); ++i)
    index.emplace(syz.elements[i].signature(), i);
  while (!gamma.is_zero()) {
    const ModuleMonomial& mu = gamma.signature();
    bool reduced = false;
    ModuleMonomial key;
    key.generator = mu.generator;
    for (std::size_t i = 0; i <= mu.left.size() && !reduced; ++i) {
      key.left = mu.left.substr(i);
      for (std::size_t j = 0; j <= mu.right.size(); ++j) {
        key.right = mu.right.substr(0, j);
        auto it = index.find(key);
        if (it == index.end()) continue;
        const ModuleElement& h = syz.elements[it->second];
        Word a = mu.left.substr(0, i), b = mu.right.substr(j);
        Rational q = gamma.leading_coeff() / h.leading_coeff();
        gamma.add_scaled(h, -q, a, b);
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  return gamma;
}

}  // namespace ncsparse
