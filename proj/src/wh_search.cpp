#include "hypercurv/wh.hpp"

#include "hypercurv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_set>

namespace hypercurv {

std::string_view to_string(Optimality o) {
  return o == Optimality::exact ? "exact" : "heuristic-upper-bound";
}

namespace {

constexpr double kTol = 1e-12;

std::int64_t round_key(double v) { return std::llround(v * 1e12); }

// Flat store of quantized states; node i owns units [i*n, (i+1)*n).
class StatePool {
 public:
  explicit StatePool(std::size_t n) : n_(n), index_(16, Hash{this}, Eq{this}) {}

  std::span<const std::int32_t> at(std::int32_t id) const {
    return {data_.data() + static_cast<std::size_t>(id) * n_, n_};
  }

  // Returns the id of `state`, inserting it when new; `inserted` reports which.
  std::int32_t intern(std::span<const std::int32_t> state, bool& inserted) {
    const auto id = static_cast<std::int32_t>(data_.size() / n_);
    data_.insert(data_.end(), state.begin(), state.end());
    auto [it, fresh] = index_.insert(id);
    inserted = fresh;
    if (!fresh) data_.resize(data_.size() - n_);
    return *it;
  }

  std::size_t size() const { return data_.size() / n_; }

 private:
  struct Hash {
    const StatePool* pool;
    std::size_t operator()(std::int32_t id) const {
      std::size_t seed = 0;
      for (std::int32_t u : pool->at(id)) {
        seed ^= std::hash<std::int32_t>{}(u) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
      }
      return seed;
    }
  };
  struct Eq {
    const StatePool* pool;
    bool operator()(std::int32_t a, std::int32_t b) const {
      auto x = pool->at(a);
      auto y = pool->at(b);
      return std::equal(x.begin(), x.end(), y.begin());
    }
  };

  std::size_t n_;
  std::vector<std::int32_t> data_;
  std::unordered_set<std::int32_t, Hash, Eq> index_;
};

struct Node {
  std::int32_t parent = -1;
  EdgeId edge = -1;
  double g = std::numeric_limits<double>::infinity();
  std::int64_t w1 = 0;
  std::int32_t steps = 0;
  bool closed = false;
};

using QueueKey = std::tuple<std::int64_t, std::int64_t, std::int32_t, std::int64_t, std::int32_t>;

class Search {
 public:
  Search(const Hypergraph& g, const ConcaveCost& h, std::int64_t denom, const Units& start,
         const Units& goal, const WhOptions& opt, double upper)
      : g_(g), opt_(opt), D_(denom), n_(g.num_vertices()), goal_(goal.begin(), goal.end()),
        pool_(g.num_vertices()), upper_(upper) {
    hval_.resize(static_cast<std::size_t>(D_) + 1);
    for (std::int64_t m = 0; m <= D_; ++m) hval_[m] = h.eval(Rational(m, D_));
    h1_ = hval_.back();
    psi_.resize(hval_.size());
    for (std::int64_t m = 0; m <= D_; ++m) psi_[m] = hval_[m] - h1_ * static_cast<double>(m) / D_;
    goal64_ = goal;

    std::vector<std::int32_t> s(start.begin(), start.end());
    bool fresh = false;
    pool_.intern(s, fresh);
    Node root;
    root.g = 0;
    root.w1 = w1_to_goal(s);
    nodes_.push_back(root);
    push(0);
  }

  // Index of the goal node, or -1 when the queue emptied or the budget ran out.
  std::int32_t run() {
    while (!open_.empty()) {
      const std::int32_t id = std::get<4>(open_.top());
      open_.pop();
      Node& node = nodes_[id];
      if (node.closed) continue;
      node.closed = true;
      auto state = pool_.at(id);
      if (std::equal(state.begin(), state.end(), goal_.begin())) return id;
      if (++expanded_ > opt_.max_states || generated_ > opt_.max_generated) {
        budget_exceeded_ = true;
        return -1;
      }
      expand(id);
    }
    return -1;
  }

  bool budget_exceeded() const { return budget_exceeded_; }
  std::int64_t expanded() const { return expanded_; }
  const Node& node(std::int32_t id) const { return nodes_[id]; }
  std::span<const std::int32_t> state(std::int32_t id) const { return pool_.at(id); }

 private:
  std::int64_t w1_to_goal(std::span<const std::int32_t> s) {
    Units u(s.begin(), s.end());
    return transport_units(g_, u, goal64_).cost;
  }

  double estimate(std::int64_t w1) const { return h1_ * static_cast<double>(w1) / D_; }

  void push(std::int32_t id) {
    const Node& node = nodes_[id];
    const double hest = estimate(node.w1);
    open_.emplace(round_key(node.g + hest), round_key(hest), node.steps, seq_++, id);
  }

  void expand(std::int32_t id) {
    const Node cur = nodes_[id];
    if (opt_.max_steps && cur.steps >= *opt_.max_steps) return;
    std::vector<std::int32_t> base(pool_.at(id).begin(), pool_.at(id).end());
    Units base64(base.begin(), base.end());
    potential_ = transport_units(g_, base64, goal64_, true).potential;
    support_ = static_cast<int>(std::count_if(base.begin(), base.end(), [](auto u) { return u > 0; }));
    const double slack = upper_ + kTol - cur.g - estimate(cur.w1);

    for (std::size_t e = 0; e < g_.num_edges(); ++e) {
      auto verts = g_.edge(static_cast<EdgeId>(e));
      std::int64_t on_edge = 0;
      for (VertexId v : verts) on_edge += base[v];
      if (on_edge == 0) continue;
      edge_ = static_cast<EdgeId>(e);
      verts_.assign(verts.begin(), verts.end());
      for (std::int64_t m = 1; m <= on_edge; ++m) {
        if (psi_[m] > slack) continue;
        moved_ = m;
        dec_.assign(verts_.size(), 0);
        inc_.assign(verts_.size(), 0);
        choose_dec(id, base, cur, 0, m, 0);
      }
    }
  }

  // Distributes `left` units of decrease over verts_[k..].
  void choose_dec(std::int32_t id, const std::vector<std::int32_t>& base, const Node& cur,
                  std::size_t k, std::int64_t left, std::int64_t pot) {
    if (left == 0) {
      // Cheapest possible receiver for the optimistic bound.
      std::int64_t best_f = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (dec_[i] == 0) best_f = std::min(best_f, potential_[verts_[i]]);
      }
      if (best_f == std::numeric_limits<std::int64_t>::max()) return;
      if (!bound_ok(cur, pot + best_f * moved_)) return;
      choose_inc(id, base, cur, 0, moved_, pot);
      return;
    }
    if (k == verts_.size()) return;
    const VertexId v = verts_[k];
    const std::int64_t cap = std::min<std::int64_t>(base[v], left);
    for (std::int64_t d = cap; d >= 0; --d) {
      dec_[k] = d;
      choose_dec(id, base, cur, k + 1, left - d, pot - potential_[v] * d);
    }
    dec_[k] = 0;
  }

  void choose_inc(std::int32_t id, const std::vector<std::int32_t>& base, const Node& cur,
                  std::size_t k, std::int64_t left, std::int64_t pot) {
    if (left == 0) {
      emit(id, base, cur, pot);
      return;
    }
    // Optimistic completion: all remaining units on the cheapest receiver left.
    std::int64_t best_f = std::numeric_limits<std::int64_t>::max();
    std::size_t last = verts_.size();
    for (std::size_t i = k; i < verts_.size(); ++i) {
      if (dec_[i] == 0) {
        best_f = std::min(best_f, potential_[verts_[i]]);
        last = i;
      }
    }
    if (last == verts_.size() || !bound_ok(cur, pot + best_f * left)) return;
    if (dec_[k] != 0) {
      choose_inc(id, base, cur, k + 1, left, pot);
      return;
    }
    const VertexId v = verts_[k];
    const std::int64_t lo = k == last ? left : 0;
    for (std::int64_t i = left; i >= lo; --i) {
      inc_[k] = i;
      choose_inc(id, base, cur, k + 1, left - i, pot + potential_[v] * i);
    }
    inc_[k] = 0;
  }

  bool bound_ok(const Node& cur, std::int64_t pot_delta) const {
    const double f = cur.g + hval_[moved_] + estimate(std::max<std::int64_t>(0, cur.w1 + pot_delta));
    return f <= upper_ + kTol;
  }

  void emit(std::int32_t id, const std::vector<std::int32_t>& base, const Node& cur, std::int64_t) {
    ++generated_;
    child_.assign(base.begin(), base.end());
    for (std::size_t i = 0; i < verts_.size(); ++i) child_[verts_[i]] += inc_[i] - dec_[i];

    bool fresh = false;
    const std::int32_t cid = pool_.intern(child_, fresh);
    const double g = cur.g + hval_[moved_];
    if (!fresh) {
      Node& old = nodes_[cid];
      if (old.closed || g >= old.g - kTol) return;
    }
    const std::int64_t w1 = fresh ? w1_to_goal(child_) : nodes_[cid].w1;
    if (fresh) {
      Node n;
      n.w1 = w1;
      nodes_.push_back(n);
    }
    if (opt_.pruned && w1 > cur.w1) {
      const int support = static_cast<int>(std::count_if(child_.begin(), child_.end(), [](auto u) { return u > 0; }));
      if (support >= support_) return;
    }
    if (g + estimate(w1) > upper_ + kTol) return;
    Node& n = nodes_[cid];
    n.parent = id;
    n.edge = edge_;
    n.g = g;
    n.steps = cur.steps + 1;
    push(cid);
  }

  const Hypergraph& g_;
  const WhOptions& opt_;
  std::int64_t D_;
  std::size_t n_;
  std::vector<std::int32_t> goal_;
  Units goal64_;
  StatePool pool_;
  std::vector<Node> nodes_;
  std::priority_queue<QueueKey, std::vector<QueueKey>, std::greater<>> open_;
  std::vector<double> hval_, psi_;
  double h1_ = 0;
  double upper_;
  std::int64_t seq_ = 0;
  std::int64_t expanded_ = 0;
  std::int64_t generated_ = 0;
  bool budget_exceeded_ = false;

  // Scratch for the expansion in progress.
  std::vector<std::int64_t> potential_;
  int support_ = 0;
  EdgeId edge_ = 0;
  std::vector<VertexId> verts_;
  std::vector<std::int64_t> dec_, inc_;
  std::int64_t moved_ = 0;
  std::vector<std::int32_t> child_;
};

}  // namespace

WhResult wh_exact(const Hypergraph& g, const ConcaveCost& h, const ProbMeasure& mu,
                  const ProbMeasure& nu, const WhOptions& options) {
  g.require_valid();
  if (options.refine < 1) throw Error(ErrorCode::BadParams, "refine must be at least 1");

  std::int64_t denom = 0;
  if (options.denominator) {
    denom = *options.denominator;
    if (denom < 1) throw Error(ErrorCode::BadParams, "grid denominator must be positive");
  } else {
    std::vector<ProbMeasure> both{mu, nu};
    const BigInt d = common_denominator(both) * options.refine;
    if (d > 1'000'000) {
      throw Error(ErrorCode::InfeasibleQuantization, "grid denominator " + d.str() + " is too large");
    }
    denom = d.convert_to<std::int64_t>();
  }
  const Units a = mu.to_units(g.num_vertices(), denom);
  const Units b = nu.to_units(g.num_vertices(), denom);

  WhResult upper = wh_heuristic(g, h, mu, nu);
  WhResult out;
  out.denominator = denom;
  out.lower_bound = upper.lower_bound;
  if (a == b) {
    out.plan = {mu, nu, {}};
    out.value = 0;
    out.optimality = Optimality::exact;
    return out;
  }

  Search search(g, h, denom, a, b, options, upper.value);
  const std::int32_t goal = search.run();
  out.states_expanded = search.expanded();

  if (goal < 0) {
    // Either the heuristic plan was already optimal (nothing cheaper exists)
    // or the budget ran out.
    out.value = upper.value;
    out.plan = std::move(upper.plan);
    out.optimality = search.budget_exceeded() ? Optimality::heuristic_upper_bound : Optimality::exact;
    return out;
  }

  std::vector<std::int32_t> chain;
  for (std::int32_t id = goal; id >= 0; id = search.node(id).parent) chain.push_back(id);
  std::reverse(chain.begin(), chain.end());

  out.plan.start = mu;
  out.plan.end = nu;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto before = search.state(chain[i - 1]);
    auto after = search.state(chain[i]);
    SignedDelta::Entries delta;
    for (std::size_t v = 0; v < before.size(); ++v) {
      if (before[v] != after[v]) delta[static_cast<VertexId>(v)] = Rational(after[v] - before[v], denom);
    }
    out.plan.steps.push_back({search.node(chain[i]).edge, canonical_moves(SignedDelta(delta))});
  }
  out.value = search.node(goal).g;
  out.optimality = Optimality::exact;
  return out;
}

}  // namespace hypercurv
