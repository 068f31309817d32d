#include "rcsp/search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rcsp {

void Frontier::push(Cost f1, std::uint32_t node) {
  if (f1 < base_) throw std::logic_error("frontier: key below base");
  const std::size_t idx = static_cast<std::size_t>(f1 - base_);
  if (idx < cursor_) throw std::logic_error("frontier: key below cursor");
  if (idx >= buckets_.size())
    buckets_.resize(std::max(idx + 1, buckets_.size() * 2));
  buckets_[idx].push_back(node);
  ++size_;
}

std::optional<Frontier::Item> Frontier::pop() {
  if (size_ == 0) return std::nullopt;
  while (buckets_[cursor_].empty()) ++cursor_;
  std::vector<std::uint32_t>& b = buckets_[cursor_];
  std::uint32_t node = b.back();
  b.pop_back();
  --size_;
  return Item{base_ + static_cast<Cost>(cursor_), node};
}

bool ClosedList::is_dominated(std::span<const Cost> v) const {
  const std::size_t count = size();
  for (std::size_t i = 0; i < count; ++i) {
    std::span<const Cost> have = at(i);
    if (!lex_leq(have, v)) return false;
    if (weakly_dominates(have, v)) return true;
  }
  return false;
}

void ClosedList::consolidate(std::span<const Cost> v) {
  assert(static_cast<int>(v.size()) == width_);
  assert(!is_dominated(v));
  std::size_t i = size();
  while (i > 0 && lex_leq(v, at(i - 1))) {
    if (weakly_dominates(v, at(i - 1))) {
      auto first = flat_.begin() + (i - 1) * width_;
      flat_.erase(first, first + width_);
    }
    --i;
  }
  flat_.insert(flat_.begin() + i * width_, v.begin(), v.end());
#ifndef NDEBUG
  for (std::size_t a = 1; a < size(); ++a)
    assert(!lex_leq(at(a), at(a - 1)));  // strictly increasing
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      assert(a == b || !weakly_dominates(at(a), at(b)));
#endif
}

void DominanceStore::set_last(StateId u, std::span<const Cost> tr) {
  assert(static_cast<int>(tr.size()) == width_);
  std::copy(tr.begin(), tr.end(),
            last_.begin() + static_cast<std::size_t>(u) * width_);
}

namespace {

constexpr std::uint32_t kNoNode = static_cast<std::uint32_t>(-1);

// Append-only node pool; parents are pool indices, g vectors live in one
// flat buffer.
struct NodeArena {
  explicit NodeArena(int arity) : arity(arity) {}

  int arity;
  std::vector<StateId> state;
  std::vector<std::uint32_t> parent;
  std::vector<Cost> g;

  std::uint32_t push(StateId s, std::uint32_t par, std::span<const Cost> gv) {
    state.push_back(s);
    parent.push_back(par);
    g.insert(g.end(), gv.begin(), gv.end());
    return static_cast<std::uint32_t>(state.size() - 1);
  }
  std::span<const Cost> g_of(std::uint32_t i) const {
    return {g.data() + static_cast<std::size_t>(i) * arity,
            static_cast<std::size_t>(arity)};
  }
  std::size_t size() const { return state.size(); }
};

struct Searcher {
  const PreparedInstance& inst;
  const Graph& graph;
  const SolveOptions& opt;
  const int arity;
  NodeArena arena;
  DominanceStore dom;
  SolveResult out;

  Searcher(const PreparedInstance& inst, const SolveOptions& opt)
      : inst(inst), graph(*inst.graph), opt(opt), arity(graph.arity()),
        arena(arity), dom(graph.state_count(), arity - 1) {}

  NodeInfo info_of(std::uint32_t id) const {
    std::span<const Cost> gv = arena.g_of(id);
    CostVector f = CostVector::zeros(arity);
    for (int k = 0; k < arity; ++k)
      f[k] = saturating_add(gv[k], inst.heuristics.value(arena.state[id], k));
    return {id, arena.state[id], CostVector::from(gv), std::move(f)};
  }

  std::vector<TruncatedVector> closed_snapshot(StateId u) const {
    const ClosedList& cl = dom.closed(u);
    std::vector<TruncatedVector> out;
    out.reserve(cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i)
      out.push_back(TruncatedVector::from(cl.at(i)));
    return out;
  }

  std::vector<StateId> reconstruct_path(std::uint32_t id) const {
    std::vector<StateId> rev;
    for (std::uint32_t cur = id; cur != kNoNode; cur = arena.parent[cur]) {
      rev.push_back(arena.state[cur]);
      if (rev.size() > arena.size())
        throw std::logic_error("reconstruct_path: parent cycle");
    }
    std::vector<StateId> path(rev.rbegin(), rev.rend());
    for (StateId& s : path) s = inst.old_of_new[s];
    return path;
  }

  void run() {
    SearchObserver* obs = opt.observer;
    SearchStats& st = out.stats;

    std::vector<Cost> fbar(static_cast<std::size_t>(arity));
    fbar[0] = inst.bounds.primary;
    std::copy(inst.bounds.resources.begin(), inst.bounds.resources.end(),
              fbar.begin() + 1);

    std::vector<Cost> f0(static_cast<std::size_t>(arity));
    std::vector<Cost> g0(static_cast<std::size_t>(arity), 0);
    for (int k = 0; k < arity; ++k)
      f0[k] = saturating_add(0, inst.heuristics.value(inst.start, k));

    Frontier open(f0[0]);
    // The root gets the same bound test as every generated node; this only
    // matters when the start is the goal and some limit is negative.
    if (weakly_dominates(f0, fbar)) {
      std::uint32_t root = arena.push(inst.start, kNoNode, g0);
      open.push(f0[0], root);
      ++st.enqueued;
      if (obs) obs->on_enqueue(info_of(root));
    }

    std::vector<std::uint32_t> sols;
    std::vector<Cost> gx(static_cast<std::size_t>(arity));
    std::vector<Cost> gy(static_cast<std::size_t>(arity));
    std::vector<Cost> fy(static_cast<std::size_t>(arity));
    Cost last_f1 = kNegInfCost;
    std::uint32_t since_deadline_check = 0;

    while (auto item = open.pop()) {
      ++st.extracted;
      if (opt.deadline && ++since_deadline_check >= opt.deadline_check_interval) {
        since_deadline_check = 0;
        if (std::chrono::steady_clock::now() > *opt.deadline) {
          out.status = SolveStatus::timeout;
          break;
        }
      }

      const Cost f1 = item->f1;
      const std::uint32_t id = item->node;
      if (f1 < last_f1) ++st.monotone_violations;
      last_f1 = f1;

      if (obs) obs->on_extract(info_of(id));

      if (f1 > fbar[0]) {
        if (obs) obs->on_terminated(f1, fbar[0]);
        break;
      }

      const StateId s = arena.state[id];
      std::copy(arena.g_of(id).begin(), arena.g_of(id).end(), gx.begin());
      const std::span<const Cost> trx{gx.data() + 1,
                                      static_cast<std::size_t>(arity - 1)};

      if (dom.quick_dominated(s, trx)) {
        ++st.skipped_last_dominated;
        if (obs) obs->on_skip_last_dominated(info_of(id));
        continue;
      }
      if (dom.is_dominated(s, trx)) {
        ++st.skipped_closed_dominated;
        if (obs) obs->on_skip_closed_dominated(info_of(id));
        continue;
      }
      dom.consolidate(s, trx);
      dom.set_last(s, trx);
      if (obs) obs->on_closed_updated(s, closed_snapshot(s));

      if (s == inst.goal) {
        fbar[0] = f1;
        // Newest solution can only dominate earlier ones; walk backward and
        // drop the dominated (including equal-cost duplicates).
        for (std::size_t i = sols.size(); i-- > 0;)
          if (weakly_dominates(gx, arena.g_of(sols[i])))
            sols.erase(sols.begin() + static_cast<std::ptrdiff_t>(i));
        sols.push_back(id);
        ++st.solutions_recorded;
        if (obs) obs->on_goal(info_of(id), sols);
        continue;
      }

      for (EdgeId e : graph.out_edges(s)) {
        ++st.generated;
        const StateId t = graph.target(e);
        for (int k = 0; k < arity; ++k) {
          gy[static_cast<std::size_t>(k)] =
              gx[static_cast<std::size_t>(k)] + graph.cost(e, k);
          fy[static_cast<std::size_t>(k)] =
              saturating_add(gy[static_cast<std::size_t>(k)], inst.heuristics.value(t, k));
        }
        if (!weakly_dominates(fy, fbar)) {
          ++st.pruned_bound;
          if (obs)
            obs->on_pruned_bound(
                {kNoNode, t, CostVector::from(gy), CostVector::from(fy)});
          continue;
        }
        const std::span<const Cost> tre{gy.data() + 1,
                                        static_cast<std::size_t>(arity - 1)};
        if (dom.quick_dominated(t, tre)) {
          ++st.pruned_last_dominated;
          if (obs)
            obs->on_pruned_last_dominated(
                {kNoNode, t, CostVector::from(gy), CostVector::from(fy)});
          continue;
        }
        const std::uint32_t nid = arena.push(t, id, gy);
        open.push(fy[0], nid);
        ++st.enqueued;
        if (obs) obs->on_enqueue(info_of(nid));
      }
    }

    out.solutions.reserve(sols.size());
    for (std::uint32_t id : sols)
      out.solutions.push_back(
          {CostVector::from(arena.g_of(id)), reconstruct_path(id)});
  }
};

}  // namespace

SolveResult solve(const PreparedInstance& inst, const SolveOptions& opt) {
  if (inst.start == kNoState || !inst.graph)
    throw std::invalid_argument("solve: instance not prepared");
  Searcher s(inst, opt);
  s.run();
  return std::move(s.out);
}

std::optional<SolveResult> prepare_and_solve(const Problem& p, const SolveOptions& opt) {
  PrepareResult prep = build_heuristics(p);
  if (prep.status == PrepareStatus::negative_cycle) return std::nullopt;
  return solve(*prep.instance, opt);
}

}  // namespace rcsp
