#include "tetravex/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "tetravex/error.hpp"

namespace tvx {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Solvable:
      return "solvable";
    case SolveStatus::Unsolvable:
      return "unsolvable";
    case SolveStatus::LimitReached:
      return "limit-reached";
  }
  return "?";
}

namespace {

enum Side : int { kTop = 0, kRight = 1, kBottom = 2, kLeft = 3 };
constexpr int opposite(int s) { return (s + 2) & 3; }

constexpr int kNone = -1;

// Row-major backtracking with two kinds of pruning on top of the plain
// adjacency checks:
//
//  * candidate lists keyed by (required left label, required top label),
//    holding tile types in canonical order, so each cell only looks at types
//    that match its decided neighbours;
//  * per-label edge balance. For the unplaced tiles and label x, let
//      dv(x) = #tops(x) - open top demands(x) - #bottoms(x) + open bottom demands(x).
//    Every remaining top is either on the outer border, matched to an open
//    demand, or paired with a remaining bottom, so dv(x) = (tops on the top
//    border) - (bottoms on the bottom border). Hence the positive parts of dv
//    sum to at most the free top-border cells and the negative parts to at
//    most the free bottom-border cells (both zero on a torus). Same for
//    left/right. Open demands must also never exceed the matching supply.
//  * run entry: tiles whose top equals their bottom (label x) can only stack
//    under a tile with bottom x. Once the top border is full, if such tiles
//    remain but no open demand, and no other remaining tile with bottom x,
//    can start the run, the branch is dead. On a torus a run may instead
//    wrap a whole column. Same for left/right.
class Search {
 public:
  explicit Search(const Instance& instance) : instance_(instance) {
    w_ = instance.width();
    h_ = instance.height();
    n_ = w_ * h_;
    torus_ = instance.boundary() == Boundary::Toroidal;

    build_types();
    build_neighbours();
    build_index();
    reset_state();
  }

  // First unique tile type worth pinning at (0,0) on a torus, if any.
  [[nodiscard]] int pin_candidate() const {
    int best = kNone;
    std::size_t best_score = 0;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (multiplicity_[t] != 1) continue;
      const std::size_t score = label_users_[kLeft][labels_[t][kRight]] +
                                label_users_[kTop][labels_[t][kBottom]];
      if (best == kNone || score < best_score) {
        best = static_cast<int>(t);
        best_score = score;
      }
    }
    return best;
  }

  SolveResult run(std::uint64_t limit, std::uint64_t collect, int pinned_type) {
    SolveResult result;
    const auto start = std::chrono::steady_clock::now();
    search(limit, collect, pinned_type, result);
    result.stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    if (result.count == 0) {
      result.status = SolveStatus::Unsolvable;
    } else if (result.count >= limit) {
      result.status = SolveStatus::LimitReached;
    } else {
      result.status = SolveStatus::Solvable;
    }
    return result;
  }

 private:
  struct Frame {
    const std::vector<std::uint32_t>* candidates = nullptr;
    std::size_t next = 0;
    int placed = kNone;
  };

  void build_types() {
    const auto tiles = instance_.tiles();  // already canonical
    std::unordered_map<Label, std::uint32_t> ids;
    auto id_of = [&](Label l) {
      auto [it, inserted] = ids.try_emplace(l, static_cast<std::uint32_t>(ids.size()));
      return it->second;
    };
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      if (i > 0 && tiles[i] == tiles[i - 1]) {
        ++multiplicity_.back();
        continue;
      }
      const Tile& t = tiles[i];
      types_.push_back(t);
      multiplicity_.push_back(1);
      labels_.push_back({id_of(t.top), id_of(t.right), id_of(t.bottom), id_of(t.left)});
    }
    label_count_ = static_cast<std::uint32_t>(ids.size());
    for (auto& side : label_users_) side.assign(label_count_, 0);
    for (std::size_t t = 0; t < types_.size(); ++t) {
      for (int s = 0; s < 4; ++s) label_users_[s][labels_[t][s]] += multiplicity_[t];
    }
  }

  void build_neighbours() {
    neighbours_.resize(static_cast<std::size_t>(n_));
    for (int r = 0; r < h_; ++r) {
      for (int c = 0; c < w_; ++c) {
        auto& nb = neighbours_[static_cast<std::size_t>(r * w_ + c)];
        if (torus_) {
          nb[kTop] = ((r + h_ - 1) % h_) * w_ + c;
          nb[kBottom] = ((r + 1) % h_) * w_ + c;
          nb[kLeft] = r * w_ + (c + w_ - 1) % w_;
          nb[kRight] = r * w_ + (c + 1) % w_;
        } else {
          nb[kTop] = r > 0 ? (r - 1) * w_ + c : kNone;
          nb[kBottom] = r + 1 < h_ ? (r + 1) * w_ + c : kNone;
          nb[kLeft] = c > 0 ? r * w_ + c - 1 : kNone;
          nb[kRight] = c + 1 < w_ ? r * w_ + c + 1 : kNone;
        }
      }
    }
  }

  [[nodiscard]] std::uint64_t key(std::uint32_t left, std::uint32_t top) const {
    return static_cast<std::uint64_t>(left) * (label_count_ + 1) + top;
  }

  void build_index() {
    const std::uint32_t any = label_count_;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      const auto l = labels_[t][kLeft];
      const auto tp = labels_[t][kTop];
      const auto id = static_cast<std::uint32_t>(t);
      index_[key(l, tp)].push_back(id);
      index_[key(any, tp)].push_back(id);
      index_[key(l, any)].push_back(id);
      index_[key(any, any)].push_back(id);
    }
  }

  void reset_state() {
    remaining_ = multiplicity_;
    placed_.assign(static_cast<std::size_t>(n_), kNone);
    for (int s = 0; s < 4; ++s) {
      rem_[s] = label_users_[s];
      need_[s].assign(label_count_, 0);
    }
    for (auto* v : {&self_v_, &start_v_, &self_h_, &start_h_}) v->assign(label_count_, 0);
    for (std::size_t t = 0; t < types_.size(); ++t) run_counts(static_cast<int>(t), multiplicity_[t]);
    for (int r = 0; r < h_; ++r) {
      for (int c = 0; c < w_; ++c) {
        const auto& nb = neighbours_[static_cast<std::size_t>(r * w_ + c)];
        for (int s = 0; s < 4; ++s) {
          if (nb[s] == kNone) ++border_free_[s];
        }
      }
    }
    for (std::uint32_t x = 0; x < label_count_; ++x) {
      add_balance(x, +1);
    }
  }

  // Axis imbalance; vertical uses top/bottom, horizontal left/right.
  [[nodiscard]] long long imbalance(int axis_first, std::uint32_t x) const {
    const int a = axis_first;
    const int b = opposite(a);
    return static_cast<long long>(rem_[a][x]) - need_[a][x] - rem_[b][x] + need_[b][x];
  }

  // Adds (sign=+1) or removes (sign=-1) label x's contribution to the sums.
  void add_balance(std::uint32_t x, int sign) {
    const long long dv = imbalance(kTop, x);
    const long long dh = imbalance(kLeft, x);
    pos_[0] += sign * std::max(0LL, dv);
    neg_[0] += sign * std::max(0LL, -dv);
    pos_[1] += sign * std::max(0LL, dh);
    neg_[1] += sign * std::max(0LL, -dh);
    for (int s = 0; s < 4; ++s) {
      if (need_[s][x] > rem_[s][x]) deficits_ += sign;
    }
    if (stranded(self_v_, start_v_, need_[kTop], h_, x)) stranded_v_ += sign;
    if (stranded(self_h_, start_h_, need_[kLeft], w_, x)) stranded_h_ += sign;
  }

  [[nodiscard]] bool stranded(const std::vector<int>& self, const std::vector<int>& start,
                              const std::vector<int>& demand, int wrap, std::uint32_t x) const {
    return self[x] > 0 && start[x] == 0 && demand[x] == 0 && !(torus_ && self[x] >= wrap);
  }

  // Adds `count` copies of type t to the run counters (no balance upkeep).
  void run_counts(int t, int count) {
    const auto& lab = labels_[static_cast<std::size_t>(t)];
    if (lab[kTop] == lab[kBottom]) {
      self_v_[lab[kTop]] += count;
    } else {
      start_v_[lab[kBottom]] += count;
    }
    if (lab[kLeft] == lab[kRight]) {
      self_h_[lab[kLeft]] += count;
    } else {
      start_h_[lab[kRight]] += count;
    }
  }

  void take_run_counts(int t, int dir) {
    const auto& lab = labels_[static_cast<std::size_t>(t)];
    const std::uint32_t v = lab[kTop] == lab[kBottom] ? lab[kTop] : lab[kBottom];
    const std::uint32_t h = lab[kLeft] == lab[kRight] ? lab[kLeft] : lab[kRight];
    add_balance(v, -1);
    if (h != v) add_balance(h, -1);
    run_counts(t, -dir);
    add_balance(v, +1);
    if (h != v) add_balance(h, +1);
  }

  void adjust(int side, std::uint32_t x, int drem, int dneed) {
    add_balance(x, -1);
    rem_[side][x] += drem;
    need_[side][x] += dneed;
    add_balance(x, +1);
  }

  [[nodiscard]] bool fits(int cell, int t) const {
    const auto& nb = neighbours_[static_cast<std::size_t>(cell)];
    const auto& lab = labels_[static_cast<std::size_t>(t)];
    for (int s = 0; s < 4; ++s) {
      const int other = nb[s];
      if (other == kNone) continue;
      if (other == cell) {
        if (lab[s] != lab[opposite(s)]) return false;
      } else if (placed_[static_cast<std::size_t>(other)] != kNone) {
        const auto& olab = labels_[static_cast<std::size_t>(placed_[static_cast<std::size_t>(other)])];
        if (lab[s] != olab[opposite(s)]) return false;
      }
    }
    return true;
  }

  void place(int cell, int t, int dir) {
    const auto& nb = neighbours_[static_cast<std::size_t>(cell)];
    const auto& lab = labels_[static_cast<std::size_t>(t)];
    for (int s = 0; s < 4; ++s) {
      adjust(s, lab[s], -dir, 0);
      const int other = nb[s];
      if (other == kNone) {
        border_free_[s] -= dir;
      } else if (other != cell) {
        if (placed_[static_cast<std::size_t>(other)] != kNone) {
          adjust(s, lab[s], 0, -dir);  // closes the neighbour's demand
        } else {
          adjust(opposite(s), lab[s], 0, +dir);  // opens a demand on the neighbour
        }
      }
    }
    remaining_[static_cast<std::size_t>(t)] -= dir;
    take_run_counts(t, dir);
  }

  [[nodiscard]] bool feasible() const {
    return deficits_ == 0 && pos_[0] <= border_free_[kTop] && neg_[0] <= border_free_[kBottom] &&
           pos_[1] <= border_free_[kLeft] && neg_[1] <= border_free_[kRight] &&
           (stranded_v_ == 0 || border_free_[kTop] > 0) && (stranded_h_ == 0 || border_free_[kLeft] > 0);
  }

  const std::vector<std::uint32_t>* candidates(int cell) const {
    const auto& nb = neighbours_[static_cast<std::size_t>(cell)];
    std::uint32_t left = label_count_;
    std::uint32_t top = label_count_;
    if (nb[kLeft] != kNone && nb[kLeft] != cell) {
      const int p = placed_[static_cast<std::size_t>(nb[kLeft])];
      if (p != kNone) left = labels_[static_cast<std::size_t>(p)][kRight];
    }
    if (nb[kTop] != kNone && nb[kTop] != cell) {
      const int p = placed_[static_cast<std::size_t>(nb[kTop])];
      if (p != kNone) top = labels_[static_cast<std::size_t>(p)][kBottom];
    }
    auto it = index_.find(key(left, top));
    return it == index_.end() ? &empty_ : &it->second;
  }

  Tiling current_tiling() const {
    std::vector<Tile> cells;
    cells.reserve(static_cast<std::size_t>(n_));
    for (int t : placed_) cells.push_back(types_[static_cast<std::size_t>(t)]);
    return Tiling(w_, h_, std::move(cells));
  }

  void search(std::uint64_t limit, std::uint64_t collect, int pinned_type, SolveResult& result) {
    if (!feasible()) return;

    const std::vector<std::uint32_t> pinned =
        pinned_type == kNone ? std::vector<std::uint32_t>{}
                             : std::vector<std::uint32_t>{static_cast<std::uint32_t>(pinned_type)};
    std::vector<Frame> stack(static_cast<std::size_t>(n_));
    int depth = 0;
    stack[0].candidates = pinned_type == kNone ? candidates(0) : &pinned;

    auto& stats = result.stats;
    while (depth >= 0) {
      Frame& frame = stack[static_cast<std::size_t>(depth)];
      if (frame.placed != kNone) {
        place(depth, frame.placed, -1);
        placed_[static_cast<std::size_t>(depth)] = kNone;
        frame.placed = kNone;
      }

      bool descended = false;
      while (frame.next < frame.candidates->size()) {
        const int t = static_cast<int>((*frame.candidates)[frame.next++]);
        if (remaining_[static_cast<std::size_t>(t)] == 0) continue;
        ++stats.nodes_expanded;
        if (!fits(depth, t)) continue;

        place(depth, t, +1);
        placed_[static_cast<std::size_t>(depth)] = t;
        if (!feasible()) {
          place(depth, t, -1);
          placed_[static_cast<std::size_t>(depth)] = kNone;
          continue;
        }
        stats.max_depth = std::max(stats.max_depth, depth + 1);

        if (depth + 1 == n_) {
          ++result.count;
          if (result.witnesses.size() < collect) result.witnesses.push_back(current_tiling());
          place(depth, t, -1);
          placed_[static_cast<std::size_t>(depth)] = kNone;
          if (result.count >= limit) return;
          continue;
        }

        frame.placed = t;
        ++depth;
        Frame& child = stack[static_cast<std::size_t>(depth)];
        child = Frame{candidates(depth), 0, kNone};
        descended = true;
        break;
      }
      if (!descended) {
        frame = Frame{};
        --depth;
      }
    }
  }

  const Instance& instance_;
  int w_ = 0;
  int h_ = 0;
  int n_ = 0;
  bool torus_ = false;

  std::vector<Tile> types_;
  std::vector<int> multiplicity_;
  std::vector<std::array<std::uint32_t, 4>> labels_;
  std::uint32_t label_count_ = 0;
  std::array<std::vector<int>, 4> label_users_;

  std::vector<std::array<int, 4>> neighbours_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
  const std::vector<std::uint32_t> empty_;

  std::vector<int> remaining_;
  std::vector<int> placed_;
  std::array<std::vector<int>, 4> rem_;
  std::array<std::vector<int>, 4> need_;
  std::array<long long, 4> border_free_{};
  std::array<long long, 2> pos_{};
  std::array<long long, 2> neg_{};
  long long deficits_ = 0;
  std::vector<int> self_v_;
  std::vector<int> start_v_;
  std::vector<int> self_h_;
  std::vector<int> start_h_;
  long long stranded_v_ = 0;
  long long stranded_h_ = 0;
};

}  // namespace

SolveResult solve(const Instance& instance, std::uint64_t limit, std::uint64_t collect) {
  if (limit < 1) throw InvalidArgument("solve: limit must be at least 1");
  if (collect > limit) throw InvalidArgument("solve: collect must not exceed limit");

  if (instance.boundary() == Boundary::Toroidal && instance.cell_count() > 1) {
    // Cyclic shifts map torus tilings onto torus tilings, so some solution
    // exists iff one exists with a given unique tile at (0,0).
    Search probe(instance);
    const int pin = probe.pin_candidate();
    if (pin != kNone) {
      SolveResult pinned = probe.run(1, std::min<std::uint64_t>(collect, 1), pin);
      if (pinned.count == 0 || limit == 1) return pinned;
      SolveResult full = Search(instance).run(limit, collect, kNone);
      full.stats.nodes_expanded += pinned.stats.nodes_expanded;
      full.stats.elapsed += pinned.stats.elapsed;
      return full;
    }
  }
  return Search(instance).run(limit, collect, kNone);
}

bool is_uniquely_solvable(const Instance& instance) { return solve(instance, 2).count == 1; }

}  // namespace tvx
