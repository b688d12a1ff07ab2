#include "tetravex/generator.hpp"

#include <string>
#include <utility>
#include <vector>

#include "tetravex/error.hpp"
#include "tetravex/rng.hpp"
#include "tetravex/solver.hpp"

namespace tvx {

std::string_view to_string(GenMode mode) { return mode == GenMode::Shredded ? "shredded" : "iid"; }

GenMode parse_gen_mode(std::string_view text) {
  if (text == "shredded") return GenMode::Shredded;
  if (text == "iid") return GenMode::Iid;
  throw InvalidArgument("unknown generator mode '" + std::string(text) + "' (expected shredded or iid)");
}

namespace {

void check_config(const GenConfig& cfg, GenMode expected) {
  if (cfg.width < 1 || cfg.height < 1) throw InvalidArgument("board dimensions must be positive");
  if (cfg.alphabet < 1) throw InvalidArgument("alphabet must be at least 1");
  if (cfg.mode != expected) {
    throw InvalidArgument("config mode is " + std::string(to_string(cfg.mode)) + ", expected " +
                          std::string(to_string(expected)));
  }
}

Label draw(SplitMix64& rng, int alphabet) {
  return Label::num(static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(alphabet))));
}

}  // namespace

ShreddedBoard generate_shredded_board(const GenConfig& cfg) {
  check_config(cfg, GenMode::Shredded);
  const int w = cfg.width;
  const int h = cfg.height;
  SplitMix64 rng(cfg.seed);

  // horizontal[r][c]: edge above cell (r, c); vertical[r][c]: edge left of it.
  std::vector<std::vector<Label>> horizontal(static_cast<std::size_t>(h + 1));
  for (auto& row : horizontal) {
    for (int c = 0; c < w; ++c) row.push_back(draw(rng, cfg.alphabet));
  }
  std::vector<std::vector<Label>> vertical(static_cast<std::size_t>(h));
  for (auto& row : vertical) {
    for (int c = 0; c <= w; ++c) row.push_back(draw(rng, cfg.alphabet));
  }

  std::vector<Tile> cells;
  cells.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (int r = 0; r < h; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    for (int c = 0; c < w; ++c) {
      const auto uc = static_cast<std::size_t>(c);
      cells.push_back({horizontal[ur][uc], vertical[ur][uc + 1], horizontal[ur + 1][uc], vertical[ur][uc]});
    }
  }
  Tiling board(w, h, cells);

  for (std::size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[rng.uniform(i)]);
  }
  return {Instance(w, h, Boundary::Bordered, std::move(cells)), std::move(board)};
}

Instance generate_shredded(const GenConfig& cfg) { return generate_shredded_board(cfg).instance; }

Instance generate_iid(const GenConfig& cfg) {
  check_config(cfg, GenMode::Iid);
  SplitMix64 rng(cfg.seed);
  std::vector<Tile> tiles(static_cast<std::size_t>(cfg.width) * static_cast<std::size_t>(cfg.height));
  for (Tile& t : tiles) {
    t.top = draw(rng, cfg.alphabet);
    t.right = draw(rng, cfg.alphabet);
    t.bottom = draw(rng, cfg.alphabet);
    t.left = draw(rng, cfg.alphabet);
  }
  return Instance(cfg.width, cfg.height, Boundary::Bordered, std::move(tiles));
}

Instance generate(const GenConfig& cfg) {
  return cfg.mode == GenMode::Shredded ? generate_shredded(cfg) : generate_iid(cfg);
}

Instance generate_unique(const GenConfig& cfg, int budget) {
  if (budget < 1) throw InvalidArgument("budget must be positive");
  check_config(cfg, GenMode::Shredded);
  GenConfig attempt = cfg;
  for (int k = 0; k < budget; ++k) {
    attempt.seed = cfg.seed + static_cast<std::uint64_t>(k);
    Instance instance = generate_shredded(attempt);
    if (is_uniquely_solvable(instance)) return instance;
  }
  throw Error("no uniquely solvable instance after " + std::to_string(budget) + " attempts (seeds " +
              std::to_string(cfg.seed) + ".." + std::to_string(cfg.seed + static_cast<std::uint64_t>(budget) - 1) +
              ")");
}

}  // namespace tvx
