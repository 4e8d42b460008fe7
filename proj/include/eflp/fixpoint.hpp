#pragma once

#include "eflp/semantics.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

namespace eflp {

class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(std::size_t max_iter)
      : Error("no fixpoint reached within " + std::to_string(max_iter) + " iterations"), max_iter_(max_iter) {}
  std::size_t max_iter() const { return max_iter_; }

 private:
  std::size_t max_iter_;
};

/// Candidate space exceeds the configured cap.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

template <class T>
struct FixpointResult {
  T value;
  /// Applications that changed the iterate.
  std::size_t iterations = 0;
  /// Total operator applications, including the final confirming one.
  std::size_t applications = 0;
  bool converged = false;
};

/// 10000 unless EFLP_MAX_ITER holds a positive integer.
inline std::size_t default_max_iter() {
  if (const char* env = std::getenv("EFLP_MAX_ITER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

/// Kleene iteration from `start` until two consecutive iterates are equal.
/// Running out of budget is reported through `converged`, never hidden.
template <class T, class Op>
FixpointResult<T> lfp_iterate(Op&& op, T start, std::size_t max_iter = default_max_iter()) {
  FixpointResult<T> r{std::move(start)};
  while (r.applications < max_iter) {
    T next = op(r.value);
    ++r.applications;
    if (next == r.value) {
      r.converged = true;
      return r;
    }
    r.value = std::move(next);
    ++r.iterations;
  }
  return r;
}

template <class T>
T require_converged(FixpointResult<T> r, std::size_t max_iter) {
  if (!r.converged) throw NonConvergenceError(max_iter);
  return std::move(r.value);
}

inline FixpointResult<InterpPair> kripke_kleene(const CompiledProgram& program,
                                                std::size_t max_iter = default_max_iter()) {
  InterpPair start{ParaInterp::bottom(program.universe()), ParaInterp::top(program.universe())};
  auto r = lfp_iterate([&](const InterpPair& p) { return approximator(program, p); }, std::move(start), max_iter);
  if (!r.converged) throw NonConvergenceError(max_iter);
  return r;
}

/// Least fixpoint of z -> first(z, frozen), from bottom.
inline ParaInterp frozen_lfp(const CompiledProgram& program, const ParaInterp& frozen,
                             std::size_t max_iter = default_max_iter()) {
  return require_converged(
      lfp_iterate([&](const ParaInterp& z) { return approximator_first(program, z, frozen); },
                  ParaInterp::bottom(program.universe()), max_iter),
      max_iter);
}

/// (lfp first(., y), lfp first(., x)); the second is the second component
/// of the approximator with x frozen, by symmetry.
inline InterpPair stable_revision(const CompiledProgram& program, const InterpPair& pair,
                                  std::size_t max_iter = default_max_iter()) {
  return {frozen_lfp(program, pair.upper, max_iter), frozen_lfp(program, pair.lower, max_iter)};
}

inline FixpointResult<InterpPair> well_founded(const CompiledProgram& program,
                                               std::size_t max_iter = default_max_iter()) {
  InterpPair start{ParaInterp::bottom(program.universe()), ParaInterp::top(program.universe())};
  auto r = lfp_iterate([&](const InterpPair& p) { return stable_revision(program, p, max_iter); }, std::move(start),
                       max_iter);
  if (!r.converged) throw NonConvergenceError(max_iter);
  return r;
}

inline bool is_stable_model(const CompiledProgram& program, const ParaInterp& interp,
                            std::size_t max_iter = default_max_iter()) {
  program.require_universe(interp);
  return frozen_lfp(program, interp, max_iter) == interp;
}

inline FixpointResult<InterpPair> kripke_kleene(const Program& p, std::size_t max_iter = default_max_iter()) {
  return kripke_kleene(CompiledProgram(p, true), max_iter);
}
inline FixpointResult<InterpPair> well_founded(const Program& p, std::size_t max_iter = default_max_iter()) {
  return well_founded(CompiledProgram(p, true), max_iter);
}
inline InterpPair stable_revision(const Program& p, const InterpPair& pair, std::size_t max_iter = default_max_iter()) {
  return stable_revision(CompiledProgram(p, pair.lower.universe(), true), pair, max_iter);
}
inline bool is_stable_model(const Program& p, const ParaInterp& interp, std::size_t max_iter = default_max_iter()) {
  return is_stable_model(CompiledProgram(p, interp.universe(), true), interp, max_iter);
}

// ---- stable model search ----------------------------------------------------

/// Search grid: the carrier on finite lattices; otherwise 0, 1 and the
/// program's constants, each also passed once through both negators.
inline std::vector<TruthValue> default_grid(const CompiledProgram& program) {
  const auto& config = program.config();
  if (config.lattice().is_finite()) return config.lattice().carrier();
  std::set<TruthValue> base = program.constants();
  base.insert(TruthValue::zero());
  base.insert(TruthValue::one());
  std::set<TruthValue> closed = base;
  for (const auto& v : base) {
    closed.insert(config.strong_neg(v));
    closed.insert(config.weak_neg(v));
  }
  return {closed.begin(), closed.end()};
}

enum class SearchStrategy { guess_negations, brute_force };

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::guess_negations;
  /// Cap on the number of candidates examined.
  std::size_t max_candidates = 50'000'000;
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;
  /// Drop stable models with a degree outside the grid. The guessing
  /// strategy can find such models; brute force never does.
  bool restrict_to_grid = true;
  std::size_t max_iter = default_max_iter();
};

namespace detail {

inline std::size_t candidate_count(std::size_t base, std::size_t digits, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    if (base != 0 && n > cap / base)
      throw SearchLimitError("search space " + std::to_string(base) + "^" + std::to_string(digits) +
                             " exceeds the cap of " + std::to_string(cap) + " candidates");
    n *= base;
  }
  if (n > cap) throw SearchLimitError("search space exceeds the cap of " + std::to_string(cap) + " candidates");
  return n;
}

/// Runs `visit(index, out)` for every index in [0, count) across workers and
/// returns the union of the outputs, sorted.
template <class T, class Visit>
std::vector<T> parallel_collect(std::size_t count, std::size_t workers, Visit visit) {
  if (workers == 0) workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, count));
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < count; i += workers) visit(i, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Interpretation number `index` in mixed radix over grid^(2n).
inline ParaInterp decode_interp(std::size_t index, const std::vector<TruthValue>& grid, const UniversePtr& u) {
  ParaInterp out(u);
  for (std::size_t a = 0; a < out.size(); ++a) {
    out[a].t = grid[index % grid.size()];
    index /= grid.size();
    out[a].f = grid[index % grid.size()];
    index /= grid.size();
  }
  return out;
}

inline bool on_grid(const ParaInterp& interp, const std::set<TruthValue>& grid) {
  for (const auto& p : interp.values())
    if (!grid.contains(p.t) || !grid.contains(p.f)) return false;
  return true;
}

inline std::vector<TruthValue> normalize_grid(std::vector<TruthValue> grid) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || !grid.front().is_zero() || !grid.back().is_one())
    throw ConfigError("search grid must contain 0 and 1");
  return grid;
}

}  // namespace detail

/// All stable models whose degrees lie in `grid`. Complete on finite
/// lattices when the grid is the carrier; over the rationals only the grid
/// is searched.
///
/// The default strategy guesses the degrees of the literals that occur under
/// weak negation, computes the least fixpoint with those guesses frozen, and
/// keeps results that reproduce their guess. Nested weak negation falls back
/// to brute force over grid^(2|atoms|).
inline std::vector<ParaInterp> enumerate_stable_models(const CompiledProgram& program, std::vector<TruthValue> grid,
                                                       const SearchOptions& options = {}) {
  grid = detail::normalize_grid(std::move(grid));
  const std::set<TruthValue> grid_set(grid.begin(), grid.end());
  const auto& u = program.universe();
  auto keep = [&](const ParaInterp& m) { return !options.restrict_to_grid || detail::on_grid(m, grid_set); };

  if (options.strategy == SearchStrategy::brute_force || program.nested_weak_neg()) {
    std::size_t count = detail::candidate_count(grid.size(), 2 * u->size(), options.max_candidates);
    return detail::parallel_collect<ParaInterp>(count, options.workers, [&](std::size_t i, auto& out) {
      auto cand = detail::decode_interp(i, grid, u);
      if (is_stable_model(program, cand, options.max_iter)) out.push_back(std::move(cand));
    });
  }

  std::vector<CompiledProgram::LiteralSlot> slots(program.weak_neg_slots().begin(), program.weak_neg_slots().end());
  std::size_t count = detail::candidate_count(grid.size(), slots.size(), options.max_candidates);
  return detail::parallel_collect<ParaInterp>(count, options.workers, [&](std::size_t i, auto& out) {
    ParaInterp guess(u);
    std::vector<const TruthValue*> guessed(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto& v = grid[i % grid.size()];
      i /= grid.size();
      auto& pair = guess[slots[s].atom];
      (slots[s].negated ? pair.f : pair.t) = v;
      guessed[s] = &v;
    }
    ParaInterp m = frozen_lfp(program, guess, options.max_iter);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto& pair = m[slots[s].atom];
      if ((slots[s].negated ? pair.f : pair.t) != *guessed[s]) return;
    }
    if (keep(m) && is_stable_model(program, m, options.max_iter)) out.push_back(std::move(m));
  });
}

inline std::vector<ParaInterp> enumerate_stable_models(const CompiledProgram& program,
                                                       const SearchOptions& options = {}) {
  return enumerate_stable_models(program, default_grid(program), options);
}

/// Fixpoints of the immediate consequence operator on the grid that are
/// minimal in the truth order among those fixpoints.
inline std::vector<ParaInterp> minimal_fixpoints(const CompiledProgram& program, std::vector<TruthValue> grid,
                                                 const SearchOptions& options = {}) {
  grid = detail::normalize_grid(std::move(grid));
  const auto& u = program.universe();
  std::size_t count = detail::candidate_count(grid.size(), 2 * u->size(), options.max_candidates);
  auto fixpoints = detail::parallel_collect<ParaInterp>(count, options.workers, [&](std::size_t i, auto& out) {
    auto cand = detail::decode_interp(i, grid, u);
    if (phi(program, cand) == cand) out.push_back(std::move(cand));
  });
  std::vector<ParaInterp> minimal;
  for (const auto& f : fixpoints) {
    bool dominated = false;
    for (const auto& g : fixpoints)
      if (!(g == f) && leq_t(g, f)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(f);
  }
  return minimal;
}

}  // namespace eflp
