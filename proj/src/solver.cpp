#include "ppc/solver.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "ppc/rng.hpp"

namespace ppc {

namespace {

// Uncolored-variable set with O(n/64) smallest-member lookup.
class VarSet {
 public:
  explicit VarSet(std::size_t n) : n_(n), words_((n + 63) / 64, ~std::uint64_t{0}) {
    if (n % 64) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }

  void insert(VarId v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(VarId v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  /// Smallest member, or n when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

RunResult run(const ProblemInstance& instance, const RunOptions& options) {
  if (options.max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  const std::size_t n = instance.num_vars();

  RunResult result;
  result.reg.seed = options.seed;
  result.reg.tapes.assign(n, {});
  std::vector<Color> values(n, kUncolored);
  std::vector<std::uint32_t> unassigned(instance.num_events());
  for (std::size_t x = 0; x < instance.num_events(); ++x)
    unassigned[x] = static_cast<std::uint32_t>(instance.event(x).scope.size());
  VarSet uncolored(n);

  auto finish = [&](RunStatus status) {
    result.status = status;
    result.assignment = values;
    result.reg.final_config = values;
    if (status == RunStatus::Success) {
      for (std::size_t x = 0; x < instance.num_events(); ++x)
        if (instance.violated(x, values))
          throw std::logic_error("solver bookkeeping error: event " + std::to_string(x) + " violated at success");
    }
    return result;
  };

  if (n == 0) return finish(RunStatus::Success);

  for (std::uint64_t step = 1; step <= options.max_steps; ++step) {
    const VarId pivot = static_cast<VarId>(uncolored.first());
    auto& tape = result.reg.tapes[pivot];
    const auto value = static_cast<Color>(tape_value(options.seed, pivot, tape.size(), instance.domain(pivot)));
    tape.push_back(value);
    values[pivot] = value;
    uncolored.erase(pivot);
    for (std::uint32_t x : instance.events_of(pivot)) --unassigned[x];
    result.steps = step;

    std::size_t hit = instance.num_events();
    for (std::uint32_t x : instance.events_of(pivot))
      if (unassigned[x] == 0 && instance.violated(x, values)) {
        hit = x;
        break;
      }

    RegisterEntry entry{pivot, value, std::nullopt};
    if (hit != instance.num_events()) {
      const Event& e = instance.event(hit);
      const auto free = e.free_set(e.slot_of(pivot));
      RegisterRecord rec;
      rec.alpha = e.free_count;
      rec.beta = instance.bucket_position(pivot, hit);
      rec.gamma = instance.model().rank_extension(instance, hit, free, values);
      rec.event = static_cast<std::uint32_t>(hit);
      if (rec.gamma == 0 || rec.gamma > e.max_extensions)
        throw std::logic_error("event " + std::to_string(hit) + " extension label " + std::to_string(rec.gamma) +
                               " outside 1.." + std::to_string(e.max_extensions));
      for (VarId u : free) {
        values[u] = kUncolored;
        uncolored.insert(u);
        for (std::uint32_t x : instance.events_of(u)) ++unassigned[x];
      }
      entry.record = rec;
      ++result.violations;
    }
    result.reg.entries.push_back(entry);
    if (options.on_step) options.on_step(step, values);
    if (!entry.record && uncolored.first() == n) return finish(RunStatus::Success);
  }
  return finish(RunStatus::Exhausted);
}

}  // namespace ppc
