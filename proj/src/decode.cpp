#include <algorithm>
#include <string>

#include "ppc/errors.hpp"
#include "ppc/solver.hpp"

namespace ppc {

namespace {

struct ForwardStep {
  VarId pivot;
  std::optional<std::uint32_t> event;
};

// Resolves (alpha, beta) of a record to an event containing the pivot.
std::uint32_t resolve_event(const ProblemInstance& instance, VarId pivot, const RegisterRecord& rec,
                            std::uint64_t step) {
  const auto list = instance.bucket(pivot, rec.alpha);
  if (list.empty())
    throw DecodeError(step, "alpha " + std::to_string(rec.alpha) + " names no event bucket of variable " +
                                std::to_string(instance.label(pivot)));
  if (rec.beta < 1 || rec.beta > list.size() || rec.beta > instance.degree(rec.alpha))
    throw DecodeError(step, "beta " + std::to_string(rec.beta) + " outside 1.." + std::to_string(list.size()));
  return list[rec.beta - 1];
}

// Pivots and events from the records alone.
std::vector<ForwardStep> forward_pass(const ProblemInstance& instance, const RunRegister& reg,
                                      const std::function<void(std::uint64_t, const std::vector<bool>&)>& visit) {
  const std::size_t n = instance.num_vars();
  std::vector<bool> uncolored(n, true);
  std::size_t remaining = n;
  std::vector<ForwardStep> steps;
  steps.reserve(reg.entries.size());
  for (std::uint64_t i = 1; i <= reg.entries.size(); ++i) {
    if (remaining == 0) throw DecodeError(i, "register continues after every variable is assigned");
    const VarId pivot = static_cast<VarId>(std::find(uncolored.begin(), uncolored.end(), true) - uncolored.begin());
    uncolored[pivot] = false;
    --remaining;
    ForwardStep fs{pivot, std::nullopt};
    if (const auto& rec = reg.entries[i - 1].record) {
      const std::uint32_t x = resolve_event(instance, pivot, *rec, i);
      const Event& e = instance.event(x);
      for (VarId u : e.free_set(e.slot_of(pivot))) {
        if (!uncolored[u]) ++remaining;
        uncolored[u] = true;
      }
      fs.event = x;
    }
    steps.push_back(fs);
    if (visit) visit(i, uncolored);
  }
  return steps;
}

}  // namespace

void replay_uncolored(const ProblemInstance& instance, const RunRegister& reg,
                      const std::function<void(std::uint64_t, const std::vector<bool>&)>& visit) {
  forward_pass(instance, reg, visit);
}

History decode(const ProblemInstance& instance, const RunRegister& reg) {
  const std::size_t n = instance.num_vars();
  if (reg.final_config.size() != n)
    throw DecodeError(0, "final configuration has " + std::to_string(reg.final_config.size()) + " entries for " +
                             std::to_string(n) + " variables");
  std::vector<bool> final_uncolored(n, true);
  const auto forward =
      forward_pass(instance, reg, [&](std::uint64_t, const std::vector<bool>& x) { final_uncolored = x; });
  for (VarId v = 0; v < n; ++v) {
    const bool empty = reg.final_config[v] == kUncolored;
    if (empty != final_uncolored[v])
      throw DecodeError(reg.entries.size(), "final configuration disagrees with the register at variable " +
                                                std::to_string(instance.label(v)));
    if (!empty && reg.final_config[v] > instance.domain(v))
      throw DecodeError(reg.entries.size(),
                        "final value out of domain at variable " + std::to_string(instance.label(v)));
  }

  History history;
  history.steps.resize(forward.size());
  std::vector<Color> phi = reg.final_config;
  for (std::size_t i = forward.size(); i-- > 0;) {
    const std::uint64_t step = i + 1;
    const VarId pivot = forward[i].pivot;
    DecodedStep& out = history.steps[i];
    out.var = pivot;
    out.event = forward[i].event;
    if (!forward[i].event) {
      if (phi[pivot] == kUncolored) throw DecodeError(step, "pivot uncolored after an empty step");
      out.color = phi[pivot];
      phi[pivot] = kUncolored;
      continue;
    }
    const std::uint32_t x = *forward[i].event;
    const Event& e = instance.event(x);
    const auto free = e.free_set(e.slot_of(pivot));
    for (VarId u : e.scope) {
      const bool is_free = std::binary_search(free.begin(), free.end(), u);
      if (is_free != (phi[u] == kUncolored))
        throw DecodeError(step, "configuration of event " + std::to_string(x) + " inconsistent with its reset");
    }
    const auto& rec = *reg.entries[i].record;
    if (rec.gamma < 1 || rec.gamma > e.max_extensions)
      throw DecodeError(step, "gamma " + std::to_string(rec.gamma) + " outside 1.." + std::to_string(e.max_extensions));
    if (!instance.model().unrank_extension(instance, x, free, rec.gamma, phi))
      throw DecodeError(
          step, "gamma " + std::to_string(rec.gamma) + " is not an extension label of event " + std::to_string(x));
    out.color = phi[pivot];
    phi[pivot] = kUncolored;
  }
  if (std::any_of(phi.begin(), phi.end(), [](Color c) { return c != kUncolored; }))
    throw DecodeError(0, "replay does not return to the all-uncolored start");

  history.tapes.assign(n, {});
  for (const auto& s : history.steps) history.tapes[s.var].push_back(s.color);
  return history;
}

bool matches(const RunRegister& reg, const History& history) {
  if (reg.entries.size() != history.steps.size()) return false;
  for (std::size_t i = 0; i < reg.entries.size(); ++i) {
    const auto& e = reg.entries[i];
    const auto& s = history.steps[i];
    if (e.var != s.var || e.value != s.color) return false;
    if (e.record.has_value() != s.event.has_value()) return false;
    if (e.record && e.record->event != *s.event) return false;
  }
  if (!reg.tapes.empty() && reg.tapes != history.tapes) return false;
  return true;
}

}  // namespace ppc
