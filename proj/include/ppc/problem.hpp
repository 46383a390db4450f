#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ppc/bounds.hpp"
#include "ppc/types.hpp"

namespace ppc {

class ProblemInstance;

/**
 * A bad event over an ordered variable scope.
 *
 * For every scope position i, free_set(i) lists the l variables that are
 * reset when the event fires with scope[i] as pivot; the remaining k =
 * |scope| - l variables stay fixed. Given the fixed values, at most
 * max_extensions assignments of the free set make the event occur.
 */
struct Event {
  std::vector<VarId> scope;
  std::uint32_t free_count = 0;
  std::vector<VarId> free_sets;
  std::uint64_t max_extensions = 1;

  std::span<const VarId> free_set(std::size_t slot) const { return {free_sets.data() + slot * free_count, free_count}; }
  std::size_t fixed_count() const { return scope.size() - free_count; }
  /// Position of v in scope, or scope.size() when absent.
  std::size_t slot_of(VarId v) const;
};

/**
 * Violation predicate plus the fixed enumeration order of violating
 * extensions, shared by a family of events.
 *
 * Extensions of a free set are ordered lexicographically by the tuple of
 * free-variable values, free variables sorted by id. The default rank /
 * unrank / count implementations enumerate all tuples through violated();
 * models with combinatorial structure override them.
 */
class ConstraintModel {
 public:
  virtual ~ConstraintModel() = default;

  /// Called only when every scope variable of `event` is assigned.
  virtual bool violated(const ProblemInstance& instance, std::size_t event, std::span<const Color> values) const = 0;

  virtual std::uint64_t count_extensions(const ProblemInstance& instance, std::size_t event,
                                         std::span<const VarId> free, std::span<const Color> values) const;

  /// 1-based label of the current values of `free`, or 0 when they do not violate the event.
  virtual std::uint64_t rank_extension(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                                       std::span<const Color> values) const;

  /// Writes extension number `label` into values[free]; returns false when label is out of range.
  virtual bool unrank_extension(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                                std::uint64_t label, std::span<Color> values) const;
};

/// Model from a plain callable over the scope values (in scope order).
class PredicateModel final : public ConstraintModel {
 public:
  using Predicate = std::function<bool(std::size_t event, std::span<const Color> scope_values)>;

  explicit PredicateModel(Predicate predicate) : predicate_(std::move(predicate)) {}

  bool violated(const ProblemInstance& instance, std::size_t event, std::span<const Color> values) const override;

 private:
  Predicate predicate_;
};

/**
 * Input of the resampling algorithm: variables with finite domains
 * [1, domain], events with their extension metadata, and for every
 * (variable, l) the ordered list of events containing the variable whose
 * free sets have size l. That list is sorted by event index; an event's
 * 1-based position in it is the beta of a register entry.
 */
class ProblemInstance {
 public:
  /// Validates the structure; throws std::invalid_argument on malformed input.
  ProblemInstance(std::vector<std::uint32_t> domains, std::vector<Event> events,
                  std::shared_ptr<const ConstraintModel> model, std::vector<std::uint32_t> labels = {});

  std::size_t num_vars() const noexcept { return domains_.size(); }
  std::size_t num_events() const noexcept { return events_.size(); }
  std::uint32_t domain(VarId v) const { return domains_[v]; }
  const Event& event(std::size_t x) const { return events_[x]; }
  const ConstraintModel& model() const noexcept { return *model_; }

  /// External id of variable v (the plane point for plane problems; v itself otherwise).
  std::uint32_t label(VarId v) const { return labels_[v]; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  /// Inverse of label(); returns num_vars() when unknown.
  VarId var_of_label(std::uint32_t label) const;

  /// All events containing v, sorted by index.
  std::span<const std::uint32_t> events_of(VarId v) const { return var_events_[v]; }
  /// Events containing v with free-set size l, sorted by index.
  std::span<const std::uint32_t> bucket(VarId v, std::uint32_t l) const;
  /// 1-based position of `event` in bucket(v, l_event); 0 when absent.
  std::uint32_t bucket_position(VarId v, std::size_t event) const;

  /// Distinct free-set sizes, ascending.
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  /// d_l = max over variables of |bucket(v, l)|.
  std::uint64_t degree(std::uint32_t l) const;
  ExponentProfile profile() const;

  bool violated(std::size_t event, std::span<const Color> values) const {
    return model_->violated(*this, event, values);
  }

 private:
  std::vector<std::uint32_t> domains_;
  std::vector<Event> events_;
  std::shared_ptr<const ConstraintModel> model_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> label_index_;
  std::vector<std::vector<std::uint32_t>> var_events_;
  // per variable: (l, events) pairs ordered by l
  std::vector<std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>> buckets_;
  std::vector<std::uint32_t> exponents_;
};

/// Events containing `pivot` that are fully assigned and violated, in event order.
std::vector<std::size_t> detect_violations(const ProblemInstance& instance, std::span<const Color> values, VarId pivot);

}  // namespace ppc
