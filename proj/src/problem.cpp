#include "ppc/problem.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ppc {

std::size_t Event::slot_of(VarId v) const {
  const auto it = std::lower_bound(scope.begin(), scope.end(), v);
  return it != scope.end() && *it == v ? static_cast<std::size_t>(it - scope.begin()) : scope.size();
}

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 32;

// Visits the free-variable tuples in lexicographic order (free[0] most significant),
// writing each into `work`; stops when visit returns false.
template <typename Visit>
void enumerate_tuples(const ProblemInstance& instance, std::span<const VarId> free, std::vector<Color>& work,
                      Visit&& visit) {
  std::uint64_t total = 1;
  for (VarId v : free) {
    total *= instance.domain(v);
    if (total > kMaxEnumeration) throw std::length_error("extension space too large to enumerate");
  }
  for (VarId v : free) work[v] = 1;
  for (;;) {
    if (!visit()) return;
    std::size_t i = free.size();
    while (i > 0) {
      --i;
      if (work[free[i]] < instance.domain(free[i])) {
        ++work[free[i]];
        break;
      }
      work[free[i]] = 1;
      if (i == 0) return;
    }
    if (free.empty()) return;
  }
}

}  // namespace

std::uint64_t ConstraintModel::count_extensions(const ProblemInstance& instance, std::size_t event,
                                                std::span<const VarId> free, std::span<const Color> values) const {
  std::vector<Color> work(values.begin(), values.end());
  std::uint64_t count = 0;
  enumerate_tuples(instance, free, work, [&] {
    if (violated(instance, event, work)) ++count;
    return true;
  });
  return count;
}

std::uint64_t ConstraintModel::rank_extension(const ProblemInstance& instance, std::size_t event,
                                              std::span<const VarId> free, std::span<const Color> values) const {
  if (!violated(instance, event, values)) return 0;
  std::vector<Color> work(values.begin(), values.end());
  std::uint64_t count = 0;
  enumerate_tuples(instance, free, work, [&] {
    if (violated(instance, event, work)) ++count;
    return !std::all_of(free.begin(), free.end(), [&](VarId v) { return work[v] == values[v]; });
  });
  return count;
}

bool ConstraintModel::unrank_extension(const ProblemInstance& instance, std::size_t event, std::span<const VarId> free,
                                       std::uint64_t label, std::span<Color> values) const {
  if (label == 0) return false;
  std::vector<Color> work(values.begin(), values.end());
  std::uint64_t count = 0;
  bool found = false;
  enumerate_tuples(instance, free, work, [&] {
    if (violated(instance, event, work) && ++count == label) {
      found = true;
      return false;
    }
    return true;
  });
  if (!found) return false;
  for (VarId v : free) values[v] = work[v];
  return true;
}

bool PredicateModel::violated(const ProblemInstance& instance, std::size_t event, std::span<const Color> values) const {
  const auto& scope = instance.event(event).scope;
  std::vector<Color> scoped(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) scoped[i] = values[scope[i]];
  return predicate_(event, scoped);
}

ProblemInstance::ProblemInstance(std::vector<std::uint32_t> domains, std::vector<Event> events,
                                 std::shared_ptr<const ConstraintModel> model, std::vector<std::uint32_t> labels)
    : domains_(std::move(domains)), events_(std::move(events)), model_(std::move(model)), labels_(std::move(labels)) {
  if (!model_) throw std::invalid_argument("problem instance needs a constraint model");
  const std::size_t n = domains_.size();
  for (VarId v = 0; v < n; ++v)
    if (domains_[v] == 0 || domains_[v] > 65535)
      throw std::invalid_argument("variable " + std::to_string(v) + " has domain size outside 1..65535");

  if (labels_.empty()) {
    labels_.resize(n);
    for (VarId v = 0; v < n; ++v) labels_[v] = v;
  }
  if (labels_.size() != n) throw std::invalid_argument("label list does not match the variable count");
  const std::uint32_t max_label = n ? *std::max_element(labels_.begin(), labels_.end()) : 0;
  label_index_.assign(n ? max_label + 1 : 0, static_cast<std::uint32_t>(n));
  for (VarId v = 0; v < n; ++v) {
    if (label_index_[labels_[v]] != n) throw std::invalid_argument("duplicate variable label");
    label_index_[labels_[v]] = v;
  }

  var_events_.assign(n, {});
  buckets_.assign(n, {});
  for (std::size_t x = 0; x < events_.size(); ++x) {
    const Event& e = events_[x];
    const std::string where = "event " + std::to_string(x) + ": ";
    if (e.scope.empty()) throw std::invalid_argument(where + "empty scope");
    for (std::size_t i = 0; i < e.scope.size(); ++i) {
      if (e.scope[i] >= n) throw std::invalid_argument(where + "unknown variable " + std::to_string(e.scope[i]));
      if (i > 0 && e.scope[i] <= e.scope[i - 1]) throw std::invalid_argument(where + "scope not strictly ascending");
    }
    if (e.free_count == 0 || e.free_count > e.scope.size())
      throw std::invalid_argument(where + "free-set size outside 1..|scope|");
    if (e.free_sets.size() != e.scope.size() * e.free_count)
      throw std::invalid_argument(where + "free-set table has the wrong size");
    if (e.max_extensions == 0) throw std::invalid_argument(where + "extension bound must be positive");
    for (std::size_t i = 0; i < e.scope.size(); ++i) {
      const auto row = e.free_set(i);
      bool has_pivot = false;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0 && row[j] <= row[j - 1]) throw std::invalid_argument(where + "free set not strictly ascending");
        if (e.slot_of(row[j]) == e.scope.size()) throw std::invalid_argument(where + "free variable outside scope");
        has_pivot = has_pivot || row[j] == e.scope[i];
      }
      if (!has_pivot) throw std::invalid_argument(where + "free set does not contain its pivot");
    }
    for (VarId v : e.scope) {
      var_events_[v].push_back(static_cast<std::uint32_t>(x));
      auto& per_l = buckets_[v];
      auto it = std::find_if(per_l.begin(), per_l.end(), [&](const auto& b) { return b.first == e.free_count; });
      if (it == per_l.end()) {
        per_l.emplace_back(e.free_count, std::vector<std::uint32_t>{});
        it = per_l.end() - 1;
      }
      it->second.push_back(static_cast<std::uint32_t>(x));
    }
    if (std::find(exponents_.begin(), exponents_.end(), e.free_count) == exponents_.end())
      exponents_.push_back(e.free_count);
  }
  std::sort(exponents_.begin(), exponents_.end());
  for (auto& per_l : buckets_)
    std::sort(per_l.begin(), per_l.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
}

VarId ProblemInstance::var_of_label(std::uint32_t label) const {
  return label < label_index_.size() ? label_index_[label] : static_cast<VarId>(num_vars());
}

std::span<const std::uint32_t> ProblemInstance::bucket(VarId v, std::uint32_t l) const {
  for (const auto& [size, list] : buckets_.at(v))
    if (size == l) return list;
  return {};
}

std::uint32_t ProblemInstance::bucket_position(VarId v, std::size_t event) const {
  const auto list = bucket(v, events_.at(event).free_count);
  const auto it = std::lower_bound(list.begin(), list.end(), static_cast<std::uint32_t>(event));
  return it != list.end() && *it == event ? static_cast<std::uint32_t>(it - list.begin()) + 1 : 0;
}

std::uint64_t ProblemInstance::degree(std::uint32_t l) const {
  std::uint64_t best = 0;
  for (VarId v = 0; v < num_vars(); ++v) best = std::max<std::uint64_t>(best, bucket(v, l).size());
  return best;
}

ExponentProfile ProblemInstance::profile() const {
  ExponentProfile profile;
  for (auto l : exponents_) profile.per_l[l].degree = degree(l);
  for (const auto& e : events_) {
    auto& entry = profile.per_l[e.free_count];
    entry.extensions = std::max(entry.extensions, e.max_extensions);
  }
  return profile;
}

std::vector<std::size_t> detect_violations(const ProblemInstance& instance, std::span<const Color> values,
                                           VarId pivot) {
  std::vector<std::size_t> out;
  for (std::uint32_t x : instance.events_of(pivot)) {
    const auto& scope = instance.event(x).scope;
    if (std::any_of(scope.begin(), scope.end(), [&](VarId v) { return values[v] == kUncolored; })) continue;
    if (instance.violated(x, values)) out.push_back(x);
  }
  return out;
}

}  // namespace ppc
