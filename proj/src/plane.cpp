#include "ppc/plane.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace ppc {

namespace {

constexpr std::size_t kSamplesPerAxiom = 20;

using Bits = std::vector<std::uint64_t>;

class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols) : words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::size_t common(std::size_t r1, std::size_t r2) const {
    std::size_t count = 0;
    const std::uint64_t* a = &bits_[r1 * words_];
    const std::uint64_t* b = &bits_[r2 * words_];
    for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return count;
  }

 private:
  std::size_t words_;
  Bits bits_;
};

class Recorder {
 public:
  explicit Recorder(ValidationReport& report) : report_(report) {}

  void add(const std::string& axiom, std::vector<std::uint32_t> ids, std::string detail) {
    report_.pass = false;
    ++report_.violation_count;
    if (per_axiom_[axiom]++ < kSamplesPerAxiom)
      report_.violations.push_back({axiom, std::move(ids), std::move(detail)});
  }

 private:
  ValidationReport& report_;
  std::map<std::string, std::size_t> per_axiom_;
};

}  // namespace

bool ValidationReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(), [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

ProjectivePlane::ProjectivePlane(std::uint32_t order, std::vector<std::string> point_labels,
                                 std::vector<std::vector<PointId>> lines)
    : order_(order), labels_(std::move(point_labels)), lines_(std::move(lines)) {
  point_to_lines_.assign(labels_.size(), {});
  for (LineId l = 0; l < lines_.size(); ++l) {
    auto& pts = lines_[l];
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] >= labels_.size())
        throw std::invalid_argument("line " + std::to_string(l) + " references point " + std::to_string(pts[i]) +
                                    " but the plane has " + std::to_string(labels_.size()) + " points");
      if (i == 0 || pts[i] != pts[i - 1]) point_to_lines_[pts[i]].push_back(l);
    }
  }
}

bool ProjectivePlane::contains(LineId line, PointId point) const {
  const auto& pts = lines_.at(line);
  return std::binary_search(pts.begin(), pts.end(), point);
}

ProjectivePlane ProjectivePlane::dual() const {
  std::vector<std::string> labels(lines_.size());
  for (std::size_t l = 0; l < lines_.size(); ++l) labels[l] = "L" + std::to_string(l);
  std::vector<std::vector<PointId>> lines(point_to_lines_.begin(), point_to_lines_.end());
  return ProjectivePlane(order_, std::move(labels), std::move(lines));
}

ProjectivePlane build_pg2(const GaloisField& field) {
  const std::uint32_t q = field.order();
  struct Triple {
    std::uint32_t x, y, z;
  };
  std::vector<Triple> triples;
  triples.reserve(std::size_t{q} * q + q + 1);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      for (std::uint32_t z = 0; z < q; ++z) {
        const std::uint32_t lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) triples.push_back({x, y, z});
      }

  std::vector<std::string> labels;
  labels.reserve(triples.size());
  for (const auto& t : triples)
    labels.push_back("(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ")");

  std::vector<std::vector<PointId>> lines(triples.size());
  for (std::size_t l = 0; l < triples.size(); ++l) {
    const Triple& c = triples[l];
    lines[l].reserve(q + 1);
    for (PointId p = 0; p < triples.size(); ++p) {
      const Triple& t = triples[p];
      const auto dot = field.add(field.add(field.mul(c.x, t.x), field.mul(c.y, t.y)), field.mul(c.z, t.z));
      if (dot == 0) lines[l].push_back(p);
    }
  }
  return ProjectivePlane(q, std::move(labels), std::move(lines));
}

ProjectivePlane build_pg2(std::uint32_t q) {
  std::uint32_t p = 0, k = 0;
  if (!prime_power(q, p, k))
    throw std::invalid_argument("order " + std::to_string(q) + " is not a prime power; no PG(2,q) exists");
  return build_pg2(GaloisField::build(p, k));
}

ValidationReport validate_plane(const ProjectivePlane& plane) {
  ValidationReport report;
  Recorder rec(report);
  const std::uint64_t n = plane.order();
  const std::uint64_t expected = n * n + n + 1;
  const std::size_t np = plane.num_points();
  const std::size_t nl = plane.num_lines();

  if (n < 2) rec.add("order at least 2", {}, "order " + std::to_string(n));
  if (np != expected) rec.add("point count", {}, std::to_string(np) + " points, expected " + std::to_string(expected));
  if (nl != expected) rec.add("line count", {}, std::to_string(nl) + " lines, expected " + std::to_string(expected));

  BitMatrix line_bits(nl, np);
  BitMatrix point_bits(np, nl);
  for (LineId l = 0; l < nl; ++l) {
    const auto& pts = plane.line(l);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0 && pts[i] == pts[i - 1]) {
        rec.add("duplicate point on line", {l, pts[i]}, "");
        continue;
      }
      ++distinct;
      line_bits.set(l, pts[i]);
      point_bits.set(pts[i], l);
    }
    if (distinct != n + 1)
      rec.add("line size", {l}, std::to_string(distinct) + " points, expected " + std::to_string(n + 1));
  }
  for (PointId p = 0; p < np; ++p) {
    const std::size_t degree = plane.lines_through(p).size();
    if (degree != n + 1)
      rec.add("point degree", {p}, "on " + std::to_string(degree) + " lines, expected " + std::to_string(n + 1));
  }
  for (PointId p1 = 0; p1 < np; ++p1)
    for (PointId p2 = p1 + 1; p2 < np; ++p2) {
      const std::size_t c = point_bits.common(p1, p2);
      if (c == 0)
        rec.add("pair of points on no common line", {p1, p2}, "");
      else if (c > 1)
        rec.add("pair of points on more than one common line", {p1, p2}, std::to_string(c) + " common lines");
    }
  for (LineId l1 = 0; l1 < nl; ++l1)
    for (LineId l2 = l1 + 1; l2 < nl; ++l2) {
      const std::size_t c = line_bits.common(l1, l2);
      if (c == 0)
        rec.add("two lines meet in no point", {l1, l2}, "");
      else if (c > 1)
        rec.add("two lines meet in more than one point", {l1, l2}, std::to_string(c) + " common points");
    }
  return report;
}

}  // namespace ppc
