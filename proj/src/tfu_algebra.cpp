#include "ontoprob/tfu_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/rational.hpp>

#include "ontoprob/rng.hpp"

namespace ontoprob {

TfuJoint::TfuJoint(int n, std::vector<double> weights) : n_(n), w_(std::move(weights)) {
  if (n < 1 || n > kMaxTfuPropositions)
    throw std::invalid_argument("tfu joint: proposition count " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxTfuPropositions) + "]");
  if (w_.size() != pow3(n_))
    throw std::invalid_argument("tfu joint: expected " + std::to_string(pow3(n_)) +
                                " weights, got " + std::to_string(w_.size()));
  double sum = 0.0;
  for (double w : w_) {
    if (w < 0.0) throw std::invalid_argument("tfu joint: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("tfu joint: weights sum to " + std::to_string(sum) + ", not 1");
}

TfuJoint TfuJoint::uniform(int n) {
  std::size_t cells = pow3(n);
  return TfuJoint(n, std::vector<double>(cells, 1.0 / static_cast<double>(cells)));
}

TfuJoint TfuJoint::point_mass(int n, std::size_t cell) {
  if (n < 1 || n > kMaxTfuPropositions || cell >= pow3(n))
    throw std::invalid_argument("point_mass: outcome index out of range");
  std::vector<double> w(pow3(n), 0.0);
  w[cell] = 1.0;
  return TfuJoint(n, std::move(w));
}

bool TfuJoint::has_unobservable_mass() const {
  for (std::size_t cell = 0; cell < w_.size(); ++cell) {
    if (w_[cell] == 0.0) continue;
    for (int k = 0; k < n_; ++k)
      if (tfu_digit(cell, n_, k) == Tfu::U) return true;
  }
  return false;
}

TfuJoint tfu_from_classical(const ClassicalJoint& joint) {
  int n = joint.n();
  std::vector<double> w(pow3(n), 0.0);
  for (std::uint32_t cell = 0; cell < joint.size(); ++cell) {
    // Re-encode the {T,F} digits in base 3.
    std::size_t tfu = 0;
    for (int k = 0; k < n; ++k) tfu = tfu * 3 + (classical_truth(cell, n, k) ? 0 : 1);
    w[tfu] = joint.weight(cell);
  }
  return TfuJoint(n, std::move(w));
}

ClassicalJoint classical_from_tfu(const TfuJoint& joint) {
  int n = joint.n();
  std::vector<double> w(pow2(n), 0.0);
  for (std::size_t cell = 0; cell < joint.size(); ++cell) {
    if (joint.weight(cell) == 0.0) continue;
    std::uint32_t classical = 0;
    for (int k = 0; k < n; ++k) {
      Tfu d = tfu_digit(cell, n, k);
      if (d == Tfu::U)
        throw std::invalid_argument("classical_from_tfu: weight on an unobservable outcome");
      classical = classical * 2 + (d == Tfu::T ? 0 : 1);
    }
    w[classical] += joint.weight(cell);
  }
  return ClassicalJoint(n, std::move(w));
}

RelEvent::RelEvent(std::vector<std::pair<PropositionId, bool>> literals) : lits_(std::move(literals)) {
  for (const auto& [p, v] : lits_) {
    (void)v;
    if (p < 0) throw std::invalid_argument("rel event: negative proposition index");
  }
  std::sort(lits_.begin(), lits_.end());
  for (std::size_t i = 1; i < lits_.size(); ++i)
    if (lits_[i].first == lits_[i - 1].first)
      throw std::invalid_argument("rel event: proposition " + std::to_string(lits_[i].first) +
                                  " appears twice");
}

bool RelEvent::mentions(PropositionId p) const {
  for (const auto& [q, v] : lits_) {
    (void)v;
    if (q == p) return true;
  }
  return false;
}

std::string RelEvent::to_string() const {
  if (lits_.empty()) return "(empty)";
  std::string out;
  for (const auto& [p, v] : lits_) {
    if (!out.empty()) out += " & ";
    if (!v) out += '!';
    out += 'p';
    out += std::to_string(p);
  }
  return out;
}

bool RelEvent::holds(std::size_t cell, int n) const {
  for (const auto& [p, v] : lits_) {
    Tfu d = tfu_digit(cell, n, p);
    if (d == Tfu::U || (d == Tfu::T) != v) return false;
  }
  return true;
}

bool RelEvent::observable(std::size_t cell, int n) const {
  for (const auto& [p, v] : lits_) {
    (void)v;
    if (tfu_digit(cell, n, p) == Tfu::U) return false;
  }
  return true;
}

RelEvent operator&(const RelEvent& a, const RelEvent& b) {
  std::vector<std::pair<PropositionId, bool>> merged = a.literals();
  for (const auto& [p, v] : b.literals()) {
    bool found = false;
    for (const auto& [q, w] : merged) {
      if (q != p) continue;
      if (w != v)
        throw std::invalid_argument("rel event conjunction: proposition " + std::to_string(p) +
                                    " asserted both true and false");
      found = true;
    }
    if (!found) merged.emplace_back(p, v);
  }
  return RelEvent(std::move(merged));
}

namespace {

void check_in_range(const RelEvent& e, int n, const char* who) {
  for (const auto& [p, v] : e.literals()) {
    (void)v;
    if (p >= n)
      throw UnknownProposition(std::string(who) + ": event mentions proposition " +
                               std::to_string(p) + " but the joint has only " + std::to_string(n));
  }
}

}  // namespace

double relative_probability(const TfuJoint& joint, const RelEvent& e) {
  check_in_range(e, joint.n(), "relative_probability");
  double num = 0.0, den = 0.0;
  for (std::size_t cell = 0; cell < joint.size(); ++cell) {
    double w = joint.weight(cell);
    if (w == 0.0) continue;
    if (!e.observable(cell, joint.n())) continue;
    den += w;
    if (e.holds(cell, joint.n())) num += w;
  }
  if (den == 0.0)
    throw UndefinedRelativeProbability("relative_probability: no weight where " + e.to_string() +
                                       " is observable");
  return num / den;
}

double relative_conditional(const TfuJoint& joint, const RelEvent& e, const RelEvent& given) {
  check_in_range(e, joint.n(), "relative_conditional");
  check_in_range(given, joint.n(), "relative_conditional");
  double restriction = 0.0, num = 0.0, den = 0.0;
  for (std::size_t cell = 0; cell < joint.size(); ++cell) {
    double w = joint.weight(cell);
    if (w == 0.0) continue;
    if (!given.holds(cell, joint.n())) continue;
    restriction += w;
    if (!e.observable(cell, joint.n())) continue;
    den += w;
    if (e.holds(cell, joint.n())) num += w;
  }
  if (restriction == 0.0)
    throw ConditioningOnNull("relative_conditional: no weight where " + given.to_string() +
                             " holds");
  if (den == 0.0)
    throw UndefinedRelativeProbability("relative_conditional: no weight where " + e.to_string() +
                                       " is observable inside the restriction");
  return num / den;
}

CommutationGap commutation_gap(const TfuJoint& joint, const RelEvent& p, const RelEvent& q) {
  CommutationGap g;
  g.left = relative_probability(joint, p) * relative_conditional(joint, q, p);
  g.right = relative_probability(joint, q) * relative_conditional(joint, p, q);
  return g;
}

double strengthened_we_slack(const TfuJoint& joint, PropositionId a, PropositionId b,
                             PropositionId c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("strengthened_we_slack: propositions must be distinct");
  RelEvent ab({{a, true}, {b, true}});
  RelEvent nbc({{b, false}, {c, true}});
  RelEvent ac({{a, true}, {c, true}});
  return relative_probability(joint, ab) + relative_probability(joint, nbc) -
         relative_probability(joint, ac);
}

namespace {

using Rat = boost::rational<long long>;

constexpr int kCells = 27;  // {T,F,U}^3

// Per-cell membership flags for the three bracketed terms over propositions
// (0, 1, 2): [p0 & p1], [!p1 & p2], [p0 & p2].
struct CellFlags {
  bool den1, num1, den2, num2, den3, num3;
};

std::array<CellFlags, kCells> make_flags() {
  std::array<CellFlags, kCells> f{};
  for (int cell = 0; cell < kCells; ++cell) {
    Tfu d0 = tfu_digit(cell, 3, 0), d1 = tfu_digit(cell, 3, 1), d2 = tfu_digit(cell, 3, 2);
    f[cell].den1 = d0 != Tfu::U && d1 != Tfu::U;
    f[cell].num1 = d0 == Tfu::T && d1 == Tfu::T;
    f[cell].den2 = d1 != Tfu::U && d2 != Tfu::U;
    f[cell].num2 = d1 == Tfu::F && d2 == Tfu::T;
    f[cell].den3 = d0 != Tfu::U && d2 != Tfu::U;
    f[cell].num3 = d0 == Tfu::T && d2 == Tfu::T;
  }
  return f;
}

struct ExactSums {
  long long n1 = 0, d1 = 0, n2 = 0, d2 = 0, n3 = 0, d3 = 0;
};

// Slack of a unit-count vector as an exact rational; empty when any
// bracketed term is undefined.
std::optional<Rat> exact_slack(const ExactSums& s) {
  if (s.d1 == 0 || s.d2 == 0 || s.d3 == 0) return std::nullopt;
  return Rat(s.n1, s.d1) + Rat(s.n2, s.d2) - Rat(s.n3, s.d3);
}

bool is_u_free(int cell) {
  return tfu_digit(cell, 3, 0) != Tfu::U && tfu_digit(cell, 3, 1) != Tfu::U &&
         tfu_digit(cell, 3, 2) != Tfu::U;
}

struct Best {
  bool found = false;
  Rat slack;
  std::array<int, kCells> units{};
};

// Keep the deeper slack; on an exact tie keep the lexicographically first
// unit vector, so the winner does not depend on visit order.
void consider(Best& best, const Rat& slack, const std::array<int, kCells>& units) {
  if (!best.found || slack < best.slack ||
      (slack == best.slack &&
       std::lexicographical_compare(units.begin(), units.end(), best.units.begin(),
                                    best.units.end()))) {
    best.found = true;
    best.slack = slack;
    best.units = units;
  }
}

const Rat kViolationBound(-1, 1000000000);  // slack < -1e-9 counts as a violation

class GridSearch {
 public:
  GridSearch(int resolution, bool u_free_only)
      : resolution_(resolution), flags_(make_flags()) {
    for (int cell = 0; cell < kCells; ++cell)
      if (!u_free_only || is_u_free(cell)) support_.push_back(cell);
  }

  // Number of unit-count vectors the exhaustive sweep would visit:
  // compositions of `resolution` into |support| parts.
  double exhaustive_size() const {
    double v = 1.0;
    int parts = static_cast<int>(support_.size());
    for (int i = 1; i < parts; ++i) v = v * (resolution_ + i) / i;
    return v;
  }

  void sweep(Best& best) {
    std::array<int, kCells> units{};
    descend(0, resolution_, units, ExactSums{}, best);
  }

  void sample(Best& best, std::uint64_t seed, int count) {
    RandomStream rng(seed, /*channel=*/2, /*entity=*/0, /*trial=*/0);
    std::array<int, kCells> units{};
    for (int i = 0; i < count; ++i) {
      units.fill(0);
      for (int u = 0; u < resolution_; ++u)
        units[support_[rng.next_below(support_.size())]] += 1;
      evaluate(units, best);
    }
  }

  // Greedy descent: repeatedly move one unit to the cell that deepens the
  // slack most, starting from random compositions.
  void hill_climb(Best& best, std::uint64_t seed, int restarts) {
    for (int r = 0; r < restarts; ++r) {
      RandomStream rng(seed, /*channel=*/3, /*entity=*/static_cast<std::uint64_t>(r),
                       /*trial=*/0);
      std::array<int, kCells> units{};
      for (int u = 0; u < resolution_; ++u)
        units[support_[rng.next_below(support_.size())]] += 1;
      bool improved = true;
      while (improved) {
        improved = false;
        std::array<int, kCells> best_move = units;
        std::optional<Rat> best_slack = slack_of(units);  // undefined starts accept any move
        for (int from : support_) {
          if (units[from] == 0) continue;
          for (int to : support_) {
            if (to == from) continue;
            std::array<int, kCells> cand = units;
            cand[from] -= 1;
            cand[to] += 1;
            std::optional<Rat> s = slack_of(cand);
            if (!s) continue;
            if (!best_slack || *s < *best_slack) {
              best_move = cand;
              best_slack = s;
              improved = true;
            }
          }
        }
        if (improved) units = best_move;
      }
      evaluate(units, best);
    }
  }

  std::optional<Rat> slack_of(const std::array<int, kCells>& units) const {
    ExactSums s;
    for (int cell = 0; cell < kCells; ++cell) {
      int u = units[cell];
      if (u == 0) continue;
      const CellFlags& f = flags_[cell];
      if (f.den1) s.d1 += u;
      if (f.num1) s.n1 += u;
      if (f.den2) s.d2 += u;
      if (f.num2) s.n2 += u;
      if (f.den3) s.d3 += u;
      if (f.num3) s.n3 += u;
    }
    return exact_slack(s);
  }

 private:
  void evaluate(const std::array<int, kCells>& units, Best& best) const {
    std::optional<Rat> s = slack_of(units);
    if (s && *s < kViolationBound) consider(best, *s, units);
  }

  void descend(std::size_t idx, int remaining, std::array<int, kCells>& units, ExactSums sums,
               Best& best) {
    int cell = support_[idx];
    const CellFlags& f = flags_[cell];
    if (idx + 1 == support_.size()) {
      units[cell] = remaining;
      if (f.den1) sums.d1 += remaining;
      if (f.num1) sums.n1 += remaining;
      if (f.den2) sums.d2 += remaining;
      if (f.num2) sums.n2 += remaining;
      if (f.den3) sums.d3 += remaining;
      if (f.num3) sums.n3 += remaining;
      std::optional<Rat> s = exact_slack(sums);
      if (s && *s < kViolationBound) consider(best, *s, units);
      units[cell] = 0;
      return;
    }
    for (int u = 0; u <= remaining; ++u) {
      units[cell] = u;
      ExactSums next = sums;
      if (f.den1) next.d1 += u;
      if (f.num1) next.n1 += u;
      if (f.den2) next.d2 += u;
      if (f.num2) next.n2 += u;
      if (f.den3) next.d3 += u;
      if (f.num3) next.n3 += u;
      descend(idx + 1, remaining - u, units, next, best);
    }
    units[cell] = 0;
  }

  int resolution_;
  std::array<CellFlags, kCells> flags_;
  std::vector<int> support_;
};

constexpr double kExhaustiveLimit = 6e6;  // largest sweep attempted directly
constexpr int kSampleCount = 500000;
constexpr int kRestarts = 32;

}  // namespace

std::optional<WeViolation> search_we_violation(int resolution, const SearchOptions& opts) {
  if (resolution < 2)
    throw std::invalid_argument("search_we_violation: resolution must be at least 2");

  GridSearch search(resolution, opts.u_free_only);
  Best best;
  if (search.exhaustive_size() <= kExhaustiveLimit)
    search.sweep(best);
  else
    search.sample(best, opts.seed, kSampleCount);
  if (!best.found) search.hill_climb(best, opts.seed, kRestarts);
  if (!best.found) return std::nullopt;

  std::vector<double> weights(kCells);
  for (int cell = 0; cell < kCells; ++cell)
    weights[cell] = static_cast<double>(best.units[cell]) / static_cast<double>(resolution);
  WeViolation v{TfuJoint(3, std::move(weights)),
                static_cast<double>(best.slack.numerator()) /
                    static_cast<double>(best.slack.denominator()),
                std::vector<int>(best.units.begin(), best.units.end()), resolution};
  return v;
}

}  // namespace ontoprob
