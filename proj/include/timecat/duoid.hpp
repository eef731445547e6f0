#pragma once

// Grade algebra: posets carrying two monotone monoid structures where the
// sequential one laxly distributes over the parallel one. The default
// instance is (N, +, 0, max, 0) over arbitrary-precision naturals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace timecat {

/// A duration in time units. Never negative, never wraps.
class Grade {
 public:
  using Value = boost::multiprecision::cpp_int;

  Grade() = default;
  Grade(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Grade(Value v);

  /// Parses a decimal natural; throws Error(kInvalidArgument) otherwise.
  static Grade parse(const std::string& text);

  const Value& value() const { return value_; }
  std::string str() const { return value_.str(); }

  /// Narrowing for layout code; throws if the value does not fit.
  std::int64_t to_int() const;

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend bool operator<(const Grade& a, const Grade& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Grade& a, const Grade& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Grade& a, const Grade& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Grade& a, const Grade& b) { return a.value_ >= b.value_; }
  friend bool operator!=(const Grade& a, const Grade& b) { return a.value_ != b.value_; }

  /// Truncated subtraction; the caller guarantees b <= a when it matters.
  friend Grade monus(const Grade& a, const Grade& b);

 private:
  Value value_ = 0;
};

Grade monus(const Grade& a, const Grade& b);

std::ostream& operator<<(std::ostream& os, const Grade& g);
std::string to_string(const Grade& g);

// Default max-plus instance.
Grade seq_grade(const Grade& a, const Grade& b);  // a + b
Grade par_grade(const Grade& a, const Grade& b);  // max(a, b)
bool grade_leq(const Grade& a, const Grade& b);

inline const Grade kZero{};    // unit of seq_grade
inline const Grade kBottom{};  // unit of par_grade; normal, so equal to kZero

/// A duoid over carrier T given by its operations. `grid` is searched
/// exhaustively by the law checker; `sample` draws random elements.
template <class T>
struct DuoidSpec {
  std::string name;
  std::function<bool(const T&, const T&)> leq;
  std::function<T(const T&, const T&)> seq;
  T zero;
  std::function<T(const T&, const T&)> par;
  T bottom;
  bool normal = false;
  bool commutative = false;
  std::vector<T> grid;
  std::function<T(std::mt19937_64&)> sample;
};

/// (N, +, 0, max, 0) with grid {0..grid_max} and samples in [0, sample_max].
DuoidSpec<Grade> max_plus_spec(std::uint64_t grid_max = 6, std::uint64_t sample_max = 1000);

template <class T>
struct LawViolation {
  std::string law;
  std::vector<T> witness;
};

template <class T>
struct LawReport {
  std::vector<LawViolation<T>> violations;
  std::size_t tuples_checked = 0;

  bool ok() const { return violations.empty(); }
  const LawViolation<T>* find(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law) return &v;
    return nullptr;
  }
};

namespace detail {

template <class T>
struct LawSet {
  std::string name;
  std::size_t arity;
  std::function<bool(const DuoidSpec<T>&, const std::vector<T>&)> holds;
};

template <class T>
std::vector<LawSet<T>> duoid_laws() {
  using S = DuoidSpec<T>;
  using V = std::vector<T>;
  auto eq = [](const S& s, const T& a, const T& b) { return s.leq(a, b) && s.leq(b, a); };
  std::vector<LawSet<T>> laws;
  laws.push_back({"leq-reflexive", 1, [](const S& s, const V& x) { return s.leq(x[0], x[0]); }});
  laws.push_back({"leq-transitive", 3, [](const S& s, const V& x) {
                    return !(s.leq(x[0], x[1]) && s.leq(x[1], x[2])) || s.leq(x[0], x[2]);
                  }});
  laws.push_back({"leq-antisymmetric", 2, [](const S& s, const V& x) {
                    return !(s.leq(x[0], x[1]) && s.leq(x[1], x[0])) || x[0] == x[1];
                  }});
  laws.push_back({"seq-associative", 3, [eq](const S& s, const V& x) {
                    return eq(s, s.seq(x[0], s.seq(x[1], x[2])), s.seq(s.seq(x[0], x[1]), x[2]));
                  }});
  laws.push_back({"par-associative", 3, [eq](const S& s, const V& x) {
                    return eq(s, s.par(x[0], s.par(x[1], x[2])), s.par(s.par(x[0], x[1]), x[2]));
                  }});
  laws.push_back({"seq-unit", 1, [eq](const S& s, const V& x) {
                    return eq(s, s.seq(s.zero, x[0]), x[0]) && eq(s, s.seq(x[0], s.zero), x[0]);
                  }});
  laws.push_back({"par-unit", 1, [eq](const S& s, const V& x) {
                    return eq(s, s.par(s.bottom, x[0]), x[0]) && eq(s, s.par(x[0], s.bottom), x[0]);
                  }});
  laws.push_back({"seq-monotone", 4, [](const S& s, const V& x) {
                    return !(s.leq(x[0], x[1]) && s.leq(x[2], x[3])) ||
                           s.leq(s.seq(x[0], x[2]), s.seq(x[1], x[3]));
                  }});
  laws.push_back({"par-monotone", 4, [](const S& s, const V& x) {
                    return !(s.leq(x[0], x[1]) && s.leq(x[2], x[3])) ||
                           s.leq(s.par(x[0], x[2]), s.par(x[1], x[3]));
                  }});
  // (a ⊕ b) ↑ (c ⊕ d) <= (a ↑ c) ⊕ (b ↑ d)
  laws.push_back({"lax-distributivity", 4, [](const S& s, const V& x) {
                    return s.leq(s.par(s.seq(x[0], x[1]), s.seq(x[2], x[3])),
                                 s.seq(s.par(x[0], x[2]), s.par(x[1], x[3])));
                  }});
  laws.push_back({"zero-par-zero", 0, [](const S& s, const V&) {
                    return s.leq(s.par(s.zero, s.zero), s.zero);
                  }});
  laws.push_back({"bottom-seq-bottom", 0, [](const S& s, const V&) {
                    return s.leq(s.bottom, s.seq(s.bottom, s.bottom));
                  }});
  laws.push_back({"bottom-below-zero", 0, [](const S& s, const V&) { return s.leq(s.bottom, s.zero); }});
  laws.push_back({"normal-flag", 0, [eq](const S& s, const V&) {
                    return !s.normal || eq(s, s.bottom, s.zero);
                  }});
  laws.push_back({"commutative-flag", 2, [eq](const S& s, const V& x) {
                    return !s.commutative || (eq(s, s.seq(x[0], x[1]), s.seq(x[1], x[0])) &&
                                              eq(s, s.par(x[0], x[1]), s.par(x[1], x[0])));
                  }});
  return laws;
}

}  // namespace detail

/// Checks every duoid law, first exhaustively over spec.grid (so the first
/// witness found per law is the lexicographically smallest grid tuple), then
/// on `sample_count` seeded random tuples. Deterministic for a fixed seed.
template <class T>
LawReport<T> check_duoid_laws(const DuoidSpec<T>& spec, std::size_t sample_count, std::uint64_t seed) {
  LawReport<T> report;
  std::mt19937_64 rng(seed);
  for (const auto& law : detail::duoid_laws<T>()) {
    bool found = false;
    std::vector<T> witness;
    // Exhaustive pass: odometer over grid^arity in lexicographic order.
    const std::size_t g = spec.grid.size();
    if (law.arity == 0) {
      ++report.tuples_checked;
      found = !law.holds(spec, {});
    } else if (g > 0) {
      std::vector<std::size_t> idx(law.arity, 0);
      std::vector<T> tuple(law.arity);
      bool more = true;
      while (more && !found) {
        for (std::size_t i = 0; i < law.arity; ++i) tuple[i] = spec.grid[idx[i]];
        ++report.tuples_checked;
        if (!law.holds(spec, tuple)) {
          found = true;
          witness = tuple;
        }
        more = false;
        for (std::size_t pos = law.arity; pos-- > 0;) {
          if (++idx[pos] < g) { more = true; break; }
          idx[pos] = 0;
        }
      }
    }
    if (!found && law.arity > 0 && spec.sample) {
      std::vector<T> tuple(law.arity);
      for (std::size_t n = 0; n < sample_count; ++n) {
        for (auto& t : tuple) t = spec.sample(rng);
        ++report.tuples_checked;
        if (!law.holds(spec, tuple) && (!found || tuple < witness)) {
          found = true;
          witness = tuple;
        }
      }
    }
    if (found) report.violations.push_back({law.name, witness});
  }
  return report;
}

}  // namespace timecat
