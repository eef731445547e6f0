#include "timecat/duoid.hpp"

#include <ostream>
#include <limits>

#include "timecat/error.hpp"

namespace timecat {

Grade::Grade(Value v) : value_(std::move(v)) {
  if (value_ < 0) throw Error(ErrorCode::kInvalidArgument, "grade must be a natural number");
}

Grade Grade::parse(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::kInvalidArgument, "not a natural number: '" + text + "'");
  return Grade(Value(text));
}

std::int64_t Grade::to_int() const {
  if (value_ > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorCode::kInvalidArgument, "grade " + str() + " too large for layout");
  return static_cast<std::int64_t>(value_);
}

Grade monus(const Grade& a, const Grade& b) {
  if (a.value_ <= b.value_) return Grade{};
  return Grade(Grade::Value(a.value_ - b.value_));
}

std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.str(); }
std::string to_string(const Grade& g) { return g.str(); }

Grade seq_grade(const Grade& a, const Grade& b) { return Grade(Grade::Value(a.value() + b.value())); }
Grade par_grade(const Grade& a, const Grade& b) { return a < b ? b : a; }
bool grade_leq(const Grade& a, const Grade& b) { return a <= b; }

DuoidSpec<Grade> max_plus_spec(std::uint64_t grid_max, std::uint64_t sample_max) {
  DuoidSpec<Grade> spec;
  spec.name = "max-plus";
  spec.leq = grade_leq;
  spec.seq = seq_grade;
  spec.zero = kZero;
  spec.par = par_grade;
  spec.bottom = kBottom;
  spec.normal = true;
  spec.commutative = true;
  for (std::uint64_t i = 0; i <= grid_max; ++i) spec.grid.emplace_back(i);
  spec.sample = [sample_max](std::mt19937_64& rng) {
    return Grade(std::uniform_int_distribution<std::uint64_t>(0, sample_max)(rng));
  };
  return spec;
}

}  // namespace timecat
