#include "timecat/path.hpp"

#include "timecat/error.hpp"

namespace timecat {

Path::Path(std::string at, std::vector<Wire> wires) : at_(std::move(at)), wires_(std::move(wires)) {
  std::string cur = at_;
  for (const auto& w : wires_) {
    if (w.src != cur)
      throw Error(ErrorCode::kBoundaryMismatch,
                  "wire " + w.name + " starts at " + w.src + " but path is at " + cur);
    cur = w.tgt;
  }
}

Path Path::of(std::vector<Wire> wires) {
  if (wires.empty()) throw Error(ErrorCode::kInvalidArgument, "Path::of needs at least one wire");
  std::string at = wires.front().src;
  return Path(std::move(at), std::move(wires));
}

bool Path::all_of_kind(EdgeKind kind) const {
  for (const auto& w : wires_)
    if (w.kind != kind) return false;
  return true;
}

Path Path::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > wires_.size()) throw Error(ErrorCode::kInvalidArgument, "path slice out of range");
  std::string at = begin == 0 ? at_ : wires_[begin - 1].tgt;
  return Path(std::move(at), std::vector<Wire>(wires_.begin() + begin, wires_.begin() + begin + len));
}

Path Path::operator+(const Path& other) const {
  if (target() != other.source())
    throw Error(ErrorCode::kBoundaryMismatch,
                "cannot concatenate path ending at " + target() + " with path starting at " + other.source());
  std::vector<Wire> w = wires_;
  w.insert(w.end(), other.wires_.begin(), other.wires_.end());
  Path p;
  p.at_ = at_;
  p.wires_ = std::move(w);
  return p;
}

std::string Path::str() const {
  if (wires_.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < wires_.size(); ++i) {
    if (i) out += ",";
    out += wires_[i].name;
  }
  return out;
}

Wire vwire(const std::string& name, const std::string& src, const std::string& tgt) {
  return Wire{EdgeKind::kVertical, name, src, tgt};
}

Wire hwire(const std::string& name, const std::string& src, const std::string& tgt) {
  return Wire{EdgeKind::kHorizontal, name, src, tgt};
}

Path vpath(const std::vector<std::string>& names) {
  std::vector<Wire> w;
  w.reserve(names.size());
  for (const auto& n : names) w.push_back(vwire(n));
  return Path("*", std::move(w));
}

Path time_path(std::size_t n) { return Path("*", std::vector<Wire>(n, hwire("1"))); }

}  // namespace timecat
