#include "fpq/type_a.hpp"

#include <algorithm>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"

namespace fpq::type_a {

namespace {

Quiver build_quiver(std::size_t n, const std::vector<Dir>& dirs) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const std::string id = "a" + std::to_string(k + 1);
    if (dirs[k] == Dir::Right)
      arrows.push_back({id, k, k + 1});
    else
      arrows.push_back({id, k + 1, k});
  }
  return Quiver(n, std::move(arrows));
}

}  // namespace

OrientationWord::OrientationWord(std::size_t n, std::vector<Dir> dirs) : n_(n), dirs_(std::move(dirs)) {
  if (n_ == 0 || dirs_.size() + 1 != n_)
    throw Error(ErrorCode::LengthMismatch, "orientation word of A_n needs n-1 letters");
  quiver_ = share(build_quiver(n_, dirs_));
}

OrientationWord OrientationWord::parse(const std::string& word) {
  std::vector<Dir> dirs;
  for (char ch : word) {
    if (ch == '>')
      dirs.push_back(Dir::Right);
    else if (ch == '<')
      dirs.push_back(Dir::Left);
    else
      throw Error(ErrorCode::ParseError, "orientation word may only contain '>' and '<': '" + word + "'");
  }
  const std::size_t n = dirs.size() + 1;
  return OrientationWord(n, std::move(dirs));
}

std::vector<OrientationWord> OrientationWord::all(std::size_t n) {
  std::vector<OrientationWord> out;
  const std::size_t letters = n - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << letters); ++mask) {
    std::vector<Dir> dirs(letters);
    // Most significant letter first so the list is sorted by word string.
    for (std::size_t k = 0; k < letters; ++k)
      dirs[k] = (mask >> (letters - 1 - k)) & 1 ? Dir::Right : Dir::Left;
    out.emplace_back(n, std::move(dirs));
  }
  return out;
}

std::string OrientationWord::str() const {
  std::string s;
  for (Dir d : dirs_) s += d == Dir::Right ? '>' : '<';
  return s;
}

OrientationWord OrientationWord::reversed() const {
  std::vector<Dir> flipped;
  for (Dir d : dirs_) flipped.push_back(d == Dir::Right ? Dir::Left : Dir::Right);
  return OrientationWord(n_, std::move(flipped));
}

std::string label(const Interval& v) { return "M{" + std::to_string(v.i) + "," + std::to_string(v.j) + "}"; }

std::string kind_name(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::Sink: return "sink";
    case IntervalKind::Source: return "source";
    case IntervalKind::Flow: return "flow";
  }
  return "?";
}

void validate_interval(const OrientationWord& w, const Interval& v) {
  if (v.i < 1 || v.i > v.j || v.j > w.n())
    throw Error(ErrorCode::BadInterval, "interval " + label(v) + " outside 1.." + std::to_string(w.n()));
}

Representation interval_rep(const OrientationWord& w, const Interval& v) {
  validate_interval(w, v);
  std::vector<bool> support(w.n(), false);
  for (std::size_t s = v.i; s <= v.j; ++s) support[s - 1] = true;
  return thin_representation(w.quiver(), support);
}

std::vector<Interval> all_indecomposables(const OrientationWord& w) {
  std::vector<Interval> out;
  for (std::size_t i = 1; i <= w.n(); ++i)
    for (std::size_t j = i; j <= w.n(); ++j) out.push_back({i, j});
  return out;
}

std::vector<IntervalKind> satisfied_kinds(const OrientationWord& w, const Interval& v) {
  validate_interval(w, v);
  const auto& d = w.dirs();
  // alpha_{i-1} is dirs[i-2]; alpha_j is dirs[j-1].
  const bool left_open = v.i == 1;
  const bool right_open = v.j == w.n();
  const bool left_in = left_open || d[v.i - 2] == Dir::Right;
  const bool left_out = left_open || d[v.i - 2] == Dir::Left;
  const bool right_in = right_open || d[v.j - 1] == Dir::Left;
  const bool right_out = right_open || d[v.j - 1] == Dir::Right;
  std::vector<IntervalKind> kinds;
  if (left_in && right_in) kinds.push_back(IntervalKind::Sink);
  if (left_out && right_out) kinds.push_back(IntervalKind::Source);
  if (!left_open && !right_open && d[v.i - 2] == d[v.j - 1]) kinds.push_back(IntervalKind::Flow);
  return kinds;
}

IntervalKind classify(const OrientationWord& w, const Interval& v) { return satisfied_kinds(w, v).front(); }

std::size_t closed_form_fpd(const OrientationWord& w, const Interval& v, int shift, IntervalKind kind) {
  validate_interval(w, v);
  if (shift != 0 && shift != 1) return 0;
  const std::size_t n = w.n();
  switch (kind) {
    case IntervalKind::Sink: return shift == 0 ? 1 : std::min(v.i - 1, n - v.j);
    case IntervalKind::Source: return shift == 0 ? std::min(v.i, n - v.j + 1) : 0;
    case IntervalKind::Flow: return shift == 0 ? 1 : 0;
  }
  return 0;
}

std::size_t closed_form_fpd(const OrientationWord& w, const Interval& v, int shift) {
  return closed_form_fpd(w, v, shift, classify(w, v));
}

std::string succ_name(SuccOrder s) {
  switch (s) {
    case SuccOrder::V1BeatsV2: return "v1>v2";
    case SuccOrder::V2BeatsV1: return "v2>v1";
    case SuccOrder::BrickPair: return "brick-pair";
    case SuccOrder::Equal: return "equal";
  }
  return "?";
}

SuccOrder succ_order(const OrientationWord& w, const Interval& v1, const Interval& v2) {
  validate_interval(w, v1);
  validate_interval(w, v2);
  if (v1 == v2) return SuccOrder::Equal;
  const auto m1 = interval_rep(w, v1);
  const auto m2 = interval_rep(w, v2);
  const std::size_t h12 = hom_dim(m1, m2);
  const std::size_t h21 = hom_dim(m2, m1);
  if (h12 == 0 && h21 == 0) return SuccOrder::BrickPair;
  if (h12 == 1 && h21 == 0) return SuccOrder::V1BeatsV2;
  if (h21 == 1 && h12 == 0) return SuccOrder::V2BeatsV1;
  throw Error(ErrorCode::BadInterval, "intervals " + label(v1) + ", " + label(v2) + " are not comparable");
}

}  // namespace fpq::type_a
