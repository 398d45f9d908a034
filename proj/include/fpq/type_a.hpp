#pragma once

#include <string>
#include <vector>

#include "fpq/representation.hpp"

namespace fpq::type_a {

/// Direction of the arrow between vertices i and i+1.
enum class Dir { Right, Left };

/// Orientation of an A_n quiver: dirs[i] orients the arrow between vertices
/// i+1 and i+2 (1-based), Right meaning i+1 -> i+2.
class OrientationWord {
 public:
  OrientationWord(std::size_t n, std::vector<Dir> dirs);
  /// Parses a string over {'>', '<'} of length n-1, e.g. "><" for 1->2<-3.
  static OrientationWord parse(const std::string& word);
  /// All 2^(n-1) orientations, in the order of their word strings ('<' < '>').
  static std::vector<OrientationWord> all(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Dir>& dirs() const noexcept { return dirs_; }
  std::string str() const;
  /// Arrow k (0-based) is labeled "a<k+1>".
  const QuiverPtr& quiver() const noexcept { return quiver_; }
  /// Orientation with every arrow reversed; its quiver equals opposite(quiver()).
  OrientationWord reversed() const;

 private:
  std::size_t n_;
  std::vector<Dir> dirs_;
  QuiverPtr quiver_;
};

/// Interval [i, j], 1-based, 1 <= i <= j <= n.
struct Interval {
  std::size_t i = 1;
  std::size_t j = 1;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string label(const Interval& v);

enum class IntervalKind { Sink, Source, Flow };

std::string kind_name(IntervalKind kind);

/// Throws BadInterval unless 1 <= i <= j <= n.
void validate_interval(const OrientationWord& w, const Interval& v);

/// Thin module M{i,j}: k on [i, j], identity on arrows strictly inside.
Representation interval_rep(const OrientationWord& w, const Interval& v);

/// All n(n+1)/2 intervals, ordered by (i, j).
std::vector<Interval> all_indecomposables(const OrientationWord& w);

/// Every kind whose boundary condition holds (sink and source can both hold
/// when i = 1 and j = n).
std::vector<IntervalKind> satisfied_kinds(const OrientationWord& w, const Interval& v);

/// Resolves ties Sink > Source > Flow.
IntervalKind classify(const OrientationWord& w, const Interval& v);

/// Closed-form value for a chosen kind; shift outside {0, 1} gives 0.
std::size_t closed_form_fpd(const OrientationWord& w, const Interval& v, int shift, IntervalKind kind);
std::size_t closed_form_fpd(const OrientationWord& w, const Interval& v, int shift);

enum class SuccOrder { V1BeatsV2, V2BeatsV1, BrickPair, Equal };

std::string succ_name(SuccOrder s);

/// V1BeatsV2 when Hom(M_v1, M_v2) = k and Hom(M_v2, M_v1) = 0.
SuccOrder succ_order(const OrientationWord& w, const Interval& v1, const Interval& v2);

}  // namespace fpq::type_a
