#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tracewise {

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hierarchical taxonomy code such as "ITER.3.b.ii.A".
///
/// The first segment names the control structure (SEL or ITER). Deeper
/// segments follow the list-label levels of the taxonomy: arabic numerals,
/// lowercase letters, lowercase roman numerals, uppercase letters and
/// uppercase roman numerals. Ordering compares segment by segment using the
/// numeric value of each label, so "ITER.3.b.iv" sorts before "ITER.3.b.v".
class MisconceptionCode {
 public:
  static constexpr std::size_t kMaxDepth = 6;

  MisconceptionCode() = default;

  /// Throws CodeError on malformed text.
  static MisconceptionCode parse(std::string_view text);
  static std::optional<MisconceptionCode> try_parse(std::string_view text);

  std::string str() const;
  std::span<const std::string> segments() const { return segments_; }
  std::size_t depth() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  /// True if `prefix` equals this code or is one of its ancestors.
  bool starts_with(const MisconceptionCode& prefix) const;
  /// True if `prefix` is a strict ancestor.
  bool has_proper_prefix(const MisconceptionCode& prefix) const {
    return prefix.depth() < depth() && starts_with(prefix);
  }
  std::optional<MisconceptionCode> parent() const;

  friend bool operator==(const MisconceptionCode& a, const MisconceptionCode& b) {
    return a.segments_ == b.segments_;
  }
  friend std::strong_ordering operator<=>(const MisconceptionCode& a,
                                          const MisconceptionCode& b);

 private:
  std::vector<std::string> segments_;
  std::vector<int> ranks_;  // numeric value per segment (root uses 0)
};

/// Value of a lowercase or uppercase roman numeral, or nullopt if not canonical.
std::optional<int> roman_value(std::string_view text);

}  // namespace tracewise
