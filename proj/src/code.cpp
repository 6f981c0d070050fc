#include "tracewise/code.hpp"

#include <algorithm>
#include <cctype>

namespace tracewise {
namespace {

std::string to_roman(int value) {
  static constexpr std::pair<int, std::string_view> kTable[] = {
      {1000, "m"}, {900, "cm"}, {500, "d"}, {400, "cd"}, {100, "c"}, {90, "xc"}, {50, "l"},
      {40, "xl"},  {10, "x"},   {9, "ix"},  {5, "v"},   {4, "iv"},  {1, "i"}};
  std::string out;
  for (const auto& [n, s] : kTable) {
    while (value >= n) {
      out += s;
      value -= n;
    }
  }
  return out;
}

bool all_of(std::string_view s, int (*pred)(int)) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [pred](char c) { return pred(static_cast<unsigned char>(c)) != 0; });
}

// Returns the ordering rank of `segment` at position `level`, or nullopt.
std::optional<int> segment_rank(std::string_view segment, std::size_t level) {
  switch (level) {
    case 0:
      if (segment == "SEL" || segment == "ITER") return 0;
      return std::nullopt;
    case 1: {
      if (!all_of(segment, ::isdigit) || segment.front() == '0' || segment.size() > 4)
        return std::nullopt;
      return std::stoi(std::string(segment));
    }
    case 2:
      if (segment.size() == 1 && std::islower(static_cast<unsigned char>(segment[0])))
        return segment[0] - 'a' + 1;
      return std::nullopt;
    case 3:
      if (!all_of(segment, ::islower)) return std::nullopt;
      return roman_value(segment);
    case 4:
      if (segment.size() == 1 && std::isupper(static_cast<unsigned char>(segment[0])))
        return segment[0] - 'A' + 1;
      return std::nullopt;
    case 5:
      if (!all_of(segment, ::isupper)) return std::nullopt;
      return roman_value(segment);
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<int> roman_value(std::string_view text) {
  if (text.empty() || text.size() > 8) return std::nullopt;
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto digit = [](char c) {
    switch (c) {
      case 'i': return 1;
      case 'v': return 5;
      case 'x': return 10;
      case 'l': return 50;
      case 'c': return 100;
      case 'd': return 500;
      case 'm': return 1000;
      default: return 0;
    }
  };
  int total = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    int v = digit(lower[i]);
    if (v == 0) return std::nullopt;
    int next = i + 1 < lower.size() ? digit(lower[i + 1]) : 0;
    total += v < next ? -v : v;
  }
  if (total <= 0 || to_roman(total) != lower) return std::nullopt;
  return total;
}

std::optional<MisconceptionCode> MisconceptionCode::try_parse(std::string_view text) {
  MisconceptionCode code;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view segment = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
    auto rank = segment_rank(segment, code.segments_.size());
    if (!rank) return std::nullopt;
    code.segments_.emplace_back(segment);
    code.ranks_.push_back(*rank);
    if (code.segments_.size() > kMaxDepth) return std::nullopt;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return code;
}

MisconceptionCode MisconceptionCode::parse(std::string_view text) {
  auto code = try_parse(text);
  if (!code) throw CodeError("malformed misconception code '" + std::string(text) + "'");
  return *std::move(code);
}

std::string MisconceptionCode::str() const {
  std::string out;
  for (const auto& s : segments_) {
    if (!out.empty()) out += '.';
    out += s;
  }
  return out;
}

bool MisconceptionCode::starts_with(const MisconceptionCode& prefix) const {
  if (prefix.depth() > depth()) return false;
  return std::equal(prefix.segments_.begin(), prefix.segments_.end(), segments_.begin());
}

std::optional<MisconceptionCode> MisconceptionCode::parent() const {
  if (segments_.size() <= 1) return std::nullopt;
  MisconceptionCode p = *this;
  p.segments_.pop_back();
  p.ranks_.pop_back();
  return p;
}

std::strong_ordering operator<=>(const MisconceptionCode& a, const MisconceptionCode& b) {
  std::size_t n = std::min(a.depth(), b.depth());
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      if (auto c = a.segments_[0] <=> b.segments_[0]; c != 0) return c;
    } else if (auto c = a.ranks_[i] <=> b.ranks_[i]; c != 0) {
      return c;
    }
  }
  return a.depth() <=> b.depth();
}

}  // namespace tracewise
