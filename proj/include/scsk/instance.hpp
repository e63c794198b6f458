#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "scsk/error.hpp"

namespace scsk {

using Symbol = char32_t;
using Sequence = std::u32string;

/// Default upper bound on the number of strings accepted by the solver.
/// The subset tables hold 2^n * n entries each.
inline constexpr std::size_t kDefaultMaxStrings = 20;

/// A set of strings plus the mismatch budget of the one string allowed to
/// disagree with the superstring. Immutable after construction.
class Instance {
 public:
  /// Throws InputError("no strings") when `strings` is empty and
  /// InputError("invalid budget") when k < 0. Substring checks are left to
  /// validate() so that a report can name every offending pair.
  Instance(std::vector<Sequence> strings, long long k);

  [[nodiscard]] const std::vector<Sequence>& strings() const noexcept { return strings_; }
  [[nodiscard]] const Sequence& operator[](std::size_t i) const { return strings_[i]; }
  [[nodiscard]] int length(std::size_t i) const { return static_cast<int>(strings_[i].size()); }

  [[nodiscard]] int k() const noexcept { return k_; }
  [[nodiscard]] std::size_t n() const noexcept { return strings_.size(); }
  /// Length of the longest string.
  [[nodiscard]] int c() const noexcept { return c_; }
  [[nodiscard]] std::size_t total_len() const noexcept { return total_len_; }

  /// Smallest code point occurring in any string; used for positions no string covers.
  [[nodiscard]] Symbol fill_symbol() const noexcept { return fill_; }

  [[nodiscard]] Instance with_budget(long long k) const { return Instance(strings_, k); }
  /// Same budget, every string reversed.
  [[nodiscard]] Instance reversed() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Sequence> strings_;
  int k_ = 0;
  int c_ = 0;
  std::size_t total_len_ = 0;
  Symbol fill_ = 0;
};

enum class ViolationKind { substring, duplicate, empty };

struct Violation {
  ViolationKind kind;
  std::size_t a;  // for substring: strings[a] occurs inside strings[b]
  std::size_t b;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  /// One line per violation, e.g. "substring: 0 in 1".
  [[nodiscard]] std::string describe() const;
};

/// Reports every ordered pair (a, b), a != b, with strings[a] a substring of
/// strings[b]. Equal strings show up as two substring entries plus one
/// duplicate entry. Empty strings are reported once each and skipped otherwise.
ValidationReport validate(const Instance& instance);

/// Throws ValidationError carrying the report text if the instance is invalid.
void require_valid(const Instance& instance);

/// Throws InputError when the instance has more than `max_strings` strings.
void require_size(const Instance& instance, std::size_t max_strings = kDefaultMaxStrings);

/// One string per non-empty line; lines starting with '#' are comments.
/// Trailing "\r" is stripped. Input must be UTF-8.
Instance parse_instance(std::istream& in, long long k);
Instance parse_instance(std::string_view text, long long k);

/// Inverse of parse_instance on valid instances (the budget is not part of the text).
std::string serialize(const Instance& instance);

// UTF-8 helpers. decode throws InputError on malformed input.
Sequence decode_utf8(std::string_view text);
std::string encode_utf8(const Sequence& seq);

}  // namespace scsk
