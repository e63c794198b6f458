#include "scsk/instance.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace scsk {

Instance::Instance(std::vector<Sequence> strings, long long k) : strings_(std::move(strings)) {
  if (strings_.empty()) throw InputError("no strings");
  if (k < 0 || k > std::numeric_limits<int>::max()) throw InputError("invalid budget");
  k_ = static_cast<int>(k);
  bool have_symbol = false;
  for (const auto& s : strings_) {
    c_ = std::max(c_, static_cast<int>(s.size()));
    total_len_ += s.size();
    for (Symbol ch : s) {
      if (!have_symbol || ch < fill_) fill_ = ch;
      have_symbol = true;
    }
  }
}

Instance Instance::reversed() const {
  std::vector<Sequence> rev;
  rev.reserve(strings_.size());
  for (const auto& s : strings_) rev.emplace_back(s.rbegin(), s.rend());
  return Instance(std::move(rev), k_);
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    switch (v.kind) {
      case ViolationKind::substring:
        out << "substring: string " << v.a << " occurs in string " << v.b << '\n';
        break;
      case ViolationKind::duplicate:
        out << "duplicate: strings " << v.a << " and " << v.b << " are equal\n";
        break;
      case ViolationKind::empty:
        out << "empty: string " << v.a << " is empty\n";
        break;
    }
  }
  return out.str();
}

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  const auto& s = instance.strings();
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a].empty()) report.violations.push_back({ViolationKind::empty, a, a});
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a].empty()) continue;
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b || s[b].empty()) continue;
      if (s[b].find(s[a]) != Sequence::npos) report.violations.push_back({ViolationKind::substring, a, b});
      if (a < b && s[a] == s[b]) report.violations.push_back({ViolationKind::duplicate, a, b});
    }
  }
  return report;
}

void require_valid(const Instance& instance) {
  auto report = validate(instance);
  if (!report.ok()) throw ValidationError("invalid instance:\n" + report.describe());
}

void require_size(const Instance& instance, std::size_t max_strings) {
  if (instance.n() > max_strings) {
    throw InputError("too many strings: " + std::to_string(instance.n()) + " > limit " +
                     std::to_string(max_strings));
  }
}

Instance parse_instance(std::istream& in, long long k) {
  if (k < 0) throw InputError("invalid budget");
  std::vector<Sequence> strings;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    strings.push_back(decode_utf8(line));
  }
  return Instance(std::move(strings), k);
}

Instance parse_instance(std::string_view text, long long k) {
  std::istringstream in{std::string(text)};
  return parse_instance(in, k);
}

std::string serialize(const Instance& instance) {
  std::string out;
  for (const auto& s : instance.strings()) {
    out += encode_utf8(s);
    out += '\n';
  }
  return out;
}

Sequence decode_utf8(std::string_view text) {
  Sequence out;
  out.reserve(text.size());
  std::size_t i = 0;
  auto fail = [] { throw InputError("invalid utf-8"); };
  while (i < text.size()) {
    auto b0 = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      fail();
    }
    if (i + extra >= text.size()) fail();
    for (int e = 1; e <= extra; ++e) {
      auto b = static_cast<unsigned char>(text[i + e]);
      if ((b & 0xC0) != 0x80) fail();
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail();
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

std::string encode_utf8(const Sequence& seq) {
  std::string out;
  out.reserve(seq.size());
  for (char32_t cp : seq) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

}  // namespace scsk
