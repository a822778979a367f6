#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sgs/errors.hpp"
#include "sgs/graph.hpp"

namespace sgs {

// Text:   "n <N> [weighted]" then one "u v [w]" per line; '#' starts a comment.
// Binary: "SGS1", u32 n, u8 flags (bit 0 = weighted), then records of
//         u32 u, u32 v [, u64 w]. All integers little-endian.

inline constexpr std::array<char, 4> kBinaryMagic{'S', 'G', 'S', '1'};

enum class StreamFormat { Text, Binary };

struct StreamHeader {
  std::uint32_t n = 0;
  bool weighted = false;

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

/// One edge as read. `position` is the text line or binary record number.
struct StreamRecord {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 0;
  std::uint64_t position = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

/// Parses "123" or, with decimals > 0, "12.5" scaled by 10^decimals.
inline bool parse_weight(std::string_view s, unsigned decimals, Weight& out) {
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (dot != std::string_view::npos && (decimals == 0 || frac.size() > decimals || frac.empty())) {
    return false;
  }
  Weight w = 0;
  if (!parse_int(whole, w)) return false;
  for (unsigned i = 0; i < decimals; ++i) {
    Weight digit = 0;
    if (i < frac.size()) {
      if (frac[i] < '0' || frac[i] > '9') return false;
      digit = static_cast<Weight>(frac[i] - '0');
    }
    if (w > (std::numeric_limits<Weight>::max() - digit) / 10) return false;
    w = w * 10 + digit;
  }
  out = w;
  return true;
}

inline std::uint32_t load_u32(const unsigned char* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 |
         std::uint32_t{p[3]} << 24;
}

inline std::uint64_t load_u64(const unsigned char* p) {
  return std::uint64_t{load_u32(p)} | std::uint64_t{load_u32(p + 4)} << 32;
}

inline void store_u32(std::ostream& out, std::uint32_t x) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void store_u64(std::ostream& out, std::uint64_t x) {
  store_u32(out, static_cast<std::uint32_t>(x));
  store_u32(out, static_cast<std::uint32_t>(x >> 32));
}

}  // namespace detail

/// Sequential reader; the format is detected from the first four bytes.
/// Endpoints are checked against n; loops are passed through.
class StreamReader {
 public:
  explicit StreamReader(std::istream& in, unsigned weight_decimals = 0)
      : in_(in), decimals_(weight_decimals) {
    std::array<char, 4> magic{};
    std::size_t got = 0;
    while (got < magic.size()) {
      int c = in_.peek();
      if (c == std::char_traits<char>::eof()) break;
      if (static_cast<char>(c) != kBinaryMagic[got]) break;
      magic[got++] = static_cast<char>(in_.get());
    }
    if (got == magic.size()) {
      format_ = StreamFormat::Binary;
      read_binary_header();
    } else {
      pending_ = std::string(magic.data(), got);
      read_text_header();
    }
  }

  const StreamHeader& header() const noexcept { return header_; }
  StreamFormat format() const noexcept { return format_; }

  /// Reads the next edge; false at end of stream.
  bool next(StreamRecord& rec) {
    return format_ == StreamFormat::Binary ? next_binary(rec) : next_text(rec);
  }

 private:
  bool next_line(std::string& line) {
    if (!std::getline(in_, line)) {
      if (pending_.empty()) return false;
      line.clear();
    }
    if (!pending_.empty()) {
      line = pending_ + line;
      pending_.clear();
    }
    ++line_;
    return true;
  }

  static std::string_view content(const std::string& line) {
    std::string_view s = line;
    auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    return detail::trim(s);
  }

  void read_text_header() {
    std::string line;
    while (next_line(line)) {
      auto s = content(line);
      if (s.empty()) continue;
      auto tok = detail::split(s);
      std::uint32_t n = 0;
      bool ok = tok.size() >= 2 && tok.size() <= 3 && tok[0] == "n" && detail::parse_int(tok[1], n);
      if (ok && tok.size() == 3) ok = tok[2] == "weighted";
      if (!ok) throw FormatError(line_, "expected header 'n <N> [weighted]'");
      if (n == 0) throw FormatError(line_, "header needs n >= 1");
      header_ = {n, tok.size() == 3};
      return;
    }
    throw FormatError(0, "empty stream: missing header");
  }

  bool next_text(StreamRecord& rec) {
    std::string line;
    while (next_line(line)) {
      auto s = content(line);
      if (s.empty()) continue;
      auto tok = detail::split(s);
      std::size_t want = header_.weighted ? 3 : 2;
      if (tok.size() != want) {
        if (tok.size() == 3 && !header_.weighted) throw FormatError(line_, "weight given but header is unweighted");
        if (tok.size() == 2 && header_.weighted) throw FormatError(line_, "missing weight in weighted stream");
        throw FormatError(line_, "expected 'u v" + std::string(header_.weighted ? " w'" : "'"));
      }
      if (!detail::parse_int(tok[0], rec.u) || !detail::parse_int(tok[1], rec.v)) {
        throw FormatError(line_, "vertex ids must be nonnegative integers");
      }
      rec.weight = 0;
      if (header_.weighted && !detail::parse_weight(tok[2], decimals_, rec.weight)) {
        throw FormatError(line_, "bad weight '" + std::string(tok[2]) + "'");
      }
      rec.position = line_;
      check_range(rec);
      return true;
    }
    return false;
  }

  void read_binary_header() {
    unsigned char b[5];
    if (!in_.read(reinterpret_cast<char*>(b), 5)) throw FormatError(0, "truncated binary header");
    if (b[4] & ~1u) throw FormatError(0, "unknown binary header flags");
    header_ = {detail::load_u32(b), (b[4] & 1u) != 0};
    if (header_.n == 0) throw FormatError(0, "header needs n >= 1");
  }

  bool next_binary(StreamRecord& rec) {
    unsigned char b[16];
    std::size_t size = header_.weighted ? 16 : 8;
    in_.read(reinterpret_cast<char*>(b), static_cast<std::streamsize>(size));
    auto got = static_cast<std::size_t>(in_.gcount());
    if (got == 0) return false;
    ++line_;
    if (got != size) throw FormatError(line_, "truncated record");
    rec.u = detail::load_u32(b);
    rec.v = detail::load_u32(b + 4);
    rec.weight = header_.weighted ? detail::load_u64(b + 8) : 0;
    rec.position = line_;
    check_range(rec);
    return true;
  }

  void check_range(const StreamRecord& rec) const {
    for (VertexId x : {rec.u, rec.v}) {
      if (x >= header_.n) {
        throw FormatError(line_, "vertex " + std::to_string(x) + " out of range for n=" +
                                     std::to_string(header_.n));
      }
    }
  }

  std::istream& in_;
  unsigned decimals_;
  StreamFormat format_ = StreamFormat::Text;
  StreamHeader header_;
  std::string pending_;
  std::uint64_t line_ = 0;
};

class StreamWriter {
 public:
  StreamWriter(std::ostream& out, StreamFormat format, StreamHeader header)
      : out_(out), format_(format), header_(header) {
    if (format_ == StreamFormat::Binary) {
      out_.write(kBinaryMagic.data(), kBinaryMagic.size());
      detail::store_u32(out_, header_.n);
      out_.put(static_cast<char>(header_.weighted ? 1 : 0));
    } else {
      out_ << "n " << header_.n << (header_.weighted ? " weighted" : "") << '\n';
    }
  }

  void write(VertexId u, VertexId v, Weight w = 0) {
    if (format_ == StreamFormat::Binary) {
      detail::store_u32(out_, u);
      detail::store_u32(out_, v);
      if (header_.weighted) detail::store_u64(out_, w);
    } else if (header_.weighted) {
      out_ << u << ' ' << v << ' ' << w << '\n';
    } else {
      out_ << u << ' ' << v << '\n';
    }
  }

  void write(const StreamRecord& rec) { write(rec.u, rec.v, rec.weight); }

 private:
  std::ostream& out_;
  StreamFormat format_;
  StreamHeader header_;
};

}  // namespace sgs
