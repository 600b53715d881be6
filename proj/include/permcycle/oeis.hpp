#pragma once

// OEIS b-files: one "index value" pair per line, '#' starts a comment.
// Comparison allows the two index conventions to differ by a small shift.

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcycle/multipoly.hpp"

namespace permcycle {

struct BFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BFile {
  std::map<long long, BigInt> values;
};

namespace detail {

inline bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace detail

inline BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string index, value, extra;
    if (!(fields >> index)) continue;
    if (!(fields >> value) || (fields >> extra) || !detail::is_integer_token(index) ||
        !detail::is_integer_token(value))
      throw BFileError("malformed b-file line " + std::to_string(line_no) + ": " + line);
    out.values[std::stoll(index)] = BigInt(value[0] == '+' ? value.substr(1) : value);
  }
  if (out.values.empty()) throw BFileError("b-file has no entries");
  return out;
}

inline BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot open " + path);
  return parse_bfile(in);
}

/// Smallest shift s in [min_shift, max_shift] with file[n + s] == local[i]
/// for every i, where n = first_n + i.
template <class Int>
std::optional<int> matching_shift(const BFile& file, const std::vector<Int>& local, int first_n,
                                  int min_shift = -3, int max_shift = 3) {
  for (int s = min_shift; s <= max_shift; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < local.size() && ok; ++i) {
      auto it = file.values.find(static_cast<long long>(first_n) + static_cast<long long>(i) + s);
      ok = it != file.values.end() && it->second == BigInt(local[i]);
    }
    if (ok) return s;
  }
  return std::nullopt;
}

}  // namespace permcycle
