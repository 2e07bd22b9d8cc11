#include "covtop/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "covtop/error.hpp"

namespace covtop {

Word free_reduce(std::span<const int> w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(std::span<const int> w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(std::span<const int> a, std::span<const int> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word conjugate(std::span<const int> w, std::span<const int> by) {
  return concat(concat(inverse(by), w), by);
}

Word commutator(std::span<const int> a, std::span<const int> b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word cyclic_reduce(std::span<const int> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word canonical_rotation(std::span<const int> w) {
  Word r = cyclic_reduce(w);
  if (r.size() < 2) return r;
  Word best = r;
  Word rotated = r;
  for (std::size_t i = 1; i < r.size(); ++i) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

std::vector<long long> exponent_sums(std::span<const int> w, int rank) {
  std::vector<long long> sums(rank, 0);
  for (int x : w) sums[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return sums;
}

std::string to_string(std::span<const int> w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    const auto index = static_cast<std::size_t>(std::abs(x) - 1);
    out += index < names.size() ? names[index] : "g" + std::to_string(index + 1);
    if (x < 0) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::string symbol = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      symbol = token.substr(0, caret);
      const std::string exponent = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), power);
      if (ec != std::errc() || ptr != exponent.data() + exponent.size()) {
        throw Error(ErrorKind::parse, "bad exponent in '" + token + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), symbol);
    if (it == names.end()) throw Error(ErrorKind::parse, "unknown generator '" + symbol + "'");
    const int g = static_cast<int>(it - names.begin()) + 1;
    for (long k = 0; k < std::labs(power); ++k) out.push_back(power > 0 ? g : -g);
  }
  return free_reduce(out);
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.relators[i], p.generators);
  }
  out += ">";
  return out;
}

}  // namespace covtop
