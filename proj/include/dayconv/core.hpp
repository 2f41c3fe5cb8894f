#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dayconv {

using ObjId = std::int32_t;
using MorId = std::int32_t;

inline constexpr MorId kNoMor = -1;
inline constexpr ObjId kNoObj = -1;

inline int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::uint64_t pair_key(std::int64_t a, std::int64_t b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Resource ceilings and API misuse are thrown; failed mathematical checks are
// reported through ValidationReport, never thrown.
struct ResourceCeilingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ClosureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string code;    // stable tag, e.g. "assoc" or "dangling-source"
  std::string detail;  // witnessing ids, human readable
};

struct ValidationReport {
  std::vector<Violation> structural;
  std::vector<Violation> axiom;

  bool ok() const { return structural.empty() && axiom.empty(); }

  void add_structural(std::string code, std::string detail) {
    structural.push_back({std::move(code), std::move(detail)});
  }
  void add_axiom(std::string code, std::string detail) {
    axiom.push_back({std::move(code), std::move(detail)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = "") {
    for (const auto& v : other.structural)
      structural.push_back({prefix.empty() ? v.code : prefix + "." + v.code, v.detail});
    for (const auto& v : other.axiom)
      axiom.push_back({prefix.empty() ? v.code : prefix + "." + v.code, v.detail});
  }

  std::string to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : structural) os << "[structural] " << v.code << ": " << v.detail << "\n";
    for (const auto& v : axiom) os << "[axiom] " << v.code << ": " << v.detail << "\n";
    return os.str();
  }
};

namespace detail {

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  // splitmix-style combine, stable across runs
  v += 0x9e3779b97f4a7c15ULL + h;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

template <class It>
std::uint64_t hash_range(It first, It last, std::uint64_t seed = 0xd1b54a32d192ed03ULL) {
  std::uint64_t h = seed;
  for (; first != last; ++first) h = hash_mix(h, static_cast<std::uint64_t>(*first));
  return h;
}

}  // namespace detail
}  // namespace dayconv
