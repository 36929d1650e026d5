#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <regex>
#include <string>

#include "hlink/bounds.hpp"
#include "hlink/errors.hpp"

namespace hlink {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string normalize(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

int parse_count(const std::string& digits) {
  if (digits.size() > 6) throw ParseError(0, "count too large: " + digits);
  const int l = std::stoi(digits);
  if (l < 1) throw ParseError(0, "count must be at least 1");
  return l;
}

double ceil_half(long long x) { return static_cast<double>((x + 1) / 2); }

double root(double x) { return std::sqrt(std::max(0.0, x)); }

BoundRange::Validity at_least(int min_n, int n) {
  return {min_n, n >= min_n, "N >= " + std::to_string(min_n)};
}

BoundRange::Validity large_enough() {
  return {std::nullopt, std::nullopt, "N sufficiently large (threshold not specified)"};
}

BoundRange exact(double v, std::string row) {
  BoundRange b;
  b.lower = b.upper = v;
  b.exact = true;
  b.row = std::move(row);
  return b;
}

BoundRange range(double lo, double hi, std::string row, bool lo_strict = false,
                 bool hi_strict = false) {
  BoundRange b;
  b.lower = lo;
  b.upper = hi;
  b.exact = lo == hi && !lo_strict && !hi_strict;
  b.lower_strict = lo_strict;
  b.upper_strict = hi_strict;
  b.row = std::move(row);
  return b;
}

std::optional<BoundRange> p4_row(int k, int n) {
  if (k <= 3) {
    auto b = exact(ceil_half(n + 1), "P4, k <= 3: delta = ceil((N+1)/2)");
    b.validity = at_least(14, n);
    return b;
  }
  if (k == 4) {
    auto b = range(std::sqrt(n + 1.0), std::sqrt(static_cast<double>(n)) + 5,
                   "P4, k = 4: sqrt(N+1) <= delta <= sqrt(N)+5");
    b.validity = large_enough();
    return b;
  }
  if (k == 5) {
    auto b = range(std::cbrt(static_cast<double>(n)) + 2.7, std::cbrt(static_cast<double>(n)) + 6,
                   "P4, k = 5: cbrt(N)+2.7 <= delta <= cbrt(N)+6");
    b.asymptotic_note =
        "upper bound improves to cbrt(N)+4.2+o(1) as N grows; the extremal chain also "
        "supports the form cbrt(N/4)+2.7 < delta < cbrt(N/4)+6";
    b.validity = large_enough();
    return b;
  }
  if (k == 6) {
    if (n >= 418) {
      auto b = exact(8, "P4, k = 6: delta = 8 for N >= 418");
      b.validity = at_least(418, n);
      return b;
    }
    auto b = range(6, 8, "P4, k = 6: 6 <= delta <= 8");
    b.asymptotic_note = "delta = 8 once N >= 418";
    return b;
  }
  return exact(k, "P4, k >= 7: delta = k");
}

std::optional<BoundRange> k3_row(int k, int n) {
  if (k < 2) return exact(static_cast<double>((n + 1) / 2), "K3, k < 2: delta = ceil(N/2)");
  if (k == 2) return exact(static_cast<double>((n + 2 + 2) / 3), "K3, k = 2: delta = ceil((N+2)/3)");
  return exact(k, "K3, k >= 3: delta = k");
}

std::optional<BoundRange> bipartite_row(int k, int l, int n) {
  const std::string name = "one-sided bipartite with " + std::to_string(l) + " edges";
  if (k < l) return exact(ceil_half(static_cast<long long>(n) + l - 2),
                          name + ", k < l: delta = ceil((N+l-2)/2)");
  return exact(k, name + ", k >= l: delta = k");
}

std::optional<BoundRange> lk2_row(int k, int l, int n) {
  if (l == 1) return bipartite_row(k, 1, n);
  const std::string name = std::to_string(l) + "K2";
  BoundRange b;
  if (k < 2 * l) {
    const int shift = l == 2 ? 1 : l == 3 ? 3 : 2 * l - 3;
    b = range(k, kInf, name + ", k < 2l: delta = ceil((N+" + std::to_string(shift) + ")/2)+o(1)");
    b.asymptotic_note = "delta = ceil((N+" + std::to_string(shift) + ")/2)+o(1) as N grows";
  } else {
    const int cap = l == 2 ? 6 : l == 3 ? 10 : 10 * l;
    const int floor_term = l == 2 ? 6 : l == 3 ? 8 : 2 * l + 2;
    b = range(k, std::max(cap, k),
              name + ", k >= 2l: max{" + std::to_string(floor_term) + "-o(1), k} <= delta <= max{" +
                  std::to_string(cap) + ", k}");
    b.asymptotic_note =
        "lower bound rises to max{" + std::to_string(floor_term) + "-o(1), k} as N grows";
  }
  b.validity = large_enough();
  return b;
}

std::optional<BoundRange> k2p3_row(int k, int n, const std::string& name) {
  BoundRange b;
  if (k <= 3) {
    b = exact(ceil_half(n + 2), name + ", k <= 3: delta = ceil((N+2)/2)");
  } else if (k == 4) {
    b = exact(ceil_half(n + 1), name + ", k = 4: delta = ceil((N+1)/2)");
  } else if (k == 5) {
    b = range(root((n - 1) / 2.0) + 2.25, root(3.0 * n) + 4,
              name + ", k = 5: sqrt((N-1)/2)+2.25 < delta < sqrt(3N)+4", true, true);
  } else if (k == 6) {
    b = range(6, 10, name + ", k = 6: 8-o(1) <= delta <= 10");
    b.asymptotic_note = "lower bound rises to 8-o(1) as N grows";
  } else {
    b = range(k, std::max(k, 10), name + ", k >= 7: k <= delta <= max{k, 10}");
  }
  b.validity = at_least(29, n);
  return b;
}

std::optional<BoundRange> p3p3_row(int k, int n) {
  BoundRange b;
  if (k == 6) {
    b = exact(ceil_half(n + 2), "P3+P3, k = 6: delta = ceil((N+2)/2)");
  } else if (k == 7) {
    b = range(root((n - 2) / 2.0) + 3.25, root(5.0 * n) + 6,
              "P3+P3, k = 7: sqrt((N-2)/2)+3.25 < delta < sqrt(5N)+6", true, true);
  } else if (k == 8) {
    b = range(8, 40, "P3+P3, k = 8: 8 <= delta <= 40");
  } else {
    return std::nullopt;
  }
  b.validity = large_enough();
  return b;
}

std::optional<BoundRange> lk2p3_row(int k, int l, int n, bool cycle) {
  const std::string tail = cycle ? "+C2" : "+P3";
  if (l == 1) return k2p3_row(k, n, "K2" + tail);
  const std::string name = std::to_string(l) + "K2" + tail;
  const long long L = l;
  BoundRange b;
  if (k == 2 * l + 1) {
    b = exact(ceil_half(n + L + 1), name + ", k = 2l+1: delta = ceil((N+l+1)/2)");
  } else if (k == 2 * l + 2) {
    b = exact(ceil_half(n + L), name + ", k = 2l+2: delta = ceil((N+l)/2)");
  } else if (k == 2 * l + 3) {
    b = range(root((n - 2.0 * l + 1) / 2.0) + 2.0 * l + 0.25, root((2.0 * l + 1) * n) + 2.0 * l + 2,
              name + ", k = 2l+3: sqrt((N-2l+1)/2)+2l+1/4 < delta < sqrt((2l+1)N)+2l+2", true,
              true);
  } else if (k == 2 * l + 4) {
    b = range(2 * l + 4, 10 * (l + 2), name + ", k = 2l+4: 2l+4 <= delta <= 10(l+2)");
  } else {
    return std::nullopt;
  }
  b.validity = large_enough();
  return b;
}

std::optional<BoundRange> k2p4_row(int k, int n) {
  BoundRange b;
  if (k == 6) {
    b = exact(ceil_half(n + 2), "K2+P4, k = 6: delta = ceil((N+2)/2)");
  } else if (k == 7) {
    b = range(std::cbrt(n - 2.0) + 4.7, root(5.0 * n) + 6,
              "K2+P4, k = 7: cbrt(N-2)+4.7 <= delta < sqrt(5N)+6", false, true);
  } else if (k == 8) {
    b = range(8, 40, "K2+P4, k = 8: 8 <= delta <= 40");
  } else {
    return std::nullopt;
  }
  b.validity = large_enough();
  return b;
}

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (std::floor(x) == x && std::abs(x) < 1e15) return static_cast<long long>(x);
  return x;
}

}  // namespace

HId parse_hid(std::string_view text) {
  const std::string s = normalize(text);
  if (s == "p4") return {HTag::P4, 0};
  if (s == "k3") return {HTag::K3, 0};
  if (s == "k2+p3" || s == "k2p3") return {HTag::K2P3, 0};
  if (s == "k2+c2" || s == "k2c2") return {HTag::K2C2, 0};
  if (s == "p3+p3" || s == "p3p3") return {HTag::P3P3, 0};
  if (s == "k2+p4" || s == "k2p4") return {HTag::K2P4, 0};
  if (s == "k2") return {HTag::OneSidedBipartite, 1};

  static const std::regex lk2(R"((\d+)\*k2)");
  static const std::regex matching(R"(matching:(\d+))");
  static const std::regex lk2p3(R"((\d+)\*k2\+?p3)");
  static const std::regex lk2c2(R"((\d+)\*k2\+?c2)");
  static const std::regex bipartite(R"((?:bipartite|star|me):(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, lk2) || std::regex_match(s, m, matching)) {
    const int l = parse_count(m[1]);
    return l == 1 ? HId{HTag::OneSidedBipartite, 1} : HId{HTag::LK2, l};
  }
  if (std::regex_match(s, m, lk2p3)) {
    const int l = parse_count(m[1]);
    return l == 1 ? HId{HTag::K2P3, 0} : HId{HTag::LK2P3, l};
  }
  if (std::regex_match(s, m, lk2c2)) {
    const int l = parse_count(m[1]);
    return l == 1 ? HId{HTag::K2C2, 0} : HId{HTag::LK2C2, l};
  }
  if (std::regex_match(s, m, bipartite)) return {HTag::OneSidedBipartite, parse_count(m[1])};
  throw ParseError(0, "unknown pattern family: " + std::string(text));
}

std::string to_string(const HId& id) {
  const std::string l = std::to_string(id.l);
  switch (id.tag) {
    case HTag::P4: return "p4";
    case HTag::K3: return "k3";
    case HTag::K2P3: return "k2+p3";
    case HTag::K2C2: return "k2+c2";
    case HTag::P3P3: return "p3+p3";
    case HTag::K2P4: return "k2+p4";
    case HTag::LK2: return l + "*k2";
    case HTag::LK2P3: return l + "*k2+p3";
    case HTag::LK2C2: return l + "*k2+c2";
    case HTag::OneSidedBipartite: return "bipartite:" + l;
  }
  return "?";
}

std::optional<BoundRange> paper_bounds(int k, const HId& h, int n) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (n < 1) throw DomainError("N must be positive");
  const bool needs_l = h.tag == HTag::LK2 || h.tag == HTag::LK2P3 || h.tag == HTag::LK2C2 ||
                       h.tag == HTag::OneSidedBipartite;
  if (needs_l && h.l < 1) throw DomainError("l must be at least 1");
  switch (h.tag) {
    case HTag::P4: return p4_row(k, n);
    case HTag::K3: return k3_row(k, n);
    case HTag::K2P3: return k2p3_row(k, n, "K2+P3");
    case HTag::K2C2: return k2p3_row(k, n, "K2+C2");
    case HTag::P3P3: return p3p3_row(k, n);
    case HTag::LK2: return lk2_row(k, h.l, n);
    case HTag::LK2P3: return lk2p3_row(k, h.l, n, false);
    case HTag::LK2C2: return lk2p3_row(k, h.l, n, true);
    case HTag::OneSidedBipartite: return bipartite_row(k, h.l, n);
    case HTag::K2P4: return k2p4_row(k, n);
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const BoundRange& b) {
  nlohmann::ordered_json j;
  j["lower"] = number(b.lower);
  j["upper"] = number(b.upper);
  j["exact"] = b.exact;
  j["lower_strict"] = b.lower_strict;
  j["upper_strict"] = b.upper_strict;
  j["asymptotic_note"] = b.asymptotic_note ? nlohmann::ordered_json(*b.asymptotic_note) : nullptr;
  if (b.validity) {
    nlohmann::ordered_json v;
    v["min_n"] = b.validity->min_n ? nlohmann::ordered_json(*b.validity->min_n) : nullptr;
    v["satisfied"] = b.validity->satisfied ? nlohmann::ordered_json(*b.validity->satisfied) : nullptr;
    v["text"] = b.validity->text;
    j["validity"] = v;
  } else {
    j["validity"] = nullptr;
  }
  j["row"] = b.row;
  return j;
}

}  // namespace hlink
