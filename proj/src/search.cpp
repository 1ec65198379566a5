#include "eqsum4/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace eqsum4 {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 pow4(std::uint32_t x) {
  u128 s = static_cast<u128>(x) * x;
  return s * s;
}

void check_config(const SearchConfig& cfg, SearchMode want) {
  if (cfg.mode != want) throw std::invalid_argument("search mode does not match the called search");
  if (cfg.bound < 2) throw std::invalid_argument("search bound must be >= 2");
  if (cfg.bound > kMaxSearchBound)
    throw std::invalid_argument("search bound must be <= " + std::to_string(kMaxSearchBound));
}

// Little-endian base 10^9 natural numbers.
using Nat = std::vector<std::uint32_t>;
constexpr std::uint32_t kBase = 1000000000u;

void trim(Nat& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Nat nat_from_digits(std::string_view d) {
  Nat out;
  for (std::size_t end = d.size(); end > 0;) {
    std::size_t start = end >= 9 ? end - 9 : 0;
    std::uint32_t limb = 0;
    for (std::size_t i = start; i < end; ++i) limb = limb * 10 + static_cast<std::uint32_t>(d[i] - '0');
    out.push_back(limb);
    end = start;
  }
  trim(out);
  return out;
}

Nat nat_add(const Nat& a, const Nat& b) {
  Nat out(std::max(a.size(), b.size()) + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out[i] = static_cast<std::uint32_t>(s % kBase);
    carry = s / kBase;
  }
  trim(out);
  return out;
}

Nat nat_mul(const Nat& a, const Nat& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    for (std::size_t k = i + b.size(); carry; ++k) {
      std::uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
    }
  }
  Nat out(acc.begin(), acc.end());
  trim(out);
  return out;
}

struct Signed {
  bool negative = false;
  Nat mag;
};

Signed parse_signed(const Integer& v) {
  std::string s = v.str();
  Signed out;
  if (!s.empty() && s[0] == '-') {
    out.negative = true;
    s.erase(0, 1);
  }
  out.mag = nat_from_digits(s);
  return out;
}

bool confirm_power4(const std::vector<Signed>& xs, const std::vector<Signed>& ys) {
  auto total = [](const std::vector<Signed>& side) {
    Nat acc;
    for (const auto& v : side) {
      Nat sq = nat_mul(v.mag, v.mag);
      acc = nat_add(acc, nat_mul(sq, sq));
    }
    return acc;
  };
  return total(xs) == total(ys);
}

bool confirm_product(const std::vector<Signed>& xs, const std::vector<Signed>& ys) {
  auto total = [](const std::vector<Signed>& side) {
    Signed acc{false, Nat{1}};
    for (const auto& v : side) {
      acc.mag = nat_mul(acc.mag, v.mag);
      acc.negative ^= v.negative;
    }
    if (acc.mag.empty()) acc.negative = false;
    return acc;
  };
  Signed a = total(xs), b = total(ys);
  return a.negative == b.negative && a.mag == b.mag;
}

bool confirm_linear(const std::vector<Signed>& xs, const std::vector<Signed>& ys) {
  // sum x = sum y  <=>  x+ + y- = x- + y+ with every part non-negative
  Nat left, right;
  for (const auto& v : xs) {
    Nat& part = v.negative ? right : left;
    part = nat_add(part, v.mag);
  }
  for (const auto& v : ys) {
    Nat& part = v.negative ? left : right;
    part = nat_add(part, v.mag);
  }
  return left == right;
}

template <class Key>
struct HeapEntry {
  u128 sum;
  Key key;
  bool operator>(const HeapEntry& o) const { return sum != o.sum ? sum > o.sum : key > o.key; }
};

}  // namespace

std::string_view to_string(SearchMode m) { return m == SearchMode::EqualSums4 ? "EQUAL_SUMS_4" : "N3_PRODUCT"; }

std::optional<SearchMode> search_mode_from_string(std::string_view s) {
  if (s == "EQUAL_SUMS_4" || s == "equal-sums") return SearchMode::EqualSums4;
  if (s == "N3_PRODUCT" || s == "n3-product") return SearchMode::N3Product;
  return std::nullopt;
}

std::vector<Quadruple> equal_sums_search(const SearchConfig& cfg) {
  check_config(cfg, SearchMode::EqualSums4);
  using Key = std::array<std::uint32_t, 2>;
  std::priority_queue<HeapEntry<Key>, std::vector<HeapEntry<Key>>, std::greater<>> heap;
  for (std::uint32_t p = 1; p <= cfg.bound; ++p) heap.push({pow4(p) + pow4(p), {p, p}});

  std::vector<std::array<std::uint32_t, 4>> found;
  std::vector<Key> group;
  u128 group_sum = 0;
  auto flush = [&] {
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        std::array<std::uint32_t, 4> q{group[i][0], group[i][1], group[j][0], group[j][1]};
        if (cfg.primitive_only &&
            std::gcd(std::gcd(q[0], q[1]), std::gcd(q[2], q[3])) != 1)
          continue;
        found.push_back(q);
      }
    group.clear();
  };
  while (!heap.empty() && !(cfg.limit && found.size() >= *cfg.limit)) {
    auto top = heap.top();
    heap.pop();
    if (top.key[1] < cfg.bound) heap.push({pow4(top.key[0]) + pow4(top.key[1] + 1), {top.key[0], top.key[1] + 1}});
    if (group.empty() || top.sum != group_sum) {
      flush();
      group_sum = top.sum;
    }
    group.push_back(top.key);
  }
  if (!(cfg.limit && found.size() >= *cfg.limit)) flush();
  if (cfg.limit && found.size() > *cfg.limit) found.resize(*cfg.limit);
  std::sort(found.begin(), found.end());
  std::vector<Quadruple> out;
  for (const auto& q : found) out.push_back({Integer(q[0]), Integer(q[1]), Integer(q[2]), Integer(q[3])});
  return out;
}

void n3_product_search(const SearchConfig& cfg, const std::function<bool(const SolutionPair&)>& sink) {
  check_config(cfg, SearchMode::N3Product);
  using Key = std::array<std::uint32_t, 3>;
  std::priority_queue<HeapEntry<Key>, std::vector<HeapEntry<Key>>, std::greater<>> heap;
  for (std::uint32_t a = 1; a <= cfg.bound; ++a)
    for (std::uint32_t b = a; b <= cfg.bound; ++b) heap.push({pow4(a) + pow4(b) + pow4(b), {a, b, b}});

  std::vector<Key> group;
  u128 group_sum = 0;
  std::size_t emitted = 0;
  bool stop = false;
  auto flush = [&] {
    for (std::size_t i = 0; i < group.size() && !stop; ++i)
      for (std::size_t j = i + 1; j < group.size() && !stop; ++j) {
        const Key& x = group[i];
        const Key& y = group[j];
        u128 px = static_cast<u128>(x[0]) * x[1] * x[2];
        u128 py = static_cast<u128>(y[0]) * y[1] * y[2];
        if (px != py) continue;
        if (cfg.primitive_only) {
          std::uint32_t g = std::gcd(std::gcd(x[0], x[1]), x[2]);
          g = std::gcd(g, std::gcd(std::gcd(y[0], y[1]), y[2]));
          if (g != 1) continue;
        }
        SolutionPair sp;
        sp.flags = {Constraint::Power4, Constraint::Product};
        for (auto v : x) sp.xs.emplace_back(v);
        for (auto v : y) sp.ys.emplace_back(v);
        ++emitted;
        if (!sink(sp) || (cfg.limit && emitted >= *cfg.limit)) stop = true;
      }
    group.clear();
  };
  while (!heap.empty() && !stop) {
    auto top = heap.top();
    heap.pop();
    const Key& k = top.key;
    if (k[2] < cfg.bound) heap.push({pow4(k[0]) + pow4(k[1]) + pow4(k[2] + 1), {k[0], k[1], k[2] + 1}});
    if (group.empty() || top.sum != group_sum) {
      flush();
      group_sum = top.sum;
    }
    if (!stop) group.push_back(k);
  }
  if (!stop) flush();
}

std::vector<SolutionPair> n3_product_search(const SearchConfig& cfg) {
  std::vector<SolutionPair> out;
  n3_product_search(cfg, [&](const SolutionPair& sp) {
    out.push_back(sp);
    return true;
  });
  return out;
}

bool confirm(const SolutionPair& sp) {
  if (sp.xs.size() != sp.ys.size() || sp.xs.empty()) return false;
  std::vector<Signed> xs, ys;
  for (const auto& x : sp.xs) xs.push_back(parse_signed(x));
  for (const auto& y : sp.ys) ys.push_back(parse_signed(y));
  Constraints want = sp.flags.empty() ? Constraints{Constraint::Power4, Constraint::Product} : sp.flags;
  if (want.has(Constraint::Power4) && !confirm_power4(xs, ys)) return false;
  if (want.has(Constraint::Product) && !confirm_product(xs, ys)) return false;
  if (want.has(Constraint::LinSum) && !confirm_linear(xs, ys)) return false;
  return true;
}

}  // namespace eqsum4
