#include "syzcert/lattice.hpp"

#include <algorithm>
#include <string>

#include "syzcert/bundle_model.hpp"
#include "syzcert/errors.hpp"

namespace syz::lattice {

bool dominance_leq(std::uint64_t j, std::uint64_t i, std::uint64_t p) {
  arith::require_prime(p);
  for (; j != 0; j /= p, i /= p) {
    if (j % p > i % p) return false;
  }
  return true;
}

Nat minimal_block_dim(std::uint64_t n, std::uint64_t p, std::uint64_t e) {
  if (n < 2) throw ParameterError("minimal_block_dim requires n >= 2");
  Nat dim = 1;
  for (std::uint64_t t : arith::padic_digits(e, p).digits) dim *= arith::dim_sym(n, t);
  return dim;
}

namespace {

// Immediate predecessors of i under dominance: lower one nonzero digit by one.
template <typename F>
void for_each_lower_cover(std::uint64_t i, std::uint64_t p, F&& f) {
  std::uint64_t place = 1;
  for (std::uint64_t rest = i; rest != 0; rest /= p, place *= p) {
    if (rest % p != 0) f(i - place);
  }
}

}  // namespace

bool is_downward_closed(const std::vector<std::uint64_t>& indices, std::uint64_t p,
                        std::uint64_t d) {
  arith::require_prime(p);
  std::vector<char> member(d, 0);
  for (auto i : indices) {
    if (i >= d) return false;
    member[i] = 1;
  }
  // Closure under lower covers implies closure under the whole order.
  for (auto i : indices) {
    bool ok = true;
    for_each_lower_cover(i, p, [&](std::uint64_t j) { ok = ok && member[j]; });
    if (!ok) return false;
  }
  return true;
}

SupportSet make_support(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                        std::vector<std::uint64_t> indices) {
  if (n < 2) throw ParameterError("support requires n >= 2");
  if (d < 1) throw ParameterError("support requires d >= 1");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!is_downward_closed(indices, p, d))
    throw ParameterError("index set is not a downward-closed subset of [0, d-1]");
  return SupportSet{n, p, d, std::move(indices)};
}

SupportProfile profile(const SupportSet& s) {
  SupportProfile prof{s, {}, {}};
  prof.lo.reserve(s.indices.size());
  prof.hi.reserve(s.indices.size());
  for (auto i : s.indices) {
    prof.lo.push_back(minimal_block_dim(s.n, s.p, s.d - i));
    prof.hi.push_back(arith::dim_sym(s.n, s.d - i));
  }
  return prof;
}

std::vector<SupportSet> enumerate_supports(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                                           std::uint64_t cap) {
  if (n < 2) throw ParameterError("enumerate_supports requires n >= 2");
  if (d < 1) throw ParameterError("enumerate_supports requires d >= 1");
  arith::require_prime(p);

  bool full_is_forced = true;
  for (std::uint64_t i = 0; i < d && full_is_forced; ++i)
    full_is_forced = minimal_block_dim(n, p, d - i) == arith::dim_sym(n, d - i);

  // Integer order is a linear extension of dominance, so deciding indices in
  // increasing order and admitting i only when its lower covers are present
  // visits every order ideal exactly once.
  std::vector<std::vector<std::uint64_t>> found;
  std::vector<char> member(d, 0);
  std::vector<std::uint8_t> next(d, 0);  // 0: try exclude, 1: try include, 2: done
  std::size_t pos = 0;
  std::size_t size = 0;
  auto emit = [&] {
    if (size == 0 || (size == d && full_is_forced)) return;
    if (found.size() >= cap) throw EnumerationOverflow(cap);
    std::vector<std::uint64_t> ideal;
    ideal.reserve(size);
    for (std::uint64_t i = 0; i < d; ++i)
      if (member[i]) ideal.push_back(i);
    found.push_back(std::move(ideal));
  };

  while (true) {
    if (pos == d) {
      emit();
      pos = d - 1;
      continue;
    }
    if (next[pos] == 0) {
      next[pos] = 1;
      if (member[pos]) {
        member[pos] = 0;
        --size;
      }
      if (++pos < d) next[pos] = 0;
      continue;
    }
    if (next[pos] == 1) {
      next[pos] = 2;
      bool admissible = true;
      for_each_lower_cover(pos, p, [&](std::uint64_t j) { admissible = admissible && member[j]; });
      if (admissible) {
        member[pos] = 1;
        ++size;
        if (++pos < d) next[pos] = 0;
        continue;
      }
    }
    if (member[pos]) {
      member[pos] = 0;
      --size;
    }
    if (pos == 0) break;
    --pos;
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SupportSet> out;
  out.reserve(found.size());
  for (auto& ideal : found) out.push_back(SupportSet{n, p, d, std::move(ideal)});
  return out;
}

std::map<std::size_t, std::vector<std::uint64_t>> classify_support(const SupportSet& s) {
  auto top = arith::padic_digits(s.d, s.p);
  std::map<std::size_t, std::vector<std::uint64_t>> classes;
  for (std::size_t j = 0; j < top.size(); ++j) classes[j];
  for (auto i : s.indices) {
    if (i >= s.d) throw ParameterError("support index out of range");
    auto digits = arith::padic_digits(i, s.p);
    std::size_t j = top.size();
    while (j-- > 0) {
      if (digits.at(j) != top.at(j)) break;
    }
    classes[j].push_back(i);
  }
  return classes;
}

Rational margin_coefficient(std::uint64_t n, std::uint64_t d, std::uint64_t i) {
  return -bundle::block_slope(n, d - i, i) - Rational(Int(d), bundle::syzygy_rank(n, d));
}

Rational linear_form(const SupportSet& s, const std::vector<Nat>& weights) {
  if (weights.size() != s.indices.size())
    throw ParameterError("weights do not match the support size");
  Rational total;
  for (std::size_t k = 0; k < weights.size(); ++k)
    total += margin_coefficient(s.n, s.d, s.indices[k]) * Rational(weights[k]);
  return total;
}

MarginResult crude_margin(const SupportSet& s) {
  auto prof = profile(s);
  MarginResult result;
  for (std::size_t k = 0; k < s.indices.size(); ++k) {
    auto c = margin_coefficient(s.n, s.d, s.indices[k]);
    bool take_hi = c.sign() < 0;
    result.choice[s.indices[k]] = take_hi ? BlockChoice::Hi : BlockChoice::Lo;
    result.margin += c * Rational(take_hi ? prof.hi[k] : prof.lo[k]);
  }
  result.conclusive = result.margin.sign() > 0;
  return result;
}

}  // namespace syz::lattice
