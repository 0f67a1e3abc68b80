#include "grouplabel/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>

namespace grouplabel {
namespace {

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t value;

  auto key() const { return std::pair(prime, exponent); }
};

std::vector<PrimePower> factorize(std::int64_t n) {
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, for gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair(r, old_r - q * r);
    std::tie(old_s, s) = std::pair(s, old_s - q * s);
  }
  return mod(old_s, m);
}

void check_shape(const GroupSpec& spec, const GroupElement& a) {
  if (a.residues.size() != spec.rank()) {
    throw InvalidElement("element has " + std::to_string(a.residues.size()) +
                         " coordinates, group " + spec.to_string() + " has " +
                         std::to_string(spec.rank()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (auto d : factors_) {
    if (d < 2) throw InvalidSpec("cyclic factor order must be at least 2, got " + std::to_string(d));
    if (order_ > std::numeric_limits<std::int64_t>::max() / d) throw InvalidSpec("group order overflows");
    order_ *= d;
  }
}

GroupSpec GroupSpec::cyclic(std::int64_t n) {
  if (n == 1) return GroupSpec{};
  return GroupSpec({n});
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  }
  if (s == "z1") return GroupSpec{};
  std::vector<std::int64_t> factors;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != 'z') throw InvalidSpec("malformed group '" + std::string(text) + "'");
    ++pos;
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), d);
    if (ec != std::errc{} || ptr == s.data() + pos) {
      throw InvalidSpec("malformed group '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - s.data());
    factors.push_back(d);
    if (pos == s.size()) break;
    if (s[pos] != 'x' && s[pos] != '+') throw InvalidSpec("malformed group '" + std::string(text) + "'");
    ++pos;
  }
  return GroupSpec(std::move(factors));
}

GroupElement GroupSpec::zero() const { return GroupElement(std::vector<std::int64_t>(rank(), 0)); }

bool GroupSpec::conforms(const GroupElement& a) const {
  if (a.residues.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= factors_[i]) return false;
  }
  return true;
}

void GroupSpec::require_conforming(const GroupElement& a) const {
  check_shape(*this, a);
  if (!conforms(a)) throw InvalidElement("element residue out of range for " + to_string());
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
  require_conforming(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(a.residues[i]);
  }
  return idx;
}

GroupElement GroupSpec::element_at(std::size_t index) const {
  if (index >= static_cast<std::size_t>(order_)) throw InvalidElement("element index out of range");
  std::vector<std::int64_t> r(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    auto d = static_cast<std::size_t>(factors_[i]);
    r[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return GroupElement(std::move(r));
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

GroupSpec concat(const GroupSpec& first, const GroupSpec& second) {
  std::vector<std::int64_t> f(first.factors().begin(), first.factors().end());
  f.insert(f.end(), second.factors().begin(), second.factors().end());
  return GroupSpec(std::move(f));
}

GroupSpec canonicalize_spec(std::span<const std::int64_t> factors) {
  std::vector<PrimePower> parts;
  for (auto d : factors) {
    if (d < 2) throw InvalidSpec("cyclic factor order must be at least 2, got " + std::to_string(d));
    auto f = factorize(d);
    parts.insert(parts.end(), f.begin(), f.end());
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  std::vector<std::int64_t> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.value);
  return GroupSpec(std::move(out));
}

GroupSpec canonicalize_spec(const GroupSpec& spec) { return canonicalize_spec(spec.factors()); }

bool isomorphic(const GroupSpec& a, const GroupSpec& b) { return canonicalize_spec(a) == canonicalize_spec(b); }

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  spec.require_conforming(a);
  spec.require_conforming(b);
  GroupElement out(std::vector<std::int64_t>(spec.rank()));
  auto f = spec.factors();
  for (std::size_t i = 0; i < spec.rank(); ++i) out.residues[i] = mod(a.residues[i] + b.residues[i], f[i]);
  return out;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& a) {
  spec.require_conforming(a);
  GroupElement out(std::vector<std::int64_t>(spec.rank()));
  auto f = spec.factors();
  for (std::size_t i = 0; i < spec.rank(); ++i) out.residues[i] = mod(-a.residues[i], f[i]);
  return out;
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return add(spec, a, negate(spec, b));
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec, std::int64_t cap) {
  if (spec.order() > cap) {
    throw InvalidSpec("group order " + std::to_string(spec.order()) + " exceeds enumeration cap " +
                      std::to_string(cap));
  }
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  for (std::int64_t i = 0; i < spec.order(); ++i) out.push_back(spec.element_at(static_cast<std::size_t>(i)));
  return out;
}

std::int64_t involution_count(const GroupSpec& spec) {
  auto canon = canonicalize_spec(spec);
  int even = 0;
  for (auto d : canon.factors()) even += (d % 2 == 0);
  return (std::int64_t{1} << even) - 1;
}

SylowSplit sylow_split(const GroupSpec& spec) {
  auto canon = canonicalize_spec(spec);
  std::vector<std::int64_t> two, odd;
  for (auto d : canon.factors()) (d % 2 == 0 ? two : odd).push_back(d);
  return {GroupSpec(std::move(two)), GroupSpec(std::move(odd))};
}

std::optional<AntDecomposition> ant_decomposition(const GroupSpec& spec) {
  auto [two, odd] = sylow_split(spec);
  if (two.rank() != 1 || two.order() < 4) return std::nullopt;
  if (spec.rank() == 1) {
    if (spec.order() == 4) return std::nullopt;
    return AntDecomposition{spec.order(), GroupSpec{}};
  }
  if (two.order() >= 8) return AntDecomposition{two.order(), odd};

  // 2-part is Z4: absorb the largest prime-power component of each odd prime.
  std::vector<PrimePower> parts;
  for (auto d : odd.factors()) parts.push_back(factorize(d).front());
  if (parts.empty()) return std::nullopt;
  std::int64_t four_m = 4;
  std::vector<std::int64_t> rest;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // primary form is sorted by (prime, exponent): the last of each prime run is largest
    bool last_of_prime = i + 1 == parts.size() || parts[i + 1].prime != parts[i].prime;
    if (last_of_prime) {
      four_m *= parts[i].value;
    } else {
      rest.push_back(parts[i].value);
    }
  }
  return AntDecomposition{four_m, GroupSpec(std::move(rest))};
}

bool is_elementary_two(const GroupSpec& spec) {
  auto canon = canonicalize_spec(spec);
  return std::all_of(canon.factors().begin(), canon.factors().end(), [](auto d) { return d == 2; });
}

std::vector<GroupSpec> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw InvalidSpec("group order must be positive");
  // partitions of each prime exponent, combined across primes
  std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
  for (const auto& pp : factorize(n)) {
    std::vector<std::vector<std::int64_t>> options;
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) {
        std::vector<std::int64_t> f;
        for (auto it = part.rbegin(); it != part.rend(); ++it) {
          std::int64_t v = 1;
          for (int i = 0; i < *it; ++i) v *= pp.prime;
          f.push_back(v);
        }
        options.push_back(std::move(f));
        return;
      }
      for (int k = std::min(remaining, max_part); k >= 1; --k) {
        part.push_back(k);
        rec(remaining - k, k);
        part.pop_back();
      }
    };
    rec(pp.exponent, pp.exponent);
    per_prime.push_back(std::move(options));
  }
  std::vector<GroupSpec> out;
  std::vector<std::int64_t> current;
  std::function<void(std::size_t)> combine = [&](std::size_t i) {
    if (i == per_prime.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& opt : per_prime[i]) {
      current.insert(current.end(), opt.begin(), opt.end());
      combine(i + 1);
      current.resize(current.size() - opt.size());
    }
  };
  combine(0);
  std::sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    return std::lexicographical_compare(a.factors().begin(), a.factors().end(), b.factors().begin(),
                                        b.factors().end());
  });
  return out;
}

CoordinateMap::CoordinateMap(GroupSpec source, GroupSpec target)
    : source_(std::move(source)), target_(std::move(target)) {
  struct Tagged {
    PrimePower pp;
    Slot slot;
  };
  auto components = [](const GroupSpec& g) {
    std::vector<Tagged> out;
    for (std::size_t i = 0; i < g.rank(); ++i) {
      for (const auto& pp : factorize(g.factors()[i])) out.push_back({pp, {i, pp.value}});
    }
    std::stable_sort(out.begin(), out.end(), [](const Tagged& a, const Tagged& b) { return a.pp.key() < b.pp.key(); });
    return out;
  };
  auto src = components(source_);
  auto dst = components(target_);
  bool same = src.size() == dst.size();
  for (std::size_t k = 0; same && k < src.size(); ++k) same = src[k].pp.key() == dst[k].pp.key();
  if (!same) {
    throw InvalidSpec("no isomorphism between " + source_.to_string() + " and " + target_.to_string());
  }
  for (std::size_t k = 0; k < src.size(); ++k) {
    source_slots_.push_back(src[k].slot);
    target_slots_.push_back(dst[k].slot);
  }
}

GroupElement CoordinateMap::operator()(const GroupElement& a) const {
  source_.require_conforming(a);
  // CRT: accumulate each component into its target factor
  auto tf = target_.factors();
  std::vector<std::int64_t> out(target_.rank(), 0);
  for (std::size_t k = 0; k < source_slots_.size(); ++k) {
    std::int64_t r = a.residues[source_slots_[k].factor] % source_slots_[k].modulus;
    const Slot& t = target_slots_[k];
    std::int64_t d = tf[t.factor];
    std::int64_t cofactor = d / t.modulus;
    // idempotent basis element for this component in Z_d
    std::int64_t e = (cofactor % d) * inverse_mod(cofactor % t.modulus, t.modulus) % d;
    out[t.factor] = mod(out[t.factor] + static_cast<std::int64_t>((static_cast<__int128>(r) * e) % d), d);
  }
  return GroupElement(std::move(out));
}

GroupTable::GroupTable(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.order() > kMaxOrder) {
    throw InvalidSpec("group " + spec_.to_string() + " is too large for table-driven search");
  }
  order_ = static_cast<int>(spec_.order());
  elements_ = enumerate_elements(spec_);
  add_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    neg_[a] = index(negate(spec_, elements_[a]));
    for (int b = 0; b < order_; ++b) {
      add_[static_cast<std::size_t>(a) * order_ + b] = index(grouplabel::add(spec_, elements_[a], elements_[b]));
    }
  }
}

}  // namespace grouplabel
