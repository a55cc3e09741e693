#include "chernflop/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "chernflop/errors.hpp"

namespace chernflop {

namespace {

// value -> multiplicity of a partition padded with zeros to nvars entries.
std::map<int, int> multiplicities(const Partition& p, int nvars) {
  std::map<int, int> out;
  for (int v : p) ++out[v];
  out[0] += nvars - static_cast<int>(p.size());
  return out;
}

// Number of k-subsets S of positions of nu with sort(nu - 1_S) = mu.
Integer pieri_count(const Partition& nu, const Partition& mu, int nvars) {
  auto n_mult = multiplicities(nu, nvars);
  auto m_mult = multiplicities(mu, nvars);
  const int top = nu.empty() ? 0 : nu.front();
  Integer count = 1;
  int s_above = 0;
  for (int w = top; w >= 0; --w) {
    const int n_w = n_mult.count(w) ? n_mult[w] : 0;
    const int m_w = m_mult.count(w) ? m_mult[w] : 0;
    const int s_w = n_w + s_above - m_w;
    if (s_w < 0 || s_w > n_w) return 0;
    if (w == 0 && s_w != 0) return 0;
    count *= binomial(n_w, s_w);
    s_above = s_w;
  }
  return count;
}

}  // namespace

MonomialSym pieri_e(const Partition& mu, int k, int nvars) {
  MonomialSym out;
  if (static_cast<int>(mu.size()) > nvars || k > nvars || k < 0) return out;
  if (k == 0) {
    out[mu] = 1;
    return out;
  }
  const auto mult = multiplicities(mu, nvars);
  std::vector<std::pair<int, int>> blocks(mult.begin(), mult.end());
  std::set<Partition> targets;
  std::vector<int> raise(blocks.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx == blocks.size()) {
      if (remaining != 0) return;
      Partition nu;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto [value, count] = blocks[b];
        for (int i = 0; i < count - raise[b]; ++i) {
          if (value > 0) nu.push_back(value);
        }
        for (int i = 0; i < raise[b]; ++i) nu.push_back(value + 1);
      }
      std::sort(nu.begin(), nu.end(), std::greater<>());
      targets.insert(nu);
      return;
    }
    for (int t = 0; t <= std::min(blocks[idx].second, remaining); ++t) {
      raise[idx] = t;
      self(self, idx + 1, remaining - t);
    }
    raise[idx] = 0;
  };
  rec(rec, 0, k);
  for (const auto& nu : targets) {
    const Integer c = pieri_count(nu, mu, nvars);
    if (c != 0) out[nu] = Rational(c);
  }
  return out;
}

MonomialSym mul_e(const MonomialSym& f, int k, int nvars) {
  MonomialSym out;
  for (const auto& [mu, c] : f) {
    for (const auto& [nu, d] : pieri_e(mu, k, nvars)) out[nu] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

const MonomialSym& e_expansion(const Partition& lambda, int nvars) {
  static std::mutex mutex;
  static std::map<std::pair<int, Partition>, MonomialSym> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({nvars, lambda});
    if (it != cache.end()) return it->second;
  }
  MonomialSym value;
  if (lambda.empty()) {
    value[{}] = 1;
  } else {
    Partition rest(lambda.begin(), lambda.end() - 1);
    value = mul_e(e_expansion(rest, nvars), lambda.back(), nvars);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(nvars, lambda), std::move(value)).first->second;
}

ChernPoly monomial_to_chern(MonomialSym f, int nvars) {
  ChernPoly out;
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
  while (!f.empty()) {
    const auto lead = std::prev(f.end());
    const Partition lambda = lead->first;
    const Rational c = lead->second;
    if (static_cast<int>(lambda.size()) > nvars) {
      // m_lambda vanishes identically in fewer variables.
      f.erase(lead);
      continue;
    }
    const Partition e_index = conjugate(lambda);
    out[e_index] += c;
    for (const auto& [nu, d] : e_expansion(e_index, nvars)) {
      auto& slot = f[nu];
      slot -= c * d;
      if (slot == 0) f.erase(nu);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ChernPoly symmetric_to_chern(const ExplicitPoly& p, int n) {
  MonomialSym m;
  std::map<Partition, std::pair<Rational, std::size_t>> seen;
  for (const auto& [exps, c] : p) {
    if (c == 0) continue;
    if (static_cast<int>(exps.size()) != n) throw NotSymmetric("exponent vector length differs from variable count");
    Partition lambda;
    for (int e : exps) {
      if (e < 0) throw NotSymmetric("negative exponent");
      if (e > 0) lambda.push_back(e);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    auto [it, inserted] = seen.try_emplace(lambda, c, 0);
    if (it->second.first != c) throw NotSymmetric("coefficients differ within a permutation orbit");
    ++it->second.second;
  }
  for (const auto& [lambda, info] : seen) {
    // Orbit size n! / (prod of multiplicity factorials, zeros included).
    Integer orbit = factorial(n);
    for (const auto& [value, count] : multiplicities(lambda, n)) orbit /= factorial(count);
    if (Integer(static_cast<unsigned long>(info.second)) != orbit) {
      throw NotSymmetric("permutation orbit of " + to_string(lambda) + " is incomplete");
    }
    m[lambda] = info.first;
  }
  return monomial_to_chern(std::move(m), n);
}

ChernPoly chern_mul(const ChernPoly& a, const ChernPoly& b) {
  ChernPoly out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) out[merge(pa, pb)] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ChernPoly newton_power_sum(int k, int nvars) {
  std::vector<ChernPoly> p(static_cast<std::size_t>(k + 1));
  auto c = [nvars](int i) {
    ChernPoly out;
    if (i <= nvars) out[{i}] = 1;
    return out;
  };
  for (int m = 1; m <= k; ++m) {
    ChernPoly acc;
    for (int i = 1; i < m; ++i) {
      const Rational sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [key, v] : chern_mul(c(i), p[static_cast<std::size_t>(m - i)])) acc[key] += sign * v;
    }
    const Rational sign = (m % 2 == 1) ? 1 : -1;
    for (const auto& [key, v] : c(m)) acc[key] += sign * Rational(m) * v;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    p[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return k >= 1 ? p[static_cast<std::size_t>(k)] : ChernPoly{{{}, Rational(nvars)}};
}

}  // namespace chernflop
