#include "chernflop/bordism.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "chernflop/errors.hpp"

namespace chernflop {

void validate(const Manifold& m) {
  if (!m.space) throw ModelError("manifold without a cohomology model");
  if (m.space->dim() != m.n) throw ModelError("cohomology dimension differs from the manifold dimension");
  if (static_cast<int>(m.tangent_pos.size()) - static_cast<int>(m.tangent_neg.size()) != m.n) {
    throw ModelError("virtual tangent rank differs from the dimension");
  }
  for (const auto* list : {&m.tangent_pos, &m.tangent_neg}) {
    for (const auto& r : *list) {
      if (!r.is_homogeneous(1)) throw DegreeMismatch("tangent roots must have degree 1");
    }
  }
}

Manifold point() {
  Manifold m;
  m.space = make_base({});
  m.label = "P(0)";
  return m;
}

Manifold projective_space(int n) {
  if (n < 0) throw ModelError("projective dimension must be non-negative");
  if (n == 0) return point();
  Manifold m;
  m.n = n;
  m.space = make_base({n});
  const CohElement h = CohElement::generator(m.space, 0);
  m.tangent_pos.assign(static_cast<std::size_t>(n + 1), h);
  m.tangent_neg.assign(1, CohElement(m.space));
  m.label = "P(" + std::to_string(n) + ")";
  return m;
}

Manifold product(const Manifold& a, const Manifold& b) {
  const ProductSpace ps = product_space(a.space, b.space);
  Manifold m;
  m.n = a.n + b.n;
  m.space = ps.space;
  for (const auto& r : a.tangent_pos) m.tangent_pos.push_back(pull(r, ps.space, ps.map_a));
  for (const auto& r : b.tangent_pos) m.tangent_pos.push_back(pull(r, ps.space, ps.map_b));
  for (const auto& r : a.tangent_neg) m.tangent_neg.push_back(pull(r, ps.space, ps.map_a));
  for (const auto& r : b.tangent_neg) m.tangent_neg.push_back(pull(r, ps.space, ps.map_b));
  m.label = a.label + " x " + b.label;
  return m;
}

Manifold power(const Manifold& m, int e) {
  if (e < 0) throw ModelError("negative manifold power");
  Manifold out = point();
  for (int i = 0; i < e; ++i) out = (i == 0) ? m : product(out, m);
  return out;
}

CohElement first_chern_class(const Manifold& m) {
  CohElement out(m.space);
  for (const auto& r : m.tangent_pos) out += r;
  for (const auto& r : m.tangent_neg) out -= r;
  return out;
}

CohElement total_chern_class(const Manifold& m) {
  CohElement c = char_class(m.tangent_pos, m.tangent_neg, ClassKind::chern_total, m.n);
  if (c.is_zero()) c = CohElement::constant(m.space, 1);
  return c;
}

Rational power_sum_integral(const Manifold& m, int k) {
  CohElement s(m.space);
  for (const auto& r : m.tangent_pos) s += r.pow(k);
  for (const auto& r : m.tangent_neg) s -= r.pow(k);
  return s.integrate();
}

// ---------------------------------------------------------------------------
// BordismVector

BordismVector::BordismVector(int n) : n_(n) {
  if (n < 0) throw ModelError("negative bordism dimension");
  for (const auto& lambda : partitions(n)) numbers_.emplace(lambda, Rational(0));
}

BordismVector BordismVector::point() {
  BordismVector out(0);
  out.set({}, 1);
  return out;
}

const Rational& BordismVector::at(const Partition& lambda) const {
  auto it = numbers_.find(lambda);
  if (it == numbers_.end()) throw BadPartition(to_string(lambda) + " is not a partition of " + std::to_string(n_));
  return it->second;
}

void BordismVector::set(const Partition& lambda, const Rational& value) {
  auto it = numbers_.find(lambda);
  if (it == numbers_.end()) throw BadPartition(to_string(lambda) + " is not a partition of " + std::to_string(n_));
  it->second = value;
}

bool BordismVector::is_zero() const {
  return std::all_of(numbers_.begin(), numbers_.end(), [](const auto& kv) { return kv.second == 0; });
}

bool BordismVector::is_su() const {
  for (const auto& [lambda, v] : numbers_) {
    if (v != 0 && std::find(lambda.begin(), lambda.end(), 1) != lambda.end()) return false;
  }
  return true;
}

BordismVector BordismVector::operator-() const {
  BordismVector out = *this;
  for (auto& [lambda, v] : out.numbers_) v = -v;
  return out;
}

BordismVector& BordismVector::operator+=(const BordismVector& other) {
  if (other.n_ != n_) throw DegreeMismatch("adding bordism classes of dimensions " + std::to_string(n_) + " and " + std::to_string(other.n_));
  for (auto& [lambda, v] : numbers_) v += other.numbers_.at(lambda);
  return *this;
}

BordismVector& BordismVector::operator-=(const BordismVector& other) { return *this += -other; }

BordismVector& BordismVector::operator*=(const Rational& c) {
  for (auto& [lambda, v] : numbers_) v *= c;
  return *this;
}

BordismVector chern_numbers(const Manifold& m) {
  validate(m);
  const CohElement total = total_chern_class(m);
  std::vector<CohElement> c;
  for (int i = 0; i <= m.n; ++i) c.push_back(total.homogeneous_part(i));
  BordismVector out(m.n);
  for (const auto& lambda : partitions(m.n)) {
    CohElement prod = CohElement::constant(m.space, 1);
    for (int part : lambda) prod = prod * c[static_cast<std::size_t>(part)];
    out.set(lambda, prod.integrate());
  }
  return out;
}

BordismVector bordism_product(const BordismVector& a, const BordismVector& b) {
  const int n = a.dim() + b.dim();
  BordismVector out(n);
  for (const auto& lambda : partitions(n)) {
    // c_l(E + F) = sum_i c_i(E) c_{l-i}(F); expand the product over parts.
    Rational total = 0;
    Partition left;
    Partition right;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left_weight) {
      if (left_weight > a.dim()) return;
      if (idx == lambda.size()) {
        if (left_weight != a.dim()) return;
        Partition l = left;
        Partition r = right;
        std::sort(l.begin(), l.end(), std::greater<>());
        std::sort(r.begin(), r.end(), std::greater<>());
        total += a.at(l) * b.at(r);
        return;
      }
      const int part = lambda[idx];
      for (int i = 0; i <= part; ++i) {
        if (i > 0) left.push_back(i);
        if (part - i > 0) right.push_back(part - i);
        rec(idx + 1, left_weight + i);
        if (part - i > 0) right.pop_back();
        if (i > 0) left.pop_back();
      }
    };
    rec(0, 0);
    out.set(lambda, total);
  }
  return out;
}

BordismVector bordism_power(const BordismVector& b, int e) {
  if (e < 0) throw ModelError("negative bordism power");
  BordismVector out = BordismVector::point();
  for (int i = 0; i < e; ++i) out = bordism_product(out, b);
  return out;
}

Rational pair(const ChernPoly& p, const BordismVector& b) {
  Rational out = 0;
  for (const auto& [lambda, c] : p) {
    if (weight(lambda) == b.dim()) out += c * b.at(lambda);
  }
  return out;
}

Rational s_number(const BordismVector& b) {
  if (b.dim() == 0) return 0;
  return pair(newton_power_sum(b.dim(), b.dim()), b);
}

BordismVector k3_vector() {
  BordismVector out(2);
  out.set({2}, 24);
  return out;
}

BordismVector s6_vector() {
  BordismVector out(3);
  out.set({3}, 2);
  return out;
}

BordismVector x4_vector() {
  BordismVector out(4);
  out.set({4}, 6);
  out.set({2, 2}, 2);
  return out;
}

BordismVector builtin_vector(const std::string& name) {
  if (name == "K3") return k3_vector();
  if (name == "S6") return s6_vector();
  if (name == "X4") return x4_vector();
  throw UnknownName("unknown named bordism class '" + name + "'");
}

std::string to_string(const BordismVector& b) {
  std::ostringstream os;
  os << "dim " << b.dim() << ":";
  for (const auto& [lambda, v] : b.numbers()) os << " c" << to_string(lambda) << "=" << to_short_string(v);
  return os.str();
}

}  // namespace chernflop
