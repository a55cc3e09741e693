#include "chernflop/cohomology.hpp"

#include <numeric>
#include <sstream>

#include "chernflop/errors.hpp"

namespace chernflop {

int degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0, [](int acc, std::uint8_t v) { return acc + v; });
}

// ---------------------------------------------------------------------------
// CohSpace

int CohSpace::cap(int generator) const {
  if (generator < static_cast<int>(base_dims_.size())) return base_dims_[static_cast<std::size_t>(generator)];
  return dim_;
}

Rational CohSpace::integrate_monomial(const Exponents& e) const {
  const int m = static_cast<int>(base_dims_.size());
  if (!layer_) {
    for (int i = 0; i < kMaxGenerators; ++i) {
      const int want = i < m ? base_dims_[static_cast<std::size_t>(i)] : 0;
      if (e[static_cast<std::size_t>(i)] != want) return 0;
    }
    return 1;
  }
  const int d = e[static_cast<std::size_t>(m)] - (layer_->rank - 1);
  if (d < 0 || d >= static_cast<int>(layer_->segre.size())) return 0;
  Exponents rest{};
  for (int i = 0; i < m; ++i) {
    const int r = base_dims_[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)];
    if (r < 0) return 0;
    rest[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r);
  }
  return layer_->segre[static_cast<std::size_t>(d)].coeff(rest);
}

SpacePtr make_base(const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) >= kMaxGenerators) throw ModelError("too many projective factors");
  auto out = std::make_shared<CohSpace>();
  for (int d : dims) {
    if (d < 0) throw ModelError("projective dimension must be non-negative");
  }
  out->base_dims_ = dims;
  out->base_dim_ = std::accumulate(dims.begin(), dims.end(), 0);
  out->dim_ = out->base_dim_;
  return out;
}

SpacePtr add_projective_bundle(const SpacePtr& space, const std::vector<CohElement>& roots) {
  if (space->layer()) throw ModelError("only one bundle layer is supported");
  if (roots.empty()) throw ModelError("projective bundle of a rank-0 bundle");
  for (const auto& r : roots) {
    if (!r.is_homogeneous(1)) throw DegreeMismatch("bundle roots must have degree 1");
  }
  auto out = std::make_shared<CohSpace>();
  out->base_dims_ = space->base_dims();
  out->base_dim_ = space->base_dim();
  out->dim_ = space->base_dim() + static_cast<int>(roots.size()) - 1;
  out->base_ = space;
  BundleLayer layer;
  layer.rank = static_cast<int>(roots.size());
  layer.roots = roots;
  // 1/(1+v) = sum_j (-v)^j
  xseries::Coeffs alternating(static_cast<std::size_t>(space->dim() + 1));
  for (std::size_t j = 0; j < alternating.size(); ++j) alternating[j] = (j % 2 == 0) ? 1 : -1;
  CohElement total = CohElement::constant(space, 1);
  for (const auto& r : roots) total = total * apply_series(r, alternating);
  for (int d = 0; d <= space->dim(); ++d) layer.segre.push_back(total.homogeneous_part(d));
  out->layer_ = std::move(layer);
  return out;
}

CohElement pushforward_power(const SpacePtr& bundle, int i) {
  const auto& layer = bundle->layer();
  if (!layer) throw ModelError("pushforward needs a bundle layer");
  const int d = i - (layer->rank - 1);
  if (d < 0 || d >= static_cast<int>(layer->segre.size())) return CohElement(bundle->base());
  return layer->segre[static_cast<std::size_t>(d)];
}

CohElement pull(const CohElement& x, const SpacePtr& target, const std::vector<int>& gen_map) {
  CohElement out(target);
  for (const auto& [e, c] : x.terms()) {
    Exponents moved{};
    for (std::size_t j = 0; j < gen_map.size(); ++j) {
      moved[static_cast<std::size_t>(gen_map[j])] = static_cast<std::uint8_t>(moved[static_cast<std::size_t>(gen_map[j])] + e[j]);
    }
    out.add_term(moved, c);
  }
  return out;
}

ProductSpace product_space(const SpacePtr& a, const SpacePtr& b) {
  if (a->layer() && b->layer()) throw ModelError("product of two spaces with bundle layers is not modeled");
  std::vector<int> dims = a->base_dims();
  dims.insert(dims.end(), b->base_dims().begin(), b->base_dims().end());
  const int ma = static_cast<int>(a->base_dims().size());
  const int mb = static_cast<int>(b->base_dims().size());
  const SpacePtr base = make_base(dims);
  std::vector<int> base_a(static_cast<std::size_t>(ma));
  std::iota(base_a.begin(), base_a.end(), 0);
  std::vector<int> base_b(static_cast<std::size_t>(mb));
  std::iota(base_b.begin(), base_b.end(), ma);

  ProductSpace out;
  out.space = base;
  if (a->layer() || b->layer()) {
    const bool on_a = static_cast<bool>(a->layer());
    const auto& layer = on_a ? *a->layer() : *b->layer();
    std::vector<CohElement> roots;
    for (const auto& r : layer.roots) roots.push_back(pull(r, base, on_a ? base_a : base_b));
    out.space = add_projective_bundle(base, roots);
  }
  const int u = ma + mb;
  out.map_a = base_a;
  out.map_b = base_b;
  if (a->layer()) out.map_a.push_back(u);
  if (b->layer()) out.map_b.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------
// CohElement

CohElement CohElement::constant(SpacePtr space, const Rational& c) {
  CohElement out(std::move(space));
  out.add_term(Exponents{}, c);
  return out;
}

CohElement CohElement::generator(SpacePtr space, int index, const Rational& c) {
  if (index < 0 || index >= space->num_generators()) throw ModelError("generator index out of range");
  CohElement out(std::move(space));
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  out.add_term(e, c);
  return out;
}

bool CohElement::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_) {
    if (degree(e) != d) return false;
  }
  return true;
}

CohElement CohElement::homogeneous_part(int d) const {
  CohElement out(space_);
  for (const auto& [e, c] : terms_) {
    if (degree(e) == d) out.terms_.emplace(e, c);
  }
  return out;
}

Rational CohElement::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CohElement::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (space_) {
    if (degree(e) > space_->dim()) return;
    for (int i = 0; i < space_->num_generators(); ++i) {
      if (e[static_cast<std::size_t>(i)] > space_->cap(i)) return;
    }
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohElement CohElement::operator-() const {
  CohElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CohElement& CohElement::operator+=(const CohElement& other) {
  if (!space_) space_ = other.space_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CohElement& CohElement::operator-=(const CohElement& other) {
  if (!space_) space_ = other.space_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CohElement& CohElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CohElement operator*(const CohElement& a, const CohElement& b) {
  CohElement out(a.space_ ? a.space_ : b.space_);
  Rational tmp;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(e, tmp);
    }
  }
  return out;
}

CohElement CohElement::pow(int e) const {
  CohElement result = constant(space_, 1);
  CohElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational CohElement::integrate() const {
  Rational out = 0;
  if (!space_) return out;
  for (const auto& [e, c] : terms_) {
    if (degree(e) != space_->dim()) continue;
    const Rational v = space_->integrate_monomial(e);
    if (v != 0) out += c * v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classes of roots

CohElement apply_series(const CohElement& x, const xseries::Coeffs& c) {
  CohElement out(x.space());
  CohElement power = CohElement::constant(x.space(), 1);
  const int dim = x.space()->dim();
  for (std::size_t j = 0; j < c.size() && static_cast<int>(j) <= dim; ++j) {
    if (j > 0) power = power * x;
    if (power.is_zero()) break;
    if (c[j] != 0) out += power * c[j];
  }
  return out;
}

CohElement char_class(const std::vector<CohElement>& roots_pos, const std::vector<CohElement>& roots_neg,
                      ClassKind kind, int dim) {
  SpacePtr space;
  for (const auto* list : {&roots_pos, &roots_neg}) {
    for (const auto& r : *list) {
      if (!space) space = r.space();
    }
  }
  if (!space) space = make_base({});
  auto truncate = [dim](const CohElement& x) {
    CohElement out(x.space());
    for (const auto& [e, c] : x.terms()) {
      if (degree(e) <= dim) out.add_term(e, c);
    }
    return out;
  };
  switch (kind) {
    case ClassKind::chern_character: {
      CohElement out(space);
      const xseries::Coeffs e = xseries::exp(1, dim);
      for (const auto& r : roots_pos) out += apply_series(r, e);
      for (const auto& r : roots_neg) out -= apply_series(r, e);
      return truncate(out);
    }
    case ClassKind::chern_total:
    case ClassKind::todd: {
      xseries::Coeffs f;
      if (kind == ClassKind::todd) {
        f = xseries::todd(dim);
      } else {
        f = {Rational(1), Rational(1)};
      }
      const xseries::Coeffs g = xseries::inverse(f, dim);
      CohElement out = CohElement::constant(space, 1);
      for (const auto& r : roots_pos) out = truncate(out * apply_series(r, f));
      for (const auto& r : roots_neg) out = truncate(out * apply_series(r, g));
      return out;
    }
  }
  return CohElement(space);
}

std::string to_string(const CohElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const int m = x.space() ? static_cast<int>(x.space()->base_dims().size()) : kMaxGenerators;
  const bool has_u = x.space() && x.space()->layer();
  for (const auto& [e, c] : x.terms()) {
    os << (first ? "" : " + ") << to_short_string(c);
    first = false;
    for (int i = 0; i < kMaxGenerators; ++i) {
      const int p = e[static_cast<std::size_t>(i)];
      if (p == 0) continue;
      os << "*" << ((has_u && i == m) ? std::string("u") : "h" + std::to_string(i + 1));
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

}  // namespace chernflop
