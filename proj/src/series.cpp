#include "chernflop/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chernflop {

namespace {

int shift_prec(int prec, int by) {
  if (prec == kExact || by == kExact) return kExact;
  return prec + by;
}

}  // namespace

// ---------------------------------------------------------------------------
// YLaurent

YLaurent::YLaurent(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

YLaurent YLaurent::monomial(Rational c, int exponent) {
  YLaurent out;
  if (c != 0) {
    out.low_ = exponent;
    out.coeffs_.push_back(std::move(c));
  }
  return out;
}

YLaurent YLaurent::zero(int prec) {
  YLaurent out;
  out.prec_ = prec;
  return out;
}

YLaurent YLaurent::from_coefficients(int low, std::vector<Rational> coeffs, int prec) {
  YLaurent out;
  out.low_ = low;
  out.coeffs_ = std::move(coeffs);
  out.prec_ = prec;
  out.normalize();
  return out;
}

void YLaurent::normalize() {
  if (prec_ != kExact) {
    const long keep = static_cast<long>(prec_) - low_;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

int YLaurent::valuation() const { return coeffs_.empty() ? prec_ : low_; }

int YLaurent::max_exponent() const {
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational YLaurent::coeff(int exponent) const {
  if (exponent >= prec_) {
    throw PrecisionError("y^" + std::to_string(exponent) + " lies beyond the known precision y^" +
                         std::to_string(prec_));
  }
  const long idx = static_cast<long>(exponent) - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

YLaurent YLaurent::operator-() const {
  YLaurent out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

YLaurent& YLaurent::operator+=(const YLaurent& other) {
  const int prec = std::min(prec_, other.prec_);
  if (other.coeffs_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    low_ = other.low_;
    coeffs_ = other.coeffs_;
    prec_ = prec;
    normalize();
    return *this;
  }
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(max_exponent(), other.max_exponent());
  std::vector<Rational> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    sum[i + static_cast<std::size_t>(other.low_ - lo)] += other.coeffs_[i];
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  prec_ = prec;
  normalize();
  return *this;
}

YLaurent& YLaurent::operator-=(const YLaurent& other) { return *this += -other; }

YLaurent operator*(const YLaurent& a, const YLaurent& b) {
  const int prec = std::min(shift_prec(a.prec_, b.valuation()), shift_prec(b.prec_, a.valuation()));
  YLaurent out;
  out.prec_ = prec;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
  out.low_ = a.low_ + b.low_;
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (prec != kExact) {
    const long keep = static_cast<long>(prec) - out.low_;
    if (keep <= 0) {
      out.low_ = 0;
      return out;
    }
    len = std::min(len, static_cast<std::size_t>(keep));
  }
  out.coeffs_.assign(len, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), len - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out.coeffs_[i + j] += tmp;
    }
  }
  out.normalize();
  return out;
}

YLaurent& YLaurent::operator*=(const YLaurent& other) {
  *this = *this * other;
  return *this;
}

YLaurent& YLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

YLaurent YLaurent::shifted(int s) const {
  YLaurent out = *this;
  if (!out.coeffs_.empty()) out.low_ += s;
  out.prec_ = shift_prec(prec_, s);
  return out;
}

YLaurent YLaurent::truncated(int prec) const {
  YLaurent out = *this;
  out.prec_ = std::min(prec_, prec);
  out.normalize();
  return out;
}

YLaurent YLaurent::inverse(int prec_cap) const {
  if (coeffs_.empty()) throw NotInvertible("inverse of a Laurent series that is zero on its known window");
  const int v = low_;
  if (is_exact() && coeffs_.size() == 1) return monomial(1 / coeffs_[0], -v);
  const int prec = is_exact() ? prec_cap : std::min(prec_cap, prec_ - 2 * v);
  if (prec == kExact) throw PrecisionError("inverse of a Laurent polynomial needs a finite precision cap");
  const long count = static_cast<long>(prec) + v;  // exponents -v .. prec-1
  YLaurent out;
  out.prec_ = prec;
  if (count <= 0) return out;
  out.low_ = -v;
  out.coeffs_.assign(static_cast<std::size_t>(count), Rational(0));
  const Rational lead_inv = 1 / coeffs_[0];
  out.coeffs_[0] = lead_inv;
  for (long j = 1; j < count; ++j) {
    Rational acc = 0;
    const long imax = std::min<long>(j, static_cast<long>(coeffs_.size()) - 1);
    for (long i = 1; i <= imax; ++i) acc += coeffs_[static_cast<std::size_t>(i)] * out.coeffs_[static_cast<std::size_t>(j - i)];
    out.coeffs_[static_cast<std::size_t>(j)] = -acc * lead_inv;
  }
  out.normalize();
  return out;
}

YLaurent YLaurent::negate_y() const {
  YLaurent out = *this;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if ((low_ + static_cast<long>(i)) % 2 != 0) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

YLaurent YLaurent::invert_y() const {
  if (!is_exact()) throw PrecisionError("y -> 1/y needs an exact Laurent polynomial");
  YLaurent out;
  if (coeffs_.empty()) return out;
  out.low_ = -max_exponent();
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return out;
}

Rational YLaurent::evaluate(const Rational& y) const {
  if (!is_exact()) throw PrecisionError("evaluation needs an exact Laurent polynomial");
  if (coeffs_.empty()) return 0;
  if (y == 0) {
    if (low_ < 0) throw std::domain_error("Laurent polynomial has a pole at y = 0");
    return low_ == 0 ? coeffs_[0] : Rational(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + *it;
  Rational base = 1;
  const Rational step = low_ >= 0 ? y : 1 / y;
  for (int i = 0; i < std::abs(low_); ++i) base *= step;
  return acc * base;
}

// ---------------------------------------------------------------------------
// GSeries

int Monomial::exponent(Var v) const {
  switch (v) {
    case Var::q: return q;
    case Var::k: return k;
    case Var::z: return z;
    case Var::t: return t;
    case Var::y: break;
  }
  throw std::invalid_argument("y is not a monomial variable");
}

GSeries GSeries::constant(const Rational& c, int q_prec) {
  GSeries out(q_prec);
  out.add_term({}, YLaurent(c));
  return out;
}

GSeries GSeries::term(const YLaurent& coeff, Monomial m, int q_prec) {
  GSeries out(q_prec);
  out.add_term(m, coeff);
  return out;
}

GSeries GSeries::variable(Var v, int q_prec) {
  if (v == Var::y) return term(YLaurent::monomial(1, 1), {}, q_prec);
  Monomial m;
  switch (v) {
    case Var::q: m.q = 1; break;
    case Var::k: m.k = 1; break;
    case Var::z: m.z = 1; break;
    case Var::t: m.t = 1; break;
    case Var::y: break;
  }
  return term(YLaurent(1), m, q_prec);
}

YLaurent GSeries::coeff(Monomial m) const {
  if (m.q >= q_prec_) {
    throw PrecisionError("q^" + std::to_string(m.q) + " lies beyond q-precision " + std::to_string(q_prec_));
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? YLaurent() : it->second;
}

void GSeries::add_term(Monomial m, const YLaurent& c) {
  if (m.q >= q_prec_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero() && it->second.is_exact()) terms_.erase(it);
}

void GSeries::erase_exact_zeros() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero() && kv.second.is_exact(); });
}

bool GSeries::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool GSeries::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

int GSeries::max_degree(Var v) const {
  int out = 0;
  for (const auto& [m, c] : terms_) {
    if (!c.is_zero()) out = std::max(out, m.exponent(v));
  }
  return out;
}

int GSeries::min_y_prec() const {
  int out = kExact;
  for (const auto& [m, c] : terms_) out = std::min(out, c.prec());
  return out;
}

GSeries GSeries::operator-() const {
  GSeries out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GSeries& GSeries::operator+=(const GSeries& other) {
  if (other.q_prec_ < q_prec_) *this = truncated_q(other.q_prec_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GSeries& GSeries::operator-=(const GSeries& other) {
  if (other.q_prec_ < q_prec_) *this = truncated_q(other.q_prec_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GSeries& GSeries::operator*=(const Rational& c) {
  for (auto& [m, v] : terms_) v *= c;
  erase_exact_zeros();
  return *this;
}

GSeries operator*(const GSeries& a, const GSeries& b) {
  GSeries out(std::min(a.q_prec_, b.q_prec_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Monomial m = ma + mb;
      if (m.q >= out.q_prec_) continue;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

GSeries GSeries::inverse(int y_cap, int poly_cap) const {
  const YLaurent c0 = terms_.count(Monomial{}) ? terms_.at(Monomial{}) : YLaurent();
  if (c0.is_zero()) throw NotInvertible("constant coefficient (q^0 k^0 z^0 t^0) is zero");
  const GSeries inv0 = term(c0.inverse(y_cap), {}, q_prec_);
  GSeries rest = *this;
  rest.terms_.erase(Monomial{});
  rest = rest * inv0;
  bool has_q = false;
  for (const auto& [m, c] : rest.terms_) has_q = has_q || m.q > 0;
  if (has_q && q_prec_ == kExact) throw PrecisionError("inverse of an untruncated q-series");
  const int rounds = (has_q ? q_prec_ - 1 : 0) + poly_cap;
  auto cap_poly = [poly_cap](GSeries& s) {
    std::erase_if(s.terms_, [poly_cap](const auto& kv) { return kv.first.poly_degree() > poly_cap; });
  };
  cap_poly(rest);
  const GSeries step = -rest;
  GSeries sum = constant(1, q_prec_);
  GSeries power = sum;
  for (int i = 0; i < rounds && !power.terms_.empty(); ++i) {
    power = power * step;
    cap_poly(power);
    sum += power;
  }
  return sum * inv0;
}

GSeries GSeries::pow(unsigned e) const {
  GSeries result = constant(1, q_prec_);
  GSeries base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

GSeries GSeries::truncated_q(int q_prec) const {
  GSeries out(std::min(q_prec_, q_prec));
  for (const auto& [m, c] : terms_) {
    if (m.q < out.q_prec_) out.terms_.emplace(m, c);
  }
  return out;
}

GSeries GSeries::clip_y(int hi) const {
  GSeries out(q_prec_);
  for (const auto& [m, c] : terms_) {
    if (c.is_exact() && (c.is_zero() || c.max_exponent() <= hi)) {
      out.terms_.emplace(m, c);
    } else {
      out.terms_.emplace(m, c.truncated(hi + 1));
    }
  }
  return out;
}

GSeries GSeries::negate_y() const {
  GSeries out = *this;
  for (auto& [m, c] : out.terms_) c = c.negate_y();
  return out;
}

GSeries GSeries::invert_y() const {
  GSeries out = *this;
  for (auto& [m, c] : out.terms_) c = c.invert_y();
  return out;
}

GSeries GSeries::coefficient_of(Var v, int e) const {
  if (v == Var::y) throw std::invalid_argument("coefficient_of does not extract y-exponents");
  int q_prec = q_prec_;
  if (v == Var::q) {
    if (e >= q_prec_) throw PrecisionError("q^" + std::to_string(e) + " lies beyond q-precision");
    q_prec = kExact;
  }
  GSeries out(q_prec);
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != e) continue;
    Monomial r = m;
    switch (v) {
      case Var::q: r.q = 0; break;
      case Var::k: r.k = 0; break;
      case Var::z: r.z = 0; break;
      case Var::t: r.t = 0; break;
      case Var::y: break;
    }
    out.terms_.emplace(r, c);
  }
  return out;
}

GSeries GSeries::times_power(Var v, int e) const {
  if (v == Var::y) {
    GSeries out = *this;
    for (auto& [m, c] : out.terms_) c = c.shifted(e);
    return out;
  }
  Monomial shift;
  switch (v) {
    case Var::q: shift.q = e; break;
    case Var::k: shift.k = e; break;
    case Var::z: shift.z = e; break;
    case Var::t: shift.t = e; break;
    case Var::y: break;
  }
  GSeries out(v == Var::q ? shift_prec(q_prec_, e) : q_prec_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m + shift, c);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_canonical_text(const GSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
      const Rational& v = c.coefficients()[i];
      if (v == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << to_fraction_string(v) << " * q^" << m.q << " k^" << m.k << " z^" << m.z << " t^" << m.t
         << " y^" << c.low() + static_cast<int>(i);
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::string pretty_monomial(const Rational& c, int ye, int ze, bool leading) {
  std::string vars;
  auto power = [](const char* name, int e) {
    if (e == 0) return std::string();
    if (e == 1) return std::string(name);
    return std::string(name) + "^" + std::to_string(e);
  };
  vars = power("y", ye) + power("z", ze);
  const Rational mag = abs(c);
  std::string body;
  if (vars.empty()) {
    body = to_short_string(mag);
  } else if (mag == 1) {
    body = vars;
  } else if (is_integer(mag)) {
    body = to_short_string(mag) + vars;
  } else {
    body = to_short_string(mag) + "*" + vars;
  }
  if (leading) return (c < 0 ? "-" : "") + body;
  return (c < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string to_pretty_text(const GSeries& s) {
  if (s.terms().empty()) return "0";
  int t_degree = -1;
  std::map<std::pair<int, int>, Rational> poly;  // (y, z) -> coeff
  for (const auto& [m, c] : s.terms()) {
    if (m.q != 0 || m.k != 0 || !c.is_exact()) return to_canonical_text(s);
    if (c.is_zero()) continue;
    if (t_degree >= 0 && m.t != t_degree) return to_canonical_text(s);
    t_degree = m.t;
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
      if (c.coefficients()[i] != 0) poly[{c.low() + static_cast<int>(i), m.z}] += c.coefficients()[i];
    }
  }
  if (poly.empty()) return "0";
  std::string body;
  bool leading = true;
  for (const auto& [exps, c] : poly) {
    body += pretty_monomial(c, exps.first, exps.second, leading);
    leading = false;
  }
  if (t_degree == 0) return body;
  const std::string t = t_degree == 1 ? "t" : "t^" + std::to_string(t_degree);
  return t + "*(" + body + ")";
}

nlohmann::json to_json(const GSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  nlohmann::json precs = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
      const Rational& v = c.coefficients()[i];
      if (v == 0) continue;
      terms.push_back({{"q", std::to_string(m.q)},
                       {"k", std::to_string(m.k)},
                       {"z", std::to_string(m.z)},
                       {"t", std::to_string(m.t)},
                       {"y", std::to_string(c.low() + static_cast<int>(i))},
                       {"coeff", to_fraction_string(v)}});
    }
    if (!c.is_exact()) {
      precs.push_back({{"q", std::to_string(m.q)},
                       {"k", std::to_string(m.k)},
                       {"z", std::to_string(m.z)},
                       {"t", std::to_string(m.t)},
                       {"y_prec", std::to_string(c.prec())}});
    }
  }
  return {{"q_prec", s.q_prec() == kExact ? std::string("exact") : std::to_string(s.q_prec())},
          {"terms", terms},
          {"y_prec", precs}};
}

GSeries gseries_from_json(const nlohmann::json& j) {
  const std::string qp = j.at("q_prec").get<std::string>();
  GSeries out(qp == "exact" ? kExact : std::stoi(qp));
  auto mono = [](const nlohmann::json& e) {
    return Monomial{std::stoi(e.at("q").get<std::string>()), std::stoi(e.at("k").get<std::string>()),
                    std::stoi(e.at("z").get<std::string>()), std::stoi(e.at("t").get<std::string>())};
  };
  std::map<Monomial, int> precs;
  for (const auto& e : j.at("y_prec")) precs[mono(e)] = std::stoi(e.at("y_prec").get<std::string>());
  std::map<Monomial, YLaurent> coeffs;
  for (const auto& [m, p] : precs) coeffs[m] = YLaurent::zero(p);
  for (const auto& e : j.at("terms")) {
    const Monomial m = mono(e);
    Rational c(e.at("coeff").get<std::string>());
    c.canonicalize();
    auto it = coeffs.try_emplace(m, YLaurent()).first;
    it->second += YLaurent::monomial(c, std::stoi(e.at("y").get<std::string>()));
  }
  for (const auto& [m, c] : coeffs) out.add_term(m, c);
  return out;
}

}  // namespace chernflop
