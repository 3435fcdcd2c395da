#include "m21/polynomial.hpp"

#include <algorithm>

#include "m21/error.hpp"

namespace m21 {

int default_cmp(const GradedRingSpec& ring, const Monomial& a, const Monomial& b) {
  static const MonomialOrder kOrder = MonomialOrder::wdegrevlex();
  return kOrder.compare(ring, a, b);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    fail(Errc::RingMismatch, "operands live in different rings (" + a.ring()->str() +
                                 " vs " + b.ring()->str() + ")");
}

Polynomial Polynomial::zero(Ring ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(Ring ring, const mpq_class& value) {
  size_t n = ring->nvars();
  return term(std::move(ring), value, Monomial::one(n));
}

Polynomial Polynomial::variable(Ring ring, size_t index) {
  Monomial m = Monomial::one(ring->nvars());
  m.e[index] = 1;
  return term(std::move(ring), 1, std::move(m));
}

Polynomial Polynomial::term(Ring ring, const mpq_class& coeff, Monomial m) {
  std::vector<Term> ts;
  if (coeff != 0) ts.push_back(Term{std::move(m), coeff});
  return from_terms(std::move(ring), std::move(ts));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const GradedRingSpec& R = *ring;
  for (auto& t : terms) {
    if (t.m.size() != R.nvars())
      fail(Errc::RingMismatch, "monomial length does not match variable count");
    t.c.canonicalize();
  }
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return default_cmp(R, a.m, b.m) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.c == 0; });
  if (R.domain() == Domain::Integers) {
    for (const auto& t : out)
      if (t.c.get_den() != 1)
        fail(Errc::RationalInIntegerRing,
             "coefficient " + t.c.get_str() + " is not an integer");
  }
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  const GradedRingSpec& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = default_cmp(R, terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      mpq_class s = terms_[i].c + o.terms_[j].c;
      if (s != 0) out.push_back(Term{terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial p;
  p.ring_ = ring_;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back(Term{a.m * b.m, a.c * b.c});
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const mpq_class& k) const {
  if (k == 0) return zero(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.c *= k;
  if (ring_->domain() == Domain::Integers)
    for (const auto& t : p.terms_)
      if (t.c.get_den() != 1)
        fail(Errc::RationalInIntegerRing, "scaling left the integer ring");
  return p;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.m = t.m * m;
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial acc = constant(ring_, 1);
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

Polynomial::DegreeInfo Polynomial::weighted_degree() const {
  DegreeInfo info;
  if (terms_.empty()) {
    info.zero = true;
    return info;
  }
  const GradedRingSpec& R = *ring_;
  long maxd = terms_.front().m.weighted_degree(R);
  bool homog = true;
  for (const auto& t : terms_) {
    long d = t.m.weighted_degree(R);
    if (d != maxd) {
      homog = false;
      maxd = std::max(maxd, d);
    }
  }
  info.degree = maxd;
  info.homogeneous = homog;
  return info;
}

bool Polynomial::homogeneous_of(long d) const {
  auto info = weighted_degree();
  if (info.zero) return true; // zero is homogeneous of every degree
  return info.homogeneous && info.degree == d;
}

std::vector<std::pair<long, Polynomial>> Polynomial::homogeneous_components() const {
  const GradedRingSpec& R = *ring_;
  std::vector<std::pair<long, std::vector<Term>>> buckets;
  for (const auto& t : terms_) {
    long d = t.m.weighted_degree(R);
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [d](const auto& b) { return b.first == d; });
    if (it == buckets.end()) {
      buckets.push_back({d, {t}});
    } else {
      it->second.push_back(t);
    }
  }
  std::sort(buckets.begin(), buckets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<long, Polynomial>> out;
  for (auto& [d, ts] : buckets) out.emplace_back(d, from_terms(ring_, std::move(ts)));
  return out;
}

namespace {

void append_monomial(std::string& s, const GradedRingSpec& R, const Monomial& m) {
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) s += '*';
    first = false;
    s += R.var_name(i);
    if (m.e[i] > 1) {
      s += '^';
      s += std::to_string(m.e[i]);
    }
  }
}

} // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const GradedRingSpec& R = *ring_;
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    mpq_class c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (k == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? '-' : '+';
    }
    if (t.m.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) {
        s += c.get_str();
        s += '*';
      }
      append_monomial(s, R, t.m);
    }
  }
  return s;
}

Polynomial substitute(const Polynomial& p, const Ring& target,
                      const std::vector<Polynomial>& images) {
  if (images.size() != p.ring()->nvars())
    fail(Errc::RingMismatch, "substitution image count does not match variable count");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target))
      fail(Errc::RingMismatch, "substitution image lives in the wrong ring");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (size_t i = 0; i < images.size(); ++i) {
      int e = t.m.e[i];
      if (e > 0) prod = prod * images[i].pow(static_cast<unsigned>(e));
    }
    acc = acc + prod;
  }
  return acc;
}

} // namespace m21
