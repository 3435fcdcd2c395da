#include "m21/ring.hpp"

#include <algorithm>
#include <cctype>

#include "m21/error.hpp"

namespace m21 {

bool valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

GradedRingSpec::GradedRingSpec(Domain domain, std::vector<VarDecl> vars)
    : domain_(domain), vars_(std::move(vars)) {
  weights_.reserve(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (!valid_var_name(v.name))
      fail(Errc::ParseError, "invalid variable name '" + v.name + "'");
    if (v.weight < 1)
      fail(Errc::ParseError, "variable '" + v.name + "' has non-positive weight");
    if (index_.count(v.name))
      fail(Errc::ParseError, "duplicate variable '" + v.name + "'");
    index_.emplace(v.name, i);
    weights_.push_back(v.weight);
  }
}

std::optional<size_t> GradedRingSpec::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GradedRingSpec GradedRingSpec::parse(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) fail(Errc::ParseError, "empty ring spec");
  Domain dom;
  if (text[i] == 'Z')
    dom = Domain::Integers;
  else if (text[i] == 'Q')
    dom = Domain::Rationals;
  else
    fail(Errc::ParseError, "ring spec must start with Z or Q");
  ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail(Errc::ParseError, "expected '[' in ring spec");
  ++i;
  std::vector<VarDecl> vars;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      if (start == i) fail(Errc::ParseError, "expected variable name in ring spec");
      VarDecl d;
      d.name = std::string(text.substr(start, i - start));
      skip_ws();
      if (i < text.size() && text[i] == ':') {
        ++i;
        skip_ws();
        size_t ws = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (ws == i) fail(Errc::ParseError, "expected weight after ':' in ring spec");
        d.weight = std::stoi(std::string(text.substr(ws, i - ws)));
      } else {
        d.weight = 1;
      }
      vars.push_back(std::move(d));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail(Errc::ParseError, "expected ',' or ']' in ring spec");
    }
  }
  skip_ws();
  if (i != text.size()) fail(Errc::ParseError, "trailing input after ring spec");
  return GradedRingSpec(dom, std::move(vars));
}

std::string GradedRingSpec::str() const {
  std::string s = domain_ == Domain::Integers ? "Z[" : "Q[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ',';
    s += vars_[i].name;
    s += ':';
    s += std::to_string(vars_[i].weight);
  }
  s += ']';
  return s;
}

Ring make_ring(Domain domain, std::vector<VarDecl> vars) {
  return std::make_shared<GradedRingSpec>(domain, std::move(vars));
}

Ring parse_ring(std::string_view text) {
  return std::make_shared<GradedRingSpec>(GradedRingSpec::parse(text));
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

long Monomial::weighted_degree(const GradedRingSpec& ring) const {
  long d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * ring.weight(i);
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

struct MonomialOrder::Block {
  size_t split;
  MonomialOrder outer, inner;
};

MonomialOrder MonomialOrder::wdegrevlex() { return MonomialOrder(); }

MonomialOrder MonomialOrder::block(size_t split, MonomialOrder outer, MonomialOrder inner) {
  MonomialOrder o;
  o.block_ = std::make_shared<Block>(Block{split, std::move(outer), std::move(inner)});
  return o;
}

MonomialOrder MonomialOrder::elimination(size_t split) {
  return block(split, wdegrevlex(), wdegrevlex());
}

size_t MonomialOrder::split() const { return block_ ? block_->split : 0; }

int MonomialOrder::compare_span(const int* a, const int* b, const int* w, size_t n) const {
  if (!block_) {
    long da = 0, db = 0;
    for (size_t i = 0; i < n; ++i) {
      da += static_cast<long>(a[i]) * w[i];
      db += static_cast<long>(b[i]) * w[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // revlex tie-break: last differing exponent, smaller exponent wins
    for (size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  size_t k = std::min(block_->split, n);
  if (int c = block_->outer.compare_span(a, b, w, k)) return c;
  return block_->inner.compare_span(a + k, b + k, w + k, n - k);
}

int MonomialOrder::compare(const GradedRingSpec& ring, const Monomial& a,
                           const Monomial& b) const {
  return compare_span(a.e.data(), b.e.data(), ring.weights().data(), ring.nvars());
}

std::string MonomialOrder::str() const {
  if (!block_) return "grevlex";
  return "elim:" + std::to_string(block_->split);
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RingMismatch: return "RING_MISMATCH";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::UnknownVariable: return "UNKNOWN_VARIABLE";
    case Errc::RationalInIntegerRing: return "RATIONAL_IN_INTEGER_RING";
    case Errc::ZeroPoly: return "ZERO_POLY";
    case Errc::DegreeMismatch: return "DEGREE_MISMATCH";
    case Errc::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Errc::DivisionFailure: return "DIVISION_FAILURE";
    case Errc::InhomogeneousIdeal: return "INHOMOGENEOUS_IDEAL";
    case Errc::PreconditionNzd: return "PRECONDITION_NZD";
    case Errc::NotReducible: return "NOT_REDUCIBLE";
    case Errc::LiftFailure: return "LIFT_FAILURE";
    case Errc::UnresolvedName: return "UNRESOLVED_NAME";
    case Errc::TypeMismatch: return "TYPE_MISMATCH";
    case Errc::Usage: return "USAGE_ERROR";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

} // namespace m21
