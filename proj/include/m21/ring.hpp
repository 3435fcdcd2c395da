#ifndef M21_RING_HPP
#define M21_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace m21 {

enum class Domain { Integers, Rationals };

struct VarDecl {
  std::string name;
  int weight = 1;
  bool operator==(const VarDecl&) const = default;
};

/// A polynomial ring over Z or Q with named variables carrying positive
/// integer grading weights. Immutable after construction.
class GradedRingSpec {
public:
  GradedRingSpec(Domain domain, std::vector<VarDecl> vars);

  /// Parses "Z[l1:1,l2:2]" / "Q[psi1:1]". A missing ":w" defaults to weight 1.
  static GradedRingSpec parse(std::string_view text);

  Domain domain() const { return domain_; }
  size_t nvars() const { return vars_.size(); }
  const std::vector<VarDecl>& vars() const { return vars_; }
  const std::string& var_name(size_t i) const { return vars_[i].name; }
  int weight(size_t i) const { return vars_[i].weight; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<size_t> index_of(std::string_view name) const;

  std::string str() const;

  bool operator==(const GradedRingSpec& o) const {
    return domain_ == o.domain_ && vars_ == o.vars_;
  }

private:
  Domain domain_;
  std::vector<VarDecl> vars_;
  std::vector<int> weights_;
  std::unordered_map<std::string, size_t> index_;
};

using Ring = std::shared_ptr<const GradedRingSpec>;

Ring make_ring(Domain domain, std::vector<VarDecl> vars);
Ring parse_ring(std::string_view text);

inline bool same_ring(const Ring& a, const Ring& b) {
  return a == b || (a && b && *a == *b);
}

bool valid_var_name(std::string_view name);

/// A monomial is an exponent vector of the ring's length.
struct Monomial {
  std::vector<int> e;

  static Monomial one(size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

  size_t size() const { return e.size(); }
  bool is_one() const;
  long weighted_degree(const GradedRingSpec& ring) const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Quotient this / o; caller must ensure divisibility.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
};

/// Admissible monomial orders: weighted degrevlex, and block (elimination)
/// orders comparing a leading group of variables first.
class MonomialOrder {
public:
  static MonomialOrder wdegrevlex();
  static MonomialOrder block(size_t split, MonomialOrder outer, MonomialOrder inner);
  /// Eliminates the first `split` variables: block(split, wdegrevlex, wdegrevlex).
  static MonomialOrder elimination(size_t split);

  bool is_block() const { return block_ != nullptr; }
  size_t split() const;

  /// Three-way compare of a, b under this order; weights taken from `ring`.
  int compare(const GradedRingSpec& ring, const Monomial& a, const Monomial& b) const;

  std::string str() const;

private:
  struct Block;
  std::shared_ptr<const Block> block_; // null means plain wdegrevlex

  int compare_span(const int* a, const int* b, const int* w, size_t n) const;
};

} // namespace m21

#endif
