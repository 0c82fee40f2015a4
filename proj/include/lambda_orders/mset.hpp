#ifndef LAMBDA_ORDERS_MSET_HPP
#define LAMBDA_ORDERS_MSET_HPP

#include "lambda_orders/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_orders {

// Finite sets with an action of the multiplicative monoid Z/r.  Elements are
// indexed 0..n-1; the action table has r rows (one per residue) and n columns.

class mset_error : public std::runtime_error {
 public:
  enum class Kind {
    identity_axiom,
    associativity,
    level_mismatch,
    bad_table,
    not_equivariant,
    bad_level,
  };
  mset_error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
  Kind kind;
};

class Level {
 public:
  explicit Level(long r) : r_(r) {
    if (r < 1) throw mset_error(mset_error::Kind::bad_level, "level must be >= 1");
  }
  long value() const { return r_; }
  friend bool operator==(Level a, Level b) { return a.r_ == b.r_; }

 private:
  long r_;
};

class MSet {
 public:
  // validates the monoid action axioms; throws mset_error
  static MSet make(Level level, std::vector<std::vector<int>> table);

  // the free M-set on one generator: Z/r acting on itself by multiplication
  static MSet regular(Level level);

  // n points, every residue acting as the identity
  static MSet trivial(Level level, long n);

  long level() const { return r_; }
  long size() const { return n_; }
  int act(long a, int s) const { return table_[mod_l(a, r_)][s]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  // view this r-set as an m-set for any multiple m of r
  MSet lift_to_level(long m) const;

  // smallest divisor level the table factors through, with the reduced table
  std::pair<Level, MSet> minimal_level() const;

  std::vector<int> zero_image() const;      // the subset 0S, sorted
  std::vector<int> psi_minus_one() const;   // the involution action(r-1, .)

  // action of (Z/r)^* split into orbits; orbits sorted by smallest element
  struct UnitOrbits {
    std::vector<std::vector<int>> orbits;  // each sorted increasing
    std::vector<int> rep;                  // orbit -> smallest element
    std::vector<int> orbit_of;             // point -> orbit index
    std::vector<long> unit_witness;        // point s -> unit u with s = u*rep
    std::vector<std::vector<long>> stabilizer;  // orbit -> sorted unit subgroup
  };
  UnitOrbits unit_orbits() const;

  // index bijection S -> other commuting with the action, if one exists
  std::optional<std::vector<int>> isomorphism(const MSet& other) const;
  bool isomorphic(const MSet& other) const { return isomorphism(other).has_value(); }

  friend bool operator==(const MSet& a, const MSet& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  MSet(long r, long n, std::vector<std::vector<int>> table)
      : r_(r), n_(n), table_(std::move(table)) {}
  long r_;
  long n_;
  std::vector<std::vector<int>> table_;  // table_[a][s]
};

// morphism of M-sets; source and target are lifted to a common level
class MSetMap {
 public:
  static MSetMap make(MSet source, MSet target, std::vector<int> values);

  const MSet& source() const { return source_; }
  const MSet& target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  bool surjective() const;

 private:
  MSetMap(MSet s, MSet t, std::vector<int> v)
      : source_(std::move(s)), target_(std::move(t)), values_(std::move(v)) {}
  MSet source_;
  MSet target_;
  std::vector<int> values_;
};

struct ImageFactorization {
  MSet image;
  MSetMap onto;      // source ->> image
  MSetMap inclusion; // image >-> target
};

MSet mset_product(const MSet& s, const MSet& t);    // diagonal action, size |S||T|
MSet mset_coproduct(const MSet& s, const MSet& t);  // disjoint union
ImageFactorization mset_image(const MSetMap& f);

// pair index helpers for product elements: index = s * |T| + t
inline int product_index(int s, int t, long t_size) { return int(s * t_size + t); }

}  // namespace lambda_orders

#endif
