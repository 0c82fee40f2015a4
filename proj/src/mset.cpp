#include "lambda_orders/mset.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace lambda_orders {

MSet MSet::make(Level level, std::vector<std::vector<int>> table) {
  long r = level.value();
  if ((long)table.size() != r)
    throw mset_error(mset_error::Kind::bad_table,
                     "action table must have exactly r rows");
  long n = r > 0 ? (long)table[0].size() : 0;
  for (const auto& row : table) {
    if ((long)row.size() != n)
      throw mset_error(mset_error::Kind::bad_table, "ragged action table");
    for (int v : row)
      if (v < 0 || v >= n)
        throw mset_error(mset_error::Kind::bad_table, "table entry out of range");
  }
  long one = mod_l(1, r);  // the monoid identity; 0 when r = 1
  for (int s = 0; s < n; ++s)
    if (table[one][s] != s)
      throw mset_error(mset_error::Kind::identity_axiom,
                       "identity axiom violated at point " + std::to_string(s));
  for (long a = 0; a < r; ++a)
    for (long b = 0; b < r; ++b) {
      long ab = mod_l(a * b, r);
      for (int s = 0; s < n; ++s)
        if (table[a][table[b][s]] != table[ab][s])
          throw mset_error(mset_error::Kind::associativity,
                           "associativity violated at (a,b,s)=(" + std::to_string(a) +
                               "," + std::to_string(b) + "," + std::to_string(s) + ")");
    }
  return MSet(r, n, std::move(table));
}

MSet MSet::regular(Level level) {
  long r = level.value();
  std::vector<std::vector<int>> table(r, std::vector<int>(r));
  for (long a = 0; a < r; ++a)
    for (long s = 0; s < r; ++s) table[a][s] = (int)mod_l(a * s, r);
  return MSet(r, r, std::move(table));
}

MSet MSet::trivial(Level level, long n) {
  long r = level.value();
  std::vector<std::vector<int>> table(r, std::vector<int>(n));
  for (long a = 0; a < r; ++a)
    for (long s = 0; s < n; ++s) table[a][s] = (int)s;
  return MSet(r, n, std::move(table));
}

MSet MSet::lift_to_level(long m) const {
  if (m % r_ != 0)
    throw mset_error(mset_error::Kind::bad_level,
                     "lift_to_level: target level must be a multiple of the level");
  std::vector<std::vector<int>> table(m);
  for (long a = 0; a < m; ++a) table[a] = table_[mod_l(a, r_)];
  return MSet(m, n_, std::move(table));
}

std::pair<Level, MSet> MSet::minimal_level() const {
  for (long d : divisors(r_)) {
    bool constant = true;
    for (long a = 0; a < r_ && constant; ++a)
      if (table_[a] != table_[mod_l(a, d)]) constant = false;
    if (!constant) continue;
    std::vector<std::vector<int>> table(d);
    for (long a = 0; a < d; ++a) table[a] = table_[a];
    // constancy on residue classes of a divisor preserves the axioms
    return {Level(d), MSet::make(Level(d), std::move(table))};
  }
  return {Level(r_), *this};  // unreachable, d = r always works
}

std::vector<int> MSet::zero_image() const {
  std::set<int> img(table_[0].begin(), table_[0].end());
  return std::vector<int>(img.begin(), img.end());
}

std::vector<int> MSet::psi_minus_one() const { return table_[mod_l(r_ - 1, r_)]; }

MSet::UnitOrbits MSet::unit_orbits() const {
  UnitOrbits out;
  std::vector<long> units = units_mod(r_);
  out.orbit_of.assign(n_, -1);
  out.unit_witness.assign(n_, mod_l(1, r_));
  for (int s = 0; s < n_; ++s) {
    if (out.orbit_of[s] >= 0) continue;
    int o = (int)out.orbits.size();
    // s is the smallest element of its orbit: smaller points were all visited
    std::vector<int> orbit;
    std::vector<int> stack{s};
    out.orbit_of[s] = o;
    out.unit_witness[s] = mod_l(1, r_);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      orbit.push_back(x);
      for (long u : units) {
        int y = table_[u][x];
        if (out.orbit_of[y] >= 0) continue;
        out.orbit_of[y] = o;
        out.unit_witness[y] = mod_l(u * out.unit_witness[x], r_);
        stack.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.rep.push_back(orbit.front());
    out.orbits.push_back(std::move(orbit));
  }
  out.stabilizer.resize(out.orbits.size());
  for (size_t o = 0; o < out.orbits.size(); ++o) {
    for (long u : units)
      if (table_[u][out.rep[o]] == out.rep[o]) out.stabilizer[o].push_back(u);
  }
  return out;
}

namespace {

bool extend_isomorphism(const MSet& a, const MSet& b, std::vector<int>& map,
                        std::vector<bool>& used, int s) {
  long n = a.size();
  if (s == n) return true;
  if (map[s] >= 0) return extend_isomorphism(a, b, map, used, s + 1);
  for (int t = 0; t < n; ++t) {
    if (used[t]) continue;
    // tentatively map s -> t and propagate along the action
    std::vector<std::pair<int, int>> assigned;
    bool ok = true;
    std::vector<std::pair<int, int>> queue{{s, t}};
    while (ok && !queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (map[x] >= 0) {
        if (map[x] != y) ok = false;
        continue;
      }
      if (used[y]) {
        ok = false;
        continue;
      }
      map[x] = y;
      used[y] = true;
      assigned.push_back({x, y});
      for (long u = 0; u < a.level(); ++u) queue.push_back({a.act(u, x), b.act(u, y)});
    }
    if (ok && extend_isomorphism(a, b, map, used, s + 1)) return true;
    for (auto [x, y] : assigned) {
      map[x] = -1;
      used[y] = false;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> MSet::isomorphism(const MSet& other) const {
  long common = lcm_l(r_, other.r_);
  MSet a = lift_to_level(common);
  MSet b = other.lift_to_level(common);
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  if (extend_isomorphism(a, b, map, used, 0)) return map;
  return std::nullopt;
}

MSetMap MSetMap::make(MSet source, MSet target, std::vector<int> values) {
  long common = lcm_l(source.level(), target.level());
  MSet s = source.lift_to_level(common);
  MSet t = target.lift_to_level(common);
  if ((long)values.size() != s.size())
    throw mset_error(mset_error::Kind::bad_table, "map values size mismatch");
  for (int v : values)
    if (v < 0 || v >= t.size())
      throw mset_error(mset_error::Kind::bad_table, "map value out of range");
  for (long a = 0; a < common; ++a)
    for (int x = 0; x < s.size(); ++x)
      if (values[s.act(a, x)] != t.act(a, values[x]))
        throw mset_error(mset_error::Kind::not_equivariant,
                         "map is not equivariant at (a,s)=(" + std::to_string(a) + "," +
                             std::to_string(x) + ")");
  return MSetMap(std::move(s), std::move(t), std::move(values));
}

bool MSetMap::surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (int v : values_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

MSet mset_product(const MSet& s0, const MSet& t0) {
  long common = lcm_l(s0.level(), t0.level());
  MSet s = s0.lift_to_level(common);
  MSet t = t0.lift_to_level(common);
  long n = s.size() * t.size();
  std::vector<std::vector<int>> table(common, std::vector<int>(n));
  for (long a = 0; a < common; ++a)
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < t.size(); ++y)
        table[a][product_index(x, y, t.size())] =
            product_index(s.act(a, x), t.act(a, y), t.size());
  return MSet::make(Level(common), std::move(table));
}

MSet mset_coproduct(const MSet& s0, const MSet& t0) {
  long common = lcm_l(s0.level(), t0.level());
  MSet s = s0.lift_to_level(common);
  MSet t = t0.lift_to_level(common);
  long n = s.size() + t.size();
  std::vector<std::vector<int>> table(common, std::vector<int>(n));
  for (long a = 0; a < common; ++a) {
    for (int x = 0; x < s.size(); ++x) table[a][x] = s.act(a, x);
    for (int y = 0; y < t.size(); ++y) table[a][s.size() + y] = s.size() + t.act(a, y);
  }
  return MSet::make(Level(common), std::move(table));
}

ImageFactorization mset_image(const MSetMap& f) {
  const MSet& t = f.target();
  std::set<int> img_set(f.values().begin(), f.values().end());
  std::vector<int> img(img_set.begin(), img_set.end());
  std::vector<int> index_in_img(t.size(), -1);
  for (size_t i = 0; i < img.size(); ++i) index_in_img[img[i]] = (int)i;
  long r = t.level();
  std::vector<std::vector<int>> table(r, std::vector<int>(img.size()));
  for (long a = 0; a < r; ++a)
    for (size_t i = 0; i < img.size(); ++i) {
      int y = t.act(a, img[i]);
      assert(index_in_img[y] >= 0);  // image of an equivariant map is action-closed
      table[a][i] = index_in_img[y];
    }
  MSet image = MSet::make(Level(r), std::move(table));
  std::vector<int> onto_values(f.source().size());
  for (int x = 0; x < f.source().size(); ++x) onto_values[x] = index_in_img[f.values()[x]];
  MSetMap onto = MSetMap::make(f.source(), image, std::move(onto_values));
  MSetMap incl = MSetMap::make(image, t, img);
  return {std::move(image), std::move(onto), std::move(incl)};
}

}  // namespace lambda_orders
