#include "brouwerlab/order.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "brouwerlab/error.hpp"

namespace brouwerlab {

namespace {

void check_carrier(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "carrier must be nonempty");
  if (n > kMaxCarrier)
    throw Error(ErrorKind::CapExceeded,
                "carrier of " + std::to_string(n) + " elements exceeds " + std::to_string(kMaxCarrier),
                {static_cast<std::int64_t>(n)});
}

std::vector<Mask> transpose(const std::vector<Mask>& rows) {
  std::vector<Mask> cols(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (has(rows[i], j)) cols[j] |= bit(i);
  return cols;
}

}  // namespace

Relation Relation::identity(std::size_t n) {
  check_carrier(n);
  Relation r{n, std::vector<Mask>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) r.rows[i] = bit(i);
  return r;
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r = identity(n);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n)
      throw Error(ErrorKind::BadInput, "pair index out of range",
                  {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
    r.rows[i] |= bit(j);
  }
  return r;
}

Relation Relation::from_matrix(const std::vector<std::vector<bool>>& matrix) {
  const std::size_t n = matrix.size();
  check_carrier(n);
  Relation r{n, std::vector<Mask>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n)
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has wrong length",
                  {static_cast<std::int64_t>(i)});
    for (std::size_t j = 0; j < n; ++j)
      if (matrix[i][j]) r.rows[i] |= bit(j);
  }
  return r;
}

Preorder Preorder::validate(const Relation& r, std::vector<std::string> labels) {
  check_carrier(r.size);
  if (r.rows.size() != r.size) throw Error(ErrorKind::NotSquare, "row count differs from size");
  if (!labels.empty() && labels.size() != r.size)
    throw Error(ErrorKind::BadInput, "label count differs from size");
  const std::size_t n = r.size;
  for (std::size_t i = 0; i < n; ++i) {
    if (r.rows[i] & ~full_mask(n)) throw Error(ErrorKind::NotSquare, "row has entries past size");
    if (!r.contains(i, i))
      throw Error(ErrorKind::NotReflexive, "missing (" + std::to_string(i) + "," + std::to_string(i) + ")",
                  {static_cast<std::int64_t>(i)});
  }
  // First (i, j, k) in lexicographic order with i<=j, j<=k, not i<=k.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r.contains(i, j)) continue;
      const Mask missing = r.rows[j] & ~r.rows[i];
      if (missing) {
        const auto k = static_cast<std::size_t>(std::countr_zero(missing));
        throw Error(ErrorKind::NotTransitive,
                    "(" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(j) + "," +
                        std::to_string(k) + ") without (" + std::to_string(i) + "," + std::to_string(k) + ")",
                    {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)});
      }
    }
  Preorder p;
  p.up_ = r.rows;
  p.down_ = transpose(r.rows);
  p.labels_ = std::move(labels);
  return p;
}

std::string Preorder::label(std::size_t i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

std::string Preorder::mask_label(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has(m, i)) continue;
    if (!first) out += ",";
    out += label(i);
    first = false;
  }
  return out + "}";
}

bool Preorder::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((up_[i] & down_[i]) != bit(i)) return false;
  return true;
}

Mask Preorder::maximal() const {
  Mask out = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if ((up_[i] & ~down_[i]) == 0) out |= bit(i);
  return out;
}

Mask Preorder::minimal() const {
  Mask out = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if ((down_[i] & ~up_[i]) == 0) out |= bit(i);
  return out;
}

Preorder Preorder::restrict(Mask keep) const {
  keep &= carrier();
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < size(); ++i)
    if (has(keep, i)) members.push_back(i);
  Relation r{members.size(), std::vector<Mask>(members.size(), 0)};
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b)
      if (leq(members[a], members[b])) r.rows[a] |= bit(b);
    labels.push_back(label(members[a]));
  }
  return Preorder::validate(r, std::move(labels));
}

Poset Poset::from_preorder(Preorder p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.equivalent(i, j))
        throw Error(ErrorKind::NotAntisymmetric,
                    std::to_string(i) + " and " + std::to_string(j) + " are mutually below each other",
                    {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
  Poset out;
  static_cast<Preorder&>(out) = std::move(p);
  return out;
}

Poset Poset::validate(const Relation& r, std::vector<std::string> labels) {
  return from_preorder(Preorder::validate(r, std::move(labels)));
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < size(); ++i) {
    const Mask above = up_[i] & ~bit(i);
    for (std::size_t j = 0; j < size(); ++j) {
      if (!has(above, j)) continue;
      // j covers i when no k strictly above i sits strictly below j
      const Mask between = above & down_[j] & ~bit(j);
      if (!between) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::size_t> Poset::top_down_order() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  // x < y implies up(y) is a proper subset of up(x)
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return popcount(up_[a]) < popcount(up_[b]); });
  return order;
}

std::size_t Poset::height(std::size_t i) const {
  std::vector<std::size_t> h(size(), 0);
  auto order = top_down_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    for (std::size_t y = 0; y < size(); ++y)
      if (y != x && leq(y, x)) h[x] = std::max(h[x], h[y] + 1);
  }
  return h[i];
}

std::size_t Poset::depth(std::size_t i) const {
  std::vector<std::size_t> d(size(), 0);
  for (std::size_t x : top_down_order())
    for (std::size_t y = 0; y < size(); ++y)
      if (y != x && leq(x, y)) d[x] = std::max(d[x], d[y] + 1);
  return d[i];
}

Poset Poset::restrict(Mask keep) const { return from_preorder(Preorder::restrict(keep)); }

Quotient quotient_to_poset(const Preorder& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> class_of(n, n);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != n) continue;
    const std::size_t c = representative.size();
    representative.push_back(i);
    for (std::size_t j = i; j < n; ++j)
      if (p.equivalent(i, j)) class_of[j] = c;
  }
  const std::size_t m = representative.size();
  Relation r{m, std::vector<Mask>(m, 0)};
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      if (p.leq(representative[a], representative[b])) r.rows[a] |= bit(b);
    std::string name;
    for (std::size_t i = 0; i < n; ++i)
      if (class_of[i] == a) name += (name.empty() ? "" : "~") + p.label(i);
    labels.push_back(name);
  }
  return Quotient{Poset::validate(r, std::move(labels)), std::move(class_of)};
}

UpperSemilattice::UpperSemilattice(Poset poset, std::vector<std::uint8_t> join, std::size_t bottom)
    : poset_(std::move(poset)), join_(std::move(join)), bottom_(bottom) {}

UpperSemilattice compute_join_table(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t bottom = n;
  for (std::size_t i = 0; i < n && bottom == n; ++i)
    if (p.up(i) == p.carrier()) bottom = i;
  std::vector<std::uint8_t> join(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Mask upper = p.up(a) & p.up(b);
      // the lub is the upper bound lying below every upper bound
      std::size_t lub = n;
      for (std::size_t c = 0; c < n && lub == n; ++c)
        if (has(upper, c) && (p.up(c) & upper) == upper) lub = c;
      if (lub == n)
        throw Error(ErrorKind::NoLub,
                    "no least upper bound for (" + std::to_string(a) + "," + std::to_string(b) + ")",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      join[a * n + b] = static_cast<std::uint8_t>(lub);
    }
  if (bottom == n) throw Error(ErrorKind::NoBottom, "poset has no least element");
  return UpperSemilattice(p, std::move(join), bottom);
}

UpperSemilattice UpperSemilattice::with_table(Poset poset, std::vector<std::uint8_t> join) {
  const std::size_t n = poset.size();
  if (join.size() != n * n) throw Error(ErrorKind::BadInput, "join table has wrong size");
  UpperSemilattice derived = compute_join_table(poset);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (join[a * n + b] != derived.join(a, b))
        throw Error(ErrorKind::BadJoin,
                    "join(" + std::to_string(a) + "," + std::to_string(b) + ") is not the least upper bound",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  return derived;
}

ImplicativeUsl::ImplicativeUsl(UpperSemilattice usl, std::vector<std::uint8_t> arrow)
    : UpperSemilattice(std::move(usl)), arrow_(std::move(arrow)) {}

ImplicativeUsl compute_implication_table(const UpperSemilattice& u) {
  const std::size_t n = u.size();
  std::vector<std::uint8_t> arrow(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mask residuals = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (u.leq(b, u.join(a, c))) residuals |= bit(c);
      std::size_t least = n;
      for (std::size_t c = 0; c < n && least == n; ++c)
        if (has(residuals, c) && (u.poset().up(c) & residuals) == residuals) least = c;
      if (least == n)
        throw Error(ErrorKind::NoLeastResidual,
                    "no least c with " + std::to_string(b) + " <= " + std::to_string(a) + " + c",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
      arrow[a * n + b] = static_cast<std::uint8_t>(least);
    }
  return ImplicativeUsl(u, std::move(arrow));
}

std::string subset_label(Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < 64; ++k) {
    if (!has(m, k)) continue;
    if (!first) out += ",";
    out += std::to_string(k + 1);
    first = false;
  }
  return out + "}";
}

namespace {

void check_boolean_cap(std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::BadInput, "n must be positive");
  if (n > cap || n > kDefaultBooleanCap)
    throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap),
                {static_cast<std::int64_t>(n)});
}

Poset subset_poset(std::size_t n, bool reverse) {
  const std::size_t size = std::size_t{1} << n;
  Relation r{size, std::vector<Mask>(size, 0)};
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      const bool sub = (a & ~b) == 0;
      const bool super = (b & ~a) == 0;
      if (reverse ? super : sub) r.rows[a] |= bit(b);
    }
    labels.push_back(subset_label(a));
  }
  return Poset::validate(r, std::move(labels));
}

}  // namespace

ImplicativeUsl boolean_reverse_usl(std::size_t n, std::size_t cap) {
  check_boolean_cap(n, cap);
  return compute_implication_table(compute_join_table(subset_poset(n, true)));
}

ImplicativeUsl powerset_usl(std::size_t n, std::size_t cap) {
  check_boolean_cap(n, cap);
  return compute_implication_table(compute_join_table(subset_poset(n, false)));
}

namespace canned {

Poset chain(std::size_t k) {
  check_carrier(k);
  Relation r{k, std::vector<Mask>(k, 0)};
  for (std::size_t i = 0; i < k; ++i) r.rows[i] = full_mask(k) & ~(bit(i) - 1);
  return Poset::validate(r);
}

Poset antichain(std::size_t k) { return Poset::validate(Relation::identity(k)); }

Poset fork() {
  return Poset::validate(Relation::from_pairs(3, {{0, 1}, {0, 2}}), {"root", "leaf0", "leaf1"});
}

Poset diamond() {
  return Poset::validate(Relation::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}),
                         {"bot", "a", "b", "top"});
}

Poset binary_tree(std::size_t k) {
  const std::size_t size = (std::size_t{1} << (k + 1)) - 1;
  check_carrier(size);
  // Breadth-first: node i has children 2i+1, 2i+2.
  std::vector<std::string> labels(size);
  labels[0] = "e";
  for (std::size_t i = 1; i < size; ++i) {
    const std::size_t parent = (i - 1) / 2;
    labels[i] = (parent == 0 ? std::string{} : labels[parent]) + ((i % 2 == 1) ? "0" : "1");
  }
  Relation r = Relation::identity(size);
  for (std::size_t i = 1; i < size; ++i)
    for (std::size_t a = (i - 1) / 2;; a = (a - 1) / 2) {
      r.rows[a] |= bit(i);
      if (a == 0) break;
    }
  return Poset::validate(r, std::move(labels));
}

Poset boolean(std::size_t k) {
  if (k > kDefaultBooleanCap)
    throw Error(ErrorKind::CapExceeded, "boolean(" + std::to_string(k) + ") exceeds 64 elements",
                {static_cast<std::int64_t>(k)});
  if (k == 0) return antichain(1);
  return subset_poset(k, false);
}

}  // namespace canned

Poset canned_poset(std::string_view name, std::size_t param) {
  if (name == "chain") return canned::chain(param);
  if (name == "antichain") return canned::antichain(param);
  if (name == "fork") return canned::fork();
  if (name == "diamond") return canned::diamond();
  if (name == "binary_tree") return canned::binary_tree(param);
  if (name == "boolean") return canned::boolean(param);
  throw Error(ErrorKind::UnknownName, "unknown canned poset '" + std::string(name) + "'");
}

Poset parse_canned_poset(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) return canned_poset(text, 0);
  const auto close = text.find(')', open);
  if (close == std::string_view::npos || close != text.size() - 1)
    throw Error(ErrorKind::UnknownName, "malformed canned poset '" + std::string(text) + "'");
  std::size_t param = 0;
  const auto digits = text.substr(open + 1, close - open - 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), param);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw Error(ErrorKind::UnknownName, "bad parameter in '" + std::string(text) + "'");
  return canned_poset(text.substr(0, open), param);
}

}  // namespace brouwerlab
