#pragma once

// Legendrian surgery diagrams built from push-offs of one tb = -1 unknot,
// the candidate family on M(-1; r_1, ..., r_k), and the 3-dimensional
// invariant d3 of the resulting contact structure.
//
// A contact (-1/r)-surgery on a tb = -1 unknot L is realized as a chain of
// Legendrian push-offs L_0, L_1, ..., L_m, each stabilized s_j times more
// than the previous one, all with contact coefficient -1. Smoothly
// L_j has framing tb(L_j) - 1 and lk(L_i, L_j) = tb(L_i) for i < j; handle
// slides turn this into the linear chain with framings a_j.

#include "hfseifert/exact/continued_fraction.hpp"
#include "hfseifert/seifert.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hfs {

struct LegendrianUnknot {
  Integer tb = -1;
  Integer rot = 0;
  int coefficient = -1;        // contact surgery coefficient, +1 or -1
  std::int64_t positives = 0;  // stabilizations relative to the tb = -1 unknot
  std::int64_t negatives = 0;
  int chain = -1;              // -1 for the two (+1) base components
  std::size_t position = 0;    // index within its chain

  Integer framing() const { return tb + coefficient; }
};

struct ContactDiagram {
  std::vector<LegendrianUnknot> components;
  IntMatrix linking;  // smooth linking matrix, framings on the diagonal

  std::size_t size() const { return components.size(); }

  std::size_t q() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.coefficient == 1;
    return n;
  }

  IntVector rotation() const {
    IntVector r;
    for (const auto& c : components) r.push_back(c.rot);
    return r;
  }

  /// Throws invariant_violation unless the component data are coherent.
  void validate() const {
    if (linking.rows() != size() || linking.cols() != size() || !linking.is_symmetric())
      throw invariant_violation("linking matrix shape or symmetry");
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& c = components[i];
      if (c.coefficient != 1 && c.coefficient != -1) throw invariant_violation("contact coefficient must be +-1");
      if (linking(i, i) != c.framing()) throw invariant_violation("diagonal must equal tb + coefficient");
      if (c.positives < 0 || c.negatives < 0) throw invariant_violation("negative stabilization count");
      if (c.tb != -1 - c.positives - c.negatives) throw invariant_violation("tb != -1 - #stabilizations");
      if (c.rot != c.positives - c.negatives) throw invariant_violation("rot != #pos - #neg");
    }
  }
};

/// One link of a chain: smooth framing a_j in the linear chain picture
/// and the number of new stabilizations s_j = |a_j + 2|.
struct ChainLink {
  Integer framing;
  std::int64_t stabilizations = 0;
  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

/// Chain realizing contact surgery with coefficient `slope` (< -1) on a
/// tb = -1 unknot: a_j = neg_cf(slope - 1), i.e. the expansion of the
/// smooth coefficient slope + tb.
inline std::vector<ChainLink> ding_geiges_chain(const Rational& slope) {
  if (slope >= Rational(-1)) throw domain_error("chain needs a contact coefficient < -1, got " + slope.str());
  std::vector<ChainLink> out;
  for (auto& a : neg_cf(slope - Rational(1))) {
    Integer s = abs(a + 2);
    out.push_back({a, to_int64(s)});
  }
  return out;
}

/// d3 = (c^2 - 3 sigma - 2 b2) / 4 + q; the empty diagram gives 0.
inline Rational d3(const ContactDiagram& d) {
  if (d.size() == 0) return Rational(0);
  if (determinant(d.linking) == 0) throw domain_error("linking matrix is singular");
  const Rational c2 = quad_value(d.linking, d.rotation());
  const std::int64_t sigma = signature(d.linking);
  const auto b2 = static_cast<std::int64_t>(d.size());
  return (c2 - Rational(3 * sigma) - Rational(2 * b2)) / Rational(4) + Rational(static_cast<std::int64_t>(d.q()));
}

/// A member of the candidate family together with its stabilization choice.
struct Candidate {
  std::size_t id = 0;
  /// Rotation added at each chain component (its own stabilizations),
  /// listed over chain components in diagram order.
  std::vector<std::int64_t> choice;
  std::size_t conjugate_id = 0;
  ContactDiagram diagram;
};

namespace detail {

struct FamilyLayout {
  std::vector<LegendrianUnknot> base;  // with stabilizations unset
  std::vector<std::size_t> chain_components;  // indices of chain components
  std::vector<std::int64_t> slots;            // s_j per chain component
  IntMatrix linking;
};

inline FamilyLayout family_layout(const SeifertData& m) {
  FamilyLayout f;
  for (int i = 0; i < 2; ++i) {
    LegendrianUnknot k;
    k.coefficient = 1;
    f.base.push_back(k);
  }
  for (std::size_t i = 0; i < m.k(); ++i) {
    Integer tb = -1;
    std::size_t pos = 0;
    for (const auto& link : ding_geiges_chain(-Rational(1) / m.r[i])) {
      tb -= link.stabilizations;
      LegendrianUnknot c;
      c.tb = tb;
      c.coefficient = -1;
      c.chain = static_cast<int>(i);
      c.position = pos++;
      f.chain_components.push_back(f.base.size());
      f.slots.push_back(link.stabilizations);
      f.base.push_back(c);
    }
  }
  const std::size_t n = f.base.size();
  f.linking = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    f.linking(i, i) = f.base[i].framing();
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = f.base[i];
      const auto& b = f.base[j];
      // a precedes b, so within a chain the less stabilized one is a.
      const Integer l = (a.chain >= 0 && a.chain == b.chain) ? a.tb : Integer(-1);
      f.linking(i, j) = f.linking(j, i) = l;
    }
  }
  return f;
}

}  // namespace detail

/// Number of candidates, prod (s_j + 1), without building them.
inline Integer candidate_count(const SeifertData& m) {
  Integer n = 1;
  for (auto s : detail::family_layout(m).slots) n *= s + 1;
  return n;
}

/// The candidate family on M(-1; r_1..r_k) in canonical order: the choice
/// vector runs lexicographically, each entry ascending from -s_j to s_j.
inline std::vector<Candidate> enumerate_candidates(const SeifertData& m, std::size_t max_candidates = 100000) {
  if (m.e0 != -1) throw unsupported_input("candidate family is defined for e0 = -1, got " + m.str());
  if (m.k() < 1) throw unsupported_input("candidate family needs at least one singular fiber");
  const detail::FamilyLayout f = detail::family_layout(m);
  const Integer total = candidate_count(m);
  if (total > Integer(max_candidates))
    throw unsupported_input(total.str() + " candidates exceed the limit of " + std::to_string(max_candidates));
  const auto count = static_cast<std::size_t>(to_int64(total));

  const Integer h1 = h1_order(m);
  if (abs(determinant(f.linking)) != h1)
    throw invariant_violation("candidate linking matrix does not present " + m.str());

  const std::size_t slots = f.slots.size();
  std::vector<Candidate> out;
  out.reserve(count);
  std::vector<std::int64_t> digits(slots, 0);
  for (std::size_t id = 0; id < count; ++id) {
    Candidate c;
    c.id = id;
    c.diagram.components = f.base;
    c.diagram.linking = f.linking;
    std::size_t conj = 0;
    int chain = -2;
    std::int64_t pos = 0, neg = 0;
    for (std::size_t j = 0; j < slots; ++j) {
      const std::int64_t s = f.slots[j];
      const std::int64_t x = 2 * digits[j] - s;
      c.choice.push_back(x);
      conj = conj * static_cast<std::size_t>(s + 1) + static_cast<std::size_t>(s - digits[j]);
      auto& comp = c.diagram.components[f.chain_components[j]];
      if (comp.chain != chain) {
        chain = comp.chain;
        pos = neg = 0;
      }
      pos += (s + x) / 2;
      neg += (s - x) / 2;
      comp.positives = pos;
      comp.negatives = neg;
      comp.rot = pos - neg;
    }
    c.conjugate_id = conj;
    c.diagram.validate();
    out.push_back(std::move(c));
    for (std::size_t j = slots; j-- > 0;) {
      if (++digits[j] <= f.slots[j]) break;
      digits[j] = 0;
    }
  }
  return out;
}

/// Parses the line format "tb rot coeff : row" where row lists the linking
/// numbers with the component's own entry written as '*' or its framing.
/// '#' starts a comment; blank lines are ignored.
inline ContactDiagram parse_diagram(std::istream& in) {
  ContactDiagram d;
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw parse_error("line " + std::to_string(lineno) + ": missing ':'");
    std::istringstream head(line.substr(0, colon)), tail(line.substr(colon + 1));
    std::string tb, rot, coeff, extra;
    if (!(head >> tb >> rot >> coeff) || (head >> extra))
      throw parse_error("line " + std::to_string(lineno) + ": expected 'tb rot coeff'");
    LegendrianUnknot c;
    c.tb = parse_integer(tb);
    c.rot = parse_integer(rot);
    const Integer co = parse_integer(coeff);
    if (co != 1 && co != -1) throw parse_error("line " + std::to_string(lineno) + ": coefficient must be +1 or -1");
    c.coefficient = co == 1 ? 1 : -1;
    const Integer stabs = -1 - c.tb;
    if (stabs < 0 || abs(c.rot) > stabs || (stabs - c.rot) % 2 != 0)
      throw parse_error("line " + std::to_string(lineno) +
                        ": (tb, rot) is not a stabilized tb = -1 unknot");
    c.positives = to_int64((stabs + c.rot) / 2);
    c.negatives = to_int64((stabs - c.rot) / 2);
    d.components.push_back(c);
    std::vector<std::string> row;
    for (std::string tok; tail >> tok;) row.push_back(tok);
    rows.push_back(std::move(row));
  }
  const std::size_t n = d.components.size();
  d.linking = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw parse_error("component " + std::to_string(i + 1) + ": linking row has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        d.linking(i, i) = d.components[i].framing();
        if (rows[i][j] != "*" && parse_integer(rows[i][j]) != d.linking(i, i))
          throw parse_error("component " + std::to_string(i + 1) + ": framing entry disagrees with tb + coeff");
        continue;
      }
      d.linking(i, j) = parse_integer(rows[i][j]);
    }
  }
  if (!d.linking.is_symmetric()) throw parse_error("linking matrix is not symmetric");
  return d;
}

}  // namespace hfs
