#pragma once

#include "lpat/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lpat {

/// One application of an elementary map phi_k.
struct TransformStep {
  int k = 0;
  BinaryWord before;
  BinaryWord after;
  bool changed = false;
};

/// Applies phi_k (1 <= k <= 7). Each map permutes the bits of u and
/// satisfies u <= phi_k(u); when its trigger block is absent it is the
/// identity. DomainError for k outside 1..7.
///
///   phi_1: v 0 1^p           -> 1^p v 0
///   phi_2: 1^p v 111 v'      -> 1^(p+1) v 11 v'      (v = 0...0, no 111 in v)
///   phi_3: v 0^p 11 v'       -> v 011 0^(p-1) v'     (p >= 2, first such block)
///   phi_4: v 01010 v'        -> v 01100 v'           (first 01010)
///   phi_5: v 0^p 100 v'      -> v 1 0^(p+2) v'       (p >= 1, first such block)
///   phi_6: v 0^p 10110 v'    -> v 01011 0^p v'       (p >= 2, first such block)
///   phi_7: v 0110110 v'      -> v 1010110 v'         (first 0110110)
TransformStep phi(int k, const BinaryWord& u);

inline constexpr int kTransformCount = 7;

struct Reduction {
  BinaryWord normal;
  std::vector<TransformStep> trace;  // changing steps only
};

/// Repeatedly applies the smallest k whose phi_k changes the word until
/// every map fixes it. Terminates because each change strictly increases
/// the word lexicographically within the finite set W_N.
Reduction reduce_to_normal_form(const BinaryWord& u, bool record_trace = true);

/// True iff phi_k(u) = u for all k.
bool is_fixed_point(const BinaryWord& u);

/// An occurrence of an excluded subword; `position` is the 1-based start.
struct ExcludedOccurrence {
  int type = 0;
  std::size_t position = 0;
  friend bool operator==(const ExcludedOccurrence&, const ExcludedOccurrence&) = default;
};

/// Every occurrence of the eleven excluded shapes, sorted by (type, position).
///
///   1: 0 v 1)      a zero followed eventually by the final symbol 1
///   2: 0 v 111     3: 0011       4: 01010       5: 0100
///   6: 0010110     7: 0110110    8: 001011      9: 00101
///  10: 0010 v, v nonempty
///  11: 001 v, where the rest of the word after 001 is not exactly "0"
std::vector<ExcludedOccurrence> excluded_subword_scan(const BinaryWord& u);

/// Row of the fixed-point classification and its parameters.
///
///   1: 1^p 0^q                        4: 1^p (01011)^s 0^q     (q>=1, s>=1)
///   2: 1^p (01011)^s 0^q 10 (q>=2)    5: 1^p 011 (01011)^s 0^q (q>=1)
///   3: 1^p 011 (01011)^s 0^q 10 (q>=2)
///   6: 1^p (01011)^s 010              7: 1^p 011 (01011)^s 010
struct NormalFormClass {
  int type_tag = 0;
  std::size_t p = 0;
  std::optional<std::size_t> q;  // absent for types 6, 7
  std::optional<std::size_t> s;  // absent for type 1

  /// Rebuilds the word described by the parameters.
  BinaryWord build() const;
  /// Closed forms for N, |Z(u)| and |P(u)| read off the table row.
  std::size_t closed_form_length() const;
  std::size_t closed_form_zeros() const;
  std::size_t closed_form_patterns() const;

  friend bool operator==(const NormalFormClass&, const NormalFormClass&) = default;
};

/// Parses u against the seven shapes without checking that u is a fixed point.
std::optional<NormalFormClass> match_normal_form(const BinaryWord& u);

/// Classifies a fixed point. PreconditionError if u is not fixed by every
/// map; ClassificationError if it matches no row.
NormalFormClass classify_normal_form(const BinaryWord& u);

}  // namespace lpat
