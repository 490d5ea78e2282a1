#pragma once

// Exact character tables from four sources: the classical parametrization of
// the SL2 family, the Murnaghan-Nakayama rule for symmetric and alternating
// groups, a class-algebra construction for small enumerated groups, and a
// validated JSON ingestion path. Every constructor checks both orthogonality
// relations exactly before returning a table; nothing numeric survives into
// the emitted data.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covkit/cyclo.hpp"
#include "covkit/group.hpp"
#include "covkit/partition.hpp"
#include "covkit/rational.hpp"

namespace covkit {

enum class Provenance { GenericSL2Family, MurnaghanNakayama, Ingested, BruteForce };

struct ClassInfo {
  std::string label;
  BigInt size;
  long element_order = 1;
};

struct CharacterTable {
  std::string group_name;
  BigInt order;
  std::vector<ClassInfo> classes;           // column 0 is the identity class
  std::vector<std::vector<CycloNum>> rows;  // rows[character][class]; row 0 trivial
  Provenance provenance = Provenance::BruteForce;

  long k() const { return (long)classes.size(); }
  const CycloNum& value(long r, long c) const {
    return rows[(std::size_t)r][(std::size_t)c];
  }
  BigInt degree(long r) const;  // rows[r][0]; throws unless a positive integer

  // The column c' with chi(c') = conj(chi(c)) for every row; unique in a
  // valid table (it is the class of the inverses).
  long inverse_class(long c) const;
};

// Full validation: square shape, row 0 trivial, positive integer degrees,
// sizes positive and summing to the order, each size dividing the order,
// both orthogonality relations exact, sum of squared degrees equal to the
// order. Throws MathError naming the first offending pair.
void validate_table(const CharacterTable& T);

// Minimum degree over the nontrivial rows.
BigInt min_nontrivial_degree(const CharacterTable& T);

// chi_lambda evaluated at cycle type mu, by the Murnaghan-Nakayama rule.
// Requires |lambda| = |mu|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

// Full S_n table: classes are cycle types (ascending lex, identity first),
// characters are partitions (descending lex, trivial first). n <= 30.
CharacterTable sn_table(long n);

// Full A_n table by restriction from S_n: pairs of conjugate partitions
// restrict to a common irreducible; self-conjugate partitions split in two,
// with the irrational values placed by the diagonal-hook formula and
// anchored at the class of the consecutively-filled representative (the
// "+" column). n <= 16 so columns can be tied back to enumerated groups.
CharacterTable alt_table(long n);

// Classical tables for descriptors of kind sl2, psl2, pgl2 with q >= 4 a
// prime power. Class labels expose the torus parameters (a<l>, b<m>, ...).
CharacterTable generic_table(const Descriptor& d);
CharacterTable generic_table(const std::string& descriptor);

// Table of an enumerated group from its class-multiplication matrices;
// columns are exactly G's class indices. Requires |G| <= 10^4 and at most
// 60 classes. The eigenvector seeding is numeric but every emitted value is
// reconstructed as an exact eigenvalue-multiplicity sum and then verified
// against the structure constants and both orthogonality relations.
CharacterTable brute_table(const Group& G);

// JSON ingestion/export. Schema:
//   { "name": str, "order": int,
//     "classes": [{"label": str, "size": int, "order": int}],
//     "irreducibles": [[value string]] }
// Values use the E(n)^k grammar of cyclo_parse. ingest_table validates the
// table fully and rejects on any failure; export_table emits the schema
// byte-deterministically (sorted keys, no floats).
CharacterTable ingest_table(const std::string& bytes);
std::string export_table(const CharacterTable& T);

// Relabeling search: permutations (row_map, col_map), both A-index -> B-index,
// with B.rows[row_map[r]][col_map[c]] == A.rows[r][c] and matching class
// sizes and element orders. Fingerprint buckets keep the backtracking tiny.
std::optional<std::pair<std::vector<long>, std::vector<long>>> match_tables(
    const CharacterTable& A, const CharacterTable& B);

// Column -> conjugacy-class-index map tying a table to an enumerated group.
// Defined for brute tables built from G (identity map, re-checked) and for
// symmetric/alternating Murnaghan-Nakayama tables, where columns name cycle
// types and split halves are resolved against the group's representatives.
std::vector<long> table_group_class_map(const CharacterTable& T, const Group& G);

}  // namespace covkit
