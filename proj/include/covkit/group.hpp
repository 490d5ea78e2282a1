#pragma once

// Concrete finite groups at desk scale: 2x2 and 3x3 matrix groups over
// finite fields, their central quotients, and alternating/symmetric groups.
// Elements are enumerated once, canonicalized (quotients store the
// lexicographically least member of each central coset), sorted, and then
// addressed by index; multiplication recomputes the raw product and looks it
// up, so no quadratic table is ever materialized. Conjugacy classes come
// from orbit expansion under a small verified generating set and are sorted
// by (element order, size, representative), which pins indices across runs.

#include <cstdint>
#include <string>
#include <vector>

#include "covkit/fq.hpp"
#include "covkit/rational.hpp"

namespace covkit {

// Parsed form of descriptors like "sl2:q=7", "psu3:q=3", "alt:n=9".
struct Descriptor {
  std::string kind;  // sl2 psl2 gl2 pgl2 sl3 psl3 su3 psu3 alt sym ingested
  long q = 0;        // prime power, matrix kinds
  long n = 0;        // degree, permutation kinds
  std::string name() const;
};

Descriptor parse_descriptor(const std::string& text);

struct ConjClass {
  int index = 0;
  int rep = 0;              // element index; the least member of the class
  long size = 0;
  long element_order = 0;
};

struct AutOrbit {
  std::vector<int> class_indices;  // ascending
};

enum class AutAction { PGL2OnPSL2, SnOnAn, ConjugationOnly };

class Group {
 public:
  // Enumerates, canonicalizes and verifies the group; throws UsageError for
  // invalid descriptors and MathError when the order formula exceeds the
  // element budget.
  static Group build(const Descriptor& d, long budget = 10000000);
  static Group build(const std::string& descriptor, long budget = 10000000);

  const Descriptor& descriptor() const { return desc_; }
  std::string name() const { return desc_.name(); }
  long order() const { return order_; }

  int identity() const { return id_; }
  int mult(int a, int b) const;
  int inv(int a) const;
  long element_order(int a) const;

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[(std::size_t)a]; }
  std::vector<int> class_elements(int c) const;

  // Direct commuting count over the whole group (not derived from class
  // sizes, so orbit-stabilizer stays a testable statement).
  long centralizer_order(int a) const;

  // Small generating set found greedily; its closure was verified to be the
  // whole group during construction.
  const std::vector<int>& generators() const { return gens_; }

  std::string element_str(int a) const;

  // Raw access: each element is a fixed-width row of small integers (field
  // element indices for matrices, images for permutations).
  int width() const { return w_; }
  const std::int16_t* raw(int a) const { return flat_.data() + (std::size_t)a * (std::size_t)w_; }
  int find_raw(const std::int16_t* row) const;  // -1 when absent
  // Canonicalizes the row into its coset representative first, then finds it;
  // throws when the element is not in the group.
  int locate(const std::int16_t* row) const;

  const Fq& field() const;  // matrix kinds only

 private:
  Group() = default;

  Descriptor desc_;
  long order_ = 0;
  int w_ = 0;
  int id_ = 0;
  std::vector<std::int16_t> flat_;   // sorted rows, one per element
  std::vector<std::int32_t> slots_;  // open-addressing index over flat_
  std::uint64_t mask_ = 0;
  const Fq* F_ = nullptr;  // ambient field for matrix kinds
  int frob_ = 0;           // conjugation power x -> x^(p^frob_) for unitary kinds
  int dim_ = 0;            // 2 or 3 for matrix kinds, 0 for permutations
  std::vector<int> center_;  // scalar multipliers canonicalized over (quotients)
  std::vector<int> gens_;
  std::vector<int> gen_invs_;
  std::vector<ConjClass> classes_;
  std::vector<std::int32_t> class_of_;

  void raw_mult(const std::int16_t* a, const std::int16_t* b, std::int16_t* out) const;
  void raw_inv(const std::int16_t* a, std::int16_t* out) const;
  void canon_coset(std::int16_t* m) const;
  void build_index();
  void find_generators(const std::vector<int>& candidates);
  void compute_classes();
};

// Fusion of conjugacy classes under an outer action: diagonal conjugation by
// a determinant-nonsquare element for PGL2OnPSL2, conjugation by a
// transposition for SnOnAn, and the identity action for ConjugationOnly.
// Orbits partition the nontrivial classes.
std::vector<AutOrbit> aut_fusion(const Group& G, AutAction action);

}  // namespace covkit
