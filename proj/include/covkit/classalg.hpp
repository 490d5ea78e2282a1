#pragma once

// Class-algebra engine: the extended Frobenius formula over exact character
// tables, class-product coverage, covering invariants (cn, ecn, involution
// width), automorphism-orbit covering certificates sound for the
// characteristic covering number, the cubed-class character criterion, word
// images, and the two-conjugate product check for regular semisimple
// elements. Table-backed computations are pure character arithmetic; the
// enumeration oracles touch only the group, so the two routes stay
// independent and comparable.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covkit/chartab.hpp"
#include "covkit/group.hpp"
#include "covkit/interval.hpp"
#include "covkit/rational.hpp"

namespace covkit {

// A union of conjugacy classes, as membership flags over class indices.
// Products of such sets decompose classwise, which is what makes every
// cover computation below a finite fold.
struct NormalSubset {
  std::vector<char> member;

  NormalSubset() = default;
  explicit NormalSubset(long k) : member((std::size_t)k, 0) {}

  long k() const { return (long)member.size(); }
  bool contains(long c) const { return member.at(check(c)) != 0; }
  void add(long c) { member.at(check(c)) = 1; }
  long count() const;
  bool covers(const NormalSubset& sub) const;  // superset test
  void unite(const NormalSubset& o);

  bool operator==(const NormalSubset& o) const { return member == o.member; }
  bool operator!=(const NormalSubset& o) const { return member != o.member; }
  std::string str() const;  // "{0,2,5}"

 private:
  std::size_t check(long c) const;  // throws UsageError when out of range
};

// Exact count of solutions to g = x_1 ... x_k with x_i in prescribed
// classes and g anywhere in the target class.
struct FrobCount {
  Rat value;                // the character-formula value, kept as an exact rational
  BigInt asserted_integer;  // the same value, asserted to be a non-negative integer

  bool positive() const { return asserted_integer > 0; }
};

// Extended Frobenius formula. With input classes C_1..C_k and target class
// C_t,
//   value = (|C_1|...|C_k| |C_t| / |G|)
//           * sum_chi chi(c_1)...chi(c_k) chi(t^{-1}) / chi(1)^{k-1},
// the number of tuples (x_1,...,x_k), x_i in C_i, whose product lies in
// C_t. Throws MathError when the result is not a non-negative integer,
// which would mean a corrupt table.
FrobCount frob_count(const CharacterTable& T, const std::vector<long>& class_indices,
                     long target_index);

// Classes whose elements are products x_1 ... x_k with x_i in C_i: the
// targets with positive Frobenius count. k >= 1.
NormalSubset class_product_cover(const CharacterTable& T,
                                 const std::vector<long>& class_indices);

// All pair covers of one table, computed lazily from the Frobenius counts
// and cached; row(i, j) lists the classes met by C_i C_j. fold(S, j) is the
// cover of S * C_j for a normal subset S. Not safe for concurrent mutation:
// force the rows you need (rows are computed on first access) before
// fanning out read-only.
class CoverTensor {
 public:
  explicit CoverTensor(const CharacterTable& T);

  const CharacterTable& table() const { return *T_; }
  const NormalSubset& row(long i, long j) const;
  NormalSubset fold(const NormalSubset& S, long j) const;

 private:
  const CharacterTable* T_;
  long k_;
  mutable std::vector<NormalSubset> rows_;
  mutable std::vector<char> done_;
};

// Enumeration oracle for class products, independent of character data.
// For a pair: for each target representative g, count x in C_1 with
// x^{-1} g in C_2. Longer products fold the pair step over the classes met
// so far (sound because products of normal sets are normal). Throws
// MathError when the product of the two largest class sizes exceeds 10^8.
NormalSubset brute_class_product(const Group& G, const std::vector<long>& class_indices);

// Which classes a product must reach to count as covering.
//   AllElements: every class, identity and central classes included.
//   NonCentral:  every class of size > 1.
// Tables with a central class besides the identity (quasisimple inputs)
// default to NonCentral, matching the usual statement "contains all
// non-central elements" for such groups; everything else defaults to
// AllElements.
enum class CoverTarget { AllElements, NonCentral };

CoverTarget default_cover_target(const CharacterTable& T);

// Least n such that every n-tuple of non-central classes has product
// covering the target. Deep searches prune on covered prefixes and assert
// monotonicity (if all n-tuples cover, all (n+1)-tuples must). Throws
// MathError past a cap of 64.
long ecn(const CharacterTable& T, std::optional<CoverTarget> target = std::nullopt,
         int threads = 1);

// Least n such that C^n covers the target for every non-central class C.
long cn(const CharacterTable& T, std::optional<CoverTarget> target = std::nullopt);

// Involution width from a table: least n with S^n covering every class,
// where S is the identity class together with all order-2 classes. Throws
// MathError when the table has no involutions or the powers of S stabilize
// short of the group.
long iw(const CharacterTable& T);

// Element-level involution width over an enumerated group; the independent
// oracle for iw. Same error conditions.
long iw_brute(const Group& G);

// Indices (into a symmetric-group table) of even cycle types of order > 2
// whose Frobenius count is zero over every pair of even involution types.
// No element of such a type -- hence no element of any alternating-group
// class inside it -- is a product of two even involutions, so a non-empty
// result certifies involution width >= 3 for the alternating group.
std::vector<long> alt_two_involution_obstructions(const CharacterTable& snT);

// Sound certificate for ccn(G) <= n: true iff every n-tuple of nontrivial
// automorphism orbits has product covering G minus the identity. Any ample
// collection contains the identity and a full orbit of some nontrivial
// element, so a true certificate bounds the characteristic covering number.
// Fusion under a subgroup of the automorphism group only refines orbits,
// which keeps the certificate sound. The action defaults by descriptor
// kind: PGL2-on-PSL2 for psl2, Sn-on-An for alt, conjugation only
// otherwise. Builds the class-algebra table of G internally (so G must be
// within the brute-table budget).
bool ccn_upper_cert(const Group& G, long n,
                    std::optional<AutAction> action = std::nullopt, int threads = 1);

// lower = involution width; upper = least n with a true certificate,
// scanned up to ecn - 1 (where the certificate must hold: each orbit
// tuple refines a class tuple of that length plus the identity). Throws
// MathError if the certificate fails at ecn - 1 or certifies below the
// involution width, both of which would contradict theorems.
std::pair<long, long> ccn_bounds(const Group& G,
                                 std::optional<AutAction> action = std::nullopt,
                                 int threads = 1);

// The cubed-class character criterion at class c: evaluates
//   sum over nontrivial chi of |chi(g)|^3 / chi(1),
// exactly when every |chi(g)| is rational, otherwise through a certified
// rational enclosure. A sum < 1 implies C^3 covers every nontrivial class;
// that implication is re-checked against class_product_cover and a
// violation is a hard error. Throws MathError when the enclosure straddles
// 1 (undecidable at the working precision).
struct ScubedResult {
  bool less_than_one = false;
  bool is_exact = false;  // every |chi(g)| rational; exact_value is the sum
  Rat exact_value;
  RatInterval enclosure;  // always set; a point when is_exact
};

ScubedResult scubed_check(const CharacterTable& T, long class_index);

// The centralizer-degree sufficient condition for the criterion above:
// |C_G(g)|^3 <= d(G)^2 with d(G) the minimal nontrivial character degree
// (the squared form of |C_G(g)|^{3/2} <= d(G), kept in integers). When this
// holds, the cubed-class sum is provably < 1.
bool scubed_centralizer_bound(const CharacterTable& T, long class_index);

// A word in letters x1..xd: a product of letter powers. Exponents are
// arbitrary-precision (reduced modulo element orders at evaluation).
struct Word {
  struct Factor {
    int letter = 1;  // 1-based
    BigInt exponent = 1;
  };
  std::vector<Factor> factors;
  int arity = 0;  // highest letter index; 0 for the empty word

  std::string str() const;
};

// Grammar: word := factor ('*' factor)*; factor := 'x' index ['^' integer].
// Spaces are allowed between tokens. Throws UsageError with the offending
// position.
Word parse_word(const std::string& text);

// The image of the word map G^d -> G, as classes and as element flags. The
// image is closed under conjugation and always contains the identity.
// Budget: d == 1 runs as a power map over class representatives; otherwise
// |G|^d <= 10^8 (evaluation fixes the first letter to class representatives
// and closes under conjugation, which is exact). Throws MathError beyond
// the budget.
struct WordImage {
  NormalSubset classes;        // indices into G.classes()
  std::vector<char> elements;  // |G| flags
};

WordImage word_image(const Group& G, const Word& w);
WordImage word_image(const Group& G, const std::string& w);

// Descriptors of the shipped proxy list: PSL2(5), PSL2(7), PSL2(8),
// PSL2(9), PSL2(13). A desk-scale stand-in for the minimal simple groups,
// explicitly a proxy and not the full classification.
const std::vector<std::string>& ample_proxy_names();

// True iff the word image is bigger than {1} on every listed group.
bool ample_check(const Word& w, const std::vector<const Group*>& groups);
// Convenience form over the default proxy list (builds the groups).
bool ample_check(const Word& w);
bool ample_check(const std::string& w);

// True iff every element of order coprime to the defining characteristic
// lies in s^G s^G, decided by enumeration. Requires an sl2/psl2/pgl2
// group and a regular semisimple s: order coprime to the characteristic
// and centralizer order equal to a maximal-torus order, else UsageError.
bool gow_check(const Group& G, int s);

}  // namespace covkit
