#include <cctype>
#include <memory>
#include <sstream>

#include "covkit/classalg.hpp"

namespace covkit {

std::string Word::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << "*";
    os << "x" << factors[i].letter;
    if (factors[i].exponent != 1) os << "^" << factors[i].exponent.get_str();
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw UsageError("word: " + what + " at position " + std::to_string(i));
  };
  skip();
  if (i >= text.size()) fail("empty word");
  while (true) {
    skip();
    if (i >= text.size() || text[i] != 'x') fail("expected 'x'");
    ++i;
    if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected a letter index");
    long letter = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      letter = letter * 10 + (text[i] - '0');
      if (letter > 1000000) fail("letter index too large");
      ++i;
    }
    if (letter < 1) fail("letter indices start at 1");
    Word::Factor f;
    f.letter = (int)letter;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip();
      std::string digits;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        digits.push_back(text[i]);
        ++i;
      }
      if (i >= text.size() || !std::isdigit((unsigned char)text[i])) fail("expected an exponent");
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        digits.push_back(text[i]);
        ++i;
      }
      f.exponent = BigInt(digits);
    }
    w.factors.push_back(f);
    if (f.letter > w.arity) w.arity = f.letter;
    skip();
    if (i >= text.size()) break;
    if (text[i] != '*') fail("expected '*'");
    ++i;
    skip();
    if (i >= text.size()) fail("trailing '*'");
  }
  return w;
}

// g^e with e reduced modulo the order of g; square-and-multiply.
static int group_pow(const Group& G, int g, const BigInt& e) {
  long ord = G.element_order(g);
  BigInt r = e % ord;
  if (r < 0) r += ord;
  long rex = r.get_si();
  int acc = G.identity();
  int base = g;
  while (rex > 0) {
    if (rex & 1) acc = G.mult(acc, base);
    base = G.mult(base, base);
    rex >>= 1;
  }
  return acc;
}

WordImage word_image(const Group& G, const Word& w) {
  if (w.factors.empty() || w.arity < 1) throw UsageError("word_image: empty word");
  long n = G.order();
  long k = (long)G.classes().size();
  WordImage out;
  out.classes = NormalSubset(k);

  if (w.arity == 1) {
    BigInt total = 0;
    for (const auto& f : w.factors) total += f.exponent;
    // The image of a power map is conjugation-closed, so class
    // representatives see every class the image meets.
    for (const auto& c : G.classes())
      out.classes.add(G.class_of(group_pow(G, c.rep, total)));
  } else {
    BigInt budget = 1;
    for (int d = 0; d < w.arity; ++d) budget *= n;
    if (budget > BigInt(100000000))
      throw MathError("word_image: |G|^d exceeds the enumeration budget of 10^8");
    // Per-factor power tables over all elements.
    std::vector<std::vector<int>> fimg(w.factors.size());
    for (std::size_t fi = 0; fi < w.factors.size(); ++fi) {
      fimg[fi].resize((std::size_t)n);
      for (long g = 0; g < n; ++g) fimg[fi][(std::size_t)g] = group_pow(G, (int)g, w.factors[fi].exponent);
    }
    // Substituting a conjugate tuple conjugates the value, so the first
    // letter only needs class representatives; the image is then closed
    // under conjugation below.
    std::vector<int> assign((std::size_t)w.arity + 1, 0);
    std::vector<long> idx((std::size_t)w.arity + 1, 0);
    for (const auto& c : G.classes()) {
      assign[1] = c.rep;
      for (int d = 2; d <= w.arity; ++d) {
        idx[(std::size_t)d] = 0;
        assign[(std::size_t)d] = 0;
      }
      while (true) {
        int val = G.identity();
        for (std::size_t fi = 0; fi < w.factors.size(); ++fi)
          val = G.mult(val, fimg[fi][(std::size_t)assign[(std::size_t)w.factors[fi].letter]]);
        out.classes.add(G.class_of(val));
        int d = w.arity;
        while (d >= 2) {
          if (++idx[(std::size_t)d] < n) {
            assign[(std::size_t)d] = (int)idx[(std::size_t)d];
            break;
          }
          idx[(std::size_t)d] = 0;
          assign[(std::size_t)d] = 0;
          --d;
        }
        if (d < 2) break;
      }
    }
  }

  if (!out.classes.contains(G.class_of(G.identity())))
    throw MathError("word_image: image lost the identity");
  out.elements.assign((std::size_t)n, 0);
  for (const auto& c : G.classes())
    if (out.classes.contains(c.index))
      for (int g : G.class_elements(c.index)) out.elements[(std::size_t)g] = 1;
  return out;
}

WordImage word_image(const Group& G, const std::string& w) {
  return word_image(G, parse_word(w));
}

const std::vector<std::string>& ample_proxy_names() {
  static const std::vector<std::string> names = {"psl2:q=5", "psl2:q=7", "psl2:q=8",
                                                 "psl2:q=9", "psl2:q=13"};
  return names;
}

bool ample_check(const Word& w, const std::vector<const Group*>& groups) {
  if (groups.empty()) throw UsageError("ample_check: empty group list");
  for (const Group* G : groups) {
    if (!G) throw UsageError("ample_check: null group");
    WordImage im = word_image(*G, w);
    if (im.classes.count() <= 1) return false;  // image is exactly {1}
  }
  return true;
}

bool ample_check(const Word& w) {
  std::vector<std::unique_ptr<Group>> owned;
  std::vector<const Group*> ptrs;
  for (const std::string& name : ample_proxy_names()) {
    owned.push_back(std::make_unique<Group>(Group::build(name)));
    ptrs.push_back(owned.back().get());
  }
  return ample_check(w, ptrs);
}

bool ample_check(const std::string& w) { return ample_check(parse_word(w)); }

}  // namespace covkit
