#pragma once

#include <string>
#include <vector>

#include "qblock/rep.hpp"

namespace qblock {

struct NotStringAlgebra : Error { using Error::Error; };

// A walk in the quiver with formal inverse letters, read against the
// socle quotient of a (suitable) algebra.  Step i joins positions i-1 and
// i; a direct step uses its arrow from position i to position i-1, an
// inverse step runs the other way.
struct StringStep {
    std::uint8_t arrow = 0;
    bool inverse = false;

    bool operator==(const StringStep&) const = default;
};

struct StringWord {
    int start_vertex = 0;  // vertex of position 0
    std::vector<StringStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    bool operator==(const StringWord&) const = default;
};

struct BandWord {
    int start_vertex = 0;
    std::vector<StringStep> steps;  // cyclic, position 0 = position n
};

// The string-combinatorics view of A/soc(A): forbidden words, the string
// conditions, enumeration, and string/band modules (inflated back to A).
class StringAlgebra {
  public:
    explicit StringAlgebra(const Algebra& a, int max_forbidden_len = 24);

    const Algebra& algebra() const { return *alg_; }
    // minimal words that vanish in A/soc(A)
    const std::vector<Word>& forbidden() const { return forbidden_; }

    std::vector<StringWord> enumerate_strings(int maxlen) const;
    std::vector<BandWord> enumerate_bands(int maxlen) const;

    Rep string_module(const StringWord& w) const;
    Rep band_module(const BandWord& b, Gf lambda) const;

    std::string serialize(const StringWord& w) const;  // e.g. "b g- a"
    std::string serialize(const BandWord& b) const;
    StringWord canonical(const StringWord& w) const;

    std::vector<int> vertices_of(const StringWord& w) const;

  private:
    bool word_allowed(const Word& w) const;  // no forbidden subword
    bool steps_valid(const std::vector<StringStep>& steps, int v0, bool cyclic) const;
    std::vector<int> vertex_seq(const std::vector<StringStep>& steps, int v0) const;
    StringWord inverse_word(const StringWord& w) const;

    const Algebra* alg_;
    std::vector<Word> forbidden_;
};

struct EndKCertificate {
    std::vector<Rep> end_k;  // the modules with one-dimensional End
    std::vector<std::pair<std::string, int>> other_strings;  // serialized word, dim End >= 2
    std::vector<std::pair<std::string, int>> band_witnesses;  // serialized band, dim End
    int string_maxlen = 0;
    int band_maxlen = 0;
};

// All string modules with End = k up to the length bound, with a
// certificate that every other enumerated string has a bigger End and
// every enumerated band module admits a non-scalar endomorphism.
EndKCertificate classify_end_k(const Algebra& a, int maxlen, int band_maxlen = 6);

}  // namespace qblock
