#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace km {

// One signed generator occurrence. `gen` indexes a presentation's generator
// table; `sign` is +1 or -1.
struct Letter {
    int gen = 0;
    int sign = +1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return Letter{l.gen, -l.sign}; }

// A word in a free group, stored as a flat letter sequence. The empty word is
// the identity. Every Word returned by a public operation is freely reduced.
using Word = std::vector<Letter>;

// Unique freely reduced form (single stack pass); idempotent.
Word free_reduce(const Word& raw);

bool is_freely_reduced(const Word& w);

// Reverse order, flip signs.
Word invert(const Word& w);

Word concat(const Word& a, const Word& b);

struct CyclicReduction {
    Word core;        // cyclically reduced
    Word conjugator;  // input == conjugator * core * conjugator^-1
};

// Input must be freely reduced.
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Left rotation of a cyclic word by `amount` positions.
Word rotate(const Word& w, std::size_t amount);

// Least rotation among all rotations of `w` and of invert(w); canonical key
// for duplicate-relator detection up to rotation and inversion.
Word cyclic_canonical_key(const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

// Text form used in files and on the CLI: whitespace-separated tokens
// `name` / `name^-1`; the empty word renders as `1`.
std::string format_word(const Word& w, const std::vector<std::string>& names);

// `name_to_index` returns the generator index for a token, or -1 if unknown
// (which raises std::invalid_argument here).
Word parse_word(const std::string& text,
                const std::function<int(const std::string&)>& name_to_index);

}  // namespace km
