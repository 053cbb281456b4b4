#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hexflip {

// One leapfrog generator L_i^{sign}, i in 1..6 cyclic.
struct BraidLetter {
    int index;  // 1..6
    int sign;   // +1 or -1
};

struct BraidWord {
    std::vector<BraidLetter> letters;

    BraidWord() = default;

    void push(int index, int sign, int count = 1);
    void append(const BraidWord& w);
    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    // reversed with all signs flipped; the group inverse
    BraidWord inverse() const;
    // cancel adjacent L_i L_i^{-1} pairs
    BraidWord freely_reduced() const;

    // permutation of slots 1..6 induced by the word (image of slot i)
    std::array<int, 6> permutation() const;

    std::string to_string() const;  // e.g. "1 2 -3"
    static BraidWord parse(const std::string& text);
};

BraidWord cyclic_rot_word();              // sigma_5 ... sigma_1 as letters 1..5
BraidWord half_twist_word(int i);         // (L_i L_{i+1} L_i)^2

}  // namespace hexflip
