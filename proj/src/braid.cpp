#include "hexflip/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace hexflip {

void BraidWord::push(int index, int sign, int count) {
    if (index < 1 || index > 6 || (sign != 1 && sign != -1))
        throw std::invalid_argument("BraidWord::push: bad letter");
    for (int k = 0; k < count; ++k) letters.push_back({index, sign});
}

void BraidWord::append(const BraidWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back({it->index, -it->sign});
    return r;
}

BraidWord BraidWord::freely_reduced() const {
    BraidWord r;
    for (const auto& l : letters) {
        if (!r.letters.empty() && r.letters.back().index == l.index &&
            r.letters.back().sign == -l.sign)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

std::array<int, 6> BraidWord::permutation() const {
    // image[s-1] = slot where the point starting at slot s ends up
    std::array<int, 6> image;
    for (int s = 1; s <= 6; ++s) {
        int cur = s;
        for (const auto& l : letters) {
            int i = l.index, j = l.index % 6 + 1;
            if (cur == i)
                cur = j;
            else if (cur == j)
                cur = i;
        }
        image[s - 1] = cur;
    }
    return image;
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k) os << ' ';
        os << letters[k].sign * letters[k].index;
    }
    return os.str();
}

BraidWord BraidWord::parse(const std::string& text) {
    BraidWord w;
    std::istringstream is(text);
    int v;
    while (is >> v) {
        if (v == 0 || v > 6 || v < -6) throw std::invalid_argument("BraidWord::parse: bad letter");
        w.push(std::abs(v), v > 0 ? 1 : -1);
    }
    return w;
}

BraidWord cyclic_rot_word() {
    BraidWord w;
    for (int i = 1; i <= 5; ++i) w.push(i, 1);
    return w;
}

BraidWord half_twist_word(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("half_twist_word: bad index");
    int j = i % 6 + 1;
    BraidWord w;
    for (int rep = 0; rep < 2; ++rep) {
        w.push(i, 1);
        w.push(j, 1);
        w.push(i, 1);
    }
    return w;
}

}  // namespace hexflip
