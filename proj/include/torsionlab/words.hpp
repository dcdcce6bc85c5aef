#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

/// Freely reduced word in a free group; letters are (generator index, +-1).
class GroupWord {
   public:
    using Letter = std::pair<int, int>;

    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);

    static GroupWord generator(int index, int exponent = 1);
    /// Parses the compact syntax `x1 x2^-1 x3^5` (generator indices are 1-based).
    static GroupWord parse(const std::string& text);

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    GroupWord operator*(const GroupWord& o) const;
    GroupWord inverse() const;
    GroupWord pow(long n) const;

    std::string to_string() const;  // compact syntax, `1` for the empty word

    auto operator<=>(const GroupWord&) const = default;

   private:
    std::vector<Letter> letters_;  // exponents are +-1, freely reduced
};

inline GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return a * b * a.inverse() * b.inverse();
}

/// Formal Z-linear combination of group words.
class GroupRingElement {
   public:
    GroupRingElement() = default;
    explicit GroupRingElement(const GroupWord& w, Int c = Int(1));
    static GroupRingElement zero() { return {}; }
    static GroupRingElement one() { return GroupRingElement(GroupWord{}); }

    const std::map<GroupWord, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

   private:
    void add_term(const GroupWord& w, const Int& c);
    std::map<GroupWord, Int> terms_;  // no zero coefficients
};

/// Fox derivative d w / d x_i: d x_j/d x_i = delta_ij, d(uv) = du + u dv,
/// d(x_i^-1) = -x_i^-1.
GroupRingElement fox_derivative(const GroupWord& w, int generator);

/// Substitutes each generator by the given word (index into `images`);
/// generators beyond the table map to themselves.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);
GroupRingElement substitute(const GroupRingElement& e, const std::vector<GroupWord>& images);

}  // namespace torsionlab
