#include "torsionlab/words.hpp"

#include <sstream>
#include <stdexcept>

namespace torsionlab {

namespace {
void push_reduced(std::vector<GroupWord::Letter>& out, GroupWord::Letter l) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
        out.pop_back();
    else
        out.push_back(l);
}
}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) {
    for (auto l : letters) {
        if (l.second != 1 && l.second != -1) throw std::invalid_argument("letter exponent must be +-1");
        push_reduced(letters_, l);
    }
}

GroupWord GroupWord::generator(int index, int exponent) {
    GroupWord w;
    long n = exponent;
    int sign = n < 0 ? -1 : 1;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) w.letters_.push_back({index, sign});
    return w;
}

GroupWord GroupWord::parse(const std::string& text) {
    GroupWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        if (tok[0] != 'x') throw std::invalid_argument("bad word token: " + tok);
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1)) - 1;
        long e = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
        if (idx < 0) throw std::invalid_argument("bad generator index in: " + tok);
        w = w * generator(idx, static_cast<int>(e < 0 ? -1 : 1)).pow(e < 0 ? -e : e);
    }
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    GroupWord w = *this;
    for (auto l : o.letters_) push_reduced(w.letters_, l);
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->first, -it->second});
    return w;
}

GroupWord GroupWord::pow(long n) const {
    GroupWord base = n < 0 ? inverse() : *this;
    GroupWord r;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
    return r;
}

std::string GroupWord::to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        long run = static_cast<long>(j - i) * letters_[i].second;
        if (!first) os << " ";
        os << "x" << (letters_[i].first + 1);
        if (run != 1) os << "^" << run;
        first = false;
        i = j;
    }
    return os.str();
}

GroupRingElement::GroupRingElement(const GroupWord& w, Int c) { add_term(w, c); }

void GroupRingElement::add_term(const GroupWord& w, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    return *this + (-o);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

std::string GroupRingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << "(" << w.to_string() << ")";
        first = false;
    }
    return os.str();
}

GroupRingElement fox_derivative(const GroupWord& w, int generator) {
    GroupRingElement result;
    GroupWord prefix;
    for (auto [idx, exp] : w.letters()) {
        if (idx == generator) {
            if (exp == 1) {
                result = result + GroupRingElement(prefix);
            } else {
                GroupWord p = prefix * GroupWord::generator(idx, -1);
                result = result - GroupRingElement(p);
            }
        }
        prefix = prefix * GroupWord::generator(idx, exp);
    }
    return result;
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
    GroupWord r;
    for (auto [idx, exp] : w.letters()) {
        if (idx < static_cast<int>(images.size())) {
            r = r * (exp == 1 ? images[static_cast<size_t>(idx)]
                              : images[static_cast<size_t>(idx)].inverse());
        } else {
            r = r * GroupWord::generator(idx, exp);
        }
    }
    return r;
}

GroupRingElement substitute(const GroupRingElement& e, const std::vector<GroupWord>& images) {
    GroupRingElement r;
    for (const auto& [w, c] : e.terms()) r = r + GroupRingElement(substitute(w, images), c);
    return r;
}

}  // namespace torsionlab
