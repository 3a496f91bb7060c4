#include "betti_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace frobcx {

BettiVector BettiVector::delta(int i) {
    BettiVector v;
    v.add(i, 1);
    return v;
}

std::int64_t BettiVector::at(int i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0 : it->second;
}

void BettiVector::add(int i, std::int64_t count) {
    if (i < -2)
        throw std::invalid_argument("betti: index below -2");
    if (count == 0) return;
    auto [it, inserted] = entries_.emplace(i, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0) entries_.erase(it);
    }
    if (at(i) < 0)
        throw std::invalid_argument("betti: negative count");
}

BettiVector BettiVector::shifted(int s) const {
    BettiVector out;
    for (auto [i, c] : entries_) out.add(i + s, c);
    return out;
}

void BettiVector::accumulate(const BettiVector& other, int shift) {
    for (auto [i, c] : other.entries_) add(i + shift, c);
}

std::string BettiVector::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [i, c] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << i << ':' << c;
    }
    os << '}';
    return os.str();
}

}  // namespace frobcx
