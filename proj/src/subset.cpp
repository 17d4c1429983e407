#include "descmat/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace descmat {

namespace {

void check_ambient(int ambient) {
    if (ambient < 0 || ambient > kMaxAmbient)
        throw std::invalid_argument("ambient size out of range [0, " +
                                    std::to_string(kMaxAmbient) + "]");
}

void check_same_ambient(const Subset& I, const Subset& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("subsets live in different ambient sets");
}

}  // namespace

Subset::Subset(std::uint64_t bits, int ambient) : bits_(bits), ambient_(ambient) {
    check_ambient(ambient);
    if (ambient < 64 && (bits >> ambient) != 0)
        throw std::invalid_argument("subset has elements above its ambient size");
}

Subset Subset::full(int ambient) {
    check_ambient(ambient);
    return Subset(ambient == 0 ? 0 : ((std::uint64_t{1} << ambient) - 1), ambient);
}

Subset Subset::of(std::initializer_list<int> elems, int ambient) {
    return from_elements(std::vector<int>(elems), ambient);
}

Subset Subset::from_elements(const std::vector<int>& elems, int ambient) {
    std::uint64_t bits = 0;
    for (int j : elems) {
        if (j < 1 || j > ambient)
            throw std::invalid_argument("element " + std::to_string(j) + " outside [1, " +
                                        std::to_string(ambient) + "]");
        bits |= std::uint64_t{1} << (j - 1);
    }
    return Subset(bits, ambient);
}

int Subset::size() const { return std::popcount(bits_); }

bool Subset::contains(int j) const {
    if (j < 1 || j > ambient_) return false;
    return (bits_ >> (j - 1)) & 1;
}

bool Subset::subset_of(const Subset& other) const {
    check_same_ambient(*this, other);
    return (bits_ & ~other.bits_) == 0;
}

Subset Subset::intersect(const Subset& other) const {
    check_same_ambient(*this, other);
    return Subset(bits_ & other.bits_, ambient_);
}

Subset Subset::unite(const Subset& other) const {
    check_same_ambient(*this, other);
    return Subset(bits_ | other.bits_, ambient_);
}

Subset Subset::minus(const Subset& other) const {
    check_same_ambient(*this, other);
    return Subset(bits_ & ~other.bits_, ambient_);
}

Subset Subset::complement() const { return Subset(full(ambient_).bits() & ~bits_, ambient_); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string Subset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int j : elements()) {
        if (!first) os << ',';
        os << j;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<Run> runs(const Subset& I) {
    std::vector<Run> out;
    std::uint64_t b = I.bits();
    while (b != 0) {
        int lo = std::countr_zero(b) + 1;
        std::uint64_t shifted = b >> (lo - 1);
        int len = std::countr_zero(~shifted);
        out.push_back(Run{lo, len});
        if (lo - 1 + len >= 64) break;
        b &= ~(((std::uint64_t{1} << len) - 1) << (lo - 1));
    }
    return out;
}

bool antilex_less(const Subset& I, const Subset& J) {
    check_same_ambient(I, J);
    if (I.bits() == J.bits())
        throw std::invalid_argument("anti-lexicographic comparison of equal subsets");
    return I.bits() < J.bits();
}

bool prefix_compatible(const Subset& I, const Subset& J) {
    check_same_ambient(I, J);
    for (const Run& r : runs(I)) {
        std::uint64_t window = (J.bits() >> (r.lo - 1)) & ((std::uint64_t{1} << r.len) - 1);
        if ((window & (window + 1)) != 0) return false;  // not of the form 0...01...1
    }
    return true;
}

BigInt parabolic_order(const Subset& I) {
    BigInt result = 1;
    for (const Run& r : runs(I)) result *= factorial(static_cast<unsigned long>(r.len) + 1);
    return result;
}

int fin(const Subset& I) {
    for (int i = I.ambient(); i >= 1; --i)
        if (!I.contains(i)) return i;
    return 0;
}

Subset subset_from_ord(std::uint64_t ord, int ambient) { return Subset(ord, ambient); }

}  // namespace descmat
