#include "descmat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace descmat {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    Permutation p = identity(n);
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) w[i - 1] = w_[other.w_[i - 1] - 1];
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(n());
    for (int i = 1; i <= n(); ++i) w[w_[i - 1] - 1] = i;
    return Permutation(std::move(w));
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= n(); ++i)
        if (w_[w_[i - 1] - 1] != i) return false;
    return true;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (w_[i - 1] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool compact = n() <= 9;
    for (int i = 0; i < n(); ++i) {
        if (!compact && i) os << ',';
        os << w_[i];
    }
    return os.str();
}

Subset descents(const Permutation& pi) {
    std::uint64_t bits = 0;
    for (int i = 1; i < pi.n(); ++i)
        if (pi(i) > pi(i + 1)) bits |= std::uint64_t{1} << (i - 1);
    return Subset(bits, std::max(pi.n() - 1, 0));
}

int inversions(const Permutation& pi) {
    int count = 0;
    for (int i = 1; i <= pi.n(); ++i)
        for (int j = i + 1; j <= pi.n(); ++j)
            if (pi(i) > pi(j)) ++count;
    return count;
}

int major_index(const Permutation& pi) {
    int maj = 0;
    for (int i : descents(pi).elements()) maj += i;
    return maj;
}

LengthMaj length_and_maj(const Permutation& pi) {
    return LengthMaj{inversions(pi), major_index(pi)};
}

Partition cycle_type(const Permutation& pi) {
    std::vector<bool> seen(pi.n(), false);
    std::vector<int> lengths;
    for (int i = 1; i <= pi.n(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        do {
            seen[j - 1] = true;
            j = pi(j);
            ++len;
        } while (j != i);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

Permutation coxeter_element(const Subset& J, int n) {
    if (J.ambient() != n - 1) throw std::invalid_argument("Coxeter index set must lie in [n-1]");
    Permutation c = Permutation::identity(n);
    for (int j : J.elements()) c = c.compose(Permutation::simple(j, n));
    return c;
}

bool is_arc_permutation(const Permutation& pi) {
    const int n = pi.n();
    if (n <= 2) return true;
    std::uint64_t mask = 0;  // residues mod n currently covered
    for (int k = 1; k <= n; ++k) {
        mask |= std::uint64_t{1} << (pi(k) % n);
        if (k == n) break;
        // a nonempty proper subset of Z_n is a cyclic interval iff it has
        // exactly one boundary i with i in S, i+1 not in S (cyclically)
        int boundaries = 0;
        for (int i = 0; i < n; ++i) {
            bool here = (mask >> i) & 1;
            bool next = (mask >> ((i + 1) % n)) & 1;
            if (here && !next) ++boundaries;
        }
        if (boundaries != 1) return false;
    }
    return true;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        visit(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("malformed permutation: " + text);
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

}  // namespace descmat
