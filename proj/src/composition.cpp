#include "descmat/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace descmat {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    return os.str();
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const { return join_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return join_parts(parts_); }

Partition underlying_partition(const Composition& mu) {
    std::vector<int> parts = mu.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

std::pair<Subset, Subset> composition_to_subsets(const Composition& mu) {
    int n = mu.n();
    std::uint64_t s_bits = 0;
    int acc = 0;
    for (int p : mu.parts()) {
        acc += p;
        s_bits |= std::uint64_t{1} << (acc - 1);
    }
    Subset S(s_bits, n);
    Subset I(Subset::full(n).bits() & ~s_bits, n - 1);  // n is always a partial sum
    return {S, I};
}

Subset composition_descent_set(const Composition& mu) { return composition_to_subsets(mu).second; }

Composition subset_to_composition(const Subset& J, int n) {
    if (n < 1) throw std::invalid_argument("composition sum must be positive");
    if (J.ambient() != n - 1)
        throw std::invalid_argument("subset ambient must be n-1");
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        bool is_partial_sum = (i == n) || !J.contains(i);
        if (is_partial_sum) {
            parts.push_back(i - prev);
            prev = i;
        }
    }
    return Composition(std::move(parts));
}

bool refines(const Composition& mu, const Composition& la) {
    if (mu.n() != la.n()) throw std::invalid_argument("compositions of different integers");
    auto [s_mu, i_mu] = composition_to_subsets(mu);
    auto [s_la, i_la] = composition_to_subsets(la);
    return s_la.subset_of(s_mu);
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n < 1) return out;
    std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t o = 0; o < count; ++o)
        out.push_back(subset_to_composition(subset_from_ord(o, n - 1), n));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(stack);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    rec(rec, n, std::max(n, 0));
    std::sort(out.begin(), out.end());
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed partition: " + text);
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("empty partition string");
    return Partition(std::move(parts));
}

}  // namespace descmat
