#include "descmat/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace descmat {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, BigInt> g_mn_memo;
std::mutex g_mn_mutex;

// Beta numbers lambda_i + (l - i), strictly decreasing; border-strip removal
// becomes "subtract r from one beta number, keeping all distinct", and the
// strip height is the number of beta values jumped over.
std::vector<int> beta_numbers(const std::vector<int>& parts) {
    const int l = static_cast<int>(parts.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = parts[i] + (l - 1 - i);
    return beta;
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int part = beta[i] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

BigInt mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : throw std::logic_error("size mismatch");
    Key key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        auto it = g_mn_memo.find(key);
        if (it != g_mn_memo.end()) return it->second;
    }

    const int r = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());
    std::vector<int> beta = beta_numbers(lambda);
    BigInt total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (target < b && b < beta[i]) ++height;
        std::vector<int> nbeta = beta;
        nbeta[i] = target;
        BigInt sub = mn_rec(partition_from_beta(std::move(nbeta)), rest);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }

    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return g_mn_memo.emplace(std::move(key), std::move(total)).first->second;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::invalid_argument("character arguments must partition the same n");
    return mn_rec(lambda.parts(), mu.parts());
}

BigInt zee(const Partition& mu) {
    BigInt z = 1;
    int current = -1, count = 0;
    auto flush = [&]() {
        if (current > 0) z *= int_pow(BigInt(current), count) * factorial(count);
    };
    for (int p : mu.parts()) {
        if (p == current) {
            ++count;
        } else {
            flush();
            current = p;
            count = 1;
        }
    }
    flush();
    return z;
}

BigInt conjugacy_class_size(const Partition& mu) {
    return factorial(static_cast<unsigned long>(mu.n())) / zee(mu);
}

}  // namespace descmat
