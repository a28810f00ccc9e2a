#include "sumpath/avgfree.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sumpath {

namespace {

constexpr std::uint64_t kVectorBudget = 8'000'000;  // per (D, M) pair
constexpr int kMaxDigits = 16;

// Enumerates all M^D digit vectors, tallying squared norms. Returns the norm
// class with the most vectors (smallest norm on ties) and its size.
std::pair<long long, std::uint64_t> best_norm_class(int D, int M) {
    std::size_t max_norm = static_cast<std::size_t>(D) * (M - 1) * (M - 1);
    std::vector<std::uint64_t> count(max_norm + 1, 0);
    std::vector<int> digit(static_cast<std::size_t>(D), 0);
    long long norm = 0;
    for (;;) {
        ++count[static_cast<std::size_t>(norm)];
        int i = 0;
        while (i < D) {
            int d = digit[static_cast<std::size_t>(i)];
            norm -= static_cast<long long>(d) * d;
            if (d + 1 < M) {
                digit[static_cast<std::size_t>(i)] = d + 1;
                norm += static_cast<long long>(d + 1) * (d + 1);
                break;
            }
            digit[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == D) break;
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r <= max_norm; ++r)
        if (count[r] > count[best]) best = r;
    return {static_cast<long long>(best), count[best]};
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kVectorBudget * 2) return UINT64_MAX;
        r *= base;
    }
    return r;
}

template <typename T>
bool no_forbidden_average(const std::vector<T>& el, int k) {
    auto in_set = [&](const T& v) {
        return std::binary_search(el.begin(), el.end(), v);
    };
    // Combos with repetition, non-decreasing by index; a constant combo with
    // quotient equal to its element is the allowed degenerate case.
    std::vector<std::size_t> pick;
    for (int kp = 2; kp <= k; ++kp) {
        bool bad = false;
        auto rec = [&](auto&& self, std::size_t start, int remaining, T partial) -> void {
            if (bad) return;
            if (remaining == 0) {
                if (partial % kp != 0) return;
                T q = partial / kp;
                if (!in_set(q)) return;
                bool constant = pick.front() == pick.back();
                if (!constant) bad = true;
                return;
            }
            for (std::size_t i = start; i < el.size(); ++i) {
                pick.push_back(i);
                self(self, i, remaining - 1, partial + el[i]);
                pick.pop_back();
                if (bad) return;
            }
        };
        rec(rec, 0, kp, T(0));
        if (bad) return false;
    }
    return true;
}

}  // namespace

bool verify_average_free(const std::vector<BigInt>& elements, int k) {
    if (k < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<BigInt> el = elements;
    std::sort(el.begin(), el.end());
    if (el.size() <= 1) return true;
    // int64 fast path when sums of k elements cannot overflow
    if (el.back() <= BigInt(INT64_MAX / (k + 1))) {
        std::vector<std::int64_t> small;
        small.reserve(el.size());
        for (const auto& x : el) small.push_back(x.convert_to<std::int64_t>());
        return no_forbidden_average(small, k);
    }
    return no_forbidden_average(el, k);
}

AvgFreeSet build_behrend_set(int k, double epsilon, int n) {
    if (k < 2) throw std::invalid_argument("average-freeness order must be >= 2");
    if (n < 1) throw std::invalid_argument("requested size must be >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1)");

    for (int D = 2; D <= kMaxDigits; ++D) {
        for (int M = 2; ipow(static_cast<std::uint64_t>(M), D) <= kVectorBudget; ++M) {
            auto [norm, size] = best_norm_class(D, M);
            if (size < static_cast<std::uint64_t>(n)) continue;

            long long base = static_cast<long long>(k) * M + 1;
            std::vector<BigInt> powers(static_cast<std::size_t>(D));
            powers[0] = 1;
            for (int i = 1; i < D; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i - 1)] * base;

            std::vector<BigInt> values;
            std::vector<int> digit(static_cast<std::size_t>(D), 0);
            long long cur = 0;
            for (;;) {
                if (cur == norm) {
                    BigInt v = 0;
                    for (int i = 0; i < D; ++i) v += digit[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(i)];
                    values.push_back(std::move(v));
                }
                int i = 0;
                while (i < D) {
                    int d = digit[static_cast<std::size_t>(i)];
                    cur -= static_cast<long long>(d) * d;
                    if (d + 1 < M) {
                        digit[static_cast<std::size_t>(i)] = d + 1;
                        cur += static_cast<long long>(d + 1) * (d + 1);
                        break;
                    }
                    digit[static_cast<std::size_t>(i)] = 0;
                    ++i;
                }
                if (i == D) break;
            }
            std::sort(values.begin(), values.end());
            values.resize(static_cast<std::size_t>(n));

            AvgFreeSet out;
            out.elements = std::move(values);
            out.k = k;
            out.param_digits = D;
            out.param_digit_cap = M;
            out.param_base = base;
            out.bound = powers[static_cast<std::size_t>(D - 1)] * base - 1;  // b^D - 1
            return out;
        }
    }
    throw std::runtime_error("average-free construction budget exceeded");
}

std::vector<std::string> validate(const AvgFreeSet& s) {
    std::vector<std::string> report;
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (s.elements[i] < 0) report.push_back("negative element");
        if (i > 0 && s.elements[i] <= s.elements[i - 1]) {
            report.push_back("elements not strictly increasing");
            break;
        }
    }
    if (!s.elements.empty() && s.elements.back() > s.bound)
        report.push_back("max element exceeds bound");
    if (s.k < 1) report.push_back("order below 1");
    // Predicate check only at desk scale; |S|^(k+1)-style enumerations beyond
    // the budget are the caller's responsibility (verify_average_free).
    double combos = 1.0;
    for (int i = 0; i < s.k; ++i) combos *= static_cast<double>(s.elements.size() + 1);
    if (s.k >= 1 && combos <= 2e7 && !verify_average_free(s.elements, s.k))
        report.push_back("k-average-free predicate violated");
    return report;
}

Json to_json(const AvgFreeSet& s) {
    Json elements = Json::array();
    for (const auto& x : s.elements) elements.push_back(to_decimal(x));
    return Json{{"k", s.k},
                {"elements", elements},
                {"bound", to_decimal(s.bound)},
                {"params", Json{{"D", s.param_digits}, {"M", s.param_digit_cap}, {"base", s.param_base}}}};
}

AvgFreeSet avgfree_from_json(const Json& j) {
    AvgFreeSet s;
    s.k = j.at("k").get<int>();
    for (const auto& x : j.at("elements")) s.elements.push_back(from_decimal(x.get<std::string>()));
    s.bound = from_decimal(j.at("bound").get<std::string>());
    if (j.contains("params")) {
        s.param_digits = j["params"].value("D", 0);
        s.param_digit_cap = j["params"].value("M", 0);
        s.param_base = j["params"].value("base", 0ll);
    }
    return s;
}

}  // namespace sumpath
