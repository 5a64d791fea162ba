#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mfxwl/errors.hpp"

namespace mfxwl {

enum class signal_kind { raw, price, returns, volatility, measure };

inline const char* to_string(signal_kind k) {
    switch (k) {
        case signal_kind::raw: return "raw";
        case signal_kind::price: return "price";
        case signal_kind::returns: return "return";
        case signal_kind::volatility: return "volatility";
        case signal_kind::measure: return "measure";
    }
    return "?";
}

/// A labelled series of finite real values.
struct signal {
    std::vector<double> values;
    std::string name;
    signal_kind kind = signal_kind::raw;

    std::size_t size() const { return values.size(); }
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t largest_power_of_two_leq(std::size_t n) {
    std::size_t p = 1;
    while (p * 2 <= n) p *= 2;
    return p;
}

inline int dyadic_levels(std::size_t n) {
    int j = 0;
    while (n > 1) {
        n /= 2;
        ++j;
    }
    return j;
}

/// Log-returns of a strictly positive price series:
/// out[t] = ln(prices[t+1]) - ln(prices[t]).
inline signal log_returns(const signal& prices) {
    if (prices.size() < 2)
        throw numeric_error("log_returns: need at least 2 prices, got " +
                            std::to_string(prices.size()));
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices.values[i] > 0.0))
            throw numeric_error("log_returns: non-positive price at index " + std::to_string(i));
    }
    signal out;
    out.values.resize(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i)
        out.values[i] = std::log(prices.values[i + 1]) - std::log(prices.values[i]);
    out.name = prices.name.empty() ? "returns" : prices.name + ".returns";
    out.kind = signal_kind::returns;
    return out;
}

/// Elementwise absolute value. Accepts return, volatility or raw input so
/// that volatility(volatility(r)) == volatility(r) is well-formed.
inline signal volatility(const signal& r) {
    if (r.kind == signal_kind::measure || r.kind == signal_kind::price)
        throw config_error("volatility: expected a return-like series, got kind=" +
                           std::string(to_string(r.kind)));
    signal out;
    out.values.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out.values[i] = std::fabs(r.values[i]);
    out.name = r.name.empty() ? "volatility" : r.name + ".abs";
    out.kind = signal_kind::volatility;
    return out;
}

/// Running sum of the series. Measures and increment series are turned into
/// the function analyzed by the wavelet pipeline this way.
inline signal cumulative_profile(const signal& s) {
    signal out;
    out.values.resize(s.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += s.values[i];
        out.values[i] = acc;
    }
    out.name = s.name.empty() ? "profile" : s.name + ".profile";
    out.kind = signal_kind::raw;
    return out;
}

enum class align_policy { truncate_head, truncate_tail };

/// A pair of equal, dyadic-length series ready for joint analysis.
struct signal_pair {
    signal x;
    signal y;
    std::size_t length = 0;
};

/// Cut both series to the largest power of two <= min length. truncate_head
/// keeps the most recent points, truncate_tail the earliest.
inline signal_pair align_pair(signal x, signal y, align_policy policy = align_policy::truncate_head) {
    const std::size_t n = std::min(x.size(), y.size());
    const std::size_t len = largest_power_of_two_leq(n == 0 ? 1 : n);
    if (len < 16)
        throw numeric_error("align_pair: aligned length " + std::to_string(len) +
                            " is below the minimum of 16");
    auto cut = [&](signal& s) {
        if (s.size() == len) return;
        if (policy == align_policy::truncate_head)
            s.values.erase(s.values.begin(), s.values.end() - static_cast<std::ptrdiff_t>(len));
        else
            s.values.resize(len);
    };
    cut(x);
    cut(y);
    return signal_pair{std::move(x), std::move(y), len};
}

}  // namespace mfxwl
