// Weight systems for graded polynomial rings k[x_0..x_n] with deg(x_i) = w_i.
// The grouped form collects equal weights into (value m_i, multiplicity a_i)
// pairs; divisible systems additionally satisfy m_0 = 1, a_0 >= 2 and
// m_i | m_{i+1}.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "wps/errors.hpp"
#include "wps/rational.hpp"

namespace wps {

struct WeightGroup {
    long value = 1;         // m_i
    int multiplicity = 0;   // a_i
};

class WeightSystem {
public:
    WeightSystem() = default;

    explicit WeightSystem(std::vector<long> weights, std::vector<std::string> names = {})
        : weights_(std::move(weights)), names_(std::move(names)) {
        if (weights_.empty()) throw DomainError("weight system needs at least one weight");
        if (!std::is_sorted(weights_.begin(), weights_.end()))
            throw DomainError("weights must be weakly increasing");
        for (long w : weights_)
            if (w < 1) throw DomainError("weights must be positive");
        for (long w : weights_) {
            if (!grouped_.empty() && grouped_.back().value == w)
                ++grouped_.back().multiplicity;
            else
                grouped_.push_back({w, 1});
        }
        lcm_ = 1;
        for (long w : weights_) lcm_ = lcm_long(lcm_, w);
        if (names_.empty()) names_ = default_names();
        if (names_.size() != weights_.size())
            throw DimensionError("variable name count does not match weight count");
    }

    int var_count() const { return static_cast<int>(weights_.size()); }
    const std::vector<long>& weights() const { return weights_; }
    long weight(int i) const { return weights_.at(i); }
    const std::vector<WeightGroup>& grouped() const { return grouped_; }
    long lcm() const { return lcm_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }

    int var_index(const std::string& name) const {
        for (int i = 0; i < var_count(); ++i)
            if (names_[i] == name) return i;
        return -1;
    }

    // gcd of all weights except w_i equals 1, for every i (Setup well-formedness).
    bool well_formed() const {
        for (size_t skip = 0; skip < weights_.size(); ++skip) {
            Z g = 0;
            for (size_t i = 0; i < weights_.size(); ++i)
                if (i != skip) g = gcd(g, Z(weights_[i]));
            if (g != 1) return false;
        }
        return true;
    }

    bool divisible() const {
        if (grouped_.front().value != 1 || grouped_.front().multiplicity < 2) return false;
        for (size_t i = 0; i + 1 < grouped_.size(); ++i)
            if (grouped_[i + 1].value % grouped_[i].value != 0) return false;
        return true;
    }

    // w^i of Def 5.4: the sum of the i largest weights; w^0 = 0.
    long w_upper(int i) const {
        if (i < 0 || i > var_count()) throw DimensionError("w_upper index out of range");
        long s = 0;
        for (int j = 0; j < i; ++j) s += weights_[weights_.size() - 1 - j];
        return s;
    }

    // Flat variable index of x_{gi, j} (grouped index gi, 1-based j within group).
    int grouped_var_index(int gi, int j) const {
        int base = 0;
        for (int g = 0; g < gi; ++g) base += grouped_.at(g).multiplicity;
        if (j < 1 || j > grouped_.at(gi).multiplicity)
            throw DimensionError("grouped variable index out of range");
        return base + j - 1;
    }

    bool operator==(const WeightSystem& o) const { return weights_ == o.weights_; }

    // Appends one weight m, re-sorting; names regenerate to the x{i}_{j} scheme.
    WeightSystem with_appended(long m) const {
        std::vector<long> w = weights_;
        w.insert(std::upper_bound(w.begin(), w.end(), m), m);
        return WeightSystem(w);
    }

private:
    // x{i}_{j} per the grouped convention: x0_1 .. x0_a0, x1_1, ...
    std::vector<std::string> default_names() const {
        std::vector<std::string> out;
        for (size_t gi = 0; gi < grouped_.size(); ++gi)
            for (int j = 1; j <= grouped_[gi].multiplicity; ++j)
                out.push_back("x" + std::to_string(gi) + "_" + std::to_string(j));
        return out;
    }

    std::vector<long> weights_;
    std::vector<WeightGroup> grouped_;
    std::vector<std::string> names_;
    long lcm_ = 1;
};

}  // namespace wps
