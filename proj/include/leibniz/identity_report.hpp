#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

/// One failing instance of an identity: the basis indices it was evaluated on
/// and the nonzero defect it produced.
struct Witness {
    std::string identity;  // short label, e.g. "leibniz" or "(c)"
    std::vector<std::size_t> indices;
    Vector defect;
};

/// Result of checking an identity exhaustively over basis tuples.
/// holds() is true exactly when no witness was recorded.
class IdentityReport {
public:
    bool holds() const noexcept { return witnesses_.empty(); }
    const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }

    void add(std::string identity, std::vector<std::size_t> indices, Vector defect) {
        witnesses_.push_back({std::move(identity), std::move(indices), std::move(defect)});
    }
    /// Records a witness only when the defect is nonzero.
    void expect_zero(const std::string& identity, std::vector<std::size_t> indices, Vector defect) {
        if (!is_zero(defect)) add(identity, std::move(indices), std::move(defect));
    }
    void merge(const IdentityReport& other) {
        witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
    }

private:
    std::vector<Witness> witnesses_;
};

std::string describe(const Witness& w);

}  // namespace leibniz
