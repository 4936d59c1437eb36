// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cutspec/ids.hpp"

namespace cutspec {

// Characteristic vector of a set of edges over GF(2). The width is fixed at
// construction and every binary operation insists on equal widths.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t width);

    static EdgeSet of(std::size_t width, std::initializer_list<std::uint32_t> ids);
    static EdgeSet of(std::size_t width, std::span<const EdgeId> ids);
    static EdgeSet full(std::size_t width);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool empty() const noexcept;

    [[nodiscard]] bool contains(EdgeId e) const;
    void insert(EdgeId e);
    void erase(EdgeId e);
    void flip(EdgeId e);

    [[nodiscard]] std::vector<EdgeId> ids() const;
    [[nodiscard]] std::string to_string() const;  // "{1,4,9}"

    // Calls f(EdgeId) for each member in increasing order.
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(edge_at(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    EdgeSet& operator^=(const EdgeSet& other);
    EdgeSet& operator&=(const EdgeSet& other);
    EdgeSet& operator|=(const EdgeSet& other);

    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

    [[nodiscard]] bool is_subset_of(const EdgeSet& other) const;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::size_t hash() const noexcept;

private:
    void check_width(const EdgeSet& other) const;
    void check_id(EdgeId e) const;

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b);

// Order by the sorted list of member ids, compared lexicographically.
bool lex_less(const EdgeSet& a, const EdgeSet& b);

// |a ∩ b| without materialising the intersection.
std::size_t overlap_count(const EdgeSet& a, const EdgeSet& b);

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const noexcept { return s.hash(); }
};

}  // namespace cutspec
