// SPDX-License-Identifier: Apache-2.0
#include "cutspec/edge_set.hpp"

#include "cutspec/error.hpp"

namespace cutspec {

namespace {

constexpr std::size_t words_for(std::size_t width) { return (width + 63) / 64; }

}  // namespace

EdgeSet::EdgeSet(std::size_t width) : width_(width), words_(words_for(width), 0) {}

EdgeSet EdgeSet::of(std::size_t width, std::initializer_list<std::uint32_t> ids)
{
    EdgeSet s(width);
    for (auto id : ids)
        s.insert(static_cast<EdgeId>(id));
    return s;
}

EdgeSet EdgeSet::of(std::size_t width, std::span<const EdgeId> ids)
{
    EdgeSet s(width);
    for (auto id : ids)
        s.insert(id);
    return s;
}

EdgeSet EdgeSet::full(std::size_t width)
{
    EdgeSet s(width);
    for (std::size_t i = 0; i < width; ++i)
        s.insert(edge_at(i));
    return s;
}

std::size_t EdgeSet::count() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool EdgeSet::empty() const noexcept
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

void EdgeSet::check_id(EdgeId e) const
{
    if (raw(e) == 0 || raw(e) > width_)
        throw Error(ErrorKind::LengthMismatch,
                    "edge id " + std::to_string(raw(e)) + " outside 1.." + std::to_string(width_));
}

void EdgeSet::check_width(const EdgeSet& other) const
{
    if (width_ != other.width_)
        throw Error(ErrorKind::LengthMismatch, "edge sets of width " + std::to_string(width_) +
                                                   " and " + std::to_string(other.width_));
}

bool EdgeSet::contains(EdgeId e) const
{
    check_id(e);
    const auto i = index_of(e);
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void EdgeSet::insert(EdgeId e)
{
    check_id(e);
    const auto i = index_of(e);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void EdgeSet::erase(EdgeId e)
{
    check_id(e);
    const auto i = index_of(e);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

void EdgeSet::flip(EdgeId e)
{
    check_id(e);
    const auto i = index_of(e);
    words_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::vector<EdgeId> EdgeSet::ids() const
{
    std::vector<EdgeId> out;
    out.reserve(count());
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
}

std::string EdgeSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for_each([&](EdgeId e) {
        if (!first)
            out += ',';
        out += std::to_string(raw(e));
        first = false;
    });
    return out + "}";
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other)
{
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other)
{
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other)
{
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const
{
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

std::size_t EdgeSet::hash() const noexcept
{
    // FNV-1a over the words; good enough for hash-set deduplication.
    std::uint64_t h = 1469598103934665603ULL ^ width_;
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

bool lex_less(const EdgeSet& a, const EdgeSet& b)
{
    if (a.width() != b.width())
        throw Error(ErrorKind::LengthMismatch, "lex_less on different widths");
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        const std::uint64_t diff = wa[w] ^ wb[w];
        if (diff == 0)
            continue;
        const int bit = std::countr_zero(diff);
        const bool a_has = (wa[w] >> bit) & 1U;
        // The set lacking the first differing id either runs out (and is a
        // proper prefix, hence smaller) or continues with a larger id.
        const EdgeSet& other = a_has ? b : a;
        const auto wo = other.words();
        bool other_continues = (bit < 63) && ((wo[w] >> (bit + 1)) != 0);
        for (std::size_t k = w + 1; k < wo.size() && !other_continues; ++k)
            other_continues = wo[k] != 0;
        return a_has ? other_continues : !other_continues;
    }
    return false;
}

std::size_t overlap_count(const EdgeSet& a, const EdgeSet& b)
{
    if (a.width() != b.width())
        throw Error(ErrorKind::LengthMismatch, "overlap_count on different widths");
    std::size_t total = 0;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    return total;
}

}  // namespace cutspec
