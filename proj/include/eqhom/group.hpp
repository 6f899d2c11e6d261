#pragma once

// Finite abelian groups given as products of cyclic groups, their character
// groups and finite-dimensional representations as multisets of characters.
//
// A finite abelian group is (non-canonically) isomorphic to its character
// group, so a character of Z_{n1} x ... x Z_{nk} is a residue vector
// (r1, ..., rk) with 0 <= rj < nj. Characters are encoded by a mixed-radix
// index with the first residue most significant; index order therefore
// coincides with lexicographic order of residue vectors and index 0 is the
// trivial character.
//
// Textual forms:
//   group           "1" | "Zn1xZn2x..."          e.g. "Z2", "Z2xZ4"
//   character       "(r1,r2,...)"                e.g. "(1,3)"
//   representation  "0" | char "+" char "+" ...  e.g. "(0)+(1)"

#include "eqhom/errors.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace eqhom {

class Character;
class Representation;

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline bool parse_int(std::string_view s, long long& out)
{
    s = trim(s);
    if (s.empty())
        return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// Split on a separator character at parenthesis depth zero.
inline std::vector<std::string_view> split_top_level(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[')
            ++depth;
        else if (s[i] == ')' || s[i] == ']')
            --depth;
        else if (s[i] == sep && depth == 0) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

}  // namespace detail

class AbelianGroup {
public:
    AbelianGroup() : AbelianGroup(std::vector<int>{}) {}

    explicit AbelianGroup(std::vector<int> cyclic_orders)
    {
        for (int n : cyclic_orders)
            if (n < 1)
                throw PreconditionError("cyclic order must be >= 1, got " + std::to_string(n));
        auto data = std::make_shared<Data>();
        data->orders = std::move(cyclic_orders);
        data->strides.assign(data->orders.size(), 1);
        long long order = 1;
        for (std::size_t k = data->orders.size(); k-- > 0;) {
            data->strides[k] = static_cast<int>(order);
            order *= data->orders[k];
            if (order > (1LL << 24))
                throw PreconditionError("group order too large for exhaustive character enumeration");
        }
        data->order = static_cast<int>(order);
        data_ = std::move(data);
    }

    static AbelianGroup trivial() { return AbelianGroup(std::vector<int>{1}); }

    static constexpr std::string_view grammar =
        "group     := \"1\" | cyclic { \"x\" cyclic }     e.g. Z4, Z2xZ2\n"
        "cyclic    := \"Z\" uint                       uint >= 1\n"
        "character := \"(\" r1 \",\" ... \",\" rk \")\"      0 <= r_j < n_j, one residue per factor;\n"
        "                                          the trivial group's only character is (0)\n"
        "rep       := \"0\" | character { \"+\" character }";

    static AbelianGroup parse(std::string_view spec)
    {
        std::string_view s = detail::trim(spec);
        if (s == "1")
            return trivial();
        if (s.empty())
            throw ParseError("empty group spec");
        std::vector<int> orders;
        for (std::string_view factor : detail::split_top_level(s, 'x')) {
            factor = detail::trim(factor);
            long long n = 0;
            if (factor.size() < 2 || factor.front() != 'Z' || !detail::parse_int(factor.substr(1), n) || n < 1
                || n > (1 << 20))
                throw ParseError("invalid cyclic factor '" + std::string(factor) + "' in group spec '"
                                 + std::string(spec) + "'");
            orders.push_back(static_cast<int>(n));
        }
        return AbelianGroup(std::move(orders));
    }

    const std::vector<int>& cyclic_orders() const { return data_->orders; }
    int rank() const { return static_cast<int>(data_->orders.size()); }
    int order() const { return data_->order; }

    std::string to_string() const
    {
        if (std::all_of(data_->orders.begin(), data_->orders.end(), [](int n) { return n == 1; })
            && data_->orders.size() <= 1)
            return "1";
        std::string out;
        for (std::size_t k = 0; k < data_->orders.size(); ++k) {
            if (k)
                out += 'x';
            out += 'Z' + std::to_string(data_->orders[k]);
        }
        return out;
    }

    // Mixed-radix index of a residue vector; residues must already be reduced.
    int index_of(const std::vector<int>& residues) const
    {
        int idx = 0;
        for (std::size_t k = 0; k < residues.size(); ++k)
            idx += residues[k] * data_->strides[k];
        return idx;
    }

    std::vector<int> residues_of(int index) const
    {
        std::vector<int> r(data_->orders.size());
        for (std::size_t k = 0; k < r.size(); ++k) {
            r[k] = index / data_->strides[k];
            index %= data_->strides[k];
        }
        return r;
    }

    Character identity() const;
    Character character(const std::vector<int>& residues) const;
    Character from_index(int index) const;
    Character parse_character(std::string_view spec) const;
    Representation parse_representation(std::string_view spec) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b)
    {
        return a.data_ == b.data_ || a.data_->orders == b.data_->orders;
    }

private:
    struct Data {
        std::vector<int> orders;
        std::vector<int> strides;
        int order = 1;
    };
    std::shared_ptr<const Data> data_;
};

inline void require_same_group(const AbelianGroup& a, const AbelianGroup& b, const char* what)
{
    if (!(a == b))
        throw PreconditionError(std::string(what) + ": mismatched ambient groups " + a.to_string() + " and "
                                + b.to_string());
}

// An element of the character group A*.
class Character {
public:
    Character(AbelianGroup group, int index) : group_(std::move(group)), index_(index)
    {
        if (index_ < 0 || index_ >= group_.order())
            throw PreconditionError("character index out of range");
    }

    const AbelianGroup& group() const { return group_; }
    int index() const { return index_; }
    bool is_trivial() const { return index_ == 0; }
    std::vector<int> residues() const { return group_.residues_of(index_); }

    Character inverse() const
    {
        std::vector<int> r = residues();
        const auto& n = group_.cyclic_orders();
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = (n[k] - r[k]) % n[k];
        return Character(group_, group_.index_of(r));
    }

    friend Character operator*(const Character& a, const Character& b)
    {
        require_same_group(a.group_, b.group_, "character product");
        std::vector<int> ra = a.residues();
        std::vector<int> rb = b.residues();
        const auto& n = a.group_.cyclic_orders();
        for (std::size_t k = 0; k < ra.size(); ++k)
            ra[k] = (ra[k] + rb[k]) % n[k];
        return Character(a.group_, a.group_.index_of(ra));
    }

    std::string to_string() const
    {
        std::string out = "(";
        std::vector<int> r = residues();
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k)
                out += ',';
            out += std::to_string(r[k]);
        }
        return out + ")";
    }

    friend bool operator==(const Character& a, const Character& b)
    {
        return a.index_ == b.index_ && a.group_ == b.group_;
    }

    // Lexicographic on residues within a group.
    friend std::strong_ordering operator<=>(const Character& a, const Character& b)
    {
        if (auto c = a.index_ <=> b.index_; c != 0)
            return c;
        return a.group_.cyclic_orders() <=> b.group_.cyclic_orders();
    }

private:
    AbelianGroup group_;
    int index_;
};

inline Character char_mul(const Character& a, const Character& b) { return a * b; }
inline Character char_inv(const Character& a) { return a.inverse(); }

inline Character AbelianGroup::identity() const { return Character(*this, 0); }
inline Character AbelianGroup::from_index(int index) const { return Character(*this, index); }

inline Character AbelianGroup::character(const std::vector<int>& residues) const
{
    if (residues.size() != data_->orders.size())
        throw PreconditionError("character has " + std::to_string(residues.size()) + " residues, group "
                                + to_string() + " has rank " + std::to_string(rank()));
    for (std::size_t k = 0; k < residues.size(); ++k)
        if (residues[k] < 0 || residues[k] >= data_->orders[k])
            throw PreconditionError("residue " + std::to_string(residues[k]) + " out of range for Z"
                                    + std::to_string(data_->orders[k]));
    return Character(*this, index_of(residues));
}

inline Character AbelianGroup::parse_character(std::string_view spec) const
{
    std::string_view s = detail::trim(spec);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("invalid character '" + std::string(spec) + "': expected (r1,...,rk)");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<int> residues;
    if (!detail::trim(body).empty()) {
        for (std::string_view part : detail::split_top_level(body, ',')) {
            long long r = 0;
            if (!detail::parse_int(part, r))
                throw ParseError("invalid residue '" + std::string(detail::trim(part)) + "' in character '"
                                 + std::string(spec) + "'");
            residues.push_back(static_cast<int>(r));
        }
    }
    if (residues.size() != data_->orders.size())
        throw ParseError("character '" + std::string(spec) + "' has " + std::to_string(residues.size())
                         + " residues but group " + to_string() + " has rank " + std::to_string(rank()));
    for (std::size_t k = 0; k < residues.size(); ++k)
        if (residues[k] < 0 || residues[k] >= data_->orders[k])
            throw ParseError("residue " + std::to_string(residues[k]) + " in character '" + std::string(spec)
                             + "' out of range for Z" + std::to_string(data_->orders[k]));
    return Character(*this, index_of(residues));
}

// All characters in lexicographic order, trivial character first.
inline std::vector<Character> all_characters(const AbelianGroup& g)
{
    std::vector<Character> out;
    out.reserve(g.order());
    for (int i = 0; i < g.order(); ++i)
        out.emplace_back(g, i);
    return out;
}

// A finite-dimensional representation: a multiset of characters, kept sorted.
class Representation {
public:
    explicit Representation(AbelianGroup group) : group_(std::move(group)) {}

    Representation(AbelianGroup group, std::vector<Character> summands)
        : group_(std::move(group)), summands_(std::move(summands))
    {
        for (const auto& c : summands_)
            require_same_group(group_, c.group(), "representation");
        std::sort(summands_.begin(), summands_.end());
    }

    const AbelianGroup& group() const { return group_; }
    const std::vector<Character>& summands() const { return summands_; }
    int dim() const { return static_cast<int>(summands_.size()); }

    bool contains_trivial() const
    {
        return std::any_of(summands_.begin(), summands_.end(), [](const Character& c) { return c.is_trivial(); });
    }

    std::string to_string() const
    {
        if (summands_.empty())
            return "0";
        std::string out;
        for (std::size_t k = 0; k < summands_.size(); ++k) {
            if (k)
                out += '+';
            out += summands_[k].to_string();
        }
        return out;
    }

    friend bool operator==(const Representation& a, const Representation& b)
    {
        return a.group_ == b.group_ && a.summands_ == b.summands_;
    }

private:
    AbelianGroup group_;
    std::vector<Character> summands_;
};

inline Representation direct_sum(const Representation& v, const Representation& w)
{
    require_same_group(v.group(), w.group(), "direct sum");
    std::vector<Character> s = v.summands();
    s.insert(s.end(), w.summands().begin(), w.summands().end());
    return Representation(v.group(), std::move(s));
}

// alpha (x) V: every summand gamma becomes alpha * gamma.
inline Representation tensor_char(const Character& alpha, const Representation& v)
{
    require_same_group(alpha.group(), v.group(), "tensor with character");
    std::vector<Character> s;
    s.reserve(v.summands().size());
    for (const auto& g : v.summands())
        s.push_back(alpha * g);
    return Representation(v.group(), std::move(s));
}

inline Representation AbelianGroup::parse_representation(std::string_view spec) const
{
    std::string_view s = detail::trim(spec);
    if (s == "0")
        return Representation(*this);
    std::vector<Character> chars;
    for (std::string_view part : detail::split_top_level(s, '+'))
        chars.push_back(parse_character(part));
    return Representation(*this, std::move(chars));
}

}  // namespace eqhom
