#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace eqhom {

using Integer = boost::multiprecision::cpp_int;

// Coefficient-ring hooks used by SparsePoly. Every coefficient type must
// provide a zero test and an exact quotient (nullopt when b does not divide a).
template <class T>
struct ring_traits;

template <>
struct ring_traits<Integer> {
    static bool is_zero(const Integer& x) { return x.is_zero(); }

    static std::optional<Integer> exact_quotient(const Integer& a, const Integer& b)
    {
        if (b.is_zero())
            return std::nullopt;
        Integer q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (!r.is_zero())
            return std::nullopt;
        return q;
    }
};

}  // namespace eqhom
