#include "blowup/scalar.hpp"

#include "blowup/errors.hpp"

namespace blowup {

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    try {
        Scalar q(s);
        if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal '" + s + "'");
    }
}

std::string scalar_to_string(const Scalar& s) {
    return s.get_str();
}

std::size_t scalar_bits(const Scalar& s) {
    return mpz_sizeinbase(s.get_num_mpz_t(), 2) + mpz_sizeinbase(s.get_den_mpz_t(), 2);
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec zero_vec(std::size_t n) {
    return Vec(n, Scalar(0));
}

Vec scaled(const Vec& v, const Scalar& c) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

void add_scaled(Vec& dst, const Vec& src, const Scalar& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (src[i] != 0) dst[i] += src[i] * c;
}

}  // namespace blowup
