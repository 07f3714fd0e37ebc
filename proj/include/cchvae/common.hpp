#ifndef CCHVAE_COMMON_HPP
#define CCHVAE_COMMON_HPP

#include <Eigen/Dense>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cchvae {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

enum class NormOrder { L1, L2, LInf };

inline double pnorm(const Vec& v, NormOrder p)
{
    switch (p) {
        case NormOrder::L1:   return v.lpNorm<1>();
        case NormOrder::L2:   return v.norm();
        case NormOrder::LInf: return v.lpNorm<Eigen::Infinity>();
    }
    throw std::logic_error("bad norm order");
}

inline std::string norm_name(NormOrder p)
{
    switch (p) {
        case NormOrder::L1:   return "l1";
        case NormOrder::L2:   return "l2";
        case NormOrder::LInf: return "linf";
    }
    return "?";
}

inline NormOrder norm_from_name(const std::string& s)
{
    if (s == "l1") return NormOrder::L1;
    if (s == "l2") return NormOrder::L2;
    if (s == "linf") return NormOrder::LInf;
    throw std::invalid_argument("unknown norm order '" + s + "' (expected l1, l2 or linf)");
}

/* Shortest decimal string that round-trips to the same double. */
inline std::string fmt_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline bool is_integral_value(double v)
{
    return std::isfinite(v) && v == std::floor(v);
}

} // namespace cchvae

#endif // CCHVAE_COMMON_HPP
