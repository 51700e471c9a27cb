#include "colormood/color.hpp"

#include <array>
#include <cmath>

namespace colormood {

namespace {

// Gamma expansion of one 8-bit sRGB channel to linear light, tabulated once.
const std::array<double, 256>& linear_lut() {
    static const std::array<double, 256> lut = [] {
        std::array<double, 256> t{};
        for (int v = 0; v < 256; ++v) {
            const double c = v / 255.0;
            t[v] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
        }
        return t;
    }();
    return lut;
}

// CIE f(t) forward transform; delta = 6/29.
inline double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    constexpr double delta3 = delta * delta * delta;
    return t > delta3 ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
}

// Observer 2 degrees, illuminant D65 (CIE 1931).
constexpr double kRefX = 0.95047;
constexpr double kRefY = 1.00000;
constexpr double kRefZ = 1.08883;

} // namespace

Lab srgb_to_lab(Rgb8 c) {
    const auto& lut = linear_lut();
    const double rl = lut[c.r];
    const double gl = lut[c.g];
    const double bl = lut[c.b];

    const double x = rl * 0.4124564 + gl * 0.3575761 + bl * 0.1804375;
    const double y = rl * 0.2126729 + gl * 0.7151522 + bl * 0.0721750;
    const double z = rl * 0.0193339 + gl * 0.1191920 + bl * 0.9503041;

    const double fx = lab_f(x / kRefX);
    const double fy = lab_f(y / kRefY);
    const double fz = lab_f(z / kRefZ);

    return Lab{116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double delta_e(const Lab& p, const Lab& q) {
    const double dl = p.l - q.l;
    const double da = p.a - q.a;
    const double db = p.b - q.b;
    return std::sqrt(dl * dl + da * da + db * db);
}

} // namespace colormood
