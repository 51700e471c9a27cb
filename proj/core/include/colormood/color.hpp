#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace colormood {

/// 8-bit sRGB pixel, the color alphabet of the input images.
struct Rgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb8&, const Rgb8&) = default;

    /// 0x00RRGGBB packing, used as a histogram key.
    constexpr std::uint32_t packed() const noexcept {
        return (std::uint32_t{r} << 16) | (std::uint32_t{g} << 8) | std::uint32_t{b};
    }
};

/// CIELAB coordinates (L* in [0,100] for colors produced by srgb_to_lab).
struct Lab {
    double l = 0.0;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Lab&, const Lab&) = default;
};

/// sRGB primaries, D65 reference white, 2-degree observer.
/// Gamma-expanded sRGB -> XYZ -> L*a*b*.
Lab srgb_to_lab(Rgb8 c);

/// CIE76 color difference: Euclidean distance in (L*, a*, b*).
double delta_e(const Lab& p, const Lab& q);

} // namespace colormood

template <>
struct std::hash<colormood::Rgb8> {
    std::size_t operator()(const colormood::Rgb8& c) const noexcept {
        // Fibonacci scramble of the packed value; low bits of packed() alone
        // cluster badly for photographic palettes.
        return static_cast<std::size_t>(c.packed()) * 0x9E3779B97F4A7C15ull >> 32;
    }
};
