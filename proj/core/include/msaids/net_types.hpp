#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msaids {

// IPv4 address held as a host-order 32-bit value.
struct Ipv4 {
    uint32_t value = 0;

    constexpr Ipv4() = default;
    constexpr explicit Ipv4(uint32_t v) : value(v) {}
    constexpr Ipv4(uint8_t a, uint8_t b, uint8_t c, uint8_t d)
        : value((uint32_t(a) << 24) | (uint32_t(b) << 16) | (uint32_t(c) << 8) | d) {}

    auto operator<=>(const Ipv4&) const = default;

    std::string to_string() const;
    // Parses "a.b.c.d"; nullopt on anything else.
    static std::optional<Ipv4> parse(const std::string& s);
};

// 6-byte hardware address.
struct Mac {
    std::array<uint8_t, 6> bytes{};

    auto operator<=>(const Mac&) const = default;

    std::string to_string() const;
    // Parses "aa:bb:cc:dd:ee:ff" (case-insensitive); nullopt on anything else.
    static std::optional<Mac> parse(const std::string& s);
};

std::string to_hex(const std::vector<uint8_t>& bytes);
// nullopt when the string is not an even-length hex string.
std::optional<std::vector<uint8_t>> from_hex(const std::string& hex);

} // namespace msaids
