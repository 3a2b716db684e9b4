#pragma once

#include <cstddef>
#include <string_view>

namespace gel {

// Process-wide ceilings. Product constructions refuse to build graphs larger
// than max_order(); exact characteristic polynomials are refused above
// max_charpoly_order().
inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr std::size_t kDefaultMaxCharPolyOrder = 150;
inline constexpr std::size_t kDefaultIsomorphismCap = 12;
inline constexpr std::size_t kDefaultIsomorphismNodeBudget = 10'000'000;

std::size_t max_order() noexcept;
void set_max_order(std::size_t order) noexcept;

std::size_t max_charpoly_order() noexcept;
void set_max_charpoly_order(std::size_t order) noexcept;

// Throws Error{Capacity} when `order` exceeds max_order().
void check_capacity(std::size_t order, std::string_view what);

// a*b with overflow and capacity checking.
std::size_t checked_product_order(std::size_t a, std::size_t b, std::string_view what);

}  // namespace gel
