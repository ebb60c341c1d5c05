#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quivar {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// One of the simply laced types A_n (n>=1), D_n (n>=4), E_6, E_7, E_8.
struct ADEType {
    Family family = Family::A;
    int rank = 1;

    ADEType() = default;
    ADEType(Family f, int n) : family(f), rank(n) { validate(); }

    void validate() const {
        switch (family) {
        case Family::A:
            if (rank >= 1) return;
            break;
        case Family::D:
            if (rank >= 4) return;
            break;
        case Family::E:
            if (rank >= 6 && rank <= 8) return;
            break;
        }
        throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                    " for family " + std::string(1, static_cast<char>(family)));
    }

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    friend bool operator==(const ADEType&, const ADEType&) = default;
    friend std::strong_ordering operator<=>(const ADEType& a, const ADEType& b) {
        if (a.family != b.family)
            return static_cast<char>(a.family) <=> static_cast<char>(b.family);
        return a.rank <=> b.rank;
    }
};

/// Parse labels like "A3", "d4", "E8".
ADEType parse_ade(std::string_view label);

/// The types with rank <= max_rank, in (family, rank) order.
std::vector<ADEType> all_types(int max_rank = 8);

} // namespace quivar
