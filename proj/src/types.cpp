#include "quivar/types.hpp"

#include <cctype>

namespace quivar {

ADEType parse_ade(std::string_view label) {
    if (label.size() < 2) throw std::invalid_argument("unknown type label: '" + std::string(label) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (f != 'A' && f != 'D' && f != 'E')
        throw std::invalid_argument("unknown type label: '" + std::string(label) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw std::invalid_argument("unknown type label: '" + std::string(label) + "'");
        rank = rank * 10 + (label[i] - '0');
        if (rank > 1000) throw std::invalid_argument("unknown type label: '" + std::string(label) + "'");
    }
    return ADEType(static_cast<Family>(f), rank);
}

std::vector<ADEType> all_types(int max_rank) {
    std::vector<ADEType> out;
    for (int n = 1; n <= max_rank; ++n) out.emplace_back(Family::A, n);
    for (int n = 4; n <= max_rank; ++n) out.emplace_back(Family::D, n);
    for (int n = 6; n <= max_rank && n <= 8; ++n) out.emplace_back(Family::E, n);
    return out;
}

} // namespace quivar
