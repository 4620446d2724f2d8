#include "obg/enumerate.hpp"

#include "obg/error.hpp"

namespace obg {

std::size_t count_structures(std::size_t n) {
    if (n == 0) return 1;
    std::size_t total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::size_t reds = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i))) ++reds;
        }
        std::size_t cross = reds * (n - reds);
        total += std::size_t(1) << cross;
    }
    return total;
}

std::vector<FinStruct> enumerate_structures(std::size_t n, std::size_t cap) {
    if (count_structures(n) > cap) {
        raise(ErrorKind::BudgetExceeded,
              "enumerate_structures(" + std::to_string(n) + ") exceeds cap " + std::to_string(cap));
    }
    std::vector<FinStruct> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<Color> colors(n);
        for (std::size_t i = 0; i < n; ++i) {
            colors[i] = (mask & (std::size_t(1) << i)) ? Color::Blue : Color::Red;
        }
        // cross-color index pairs, in a fixed order
        std::vector<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (colors[i] != colors[j]) cross.push_back({i, j});
            }
        }
        for (std::size_t emask = 0; emask < (std::size_t(1) << cross.size()); ++emask) {
            FinStruct s;
            for (std::size_t i = 0; i < n; ++i) {
                s.add_point(static_cast<PointId>(i + 1), ExtPos::finite(Rat(static_cast<std::int64_t>(i + 1))),
                            colors[i]);
            }
            for (std::size_t e = 0; e < cross.size(); ++e) {
                if (emask & (std::size_t(1) << e)) {
                    s.add_edge(static_cast<PointId>(cross[e].first + 1),
                               static_cast<PointId>(cross[e].second + 1));
                }
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<FinStruct> enumerate_up_to(std::size_t n, std::size_t cap) {
    std::vector<FinStruct> out;
    if (n == 0) {
        return enumerate_structures(0, cap);
    }
    for (std::size_t k = 1; k <= n; ++k) {
        auto part = enumerate_structures(k, cap);
        for (auto& s : part) out.push_back(std::move(s));
    }
    return out;
}

} // namespace obg
