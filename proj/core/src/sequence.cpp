#include "degseq/sequence.hpp"

#include <numeric>
#include <string>

namespace degseq {

namespace {
// Sums up to n * (n-1) stay well inside 64 bits under this cap.
constexpr size_t max_length = size_t{1} << 20;
} // namespace

degree_sequence degree_sequence::validate(int_list raw) {
    if (raw.size() > max_length)
        throw too_large("sequence longer than 2^20 terms");
    const int n = static_cast<int>(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0 || raw[i] > n - 1)
            throw term_out_of_range("term " + std::to_string(i + 1) + " is " +
                                    std::to_string(raw[i]) +
                                    ", outside [0, n-1] for n = " + std::to_string(n));
        if (i > 0 && raw[i - 1] < raw[i])
            throw not_sorted("terms " + std::to_string(i) + " and " + std::to_string(i + 1) +
                             " increase; sequence must be nonincreasing");
    }
    return degree_sequence(std::move(raw));
}

long long degree_sequence::sum() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

degree_sequence validate_sequence(const int_list& raw) {
    return degree_sequence::validate(raw);
}

} // namespace degseq
