#include "degseq/parse.hpp"

#include <charconv>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(std::string("bad ") + what + " '" + std::string(token) + "'");
    return value;
}

} // namespace

int_list parse_sequence(std::string_view text) {
    int_list out;
    if (trim(text).empty())
        return out;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const std::string_view token =
            trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (token.empty())
            throw parse_error("empty term in sequence");
        const size_t caret = token.find('^');
        if (caret == std::string_view::npos) {
            out.push_back(parse_int(token, "term"));
        } else {
            const int value = parse_int(trim(token.substr(0, caret)), "term");
            const int mult = parse_int(trim(token.substr(caret + 1)), "multiplicity");
            if (mult < 1)
                throw parse_error("multiplicity must be at least 1");
            if (out.size() + static_cast<size_t>(mult) > (size_t{1} << 20))
                throw too_large("sequence longer than 2^20 terms");
            for (int i = 0; i < mult; ++i)
                out.push_back(value);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
        if (start == text.size())
            throw parse_error("empty term in sequence");
    }
    return out;
}

std::string format_sequence(const int_list& terms) {
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(terms[i]);
    }
    return out;
}

} // namespace degseq
