#include "openworld/concept_id.hpp"

#include <algorithm>
#include <cctype>

namespace openworld {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Term component of a ConceptNet concept URI: /c/<lang>/<term>[/<pos>...].
std::string_view uri_term(std::string_view s) {
    s.remove_prefix(3);  // "/c/"
    auto lang_end = s.find('/');
    if (lang_end == std::string_view::npos) return {};
    s.remove_prefix(lang_end + 1);
    auto term_end = s.find('/');
    return term_end == std::string_view::npos ? s : s.substr(0, term_end);
}

}  // namespace

ConceptId normalize_concept(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.rfind("/c/", 0) == 0) s = uri_term(s);
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == ' ') {
            out.push_back('_');
        } else {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    return out;
}

std::string normalize_relation(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.rfind("/r/", 0) == 0) s.remove_prefix(3);
    auto slash = s.find('/');
    if (slash != std::string_view::npos) s = s.substr(0, slash);
    return std::string(s);
}

std::string concept_uri_language(std::string_view raw) {
    std::string_view s = trim(raw);
    if (s.rfind("/c/", 0) != 0) return {};
    s.remove_prefix(3);
    auto lang_end = s.find('/');
    if (lang_end == std::string_view::npos) return std::string(s);
    return std::string(s.substr(0, lang_end));
}

bool is_negated_relation(std::string_view relation) {
    return relation.rfind("Not", 0) == 0;
}

}  // namespace openworld
