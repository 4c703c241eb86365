#pragma once

// Reference child table of the edge-label system: each edge label with its
// negative and positive child, in canonical order.

#include <array>
#include <string_view>

namespace tumblegeo {

struct ReferenceRow {
    std::string_view edge;
    std::string_view negative_child;
    std::string_view positive_child;
};

inline constexpr std::array<ReferenceRow, 54> kReferenceChildTable{{
    {"(0123,0213,-)", "(0213,0123,-)", "(0213,3201,+)"},
    {"(0123,0213,+)", "(0213,3012,-)", "(0213,0123,+)"},
    {"(0123,1230,-)", "(1230,2301,-)", "(1230,0213,+)"},
    {"(0123,2310,+)", "(2310,0213,-)", "(2310,1032,+)"},
    {"(0123,3012,+)", "(3012,2310,-)", "(3012,2301,+)"},
    {"(0123,3201,-)", "(3201,1032,-)", "(3201,1230,+)"},
    {"(0213,0123,-)", "(0123,0213,-)", "(0123,3012,+)"},
    {"(0213,0123,+)", "(0123,3201,-)", "(0123,0213,+)"},
    {"(0213,1032,+)", "(1032,2310,-)", "(1032,3120,+)"},
    {"(0213,1230,-)", "(1230,3201,-)", "(1230,0123,+)"},
    {"(0213,2301,-)", "(2301,3120,-)", "(2301,1230,+)"},
    {"(0213,2310,+)", "(2310,0123,-)", "(2310,3012,+)"},
    {"(0213,3012,-)", "(3012,2310,-)", "(3012,2301,+)"},
    {"(0213,3201,+)", "(3201,1032,-)", "(3201,1230,+)"},
    {"(1032,0213,-)", "(0213,2301,-)", "(0213,2310,+)"},
    {"(1032,2310,-)", "(2310,0123,-)", "(2310,3012,+)"},
    {"(1032,3012,-)", "(3012,1032,-)", "(3012,0213,+)"},
    {"(1032,3012,+)", "(3012,3201,-)", "(3012,1032,+)"},
    {"(1032,3120,+)", "(3120,3012,-)", "(3120,2301,+)"},
    {"(1032,3201,+)", "(3201,3120,-)", "(3201,0123,+)"},
    {"(1230,0123,+)", "(0123,0213,-)", "(0123,3012,+)"},
    {"(1230,0213,+)", "(0213,0123,-)", "(0213,3201,+)"},
    {"(1230,2301,-)", "(2301,3012,-)", "(2301,3201,+)"},
    {"(1230,3201,-)", "(3201,0213,-)", "(3201,2301,+)"},
    {"(2301,0213,+)", "(0213,1230,-)", "(0213,1032,+)"},
    {"(2301,1230,+)", "(1230,3201,-)", "(1230,0123,+)"},
    {"(2301,3012,-)", "(3012,0123,-)", "(3012,3120,+)"},
    {"(2301,3120,-)", "(3120,1032,-)", "(3120,3201,+)"},
    {"(2301,3201,-)", "(3201,2301,-)", "(3201,3012,+)"},
    {"(2301,3201,+)", "(3201,0213,-)", "(3201,2301,+)"},
    {"(2310,0123,-)", "(0123,3201,-)", "(0123,0213,+)"},
    {"(2310,0213,-)", "(0213,3012,-)", "(0213,0123,+)"},
    {"(2310,1032,+)", "(1032,3012,-)", "(1032,3201,+)"},
    {"(2310,3012,+)", "(3012,1032,-)", "(3012,0213,+)"},
    {"(3012,0123,-)", "(0123,1230,-)", "(0123,2310,+)"},
    {"(3012,0213,+)", "(0213,2301,-)", "(0213,2310,+)"},
    {"(3012,1032,-)", "(1032,3012,-)", "(1032,3201,+)"},
    {"(3012,1032,+)", "(1032,0213,-)", "(1032,3012,+)"},
    {"(3012,2301,+)", "(2301,3120,-)", "(2301,1230,+)"},
    {"(3012,2310,-)", "(2310,0213,-)", "(2310,1032,+)"},
    {"(3012,3120,+)", "(3120,1032,-)", "(3120,3201,+)"},
    {"(3012,3201,-)", "(3201,3120,-)", "(3201,0123,+)"},
    {"(3120,1032,-)", "(1032,0213,-)", "(1032,3012,+)"},
    {"(3120,2301,+)", "(2301,3201,-)", "(2301,0213,+)"},
    {"(3120,3012,-)", "(3012,3201,-)", "(3012,1032,+)"},
    {"(3120,3201,+)", "(3201,2301,-)", "(3201,3012,+)"},
    {"(3201,0123,+)", "(0123,1230,-)", "(0123,2310,+)"},
    {"(3201,0213,-)", "(0213,1230,-)", "(0213,1032,+)"},
    {"(3201,1032,-)", "(1032,2310,-)", "(1032,3120,+)"},
    {"(3201,1230,+)", "(1230,2301,-)", "(1230,0213,+)"},
    {"(3201,2301,-)", "(2301,3201,-)", "(2301,0213,+)"},
    {"(3201,2301,+)", "(2301,3012,-)", "(2301,3201,+)"},
    {"(3201,3012,+)", "(3012,0123,-)", "(3012,3120,+)"},
    {"(3201,3120,-)", "(3120,3012,-)", "(3120,2301,+)"},
}};

}  // namespace tumblegeo
