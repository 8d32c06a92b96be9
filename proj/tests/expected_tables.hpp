#pragma once

// Frozen expected values used by the unit tests and the acceptance gate.
// Everything here was computed or transcribed independently of the library
// implementation so the tests act as an external oracle.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "smoothcolor/cayley.hpp"

namespace expected {

using smoothcolor::CayleyTable;
using u64 = std::uint64_t;

// Smallest k (and p = k*n + 1) with 1^k..n^k pairwise distinct mod p.
inline const std::map<u64, std::pair<u64, u64>> smallest_strong_rep = {
    {1, {1, 2}},           {2, {1, 3}},          {3, {2, 7}},
    {4, {1, 5}},           {5, {2, 11}},         {6, {1, 7}},
    {7, {94, 659}},        {8, {2, 17}},         {9, {2, 19}},
    {10, {1, 11}},         {11, {2, 23}},        {12, {1, 13}},
    {13, {198364, 2578733}}, {14, {2, 29}},      {15, {2, 31}},
    {16, {1, 17}},         {17, {2859480, 48611161}}, {18, {1, 19}},
    {19, {533410, 10134791}}, {20, {2, 41}},     {21, {2, 43}},
    {22, {1, 23}},         {23, {2, 47}},        {24, {56610508, 1358652193}},
    {25, {1170546910, 29263672751ULL}}, {26, {2, 53}},
    {27, {6700156678ULL, 180904230307ULL}}, {28, {1, 29}},
    {29, {2, 59}},         {30, {1, 31}},
    {31, {27184496610ULL, 842719394911ULL}},
    {32, {162802814486ULL, 5209690063553ULL}},   {33, {2, 67}},
};

inline CayleyTable table_from_rows(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<int> cells;
    for (const auto& r : rows) cells.insert(cells.end(), r.begin(), r.end());
    return CayleyTable(n, std::move(cells));
}

// The five satisfactory tables of order 6 (keyed by their smallest strong
// representative p).
inline CayleyTable z6_7() {
    return table_from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 4, 6, 1, 3, 5},
                            {3, 6, 2, 5, 1, 4},
                            {4, 1, 5, 2, 6, 3},
                            {5, 3, 1, 6, 4, 2},
                            {6, 5, 4, 3, 2, 1}});
}
inline CayleyTable z6_13() {
    return table_from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 4, 6, 5, 3, 1},
                            {3, 6, 4, 1, 2, 5},
                            {4, 5, 1, 3, 6, 2},
                            {5, 3, 2, 6, 1, 4},
                            {6, 1, 5, 2, 4, 3}});
}
inline CayleyTable z6_103() {
    return table_from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 4, 6, 1, 3, 5},
                            {3, 6, 1, 5, 4, 2},
                            {4, 1, 5, 2, 6, 3},
                            {5, 3, 4, 6, 2, 1},
                            {6, 5, 2, 3, 1, 4}});
}
inline CayleyTable z6_487() {
    return table_from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 4, 6, 1, 3, 5},
                            {3, 6, 4, 5, 2, 1},
                            {4, 1, 5, 2, 6, 3},
                            {5, 3, 2, 6, 1, 4},
                            {6, 5, 1, 3, 4, 2}});
}
inline CayleyTable z6_547() {
    return table_from_rows({{1, 2, 3, 4, 5, 6},
                            {2, 4, 6, 3, 1, 5},
                            {3, 6, 1, 5, 4, 2},
                            {4, 3, 5, 6, 2, 1},
                            {5, 1, 4, 2, 6, 3},
                            {6, 5, 2, 1, 3, 4}});
}
inline std::vector<std::pair<u64, CayleyTable>> z6_tables() {
    return {{7, z6_7()}, {13, z6_13()}, {103, z6_103()}, {487, z6_487()}, {547, z6_547()}};
}

// The six satisfactory tables of order 7, keyed by smallest strong rep.
inline std::vector<std::pair<u64, CayleyTable>> z7_tables() {
    auto id = std::vector<int>{1, 2, 3, 4, 5, 6, 7};
    return {
        {659, table_from_rows({id,
                               {2, 4, 6, 5, 3, 7, 1},
                               {3, 6, 2, 7, 1, 4, 5},
                               {4, 5, 7, 3, 6, 1, 2},
                               {5, 3, 1, 6, 7, 2, 4},
                               {6, 7, 4, 1, 2, 5, 3},
                               {7, 1, 5, 2, 4, 3, 6}})},
        {1429, table_from_rows({id,
                                {2, 4, 6, 3, 7, 5, 1},
                                {3, 6, 7, 5, 2, 1, 4},
                                {4, 3, 5, 6, 1, 7, 2},
                                {5, 7, 2, 1, 3, 4, 6},
                                {6, 5, 1, 7, 4, 2, 3},
                                {7, 1, 4, 2, 6, 3, 5}})},
        {2087, table_from_rows({id,
                                {2, 4, 6, 3, 1, 7, 5},
                                {3, 6, 5, 7, 4, 1, 2},
                                {4, 3, 7, 6, 2, 5, 1},
                                {5, 1, 4, 2, 7, 3, 6},
                                {6, 7, 1, 5, 3, 2, 4},
                                {7, 5, 2, 1, 6, 4, 3}})},
        {3557, table_from_rows({id,
                                {2, 4, 6, 7, 1, 5, 3},
                                {3, 6, 2, 5, 7, 4, 1},
                                {4, 7, 5, 3, 2, 1, 6},
                                {5, 1, 7, 2, 6, 3, 4},
                                {6, 5, 4, 1, 3, 7, 2},
                                {7, 3, 1, 6, 4, 2, 5}})},
        {17431, table_from_rows({id,
                                 {2, 4, 6, 7, 3, 1, 5},
                                 {3, 6, 7, 1, 4, 5, 2},
                                 {4, 7, 1, 5, 6, 2, 3},
                                 {5, 3, 4, 6, 2, 7, 1},
                                 {6, 1, 5, 2, 7, 3, 4},
                                 {7, 5, 2, 3, 1, 4, 6}})},
        {21911, table_from_rows({id,
                                 {2, 4, 6, 5, 7, 1, 3},
                                 {3, 6, 5, 1, 2, 7, 4},
                                 {4, 5, 1, 7, 3, 2, 6},
                                 {5, 7, 2, 3, 6, 4, 1},
                                 {6, 1, 7, 2, 4, 3, 5},
                                 {7, 3, 4, 6, 1, 5, 2}})},
    };
}

// The six cyclic order-8 tables with no strong representative. Keyed by the
// value sequence (op(2,5), op(2,6), op(2,7), op(2,8)).
inline std::vector<CayleyTable> z8_forced_tables() {
    auto id = std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8};
    return {
        table_from_rows({id,
                         {2, 4, 6, 8, 1, 5, 3, 7},
                         {3, 6, 4, 5, 7, 8, 2, 1},
                         {4, 8, 5, 7, 2, 1, 6, 3},
                         {5, 1, 7, 2, 6, 3, 8, 4},
                         {6, 5, 8, 1, 3, 7, 4, 2},
                         {7, 3, 2, 6, 8, 4, 1, 5},
                         {8, 7, 1, 3, 4, 2, 5, 6}}),
        table_from_rows({id,
                         {2, 4, 6, 8, 1, 7, 5, 3},
                         {3, 6, 1, 7, 8, 2, 4, 5},
                         {4, 8, 7, 3, 2, 5, 1, 6},
                         {5, 1, 8, 2, 7, 3, 6, 4},
                         {6, 7, 2, 5, 3, 4, 8, 1},
                         {7, 5, 4, 1, 6, 8, 3, 2},
                         {8, 3, 5, 6, 4, 1, 2, 7}}),
        table_from_rows({id,
                         {2, 4, 6, 8, 3, 1, 5, 7},
                         {3, 6, 7, 1, 8, 5, 4, 2},
                         {4, 8, 1, 7, 6, 2, 3, 5},
                         {5, 3, 8, 6, 4, 7, 2, 1},
                         {6, 1, 5, 2, 7, 3, 8, 4},
                         {7, 5, 4, 3, 2, 8, 1, 6},
                         {8, 7, 2, 5, 1, 4, 6, 3}}),
        table_from_rows({id,
                         {2, 4, 6, 8, 3, 7, 1, 5},
                         {3, 6, 4, 7, 2, 8, 5, 1},
                         {4, 8, 7, 5, 6, 1, 2, 3},
                         {5, 3, 2, 6, 1, 4, 8, 7},
                         {6, 7, 8, 1, 4, 5, 3, 2},
                         {7, 1, 5, 2, 8, 3, 6, 4},
                         {8, 5, 1, 3, 7, 2, 4, 6}}),
        table_from_rows({id,
                         {2, 4, 6, 8, 7, 1, 3, 5},
                         {3, 6, 5, 1, 4, 7, 8, 2},
                         {4, 8, 1, 5, 3, 2, 6, 7},
                         {5, 7, 4, 3, 1, 8, 2, 6},
                         {6, 1, 7, 2, 8, 3, 5, 4},
                         {7, 3, 8, 6, 2, 5, 4, 1},
                         {8, 5, 2, 7, 6, 4, 1, 3}}),
        table_from_rows({id,
                         {2, 4, 6, 8, 7, 5, 1, 3},
                         {3, 6, 1, 5, 4, 2, 8, 7},
                         {4, 8, 5, 3, 1, 7, 2, 6},
                         {5, 7, 4, 1, 3, 8, 6, 2},
                         {6, 5, 2, 7, 8, 4, 3, 1},
                         {7, 1, 8, 2, 6, 3, 5, 4},
                         {8, 3, 7, 6, 2, 1, 4, 5}}),
    };
}

// The two parameterized order-8 families, a in {1, 2, 4, 8}: cyclic for
// a in {2, 8}, of type Z/2 x Z/4 for a in {1, 4}. Rows 2, 4, 8 are fixed;
// the remaining rows contain a and op-compositions op(r, a) for r in
// {2, 4, 8}, resolvable from the fixed rows.
inline CayleyTable param_table_3751(int a) {
    std::array<std::array<int, 8>, 9> R{};
    R[1] = {1, 2, 3, 4, 5, 6, 7, 8};
    R[2] = {2, 4, 6, 8, 3, 7, 5, 1};
    R[4] = {4, 8, 7, 1, 6, 5, 3, 2};
    R[8] = {8, 1, 5, 2, 7, 3, 6, 4};
    auto X = [&](int r) { return R[r][a - 1]; };
    R[3] = {3, 6, a, 7, X(8), X(2), X(4), 5};
    R[5] = {5, 3, X(8), 6, X(4), a, X(2), 7};
    R[6] = {6, 7, X(2), 5, a, X(4), X(8), 3};
    R[7] = {7, 5, X(4), 3, X(2), X(8), a, 6};
    std::vector<int> cells;
    for (int r = 1; r <= 8; ++r) cells.insert(cells.end(), R[r].begin(), R[r].end());
    return CayleyTable(8, std::move(cells));
}
inline CayleyTable param_table_7531(int a) {
    std::array<std::array<int, 8>, 9> R{};
    R[1] = {1, 2, 3, 4, 5, 6, 7, 8};
    R[2] = {2, 4, 6, 8, 7, 5, 3, 1};
    R[4] = {4, 8, 5, 1, 3, 7, 6, 2};
    R[8] = {8, 1, 7, 2, 6, 3, 5, 4};
    auto X = [&](int r) { return R[r][a - 1]; };
    R[3] = {3, 6, a, 5, X(4), X(2), X(8), 7};
    R[5] = {5, 7, X(4), 3, a, X(8), X(2), 6};
    R[6] = {6, 5, X(2), 7, X(8), X(4), a, 3};
    R[7] = {7, 3, X(8), 6, X(2), a, X(4), 5};
    std::vector<int> cells;
    for (int r = 1; r <= 8; ++r) cells.insert(cells.end(), R[r].begin(), R[r].end());
    return CayleyTable(8, std::move(cells));
}

// Smallest strong representatives of the strongly representable order-8
// tables: (family, a, p, k) with p = 8k + 1.
struct Z8StrongRep {
    char family;  // '3' = param_table_3751, '7' = param_table_7531
    int a;
    u64 p, k;
};
inline std::vector<Z8StrongRep> z8_strong_reps() {
    return {{'7', 8, 17, 2}, {'7', 2, 3617, 452}, {'3', 2, 5417, 677}, {'3', 8, 95177, 11897}};
}

// All orders in [1, 500] admitting no satisfactory abelian group structure.
inline const std::vector<int> groupless_upto_500 = {
    195, 205, 208, 211, 212, 214, 217, 218, 220, 227, 229, 235, 242, 244, 246, 247, 248,
    252, 253, 255, 257, 258, 259, 263, 264, 265, 266, 267, 269, 271, 274, 275, 279, 283,
    286, 287, 289, 290, 291, 294, 295, 297, 298, 301, 302, 304, 305, 307, 311, 313, 314,
    317, 318, 319, 322, 324, 325, 327, 328, 331, 332, 333, 334, 335, 337, 339, 340, 343,
    344, 347, 349, 351, 353, 355, 356, 357, 361, 362, 364, 365, 367, 368, 370, 373, 374,
    376, 377, 379, 381, 383, 385, 387, 389, 390, 391, 392, 394, 395, 397, 399, 401, 402,
    403, 406, 407, 409, 412, 415, 416, 417, 421, 422, 423, 424, 425, 427, 433, 434, 435,
    436, 437, 439, 444, 445, 446, 447, 449, 450, 451, 452, 454, 457, 458, 461, 463, 465,
    467, 469, 471, 472, 474, 475, 477, 479, 480, 481, 482, 484, 487, 489, 492, 493, 494,
    496, 497, 499, 500};

// pi_n(10^5): strong representatives p <= 10^5 of order n, for n = 2..10.
inline const std::map<u64, u64> strong_rep_counts_1e5 = {
    {2, 4808}, {3, 1087}, {4, 602}, {5, 147}, {6, 203},
    {7, 30},   {8, 21},   {9, 7},   {10, 5}};

// Order-5 split at 10^6: (|C1|, |C5|, |C|, |C_T|).
inline const std::array<u64, 4> order5_1e6 = {626, 626, 1252, 19617};

// Deflated power-sum remainder constants L_k for k = 4..10.
inline const std::map<unsigned, const char*> krep_bound_constants = {
    {4, "25"},      {5, "33"},      {6, "637"},     {7, "6086"},
    {8, "1077555"}, {9, "1936195"}, {10, "649518683"}};

// All k-representatives for k = 4m <= 100.
inline const std::map<unsigned, std::vector<std::pair<u64, u64>>> four_m_reps = {
    {4, {{1, 5}}},   {8, {}},        {12, {{1, 13}, {3, 37}}}, {16, {{1, 17}}},
    {20, {}},        {24, {}},       {28, {{1, 29}}},          {32, {}},
    {36, {{1, 37}}}, {40, {{1, 41}}}, {44, {}},                {48, {}},
    {52, {{1, 53}}}, {56, {}},       {60, {{1, 61}, {3, 181}}}, {64, {}},
    {68, {}},        {72, {{1, 73}}}, {76, {}},                {80, {{3, 241}}},
    {84, {{5, 421}}}, {88, {{1, 89}}}, {92, {}},               {96, {{1, 97}}},
    {100, {{1, 101}}}};

// Greedy linear coefficient vectors (one residue mod n per prime <= n).
inline const std::map<int, std::vector<int>> linear_coeffs = {
    {7, {1, 3, 5, 6}},
    {12, {1, 4, 9, 7, 11}},
    {31, {1, 5, 12, 20, 26, 28, 9, 16, 19, 23, 30}}};

}  // namespace expected
