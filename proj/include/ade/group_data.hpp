#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ade/groups.hpp"

namespace ade {

// The raw, format-level content of a group description: either parsed from a
// versioned ".group" data file (E types) or produced by the built-in A/D
// generators.  ADEGroup::build_from() turns it into a validated group.
struct ADEGroup::BuildInput {
    GroupSpec spec;
    long order = 0;
    int matrix_field = 1;
    std::vector<std::pair<std::string, Mat2>> generators;
    std::vector<std::pair<std::string, std::string>> relations;  // lhs word, rhs word
    std::vector<std::pair<std::string, std::string>> class_labels;  // label, word
    CharacterTable chartable;
    // Extra label aliases ("-1" for the central class of D_n).
    std::vector<std::pair<std::string, std::string>> aliases;
};

// Parse a cyclotomic expression over "w" = zeta_order: rationals, + - * / ^,
// parentheses.  Used by the data-file loader and by tests.
Cyclo parse_cyclo(const std::string& text, int order);

// Word = optional '-' then '*'-separated generator powers ("a^3*b"), or "1".
Mat2 eval_word(const std::string& word,
               const std::vector<std::pair<std::string, Mat2>>& generators, int field);

// Loader for the versioned plain-text schema (see data/README).
ADEGroup::BuildInput load_group_file(const std::string& path);

// Built-in generators for the parameterized families.
ADEGroup::BuildInput make_type_a_input(int n);  // cyclic Z_{n+1}, n >= 1
ADEGroup::BuildInput make_type_d_input(int n);  // binary dihedral, order 4n-8, n >= 4

}  // namespace ade
