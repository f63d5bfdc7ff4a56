#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "igconn/group.hpp"

namespace igconn {

// A word is a sequence of signed 1-based generator indices: +i is generator
// i-1, -i its inverse.
using Word = std::vector<int>;

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;

  // Throws InputError on an out-of-range letter, a zero letter, or an empty
  // relator.
  void validate() const;
};

// Word-building helpers; generators are 0-based here.
Word letter(int generator, long power = 1);
Word concat(std::initializer_list<Word> parts);
Word inverse(const Word& w);
// lhs = rhs as the relator lhs * rhs^-1
Word relation(const Word& lhs, const Word& rhs);

struct CosetEnumeration {
  FiniteGroup group;
  std::vector<std::uint32_t> generators;  // element of G for each generator
  std::size_t cosets_defined = 0;         // including ones later identified
};

// Coset enumeration over the trivial subgroup (HLT relator scanning with
// immediate coincidence processing). The group is returned through its
// regular action; every relator is checked to evaluate to the identity.
// Throws CapExceeded when more than max_cosets cosets are defined.
CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets = Limits{}.max_cosets);

// Text format:
//   gens k
//   <relator>          one per line
// A relator is a sequence of letters a..z (generators 0..25) and A..Z
// (their inverses), each optionally followed by an exponent written as
// "^n", "n" or "-n". Whitespace is ignored, "lhs = rhs" denotes the relator
// lhs*rhs^-1, and '#' starts a comment.
Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::filesystem::path& path);

std::string format_word(const Word& w);

}  // namespace igconn
