#pragma once

#include <optional>
#include <string>
#include <vector>

#include "asymcg/fin_symplectic.hpp"
#include "asymcg/surface.hpp"
#include "asymcg/tree_pair.hpp"

namespace asymcg {

/// One term of a group word. Plain generators carry no payload; the
/// parametrized twists tw[j,k], tv[k;v] and td[loop-spec] carry the loop they
/// twist along.
struct WordToken {
    std::string name;                // alpha, beta, pi, t, t0, t_a1, t_b1, tw, tv, td
    long long exponent = 1;          // never zero
    std::optional<LoopSpec> loop;    // for tw / tv / td

    bool operator==(const WordToken&) const = default;
};

struct Word {
    std::vector<WordToken> tokens;

    bool operator==(const Word&) const = default;
};

/// Grammar: word := term (ws term)* ; term := name ('^' int)? ;
/// name := ident ('[' args ']')?. Leftmost term applied last (function
/// composition order). Diagnostics carry the byte offset.
Word parse_word(std::string_view text);

std::string print_word(const Word& w);

/// Projection to V: alpha, beta, pi map to their tree-pair images, every
/// Dehn twist to the identity. Reduced result.
TreePairElement v_image_of_word(const Word& w);

/// The symplectic shadow: left-to-right composition of generator shadows.
FinSymplectic word_shadow(const Word& w);

FinSymplectic shadow_of_token(const WordToken& t);
TreePairElement v_image_of_token(const WordToken& t);

} // namespace asymcg
