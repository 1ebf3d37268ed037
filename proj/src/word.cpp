#include "asymcg/word.hpp"

#include <cctype>

#include "asymcg/limits.hpp"

namespace asymcg {

namespace {

const char* kPlainNames[] = {"alpha", "beta", "pi", "t", "t0", "t_a1", "t_b1", "t_wc", "t_vc"};

bool is_plain_name(const std::string& s) {
    for (const char* n : kPlainNames)
        if (s == n) return true;
    return false;
}

WordToken parse_term(std::string_view term, std::size_t offset) {
    WordToken tok;
    // Split off an exponent first; '^' never occurs inside bracket args.
    std::string_view body = term;
    auto caret = term.rfind('^');
    if (caret != std::string_view::npos) {
        body = term.substr(0, caret);
        std::string_view expo = term.substr(caret + 1);
        std::size_t expo_off = offset + caret + 1;
        if (expo.empty())
            throw Error(ErrorKind::BadInput, "missing exponent after '^'", expo_off);
        try {
            std::size_t used = 0;
            tok.exponent = std::stoll(std::string(expo), &used);
            if (used != expo.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadInput,
                        "bad exponent '" + std::string(expo) + "'", expo_off);
        }
        if (tok.exponent == 0)
            throw Error(ErrorKind::BadInput, "zero exponent is not allowed", expo_off);
    }
    auto open = body.find('[');
    if (open == std::string_view::npos) {
        tok.name = std::string(body);
        if (!is_plain_name(tok.name))
            throw Error(ErrorKind::BadInput,
                        "unknown generator '" + tok.name + "'", offset);
        return tok;
    }
    if (body.back() != ']')
        throw Error(ErrorKind::BadInput, "unbalanced '[' in term", offset + open);
    tok.name = std::string(body.substr(0, open));
    std::string_view args = body.substr(open + 1, body.size() - open - 2);
    std::size_t args_off = offset + open + 1;
    if (tok.name == "tw") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorKind::BadInput, "tw wants two edges: tw[j,k]", args_off);
        EdgeAddress j = EdgeAddress::parse(args.substr(0, comma), args_off);
        EdgeAddress k = EdgeAddress::parse(args.substr(comma + 1), args_off + comma + 1);
        if (j == k)
            throw Error(ErrorKind::BadInput,
                        "wrist-connecting twist needs distinct wrists", args_off);
        tok.loop = LoopWristConn{j, k};
    } else if (tok.name == "tv") {
        auto semi = args.find(';');
        if (semi == std::string_view::npos)
            throw Error(ErrorKind::BadInput, "tv wants an edge and a vertex: tv[k;v]", args_off);
        tok.loop = LoopVertexConn{EdgeAddress::parse(args.substr(0, semi), args_off),
                                  VertexAddress::parse(args.substr(semi + 1),
                                                       args_off + semi + 1)};
    } else if (tok.name == "td") {
        tok.loop = parse_loop_spec(args, args_off);
    } else {
        throw Error(ErrorKind::BadInput, "unknown generator '" + tok.name + "'", offset);
    }
    return tok;
}

} // namespace

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        w.tokens.push_back(parse_term(text.substr(start, i - start), start));
    }
    return w;
}

std::string print_word(const Word& w) {
    std::string out;
    for (const auto& tok : w.tokens) {
        if (!out.empty()) out += ' ';
        if (tok.loop && tok.name == "td") out += "td[" + loop_spec_str(*tok.loop) + "]";
        else if (tok.loop && tok.name == "tw") {
            const auto& wc = std::get<LoopWristConn>(*tok.loop);
            out += "tw[" + wc.j.str() + "," + wc.k.str() + "]";
        } else if (tok.loop && tok.name == "tv") {
            const auto& vc = std::get<LoopVertexConn>(*tok.loop);
            out += "tv[" + vc.k.str() + ";" + vc.v.str() + "]";
        } else {
            out += tok.name;
        }
        if (tok.exponent != 1) out += "^" + std::to_string(tok.exponent);
    }
    return out;
}

FinSymplectic shadow_of_token(const WordToken& t) {
    FinSymplectic base = t.loop ? dehn_twist(loop_class(*t.loop)) : generator_shadow(t.name);
    return t.exponent == 1 ? base : op_pow(base, t.exponent);
}

TreePairElement v_image_of_token(const WordToken& t) {
    TreePairElement base = TreePairElement::identity();
    if (t.name == "alpha") base = TreePairElement::alpha_v();
    else if (t.name == "beta") base = TreePairElement::beta_v();
    else if (t.name == "pi") base = TreePairElement::pi_v();
    else return base; // every twist projects to the identity of V
    long long e = t.exponent;
    if (e < 0) {
        base = base.invert();
        e = -e;
    }
    TreePairElement acc = TreePairElement::identity();
    for (long long i = 0; i < e; ++i) acc = TreePairElement::compose(acc, base);
    return acc;
}

TreePairElement v_image_of_word(const Word& w) {
    TreePairElement acc = TreePairElement::identity();
    for (const auto& tok : w.tokens) {
        acc = TreePairElement::compose(acc, v_image_of_token(tok));
        check_support_limit(acc.domain().vertex_count());
    }
    return acc;
}

FinSymplectic word_shadow(const Word& w) {
    FinSymplectic acc = FinSymplectic::identity_op();
    for (const auto& tok : w.tokens) acc = compose_ops(acc, shadow_of_token(tok));
    return acc;
}

} // namespace asymcg
