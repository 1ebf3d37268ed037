#include "asymcg/surface.hpp"

namespace asymcg {

SubtreeSurface admissible_from_subtree(const FiniteSubtree& t) {
    SubtreeSurface s;
    s.subtree = t;
    s.genus = t.internal_edge_count();
    s.boundary_count = s.genus + 3;
    return s;
}

namespace {

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep,
                                                         std::size_t offset_base) {
    auto pos = s.find(sep);
    if (pos == std::string_view::npos)
        throw Error(ErrorKind::BadInput,
                    std::string("loop spec: expected '") + sep + "' separator", offset_base);
    return {s.substr(0, pos), s.substr(pos + 1)};
}

} // namespace

LoopSpec parse_loop_spec(std::string_view text, std::size_t offset_base) {
    auto open = text.find('[');
    if (open == std::string_view::npos || text.back() != ']')
        throw Error(ErrorKind::BadInput, "loop spec: expected 'name[args]'", offset_base);
    std::string_view name = text.substr(0, open);
    std::string_view args = text.substr(open + 1, text.size() - open - 2);
    std::size_t arg_off = offset_base + open + 1;
    if (name == "a") return LoopMeridian{EdgeAddress::parse(args, arg_off)};
    if (name == "b") return LoopLongitude{EdgeAddress::parse(args, arg_off)};
    if (name == "wc") {
        auto [j, k] = split_once(args, ',', arg_off);
        LoopWristConn wc{EdgeAddress::parse(j, arg_off),
                         EdgeAddress::parse(k, arg_off + j.size() + 1)};
        if (wc.j == wc.k)
            throw Error(ErrorKind::BadInput,
                        "wrist-connecting loop needs two distinct wrists", arg_off);
        return wc;
    }
    if (name == "vc") {
        auto [k, v] = split_once(args, ';', arg_off);
        return LoopVertexConn{EdgeAddress::parse(k, arg_off),
                              VertexAddress::parse(v, arg_off + k.size() + 1)};
    }
    if (name == "pl") return LoopPants{EdgeAddress::parse(args, arg_off)};
    throw Error(ErrorKind::BadInput,
                "unknown loop kind '" + std::string(name) + "'", offset_base);
}

std::string loop_spec_str(const LoopSpec& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LoopMeridian>) return "a[" + v.k.str() + "]";
            else if constexpr (std::is_same_v<T, LoopLongitude>) return "b[" + v.k.str() + "]";
            else if constexpr (std::is_same_v<T, LoopWristConn>)
                return "wc[" + v.j.str() + "," + v.k.str() + "]";
            else if constexpr (std::is_same_v<T, LoopVertexConn>)
                return "vc[" + v.k.str() + ";" + v.v.str() + "]";
            else return "pl[" + v.c.str() + "]";
        },
        s);
}

HomClass loop_class(const LoopSpec& s) {
    return std::visit(
        [](const auto& v) -> HomClass {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LoopMeridian>) return HomClass::a(v.k);
            else if constexpr (std::is_same_v<T, LoopLongitude>) return HomClass::b(v.k);
            else if constexpr (std::is_same_v<T, LoopWristConn>)
                return HomClass::b(v.j) - HomClass::b(v.k);
            else if constexpr (std::is_same_v<T, LoopVertexConn>) return HomClass::b(v.k);
            else return HomClass(); // pants decomposition loops are separating
        },
        s);
}

} // namespace asymcg
