#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "asymcg/error.hpp"

namespace asymcg {

/// Address of one edge of the complete trivalent planar tree.
///
/// The base vertex v0 has three incident edges named "0", "1", "2"
/// (counterclockwise). Every other edge descends from its parent edge by a
/// letter 'L' or 'R', so an address is one digit followed by an {L,R}-word,
/// e.g. "1LRL". Lexicographic order of the raw strings is the canonical
/// planar order used everywhere (leaf lists, wrist bases).
class EdgeAddress {
  public:
    EdgeAddress() : path_("0") {}

    static bool valid_text(std::string_view s) {
        if (s.empty() || s[0] < '0' || s[0] > '2') return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] != 'L' && s[i] != 'R') return false;
        return true;
    }

    static EdgeAddress parse(std::string_view s, std::size_t offset_base = 0) {
        if (!valid_text(s))
            throw Error(ErrorKind::BadInput,
                        "malformed edge address '" + std::string(s) +
                            "' (want digit 0-2 followed by L/R letters)",
                        offset_base);
        EdgeAddress e;
        e.path_.assign(s);
        return e;
    }

    const std::string& str() const { return path_; }
    std::size_t depth() const { return path_.size(); }
    bool is_base() const { return path_.size() == 1; }
    char base_letter() const { return path_[0]; }

    EdgeAddress parent() const {
        if (is_base()) throw Error(ErrorKind::Internal, "base edge has no parent");
        EdgeAddress e;
        e.path_ = path_.substr(0, path_.size() - 1);
        return e;
    }

    EdgeAddress child(char lr) const {
        EdgeAddress e;
        e.path_ = path_ + lr;
        return e;
    }
    EdgeAddress left() const { return child('L'); }
    EdgeAddress right() const { return child('R'); }

    bool is_prefix_of(const EdgeAddress& other) const {
        return other.path_.size() >= path_.size() &&
               other.path_.compare(0, path_.size(), path_) == 0;
    }

    /// Concatenate an {L,R}-suffix.
    EdgeAddress with_suffix(std::string_view suffix) const {
        EdgeAddress e;
        e.path_ = path_;
        e.path_.append(suffix);
        return e;
    }

    /// Suffix of `other` past this address; precondition: is_prefix_of(other).
    std::string suffix_from(const EdgeAddress& other) const {
        return other.path_.substr(path_.size());
    }

    /// Rotate the base direction by `rot` steps (0 -> 1 -> 2 -> 0 for rot=1).
    EdgeAddress relabeled(int rot) const {
        EdgeAddress e;
        e.path_ = path_;
        e.path_[0] = static_cast<char>('0' + (((path_[0] - '0') + rot) % 3 + 3) % 3);
        return e;
    }

    auto operator<=>(const EdgeAddress&) const = default;

  private:
    std::string path_;
};

/// A vertex of the tree: v0 (empty path) or the far endpoint of an edge.
/// Printed as "." for v0, else as the parent-edge address.
class VertexAddress {
  public:
    VertexAddress() = default;
    explicit VertexAddress(const EdgeAddress& below) : path_(below.str()) {}

    static VertexAddress base() { return VertexAddress(); }

    static VertexAddress parse(std::string_view s, std::size_t offset_base = 0) {
        if (s == ".") return VertexAddress();
        VertexAddress v;
        v.path_ = EdgeAddress::parse(s, offset_base).str();
        return v;
    }

    bool is_base() const { return path_.empty(); }
    /// Edge whose far endpoint is this vertex; precondition: !is_base().
    EdgeAddress parent_edge() const { return EdgeAddress::parse(path_); }

    std::string str() const { return path_.empty() ? "." : path_; }

    auto operator<=>(const VertexAddress&) const = default;

  private:
    std::string path_; // empty = v0
};

} // namespace asymcg
