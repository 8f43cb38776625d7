#pragma once

#include "plgb/alphabet.hpp"
#include "plgb/trees.hpp"

#include <string>
#include <string_view>

namespace plgb {

// TREE   := NAME | NAME "(" TREE ("," TREE)* ")"
// BINARY := NAME | "(" BINARY "^" BINARY ")"
// NAME   := [A-Za-z_][A-Za-z0-9_]*
// Blanks between tokens are skipped on input and never produced on output.

PlanarTree parse_tree(const Alphabet& alphabet, std::string_view text);
std::string format_tree(const Alphabet& alphabet, const PlanarTree& t);

inline Tree parse_nonplanar(const Alphabet& alphabet, std::string_view text)
{
    return forget_planarity(parse_tree(alphabet, text));
}
inline std::string format_tree(const Alphabet& alphabet, const Tree& t)
{
    return format_tree(alphabet, s_min(t));
}

BinaryTree parse_binary(const Alphabet& alphabet, std::string_view text);
std::string format_binary(const Alphabet& alphabet, const BinaryTree& t);

namespace detail {

/// Cursor over a string used by all text grammars of the library.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_blanks();
    bool at_end();
    char peek();
    bool accept(char c);
    void expect(char c);
    std::string_view name();
    std::size_t position() const { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }
    [[noreturn]] void fail(const std::string& what) const;

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

PlanarTree parse_tree(const Alphabet& alphabet, Scanner& in);
BinaryTree parse_binary(const Alphabet& alphabet, Scanner& in);

} // namespace detail

} // namespace plgb
