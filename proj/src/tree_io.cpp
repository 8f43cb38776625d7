#include "plgb/tree_io.hpp"

#include "plgb/error.hpp"

#include <cctype>

namespace plgb {

namespace detail {

void Scanner::skip_blanks()
{
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
}

bool Scanner::at_end()
{
    skip_blanks();
    return pos_ >= text_.size();
}

char Scanner::peek()
{
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::accept(char c)
{
    if (peek() != c || at_end())
        return false;
    ++pos_;
    return true;
}

void Scanner::expect(char c)
{
    if (!accept(c))
        fail(std::string("expected '") + c + "'");
}

std::string_view Scanner::name()
{
    skip_blanks();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
    }
    if (start == pos_)
        fail("expected a generator name");
    return text_.substr(start, pos_ - start);
}

void Scanner::fail(const std::string& what) const
{
    std::string near = pos_ < text_.size() ? " near '" + std::string(text_.substr(pos_, 12)) + "'" : " at end of input";
    throw ParseError(what + near, pos_);
}

namespace {

Letter resolve(const Alphabet& alphabet, Scanner& in)
{
    std::size_t at = in.position();
    std::string_view n = in.name();
    auto l = alphabet.lookup(n);
    if (!l)
        throw ParseError("unknown generator '" + std::string(n) + "'", at);
    return *l;
}

} // namespace

PlanarTree parse_tree(const Alphabet& alphabet, Scanner& in)
{
    Letter root = resolve(alphabet, in);
    std::vector<PlanarTree> branches;
    if (in.accept('(')) {
        do {
            branches.push_back(parse_tree(alphabet, in));
        } while (in.accept(','));
        in.expect(')');
    }
    return PlanarTree(root, std::move(branches));
}

BinaryTree parse_binary(const Alphabet& alphabet, Scanner& in)
{
    if (in.accept('(')) {
        BinaryTree left = parse_binary(alphabet, in);
        in.expect('^');
        BinaryTree right = parse_binary(alphabet, in);
        in.expect(')');
        return BinaryTree(std::move(left), std::move(right));
    }
    return BinaryTree(resolve(alphabet, in));
}

} // namespace detail

PlanarTree parse_tree(const Alphabet& alphabet, std::string_view text)
{
    detail::Scanner in(text);
    PlanarTree t = detail::parse_tree(alphabet, in);
    if (!in.at_end())
        in.fail("unexpected trailing input");
    return t;
}

std::string format_tree(const Alphabet& alphabet, const PlanarTree& t)
{
    std::string out = alphabet.name(t.root());
    if (!t.branches().empty()) {
        out += '(';
        bool first = true;
        for (const auto& b : t.branches()) {
            if (!first)
                out += ',';
            out += format_tree(alphabet, b);
            first = false;
        }
        out += ')';
    }
    return out;
}

BinaryTree parse_binary(const Alphabet& alphabet, std::string_view text)
{
    detail::Scanner in(text);
    BinaryTree t = detail::parse_binary(alphabet, in);
    if (!in.at_end())
        in.fail("unexpected trailing input");
    return t;
}

std::string format_binary(const Alphabet& alphabet, const BinaryTree& t)
{
    if (t.is_leaf())
        return alphabet.name(t.leaf());
    return "(" + format_binary(alphabet, t.left()) + "^" + format_binary(alphabet, t.right()) + ")";
}

} // namespace plgb
