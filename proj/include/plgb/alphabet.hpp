#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plgb {

/// Compact vertex/leaf decoration stored inside trees and words.
/// `rank` is the position in the total generator order, which already
/// respects the grading, so letters compare by rank alone.
struct Letter {
    int rank = 0;
    int degree = 1;

    friend bool operator==(const Letter& a, const Letter& b) { return a.rank == b.rank; }
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b)
    {
        return a.rank <=> b.rank;
    }
};

struct Generator {
    std::string name;
    int degree = 1;
    int rank = 0;
    std::uint64_t alphabet_id = 0;

    Letter letter() const { return Letter{rank, degree}; }
};

/// A finite graded, totally ordered generator set. Generators are ranked by
/// degree first and by declaration order within a degree.
class Alphabet {
public:
    struct Declaration {
        std::string name;
        int degree = 1;
    };

    explicit Alphabet(std::vector<Declaration> declared);

    /// Parses {"generators":[{"name":"x","degree":1}, ...]}.
    static Alphabet from_json(std::string_view text);
    static Alphabet load(const std::string& path);

    /// One generator "a" of degree 1.
    static Alphabet single(std::string name = "a");
    /// Degree-one generators in the given order.
    static Alphabet uniform(const std::vector<std::string>& names);
    /// a1, ..., an with |ai| = i.
    static Alphabet graded(int count);

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    std::uint64_t id() const { return id_; }

    const Generator& operator[](int rank) const { return generators_.at(static_cast<std::size_t>(rank)); }
    const Generator& operator[](Letter l) const { return (*this)[l.rank]; }
    const Generator& find(std::string_view name) const;
    std::optional<Letter> lookup(std::string_view name) const;
    Letter letter(std::string_view name) const { return find(name).letter(); }
    const std::string& name(Letter l) const { return (*this)[l].name; }

    std::string to_json() const;

private:
    std::vector<Generator> generators_;
    std::uint64_t id_;
};

} // namespace plgb
