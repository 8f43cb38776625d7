#include "plgb/alphabet.hpp"

#include "plgb/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace plgb {

namespace {

std::atomic<std::uint64_t> next_alphabet_id{1};

bool valid_name(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace

Alphabet::Alphabet(std::vector<Declaration> declared) : id_(next_alphabet_id++)
{
    if (declared.empty())
        throw Error("alphabet must contain at least one generator");
    std::set<std::string> names;
    for (const auto& d : declared) {
        if (!valid_name(d.name))
            throw Error("invalid generator name '" + d.name + "'");
        if (d.degree < 1)
            throw DegreeError("generator '" + d.name + "' has degree " + std::to_string(d.degree) +
                              "; degrees must be >= 1");
        if (!names.insert(d.name).second)
            throw Error("duplicate generator name '" + d.name + "'");
    }
    std::stable_sort(declared.begin(), declared.end(),
                     [](const Declaration& a, const Declaration& b) { return a.degree < b.degree; });
    for (std::size_t i = 0; i < declared.size(); ++i)
        generators_.push_back(Generator{declared[i].name, declared[i].degree, static_cast<int>(i), id_});
}

Alphabet Alphabet::from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("alphabet JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw ParseError("alphabet JSON: expected an object with a \"generators\" array", 0);
    std::vector<Declaration> declared;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object() || !g.contains("name") || !g["name"].is_string())
            throw ParseError("alphabet JSON: every generator needs a string \"name\"", 0);
        int deg = 1;
        if (g.contains("degree")) {
            if (!g["degree"].is_number_integer())
                throw ParseError("alphabet JSON: \"degree\" must be an integer", 0);
            deg = g["degree"].get<int>();
        }
        declared.push_back({g["name"].get<std::string>(), deg});
    }
    return Alphabet(std::move(declared));
}

Alphabet Alphabet::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open alphabet file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

Alphabet Alphabet::single(std::string name)
{
    return Alphabet({{std::move(name), 1}});
}

Alphabet Alphabet::uniform(const std::vector<std::string>& names)
{
    std::vector<Declaration> declared;
    for (const auto& n : names)
        declared.push_back({n, 1});
    return Alphabet(std::move(declared));
}

Alphabet Alphabet::graded(int count)
{
    std::vector<Declaration> declared;
    for (int i = 1; i <= count; ++i)
        declared.push_back({"a" + std::to_string(i), i});
    return Alphabet(std::move(declared));
}

const Generator& Alphabet::find(std::string_view name) const
{
    for (const auto& g : generators_)
        if (g.name == name)
            return g;
    throw Error("unknown generator '" + std::string(name) + "'");
}

std::optional<Letter> Alphabet::lookup(std::string_view name) const
{
    for (const auto& g : generators_)
        if (g.name == name)
            return g.letter();
    return std::nullopt;
}

std::string Alphabet::to_json() const
{
    nlohmann::json doc;
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : generators_)
        doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    return doc.dump();
}

} // namespace plgb
