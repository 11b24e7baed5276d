#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "partgen/io.hpp"

namespace partgen::io {

namespace {

enum class Section { none, coords, demands, depots, other };

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Part parse_integer(const std::string& token, const std::string& what)
{
    Part value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        throw InputError("TSPLIB: " + what + " '" + token + "' is not an integer");
    return value;
}

json parse_coordinate(const std::string& token)
{
    Part as_int = 0;
    const char* last = token.data() + token.size();
    if (auto [end, ec] = std::from_chars(token.data(), last, as_int); ec == std::errc{} && end == last)
        return as_int;
    double as_double = 0;
    if (auto [end, ec] = std::from_chars(token.data(), last, as_double); ec == std::errc{} && end == last)
        return as_double;
    throw InputError("TSPLIB: coordinate '" + token + "' is not a number");
}

} // namespace

InstanceSpec read_tsplib(std::istream& in, std::optional<Part> k)
{
    std::optional<Part> dimension;
    std::optional<Part> vehicles;
    std::map<Part, json> coords;
    std::map<Part, Part> demands;
    std::vector<Part> depot_ids;
    Section section = Section::none;

    std::string raw;
    while (std::getline(in, raw)) {
        const std::string line = trim(raw);
        if (line.empty())
            continue;

        if (std::isalpha(static_cast<unsigned char>(line.front()))) {
            const auto colon = line.find(':');
            std::string key = trim(line.substr(0, colon));
            const std::string value = colon == std::string::npos ? std::string{} : trim(line.substr(colon + 1));
            if (key == "EOF")
                break;
            if (key == "NODE_COORD_SECTION")
                section = Section::coords;
            else if (key == "DEMAND_SECTION")
                section = Section::demands;
            else if (key == "DEPOT_SECTION")
                section = Section::depots;
            else if (key.ends_with("_SECTION"))
                section = Section::other;
            else {
                section = Section::none;
                if (key == "DIMENSION")
                    dimension = parse_integer(value, "DIMENSION");
                else if (key == "VEHICLES")
                    vehicles = parse_integer(value, "VEHICLES");
                // NAME, TYPE, COMMENT, CAPACITY, EDGE_WEIGHT_TYPE: not needed here.
            }
            continue;
        }

        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;)
            tokens.push_back(t);

        switch (section) {
        case Section::coords: {
            if (tokens.size() < 3)
                throw InputError("TSPLIB: coordinate line '" + line + "' needs an id and two values");
            const Part id = parse_integer(tokens[0], "node id");
            coords[id] = json{{"x", parse_coordinate(tokens[1])}, {"y", parse_coordinate(tokens[2])}};
            break;
        }
        case Section::demands: {
            if (tokens.size() != 2)
                throw InputError("TSPLIB: demand line '" + line + "' needs an id and a demand");
            const Part id = parse_integer(tokens[0], "node id");
            if (!demands.emplace(id, parse_integer(tokens[1], "demand")).second)
                throw InputError("TSPLIB: node " + tokens[0] + " has two demands");
            break;
        }
        case Section::depots:
            for (const std::string& t : tokens) {
                const Part id = parse_integer(t, "depot id");
                if (id >= 0)
                    depot_ids.push_back(id);
            }
            break;
        case Section::none:
            throw InputError("TSPLIB: unexpected data line '" + line + "'");
        case Section::other:
            break;
        }
    }

    if (!k)
        k = vehicles;
    if (!k)
        throw InputError("TSPLIB: fleet size k not given and the file has no VEHICLES entry");
    if (demands.empty())
        throw InputError("TSPLIB: no DEMAND_SECTION found");
    if (dimension && static_cast<Part>(demands.size()) != *dimension)
        throw InputError("TSPLIB: DIMENSION is " + std::to_string(*dimension) + " but "
                         + std::to_string(demands.size()) + " demands were listed");
    if (depot_ids.size() > 1)
        throw InputError("TSPLIB: more than one depot is not supported");

    std::optional<Part> depot_id;
    if (!depot_ids.empty())
        depot_id = depot_ids.front();
    else if (const auto first = demands.find(1); first != demands.end() && first->second == 0)
        depot_id = 1;

    InstanceSpec instance;
    instance.fulfiller_count = *k;
    for (const auto& [id, demand] : demands) {
        Attributes attrs = Attributes::object();
        if (const auto c = coords.find(id); c != coords.end())
            attrs = c->second;
        if (depot_id && id == *depot_id) {
            if (demand != 0)
                throw InputError("TSPLIB: depot " + std::to_string(id) + " has nonzero demand");
            instance.depot = Depot{std::to_string(id), std::move(attrs)};
            continue;
        }
        instance.customers.push_back({std::to_string(id), demand, std::move(attrs)});
    }
    validate(instance);
    return instance;
}

InstanceSpec read_tsplib_file(const std::string& path, std::optional<Part> k)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    return read_tsplib(in, k);
}

} // namespace partgen::io
