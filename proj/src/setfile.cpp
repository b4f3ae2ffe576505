#include "polyred/setfile.hpp"

#include <fstream>
#include <sstream>

#include "polyred/encoding.hpp"

namespace polyred {

SetFile parse_set_text(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("set file must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "cyclotomic_order" && key != "sets")
            throw ParseError("unknown key \"" + key + "\" in set file");
    if (!doc.contains("cyclotomic_order") || !doc["cyclotomic_order"].is_number_integer() ||
        doc["cyclotomic_order"].get<long long>() < 1)
        throw ParseError("\"cyclotomic_order\" must be a positive integer");
    if (!doc.contains("sets") || !doc["sets"].is_object())
        throw ParseError("\"sets\" must be an object");

    SetFile out;
    out.cyclotomic_order = doc["cyclotomic_order"].get<std::size_t>();
    out.field = make_field(out.cyclotomic_order);
    for (const auto& [label, value] : doc["sets"].items()) {
        try {
            out.sets.emplace(label, decode_set(value, out.field));
        } catch (const ParseError& e) {
            throw ParseError("set \"" + label + "\": " + e.what());
        }
    }
    return out;
}

SetFile parse_set_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_text(buf.str());
}

std::string emit_set_file(const SetFile& file)
{
    Json sets = Json::object();
    for (const auto& [label, set] : file.sets)
        sets[label] = encode_set(set);
    Json doc{{"cyclotomic_order", file.cyclotomic_order}, {"sets", std::move(sets)}};
    return doc.dump(2) + "\n";
}

}  // namespace polyred
