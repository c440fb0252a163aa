#include "cremona/mapfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/parse.hpp"

namespace cremona {

namespace {

std::string strip_comments(const std::string& content) {
    std::string out;
    out.reserve(content.size());
    bool in_comment = false;
    for (char c : content) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        out.push_back(in_comment ? ' ' : c);  // keep newlines for line counts
    }
    return out;
}

int line_of(const std::string& text, std::size_t pos) {
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

std::vector<std::string> split_top_level(const std::string& body, char sep, int line) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw parse_error("unbalanced parentheses in tuple", line, 1);
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

MapFile parse_map_file(const std::string& raw) {
    const std::string content = strip_comments(raw);
    MapFile file;
    bool have_header = false;

    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < content.size() &&
               std::isspace(static_cast<unsigned char>(content[pos])))
            ++pos;
    };
    const auto read_word = [&] {
        std::string w;
        while (pos < content.size() &&
               (std::isalnum(static_cast<unsigned char>(content[pos])) || content[pos] == '_'))
            w.push_back(content[pos++]);
        return w;
    };

    while (true) {
        skip_ws();
        if (pos >= content.size()) break;
        const int line = line_of(content, pos);
        const std::string keyword = read_word();

        if (keyword == "n") {
            skip_ws();
            if (pos >= content.size() || content[pos] != '=')
                throw parse_error("expected '=' after 'n'", line, 1);
            ++pos;
            skip_ws();
            std::string num;
            while (pos < content.size() && std::isdigit(static_cast<unsigned char>(content[pos])))
                num.push_back(content[pos++]);
            if (num.empty()) throw parse_error("expected a dimension after 'n ='", line, 1);
            file.ambient_n = std::stoi(num);
            if (file.ambient_n < 1)
                throw parse_error("ambient dimension must be at least 1", line, 1);
            have_header = true;
            continue;
        }

        if (keyword == "map" || keyword == "affine") {
            if (!have_header)
                throw parse_error("the 'n = <dim>' header must come before entries", line, 1);
            skip_ws();
            const std::string name = read_word();
            if (!valid_name(name)) throw parse_error("expected an entry name", line, 1);
            if (file.maps.count(name) || file.affine_maps.count(name))
                throw parse_error("duplicate entry name '" + name + "'", line, 1);
            skip_ws();
            if (pos >= content.size() || content[pos] != '=')
                throw parse_error("expected '=' after the entry name", line, 1);
            ++pos;
            skip_ws();

            const char open = keyword == "map" ? '[' : '(';
            const char close = keyword == "map" ? ']' : ')';
            if (pos >= content.size() || content[pos] != open)
                throw parse_error(std::string("expected '") + open + "' to start the tuple",
                                  line, 1);
            ++pos;
            std::string body;
            int depth = 0;
            while (pos < content.size()) {
                const char c = content[pos];
                if (c == open && open == '(') ++depth;
                if (c == close) {
                    if (depth == 0) break;
                    --depth;
                }
                body.push_back(c);
                ++pos;
            }
            if (pos >= content.size())
                throw parse_error(std::string("missing closing '") + close + "'", line, 1);
            ++pos;  // closing bracket

            if (keyword == "map") {
                const auto parts = split_top_level(body, ':', line);
                if (static_cast<int>(parts.size()) != file.ambient_n + 1)
                    throw parse_error("map '" + name + "' needs " +
                                          std::to_string(file.ambient_n + 1) +
                                          " components, found " + std::to_string(parts.size()),
                                      line, 1);
                std::vector<Polynomial> comps;
                comps.reserve(parts.size());
                for (const auto& part : parts)
                    comps.push_back(parse_polynomial(part, file.ambient_n));
                try {
                    file.maps.emplace(name, ProjectiveMap(std::move(comps)));
                } catch (const precondition_error& e) {
                    throw parse_error("map '" + name + "': " + e.what(), line, 1);
                }
            } else {
                const auto parts = split_top_level(body, ',', line);
                const int m = static_cast<int>(parts.size());
                std::vector<Polynomial> comps;
                comps.reserve(parts.size());
                for (const auto& part : parts) comps.push_back(parse_polynomial(part, m));
                try {
                    file.affine_maps.emplace(name, AffinePolyMap(m, std::move(comps)));
                } catch (const precondition_error& e) {
                    throw parse_error("affine '" + name + "': " + e.what(), line, 1);
                }
            }
            continue;
        }

        throw parse_error("expected 'n', 'map' or 'affine', found '" + keyword + "'", line, 1);
    }

    if (!have_header) throw parse_error("missing 'n = <dim>' header", 1, 1);
    return file;
}

MapFile load_map_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open map file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_map_file(buffer.str());
}

}  // namespace cremona
