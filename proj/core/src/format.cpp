#include "heckeb/format.hpp"

#include <sstream>
#include <stdexcept>

namespace heckeb {

namespace {

const std::string kEmptySign = "∅";  // ∅

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::string to_text(const Partition& p) {
    if (p.empty())
        return kEmptySign;
    std::ostringstream os;
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i > 0)
            os << ',';
        os << p.parts()[i];
    }
    return os.str();
}

std::string to_text(const Multipartition& m) {
    std::ostringstream os;
    os << '(';
    for (int c = 1; c <= m.level(); ++c) {
        if (c > 1)
            os << '|';
        os << to_text(m.component(c));
    }
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    const std::string body = trim(text);
    if (body.empty() || body == kEmptySign)
        return Partition();
    std::vector<int> parts;
    std::istringstream is(body);
    std::string token;
    while (std::getline(is, token, ',')) {
        const std::string t = trim(token);
        if (t.empty())
            throw std::invalid_argument("parse_partition: empty part in '" + text + "'");
        size_t pos = 0;
        int value;
        try {
            value = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: bad part '" + t + "'");
        }
        if (pos != t.size())
            throw std::invalid_argument("parse_partition: bad part '" + t + "'");
        parts.push_back(value);
    }
    if (!body.empty() && body.back() == ',')
        throw std::invalid_argument("parse_partition: trailing comma in '" + text + "'");
    return Partition(std::move(parts));
}

Multipartition parse_multipartition(const std::string& text,
                                    std::optional<int> expected_level) {
    std::string body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<Partition> comps;
    std::string current;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == '|') {
            comps.push_back(parse_partition(current));
            current.clear();
        } else {
            current.push_back(body[i]);
        }
    }
    if (expected_level && static_cast<int>(comps.size()) != *expected_level)
        throw std::invalid_argument("parse_multipartition: expected level " +
                                    std::to_string(*expected_level) + ", got " +
                                    std::to_string(comps.size()));
    return Multipartition(std::move(comps));
}

}  // namespace heckeb
