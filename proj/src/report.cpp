#include "fusionwitt/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fusionwitt {

void Report::section(std::string title, std::string body)
{
    sections_.emplace_back(std::move(title), std::move(body));
}

void Report::set(std::string const& key, std::string value)
{
    if (key.empty() || key.find_first_of("=\n") != std::string::npos)
        throw std::invalid_argument("bad report key '" + key + "'");
    if (value.find('\n') != std::string::npos)
        throw std::invalid_argument("report value for '" + key + "' contains a newline");
    auto it = std::find_if(machine_.begin(), machine_.end(), [&](auto const& kv) { return kv.first == key; });
    if (it != machine_.end())
        it->second = std::move(value);
    else
        machine_.emplace_back(key, std::move(value));
}

std::string const* Report::find(std::string_view key) const
{
    for (auto const& [k, v] : machine_)
        if (k == key)
            return &v;
    return nullptr;
}

std::string Report::text() const
{
    std::ostringstream os;
    bool first = true;
    for (auto const& [title, body] : sections_) {
        if (!first)
            os << '\n';
        first = false;
        os << "== " << title << " ==\n" << body;
        if (!body.empty() && body.back() != '\n')
            os << '\n';
    }
    return os.str();
}

std::string Report::machine_text() const
{
    std::ostringstream os;
    for (auto const& [k, v] : machine_)
        os << k << '=' << v << '\n';
    return os.str();
}

std::vector<std::pair<std::string, std::string>> parse_machine(std::string_view text)
{
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("malformed machine line '" + line + "'");
        out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    }
    return out;
}

} // namespace fusionwitt
