#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fusionwitt {

/// Human-readable sections plus a flat key=value map mirroring every number.
class Report
{
public:
    void section(std::string title, std::string body);
    /// Keys keep insertion order; setting an existing key replaces its value.
    void set(std::string const& key, std::string value);

    std::vector<std::pair<std::string, std::string>> const& sections() const { return sections_; }
    std::vector<std::pair<std::string, std::string>> const& machine() const { return machine_; }
    std::string const* find(std::string_view key) const;

    std::string text() const;
    std::string machine_text() const;

private:
    std::vector<std::pair<std::string, std::string>> sections_;
    std::vector<std::pair<std::string, std::string>> machine_;
};

/// Parses key=value lines as emitted by Report::machine_text.
std::vector<std::pair<std::string, std::string>> parse_machine(std::string_view text);

} // namespace fusionwitt
