#pragma once

// Line-oriented text formats for fusion rings (.fr) and metric groups (.mg).
//
//   # fusion ring
//   rank 3
//   labels 1 eps sigma
//   dual 0 1 2
//   N 2 2 0 1           one line per nonzero N_{ij}^k (0-based)
//
//   # metric group
//   orders 2 4
//   q 1/4 1/8
//   b 1 2 1/2           optional cross terms, 1-based i < j

#include "fusionwitt/fusion_ring.hpp"
#include "fusionwitt/metric_group.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fusionwitt {

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, std::string const& message);
    int line() const { return line_; }

private:
    int line_;
};

Rational parse_fraction(std::string_view token);
std::string format_fraction(Rational const& r);

RingCandidate parse_ring_text(std::string_view text);
MetricCandidate parse_metric_text(std::string_view text);

std::string read_file(std::filesystem::path const& path);

/// Parses and validates; throws ParseError or InvalidRing.
FusionRing parse_ring_file(std::filesystem::path const& path, bool force = false);
/// Parses and validates; throws ParseError or InvalidMetric.
MetricGroup parse_metric_file(std::filesystem::path const& path, std::size_t cap = default_element_cap);

std::string format_ring(FusionRing const& ring);
std::string format_metric(MetricGroup const& mg);

} // namespace fusionwitt
