#include "fusionwitt/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace fusionwitt {

ParseError::ParseError(int line, std::string const& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message)
    , line_(line)
{}

namespace {

struct Line
{
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;)
            line.tokens.push_back(w);
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view token, int line)
{
    Int value{};
    auto const* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

Rational parse_fraction(std::string_view token)
{
    auto const slash = token.find('/');
    auto const num = parse_int<std::int64_t>(token.substr(0, slash), 0);
    std::int64_t den = 1;
    if (slash != std::string_view::npos)
        den = parse_int<std::int64_t>(token.substr(slash + 1), 0);
    if (den == 0)
        throw ParseError(0, "zero denominator in '" + std::string(token) + "'");
    return Rational(num, den);
}

std::string format_fraction(Rational const& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RingCandidate parse_ring_text(std::string_view text)
{
    auto const lines = tokenize(text);
    RingCandidate c;
    std::size_t pos = 0;
    auto expect = [&](std::string const& keyword) -> Line const& {
        if (pos >= lines.size() || lines[pos].tokens[0] != keyword)
            throw ParseError(pos < lines.size() ? lines[pos].number : 0, "missing " + keyword);
        return lines[pos++];
    };

    auto const& rank_line = expect("rank");
    if (rank_line.tokens.size() != 2)
        throw ParseError(rank_line.number, "expected 'rank <r>'");
    c.rank = parse_int<int>(rank_line.tokens[1], rank_line.number);
    if (c.rank < 1)
        throw ParseError(rank_line.number, "rank must be positive");
    auto const r = static_cast<std::size_t>(c.rank);

    auto const& label_line = expect("labels");
    if (label_line.tokens.size() != r + 1)
        throw ParseError(label_line.number, "expected " + std::to_string(r) + " labels");
    c.labels.assign(label_line.tokens.begin() + 1, label_line.tokens.end());

    auto const& dual_line = expect("dual");
    if (dual_line.tokens.size() != r + 1)
        throw ParseError(dual_line.number, "expected " + std::to_string(r) + " dual indices");
    for (std::size_t i = 1; i <= r; ++i) {
        int const d = parse_int<int>(dual_line.tokens[i], dual_line.number);
        if (d < 0 || d >= c.rank)
            throw ParseError(dual_line.number, "dual index out of range");
        c.dual.push_back(d);
    }

    c.coeff.assign(r * r * r, 0);
    std::set<std::tuple<int, int, int>> seen;
    for (; pos < lines.size(); ++pos) {
        auto const& line = lines[pos];
        if (line.tokens[0] != "N" || line.tokens.size() != 5)
            throw ParseError(line.number, "expected 'N <i> <j> <k> <m>'");
        int idx[3];
        for (int t = 0; t < 3; ++t) {
            idx[t] = parse_int<int>(line.tokens[t + 1], line.number);
            if (idx[t] < 0 || idx[t] >= c.rank)
                throw ParseError(line.number, "simple index out of range");
        }
        if (!seen.emplace(idx[0], idx[1], idx[2]).second)
            throw ParseError(line.number, "duplicate coefficient");
        c.coeff[(static_cast<std::size_t>(idx[0]) * r + idx[1]) * r + idx[2]] =
            parse_int<std::int64_t>(line.tokens[4], line.number);
    }
    return c;
}

MetricCandidate parse_metric_text(std::string_view text)
{
    auto const lines = tokenize(text);
    MetricCandidate c;
    std::size_t pos = 0;
    auto expect = [&](std::string const& keyword) -> Line const& {
        if (pos >= lines.size() || lines[pos].tokens[0] != keyword)
            throw ParseError(pos < lines.size() ? lines[pos].number : 0, "missing " + keyword);
        return lines[pos++];
    };
    auto fraction = [](std::string const& token, int line) {
        try {
            return parse_fraction(token);
        } catch (ParseError const& e) {
            throw ParseError(line, "bad fraction '" + token + "'");
        }
    };

    auto const& orders = expect("orders");
    for (std::size_t i = 1; i < orders.tokens.size(); ++i) {
        auto const d = parse_int<std::int64_t>(orders.tokens[i], orders.number);
        if (d < 1)
            throw ParseError(orders.number, "orders must be positive");
        c.orders.push_back(static_cast<std::uint64_t>(d));
    }
    auto const& q = expect("q");
    if (q.tokens.size() != c.orders.size() + 1)
        throw ParseError(q.number, "expected " + std::to_string(c.orders.size()) + " q values");
    for (std::size_t i = 1; i < q.tokens.size(); ++i)
        c.form.diag.push_back(fraction(q.tokens[i], q.number));

    for (; pos < lines.size(); ++pos) {
        auto const& line = lines[pos];
        if (line.tokens[0] != "b" || line.tokens.size() != 4)
            throw ParseError(line.number, "expected 'b <i> <j> <a/b>'");
        int const i = parse_int<int>(line.tokens[1], line.number);
        int const j = parse_int<int>(line.tokens[2], line.number);
        if (i < 1 || j <= i || j > static_cast<int>(c.orders.size()))
            throw ParseError(line.number, "cross term indices must satisfy 1 <= i < j <= rank");
        if (!c.form.cross.emplace(std::make_pair(i - 1, j - 1), fraction(line.tokens[3], line.number)).second)
            throw ParseError(line.number, "duplicate cross term");
    }
    return c;
}

std::string read_file(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FusionRing parse_ring_file(std::filesystem::path const& path, bool force)
{
    return FusionRing(parse_ring_text(read_file(path)), force);
}

MetricGroup parse_metric_file(std::filesystem::path const& path, std::size_t cap)
{
    return MetricGroup(parse_metric_text(read_file(path)), cap);
}

std::string format_ring(FusionRing const& ring)
{
    std::ostringstream os;
    int const r = ring.rank();
    os << "rank " << r << "\nlabels";
    for (auto const& l : ring.labels())
        os << ' ' << l;
    os << "\ndual";
    for (int i = 0; i < r; ++i)
        os << ' ' << ring.dual(i);
    os << '\n';
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != 0)
                    os << "N " << i << ' ' << j << ' ' << k << ' ' << ring.N(i, j, k) << '\n';
    return os.str();
}

std::string format_metric(MetricGroup const& mg)
{
    std::ostringstream os;
    os << "orders";
    for (auto d : mg.orders())
        os << ' ' << d;
    os << "\nq";
    for (auto const& q : mg.form().diag)
        os << ' ' << format_fraction(q);
    os << '\n';
    for (auto const& [ij, v] : mg.form().cross)
        os << "b " << ij.first + 1 << ' ' << ij.second + 1 << ' ' << format_fraction(v) << '\n';
    return os.str();
}

} // namespace fusionwitt
