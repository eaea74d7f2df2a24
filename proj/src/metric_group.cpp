#include "fusionwitt/metric_group.hpp"

#include "fusionwitt/number_theory.hpp"

#include <numeric>
#include <sstream>

namespace fusionwitt {

Rational mod1(Rational r)
{
    auto const n = r.numerator(), d = r.denominator();
    return Rational(((n % d) + d) % d, d);
}

namespace {

bool is_integer(Rational const& r)
{
    return r.denominator() == 1;
}

std::string describe(std::vector<MetricViolation> const& vs)
{
    std::ostringstream os;
    os << "invalid metric group";
    if (!vs.empty())
        os << ": " << vs.front().kind << ": " << vs.front().message;
    return os.str();
}

void require_cap(std::size_t size, std::size_t cap, char const* what)
{
    if (size > cap)
        throw CapExceeded(std::string(what) + ": group of order " + std::to_string(size) + " exceeds the element cap " +
                          std::to_string(cap));
}

// Checks that only depend on the generator data.
std::vector<MetricViolation> form_violations(std::vector<std::uint64_t> const& orders, QuadraticForm const& form)
{
    std::vector<MetricViolation> out;
    int const k = static_cast<int>(orders.size());
    for (int i = 0; i < k; ++i)
        if (orders[i] < 2)
            out.push_back({"order", {i + 1}, "generator order must be at least 2"});
    if (static_cast<int>(form.diag.size()) != k) {
        out.push_back({"arity", {static_cast<int>(form.diag.size())}, "number of q values differs from the number of orders"});
        return out;
    }
    for (auto const& [ij, v] : form.cross) {
        auto const [i, j] = ij;
        if (i < 0 || j >= k || i >= j)
            out.push_back({"cross-index", {i + 1, j + 1}, "cross term indices must satisfy 1 <= i < j <= rank"});
    }
    if (!out.empty())
        return out;
    for (int i = 0; i < k; ++i) {
        auto const d = static_cast<std::int64_t>(orders[i]);
        auto const q = form.diag[i];
        if (!is_integer(q * (2 * d)))
            out.push_back({"well-defined", {i + 1}, "2*d*q is not an integer for generator " + std::to_string(i + 1)});
        if (!is_integer(q * (d * d)))
            out.push_back({"well-defined", {i + 1}, "d^2*q is not an integer for generator " + std::to_string(i + 1)});
    }
    for (auto const& [ij, v] : form.cross) {
        auto const [i, j] = ij;
        auto const g = static_cast<std::int64_t>(std::gcd(orders[i], orders[j]));
        if (!is_integer(v * g))
            out.push_back({"well-defined", {i + 1, j + 1},
                           "gcd(d_i,d_j)*b is not an integer for generators " + std::to_string(i + 1) + "," + std::to_string(j + 1)});
    }
    return out;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> orders)
    : orders_(std::move(orders))
    , stride_(orders_.size())
{
    size_ = 1;
    for (std::size_t i = orders_.size(); i-- > 0;) {
        if (orders_[i] == 0)
            throw std::invalid_argument("group orders must be positive");
        stride_[i] = size_;
        size_ *= orders_[i];
    }
}

bool FiniteAbelianGroup::is_canonical() const
{
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (orders_[i] < 2)
            return false;
        if (i + 1 < orders_.size() && orders_[i + 1] % orders_[i] != 0)
            return false;
    }
    return true;
}

std::size_t FiniteAbelianGroup::encode(Element const& x) const
{
    if (x.size() != orders_.size())
        throw std::out_of_range("element has wrong number of coordinates");
    std::size_t id = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto const d = static_cast<std::int64_t>(orders_[i]);
        id += static_cast<std::size_t>(((x[i] % d) + d) % d) * stride_[i];
    }
    return id;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::decode(std::size_t id) const
{
    Element x(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        x[i] = static_cast<std::int64_t>(id / stride_[i]);
        id %= stride_[i];
    }
    return x;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const
{
    std::size_t id = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        auto const xa = a / stride_[i], xb = b / stride_[i];
        a %= stride_[i];
        b %= stride_[i];
        id += ((xa + xb) % orders_[i]) * stride_[i];
    }
    return id;
}

std::size_t FiniteAbelianGroup::neg(std::size_t a) const
{
    std::size_t id = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        auto const x = a / stride_[i];
        a %= stride_[i];
        id += ((orders_[i] - x) % orders_[i]) * stride_[i];
    }
    return id;
}

std::uint64_t FiniteAbelianGroup::order_of(std::size_t id) const
{
    std::uint64_t o = 1;
    auto const x = decode(id);
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        auto const d = orders_[i];
        o = std::lcm(o, d / std::gcd(d, static_cast<std::uint64_t>(x[i])));
    }
    return o;
}

Rational QuadraticForm::cross_at(int i, int j) const
{
    if (i > j)
        std::swap(i, j);
    auto it = cross.find({i, j});
    return it == cross.end() ? Rational(0) : it->second;
}

MetricValidation validate_metric(MetricCandidate const& raw, std::size_t cap)
{
    MetricValidation out;
    out.violations = form_violations(raw.orders, raw.form);
    for (std::size_t i = 0; i + 1 < raw.orders.size(); ++i)
        if (raw.orders[i] != 0 && raw.orders[i + 1] % raw.orders[i] != 0)
            out.violations.push_back({"divisibility", {static_cast<int>(i + 1), static_cast<int>(i + 2)},
                                      "orders must form a divisibility chain"});
    if (!out.valid())
        return out;
    auto const mg = MetricGroup::ambient(raw.orders, raw.form, cap);
    // Quadratic law q(nx) = n^2 q(x), exhaustively on small groups.
    if (mg.size() <= 1000) {
        auto const& g = mg.group();
        for (std::size_t x = 0; x < mg.size(); ++x) {
            auto const o = g.order_of(x);
            std::size_t nx = x;
            for (std::uint64_t n = 2; n <= o; ++n) {
                nx = g.add(nx, x);
                if (mg.q(nx) != mod1(mg.q(x) * static_cast<std::int64_t>(n * n))) {
                    out.violations.push_back({"quadratic-law", {static_cast<int>(x)}, "q(nx) != n^2 q(x)"});
                    break;
                }
            }
        }
    }
    out.nondegenerate = mg.nondegenerate();
    return out;
}

InvalidMetric::InvalidMetric(std::vector<MetricViolation> violations)
    : std::runtime_error(describe(violations))
    , violations_(std::move(violations))
{}

MetricGroup::MetricGroup()
    : MetricGroup(FiniteAbelianGroup(std::vector<std::uint64_t>{}), QuadraticForm{}, default_element_cap)
{}

MetricGroup::MetricGroup(MetricCandidate raw, std::size_t cap)
{
    auto report = validate_metric(raw, cap);
    if (!report.valid())
        throw InvalidMetric(std::move(report.violations));
    *this = MetricGroup(FiniteAbelianGroup(std::move(raw.orders)), std::move(raw.form), cap);
}

MetricGroup MetricGroup::ambient(std::vector<std::uint64_t> orders, QuadraticForm form, std::size_t cap)
{
    auto violations = form_violations(orders, form);
    if (!violations.empty())
        throw InvalidMetric(std::move(violations));
    return MetricGroup(FiniteAbelianGroup(std::move(orders)), std::move(form), cap);
}

MetricGroup::MetricGroup(FiniteAbelianGroup group, QuadraticForm form, std::size_t cap)
    : group_(std::move(group))
    , form_(std::move(form))
{
    require_cap(group_.size(), cap, "metric group");
    auto const k = group_.rank();
    for (auto& q : form_.diag)
        q = mod1(q);
    for (auto it = form_.cross.begin(); it != form_.cross.end();) {
        it->second = mod1(it->second);
        it = it->second.numerator() == 0 ? form_.cross.erase(it) : std::next(it);
    }
    level_ = 1;
    for (auto const& q : form_.diag)
        level_ = std::lcm(level_, static_cast<std::uint64_t>(q.denominator()));
    for (auto const& [ij, v] : form_.cross)
        level_ = std::lcm(level_, static_cast<std::uint64_t>(v.denominator()));
    auto scaled = [&](Rational const& r) {
        return static_cast<std::uint64_t>(r.numerator()) * (level_ / static_cast<std::uint64_t>(r.denominator()));
    };
    diag_scaled_.resize(k);
    cross_scaled_.assign(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        diag_scaled_[i] = scaled(form_.diag[i]);
    for (auto const& [ij, v] : form_.cross)
        cross_scaled_[ij.first][ij.second] = scaled(v);

    // Radical of b: nonzero x with b(x, e_i) = 0 for every generator.
    std::vector<std::size_t> gens(k);
    for (std::size_t i = 0; i < k; ++i) {
        Element e(k, 0);
        e[i] = 1;
        gens[i] = group_.encode(e);
    }
    nondegenerate_ = true;
    for (std::size_t x = 1; x < group_.size() && nondegenerate_; ++x) {
        bool in_radical = true;
        for (auto e : gens)
            if (b_scaled(x, e) != 0) {
                in_radical = false;
                break;
            }
        nondegenerate_ = !in_radical;
    }
}

std::uint64_t MetricGroup::q_scaled(std::size_t id) const
{
    auto const x = group_.decode(id);
    unsigned __int128 acc = 0;
    auto const k = x.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (x[i] == 0)
            continue;
        auto const xi = static_cast<unsigned __int128>(x[i]);
        acc += (xi * xi % level_) * diag_scaled_[i];
        for (std::size_t j = i + 1; j < k; ++j)
            if (cross_scaled_[i][j])
                acc += (xi * static_cast<unsigned __int128>(x[j]) % level_) * cross_scaled_[i][j];
        acc %= level_;
    }
    return static_cast<std::uint64_t>(acc % level_);
}

std::uint64_t MetricGroup::b_scaled(std::size_t x, std::size_t y) const
{
    auto const sum = q_scaled(group_.add(x, y));
    auto const minus = (q_scaled(x) + q_scaled(y)) % level_;
    return (sum + level_ - minus) % level_;
}

MetricCandidate MetricGroup::to_candidate() const
{
    return {group_.orders(), form_};
}

namespace {

void check_coordinates(MetricGroup const& mg, MetricGroup::Element const& x)
{
    auto const& orders = mg.orders();
    if (x.size() != orders.size())
        throw std::out_of_range("element has " + std::to_string(x.size()) + " coordinates, group rank is " +
                                std::to_string(orders.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || static_cast<std::uint64_t>(x[i]) >= orders[i])
            throw std::out_of_range("coordinate " + std::to_string(i + 1) + " out of range");
}

} // namespace

Rational evaluate(MetricGroup const& mg, MetricGroup::Element const& x)
{
    check_coordinates(mg, x);
    return mg.q(x);
}

Rational bilinear(MetricGroup const& mg, MetricGroup::Element const& x, MetricGroup::Element const& y)
{
    check_coordinates(mg, x);
    check_coordinates(mg, y);
    return mg.b(mg.group().encode(x), mg.group().encode(y));
}

GaussSum gauss_sum(MetricGroup const& mg, std::size_t cap)
{
    require_cap(mg.size(), cap, "gauss_sum");
    GaussSum out;
    CyclotomicInteger value(mg.level());
    for (std::size_t x = 0; x < mg.size(); ++x)
        value.add_term(static_cast<std::int64_t>(mg.q_scaled(x)), 1);
    out.value = value;
    auto const m = (value * value.conj()).as_integer();
    if (!m)
        return out;
    out.magnitude_squared = *m;
    if (*m == 0) {
        out.exact = true;
    } else {
        auto const root = CyclotomicInteger::sqrt_of(static_cast<std::uint64_t>(*m));
        for (int k = 0; k < 8; ++k)
            if (value == root * CyclotomicInteger::root(8, k)) {
                out.eighths = k;
                out.exact = true;
                break;
            }
    }
    if (mg.nondegenerate() && (out.magnitude_squared != static_cast<std::int64_t>(mg.size()) || !out.eighths))
        throw std::logic_error("Gauss sum of a nondegenerate form is not sqrt|A| times an eighth root of unity");
    return out;
}

MetricGroup subquotient(MetricGroup const& mg, abelian::Mask const& in_h, std::vector<std::size_t> const& killed)
{
    auto const factors = abelian::decompose(mg, in_h, killed);
    MetricCandidate c;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        c.orders.push_back(factors[i].order);
        c.form.diag.push_back(mg.q(factors[i].generator));
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            auto const v = mg.b(factors[i].generator, factors[j].generator);
            if (v.numerator() != 0)
                c.form.cross[{static_cast<int>(i), static_cast<int>(j)}] = v;
        }
    }
    return MetricGroup(std::move(c), std::numeric_limits<std::size_t>::max());
}

MetricGroup canonicalize(MetricGroup const& mg)
{
    return subquotient(mg, abelian::Mask(mg.size(), true));
}

MetricGroup direct_sum(MetricGroup const& a, MetricGroup const& b, std::size_t cap)
{
    require_cap(a.size() * b.size(), cap, "direct_sum");
    std::vector<std::uint64_t> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    QuadraticForm form = a.form();
    form.diag.insert(form.diag.end(), b.form().diag.begin(), b.form().diag.end());
    int const shift = static_cast<int>(a.orders().size());
    for (auto const& [ij, v] : b.form().cross)
        form.cross[{ij.first + shift, ij.second + shift}] = v;
    return canonicalize(MetricGroup::ambient(std::move(orders), std::move(form), cap));
}

std::map<std::uint64_t, MetricGroup> sylow_decompose(MetricGroup const& mg, std::size_t cap)
{
    require_cap(mg.size(), cap, "sylow_decompose");
    std::map<std::uint64_t, MetricGroup> out;
    auto const& g = mg.group();
    for (auto const& [p, e] : factorize(mg.size())) {
        abelian::Mask part(mg.size(), false);
        for (std::size_t x = 0; x < mg.size(); ++x)
            part[x] = is_power_of(g.order_of(x), p);
        out.emplace(p, subquotient(mg, part));
    }
    return out;
}

MetricGroup inverse_form(MetricGroup const& mg)
{
    MetricCandidate c = mg.to_candidate();
    for (auto& q : c.form.diag)
        q = mod1(-q);
    for (auto& [ij, v] : c.form.cross)
        v = mod1(-v);
    if (mg.group().is_canonical())
        return MetricGroup(std::move(c), std::numeric_limits<std::size_t>::max());
    return MetricGroup::ambient(std::move(c.orders), std::move(c.form), std::numeric_limits<std::size_t>::max());
}

} // namespace fusionwitt
