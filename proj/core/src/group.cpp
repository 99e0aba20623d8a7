#include "palwidth/group.hpp"

#include "palwidth/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace palwidth {

namespace {

bool valid_identifier(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
        auto u = static_cast<unsigned char>(ch);
        return u > 0x20 && u < 0x7f && ch != ':';
    });
}

std::int64_t floor_mod(std::int64_t x, std::int64_t n)
{
    std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

} // namespace

// ---------------------------------------------------------------------------
// Factor

Factor Factor::cyclic(std::string name, std::int64_t order)
{
    if (!valid_identifier(name))
        throw Error(Errc::InvalidSpec, "invalid factor name '" + name + "'");
    if (order < 1)
        throw Error(Errc::InvalidSpec, "factor " + name + ": cyclic order must be positive");
    Factor f;
    f.name_ = std::move(name);
    f.kind_ = FactorKind::Cyclic;
    f.order_ = order;
    f.identity_ = 0;
    return f;
}

Factor Factor::infinite_cyclic(std::string name)
{
    if (!valid_identifier(name))
        throw Error(Errc::InvalidSpec, "invalid factor name '" + name + "'");
    Factor f;
    f.name_ = std::move(name);
    f.kind_ = FactorKind::InfiniteCyclic;
    f.identity_ = 0;
    return f;
}

Factor Factor::table(std::string name, std::vector<std::string> elements,
                     std::string_view identity,
                     const std::vector<std::vector<std::string>>& products)
{
    if (!valid_identifier(name))
        throw Error(Errc::InvalidSpec, "invalid factor name '" + name + "'");
    if (elements.empty())
        throw Error(Errc::InvalidSpec, "factor " + name + ": empty element list");

    std::unordered_map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!valid_identifier(elements[i]))
            throw Error(Errc::InvalidSpec,
                        "factor " + name + ": invalid element name '" + elements[i] + "'");
        if (!index.emplace(elements[i], static_cast<std::uint32_t>(i)).second)
            throw Error(Errc::InvalidSpec,
                        "factor " + name + ": duplicate element '" + elements[i] + "'");
    }
    auto id_it = index.find(std::string(identity));
    if (id_it == index.end())
        throw Error(Errc::NotAGroup,
                    "factor " + name + ": identity '" + std::string(identity) + "' is not an element");

    const std::size_t n = elements.size();
    const std::uint32_t e = id_it->second;
    std::vector<std::uint32_t> table(n * n);

    // Closure: every product is present and names an element.
    if (products.size() != n)
        throw Error(Errc::NotAGroup, "factor " + name + ": table must have one row per element");
    for (std::size_t i = 0; i < n; ++i) {
        if (products[i].size() != n)
            throw Error(Errc::NotAGroup,
                        "factor " + name + ": row '" + elements[i] + "' is incomplete");
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(products[i][j]);
            if (it == index.end())
                throw Error(Errc::NotAGroup, "factor " + name + ": closure fails at (" +
                                                 elements[i] + ", " + elements[j] + ") -> '" +
                                                 products[i][j] + "'");
            table[i * n + j] = it->second;
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        if (table[e * n + x] != x || table[x * n + e] != x)
            throw Error(Errc::NotAGroup, "factor " + name + ": identity law fails at " +
                                             elements[x]);
    }

    std::vector<std::uint32_t> inverses(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
            if (table[x * n + y] == e && table[y * n + x] == e) {
                inverses[x] = static_cast<std::uint32_t>(y);
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::NotAGroup,
                        "factor " + name + ": inverse axiom fails at " + elements[x]);
    }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                std::uint32_t left = table[table[x * n + y] * n + z];
                std::uint32_t right = table[x * n + table[y * n + z]];
                if (left != right)
                    throw Error(Errc::NotAGroup, "factor " + name +
                                                     ": associativity fails at (" + elements[x] +
                                                     ", " + elements[y] + ", " + elements[z] + ")");
            }

    Factor f;
    f.name_ = std::move(name);
    f.kind_ = FactorKind::Table;
    f.order_ = static_cast<std::int64_t>(n);
    f.names_ = std::move(elements);
    f.products_ = std::move(table);
    f.inverses_ = std::move(inverses);
    f.identity_ = e;
    return f;
}

std::optional<std::uint64_t> Factor::size() const noexcept
{
    if (kind_ == FactorKind::InfiniteCyclic)
        return std::nullopt;
    return static_cast<std::uint64_t>(order_);
}

bool Factor::contains(ElementValue x) const noexcept
{
    switch (kind_) {
    case FactorKind::InfiniteCyclic: return true;
    case FactorKind::Cyclic:
    case FactorKind::Table: return x >= 0 && x < order_;
    }
    return false;
}

ElementValue Factor::multiply(ElementValue x, ElementValue y) const
{
    switch (kind_) {
    case FactorKind::InfiniteCyclic: return x + y;
    case FactorKind::Cyclic: return (x + y) % order_;
    case FactorKind::Table:
        return products_[static_cast<std::size_t>(x * order_ + y)];
    }
    return 0;
}

ElementValue Factor::inverse(ElementValue x) const
{
    switch (kind_) {
    case FactorKind::InfiniteCyclic: return -x;
    case FactorKind::Cyclic: return x == 0 ? 0 : order_ - x;
    case FactorKind::Table: return inverses_[static_cast<std::size_t>(x)];
    }
    return 0;
}

Order Factor::order(ElementValue x) const
{
    switch (kind_) {
    case FactorKind::InfiniteCyclic:
        if (x == 0)
            return 1;
        return std::nullopt;
    case FactorKind::Cyclic: {
        std::int64_t g = std::gcd(x, order_);
        return static_cast<std::uint64_t>(order_ / g);
    }
    case FactorKind::Table: {
        std::uint64_t k = 1;
        for (ElementValue p = x; p != identity_; p = multiply(p, x))
            ++k;
        return k;
    }
    }
    return std::nullopt;
}

std::vector<ElementValue> Factor::nontrivial_elements(std::int64_t exponent_bound) const
{
    std::vector<ElementValue> out;
    switch (kind_) {
    case FactorKind::InfiniteCyclic:
        for (std::int64_t x = -exponent_bound; x <= exponent_bound; ++x)
            if (x != 0)
                out.push_back(x);
        break;
    case FactorKind::Cyclic:
    case FactorKind::Table:
        for (std::int64_t x = 0; x < order_; ++x)
            if (x != identity_)
                out.push_back(x);
        break;
    }
    return out;
}

ElementValue Factor::parse_element(std::string_view text) const
{
    if (kind_ == FactorKind::Table) {
        auto it = std::find(names_.begin(), names_.end(), text);
        if (it == names_.end())
            throw Error(Errc::UnknownElement,
                        "factor " + name_ + " has no element '" + std::string(text) + "'");
        return static_cast<ElementValue>(it - names_.begin());
    }
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '+')
        digits.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw Error(Errc::SyntaxError, "expected a decimal exponent, got '" + std::string(text) + "'");
    if (kind_ == FactorKind::Cyclic)
        return floor_mod(value, order_);
    return value;
}

std::string Factor::format_element(ElementValue x) const
{
    if (kind_ == FactorKind::Table)
        return names_.at(static_cast<std::size_t>(x));
    return std::to_string(x);
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(std::vector<Factor> factors) : factors_(std::move(factors))
{
    if (factors_.size() < 2)
        throw Error(Errc::TooFewFactors, "a free product needs at least two factors");
    std::set<std::string_view> seen;
    for (const Factor& f : factors_) {
        if (!seen.insert(f.name()).second)
            throw Error(Errc::DuplicateFactorName, "factor name '" + f.name() + "' repeats");
        if (f.size() && *f.size() < 2)
            throw Error(Errc::TrivialFactor, "factor " + f.name() + " is trivial");
    }
}

const Factor& GroupSpec::factor(FactorId id) const
{
    if (index_of(id) >= factors_.size())
        throw Error(Errc::UnknownFactor, "factor index " + std::to_string(index_of(id)));
    return factors_[index_of(id)];
}

std::optional<FactorId> GroupSpec::lookup(std::string_view name) const noexcept
{
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].name() == name)
            return factor_id(i);
    return std::nullopt;
}

FactorId GroupSpec::find(std::string_view name) const
{
    if (auto id = lookup(name))
        return *id;
    throw Error(Errc::UnknownFactor, "no factor named '" + std::string(name) + "'");
}

void GroupSpec::check_syllable(Syllable s) const
{
    const Factor& f = factor(s.factor);
    if (!f.contains(s.value))
        throw Error(Errc::UnknownElement,
                    "factor " + f.name() + " has no element " + std::to_string(s.value));
    if (f.is_identity(s.value))
        throw Error(Errc::UnknownElement, "syllable in " + f.name() + " is the identity");
}

Syllable GroupSpec::inverse(Syllable s) const
{
    return {s.factor, factor(s.factor).inverse(s.value)};
}

// ---------------------------------------------------------------------------
// JSON loading

namespace {

std::vector<std::vector<std::string>> table_rows(const std::string& name,
                                                 const std::vector<std::string>& elements,
                                                 const nlohmann::json& table)
{
    std::vector<std::vector<std::string>> rows;
    if (table.is_array()) {
        for (const auto& row : table) {
            if (!row.is_array())
                throw Error(Errc::InvalidSpec, "factor " + name + ": table rows must be arrays");
            std::vector<std::string> r;
            for (const auto& cell : row) {
                if (!cell.is_string())
                    throw Error(Errc::InvalidSpec, "factor " + name + ": table entries must be strings");
                r.push_back(cell.get<std::string>());
            }
            rows.push_back(std::move(r));
        }
        return rows;
    }
    if (!table.is_object())
        throw Error(Errc::InvalidSpec, "factor " + name + ": table must be an object or array");
    // Object form: {"x": {"y": "xy", ...}, ...}. Missing cells become empty
    // names, which fail the closure check with the offending pair.
    for (const auto& x : elements) {
        std::vector<std::string> r;
        auto row = table.find(x);
        for (const auto& y : elements) {
            if (row == table.end() || !row->is_object() || !row->contains(y) ||
                !(*row)[y].is_string()) {
                r.emplace_back();
                continue;
            }
            r.push_back((*row)[y].get<std::string>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Factor parse_factor(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string() || !j.contains("kind") ||
        !j["kind"].is_string())
        throw Error(Errc::InvalidSpec, "each factor needs string fields \"name\" and \"kind\"");
    std::string name = j["name"].get<std::string>();
    std::string kind = j["kind"].get<std::string>();
    if (kind == "cyclic") {
        if (!j.contains("order") || !j["order"].is_number_integer())
            throw Error(Errc::InvalidSpec, "factor " + name + ": cyclic factor needs integer \"order\"");
        auto order = j["order"].get<std::int64_t>();
        if (order == 1)
            throw Error(Errc::TrivialFactor, "factor " + name + " is trivial");
        if (order < 2)
            throw Error(Errc::InvalidSpec, "factor " + name + ": order must be at least 2");
        return Factor::cyclic(std::move(name), order);
    }
    if (kind == "infinite_cyclic")
        return Factor::infinite_cyclic(std::move(name));
    if (kind == "table") {
        if (!j.contains("elements") || !j["elements"].is_array() || !j.contains("identity") ||
            !j["identity"].is_string() || !j.contains("table"))
            throw Error(Errc::InvalidSpec,
                        "factor " + name + ": table factor needs \"elements\", \"identity\", \"table\"");
        std::vector<std::string> elements;
        for (const auto& e : j["elements"]) {
            if (!e.is_string())
                throw Error(Errc::InvalidSpec, "factor " + name + ": element names must be strings");
            elements.push_back(e.get<std::string>());
        }
        if (elements.size() == 1)
            throw Error(Errc::TrivialFactor, "factor " + name + " is trivial");
        auto rows = table_rows(name, elements, j["table"]);
        return Factor::table(std::move(name), std::move(elements),
                             j["identity"].get<std::string>(), rows);
    }
    throw Error(Errc::InvalidSpec, "factor " + name + ": unknown kind '" + kind + "'");
}

} // namespace

GroupSpec parse_group_spec(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::SyntaxError, e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("factors") || !doc["factors"].is_array())
        throw Error(Errc::InvalidSpec, "expected an object with a \"factors\" array");
    std::vector<Factor> factors;
    for (const auto& f : doc["factors"])
        factors.push_back(parse_factor(f));
    return GroupSpec(std::move(factors));
}

SpecPtr load_group_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InvalidSpec, "cannot read spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::make_shared<const GroupSpec>(parse_group_spec(buf.str()));
}

SpecPtr make_spec(std::vector<Factor> factors)
{
    return std::make_shared<const GroupSpec>(std::move(factors));
}

// ---------------------------------------------------------------------------
// Orders and classification

Order element_order(const GroupSpec& spec, FactorId factor, ElementValue element)
{
    const Factor& f = spec.factor(factor);
    if (!f.contains(element))
        throw Error(Errc::UnknownElement,
                    "factor " + f.name() + " has no element " + std::to_string(element));
    return f.order(element);
}

Order element_order(const GroupSpec& spec, std::string_view factor, std::string_view element)
{
    FactorId id = spec.find(factor);
    const Factor& f = spec.factor(id);
    ElementValue x;
    try {
        x = f.parse_element(element);
    } catch (const Error& e) {
        if (e.code() == Errc::SyntaxError)
            throw Error(Errc::UnknownElement, e.what());
        throw;
    }
    return element_order(spec, id, x);
}

namespace {

bool order_at_least_three(Order o) { return !o || *o >= 3; }

} // namespace

CaseVerdict classify_product(const GroupSpec& spec)
{
    if (spec.size() >= 3)
        return {MultiFactor{factor_id(spec.size() - 1)}, std::nullopt};

    const auto factors = spec.factors();
    if (factors[0].size() == 2u && factors[1].size() == 2u)
        return {ExceptionalZ2Z2{}, 2};

    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Factor& f = factors[i];
        if (f.kind() == FactorKind::InfiniteCyclic)
            return {CaseI{factor_id(i), 1}, std::nullopt};
        for (ElementValue x : f.nontrivial_elements())
            if (order_at_least_three(f.order(x)))
                return {CaseI{factor_id(i), x}, std::nullopt};
    }

    // Every nontrivial element is an involution, so a factor with three or
    // more elements has at least three involutions.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (*factors[i].size() >= 3) {
            auto elems = factors[i].nontrivial_elements();
            return {CaseII{factor_id(i), elems[0], elems[1]}, std::nullopt};
        }
    }
    // Unreachable for a valid spec: both factors of order 2 was handled above.
    return {ExceptionalZ2Z2{}, 2};
}

std::string format_verdict(const GroupSpec& spec, const CaseVerdict& verdict)
{
    auto syl = [&](FactorId id, ElementValue x) {
        const Factor& f = spec.factor(id);
        return f.name() + ":" + f.format_element(x);
    };
    std::string head = std::visit(
        [&](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ExceptionalZ2Z2>)
                return "ExceptionalZ2Z2";
            else if constexpr (std::is_same_v<T, CaseI>)
                return "CaseI(" + spec.factor(c.factor).name() + ", " + syl(c.factor, c.element) + ")";
            else if constexpr (std::is_same_v<T, CaseII>)
                return "CaseII(" + spec.factor(c.factor).name() + ", " + syl(c.factor, c.a) + ", " +
                       syl(c.factor, c.c) + ")";
            else
                return "MultiFactor(pivot " + spec.factor(c.pivot).name() + ")";
        },
        verdict.product_case);
    return head + ", width = " + (verdict.width ? std::to_string(*verdict.width) : "infinite");
}

} // namespace palwidth
