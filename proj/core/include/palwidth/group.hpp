#pragma once

// Free-product specifications: the factors G_i, their element arithmetic and
// the classification of a product by its palindromic width.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace palwidth {

/// Index of a factor inside its GroupSpec, in declaration order.
enum class FactorId : std::uint32_t {};

constexpr std::uint32_t index_of(FactorId id) noexcept { return static_cast<std::uint32_t>(id); }
constexpr FactorId factor_id(std::size_t index) noexcept { return FactorId(static_cast<std::uint32_t>(index)); }

/// Element of a factor. Cyclic kinds store the exponent (reduced into [0, n)
/// for finite cyclic groups); table kinds store the declaration index.
using ElementValue = std::int64_t;

/// Element order; std::nullopt means infinite.
using Order = std::optional<std::uint64_t>;

enum class FactorKind { Cyclic, InfiniteCyclic, Table };

class Factor {
public:
    static Factor cyclic(std::string name, std::int64_t order);
    static Factor infinite_cyclic(std::string name);
    /// `products[i][j]` names the product elements[i] * elements[j]. The
    /// table is checked to be a group; failures raise NotAGroup naming the
    /// first offending element, pair or triple.
    static Factor table(std::string name, std::vector<std::string> elements,
                        std::string_view identity,
                        const std::vector<std::vector<std::string>>& products);

    const std::string& name() const noexcept { return name_; }
    FactorKind kind() const noexcept { return kind_; }

    /// Number of elements; std::nullopt for the infinite cyclic group.
    std::optional<std::uint64_t> size() const noexcept;

    ElementValue identity() const noexcept { return identity_; }
    bool is_identity(ElementValue x) const noexcept { return x == identity_; }
    bool contains(ElementValue x) const noexcept;
    ElementValue multiply(ElementValue x, ElementValue y) const;
    ElementValue inverse(ElementValue x) const;
    Order order(ElementValue x) const;

    /// Non-identity elements in canonical order: ascending exponent for the
    /// cyclic kinds, declaration order for tables. The infinite cyclic group
    /// is truncated to exponents in [-exponent_bound, exponent_bound].
    std::vector<ElementValue> nontrivial_elements(std::int64_t exponent_bound = 0) const;

    /// Parses a signed decimal exponent (cyclic kinds) or an element name.
    ElementValue parse_element(std::string_view text) const;
    /// Canonical rendering: exponents in [1, n-1] for finite cyclic groups.
    std::string format_element(ElementValue x) const;

    const std::vector<std::string>& element_names() const noexcept { return names_; }

    friend bool operator==(const Factor&, const Factor&) = default;

private:
    Factor() = default;

    std::string name_;
    FactorKind kind_ = FactorKind::Cyclic;
    std::int64_t order_ = 0;
    std::vector<std::string> names_;
    std::vector<std::uint32_t> products_;
    std::vector<std::uint32_t> inverses_;
    ElementValue identity_ = 0;
};

/// An element of one factor used as a letter of a reduced word.
struct Syllable {
    FactorId factor{};
    ElementValue value = 0;

    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A validated free product of at least two nontrivial factors with
/// pairwise-distinct names. Immutable.
class GroupSpec {
public:
    explicit GroupSpec(std::vector<Factor> factors);

    std::size_t size() const noexcept { return factors_.size(); }
    std::span<const Factor> factors() const noexcept { return factors_; }
    const Factor& factor(FactorId id) const;

    std::optional<FactorId> lookup(std::string_view name) const noexcept;
    /// Throws UnknownFactor.
    FactorId find(std::string_view name) const;

    /// Checks that `s` names a factor and a nontrivial element of it.
    void check_syllable(Syllable s) const;

    Syllable inverse(Syllable s) const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

private:
    std::vector<Factor> factors_;
};

using SpecPtr = std::shared_ptr<const GroupSpec>;

/// Parses and validates a group-spec JSON document.
GroupSpec parse_group_spec(std::string_view json_text);
SpecPtr load_group_spec(const std::string& path);
SpecPtr make_spec(std::vector<Factor> factors);

/// Order of `element` in the named factor. Throws UnknownFactor /
/// UnknownElement.
Order element_order(const GroupSpec& spec, std::string_view factor, std::string_view element);
Order element_order(const GroupSpec& spec, FactorId factor, ElementValue element);

struct ExceptionalZ2Z2 {};
struct CaseI {
    FactorId factor;
    ElementValue element;
};
struct CaseII {
    FactorId factor;
    ElementValue a;
    ElementValue c;
};
struct MultiFactor {
    FactorId pivot;
};

using ProductCase = std::variant<ExceptionalZ2Z2, CaseI, CaseII, MultiFactor>;

struct CaseVerdict {
    ProductCase product_case;
    /// Palindromic width: a number when finite, std::nullopt when infinite.
    std::optional<std::uint64_t> width;
};

CaseVerdict classify_product(const GroupSpec& spec);

/// "ExceptionalZ2Z2, width = 2", "CaseI(A, A:1), width = infinite", ...
std::string format_verdict(const GroupSpec& spec, const CaseVerdict& verdict);

} // namespace palwidth
