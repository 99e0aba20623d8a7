#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace palwidth {

enum class Errc {
    InvalidSpec,
    NotAGroup,
    TrivialFactor,
    TooFewFactors,
    DuplicateFactorName,
    UnknownFactor,
    UnknownElement,
    SyntaxError,
    SpecMismatch,
    NotReducedJunction,
    BadAnchors,
    AnchorOrderTooSmall,
    EmptyWord,
    WrongCase,
    WrongSpec,
    InvalidBudget,
    BudgetTooSmall,
    InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Error raised by every fallible library operation. `position()` is set for
/// syntax errors and holds the byte offset into the parsed text.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message,
          std::optional<std::size_t> position = std::nullopt);

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Errc code_;
    std::optional<std::size_t> position_;
};

} // namespace palwidth
