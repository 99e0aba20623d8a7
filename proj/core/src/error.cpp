#include "palwidth/error.hpp"

namespace palwidth {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::TrivialFactor: return "TrivialFactor";
    case Errc::TooFewFactors: return "TooFewFactors";
    case Errc::DuplicateFactorName: return "DuplicateFactorName";
    case Errc::UnknownFactor: return "UnknownFactor";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotReducedJunction: return "NotReducedJunction";
    case Errc::BadAnchors: return "BadAnchors";
    case Errc::AnchorOrderTooSmall: return "AnchorOrderTooSmall";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::WrongCase: return "WrongCase";
    case Errc::WrongSpec: return "WrongSpec";
    case Errc::InvalidBudget: return "InvalidBudget";
    case Errc::BudgetTooSmall: return "BudgetTooSmall";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

static std::string decorate(Errc code, const std::string& message,
                            std::optional<std::size_t> position)
{
    std::string out(errc_name(code));
    if (position)
        out += " at position " + std::to_string(*position);
    out += ": ";
    out += message;
    return out;
}

Error::Error(Errc code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)), code_(code), position_(position)
{
}

} // namespace palwidth
