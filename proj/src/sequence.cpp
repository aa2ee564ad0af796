#include "rnacd/sequence.hpp"

#include "rnacd/errors.hpp"

namespace rnacd {

std::string_view to_string(PairingModel model) noexcept {
    return model == PairingModel::WC ? "wc" : "wcgu";
}

PairingModel parse_model(std::string_view text) {
    if (text == "wc" || text == "WC")
        return PairingModel::WC;
    if (text == "wcgu" || text == "WCGU")
        return PairingModel::WCGU;
    throw Error("unknown pairing model '" + std::string(text) + "'");
}

Sequence::Sequence(std::string letters) : letters_(std::move(letters)) {
    while (!letters_.empty() && (letters_.back() == '\n' || letters_.back() == '\r'))
        letters_.pop_back();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const char c = letters_[i];
        if (c != 'A' && c != 'C' && c != 'G' && c != 'U')
            throw ParseError(ParseErrorKind::IllegalCharacter, static_cast<int>(i) + 1, c);
    }
}

} // namespace rnacd
