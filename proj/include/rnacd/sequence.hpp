#ifndef RNACD_SEQUENCE_HPP
#define RNACD_SEQUENCE_HPP

#include <string>
#include <string_view>

namespace rnacd {

//! Which nucleotide pairs may form an arc.
enum class PairingModel {
    WC,   //!< {G,C} and {A,U}
    WCGU  //!< WC plus the wobble pair {G,U}
};

constexpr bool can_pair(char a, char b, PairingModel model) noexcept {
    auto is = [a, b](char x, char y) { return (a == x && b == y) || (a == y && b == x); };
    if (is('G', 'C') || is('A', 'U'))
        return true;
    return model == PairingModel::WCGU && is('G', 'U');
}

std::string_view to_string(PairingModel model) noexcept;
PairingModel parse_model(std::string_view text);

/**
 * Nucleotide string over {A,C,G,U}.
 *
 * Indexing through operator[] is 0-based; at() takes the 1-based positions used
 * by arcs and balanced sets.
 */
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::string letters);

    const std::string& str() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const noexcept { return letters_[i]; }
    char at(int position) const { return letters_.at(static_cast<std::size_t>(position - 1)); }

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;

private:
    std::string letters_;
};

} // namespace rnacd

#endif
