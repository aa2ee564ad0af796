#include "rnacd/structure.hpp"

#include <algorithm>
#include <functional>

#include "rnacd/errors.hpp"
#include "rnacd/tree.hpp"

namespace rnacd {

ParseError::ParseError(ParseErrorKind kind, int position, char character)
    : Error([&] {
          switch (kind) {
          case ParseErrorKind::UnbalancedParens:
              return "unbalanced parenthesis at position " + std::to_string(position);
          case ParseErrorKind::IllegalCharacter:
              return "illegal character '" + std::string(1, character) + "' at position " +
                     std::to_string(position);
          case ParseErrorKind::SyntaxError:
              return "syntax error at position " + std::to_string(position);
          case ParseErrorKind::OneDotInternal:
              return "1-dot vertex given children at position " + std::to_string(position);
          }
          return std::string("parse error");
      }()),
      kind_(kind), position_(position), character_(character) {}

SecondaryStructure::SecondaryStructure(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0)
        throw InvalidStructure("negative structure length");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<int> partner(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& a : arcs_) {
        if (a.i < 1 || a.j > n || a.i >= a.j)
            throw InvalidStructure("arc {" + std::to_string(a.i) + "," + std::to_string(a.j) +
                                   "} outside 1.." + std::to_string(n));
        if (partner[a.i] != 0 || partner[a.j] != 0)
            throw InvalidStructure("arcs share endpoint at {" + std::to_string(a.i) + "," +
                                   std::to_string(a.j) + "}");
        partner[a.i] = a.j;
        partner[a.j] = a.i;
    }
    // Non-crossing iff the arcs nest like parentheses.
    std::vector<int> open;
    for (int p = 1; p <= n; ++p) {
        const int q = partner[p];
        if (q == 0)
            continue;
        if (q > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != q)
                throw InvalidStructure("crossing arcs at position " + std::to_string(p));
            open.pop_back();
        }
    }
}

std::vector<int> SecondaryStructure::partners() const {
    std::vector<int> partner(static_cast<std::size_t>(n_) + 1, 0);
    for (const Arc& a : arcs_) {
        partner[a.i] = a.j;
        partner[a.j] = a.i;
    }
    return partner;
}

SecondaryStructure parse_dotbracket(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::vector<Arc> arcs;
    std::vector<int> open;
    const int n = static_cast<int>(text.size());
    for (int p = 1; p <= n; ++p) {
        const char c = text[p - 1];
        switch (c) {
        case '(':
            open.push_back(p);
            break;
        case ')':
            if (open.empty())
                throw ParseError(ParseErrorKind::UnbalancedParens, p, c);
            arcs.push_back({open.back(), p});
            open.pop_back();
            break;
        case '.':
            break;
        default:
            throw ParseError(ParseErrorKind::IllegalCharacter, p, c);
        }
    }
    if (!open.empty())
        throw ParseError(ParseErrorKind::UnbalancedParens, open.back(), '(');
    return SecondaryStructure(n, std::move(arcs));
}

std::string to_dotbracket(const SecondaryStructure& s) {
    std::string out(static_cast<std::size_t>(s.size()), '.');
    for (const Arc& a : s.arcs()) {
        out[a.i - 1] = '(';
        out[a.j - 1] = ')';
    }
    return out;
}

DottedTree structure_to_tree(const SecondaryStructure& s) {
    const int n = s.size();
    const std::vector<int> partner = s.partners();
    const bool rooted = n >= 2 && partner[1] == n;
    DottedTree t(!rooted);

    // Children of the interval (lo, hi) exclusive, attached under `parent`.
    std::function<void(VertexId, int, int)> attach = [&](VertexId parent, int lo, int hi) {
        for (int p = lo; p <= hi; ++p) {
            if (partner[p] == 0) {
                t.add_child(parent, Dots::One);
            } else {
                const int q = partner[p];
                const VertexId v = t.add_child(parent, Dots::Two);
                attach(v, p + 1, q - 1);
                p = q;
            }
        }
    };
    if (rooted)
        attach(t.root(), 2, n - 1);
    else
        attach(t.root(), 1, n);
    return t;
}

SecondaryStructure tree_to_structure(const DottedTree& t) {
    std::vector<Arc> arcs;
    int next = 1;
    std::function<void(VertexId)> visit = [&](VertexId v) {
        const bool counted = !(v == t.root() && t.virtual_root());
        if (t.dots(v) == Dots::One) {
            ++next;
            return;
        }
        const int open = counted ? next++ : 0;
        for (VertexId c : t.children(v))
            visit(c);
        if (counted)
            arcs.push_back({open, next++});
    };
    visit(t.root());
    return SecondaryStructure(next - 1, std::move(arcs));
}

} // namespace rnacd
