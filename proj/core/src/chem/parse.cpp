#include <cctype>
#include <map>
#include <optional>
#include <string>

#include "polyflam/chem/smiles.hpp"
#include "polyflam/common/error.hpp"

namespace polyflam::chem {

namespace {

bool is_organic_subset(const std::string& element) {
    return element == "B" || element == "C" || element == "N" || element == "O" ||
           element == "P" || element == "S" || element == "F" || element == "Cl" ||
           element == "Br" || element == "I";
}

bool is_aromatic_element(const std::string& element) {
    return element == "B" || element == "C" || element == "N" || element == "O" ||
           element == "P" || element == "S";
}

struct RingOpening {
    int atom;
    std::optional<BondOrder> order;
};

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

    MolecularGraph run() {
        if (text_.empty()) throw ParseError("empty SMILES string");
        while (pos_ < text_.size()) {
            step();
        }
        if (!branch_stack_.empty()) throw UnbalancedBranch("unmatched '(' in SMILES");
        if (!open_rings_.empty()) {
            throw UnclosedRing("ring bond " + std::to_string(open_rings_.begin()->first) +
                               " never closed");
        }
        if (pending_order_) throw ParseError("dangling bond symbol at end of SMILES");
        if (graph_.atoms.empty()) throw ParseError("SMILES contains no atoms");
        if (opts_.strict_valence) check_valences(graph_);
        return std::move(graph_);
    }

private:
    void step() {
        const char c = text_[pos_];
        if (c == '(') {
            if (prev_atom_ < 0) throw ParseError("branch opened before any atom");
            branch_stack_.push_back(prev_atom_);
            ++pos_;
        } else if (c == ')') {
            if (branch_stack_.empty()) throw UnbalancedBranch("unmatched ')' in SMILES");
            if (pending_order_) throw ParseError("bond symbol before ')'");
            prev_atom_ = branch_stack_.back();
            branch_stack_.pop_back();
            ++pos_;
        } else if (c == '.') {
            if (pending_order_) throw ParseError("bond symbol before '.'");
            prev_atom_ = -1;
            ++pos_;
        } else if (c == '-') {
            set_pending(BondOrder::Single);
        } else if (c == '=') {
            set_pending(BondOrder::Double);
        } else if (c == '#') {
            set_pending(BondOrder::Triple);
        } else if (c == ':') {
            set_pending(BondOrder::Aromatic);
        } else if (c == '/' || c == '\\') {
            throw ParseError("stereo bond symbols are not supported");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            ring_closure(c - '0');
            ++pos_;
        } else if (c == '%') {
            if (pos_ + 2 >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
                throw ParseError("'%' must be followed by two digits");
            }
            ring_closure((text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0'));
            pos_ += 3;
        } else if (c == '[') {
            bracket_atom();
        } else if (c == '*') {
            add_atom(Atom{"*", 0, 0, false});
            ++pos_;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            subset_atom();
        } else {
            throw ParseError(std::string("unexpected character '") + c + "' in SMILES");
        }
    }

    void set_pending(BondOrder order) {
        if (prev_atom_ < 0) throw ParseError("bond symbol with no preceding atom");
        if (pending_order_) throw ParseError("two consecutive bond symbols");
        pending_order_ = order;
        ++pos_;
    }

    void subset_atom() {
        const char c = text_[pos_];
        std::string element;
        bool aromatic = false;
        if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l') {
            element = "Cl";
            pos_ += 2;
        } else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r') {
            element = "Br";
            pos_ += 2;
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            element = std::string(1, c);
            ++pos_;
        } else {
            // lowercase: aromatic organic subset
            element = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            aromatic = true;
            ++pos_;
        }
        if (!is_organic_subset(element)) {
            throw UnknownAtom("unknown atom symbol '" + std::string(1, c) + "'");
        }
        if (aromatic && !is_aromatic_element(element)) {
            throw UnknownAtom("element '" + element + "' cannot be aromatic");
        }
        add_atom(Atom{element, 0, 0, aromatic});
    }

    void bracket_atom() {
        const std::size_t open = pos_;
        ++pos_;  // consume '['
        if (pos_ >= text_.size()) throw ParseError("unterminated bracket atom");
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError("isotope labels are not supported");
        }

        Atom atom;
        const char c = text_[pos_];
        if (c == '*') {
            atom.element = "*";
            ++pos_;
        } else if (std::islower(static_cast<unsigned char>(c))) {
            atom.element = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            atom.aromatic = true;
            ++pos_;
            if (!is_aromatic_element(atom.element)) {
                throw UnknownAtom("element '" + atom.element + "' cannot be aromatic");
            }
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            atom.element = std::string(1, c);
            ++pos_;
            if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])) &&
                text_[pos_] != 'h') {
                atom.element += text_[pos_];
                ++pos_;
            }
        } else {
            throw ParseError("expected element symbol in bracket atom");
        }
        if (atom.element != "*" && max_valence(atom.element) < 0) {
            throw UnknownAtom("unknown element '" + atom.element + "' in bracket atom");
        }

        if (pos_ < text_.size() && (text_[pos_] == '@')) {
            throw ParseError("stereochemistry is not supported");
        }

        if (pos_ < text_.size() && text_[pos_] == 'H') {
            ++pos_;
            atom.explicit_h = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                atom.explicit_h = text_[pos_] - '0';
                ++pos_;
            }
        }

        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            const int sign = text_[pos_] == '+' ? 1 : -1;
            const char sign_char = text_[pos_];
            ++pos_;
            int magnitude = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                magnitude = text_[pos_] - '0';
                ++pos_;
            } else {
                while (pos_ < text_.size() && text_[pos_] == sign_char) {
                    ++magnitude;
                    ++pos_;
                }
            }
            atom.charge = sign * magnitude;
        }

        if (pos_ >= text_.size() || text_[pos_] != ']') {
            throw ParseError("unterminated bracket atom starting at position " +
                             std::to_string(open));
        }
        ++pos_;
        add_atom(std::move(atom));
    }

    void add_atom(Atom atom) {
        const bool aromatic = atom.aromatic;
        const int idx = graph_.add_atom(std::move(atom));
        if (prev_atom_ >= 0) {
            BondOrder order;
            if (pending_order_) {
                order = *pending_order_;
            } else if (aromatic && graph_.atoms[static_cast<std::size_t>(prev_atom_)].aromatic) {
                order = BondOrder::Aromatic;
            } else {
                order = BondOrder::Single;
            }
            if (!graph_.add_bond(prev_atom_, idx, order)) {
                throw ParseError("duplicate bond between atoms " + std::to_string(prev_atom_) +
                                 " and " + std::to_string(idx));
            }
        }
        pending_order_.reset();
        prev_atom_ = idx;
    }

    void ring_closure(int number) {
        if (prev_atom_ < 0) throw ParseError("ring closure digit with no preceding atom");
        const auto it = open_rings_.find(number);
        if (it == open_rings_.end()) {
            open_rings_[number] = RingOpening{prev_atom_, pending_order_};
            pending_order_.reset();
            return;
        }
        const RingOpening opening = it->second;
        open_rings_.erase(it);
        if (opening.atom == prev_atom_) {
            throw ParseError("ring closure " + std::to_string(number) + " bonds an atom to itself");
        }
        BondOrder order;
        if (opening.order && pending_order_) {
            if (*opening.order != *pending_order_) {
                throw ParseError("conflicting bond orders on ring closure " + std::to_string(number));
            }
            order = *opening.order;
        } else if (opening.order) {
            order = *opening.order;
        } else if (pending_order_) {
            order = *pending_order_;
        } else if (graph_.atoms[static_cast<std::size_t>(opening.atom)].aromatic &&
                   graph_.atoms[static_cast<std::size_t>(prev_atom_)].aromatic) {
            order = BondOrder::Aromatic;
        } else {
            order = BondOrder::Single;
        }
        if (!graph_.add_bond(opening.atom, prev_atom_, order)) {
            throw ParseError("ring closure " + std::to_string(number) +
                             " duplicates an existing bond");
        }
        pending_order_.reset();
    }

    std::string_view text_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
    MolecularGraph graph_;
    int prev_atom_ = -1;
    std::optional<BondOrder> pending_order_;
    std::vector<int> branch_stack_;
    std::map<int, RingOpening> open_rings_;
};

}  // namespace

MolecularGraph parse_smiles(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).run();
}

void check_valences(const MolecularGraph& g) {
    for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        const Atom& atom = g.atoms[i];
        if (atom.is_wildcard()) {
            if (g.degree(static_cast<int>(i)) != 1) {
                throw ValenceViolation("wildcard atom " + std::to_string(i) +
                                       " must carry exactly one bond");
            }
            continue;
        }
        const int limit = max_valence(atom.element);
        if (limit < 0) continue;
        const int total = valence_sum(g, static_cast<int>(i));
        if (total > limit) {
            throw ValenceViolation("atom " + std::to_string(i) + " (" + atom.element +
                                   ") has valence " + std::to_string(total) + " > " +
                                   std::to_string(limit));
        }
    }
}

}  // namespace polyflam::chem
