#include "ternalg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ternalg {

std::string_view kind_token(Kind k) {
    switch (k) {
        case Kind::Xi: return "x";
        case Kind::XiBar: return "xb";
        case Kind::Theta: return "t";
        case Kind::ThetaBar: return "tb";
        case Kind::Dx: return "dx";
        case Kind::D2x: return "ddx";
    }
    throw std::invalid_argument("unknown generator kind");
}

std::string to_token(const Generator& g) {
    return std::string(kind_token(g.kind)) + std::to_string(g.index);
}

Generator generator_from_token(std::string_view tok) {
    // Longest prefix wins: ddx before dx, tb before t, xb before x.
    static const std::pair<std::string_view, Kind> prefixes[] = {
        {"ddx", Kind::D2x}, {"dx", Kind::Dx},   {"tb", Kind::ThetaBar},
        {"xb", Kind::XiBar}, {"t", Kind::Theta}, {"x", Kind::Xi},
    };
    for (const auto& [p, kind] : prefixes) {
        if (tok.size() <= p.size() || tok.substr(0, p.size()) != p) continue;
        std::string_view digits = tok.substr(p.size());
        int idx = 0;
        for (char c : digits) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad generator token: " + std::string(tok));
            idx = idx * 10 + (c - '0');
        }
        if (idx < 1) throw std::invalid_argument("generator index must be >= 1: " + std::string(tok));
        return Generator{kind, idx};
    }
    throw std::invalid_argument("unknown generator token: " + std::string(tok));
}

Word Word::concat(const Word& o) const {
    Word r = *this;
    r.gens.insert(r.gens.end(), o.gens.begin(), o.gens.end());
    return r;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (gens.size() != o.gens.size())
        return gens.size() <=> o.gens.size();
    for (size_t k = 0; k < gens.size(); ++k) {
        if (auto c = gens[k] <=> o.gens[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Word::str() const {
    if (gens.empty()) return "1";
    std::string out;
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ' ';
        out += to_token(gens[k]);
    }
    return out;
}

Word Word::parse(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        if (tok == "1" && w.empty()) continue;  // allow "1" for the unit
        w.gens.push_back(generator_from_token(tok));
    }
    return w;
}

Poly::Poly(Term t) {
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.word < b.word; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().word == t.word) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
        if (b == o.terms_.size() || (a < terms_.size() && terms_[a].word < o.terms_[b].word)) {
            merged.push_back(terms_[a++]);
        } else if (a == terms_.size() || o.terms_[b].word < terms_[a].word) {
            merged.push_back(o.terms_[b++]);
        } else {
            Cyclo c = terms_[a].coeff + o.terms_[b].coeff;
            if (!c.is_zero()) merged.push_back(Term{std::move(c), terms_[a].word});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += o.scaled(Cyclo(-1)); }

Poly Poly::scaled(const Cyclo& c) const {
    if (c.is_zero()) return Poly();
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.coeff * c, t.word});
    return p;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        std::string c = terms_[k].coeff.str();
        if (terms_[k].word.empty()) {
            out += c;
        } else if (c == "1") {
            out += terms_[k].word.str();
        } else {
            out += "(" + c + ") " + terms_[k].word.str();
        }
    }
    return out;
}

}  // namespace ternalg
