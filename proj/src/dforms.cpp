#include "ternalg/dforms.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "ternalg/rewrite.hpp"

namespace ternalg {

PolyFn PolyFn::constant(int nvars, Cyclo c) {
    PolyFn p(nvars);
    p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return p;
}

PolyFn PolyFn::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    PolyFn p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    p.add_term(std::move(e), Cyclo(1));
    return p;
}

void PolyFn::add_term(std::vector<int> exps, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(exps), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyFn& PolyFn::operator+=(const PolyFn& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyFn& PolyFn::operator-=(const PolyFn& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyFn operator*(const PolyFn& a, const PolyFn& b) {
    PolyFn p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            p.add_term(std::move(e), ca * cb);
        }
    return p;
}

PolyFn PolyFn::scaled(const Cyclo& c) const {
    PolyFn p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

PolyFn PolyFn::derivative(int i) const {
    if (i < 1 || i > nvars_) throw std::invalid_argument("derivative index out of range");
    PolyFn p(nvars_);
    for (const auto& [e, c] : terms_) {
        int power = e[static_cast<size_t>(i - 1)];
        if (power == 0) continue;
        std::vector<int> de = e;
        de[static_cast<size_t>(i - 1)] = power - 1;
        p.add_term(std::move(de), c * Cyclo(power));
    }
    return p;
}

std::string PolyFn::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        std::string cs = c.str();
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += "(" + cs + ")*" + mono;
    }
    return out;
}

PolyFn PolyFn::parse(int nvars, std::string_view text) {
    // term := factor ('*' factor)*, factor := rational | x<i>['^' k]
    PolyFn out(nvars);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) {
            if (first) break;
            throw std::invalid_argument("polynomial parse error: dangling sign");
        }
        Cyclo sign(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = Cyclo(-1);
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("polynomial parse error: expected + or -");
        }
        first = false;
        Cyclo coeff = sign;
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                int idx = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    idx = idx * 10 + (text[pos++] - '0');
                if (idx < 1 || idx > nvars)
                    throw std::invalid_argument("polynomial variable out of range");
                int power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    power = 0;
                    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                        throw std::invalid_argument("polynomial parse error: bad exponent");
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        power = power * 10 + (text[pos++] - '0');
                }
                exps[static_cast<size_t>(idx - 1)] += power;
            } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long num = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    num = num * 10 + (text[pos++] - '0');
                skip();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    skip();
                    long den = 0;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        den = den * 10 + (text[pos++] - '0');
                    if (den == 0) throw std::invalid_argument("polynomial parse error: zero denominator");
                    Rational r(num, den);
                    r.canonicalize();
                    coeff *= Cyclo(r);
                } else {
                    coeff *= Cyclo(num);
                }
            } else {
                throw std::invalid_argument("polynomial parse error: expected factor");
            }
            skip();
            expect_factor = pos < text.size() && text[pos] == '*';
            if (expect_factor) ++pos;
        }
        out.add_term(std::move(exps), coeff);
        skip();
        if (pos >= text.size()) break;
    }
    return out;
}

PolyFn PolyFn::random(int nvars, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(2, 6);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    PolyFn p(nvars);
    int count = term_count(rng);
    for (int t = 0; t < count; ++t) {
        std::vector<int> exps(static_cast<size_t>(nvars), 0);
        int total = deg(rng);
        std::uniform_int_distribution<int> var(0, nvars - 1);
        for (int k = 0; k < total; ++k) ++exps[static_cast<size_t>(var(rng))];
        int nv = num(rng);
        if (nv == 0) nv = 1;
        Rational r(nv, den(rng));
        r.canonicalize();
        p.add_term(std::move(exps), Cyclo(r));
    }
    return p;
}

GradedForm::GradedForm(int nvars) : nvars_(nvars) {}

GradedForm GradedForm::function(PolyFn f) {
    GradedForm g(f.nvars());
    g.add(Word{}, f);
    return g;
}

void GradedForm::add(const Word& w, const PolyFn& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedForm& GradedForm::operator+=(const GradedForm& o) {
    for (const auto& [w, f] : o.terms_) add(w, f);
    return *this;
}

std::string GradedForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, f] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + f.str() + ")";
        if (!w.empty()) out += " " + w.str();
    }
    return out;
}

int form_grade(const Word& w) {
    int g = 0;
    for (const auto& gen : w.gens) g += (gen.kind == Kind::D2x) ? 2 : 1;
    return g % 3;
}

GradedForm normalize_form(const GradedForm& form) {
    Presentation pres = Presentation::dforms(form.nvars() > 0 ? form.nvars() : 1);
    GradedForm out(form.nvars());
    for (const auto& [w, f] : form.terms()) {
        if (w.empty()) {
            out.add(w, f);
            continue;
        }
        Poly nf = normalize(Term{Cyclo(1), w}, pres);
        for (const auto& t : nf.terms()) out.add(t.word, f.scaled(t.coeff));
    }
    return out;
}

GradedForm d(const GradedForm& form) {
    const int m = form.nvars();
    GradedForm out(m);
    for (const auto& [w, f] : form.terms()) {
        // d f = (d_i f) dx^i in front of the word: f has grade 0.
        for (int i = 1; i <= m; ++i) {
            PolyFn df = f.derivative(i);
            if (df.is_zero()) continue;
            Word extended{{Generator{Kind::Dx, i}}};
            extended.gens.insert(extended.gens.end(), w.gens.begin(), w.gens.end());
            out.add(extended, df);
        }
        // f times d(word): replace each dx^i by d2x^i with the phase
        // j^{grade of the prefix}; d kills d2x generators.
        int prefix_grade = 0;
        for (size_t k = 0; k < w.size(); ++k) {
            const Generator& g = w.gens[k];
            if (g.kind == Kind::Dx) {
                Word replaced = w;
                replaced.gens[k] = Generator{Kind::D2x, g.index};
                out.add(replaced, f.scaled(Cyclo::j().pow(prefix_grade)));
            }
            prefix_grade = (prefix_grade + ((g.kind == Kind::D2x) ? 2 : 1)) % 3;
        }
    }
    return normalize_form(out);
}

bool d3_check(const PolyFn& f) {
    return d(d(d(GradedForm::function(f)))).is_zero();
}

}  // namespace ternalg
