#include "iwknot/fox.hpp"

#include <cctype>

namespace iwknot {

GroupWord GroupWord::reduced(const std::vector<Letter>& ls) {
    GroupWord w;
    for (const Letter& l : ls) {
        if (!w.letters.empty() && w.letters.back().gen == l.gen && w.letters.back().exp == -l.exp)
            w.letters.pop_back();
        else
            w.letters.push_back(l);
    }
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, -it->exp});
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    std::vector<Letter> ls = letters;
    ls.insert(ls.end(), o.letters.begin(), o.letters.end());
    return reduced(ls);
}

GroupWord GroupWord::pow(long k) const {
    GroupWord base = k < 0 ? inverse() : *this;
    GroupWord r;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
    return r;
}

std::string GroupWord::str(const std::vector<std::string>& gens) const {
    if (letters.empty()) return "1";
    std::string out;
    for (const Letter& l : letters) {
        if (!out.empty()) out += ' ';
        out += gens.at(l.gen);
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

namespace {

int find_gen(const std::vector<std::string>& gens, std::string_view name) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == name) return static_cast<int>(i);
    return -1;
}

void push_power(std::vector<Letter>& out, int g, long e) {
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out.push_back({g, e < 0 ? -1 : 1});
}

} // namespace

GroupWord parse_word(std::string_view s, const std::vector<std::string>& gens) {
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '*') ++j;
        std::string_view tok = s.substr(i, j - i);
        i = j;
        if (tok == "1") continue;
        auto caret = tok.find('^');
        if (caret != std::string_view::npos) {
            std::string_view name = tok.substr(0, caret);
            std::string_view ex = tok.substr(caret + 1);
            if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
            int g = find_gen(gens, name);
            if (g < 0) fail(ErrorKind::UnknownGenerator, std::string(name));
            long e = 0;
            try {
                std::size_t used = 0;
                e = std::stol(std::string(ex), &used);
                if (used != ex.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                fail(ErrorKind::SyntaxError, "bad exponent in '" + std::string(tok) + "'");
            }
            push_power(out, g, e);
            continue;
        }
        int g = find_gen(gens, tok);
        if (g >= 0) {
            out.push_back({g, 1});
            continue;
        }
        // compact form: one character per letter, upper case inverts
        for (char ch : tok) {
            if (!std::isalpha(static_cast<unsigned char>(ch)))
                fail(ErrorKind::SyntaxError, "unexpected '" + std::string(1, ch) + "' in '" + std::string(tok) + "'");
            std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
            std::string exact(1, ch);
            int gi = find_gen(gens, exact);
            if (gi >= 0) {
                out.push_back({gi, 1});
            } else if (std::isupper(static_cast<unsigned char>(ch)) && (gi = find_gen(gens, lower)) >= 0) {
                out.push_back({gi, -1});
            } else {
                fail(ErrorKind::UnknownGenerator, exact);
            }
        }
    }
    return GroupWord::reduced(out);
}

FoxElement fox_derivative(const GroupWord& w, int g) {
    FoxElement out;
    auto add = [&](const GroupWord& u, long c) {
        Integer& v = out[u];
        v += c;
        if (v == 0) out.erase(u);
    };
    GroupWord prefix;
    for (const Letter& l : w.letters) {
        GroupWord next = prefix * GroupWord{{l}};
        if (l.gen == g) {
            if (l.exp > 0)
                add(prefix, 1);
            else
                add(next, -1);
        }
        prefix = std::move(next);
    }
    return out;
}

int Presentation::index(const std::string& name) const {
    int g = find_gen(generators, name);
    if (g < 0) fail(ErrorKind::UnknownGenerator, name);
    return g;
}

long Presentation::alpha(const GroupWord& w) const {
    long a = 0;
    for (const Letter& l : w.letters) a += l.exp * abelianization.at(l.gen);
    return a;
}

void Presentation::validate() const {
    if (abelianization.size() != generators.size())
        fail(ErrorKind::InvalidArgument, "abelianization must list every generator");
    for (const auto& r : relators) {
        for (const Letter& l : r.letters)
            if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
                fail(ErrorKind::UnknownGenerator, "relator letter out of range");
        if (alpha(r) != 0) fail(ErrorKind::PrecondFailed, "abelianization does not kill " + r.str(generators));
    }
    if (deficiency() != 1)
        fail(ErrorKind::DeficiencyMismatch, "deficiency " + std::to_string(deficiency()) + ", expected 1");
}

Presentation twist_knot_presentation(long n) {
    Presentation P;
    P.generators = {"a", "b"};
    P.abelianization = {1, 1};
    GroupWord a{{{0, 1}}}, b{{{1, 1}}};
    GroupWord w = a * b.inverse() * a.inverse() * b;
    GroupWord wn = w.pow(n);
    P.relators = {a * wn * b.inverse() * wn.inverse()};
    return P;
}

Presentation trefoil_presentation() {
    Presentation P;
    P.generators = {"a", "b"};
    P.abelianization = {1, 1};
    P.relators = {parse_word("a b a b^-1 a^-1 b^-1", P.generators)};
    return P;
}

} // namespace iwknot
