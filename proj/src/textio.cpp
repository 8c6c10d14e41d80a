#include "bottchern/textio.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "bottchern/catalog.hpp"

namespace bc {

std::vector<std::string> default_generator_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("phi" + std::to_string(i));
    return names;
}

namespace {

struct Token {
    enum Kind { number, ident, symbol, end } kind = end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& s, int line0 = 1) : s_(s), line_(line0) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_symbol(char c) {
        if (tok_.kind == Token::symbol && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect_symbol(char c) {
        if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(tok_.line, tok_.col, msg + " (got '" +
                                                  (tok_.kind == Token::end ? "<end>" : tok_.text) +
                                                  "')");
    }

  private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace((unsigned char)c)) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::end;
            tok_.text.clear();
            return;
        }
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::number;
            tok_.text = s_.substr(start, pos_ - start);
        } else if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::ident;
            tok_.text = s_.substr(start, pos_ - start);
        } else {
            tok_.kind = Token::symbol;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

Rat parse_rat_tokens(Lexer& lx, bool negative) {
    if (lx.peek().kind != Token::number) lx.fail("expected a rational number");
    Int num(lx.take().text);
    Int den(1);
    if (lx.accept_symbol('/')) {
        if (lx.peek().kind != Token::number) lx.fail("expected a denominator");
        den = Int(lx.take().text);
        if (den == 0) lx.fail("zero denominator");
    }
    if (negative) num = -num;
    return Rat(num, den);
}

bool peek_is_i(const Lexer& lx) { return lx.peek().kind == Token::ident && lx.peek().text == "i"; }

// One <rat>[i] component, optionally a bare [-]i.
GaussQ parse_component(Lexer& lx, bool negative) {
    if (peek_is_i(lx)) {
        lx.take();
        return {Rat(0), Rat(negative ? -1 : 1)};
    }
    Rat r = parse_rat_tokens(lx, negative);
    if (peek_is_i(lx)) {
        lx.take();
        return {Rat(0), r};
    }
    return {r, Rat(0)};
}

GaussQ parse_gaussian_tokens(Lexer& lx) {
    bool neg = lx.accept_symbol('-');
    if (!neg) lx.accept_symbol('+');
    GaussQ z = parse_component(lx, neg);
    if (lx.peek().kind == Token::symbol && (lx.peek().text == "+" || lx.peek().text == "-")) {
        bool neg2 = lx.take().text == "-";
        GaussQ w = parse_component(lx, neg2);
        if (!z.is_real() || w.is_real()) lx.fail("expected <rat> +/- <rat>i");
        z += w;
    }
    return z;
}

}  // namespace

GaussQ parse_gaussian(const std::string& text) {
    Lexer lx(text);
    GaussQ z = parse_gaussian_tokens(lx);
    if (lx.peek().kind != Token::end) lx.fail("trailing input after coefficient");
    return z;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    auto name = [&](int k) {
        return k <= (int)names.size() ? names[k - 1] : "phi" + std::to_string(k);
    };
    std::string s;
    if (!m.weight.is_zero()) s += "e" + to_string(m.weight);
    std::string word;
    for (int k : m.holo_indices()) {
        if (!word.empty()) word += "^";
        word += name(k);
    }
    for (int k : m.anti_indices()) {
        if (!word.empty()) word += "^";
        word += name(k) + "~";
    }
    if (word.empty()) {
        if (s.empty()) return "1";
        return s;
    }
    return s.empty() ? word : s + " " + word;
}

std::string to_string(const Form& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        GaussQ coeff = c;
        std::string sep = out.empty() ? "" : " + ";
        // Fold a plain negative sign into the separator.
        bool negative = (coeff.im == Rat(0) && coeff.re < Rat(0)) ||
                        (coeff.re == Rat(0) && coeff.im < Rat(0));
        if (negative) {
            sep = out.empty() ? "-" : " - ";
            coeff = -coeff;
        }
        std::string cs;
        if (!coeff.is_real() && coeff.re != Rat(0))
            cs = "(" + to_string(coeff) + ")";
        else if (coeff != GaussQ(1))
            cs = to_string(coeff);
        std::string word = to_string(m, names);
        if (word == "1" && !cs.empty()) word.clear();
        if (!cs.empty() && !word.empty()) cs += " ";
        out += sep + cs + word;
    }
    return out;
}

namespace {

std::optional<int> lookup_generator(const std::string& name,
                                    const std::vector<std::string>& names) {
    for (int i = 0; i < (int)names.size(); ++i)
        if (names[i] == name) return i + 1;
    return std::nullopt;
}

Form parse_form_tokens(Lexer& lx, const std::vector<std::string>& names) {
    Form out;
    bool first = true;
    for (;;) {
        bool negative = false;
        if (lx.accept_symbol('-'))
            negative = true;
        else if (!first)
            lx.expect_symbol('+');
        first = false;

        GaussQ coeff(1);
        bool have_coeff = false;
        if (lx.accept_symbol('(')) {
            coeff = parse_gaussian_tokens(lx);
            lx.expect_symbol(')');
            have_coeff = true;
        } else if (lx.peek().kind == Token::number || peek_is_i(lx)) {
            coeff = parse_component(lx, false);
            have_coeff = true;
        }
        if (negative) coeff = -coeff;

        Weight w{};
        if (lx.peek().kind == Token::ident && lx.peek().text == "e") {
            lx.take();
            lx.expect_symbol('(');
            bool na = lx.accept_symbol('-');
            if (lx.peek().kind != Token::number) lx.fail("expected a weight exponent");
            int a = std::stoi(lx.take().text) * (na ? -1 : 1);
            lx.expect_symbol(',');
            bool nb = lx.accept_symbol('-');
            if (lx.peek().kind != Token::number) lx.fail("expected a weight exponent");
            int b = std::stoi(lx.take().text) * (nb ? -1 : 1);
            lx.expect_symbol(')');
            w = {a, b};
        }

        Form term(Monomial::make({}, {}, w), coeff);
        bool have_word = false;
        while (lx.peek().kind == Token::ident) {
            Token t = lx.take();
            auto ref = lookup_generator(t.text, names);
            // Whitespace-insensitive source can glue the imaginary unit onto
            // a generator name, as in "iphi3".
            if (!ref && t.text.size() > 1 && t.text[0] == 'i') {
                if (auto glued = lookup_generator(t.text.substr(1), names)) {
                    term *= GaussQ::i();
                    ref = glued;
                }
            }
            if (!ref) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
            bool anti = false;
            if (lx.peek().kind == Token::symbol && lx.peek().text == "~") {
                lx.take();
                anti = true;
            }
            Monomial g;
            if (anti)
                g.anti = 1u << (*ref - 1);
            else
                g.holo = 1u << (*ref - 1);
            term = wedge(term, Form(g));
            have_word = true;
            if (lx.peek().kind == Token::symbol && lx.peek().text == "^") {
                lx.take();
                if (lx.peek().kind != Token::ident) lx.fail("expected a generator after '^'");
                continue;
            }
            break;
        }
        if (!have_word && !have_coeff && w.is_zero()) lx.fail("expected a term");
        out += term;

        if (lx.peek().kind == Token::end) break;
        if (lx.peek().kind != Token::symbol || (lx.peek().text != "+" && lx.peek().text != "-"))
            break;
    }
    return out;
}

}  // namespace

Form parse_form(const std::string& text, const std::vector<std::string>& generator_names) {
    Lexer lx(text);
    if (lx.peek().kind == Token::number && lx.peek().text == "0") {
        Lexer probe(text);
        probe.take();
        if (probe.peek().kind == Token::end) return {};
    }
    Form f = parse_form_tokens(lx, generator_names);
    if (lx.peek().kind != Token::end) lx.fail("trailing input after form");
    return f;
}

// ---------------------------------------------------------------------------
// Model documents
// ---------------------------------------------------------------------------

ModelDocument parse_model(const std::string& text) {
    std::string name = "model";
    int n = -1;
    WeightWindow window{};
    std::vector<std::string> gen_names;
    std::vector<std::optional<Weight>> gen_weights;
    std::map<std::string, std::string> differentials;  // generator -> form text (with line no)
    std::map<std::string, int> diff_lines;
    std::vector<std::tuple<int, int, GaussQ>> gram_entries;
    bool metric_identity = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto strip = [](std::string s) {
        auto h = s.find('#');
        if (h != std::string::npos) s.erase(h);
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string keyword;
        ls >> keyword;
        auto rest_of = [&]() {
            std::string rest;
            std::getline(ls, rest);
            std::size_t b = rest.find_first_not_of(" \t");
            return b == std::string::npos ? std::string() : rest.substr(b);
        };
        if (keyword == "model") {
            if (!(ls >> name)) throw ParseError(lineno, 1, "expected a model name");
        } else if (keyword == "dim") {
            if (!(ls >> n) || n < 0) throw ParseError(lineno, 1, "expected a dimension");
        } else if (keyword == "window") {
            // window amin..amax x bmin..bmax
            std::string window_text = rest_of();
            Lexer lx(window_text, lineno);
            auto read_int = [&]() {
                bool neg = lx.accept_symbol('-');
                if (lx.peek().kind != Token::number) lx.fail("expected an integer");
                return std::stoi(lx.take().text) * (neg ? -1 : 1);
            };
            window.a_min = read_int();
            lx.expect_symbol('.');
            lx.expect_symbol('.');
            window.a_max = read_int();
            if (!(lx.peek().kind == Token::ident && lx.peek().text == "x"))
                lx.fail("expected 'x'");
            lx.take();
            window.b_min = read_int();
            lx.expect_symbol('.');
            lx.expect_symbol('.');
            window.b_max = read_int();
        } else if (keyword == "gen") {
            std::string gname;
            if (!(ls >> gname)) throw ParseError(lineno, 1, "expected a generator name");
            gen_names.push_back(gname);
            gen_weights.push_back(std::nullopt);
            std::string maybe;
            if (ls >> maybe) {
                if (maybe != "weight") throw ParseError(lineno, 1, "expected 'weight (a,b)'");
                std::string wtext = rest_of();
                Lexer lx(wtext, lineno);
                lx.expect_symbol('(');
                bool na = lx.accept_symbol('-');
                if (lx.peek().kind != Token::number) lx.fail("expected an exponent");
                int a = std::stoi(lx.take().text) * (na ? -1 : 1);
                lx.expect_symbol(',');
                bool nb = lx.accept_symbol('-');
                if (lx.peek().kind != Token::number) lx.fail("expected an exponent");
                int b = std::stoi(lx.take().text) * (nb ? -1 : 1);
                lx.expect_symbol(')');
                gen_weights.back() = Weight{a, b};
            }
        } else if (keyword == "d") {
            std::string gname;
            if (!(ls >> gname)) throw ParseError(lineno, 1, "expected a generator name after 'd'");
            std::string eq;
            ls >> eq;
            if (eq != "=") throw ParseError(lineno, 1, "expected '='");
            differentials[gname] = rest_of();
            diff_lines[gname] = lineno;
        } else if (keyword == "metric") {
            std::string kind;
            ls >> kind;
            if (kind != "identity") throw ParseError(lineno, 1, "expected 'metric identity'");
            metric_identity = true;
        } else if (keyword == "gram") {
            int j, k;
            std::string eq;
            if (!(ls >> j >> k >> eq) || eq != "=")
                throw ParseError(lineno, 1, "expected 'gram j k = <coefficient>'");
            gram_entries.emplace_back(j, k, parse_gaussian(rest_of()));
        } else {
            throw ParseError(lineno, 1, "unknown keyword '" + keyword + "'");
        }
    }

    if (n < 0) throw ParseError(lineno, 1, "missing 'dim'");
    if (gen_names.empty()) {
        gen_names = default_generator_names(n);
        gen_weights.assign(n, std::nullopt);
    }
    if ((int)gen_names.size() != n)
        throw ParseError(lineno, 1, "expected " + std::to_string(n) + " generators, found " +
                                        std::to_string(gen_names.size()));

    std::vector<Form> d(n);
    for (const auto& [gname, ftext] : differentials) {
        auto it = std::find(gen_names.begin(), gen_names.end(), gname);
        if (it == gen_names.end())
            throw ParseError(diff_lines[gname], 1, "unknown generator '" + gname + "'");
        try {
            d[it - gen_names.begin()] = parse_form(ftext, gen_names);
        } catch (const ParseError& e) {
            throw ParseError(diff_lines[gname], e.column, e.what());
        }
    }

    HermitianMetric metric = HermitianMetric::identity(n);
    (void)metric_identity;
    for (const auto& [j, k, v] : gram_entries) {
        if (j < 1 || j > n || k < 1 || k > n)
            throw ParseError(lineno, 1, "gram index out of range");
        metric.gram[j - 1][k - 1] = v;
        metric.gram[k - 1][j - 1] = v.conj();
    }

    ModelDocument doc{Model(name, n, std::move(d), window, std::move(metric)), gen_names,
                      gen_weights};
    ValidationReport report = doc.model.validate();
    if (!report.ok()) throw ValidationFailure(std::move(report));
    return doc;
}

std::string emit_model(const ModelDocument& doc) {
    const Model& m = doc.model;
    std::ostringstream out;
    out << "model " << m.name() << "\n";
    out << "dim " << m.dim() << "\n";
    const WeightWindow& w = m.window();
    if (!w.trivial())
        out << "window " << w.a_min << ".." << w.a_max << " x " << w.b_min << ".." << w.b_max
            << "\n";
    for (int k = 1; k <= m.dim(); ++k) {
        out << "gen " << doc.generator_names[k - 1];
        if (k <= (int)doc.generator_weights.size() && doc.generator_weights[k - 1])
            out << " weight " << to_string(*doc.generator_weights[k - 1]);
        out << "\n";
    }
    for (int k = 1; k <= m.dim(); ++k)
        out << "d " << doc.generator_names[k - 1] << " = "
            << to_string(m.d_generator(k), doc.generator_names) << "\n";
    if (m.metric().is_identity()) {
        out << "metric identity\n";
    } else {
        for (int j = 1; j <= m.dim(); ++j)
            for (int k = j; k <= m.dim(); ++k)
                if (!(m.metric().gram[j - 1][k - 1] == (j == k ? GaussQ(1) : GaussQ(0))))
                    out << "gram " << j << " " << k << " = "
                        << to_string(m.metric().gram[j - 1][k - 1]) << "\n";
    }
    return out.str();
}

}  // namespace bc

namespace bc::catalog {

std::string document_text(const std::string& name) {
    const CatalogEntry& entry = builtin(name);
    ModelDocument doc{entry.model, default_generator_names(entry.model.dim()), {}};
    doc.generator_weights.assign(entry.model.dim(), std::nullopt);
    if (name == "nakamura_a" || name == "nakamura_b") {
        // Coordinate meaning of the unitary coframe, for display only.
        doc.generator_weights = {Weight{0, 0}, Weight{-1, 0}, Weight{1, 0}};
    }
    return emit_model(doc);
}

}  // namespace bc::catalog
