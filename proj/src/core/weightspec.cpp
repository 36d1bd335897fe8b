#include "core/weightspec.hpp"

#include "core/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace steklov {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct TrigTerm {
    double amp = 0.0;
    int freq = 0;    // 0 = constant
    bool sine = false;
};

double eval_terms(const std::vector<TrigTerm>& terms, double t) {
    double acc = 0.0;
    for (const auto& tm : terms)
        acc += tm.freq == 0 ? tm.amp
                            : tm.amp * (tm.sine ? std::sin(tm.freq * t) : std::cos(tm.freq * t));
    return acc;
}

// Recursive-descent parser for the expression mini-language.
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    // expr := term (('+'|'-') term)*
    // term := number ['*' trig] | trig | 'exp' '(' expr-without-exp ')'
    // trig := ('cos'|'sin') '(' integer '*' 't' ')'
    struct Node {
        std::vector<TrigTerm> poly;
        std::vector<std::vector<TrigTerm>> exps; // each contributes exp(poly)
    };

    Node parse() {
        Node n = parse_expr(true);
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return n;
    }

private:
    Node parse_expr(bool allow_exp) {
        Node out;
        double sign = 1.0;
        skip_ws();
        if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1.0 : 1.0;
        parse_term(out, sign, allow_exp);
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            get();
            parse_term(out, c == '-' ? -1.0 : 1.0, allow_exp);
        }
        return out;
    }

    void parse_term(Node& out, double sign, bool allow_exp) {
        skip_ws();
        const size_t start = pos_;
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            const std::string word = read_word();
            if (word == "exp") {
                if (!allow_exp) fail("nested exp is not supported", start);
                if (sign < 0.0) fail("exp terms cannot be subtracted", start);
                expect('(');
                Node inner = parse_expr(false);
                expect(')');
                out.exps.push_back(std::move(inner.poly));
                return;
            }
            if (word == "cos" || word == "sin") {
                out.poly.push_back(read_trig_args(word == "sin", sign * 1.0));
                return;
            }
            fail("expected a number, cos, sin, or exp", start);
        }
        const double value = read_number();
        skip_ws();
        if (peek() == '*') {
            get();
            skip_ws();
            const size_t wstart = pos_;
            const std::string word = read_word();
            if (word != "cos" && word != "sin")
                fail("expected cos or sin after '*'", wstart);
            out.poly.push_back(read_trig_args(word == "sin", sign * value));
            return;
        }
        out.poly.push_back({sign * value, 0, false});
    }

    TrigTerm read_trig_args(bool sine, double amp) {
        expect('(');
        skip_ws();
        int freq = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const size_t nstart = pos_;
            const double f = read_number();
            freq = static_cast<int>(f);
            if (freq != f || freq < 0) fail("frequency must be a non-negative integer", nstart);
            expect('*');
        }
        skip_ws();
        if (peek() != 't') fail("expected the variable 't'");
        get();
        expect(')');
        return {amp, freq, sine};
    }

    std::string read_word() {
        size_t end = pos_;
        while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
        std::string w = s_.substr(pos_, end - pos_);
        pos_ = end;
        return w;
    }

    double read_number() {
        skip_ws();
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += static_cast<size_t>(end - begin);
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        throw invalid_input("weight spec: " + msg + " at position " + std::to_string(at) +
                            " in \"" + s_ + "\"");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

BoundaryWeight parse_weight(const std::string& spec, int grid_size) {
    if (grid_size < 4) throw invalid_input("parse_weight: grid too small");
    std::error_code ec;
    if (std::filesystem::exists(spec, ec) && std::filesystem::is_regular_file(spec, ec))
        return load_weight_csv(spec, grid_size);

    Parser parser(spec);
    const Parser::Node node = parser.parse();
    std::vector<double> samples(static_cast<size_t>(grid_size));
    for (int j = 0; j < grid_size; ++j) {
        const double t = two_pi * j / grid_size;
        double v = eval_terms(node.poly, t);
        for (const auto& e : node.exps) v += std::exp(eval_terms(e, t));
        samples[static_cast<size_t>(j)] = v;
    }
    return BoundaryWeight::from_samples(std::move(samples));
}

BoundaryWeight load_weight_csv(const std::string& path, int grid_size) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open coefficient file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw invalid_input("empty coefficient file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
    };
    if (strip(line) != "n,re,im")
        throw invalid_input("coefficient file must start with header 'n,re,im': " + path);

    std::vector<std::pair<int, cplx>> rows;
    int n_max = 0;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (strip(line).empty()) continue;
        std::istringstream ss(line);
        std::string fn, fre, fim;
        if (!std::getline(ss, fn, ',') || !std::getline(ss, fre, ',') ||
            !std::getline(ss, fim, ','))
            throw invalid_input("malformed coefficient row at line " + std::to_string(line_no));
        try {
            const int n = std::stoi(strip(fn));
            rows.emplace_back(n, cplx{std::stod(strip(fre)), std::stod(strip(fim))});
            n_max = std::max(n_max, std::abs(n));
        } catch (const std::exception&) {
            throw invalid_input("malformed coefficient row at line " + std::to_string(line_no));
        }
    }
    if (rows.empty()) throw invalid_input("no coefficient rows in " + path);
    if (grid_size < 2 * n_max + 2) grid_size = 2 * n_max + 2;

    FourierSeries series(n_max, grid_size);
    std::vector<bool> seen(static_cast<size_t>(2 * n_max + 1), false);
    for (const auto& [n, c] : rows) {
        series.set_coeff(n, c);
        seen[static_cast<size_t>(n + n_max)] = true;
    }
    for (int n = 1; n <= n_max; ++n) {
        const bool pos = seen[static_cast<size_t>(n + n_max)];
        const bool neg = seen[static_cast<size_t>(-n + n_max)];
        if (pos && !neg) series.set_coeff(-n, std::conj(series.coeff(n)));
        if (neg && !pos) series.set_coeff(n, std::conj(series.coeff(-n)));
    }
    if (!series.is_real_symmetric(1e-10))
        throw invalid_input("coefficients do not describe a real weight: " + path);
    return BoundaryWeight::from_series(series, grid_size);
}

} // namespace steklov
