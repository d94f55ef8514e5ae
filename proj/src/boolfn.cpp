#include "qjunta/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace qjunta {

namespace {

void check_arity(int arity) {
    if (arity < 0 || arity > kMaxTableArity)
        throw std::invalid_argument("arity " + std::to_string(arity) +
                                    " outside [0, " + std::to_string(kMaxTableArity) + "]");
}

void check_var(int arity, int var) {
    if (var < 0 || var >= arity)
        throw std::out_of_range("variable index " + std::to_string(var) +
                                " out of range for arity " + std::to_string(arity));
}

}  // namespace

TruthTable::TruthTable(int arity) : arity_(arity) {
    check_arity(arity);
    bits_.assign(std::size_t{1} << arity, 0);
}

AnfFunction::AnfFunction(int arity) : arity_(arity) { check_arity(arity); }

AnfFunction::AnfFunction(int arity, std::vector<Term> terms) : arity_(arity) {
    check_arity(arity);
    const Term width_mask = arity >= 32 ? ~0u : (1u << arity) - 1;
    for (Term t : terms) {
        if ((t & ~width_mask) != 0)
            throw std::invalid_argument("term mentions a variable beyond the arity");
        toggle_term(t);
    }
}

bool AnfFunction::has_term(Term t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t);
}

void AnfFunction::toggle_term(Term t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, t);
}

bool AnfFunction::eval(std::uint32_t assignment) const {
    if (arity_ < 32 && (assignment >> arity_) != 0)
        throw std::invalid_argument("assignment wider than the function arity");
    int parity = 0;
    for (Term t : terms_)
        parity ^= ((assignment & t) == t) ? 1 : 0;
    return parity != 0;
}

std::string AnfFunction::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " ^ ";
        Term t = terms_[k];
        if (t == 0) {
            out += "1";
            continue;
        }
        for (int j = 0; j < arity_; ++j)
            if (t & (1u << j)) out += "x" + std::to_string(j);
    }
    return out;
}

AnfFunction operator^(const AnfFunction& f, const AnfFunction& h) {
    if (f.arity() != h.arity())
        throw std::invalid_argument("arity mismatch in xor");
    AnfFunction out = f;
    for (Term t : h.terms()) out.toggle_term(t);
    return out;
}

TruthTable to_truth_table(const AnfFunction& f) {
    TruthTable t(f.arity());
    auto& bits = t.bits();
    for (Term term : f.terms()) bits[term] = 1;
    // Subset-XOR butterfly: bits[x] becomes the parity of the ANF
    // coefficients over all submasks of x.
    for (int j = 0; j < f.arity(); ++j) {
        const std::uint32_t step = 1u << j;
        for (std::uint32_t x = 0; x < t.size(); ++x)
            if (x & step) bits[x] ^= bits[x ^ step];
    }
    return t;
}

TruthTable to_truth_table_naive(const AnfFunction& f) {
    TruthTable t(f.arity());
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, f.eval(x));
    return t;
}

AnfFunction from_truth_table(const TruthTable& t) {
    // Same butterfly: over GF(2) the subset transform is an involution.
    std::vector<std::uint8_t> coeff = t.bits();
    for (int j = 0; j < t.arity(); ++j) {
        const std::uint32_t step = 1u << j;
        for (std::uint32_t x = 0; x < t.size(); ++x)
            if (x & step) coeff[x] ^= coeff[x ^ step];
    }
    std::vector<Term> terms;
    for (std::uint32_t x = 0; x < t.size(); ++x)
        if (coeff[x]) terms.push_back(x);
    return AnfFunction(t.arity(), std::move(terms));
}

AnfFunction negate_variable(const AnfFunction& f, int var) {
    check_var(f.arity(), var);
    const Term bit = 1u << var;
    AnfFunction out = f;
    for (Term t : f.terms())
        if (t & bit) out.toggle_term(t & ~bit);
    return out;
}

AnfFunction derive_g(const AnfFunction& f, int var) {
    check_var(f.arity(), var);
    const Term bit = 1u << var;
    AnfFunction out(f.arity());
    for (Term t : f.terms())
        if (t & bit) out.toggle_term(t & ~bit);
    return out;
}

bool is_junta_ground_truth(const TruthTable& f, int var) {
    check_var(f.arity(), var);
    const std::uint32_t bit = 1u << var;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        if (f(x) != f(x ^ bit)) return false;
    return true;
}

double influence(const TruthTable& f, int var) {
    check_var(f.arity(), var);
    const std::uint32_t bit = 1u << var;
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x)
        if (f(x) != f(x ^ bit)) ++count;
    return static_cast<double>(count) / static_cast<double>(f.size());
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col),
                         line, col);
    }
};

// factor := '1' | 'x' digits ; returns the factor's variable mask.
Term parse_factor(Cursor& c) {
    if (c.peek() == '1') {
        c.advance();
        return 0;
    }
    if (c.peek() != 'x') c.fail("expected 'x<k>' or '1'");
    c.advance();
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected variable index after 'x'");
    long idx = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        idx = idx * 10 + (c.peek() - '0');
        if (idx >= kMaxTableArity) c.fail("variable index exceeds the arity cap");
        c.advance();
    }
    return 1u << idx;
}

Term parse_term(Cursor& c) {
    c.skip_space();
    if (c.done() || c.peek() == '^') c.fail("empty term");
    Term mask = parse_factor(c);
    for (;;) {
        std::size_t save = c.pos;
        int save_line = c.line, save_col = c.col;
        c.skip_space();
        if (!c.done() && c.peek() == '*') {
            c.advance();
            c.skip_space();
            if (c.done()) c.fail("dangling '*'");
            mask |= parse_factor(c);
            continue;
        }
        if (!c.done() && (c.peek() == 'x' || c.peek() == '1')) {
            mask |= parse_factor(c);
            continue;
        }
        c.pos = save;
        c.line = save_line;
        c.col = save_col;
        return mask;
    }
}

}  // namespace

AnfFunction parse_anf(const std::string& text, int min_arity) {
    Cursor c{text};
    std::vector<Term> terms;
    c.skip_space();
    if (c.done()) c.fail("empty function expression");
    terms.push_back(parse_term(c));
    for (;;) {
        c.skip_space();
        if (c.done()) break;
        if (c.peek() != '^') c.fail("expected '^' between terms");
        c.advance();
        terms.push_back(parse_term(c));
    }
    int arity = min_arity < 1 ? 1 : min_arity;
    for (Term t : terms)
        while (t >= (1u << arity)) ++arity;
    return AnfFunction(arity, std::move(terms));
}

TruthTable parse_table_hex(int arity, const std::string& hex) {
    check_arity(arity);
    std::string digits = hex;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
    if (digits.empty()) throw ParseError("empty hex table", 1, 1);
    TruthTable t(arity);
    const std::uint32_t n_bits = t.size();
    for (std::size_t k = 0; k < digits.size(); ++k) {
        char ch = digits[digits.size() - 1 - k];
        int nibble;
        if (ch >= '0' && ch <= '9')
            nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            nibble = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            nibble = ch - 'A' + 10;
        else
            throw ParseError(std::string("invalid hex digit '") + ch + "'", 1,
                             static_cast<int>(digits.size() - k));
        for (int b = 0; b < 4; ++b) {
            std::uint64_t x = 4 * k + b;
            bool bit = (nibble >> b) & 1;
            if (x < n_bits)
                t.set(static_cast<std::uint32_t>(x), bit);
            else if (bit)
                throw ParseError("hex table wider than 2^" + std::to_string(arity) + " bits", 1, 1);
        }
    }
    return t;
}

std::string to_hex(const TruthTable& t) {
    const std::uint32_t n_digits = (t.size() + 3) / 4;
    std::string out = "0x";
    for (std::uint32_t k = n_digits; k-- > 0;) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            std::uint32_t x = 4 * k + b;
            if (x < t.size() && t(x)) nibble |= 1 << b;
        }
        out += "0123456789abcdef"[nibble];
    }
    return out;
}

}  // namespace qjunta
