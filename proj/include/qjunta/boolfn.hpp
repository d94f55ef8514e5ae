#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qjunta {

// Truth tables are materialized dense, so the arity has to stay desk-scale.
inline constexpr int kMaxTableArity = 24;

// A product term in positive-polarity form: bit j set means x_j occurs.
// The empty mask is the constant-1 term.
using Term = std::uint32_t;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Dense 2^n evaluation table; entry at integer index x is f(x).
// Index bit j (value 2^j) carries variable x_j, so x_0 is the LSB.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int arity);

    int arity() const { return arity_; }
    std::uint32_t size() const { return 1u << arity_; }
    bool operator()(std::uint32_t x) const { return bits_[x] != 0; }
    void set(std::uint32_t x, bool value) { bits_[x] = value ? 1 : 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::vector<std::uint8_t>& bits() { return bits_; }

    bool operator==(const TruthTable& other) const = default;

private:
    int arity_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Boolean function as an XOR of product terms (positive-polarity
// Reed-Muller form). Terms are kept sorted and duplicate-free; inserting
// a term twice cancels it, so "identically zero" is `terms().empty()`.
class AnfFunction {
public:
    AnfFunction() = default;
    explicit AnfFunction(int arity);
    AnfFunction(int arity, std::vector<Term> terms);

    static AnfFunction zero(int arity) { return AnfFunction(arity); }
    static AnfFunction one(int arity) { return AnfFunction(arity, {0u}); }

    int arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_term(Term t) const;

    // XOR-cancelling insert: adds the term, or removes it if present.
    void toggle_term(Term t);

    // Evaluates by iterating the term list (the slow reference path).
    bool eval(std::uint32_t assignment) const;

    std::string to_string() const;

    bool operator==(const AnfFunction& other) const = default;

private:
    int arity_ = 0;
    std::vector<Term> terms_;
};

AnfFunction operator^(const AnfFunction& f, const AnfFunction& h);

// ANF -> table via the GF(2) fast subset transform (the butterfly is its
// own inverse, which is what from_truth_table relies on).
TruthTable to_truth_table(const AnfFunction& f);

// ANF -> table by 2^n direct evaluations; cross-check for the fast path.
TruthTable to_truth_table_naive(const AnfFunction& f);

AnfFunction from_truth_table(const TruthTable& t);

// Substitutes x_i := x_i ^ 1 and re-expands: every term containing x_i
// spawns its x_i-free reduction.
AnfFunction negate_variable(const AnfFunction& f, int var);

// g = f ^ negate_variable(f, var). The result never mentions x_var, and
// it is identically zero exactly when x_var is irrelevant to f.
AnfFunction derive_g(const AnfFunction& f, int var);

// Brute force over all 2^n inputs: true iff flipping bit `var` never
// changes f.
bool is_junta_ground_truth(const TruthTable& f, int var);

// Fraction of inputs x with f(x) != f(x ^ e_var); zero iff junta.
double influence(const TruthTable& f, int var);

// Parses the term grammar used by the CLI and fixtures: terms joined by
// '^', each term a product of variables `x<k>` by juxtaposition or '*',
// constant term '1'. Example: "x0x1 ^ x2 ^ 1". The arity is
// max(highest index + 1, min_arity).
AnfFunction parse_anf(const std::string& text, int min_arity = 1);

// Hex-encoded table with explicit arity: bit x of the value is f(x).
TruthTable parse_table_hex(int arity, const std::string& hex);
std::string to_hex(const TruthTable& t);

}  // namespace qjunta
