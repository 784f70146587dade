#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "liftlab/rational.hpp"

namespace liftlab {

// Dense matrix of exact rationals with labeled axes. Labels are opaque
// strings produced by the builder modules; this class never parses them.
// Label sequences must be duplicate-free.
class RatMatrix {
public:
    RatMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

    static RatMatrix build(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           const std::function<Rational(std::size_t, std::size_t)>& fn);

    std::size_t n_rows() const { return row_labels_.size(); }
    std::size_t n_cols() const { return col_labels_.size(); }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    const Rational& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Rational v);

    // Label-based access; throws std::invalid_argument on unknown labels.
    std::size_t row_index(const std::string& label) const;
    std::size_t col_index(const std::string& label) const;
    bool has_row(const std::string& label) const { return row_idx_.count(label) > 0; }
    bool has_col(const std::string& label) const { return col_idx_.count(label) > 0; }
    const Rational& at(const std::string& row, const std::string& col) const;

    bool all_nonnegative() const;
    bool row_all_zero(std::size_t r) const;
    bool col_all_zero(std::size_t c) const;

    bool operator==(const RatMatrix& o) const;

private:
    std::vector<std::string> row_labels_, col_labels_;
    std::unordered_map<std::string, std::size_t> row_idx_, col_idx_;
    std::vector<Rational> entries_;  // row-major
};

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

struct MatMulReport {
    bool equal = false;
    std::size_t row = 0, col = 0;
    std::string row_label, col_label;
    Rational got, want;
};

// Checks A*B == S entry by entry, exactly. On the first mismatch the
// labeled cell and both values are reported. Dimension mismatch throws.
MatMulReport mat_mul_eq(const RatMatrix& a, const RatMatrix& b, const RatMatrix& s);

// JSON schema: {"rows":[...], "cols":[...], "entries":[["p/q", ...], ...]}
// Entries are canonical fraction strings; integers are written without the
// "/1" suffix and accepted either way on input.
std::string matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const std::string& text);

}  // namespace liftlab
