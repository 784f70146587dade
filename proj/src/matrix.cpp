#include "liftlab/matrix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace liftlab {

namespace {

std::unordered_map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                          const char* axis) {
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!idx.emplace(labels[i], i).second)
            throw std::invalid_argument(std::string("RatMatrix: duplicate ") + axis + " label '" +
                                        labels[i] + "'");
    }
    return idx;
}

}  // namespace

RatMatrix::RatMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      row_idx_(index_labels(row_labels_, "row")),
      col_idx_(index_labels(col_labels_, "column")),
      entries_(row_labels_.size() * col_labels_.size()) {}

RatMatrix RatMatrix::build(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                           const std::function<Rational(std::size_t, std::size_t)>& fn) {
    RatMatrix m(std::move(row_labels), std::move(col_labels));
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (std::size_t c = 0; c < m.n_cols(); ++c) m.entries_[r * m.n_cols() + c] = fn(r, c);
    return m;
}

const Rational& RatMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= n_rows() || c >= n_cols()) throw std::out_of_range("RatMatrix::at");
    return entries_[r * n_cols() + c];
}

void RatMatrix::set(std::size_t r, std::size_t c, Rational v) {
    if (r >= n_rows() || c >= n_cols()) throw std::out_of_range("RatMatrix::set");
    entries_[r * n_cols() + c] = std::move(v);
}

std::size_t RatMatrix::row_index(const std::string& label) const {
    auto it = row_idx_.find(label);
    if (it == row_idx_.end())
        throw std::invalid_argument("RatMatrix: unknown row label '" + label + "'");
    return it->second;
}

std::size_t RatMatrix::col_index(const std::string& label) const {
    auto it = col_idx_.find(label);
    if (it == col_idx_.end())
        throw std::invalid_argument("RatMatrix: unknown column label '" + label + "'");
    return it->second;
}

const Rational& RatMatrix::at(const std::string& row, const std::string& col) const {
    return at(row_index(row), col_index(col));
}

bool RatMatrix::all_nonnegative() const {
    for (const auto& e : entries_)
        if (e.is_negative()) return false;
    return true;
}

bool RatMatrix::row_all_zero(std::size_t r) const {
    for (std::size_t c = 0; c < n_cols(); ++c)
        if (!at(r, c).is_zero()) return false;
    return true;
}

bool RatMatrix::col_all_zero(std::size_t c) const {
    for (std::size_t r = 0; r < n_rows(); ++r)
        if (!at(r, c).is_zero()) return false;
    return true;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return row_labels_ == o.row_labels_ && col_labels_ == o.col_labels_ && entries_ == o.entries_;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("multiply: inner dimensions disagree (" +
                                    std::to_string(a.n_cols()) + " vs " +
                                    std::to_string(b.n_rows()) + ")");
    RatMatrix p(a.row_labels(), b.col_labels());
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
        for (std::size_t c = 0; c < b.n_cols(); ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.n_cols(); ++k) {
                const Rational& x = a.at(r, k);
                if (x.is_zero()) continue;
                acc += x * b.at(k, c);
            }
            p.set(r, c, std::move(acc));
        }
    }
    return p;
}

MatMulReport mat_mul_eq(const RatMatrix& a, const RatMatrix& b, const RatMatrix& s) {
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("mat_mul_eq: inner dimensions disagree");
    if (a.n_rows() != s.n_rows() || b.n_cols() != s.n_cols())
        throw std::invalid_argument("mat_mul_eq: product dimensions do not match target");
    MatMulReport rep;
    for (std::size_t r = 0; r < s.n_rows(); ++r) {
        for (std::size_t c = 0; c < s.n_cols(); ++c) {
            Rational acc = 0;
            for (std::size_t k = 0; k < a.n_cols(); ++k) {
                const Rational& x = a.at(r, k);
                if (x.is_zero()) continue;
                acc += x * b.at(k, c);
            }
            if (acc != s.at(r, c)) {
                rep.equal = false;
                rep.row = r;
                rep.col = c;
                rep.row_label = s.row_labels()[r];
                rep.col_label = s.col_labels()[c];
                rep.got = acc;
                rep.want = s.at(r, c);
                return rep;
            }
        }
    }
    rep.equal = true;
    return rep;
}

std::string matrix_to_json(const RatMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.row_labels();
    j["cols"] = m.col_labels();
    auto entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.n_cols(); ++c) row.push_back(m.at(r, c).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

RatMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix_from_json: missing rows/cols/entries");
    RatMatrix m(j["rows"].get<std::vector<std::string>>(),
                j["cols"].get<std::vector<std::string>>());
    const auto& entries = j["entries"];
    if (entries.size() != m.n_rows())
        throw std::invalid_argument("matrix_from_json: entry row count mismatch");
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        if (entries[r].size() != m.n_cols())
            throw std::invalid_argument("matrix_from_json: entry column count mismatch");
        for (std::size_t c = 0; c < m.n_cols(); ++c)
            m.set(r, c, Rational::from_string(entries[r][c].get<std::string>()));
    }
    return m;
}

}  // namespace liftlab
