#include "lcn/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lcn/error.hpp"

namespace lcn {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(), a.exps.begin(),
                                      a.exps.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Integer& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Monomial{std::vector<std::uint32_t>(p.vars_.size(), 0)}, c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw InvalidArgument("variable index out of range");
  MultiPoly p(std::move(variables));
  Monomial m{std::vector<std::uint32_t>(p.vars_.size(), 0)};
  m.exps[index] = 1;
  p.add_term(m, 1);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.exps.size() != vars_.size())
    throw InvalidArgument("monomial length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw InvalidArgument("polynomials have different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  Monomial prod{std::vector<std::uint32_t>(a.vars_.size())};
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < prod.exps.size(); ++i) prod.exps[i] = ma.exps[i] + mb.exps[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

namespace {

template <class T>
std::vector<std::vector<T>> power_table(std::span<const T> point, const TermMap& terms,
                                        std::size_t nvars) {
  std::vector<std::uint32_t> maxe(nvars, 0);
  for (const auto& [m, c] : terms)
    for (std::size_t i = 0; i < nvars; ++i) maxe[i] = std::max(maxe[i], m.exps[i]);
  std::vector<std::vector<T>> pw(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    pw[i].reserve(maxe[i] + 1);
    pw[i].push_back(T(1));
    for (std::uint32_t e = 1; e <= maxe[i]; ++e) pw[i].push_back(pw[i].back() * point[i]);
  }
  return pw;
}

}  // namespace

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> pos;
  pos.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw InvalidArgument("no value assigned to variable " + v);
    pos.push_back(it->second);
  }
  return eval(std::span<const Rational>(pos));
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("point has wrong dimension");
  const auto pw = power_table(point, terms_, vars_.size());
  Rational sum = 0;
  Rational t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (m.exps[i]) t *= pw[i][m.exps[i]];
    sum += t;
  }
  return sum;
}

Integer MultiPoly::eval(std::span<const Integer> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("point has wrong dimension");
  const auto pw = power_table(point, terms_, vars_.size());
  Integer sum = 0;
  Integer t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (m.exps[i]) t *= pw[i][m.exps[i]];
    sum += t;
  }
  return sum;
}

std::complex<double> MultiPoly::eval(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("point has wrong dimension");
  const auto pw = power_table(point, terms_, vars_.size());
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (m.exps[i]) t *= pw[i][m.exps[i]];
    sum += t;
  }
  return sum;
}

double MultiPoly::abs_eval(std::span<const std::complex<double>> point) const {
  if (point.size() != vars_.size()) throw InvalidArgument("point has wrong dimension");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = std::abs(c.get_d());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (m.exps[i]) t *= std::pow(std::abs(point[i]), static_cast<double>(m.exps[i]));
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw InvalidArgument("variable index out of range");
  MultiPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exps[var] == 0) continue;
    Monomial d = m;
    d.exps[var] -= 1;
    r.add_term(d, c * m.exps[var]);
  }
  return r;
}

Integer MultiPoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  MultiPoly r = *this;
  const Integer g = content();
  if (g > 1)
    for (auto& [m, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

MultiPoly MultiPoly::sign_normalized() const {
  if (!terms_.empty() && terms_.begin()->second < 0) return -*this;
  return *this;
}

MultiPoly MultiPoly::embed(std::vector<std::string> new_variables,
                           std::span<const std::size_t> index_map) const {
  if (index_map.size() != vars_.size()) throw InvalidArgument("index map has wrong length");
  for (auto i : index_map)
    if (i >= new_variables.size()) throw InvalidArgument("index map target out of range");
  MultiPoly r(std::move(new_variables));
  for (const auto& [m, c] : terms_) {
    Monomial e{std::vector<std::uint32_t>(r.vars_.size(), 0)};
    for (std::size_t i = 0; i < m.exps.size(); ++i) e.exps[index_map[i]] += m.exps[i];
    r.add_term(e, c);
  }
  return r;
}

std::vector<std::string> coefficient_variables(std::size_t k) {
  std::vector<std::string> v;
  v.reserve(k);
  for (std::size_t i = 0; i < k; ++i) v.push_back("c" + std::to_string(i));
  return v;
}

namespace {

bool use_letters(VarStyle style, std::size_t nvars) {
  return style == VarStyle::Letters && nvars <= 26;
}

std::string var_label(const std::vector<std::string>& vars, std::size_t i, VarStyle style) {
  if (use_letters(style, vars.size())) return std::string(1, static_cast<char>('A' + i));
  return vars[i];
}

}  // namespace

std::string to_text(const MultiPoly& p, VarStyle style) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      std::string f = var_label(p.variables(), i, style);
      if (m.exps[i] > 1) f += "^" + std::to_string(m.exps[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, VarStyle style)
      : text_(text), vars_(vars), letters_(use_letters(style, vars.size())) {}

  MultiPoly parse() {
    MultiPoly result(vars_);
    skip_ws();
    if (pos_ == text_.size()) throw InvalidArgument("empty polynomial text");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " +
                          what);
  }

  std::string read_digits() {
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t read_variable() {
    if (letters_ && std::isupper(static_cast<unsigned char>(peek()))) {
      const auto idx = static_cast<std::size_t>(peek() - 'A');
      if (idx >= vars_.size()) fail("letter outside the variable range");
      ++pos_;
      return idx;
    }
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size()) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  void parse_term(MultiPoly& result, int sign) {
    Integer coeff = sign;
    Monomial m{std::vector<std::uint32_t>(vars_.size(), 0)};
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ == text_.size() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        if (!any) fail("dangling '*'");
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= Integer(read_digits());
      } else {
        const auto v = read_variable();
        std::uint32_t e = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(std::stoul(read_digits()));
        }
        m.exps[v] += e;
      }
      any = true;
    }
    if (!any) fail("empty term");
    result.add_term(m, coeff);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  bool letters_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::vector<std::string> variables, VarStyle style) {
  return PolyParser(text, variables, style).parse();
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"coeff", c.get_str()}, {"exps", m.exps}});
  return {{"vars", p.variables()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
      Monomial m{t.at("exps").get<std::vector<std::uint32_t>>()};
      Integer c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw InvalidArgument("bad coefficient string");
      p.add_term(m, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<std::string> variables)
    : rows_(rows), cols_(cols), vars_(std::move(variables)) {
  entries_.assign(rows * cols, MultiPoly(vars_));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<MultiPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidArgument("entry count != rows * cols");
  if (entries_.empty()) return;
  vars_ = entries_.front().variables();
  for (const auto& e : entries_)
    if (e.variables() != vars_) throw InvalidArgument("matrix entries live in different rings");
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_ids,
                                 std::span<const std::size_t> col_ids) const {
  PolyMatrix s(row_ids.size(), col_ids.size(), vars_);
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s.at(i, j) = at(row_ids[i], col_ids[j]);
  return s;
}

std::vector<Rational> PolyMatrix::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.eval(point));
  return out;
}

std::string to_text(const PolyMatrix& m, VarStyle style) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells.push_back(to_text(m.at(r, c), style));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& s = cells[r * m.cols() + c];
      out << std::string(width - s.size(), ' ') << s << (c + 1 < m.cols() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

namespace {

// det of rows [row, n) restricted to the columns in mask, expanded along `row`.
class LaplaceDet {
 public:
  explicit LaplaceDet(const PolyMatrix& m) : m_(m) {}

  MultiPoly run() {
    const std::size_t n = m_.rows();
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return expand(0, full);
  }

 private:
  MultiPoly expand(std::size_t row, std::uint64_t mask) {
    if (row == m_.rows()) return MultiPoly::constant(m_.variables(), 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    MultiPoly acc(m_.variables());
    int position = 0;
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (!(mask >> c & 1)) continue;
      const MultiPoly& entry = m_.at(row, c);
      if (!entry.is_zero()) {
        MultiPoly sub = expand(row + 1, mask & ~(std::uint64_t{1} << c));
        if (!sub.is_zero()) {
          if (position % 2) acc -= entry * sub;
          else acc += entry * sub;
        }
      }
      ++position;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() > 64) throw InvalidArgument("determinant limited to 64 columns");
  if (m.rows() == 0) return MultiPoly::constant(m.variables(), 1);
  return LaplaceDet(m).run();
}

std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t size) {
  if (size == 0 || size > rows || size > cols) return 0;
  const Integer n = binomial(rows, size) * binomial(cols, size);
  return n.get_ui();
}

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size) {
  if (size == 0) throw InvalidArgument("minor size must be positive");
  std::vector<MultiPoly> out;
  if (size > m.rows() || size > m.cols()) return out;
  std::vector<std::size_t> rows(size);
  std::iota(rows.begin(), rows.end(), 0);
  std::set<std::string> seen;
  do {
    std::vector<std::size_t> cols(size);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      MultiPoly d = determinant(m.submatrix(rows, cols));
      if (d.is_zero()) continue;
      d = d.sign_normalized();
      if (seen.insert(to_text(d)).second) out.push_back(std::move(d));
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return out;
}

std::size_t exact_rank(std::vector<Rational> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw InvalidArgument("entry count != rows * cols");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r * cols + c] == 0) continue;
      const Rational f = a[r * cols + c] / a[rank * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lcn
