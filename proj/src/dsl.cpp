#include "qforge/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "qforge/error.hpp"

namespace qforge {

namespace {

const std::set<std::string, std::less<>> kKeywords = {"field",    "algebra", "generators", "relations",
                                                      "clifford", "central", "assert"};
const std::set<std::string, std::less<>> kFlags = {std::string(kFlagKoszul), std::string(kFlagAsRegular),
                                                   std::string(kFlagGldim)};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void error(ErrorCode code, const std::string& msg) const { error_at(code, pos_, msg); }

  [[noreturn]] void error_at(ErrorCode code, std::size_t at, const std::string& msg) const {
    if (at >= text_.size()) fail(code, "unexpected end of input: " + msg);
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) error(ErrorCode::SyntaxError, std::string("expected '") + c + "'");
  }

  std::optional<std::string> peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id) error(ErrorCode::SyntaxError, "expected an identifier");
    pos_ += id->size();
    return *id;
  }

  bool at_keyword() {
    auto id = peek_ident();
    return id && kKeywords.count(*id);
  }

  std::string word_token() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && text_[end] != '#') ++end;
    if (end == pos_) error(ErrorCode::SyntaxError, "expected a flag");
    std::string out(text_.substr(pos_, end - pos_));
    pos_ = end;
    return out;
  }

  // digits ["/" digits] as raw text starting at pos_ (no whitespace skipping).
  std::optional<std::string> raw_rational(std::size_t& at) const {
    std::size_t p = at;
    if (p >= text_.size() || !digit(text_[p])) return std::nullopt;
    while (p < text_.size() && digit(text_[p])) ++p;
    if (p < text_.size() && text_[p] == '/') {
      std::size_t q = p + 1;
      if (q >= text_.size() || !digit(text_[q])) return std::nullopt;
      while (q < text_.size() && digit(text_[q])) ++q;
      p = q;
    }
    std::string out(text_.substr(at, p - at));
    at = p;
    return out;
  }

  bool imag_suffix(std::size_t at) const {
    return at < text_.size() && text_[at] == 'i' && (at + 1 >= text_.size() || !ident_char(text_[at + 1]));
  }

  // NUMBER ["/" NUMBER] [(+|-) NUMBER ["/" NUMBER] "i"] | NUMBER ["/" NUMBER] "i"
  std::optional<Scalar> scalar() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t p = pos_;
    auto re = raw_rational(p);
    if (!re) return std::nullopt;
    auto make = [&](const std::string& s) {
      try {
        return Scalar::parse(s);
      } catch (const Error& e) {
        error_at(ErrorCode::SyntaxError, start, e.what());
      }
    };
    if (imag_suffix(p)) {
      pos_ = p + 1;
      return make(*re + "i");
    }
    // Lookahead for a complex tail.
    std::size_t q = p;
    while (q < text_.size() && text_[q] == ' ') ++q;
    if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) {
      char sign = text_[q++];
      while (q < text_.size() && text_[q] == ' ') ++q;
      std::size_t r = q;
      auto im = raw_rational(r);
      if (im && imag_suffix(r)) {
        pos_ = r + 1;
        return make(*re + sign + *im + "i");
      }
    }
    pos_ = p;
    return make(*re);
  }

  Scalar signed_scalar() {
    bool neg = accept('-');
    if (!neg) accept('+');
    auto s = scalar();
    if (!s) error(ErrorCode::SyntaxError, "expected a scalar");
    return neg ? -*s : *s;
  }

  Tensor polynomial(const std::vector<std::string>& gens, Field field, std::optional<std::size_t> degree) {
    std::vector<Tensor::Term> terms;
    std::size_t start = pos();
    std::optional<std::size_t> deg = degree;
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) neg = true;
      else if (!accept('+') && !first) break;
      first = false;
      std::size_t term_start = pos();
      Scalar coeff(1);
      if (auto s = scalar()) {
        coeff = *s;
        expect('*');
      } else if (peek() == '-' || peek() == '+') {
        error(ErrorCode::SyntaxError, "expected a term");
      }
      if (neg) coeff = -coeff;
      std::vector<Letter> letters;
      do {
        skip_ws();
        std::size_t at = pos();
        std::string g = ident();
        auto it = std::find(gens.begin(), gens.end(), g);
        if (it == gens.end()) error_at(ErrorCode::UnknownGenerator, at, "unknown generator '" + g + "'");
        letters.push_back(static_cast<Letter>(it - gens.begin()));
      } while (accept('*'));
      if (!coeff.in_field(field))
        error_at(ErrorCode::SyntaxError, term_start, "imaginary coefficient over field Q");
      if (deg && letters.size() != *deg)
        error_at(ErrorCode::DegreeError, term_start,
                 "term of degree " + std::to_string(letters.size()) + ", expected degree " + std::to_string(*deg));
      deg = letters.size();
      terms.emplace_back(Word(std::move(letters)), std::move(coeff));
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    Tensor t = Tensor::from_terms(field, *deg, std::move(terms));
    if (t.is_zero()) error_at(ErrorCode::DegreeError, start, "polynomial is zero");
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string expect_keyword(Parser& ps, const char* kw) {
  std::size_t at = ps.pos();
  auto id = ps.peek_ident();
  if (!id || *id != kw) ps.error_at(ErrorCode::SyntaxError, at, std::string("expected '") + kw + "'");
  return ps.ident();
}

void check_ident(Parser& ps, std::size_t at, const std::string& id) {
  if (kKeywords.count(id)) ps.error_at(ErrorCode::SyntaxError, at, "'" + id + "' is a reserved word");
}

}  // namespace

PresentationFile parse_presentation(std::string_view text) {
  Parser ps(text);
  PresentationFile f;
  expect_keyword(ps, "field");
  {
    std::size_t at = ps.pos();
    std::string fld = ps.ident();
    if (fld == "Q") f.field = Field::Rationals;
    else if (fld == "Qi") f.field = Field::GaussianRationals;
    else ps.error_at(ErrorCode::SyntaxError, at, "field must be Q or Qi");
  }
  expect_keyword(ps, "algebra");
  f.name = ps.ident();
  expect_keyword(ps, "generators");
  do {
    std::size_t at = ps.pos();
    std::string g = ps.ident();
    check_ident(ps, at, g);
    if (std::find(f.generators.begin(), f.generators.end(), g) != f.generators.end())
      ps.error_at(ErrorCode::NameClash, at, "duplicate generator '" + g + "'");
    f.generators.push_back(g);
  } while (ps.accept(','));
  expect_keyword(ps, "relations");
  if (!ps.at_end() && !ps.at_keyword()) {
    do {
      f.relations.push_back(ps.polynomial(f.generators, f.field, 2));
    } while (ps.accept(';'));
  }
  std::set<std::string> names;
  while (!ps.at_end()) {
    std::size_t at = ps.pos();
    auto kw = ps.peek_ident();
    if (!kw) ps.error(ErrorCode::SyntaxError, "expected a statement");
    if (*kw == "clifford") {
      ps.ident();
      std::size_t name_at = ps.pos();
      std::string name = ps.ident();
      if (!names.insert(name).second) ps.error_at(ErrorCode::NameClash, name_at, "duplicate name '" + name + "'");
      ps.expect(':');
      Vec values;
      do {
        std::size_t vat = ps.pos();
        Scalar s = ps.signed_scalar();
        if (!s.in_field(f.field)) ps.error_at(ErrorCode::SyntaxError, vat, "imaginary value over field Q");
        values.push_back(std::move(s));
      } while (ps.accept(','));
      if (values.size() != f.relations.size())
        ps.error_at(ErrorCode::ArityMismatch, at,
                    "clifford '" + name + "' has " + std::to_string(values.size()) + " values for " +
                        std::to_string(f.relations.size()) + " relations");
      f.clifford.emplace_back(name, std::move(values));
    } else if (*kw == "central") {
      ps.ident();
      std::size_t name_at = ps.pos();
      std::string name = ps.ident();
      if (!names.insert(name).second) ps.error_at(ErrorCode::NameClash, name_at, "duplicate name '" + name + "'");
      ps.expect(':');
      f.central.emplace_back(name, ps.polynomial(f.generators, f.field, 2));
    } else if (*kw == "assert") {
      ps.ident();
      std::size_t flag_at = ps.pos();
      std::string flag = ps.word_token();
      if (!kFlags.count(flag)) ps.error_at(ErrorCode::SyntaxError, flag_at, "unknown assertion '" + flag + "'");
      if (!f.asserts(flag)) f.assertions.push_back(flag);
    } else {
      ps.error(ErrorCode::SyntaxError, "unexpected '" + *kw + "'");
    }
  }
  return f;
}

std::string print_presentation(const PresentationFile& f) {
  std::string out;
  out += "field " + std::string(field_name(f.field)) + "\n";
  out += "algebra " + f.name + "\n";
  out += "generators ";
  for (std::size_t i = 0; i < f.generators.size(); ++i) out += (i ? ", " : "") + f.generators[i];
  out += "\nrelations";
  for (std::size_t i = 0; i < f.relations.size(); ++i) out += (i ? "; " : " ") + f.relations[i].to_string(f.generators);
  out += "\n";
  for (const auto& [name, values] : f.clifford) {
    out += "clifford " + name + ":";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : " ") + values[i].to_string();
    out += "\n";
  }
  for (const auto& [name, z] : f.central) out += "central " + name + ": " + z.to_string(f.generators) + "\n";
  for (const auto& a : f.assertions) out += "assert " + a + "\n";
  return out;
}

Tensor parse_polynomial(std::string_view text, const std::vector<std::string>& generators, Field field) {
  Parser ps(text);
  Tensor t = ps.polynomial(generators, field, std::nullopt);
  if (!ps.at_end()) ps.error(ErrorCode::SyntaxError, "trailing text after polynomial");
  return t;
}

QuadraticPresentation PresentationFile::presentation() const {
  return QuadraticPresentation(field, generators, relations);
}

const Vec& PresentationFile::clifford_values(const std::string& key) const {
  for (const auto& [n, v] : clifford)
    if (n == key) return v;
  fail(ErrorCode::UnknownName, "no clifford vector named '" + key + "'");
}

const Tensor& PresentationFile::central_element(const std::string& key) const {
  for (const auto& [n, z] : central)
    if (n == key) return z;
  fail(ErrorCode::UnknownName, "no central element named '" + key + "'");
}

bool PresentationFile::asserts(const std::string& flag) const {
  return std::find(assertions.begin(), assertions.end(), flag) != assertions.end();
}

PresentationFile to_file(const QuadraticPresentation& p, const std::string& name) {
  PresentationFile f;
  f.field = p.field();
  f.name = name;
  f.generators = p.generators();
  f.relations = p.relations().basis();
  return f;
}

}  // namespace qforge
