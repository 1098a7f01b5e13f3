// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "autotherm/errors.hpp"

namespace autotherm {
namespace {

// ---------------------------------------------------------------- values

struct Value;
using Array = std::vector<Value>;
using Table = std::vector<std::pair<std::string, Value>>;

struct Value {
  std::variant<double, std::string, Array, Table> data;
  int line = 0;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw ScenarioError("line " + std::to_string(line) + ": " + what);
}

double as_number(const Value& v, const std::string& what) {
  if (const auto* d = std::get_if<double>(&v.data)) return *d;
  fail(v.line, what + " must be a number");
}

const std::string& as_string(const Value& v, const std::string& what) {
  if (const auto* s = std::get_if<std::string>(&v.data)) return *s;
  fail(v.line, what + " must be a string");
}

const Array& as_array(const Value& v, const std::string& what) {
  if (const auto* a = std::get_if<Array>(&v.data)) return *a;
  fail(v.line, what + " must be an array");
}

const Table& as_table(const Value& v, const std::string& what) {
  if (const auto* t = std::get_if<Table>(&v.data)) return *t;
  fail(v.line, what + " must be an inline table");
}

/// Looks up keys of an inline table and rejects any it was not asked for.
class TableReader {
 public:
  TableReader(const Value& v, std::string context) : table_(as_table(v, context)), line_(v.line), ctx_(std::move(context)) {
    for (const auto& [k, _] : table_) {
      for (const auto& [k2, __] : table_) {
        if (&k != &k2 && k == k2) fail(line_, "duplicate key '" + k + "' in " + ctx_);
      }
    }
  }

  const Value* find(const std::string& key) {
    used_.push_back(key);
    for (const auto& [k, v] : table_) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const Value& require(const std::string& key) {
    const Value* v = find(key);
    if (v == nullptr) fail(line_, "missing key '" + key + "' in " + ctx_);
    return *v;
  }

  void reject_unknown() const {
    for (const auto& [k, v] : table_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) fail(v.line, "unknown key '" + k + "' in " + ctx_);
    }
  }

  [[nodiscard]] int line() const { return line_; }

 private:
  const Table& table_;
  int line_;
  std::string ctx_;
  std::vector<std::string> used_;
};

// ---------------------------------------------------------------- lexer

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  struct Entry {
    std::string section;
    std::string key;
    Value value;
  };

  std::vector<Entry> parse() {
    std::vector<Entry> out;
    std::string section;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        section = parse_header();
      } else {
        const int line = line_;
        std::string key = parse_key();
        skip_inline_space();
        expect('=');
        Value v = parse_value();
        v.line = line;
        out.push_back({section, std::move(key), std::move(v)});
      }
      end_of_line();
    }
    return out;
  }

 private:
  [[nodiscard]] bool eof() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return eof() ? '\0' : text_[pos_]; }

  char get() {
    const char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void expect(char c) {
    if (peek() != c) fail(line_, std::string("expected '") + c + "'");
    get();
  }

  void skip_inline_space() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }

  void skip_comment() {
    if (peek() == '#') {
      while (!eof() && peek() != '\n') get();
    }
  }

  /// Whitespace, newlines and comments; allowed inside brackets and braces.
  void skip_all_space() {
    while (!eof()) {
      skip_inline_space();
      skip_comment();
      if (peek() == '\n') {
        get();
      } else {
        break;
      }
    }
  }

  void skip_blank_lines() { skip_all_space(); }

  void end_of_line() {
    skip_inline_space();
    skip_comment();
    if (eof()) return;
    if (peek() != '\n') fail(line_, "unexpected trailing characters");
    get();
  }

  std::string parse_header() {
    expect('[');
    std::string name;
    while (!eof() && peek() != ']' && peek() != '\n') name += get();
    expect(']');
    if (name != "layout" && name != "hamiltonian.bare" && name != "hamiltonian.interaction" && name != "initial") {
      fail(line_, "unknown section [" + name + "]");
    }
    if (std::find(seen_sections_.begin(), seen_sections_.end(), name) != seen_sections_.end()) {
      fail(line_, "section [" + name + "] appears twice");
    }
    seen_sections_.push_back(name);
    return name;
  }

  std::string parse_key() {
    std::string key;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail(line_, "expected a key");
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) key += get();
    return key;
  }

  Value parse_value() {
    skip_inline_space();
    const int line = line_;
    Value v;
    v.line = line;
    const char c = peek();
    if (c == '"') {
      v.data = parse_string();
    } else if (c == '[') {
      v.data = parse_array();
    } else if (c == '{') {
      v.data = parse_table();
    } else {
      v.data = parse_number();
    }
    return v;
  }

  std::string parse_string() {
    expect('"');
    std::string s;
    while (true) {
      if (eof() || peek() == '\n') fail(line_, "unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail(line_, "unterminated string");
        c = get();
        if (c != '"' && c != '\\') fail(line_, "unsupported escape sequence");
      }
      s += c;
    }
    return s;
  }

  double parse_number() {
    std::string token;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '+' || peek() == '-' ||
                      peek() == '.')) {
      token += get();
    }
    return number_from(token, line_);
  }

  Array parse_array() {
    expect('[');
    Array out;
    skip_all_space();
    while (peek() != ']') {
      out.push_back(parse_value());
      skip_all_space();
      if (peek() == ',') {
        get();
        skip_all_space();
      } else if (peek() != ']') {
        fail(line_, "expected ',' or ']' in array");
      }
    }
    expect(']');
    return out;
  }

  Table parse_table() {
    expect('{');
    Table out;
    skip_all_space();
    while (peek() != '}') {
      std::string key = parse_key();
      skip_inline_space();
      expect('=');
      Value v = parse_value();
      out.emplace_back(std::move(key), std::move(v));
      skip_all_space();
      if (peek() == ',') {
        get();
        skip_all_space();
      } else if (peek() != '}') {
        fail(line_, "expected ',' or '}' in inline table");
      }
    }
    expect('}');
    return out;
  }

 public:
  static double number_from(const std::string& token, int line) {
    if (token.empty()) fail(line, "expected a value");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) fail(line, "invalid number '" + token + "'");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::vector<std::string> seen_sections_;
};

// ---------------------------------------------------------------- terms

std::string resolve_label(std::string_view suffix, const SubsystemLayout& layout, int line) {
  if (layout.contains(suffix)) return std::string(suffix);
  if (suffix.size() == 1) {
    for (const auto& e : layout.entries()) {
      if (e.label.front() == suffix.front()) return e.label;
    }
  }
  fail(line, "unknown subsystem '" + std::string(suffix) + "' in Pauli term");
}

PauliTerm parse_pauli_term(const std::string& text, const SubsystemLayout& layout, int line) {
  PauliTerm term;
  std::string body = text;
  const auto star = text.find('*');
  if (star != std::string::npos) {
    std::string coef = text.substr(0, star);
    coef.erase(0, coef.find_first_not_of(" \t"));
    coef.erase(coef.find_last_not_of(" \t") + 1);
    term.coefficient = Parser::number_from(coef, line);
    body = text.substr(star + 1);
  }
  std::istringstream words(body);
  std::string factor;
  while (words >> factor) {
    Pauli p{};
    switch (factor.front()) {
      case 'I': p = Pauli::kI; break;
      case 'X': p = Pauli::kX; break;
      case 'Y': p = Pauli::kY; break;
      case 'Z': p = Pauli::kZ; break;
      default: fail(line, "Pauli factor must start with I, X, Y or Z: '" + factor + "'");
    }
    const std::string label = resolve_label(std::string_view(factor).substr(1), layout, line);
    if (!term.factors.emplace(label, p).second) fail(line, "subsystem '" + label + "' appears twice in one term");
  }
  if (term.factors.empty()) fail(line, "Pauli term has no factors: '" + text + "'");
  return term;
}

Complex parse_complex(const Value& v, const std::string& what) {
  const Array& pair = as_array(v, what);
  if (pair.size() != 2) fail(v.line, what + " must be a [re, im] pair");
  return {as_number(pair[0], what), as_number(pair[1], what)};
}

Matrix parse_matrix(const Value& v, const std::string& what) {
  const Array& rows = as_array(v, what);
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) fail(v.line, what + " is empty");
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Array& row = as_array(rows[static_cast<std::size_t>(r)], what + " row");
    if (static_cast<Eigen::Index>(row.size()) != n) fail(v.line, what + " must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], what + " entry");
  }
  return m;
}

DenseTerm parse_dense_term(const Value& v, const SubsystemLayout& layout) {
  TableReader reader(v, "dense term");
  DenseTerm term;
  for (const auto& l : as_array(reader.require("labels"), "labels")) {
    term.labels.push_back(resolve_label(as_string(l, "label"), layout, l.line));
  }
  if (const Value* c = reader.find("coefficient")) term.coefficient = as_number(*c, "coefficient");
  term.block = parse_matrix(reader.require("matrix"), "matrix");
  reader.reject_unknown();
  return term;
}

// ---------------------------------------------------------------- states

DensityMatrix to_density(const Matrix& m, const SubsystemLayout& layout, int line) {
  try {
    return DensityMatrix(CompositeOperator(layout, m));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

struct StateContext {
  const SubsystemLayout& layout;  // factors the state lives on
  std::optional<CompositeOperator> bath_hamiltonian;
  double beta;
};

DensityMatrix parse_state(const Value& v, const StateContext& ctx, const std::string& what) {
  std::optional<TableReader> reader;
  std::string kind;
  if (std::holds_alternative<std::string>(v.data)) {
    kind = std::get<std::string>(v.data);
  } else {
    reader.emplace(v, what);
    kind = as_string(reader->require("state"), "state");
  }
  auto number = [&](const char* key) {
    if (!reader) fail(v.line, "state '" + kind + "' needs parameters; use an inline table");
    return as_number(reader->require(key), key);
  };

  std::optional<DensityMatrix> out;
  try {
    if (kind == "gibbs") {
      if (!ctx.bath_hamiltonian) fail(v.line, "'gibbs' is only available for the bath");
      out = gibbs_state(*ctx.bath_hamiltonian, ctx.beta);
    } else if (kind == "maximally_mixed") {
      out = maximally_mixed(ctx.layout);
    } else if (kind == "cmaybe" || kind == "werner") {
      if (!(ctx.layout == system_memory_layout())) fail(v.line, "'" + kind + "' is a system-memory state");
      if (kind == "cmaybe") {
        out = cmaybe_state(number("theta"));
      } else {
        const std::string& basis = as_string(reader->require("basis"), "basis");
        if (basis != "ZX" && basis != "XX") fail(v.line, "werner basis must be \"ZX\" or \"XX\"");
        out = werner_like_state(number("lambda"), number("phi"), basis == "ZX" ? WernerBasis::kZX : WernerBasis::kXX);
      }
    } else if (kind == "pure") {
      if (!reader) fail(v.line, "'pure' needs amplitudes");
      std::vector<Complex> amps;
      for (const auto& a : as_array(reader->require("amplitudes"), "amplitudes")) {
        amps.push_back(parse_complex(a, "amplitude"));
      }
      out = pure_state_from_amplitudes(amps, ctx.layout);
    } else if (kind == "diagonal") {
      if (!reader) fail(v.line, "'diagonal' needs probabilities");
      std::vector<double> p;
      for (const auto& a : as_array(reader->require("probabilities"), "probabilities")) {
        p.push_back(as_number(a, "probability"));
      }
      out = diagonal_state(p, ctx.layout);
    } else if (kind == "matrix") {
      if (!reader) fail(v.line, "'matrix' needs rows");
      out = to_density(parse_matrix(reader->require("rows"), "rows"), ctx.layout, v.line);
    } else {
      fail(v.line, "unknown state constructor '" + kind + "'");
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    fail(v.line, what + ": " + e.what());
  }
  if (reader) reader->reject_unknown();
  return *out;
}

// ---------------------------------------------------------------- writer

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_label(const std::string& label, const SubsystemLayout& layout) {
  // a one-letter alias is only unambiguous if no other label shares it
  int hits = 0;
  for (const auto& e : layout.entries()) hits += e.label.front() == label.front() ? 1 : 0;
  if (hits == 1 && !layout.contains(label.substr(0, 1))) return label.substr(0, 1);
  return label;
}

void write_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
  os << "[\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << indent << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      os << (c ? ", " : "") << "[" << fmt(m(r, c).real()) << ", " << fmt(m(r, c).imag()) << "]";
    }
    os << "],\n";
  }
  os << indent << "]";
}

void write_terms(std::ostream& os, const std::vector<HamiltonianTerm>& terms, const SubsystemLayout& layout) {
  os << "terms = [\n";
  for (const auto& t : terms) {
    const auto* p = std::get_if<PauliTerm>(&t);
    if (p == nullptr) continue;
    os << "  \"" << fmt(p->coefficient) << " *";
    // factors in layout order
    for (const auto& e : layout.entries()) {
      const auto it = p->factors.find(e.label);
      if (it != p->factors.end()) os << " " << pauli_letter(it->second) << short_label(e.label, layout);
    }
    os << "\",\n";
  }
  os << "]\n";
  bool any_dense = false;
  for (const auto& t : terms) any_dense = any_dense || std::holds_alternative<DenseTerm>(t);
  if (!any_dense) return;
  os << "dense = [\n";
  for (const auto& t : terms) {
    const auto* d = std::get_if<DenseTerm>(&t);
    if (d == nullptr) continue;
    os << "  { labels = [";
    for (std::size_t i = 0; i < d->labels.size(); ++i) os << (i ? ", " : "") << "\"" << d->labels[i] << "\"";
    os << "], coefficient = " << fmt(d->coefficient) << ", matrix = ";
    write_matrix(os, d->block, "    ");
    os << " },\n";
  }
  os << "]\n";
}

bool same_matrix(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const auto entries = Parser(text).parse();
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : entries) {
    if (!seen.emplace(e.section, e.key).second) {
      fail(e.value.line, "duplicate key '" + e.key + "'" + (e.section.empty() ? "" : " in [" + e.section + "]"));
    }
  }

  std::string name = "scenario";
  double beta = 1.0;
  std::vector<Subsystem> layout_entries;
  std::vector<const Parser::Entry*> bare, interaction, initial;
  for (const auto& e : entries) {
    if (e.section.empty()) {
      if (e.key == "name") {
        name = as_string(e.value, "name");
      } else if (e.key == "beta") {
        beta = as_number(e.value, "beta");
      } else {
        fail(e.value.line, "unknown top-level key '" + e.key + "'");
      }
    } else if (e.section == "layout") {
      const double d = as_number(e.value, "dimension of '" + e.key + "'");
      if (d < 1 || d != std::floor(d) || d > 1 << 12) fail(e.value.line, "dimension must be a positive integer");
      layout_entries.push_back({e.key, static_cast<std::size_t>(d)});
    } else if (e.section == "hamiltonian.bare") {
      bare.push_back(&e);
    } else if (e.section == "hamiltonian.interaction") {
      interaction.push_back(&e);
    } else {
      initial.push_back(&e);
    }
  }
  if (layout_entries.empty()) throw ScenarioError("missing [layout] section");
  SubsystemLayout layout;
  try {
    layout = SubsystemLayout(layout_entries);
  } catch (const LayoutError& err) {
    throw ScenarioError(err.what());
  }
  for (const char* required : {"bath", "system", "memory", "work"}) {
    if (!layout.contains(required)) throw ScenarioError(std::string("[layout] must define '") + required + "'");
  }

  auto read_terms = [&](const std::vector<const Parser::Entry*>& section, const char* title) {
    std::vector<HamiltonianTerm> terms;
    for (const auto* e : section) {
      if (e->key == "terms") {
        for (const auto& item : as_array(e->value, "terms")) {
          terms.emplace_back(parse_pauli_term(as_string(item, "Pauli term"), layout, item.line));
        }
      } else if (e->key == "dense") {
        for (const auto& item : as_array(e->value, "dense")) terms.emplace_back(parse_dense_term(item, layout));
      } else {
        fail(e->value.line, "unknown key '" + e->key + "' in [" + title + "]");
      }
    }
    return terms;
  };
  std::vector<HamiltonianTerm> bare_terms = read_terms(bare, "hamiltonian.bare");
  std::vector<HamiltonianTerm> interaction_terms = read_terms(interaction, "hamiltonian.interaction");

  const std::string bath(labels::kBath);
  CompositeOperator h_b = CompositeOperator::zero(layout.restricted_to({bath}));
  for (const auto& t : bare_terms) {
    const LabelSet ls = term_labels(t);
    if (ls.size() == 1 && ls.front() == bath) h_b += realize(t, h_b.layout());
  }

  std::map<std::string, const Value*> init;
  for (const auto* e : initial) {
    static const std::set<std::string> kKeys{"wbar", "bath", "system_memory", "system", "memory", "work"};
    if (!kKeys.count(e->key)) fail(e->value.line, "unknown key '" + e->key + "' in [initial]");
    if (!init.emplace(e->key, &e->value).second) fail(e->value.line, "duplicate key '" + e->key + "' in [initial]");
  }
  auto state_on = [&](const char* key, const LabelSet& labels_of) {
    const SubsystemLayout sub = layout.restricted_to(labels_of);
    StateContext ctx{sub, std::nullopt, beta};
    if (labels_of.size() == 1 && labels_of.front() == bath) ctx.bath_hamiltonian = h_b;
    return parse_state(*init.at(key), ctx, std::string("initial.") + key);
  };

  if (!init.count("work")) throw ScenarioError("[initial] must define 'work'");
  const DensityMatrix work = state_on("work", {std::string(labels::kWork)});
  std::optional<DensityMatrix> wbar;
  if (init.count("wbar")) {
    for (const char* k : {"bath", "system_memory", "system", "memory"}) {
      if (init.count(k)) fail(init.at(k)->line, std::string("'") + k + "' cannot be combined with 'wbar'");
    }
    wbar = state_on("wbar", wbar_labels(layout));
  } else {
    if (!init.count("bath")) throw ScenarioError("[initial] needs 'wbar' or 'bath'");
    const DensityMatrix rho_b = state_on("bath", {bath});
    if (init.count("system_memory")) {
      if (init.count("system") || init.count("memory")) {
        fail(init.at("system_memory")->line, "'system_memory' cannot be combined with 'system'/'memory'");
      }
      wbar = tensor_product(rho_b, state_on("system_memory", {std::string(labels::kSystem), std::string(labels::kMemory)}));
    } else {
      if (!init.count("system") || !init.count("memory")) {
        throw ScenarioError("[initial] needs 'system_memory' or both 'system' and 'memory'");
      }
      wbar = tensor_product(tensor_product(rho_b, state_on("system", {std::string(labels::kSystem)})),
                            state_on("memory", {std::string(labels::kMemory)}));
    }
  }

  Scenario s{name, layout, beta, std::move(bare_terms), std::move(interaction_terms), *wbar, work};
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ScenarioError& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
}

std::string write_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "name = \"" << s.name << "\"\n";
  os << "beta = " << fmt(s.beta) << "\n\n[layout]\n";
  for (const auto& e : s.layout.entries()) os << e.label << " = " << e.dim << "\n";
  os << "\n[hamiltonian.bare]\n";
  write_terms(os, s.bare_terms, s.layout);
  os << "\n[hamiltonian.interaction]\n";
  write_terms(os, s.interaction_terms, s.layout);
  os << "\n[initial]\nwbar = { state = \"matrix\", rows = ";
  write_matrix(os, s.initial_wbar.matrix(), "");
  os << " }\nwork = { state = \"matrix\", rows = ";
  write_matrix(os, s.initial_work.matrix(), "");
  os << " }\n";
  return os.str();
}

Scenario resolve_scenario(std::string_view reference) {
  constexpr std::string_view kPrefix = "builtin:";
  if (reference.substr(0, kPrefix.size()) == kPrefix) return builtin_scenario(reference.substr(kPrefix.size()));
  return load_scenario(std::filesystem::path(reference));
}

bool identical(const Scenario& a, const Scenario& b) {
  return a.name == b.name && a.layout == b.layout && a.beta == b.beta && a.bare_terms == b.bare_terms &&
         a.interaction_terms == b.interaction_terms && same_matrix(a.initial_wbar.matrix(), b.initial_wbar.matrix()) &&
         same_matrix(a.initial_work.matrix(), b.initial_work.matrix());
}

}  // namespace autotherm
