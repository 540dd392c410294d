#include "qcf/qasm.hpp"

#include "qcf/unitary.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace qcf {

namespace {

constexpr int kMaxDeclaredQubits = 8192;
constexpr int kMaxGateArity = 3;

struct Token {
  enum class Kind {
    Identifier,
    Integer,
    Real,
    String,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Plus,
    Minus,
    Star,
    Slash,
    Arrow,
    Eof,
  };

  Kind kind = Kind::Eof;
  std::string text;
  long int_value = 0;
  double real_value = 0.0;
  int line = 1;
  int col = 1;
};

const char* token_name(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::Identifier: return "identifier";
    case Token::Kind::Integer: return "integer";
    case Token::Kind::Real: return "real";
    case Token::Kind::String: return "string";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::LBracket: return "'['";
    case Token::Kind::RBracket: return "']'";
    case Token::Kind::LBrace: return "'{'";
    case Token::Kind::RBrace: return "'}'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Semicolon: return "';'";
    case Token::Kind::Plus: return "'+'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::Arrow: return "'->'";
    case Token::Kind::Eof: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token token;
    token.line = line_;
    token.col = col_;
    if (pos_ >= text_.size()) {
      token.kind = Token::Kind::Eof;
      return token;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return lex_identifier(token);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      return lex_number(token);
    }
    if (c == '"') {
      return lex_string(token);
    }
    advance();
    switch (c) {
      case '(': token.kind = Token::Kind::LParen; return token;
      case ')': token.kind = Token::Kind::RParen; return token;
      case '[': token.kind = Token::Kind::LBracket; return token;
      case ']': token.kind = Token::Kind::RBracket; return token;
      case '{': token.kind = Token::Kind::LBrace; return token;
      case '}': token.kind = Token::Kind::RBrace; return token;
      case ',': token.kind = Token::Kind::Comma; return token;
      case ';': token.kind = Token::Kind::Semicolon; return token;
      case '+': token.kind = Token::Kind::Plus; return token;
      case '*': token.kind = Token::Kind::Star; return token;
      case '/': token.kind = Token::Kind::Slash; return token;
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          advance();
          token.kind = Token::Kind::Arrow;
        } else {
          token.kind = Token::Kind::Minus;
        }
        return token;
      default:
        throw ParseError(token.line, token.col,
                         std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void advance() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex_identifier(Token& token) {
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      word.push_back(text_[pos_]);
      advance();
    }
    token.kind = Token::Kind::Identifier;
    token.text = std::move(word);
    return token;
  }

  Token lex_number(Token& token) {
    std::string digits;
    bool is_real = false;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      is_real = true;
      digits.push_back('.');
      advance();
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        advance();
      }
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      is_real = true;
      digits.push_back('e');
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        digits.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(token.line, token.col, "malformed number exponent");
      }
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        advance();
      }
    }
    token.text = digits;
    try {
      if (is_real) {
        token.kind = Token::Kind::Real;
        token.real_value = std::stod(digits);
      } else {
        token.kind = Token::Kind::Integer;
        token.int_value = std::stol(digits);
        token.real_value = static_cast<double>(token.int_value);
        if (token.int_value > std::numeric_limits<int>::max()) {
          throw std::out_of_range(digits);
        }
      }
    } catch (const std::out_of_range&) {
      throw ParseError(token.line, token.col,
                       "number literal out of range: " + digits);
    }
    return token;
  }

  Token lex_string(Token& token) {
    advance(); // opening quote
    std::string contents;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') {
        throw ParseError(token.line, token.col, "unterminated string literal");
      }
      contents.push_back(text_[pos_]);
      advance();
    }
    if (pos_ >= text_.size()) {
      throw ParseError(token.line, token.col, "unterminated string literal");
    }
    advance(); // closing quote
    token.kind = Token::Kind::String;
    token.text = std::move(contents);
    return token;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Register {
  int offset = 0;
  int size = 0;
};

// One gate-application operand: a whole register (indexed=false) or a single
// element of it.
struct Operand {
  int base = 0;
  int size = 1;
  bool indexed = true;
};

class Parser {
 public:
  explicit Parser(const std::string& text, std::string source_name)
      : lexer_(text) {
    circuit_.source_name = std::move(source_name);
    advance();
  }

  ParsedCircuit parse() {
    expect_keyword("OPENQASM");
    if (current_.kind != Token::Kind::Real || current_.text != "2.0") {
      fail("expected version 2.0 after OPENQASM");
    }
    advance();
    expect(Token::Kind::Semicolon);

    while (current_.kind != Token::Kind::Eof) {
      statement();
    }
    return std::move(circuit_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(current_.line, current_.col, message);
  }

  void advance() { current_ = lexer_.next(); }

  void expect(Token::Kind kind) {
    if (current_.kind != kind) {
      fail(std::string("expected ") + token_name(kind) + " but found " +
           token_name(current_.kind) +
           (current_.text.empty() ? "" : " '" + current_.text + "'"));
    }
    advance();
  }

  void expect_keyword(const std::string& word) {
    if (current_.kind != Token::Kind::Identifier || current_.text != word) {
      fail("expected '" + word + "'");
    }
    advance();
  }

  bool at_keyword(const std::string& word) const {
    return current_.kind == Token::Kind::Identifier && current_.text == word;
  }

  std::string take_identifier(const std::string& what) {
    if (current_.kind != Token::Kind::Identifier) {
      fail("expected " + what);
    }
    std::string name = current_.text;
    advance();
    return name;
  }

  int take_nonnegative_integer(const std::string& what) {
    if (current_.kind != Token::Kind::Integer) {
      fail("expected " + what);
    }
    const long value = current_.int_value;
    advance();
    return static_cast<int>(value);
  }

  void statement() {
    if (at_keyword("include")) {
      include_statement();
    } else if (at_keyword("qreg")) {
      register_declaration(/*quantum=*/true);
    } else if (at_keyword("creg")) {
      register_declaration(/*quantum=*/false);
    } else if (at_keyword("gate")) {
      gate_declaration();
    } else if (at_keyword("barrier")) {
      barrier_statement();
    } else if (at_keyword("measure")) {
      measure_statement();
    } else if (at_keyword("reset")) {
      reset_statement();
    } else if (current_.kind == Token::Kind::Identifier) {
      gate_application();
    } else {
      fail(std::string("unexpected ") + token_name(current_.kind) +
           " at start of statement");
    }
  }

  void include_statement() {
    advance();
    if (current_.kind != Token::Kind::String) {
      fail("expected file name string after include");
    }
    if (current_.text != "qelib1.inc") {
      fail("unsupported include \"" + current_.text +
           "\" (only qelib1.inc is available)");
    }
    advance();
    expect(Token::Kind::Semicolon);
  }

  void register_declaration(bool quantum) {
    advance();
    const std::string name = take_identifier("register name");
    if (qregs_.count(name) || cregs_.count(name)) {
      fail("register '" + name + "' already declared");
    }
    expect(Token::Kind::LBracket);
    const int size = take_nonnegative_integer("register size");
    if (size <= 0) {
      fail("register size must be positive");
    }
    expect(Token::Kind::RBracket);
    expect(Token::Kind::Semicolon);
    if (quantum) {
      if (circuit_.num_qubits + size > kMaxDeclaredQubits) {
        fail("total declared qubits exceed supported maximum of " +
             std::to_string(kMaxDeclaredQubits));
      }
      qregs_[name] = Register{circuit_.num_qubits, size};
      circuit_.num_qubits += size;
    } else {
      cregs_[name] = Register{num_clbits_, size};
      num_clbits_ += size;
    }
  }

  // --- parameter expressions ---------------------------------------------
  //
  // Inside gate bodies identifiers resolve to formal parameters; at circuit
  // scope any identifier other than pi is rejected.

  ParamExpr expression(const std::vector<std::string>* formals) {
    ParamExpr lhs = term(formals);
    while (current_.kind == Token::Kind::Plus ||
           current_.kind == Token::Kind::Minus) {
      const auto op = current_.kind == Token::Kind::Plus
                          ? ParamExpr::Kind::Add
                          : ParamExpr::Kind::Sub;
      advance();
      lhs = ParamExpr::binary(op, std::move(lhs), term(formals));
    }
    return lhs;
  }

  ParamExpr term(const std::vector<std::string>* formals) {
    ParamExpr lhs = factor(formals);
    while (current_.kind == Token::Kind::Star ||
           current_.kind == Token::Kind::Slash) {
      const auto op = current_.kind == Token::Kind::Star
                          ? ParamExpr::Kind::Mul
                          : ParamExpr::Kind::Div;
      advance();
      lhs = ParamExpr::binary(op, std::move(lhs), factor(formals));
    }
    return lhs;
  }

  ParamExpr factor(const std::vector<std::string>* formals) {
    if (current_.kind == Token::Kind::Minus) {
      advance();
      return ParamExpr::unary(ParamExpr::Kind::Negate, factor(formals));
    }
    if (current_.kind == Token::Kind::Integer ||
        current_.kind == Token::Kind::Real) {
      ParamExpr e = ParamExpr::constant(current_.real_value);
      advance();
      return e;
    }
    if (current_.kind == Token::Kind::LParen) {
      advance();
      ParamExpr e = expression(formals);
      expect(Token::Kind::RParen);
      return e;
    }
    if (current_.kind == Token::Kind::Identifier) {
      if (current_.text == "pi") {
        advance();
        return ParamExpr::constant(std::numbers::pi);
      }
      if (formals) {
        for (std::size_t i = 0; i < formals->size(); ++i) {
          if ((*formals)[i] == current_.text) {
            advance();
            return ParamExpr::formal(static_cast<int>(i));
          }
        }
      }
      fail("unsupported parameter expression: unknown symbol '" +
           current_.text + "'");
    }
    fail("unsupported parameter expression");
  }

  std::vector<ParamExpr> expression_list(const std::vector<std::string>* formals) {
    std::vector<ParamExpr> list;
    list.push_back(expression(formals));
    while (current_.kind == Token::Kind::Comma) {
      advance();
      list.push_back(expression(formals));
    }
    return list;
  }

  std::vector<double> folded_expression_list() {
    std::vector<double> values;
    for (const ParamExpr& e : expression_list(nullptr)) {
      values.push_back(e.evaluate({}));
    }
    return values;
  }

  // --- operands ------------------------------------------------------------

  Operand quantum_operand() {
    const Token at = current_;
    const std::string name = take_identifier("quantum register operand");
    auto it = qregs_.find(name);
    if (it == qregs_.end()) {
      throw ParseError(at.line, at.col,
                       "undeclared register '" + name + "'");
    }
    Operand op;
    if (current_.kind == Token::Kind::LBracket) {
      advance();
      const Token index_token = current_;
      const int index = take_nonnegative_integer("qubit index");
      expect(Token::Kind::RBracket);
      if (index >= it->second.size) {
        throw ParseError(index_token.line, index_token.col,
                         "qubit index " + std::to_string(index) +
                             " out of bounds for register '" + name +
                             "' of size " + std::to_string(it->second.size));
      }
      op.base = it->second.offset + index;
      op.size = 1;
      op.indexed = true;
    } else {
      op.base = it->second.offset;
      op.size = it->second.size;
      op.indexed = false;
    }
    return op;
  }

  void classical_operand() {
    const Token at = current_;
    const std::string name = take_identifier("classical register operand");
    auto it = cregs_.find(name);
    if (it == cregs_.end()) {
      throw ParseError(at.line, at.col,
                       "undeclared register '" + name + "'");
    }
    if (current_.kind == Token::Kind::LBracket) {
      advance();
      const Token index_token = current_;
      const int index = take_nonnegative_integer("bit index");
      expect(Token::Kind::RBracket);
      if (index >= it->second.size) {
        throw ParseError(index_token.line, index_token.col,
                         "bit index " + std::to_string(index) +
                             " out of bounds for register '" + name + "'");
      }
    }
  }

  std::vector<Operand> operand_list() {
    std::vector<Operand> list;
    list.push_back(quantum_operand());
    while (current_.kind == Token::Kind::Comma) {
      advance();
      list.push_back(quantum_operand());
    }
    return list;
  }

  // --- dropped statements ----------------------------------------------

  void barrier_statement() {
    advance();
    operand_list();
    expect(Token::Kind::Semicolon);
  }

  void measure_statement() {
    advance();
    quantum_operand();
    expect(Token::Kind::Arrow);
    classical_operand();
    expect(Token::Kind::Semicolon);
  }

  void reset_statement() {
    advance();
    quantum_operand();
    expect(Token::Kind::Semicolon);
  }

  // --- gate application --------------------------------------------------

  void gate_application() {
    const Token at = current_;
    const std::string name = to_lower(take_identifier("gate name"));

    const bool standard = is_standard_gate(name);
    const bool custom = circuit_.definitions.count(name) > 0;
    if (!standard && !custom) {
      throw ParseError(at.line, at.col, "undeclared gate '" + name + "'");
    }

    std::vector<double> params;
    if (current_.kind == Token::Kind::LParen) {
      advance();
      if (current_.kind != Token::Kind::RParen) {
        params = folded_expression_list();
      }
      expect(Token::Kind::RParen);
    }
    const std::size_t expected_params =
        standard ? static_cast<std::size_t>(standard_gate_param_count(name))
                 : circuit_.definitions[name].formal_params.size();
    if (params.size() != expected_params) {
      throw ParseError(at.line, at.col,
                       "gate '" + name + "' expects " +
                           std::to_string(expected_params) +
                           " parameter(s), got " +
                           std::to_string(params.size()));
    }

    const std::vector<Operand> operands = operand_list();
    expect(Token::Kind::Semicolon);

    const std::size_t expected_arity =
        standard ? static_cast<std::size_t>(standard_gate_arity(name))
                 : circuit_.definitions[name].formal_qubits.size();
    if (operands.size() != expected_arity) {
      throw ParseError(at.line, at.col,
                       "gate '" + name + "' expects " +
                           std::to_string(expected_arity) +
                           " qubit operand(s), got " +
                           std::to_string(operands.size()));
    }
    if (operands.size() > static_cast<std::size_t>(kMaxGateArity)) {
      throw ParseError(at.line, at.col,
                       "gate arity " + std::to_string(operands.size()) +
                           " exceeds the supported maximum of " +
                           std::to_string(kMaxGateArity));
    }

    // Whole-register operands broadcast element-wise; mixed forms require
    // equal register sizes.
    int broadcast = 1;
    for (const Operand& op : operands) {
      if (!op.indexed) {
        if (broadcast != 1 && op.size != broadcast) {
          throw ParseError(at.line, at.col,
                           "mismatched register sizes in broadcast");
        }
        broadcast = op.size;
      }
    }
    for (int rep = 0; rep < broadcast; ++rep) {
      Instruction instruction;
      instruction.name = name;
      instruction.params = params;
      for (const Operand& op : operands) {
        instruction.qubits.push_back(op.indexed ? op.base : op.base + rep);
      }
      std::set<int> distinct(instruction.qubits.begin(),
                             instruction.qubits.end());
      if (distinct.size() != instruction.qubits.size()) {
        throw ParseError(at.line, at.col,
                         "duplicate qubit operand in gate '" + name + "'");
      }
      circuit_.instructions.push_back(std::move(instruction));
    }
  }

  // --- gate declarations ---------------------------------------------------

  void gate_declaration() {
    advance();
    const Token at = current_;
    GateDefinition defn;
    defn.name = to_lower(take_identifier("gate name"));
    if (is_standard_gate(defn.name)) {
      throw ParseError(at.line, at.col,
                       "gate '" + defn.name + "' collides with a built-in gate");
    }
    if (circuit_.definitions.count(defn.name)) {
      throw ParseError(at.line, at.col,
                       "gate '" + defn.name + "' already defined");
    }

    if (current_.kind == Token::Kind::LParen) {
      advance();
      if (current_.kind != Token::Kind::RParen) {
        defn.formal_params.push_back(take_identifier("formal parameter"));
        while (current_.kind == Token::Kind::Comma) {
          advance();
          defn.formal_params.push_back(take_identifier("formal parameter"));
        }
      }
      expect(Token::Kind::RParen);
    }
    defn.formal_qubits.push_back(take_identifier("formal qubit"));
    while (current_.kind == Token::Kind::Comma) {
      advance();
      defn.formal_qubits.push_back(take_identifier("formal qubit"));
    }
    expect(Token::Kind::LBrace);

    while (current_.kind != Token::Kind::RBrace) {
      if (at_keyword("barrier")) {
        advance();
        take_identifier("formal qubit");
        while (current_.kind == Token::Kind::Comma) {
          advance();
          take_identifier("formal qubit");
        }
        expect(Token::Kind::Semicolon);
        continue;
      }
      body_instruction(defn);
    }
    expect(Token::Kind::RBrace);
    circuit_.definitions[defn.name] = std::move(defn);
  }

  void body_instruction(GateDefinition& defn) {
    const Token at = current_;
    BodyInstruction body;
    body.name = to_lower(take_identifier("gate name"));
    const bool standard = is_standard_gate(body.name);
    if (!standard && !circuit_.definitions.count(body.name)) {
      throw ParseError(at.line, at.col,
                       "undeclared gate '" + body.name + "' in gate body");
    }

    if (current_.kind == Token::Kind::LParen) {
      advance();
      if (current_.kind != Token::Kind::RParen) {
        body.params = expression_list(&defn.formal_params);
      }
      expect(Token::Kind::RParen);
    }
    const std::size_t expected_params =
        standard
            ? static_cast<std::size_t>(standard_gate_param_count(body.name))
            : circuit_.definitions[body.name].formal_params.size();
    if (body.params.size() != expected_params) {
      throw ParseError(at.line, at.col,
                       "gate '" + body.name + "' expects " +
                           std::to_string(expected_params) +
                           " parameter(s), got " +
                           std::to_string(body.params.size()));
    }

    auto formal_qubit_index = [&](const Token& where,
                                  const std::string& symbol) {
      for (std::size_t i = 0; i < defn.formal_qubits.size(); ++i) {
        if (defn.formal_qubits[i] == symbol) return static_cast<int>(i);
      }
      throw ParseError(where.line, where.col,
                       "undeclared formal qubit '" + symbol + "' in gate '" +
                           defn.name + "'");
    };
    const Token first = current_;
    body.formal_qubit_indices.push_back(
        formal_qubit_index(first, take_identifier("formal qubit")));
    while (current_.kind == Token::Kind::Comma) {
      advance();
      const Token where = current_;
      body.formal_qubit_indices.push_back(
          formal_qubit_index(where, take_identifier("formal qubit")));
    }
    expect(Token::Kind::Semicolon);

    const std::size_t expected_arity =
        standard ? static_cast<std::size_t>(standard_gate_arity(body.name))
                 : circuit_.definitions[body.name].formal_qubits.size();
    if (body.formal_qubit_indices.size() != expected_arity) {
      throw ParseError(at.line, at.col,
                       "gate '" + body.name + "' expects " +
                           std::to_string(expected_arity) +
                           " qubit operand(s), got " +
                           std::to_string(body.formal_qubit_indices.size()));
    }
    std::set<int> distinct(body.formal_qubit_indices.begin(),
                           body.formal_qubit_indices.end());
    if (distinct.size() != body.formal_qubit_indices.size()) {
      throw ParseError(at.line, at.col,
                       "duplicate qubit operand in gate body");
    }
    defn.body.push_back(std::move(body));
  }

  Lexer lexer_;
  Token current_;
  ParsedCircuit circuit_;
  std::map<std::string, Register> qregs_;
  std::map<std::string, Register> cregs_;
  int num_clbits_ = 0;
};

void inline_into(const GateDefinition& defn, const std::vector<double>& params,
                 const std::vector<int>& qubits,
                 const GateDefinitionTable& table,
                 std::set<std::string>& active,
                 std::vector<Instruction>& out) {
  if (params.size() != defn.formal_params.size()) {
    throw std::invalid_argument("inline of gate '" + defn.name +
                                "': parameter arity mismatch");
  }
  if (qubits.size() != defn.formal_qubits.size()) {
    throw std::invalid_argument("inline of gate '" + defn.name +
                                "': qubit arity mismatch");
  }
  if (!active.insert(defn.name).second) {
    throw std::invalid_argument("recursive gate definition cycle through '" +
                                defn.name + "'");
  }

  for (const BodyInstruction& body : defn.body) {
    std::vector<int> actual_qubits;
    actual_qubits.reserve(body.formal_qubit_indices.size());
    for (int idx : body.formal_qubit_indices) {
      actual_qubits.push_back(qubits[static_cast<std::size_t>(idx)]);
    }
    std::set<int> distinct(actual_qubits.begin(), actual_qubits.end());
    if (distinct.size() != actual_qubits.size()) {
      throw std::invalid_argument("inline of gate '" + defn.name +
                                  "': duplicate actual qubit");
    }
    std::vector<double> actual_params;
    actual_params.reserve(body.params.size());
    for (const ParamExpr& e : body.params) {
      actual_params.push_back(e.evaluate(params));
    }
    if (is_standard_gate(body.name)) {
      out.emplace_back(body.name, std::move(actual_qubits),
                       std::move(actual_params));
    } else {
      auto it = table.find(body.name);
      if (it == table.end()) {
        throw std::invalid_argument("undeclared gate '" + body.name +
                                    "' referenced by '" + defn.name + "'");
      }
      inline_into(it->second, actual_params, actual_qubits, table, active,
                  out);
    }
  }
  active.erase(defn.name);
}

} // namespace

ParsedCircuit parse_qasm(const std::string& text,
                         const std::string& source_name) {
  Parser parser(text, source_name);
  return parser.parse();
}

ParsedCircuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open QASM file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_qasm(buffer.str(), path);
}

std::map<int, int> parse_layout_sidecar(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("layout sidecar JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("layout sidecar: expected a JSON object");
  }
  std::map<int, int> layout;
  std::set<int> used_physical;
  for (const auto& [key, value] : j.items()) {
    int logical = 0;
    try {
      std::size_t consumed = 0;
      logical = std::stoi(key, &consumed);
      if (consumed != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("layout sidecar: key '" + key +
                                  "' is not an integer");
    }
    if (logical < 0) {
      throw std::invalid_argument("layout sidecar: negative logical index");
    }
    if (!value.is_number_integer()) {
      throw std::invalid_argument("layout sidecar: value for key '" + key +
                                  "' is not an integer");
    }
    const int physical = value.get<int>();
    if (physical < 0) {
      throw std::invalid_argument("layout sidecar: negative physical index");
    }
    if (!used_physical.insert(physical).second) {
      throw std::invalid_argument(
          "layout sidecar: duplicate physical index " +
          std::to_string(physical));
    }
    layout[logical] = physical;
  }
  return layout;
}

std::map<int, int> load_layout_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open layout file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_layout_sidecar(buffer.str());
}

std::vector<Instruction> inline_definition(const GateDefinition& defn,
                                           const std::vector<double>& params,
                                           const std::vector<int>& qubits,
                                           const GateDefinitionTable& table) {
  std::vector<Instruction> out;
  std::set<std::string> active;
  inline_into(defn, params, qubits, table, active, out);
  return out;
}

} // namespace qcf
