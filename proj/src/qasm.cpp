// Copyright 2026 The weaksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weaksim/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "weaksim/errors.hpp"

namespace weaksim {

namespace {

struct QasmGate {
    std::string_view name;
    GateType type;
};

constexpr QasmGate kQasmGates[] = {
    {"h", GateType::H},       {"x", GateType::X},     {"y", GateType::Y},     {"z", GateType::Z},
    {"s", GateType::S},       {"sdg", GateType::Sdg}, {"t", GateType::T},     {"tdg", GateType::Tdg},
    {"rx", GateType::Rx},     {"ry", GateType::Ry},   {"rz", GateType::Rz},   {"cx", GateType::Cnot},
    {"cz", GateType::Cz},     {"swap", GateType::Swap},
};

std::optional<GateType> lookup_gate(std::string_view name) {
    for (const auto &g : kQasmGates) {
        if (g.name == name) {
            return g.type;
        }
    }
    return std::nullopt;
}

std::string_view qasm_name(GateType type) {
    for (const auto &g : kQasmGates) {
        if (g.type == type) {
            return g.name;
        }
    }
    return {};
}

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) {
                ++j;
            }
            if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
                    ++k;
                }
                if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    j = k;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                        ++j;
                    }
                }
            }
            out.push_back({Tok::Number, std::string(text.substr(i, j - i)), line});
            i = j;
        } else if (c == '"') {
            std::size_t j = text.find('"', i + 1);
            if (j == std::string_view::npos) {
                throw ParseError(line, std::string(text.substr(i)), "unterminated string");
            }
            out.push_back({Tok::String, std::string(text.substr(i + 1, j - i - 1)), line});
            i = j + 1;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Symbol, "->", line});
            i += 2;
        } else if (std::string_view("()[],;+-*/^").find(c) != std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, c), line});
            ++i;
        } else {
            throw ParseError(line, std::string(1, c), "unexpected character");
        }
    }
    out.push_back({Tok::End, "<end of input>", line});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {
    }

    Circuit run() {
        while (peek().kind != Tok::End) {
            statement();
        }
        if (!register_size_) {
            throw ParseError(peek().line, peek().text, "no qreg declared");
        }
        return build();
    }

  private:
    struct RawOp {
        GateOp op;
        std::size_t line;
    };

    const Token &peek() const {
        return toks_[pos_];
    }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }
    bool accept(std::string_view symbol) {
        if (peek().kind == Tok::Symbol && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view symbol) {
        if (!accept(symbol)) {
            throw ParseError(peek().line, peek().text, "expected '" + std::string(symbol) + "'");
        }
    }
    std::string expect_ident() {
        if (peek().kind != Tok::Ident) {
            throw ParseError(peek().line, peek().text, "expected identifier");
        }
        return next().text;
    }
    std::size_t expect_uint() {
        const Token &t = peek();
        if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(t.line, t.text, "expected non-negative integer");
        }
        next();
        return static_cast<std::size_t>(std::stoull(t.text));
    }
    void skip_statement() {
        while (peek().kind != Tok::End && !(peek().kind == Tok::Symbol && peek().text == ";")) {
            next();
        }
        expect(";");
    }

    void statement() {
        const Token head = next();
        if (head.kind != Tok::Ident) {
            throw ParseError(head.line, head.text, "expected a statement");
        }
        if (head.text == "OPENQASM") {
            if (peek().kind != Tok::Number) {
                throw ParseError(peek().line, peek().text, "expected version number");
            }
            next();
            expect(";");
        } else if (head.text == "include") {
            if (peek().kind != Tok::String) {
                throw ParseError(peek().line, peek().text, "expected file name");
            }
            next();
            expect(";");
        } else if (head.text == "qreg") {
            if (register_size_) {
                throw ParseError(head.line, head.text, "only one quantum register is supported");
            }
            register_name_ = expect_ident();
            expect("[");
            register_size_ = expect_uint();
            expect("]");
            expect(";");
            if (*register_size_ == 0) {
                throw ParseError(head.line, register_name_, "quantum register must be non-empty");
            }
        } else if (head.text == "creg" || head.text == "barrier") {
            skip_statement();
        } else if (head.text == "measure") {
            measure(head);
        } else {
            gate(head);
        }
    }

    /// Returns the qubits named by `q[i]` or the whole register for `q`.
    std::vector<std::uint32_t> qubit_arg() {
        const Token name = peek();
        std::string id = expect_ident();
        if (!register_size_) {
            throw ParseError(name.line, id, "qubit used before qreg declaration");
        }
        if (id != register_name_) {
            throw ParseError(name.line, id, "unknown quantum register");
        }
        if (accept("[")) {
            const Token idx = peek();
            std::size_t q = expect_uint();
            expect("]");
            if (q >= *register_size_) {
                throw ParseError(idx.line, idx.text, "qubit index out of range");
            }
            return {static_cast<std::uint32_t>(q)};
        }
        std::vector<std::uint32_t> all(*register_size_);
        for (std::uint32_t q = 0; q < all.size(); ++q) {
            all[q] = q;
        }
        return all;
    }

    void measure(const Token &head) {
        auto qubits = qubit_arg();
        expect("->");
        expect_ident();
        if (accept("[")) {
            expect_uint();
            expect("]");
        }
        expect(";");
        for (auto q : qubits) {
            raw_.push_back({make_op(GateType::Measure, {q}), head.line});
        }
    }

    void gate(const Token &head) {
        auto type = lookup_gate(head.text);
        if (!type) {
            throw ParseError(head.line, head.text, "unsupported gate");
        }
        std::optional<double> angle;
        if (accept("(")) {
            angle = expression();
            expect(")");
        }
        const bool rotation = *type == GateType::Rx || *type == GateType::Ry || *type == GateType::Rz;
        if (rotation != angle.has_value()) {
            throw ParseError(head.line, head.text, rotation ? "rotation needs an angle" : "gate takes no parameters");
        }
        std::vector<std::vector<std::uint32_t>> args;
        args.push_back(qubit_arg());
        while (accept(",")) {
            args.push_back(qubit_arg());
        }
        expect(";");

        GateKind kind = GateKind::simple(GateType::H);
        switch (*type) {
            case GateType::Rx:
                kind = GateKind::rx(*angle);
                break;
            case GateType::Ry:
                kind = GateKind::ry(*angle);
                break;
            case GateType::Rz:
                kind = GateKind::rz(*angle);
                break;
            default:
                kind = GateKind::simple(*type);
        }
        if (kind.arity() == 1) {
            if (args.size() != 1) {
                throw ParseError(head.line, head.text, "single-qubit gate takes one argument");
            }
            for (auto q : args[0]) {
                raw_.push_back({make_op(kind, {q}), head.line});
            }
            return;
        }
        if (args.size() != 2 || args[0].size() != 1 || args[1].size() != 1) {
            throw ParseError(head.line, head.text, "two-qubit gate takes two indexed qubits");
        }
        if (args[0][0] == args[1][0]) {
            throw ParseError(head.line, head.text, "two-qubit gate on a repeated qubit");
        }
        raw_.push_back({make_op(kind, {args[0][0], args[1][0]}), head.line});
    }

    double expression() {
        double value = term();
        while (true) {
            if (accept("+")) {
                value += term();
            } else if (accept("-")) {
                value -= term();
            } else {
                return value;
            }
        }
    }
    double term() {
        double value = factor();
        while (true) {
            if (accept("*")) {
                value *= factor();
            } else if (accept("/")) {
                value /= factor();
            } else {
                return value;
            }
        }
    }
    double factor() {
        if (accept("-")) {
            return -factor();
        }
        if (accept("+")) {
            return factor();
        }
        double base = primary();
        if (accept("^")) {
            return std::pow(base, factor());
        }
        return base;
    }
    double primary() {
        const Token &t = peek();
        if (accept("(")) {
            double v = expression();
            expect(")");
            return v;
        }
        if (t.kind == Tok::Number) {
            next();
            char *end = nullptr;
            double v = std::strtod(t.text.c_str(), &end);
            if (end != t.text.c_str() + t.text.size()) {
                throw ParseError(t.line, t.text, "malformed number");
            }
            return v;
        }
        if (t.kind == Tok::Ident && t.text == "pi") {
            next();
            return std::numbers::pi;
        }
        throw ParseError(t.line, t.text, "expected an angle expression");
    }

    Circuit build() {
        Circuit circuit(*register_size_);
        std::size_t tail = raw_.size();
        while (tail > 0 && raw_[tail - 1].op.kind.type() == GateType::Measure) {
            --tail;
        }
        for (std::size_t k = 0; k < tail; ++k) {
            circuit.append(raw_[k].op);
        }
        if (tail < raw_.size()) {
            std::vector<std::uint32_t> measured;
            for (std::size_t k = tail; k < raw_.size(); ++k) {
                auto q = raw_[k].op.qubits[0];
                if (std::find(measured.begin(), measured.end(), q) != measured.end()) {
                    throw ParseError(raw_[k].line, "measure", "qubit measured twice in the final block");
                }
                measured.push_back(q);
            }
            circuit.append(GateType::Measure, std::move(measured));
        }
        return circuit;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string register_name_;
    std::optional<std::size_t> register_size_;
    std::vector<RawOp> raw_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
    return Parser(tokenize(text)).run();
}

std::string emit_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.n_qubits() << "];\n";
    const bool measures = std::any_of(circuit.ops().begin(), circuit.ops().end(),
                                      [](const GateOp &op) { return op.kind.type() == GateType::Measure; });
    if (measures) {
        out << "creg c[" << circuit.n_qubits() << "];\n";
    }
    for (const auto &op : circuit.ops()) {
        const GateType type = op.kind.type();
        if (type == GateType::Measure) {
            for (auto q : op.qubits) {
                out << "measure q[" << q << "] -> c[" << q << "];\n";
            }
            continue;
        }
        std::string_view name = qasm_name(type);
        if (name.empty()) {
            throw UnsupportedExport(std::string(gate_type_name(type)) + " cannot be written as OpenQASM 2.0");
        }
        out << name;
        if (op.kind.is_rotation()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", op.kind.param());
            out << '(' << buf << ')';
        }
        for (std::size_t k = 0; k < op.qubits.size(); ++k) {
            out << (k == 0 ? " " : ",") << "q[" << op.qubits[k] << ']';
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace weaksim
