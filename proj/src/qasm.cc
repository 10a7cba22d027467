// Copyright 2026 The HQA Estimator Authors
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

#include "hqa/qasm.h"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "hqa/error.h"

namespace hqa {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::T:
            return "t";
        case GateKind::Tdg:
            return "tdg";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::CX:
            return "cx";
        case GateKind::CZ:
            return "cz";
        case GateKind::MeasureZ:
            return "measure";
    }
    return "?";
}

void Circuit::validate() const {
    for (size_t i = 0; i < ops.size(); i++) {
        const auto &op = ops[i];
        size_t arity = (op.kind == GateKind::CX || op.kind == GateKind::CZ) ? 2 : 1;
        if (op.qubits.size() != arity) {
            throw InputError("op " + std::to_string(i) + ": wrong operand count for " + std::string(gate_name(op.kind)));
        }
        for (Qubit q : op.qubits) {
            if (q >= n_qubits) {
                throw InputError("op " + std::to_string(i) + ": qubit " + std::to_string(q) + " out of range");
            }
        }
        if (arity == 2 && op.qubits[0] == op.qubits[1]) {
            throw InputError("op " + std::to_string(i) + ": two-qubit gate with repeated operand");
        }
    }
}

size_t Circuit::t_count() const {
    size_t n = 0;
    for (const auto &op : ops) {
        if (op.kind == GateKind::T || op.kind == GateKind::Tdg) {
            n++;
        }
    }
    return n;
}

namespace {

enum class Tok { Ident, Int, Real, String, Symbol, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
   public:
    Lexer(std::string_view src, std::string_view name) : src_(src), name_(name) {
    }

    [[noreturn]] void fail(int line, int col, const std::string &msg) const {
        std::ostringstream out;
        out << name_ << ":" << line << ":" << col << ": " << msg;
        throw InputError(out.str());
    }

    Token next() {
        skip_space();
        int line = line_;
        int col = col_;
        if (pos_ >= src_.size()) {
            return {Tok::End, "", line, col};
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += advance();
            }
            return {Tok::Ident, s, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::string s;
            bool real = false;
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    s += advance();
                } else if (d == '.' || d == 'e' || d == 'E') {
                    real = true;
                    s += advance();
                    if ((d == 'e' || d == 'E') && pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                        s += advance();
                    }
                } else {
                    break;
                }
            }
            return {real ? Tok::Real : Tok::Int, s, line, col};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                s += advance();
            }
            if (pos_ >= src_.size()) {
                fail(line, col, "unterminated string");
            }
            advance();
            return {Tok::String, s, line, col};
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            return {Tok::Arrow, "->", line, col};
        }
        if (std::string_view("[](){};,+-*/^").find(c) != std::string_view::npos) {
            advance();
            return {Tok::Symbol, std::string(1, c), line, col};
        }
        fail(line, col, std::string("unexpected character '") + c + "'");
    }

   private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::string_view name_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::optional<GateKind> lookup_gate(const std::string &name) {
    static const std::pair<const char *, GateKind> table[] = {
        {"h", GateKind::H},   {"s", GateKind::S},   {"sdg", GateKind::Sdg}, {"t", GateKind::T},
        {"tdg", GateKind::Tdg}, {"x", GateKind::X}, {"y", GateKind::Y},     {"z", GateKind::Z},
        {"cx", GateKind::CX}, {"CX", GateKind::CX}, {"cz", GateKind::CZ},
    };
    for (const auto &[key, kind] : table) {
        if (name == key) {
            return kind;
        }
    }
    return std::nullopt;
}

class Parser {
   public:
    Parser(std::string_view src, std::string_view name) : lex_(src, name) {
        tok_ = lex_.next();
    }

    Circuit parse() {
        if (is_ident("OPENQASM")) {
            next();
            if (tok_.kind != Tok::Real && tok_.kind != Tok::Int) {
                fail("expected version number after OPENQASM");
            }
            if (tok_.text.rfind("2", 0) != 0) {
                fail("only OpenQASM 2.x is supported (got " + tok_.text + ")");
            }
            next();
            expect_symbol(";");
        }
        while (tok_.kind != Tok::End) {
            statement();
        }
        if (!qreg_) {
            fail("no qreg declared");
        }
        return std::move(circuit_);
    }

   private:
    struct Operand {
        std::optional<Qubit> index;  // nullopt: whole register
        int line;
        int col;
    };

    [[noreturn]] void fail(const std::string &msg) const {
        lex_.fail(tok_.line, tok_.col, msg);
    }

    void next() {
        tok_ = lex_.next();
    }

    bool is_ident(const char *text) const {
        return tok_.kind == Tok::Ident && tok_.text == text;
    }

    bool is_symbol(const char *text) const {
        return tok_.kind == Tok::Symbol && tok_.text == text;
    }

    void expect_symbol(const char *text) {
        if (!is_symbol(text)) {
            fail(std::string("expected '") + text + "'" + (tok_.kind == Tok::End ? " before end of input" : ", found '" + tok_.text + "'"));
        }
        next();
    }

    std::string expect_ident() {
        if (tok_.kind != Tok::Ident) {
            fail("expected identifier");
        }
        std::string s = tok_.text;
        next();
        return s;
    }

    uint32_t expect_int() {
        if (tok_.kind != Tok::Int) {
            fail("expected integer");
        }
        unsigned long v = std::stoul(tok_.text);
        next();
        return static_cast<uint32_t>(v);
    }

    void statement() {
        if (tok_.kind != Tok::Ident) {
            fail("expected statement, found '" + tok_.text + "'");
        }
        Token head = tok_;
        const std::string &word = head.text;
        if (word == "include") {
            next();
            if (tok_.kind != Tok::String) {
                fail("expected file name after include");
            }
            next();
            expect_symbol(";");
        } else if (word == "qreg") {
            next();
            if (qreg_) {
                lex_.fail(head.line, head.col, "multiple qregs are not supported (already declared '" + *qreg_ + "')");
            }
            qreg_ = expect_ident();
            expect_symbol("[");
            circuit_.n_qubits = expect_int();
            expect_symbol("]");
            expect_symbol(";");
        } else if (word == "creg") {
            next();
            cregs_.push_back(expect_ident());
            expect_symbol("[");
            expect_int();
            expect_symbol("]");
            expect_symbol(";");
        } else if (word == "barrier") {
            next();
            operand_list();
            expect_symbol(";");
        } else if (word == "measure") {
            next();
            auto q = operand();
            if (tok_.kind != Tok::Arrow) {
                fail("expected '->' in measure");
            }
            next();
            classical_operand();
            expect_symbol(";");
            emit(GateKind::MeasureZ, {q});
        } else if (word == "gate" || word == "opaque" || word == "if" || word == "reset" || word == "U" ||
                   word == "u1" || word == "u2" || word == "u3") {
            lex_.fail(head.line, head.col, "unsupported " + std::string(word == "gate" || word == "opaque" || word == "if" || word == "reset" ? "statement" : "gate") + " " + word);
        } else {
            auto kind = lookup_gate(word);
            next();
            if (!kind || is_symbol("(")) {
                lex_.fail(head.line, head.col, "unsupported gate " + word);
            }
            auto ops = operand_list();
            expect_symbol(";");
            emit(*kind, ops);
        }
    }

    Operand operand() {
        Operand out{std::nullopt, tok_.line, tok_.col};
        std::string reg = expect_ident();
        if (!qreg_ || reg != *qreg_) {
            lex_.fail(out.line, out.col, "unknown quantum register '" + reg + "'");
        }
        if (is_symbol("[")) {
            next();
            out.index = expect_int();
            expect_symbol("]");
            if (*out.index >= circuit_.n_qubits) {
                lex_.fail(out.line, out.col, "qubit index " + std::to_string(*out.index) + " out of range for " + reg + "[" + std::to_string(circuit_.n_qubits) + "]");
            }
        }
        return out;
    }

    void classical_operand() {
        expect_ident();
        if (is_symbol("[")) {
            next();
            expect_int();
            expect_symbol("]");
        }
    }

    std::vector<Operand> operand_list() {
        std::vector<Operand> out{operand()};
        while (is_symbol(",")) {
            next();
            out.push_back(operand());
        }
        return out;
    }

    void emit(GateKind kind, const std::vector<Operand> &operands) {
        size_t arity = (kind == GateKind::CX || kind == GateKind::CZ) ? 2 : 1;
        if (operands.size() != arity) {
            lex_.fail(operands.front().line, operands.front().col,
                      std::string(gate_name(kind)) + " expects " + std::to_string(arity) + " operand(s)");
        }
        bool broadcast = false;
        for (const auto &o : operands) {
            broadcast = broadcast || !o.index;
        }
        uint32_t reps = broadcast ? circuit_.n_qubits : 1;
        for (uint32_t k = 0; k < reps; k++) {
            Op op{kind, {}};
            for (const auto &o : operands) {
                op.qubits.push_back(o.index ? *o.index : k);
            }
            if (arity == 2 && op.qubits[0] == op.qubits[1]) {
                lex_.fail(operands.front().line, operands.front().col, "two-qubit gate with repeated operand");
            }
            record(op, operands.front());
            circuit_.ops.push_back(std::move(op));
        }
    }

    void record(const Op &op, const Operand &where) {
        if (measured_.size() < circuit_.n_qubits) {
            measured_.resize(circuit_.n_qubits, false);
        }
        for (Qubit q : op.qubits) {
            if (measured_[q] && op.kind != GateKind::MeasureZ) {
                lex_.fail(where.line, where.col, "gate " + std::string(gate_name(op.kind)) + " after measurement of qubit " + std::to_string(q) + " is not supported");
            }
        }
        if (op.kind == GateKind::MeasureZ) {
            measured_[op.qubits[0]] = true;
        }
    }

    Lexer lex_;
    Token tok_;
    Circuit circuit_;
    std::optional<std::string> qreg_;
    std::vector<std::string> cregs_;
    std::vector<bool> measured_;
};

}  // namespace

Circuit parse_qasm(std::string_view source, std::string_view source_name) {
    return Parser(source, source_name).parse();
}

Circuit read_qasm_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open QASM file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_qasm(buf.str(), path);
}

}  // namespace hqa
