// Copyright 2026 The qarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qarith/tools/qasm.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "qarith/errors.hpp"
#include "qarith/stdgates.hpp"

namespace qarith::tools {

namespace {

constexpr std::string_view kHeader =
    "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[";

std::string operand_list(const Gate& g) {
  std::string s;
  for (QubitId q : g.operands()) {
    if (!s.empty()) s += ',';
    s += std::to_string(q.index);
  }
  return s;
}

void emit_gate(std::ostringstream& os, const Gate& g) {
  os << to_string(g.kind());
  const auto ops = g.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    os << (i == 0 ? " " : ",") << "q[" << ops[i].index << ']';
  }
  os << ";\n";
}

void emit_group(std::ostringstream& os, const Gate& g) {
  const auto ops = g.operands();
  const GateSeq seq = g.kind() == GateKind::LogicalAND
                          ? logical_and(ops[0], ops[1], ops[2])
                          : uncompute_and(ops[0], ops[1], ops[2]);
  os << "// begin " << to_string(g.kind()) << '(' << operand_list(g) << ")\n";
  for (const Gate& p : seq) emit_gate(os, p);
  os << "// end " << to_string(g.kind()) << '\n';
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": bad index '" +
                     std::string(s) + "'");
  }
  return v;
}

std::optional<GateKind> kind_from_name(std::string_view name) {
  static const std::map<std::string_view, GateKind> kinds = {
      {"x", GateKind::X},     {"cx", GateKind::CNOT}, {"ccx", GateKind::Toffoli},
      {"h", GateKind::H},     {"s", GateKind::S},     {"sdg", GateKind::Sdg},
      {"t", GateKind::T},     {"tdg", GateKind::Tdg}, {"land", GateKind::LogicalAND},
      {"lunand", GateKind::UncomputeAND}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

std::optional<InitState> init_from_name(std::string_view name) {
  for (InitState s : {InitState::Zero, InitState::One, InitState::MagicA,
                      InitState::Input}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

/// "land(1,2,3)" -> kind and operands.
std::pair<GateKind, std::vector<QubitId>> parse_call(std::string_view s,
                                                     std::size_t line) {
  const auto open = s.find('(');
  const auto close = s.rfind(')');
  if (open == std::string_view::npos || close != s.size() - 1) {
    throw ParseError("line " + std::to_string(line) + ": bad gate group");
  }
  const auto kind = kind_from_name(s.substr(0, open));
  if (!kind || !is_macro(*kind) || *kind == GateKind::Toffoli) {
    throw ParseError("line " + std::to_string(line) + ": bad gate group");
  }
  std::vector<QubitId> ops;
  std::string_view args = s.substr(open + 1, close - open - 1);
  while (!args.empty()) {
    const auto comma = args.find(',');
    ops.push_back(qubit(parse_index(args.substr(0, comma), line)));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (ops.size() != 3) {
    throw ParseError("line " + std::to_string(line) + ": bad gate group");
  }
  return {*kind, ops};
}

Gate parse_gate(std::string_view stmt, std::size_t line) {
  const auto space = stmt.find(' ');
  if (space == std::string_view::npos || stmt.back() != ';') {
    throw ParseError("line " + std::to_string(line) + ": bad statement");
  }
  const auto kind = kind_from_name(stmt.substr(0, space));
  if (!kind || *kind == GateKind::LogicalAND ||
      *kind == GateKind::UncomputeAND) {
    throw ParseError("line " + std::to_string(line) + ": unknown gate '" +
                     std::string(stmt.substr(0, space)) + "'");
  }
  std::vector<QubitId> ops;
  std::string_view rest = stmt.substr(space + 1, stmt.size() - space - 2);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string arg = trim(rest.substr(0, comma));
    if (arg.size() < 4 || arg.compare(0, 2, "q[") != 0 || arg.back() != ']') {
      throw ParseError("line " + std::to_string(line) + ": bad operand");
    }
    ops.push_back(qubit(parse_index(
        std::string_view(arg).substr(2, arg.size() - 3), line)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  try {
    return Gate(*kind, ops);
  } catch (const CircuitError& e) {
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(EmitLevel level) {
  return level == EmitLevel::Macro ? "macro" : "cliffordt";
}

std::string emit_qasm(const Circuit& circuit, EmitLevel level) {
  const Circuit lowered =
      level == EmitLevel::CliffordT ? lower(circuit) : Circuit(1);
  const Circuit& c = level == EmitLevel::CliffordT ? lowered : circuit;

  std::ostringstream os;
  os << kHeader << c.qubit_count() << "];\n";
  os << "// level " << to_string(level) << '\n';
  os << "// init";
  for (InitState s : c.init_states()) os << ' ' << to_string(s);
  os << '\n';
  for (const Register& r : c.registers()) {
    os << "// register " << r.name;
    for (QubitId q : r.qubits) os << ' ' << q.index;
    os << '\n';
  }
  for (const auto& [name, label] : c.output_roles()) {
    os << "// role " << name << ' ' << label << '\n';
  }

  const auto& gates = c.gates();
  if (level == EmitLevel::Macro) {
    for (const Gate& g : gates) {
      if (g.kind() == GateKind::LogicalAND ||
          g.kind() == GateKind::UncomputeAND) {
        emit_group(os, g);
      } else {
        emit_gate(os, g);
      }
    }
    return os.str();
  }
  // Expanded gadgets keep a span marker so that resource accounting of the
  // parsed file still attributes the prep T of each logical-AND.
  std::map<std::size_t, const MacroSpan*> spans;
  for (const MacroSpan& s : c.macro_spans()) spans.emplace(s.begin, &s);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (const auto it = spans.find(i); it != spans.end()) {
      const MacroSpan& s = *it->second;
      os << "// span " << to_string(s.kind) << '(' << s.operands[0].index
         << ',' << s.operands[1].index << ',' << s.operands[2].index << ") "
         << (s.end - s.begin) << '\n';
    }
    emit_gate(os, gates[i]);
  }
  return os.str();
}

Circuit parse_qasm(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    std::string l;
    while (std::getline(is, l)) lines.push_back(trim(l));
  }
  if (lines.size() < 3 || lines[0] != "OPENQASM 2.0;" ||
      lines[1] != "include \"qelib1.inc\";" ||
      lines[2].rfind("qreg q[", 0) != 0 || lines[2].size() < 10 ||
      lines[2].substr(lines[2].size() - 2) != "];") {
    throw ParseError("bad header");
  }
  const std::size_t n = parse_index(
      std::string_view(lines[2]).substr(7, lines[2].size() - 9), 3);
  if (n == 0) throw ParseError("empty circuit");
  Circuit c(n);

  std::vector<InitState> init;
  struct Group {
    GateKind kind;
    std::vector<QubitId> ops;
    std::vector<Gate> body;
    std::size_t line;
  };
  std::optional<Group> group;

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string& l = lines[i];
    if (l.empty()) continue;
    if (l.rfind("//", 0) == 0) {
      const std::vector<std::string> tok = split_ws(std::string_view(l).substr(2));
      if (tok.empty()) continue;
      const std::string& key = tok[0];
      if (key == "init") {
        for (std::size_t k = 1; k < tok.size(); ++k) {
          const auto s = init_from_name(tok[k]);
          if (!s) throw ParseError("line " + std::to_string(lineno) + ": bad init tag");
          init.push_back(*s);
        }
      } else if (key == "register" && tok.size() >= 2) {
        std::vector<QubitId> qs;
        for (std::size_t k = 2; k < tok.size(); ++k) {
          qs.push_back(qubit(parse_index(tok[k], lineno)));
        }
        try {
          c.alloc_register(tok[1], std::move(qs), InitState::Zero);
        } catch (const CircuitError& e) {
          throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
      } else if (key == "role" && tok.size() >= 2) {
        const auto pos = l.find(tok[1], l.find("role") + 4) + tok[1].size();
        c.set_role(tok[1], trim(std::string_view(l).substr(pos)));
      } else if (key == "begin" && tok.size() == 2) {
        if (group) throw ParseError("line " + std::to_string(lineno) + ": nested gate group");
        auto [kind, ops] = parse_call(tok[1], lineno);
        group = Group{kind, std::move(ops), {}, lineno};
      } else if (key == "end" && tok.size() == 2) {
        if (!group || to_string(group->kind) != tok[1]) {
          throw ParseError("line " + std::to_string(lineno) + ": unmatched end");
        }
        const auto& o = group->ops;
        const GateSeq want = group->kind == GateKind::LogicalAND
                                 ? logical_and(o[0], o[1], o[2])
                                 : uncompute_and(o[0], o[1], o[2]);
        if (group->body != want) {
          throw ParseError("line " + std::to_string(group->line) + ": " +
                           std::string(to_string(group->kind)) +
                           " group does not match its gate sequence");
        }
        c.append(Gate(group->kind, o));
        group.reset();
      } else if (key == "span" && tok.size() == 3) {
        auto [kind, ops] = parse_call(tok[1], lineno);
        const std::size_t begin = c.gates().size();
        c.add_macro_span(MacroSpan{kind, {ops[0], ops[1], ops[2]}, begin,
                                   begin + parse_index(tok[2], lineno)});
      }
      continue;
    }
    const Gate g = parse_gate(l, lineno);
    for (QubitId q : g.operands()) {
      if (q.index >= n) throw ParseError("line " + std::to_string(lineno) + ": bad qubit");
    }
    if (group) {
      group->body.push_back(g);
    } else {
      try {
        c.append(g);
      } catch (const CircuitError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }
  if (group) throw ParseError("unterminated gate group");
  if (!init.empty()) {
    if (init.size() != n) throw ParseError("init tag count mismatch");
    for (std::size_t q = 0; q < n; ++q) c.set_init(qubit(q), init[q]);
  }
  for (const MacroSpan& s : c.macro_spans()) {
    if (s.end > c.gates().size()) throw ParseError("span past end of circuit");
  }
  c.freeze();
  return c;
}

}  // namespace qarith::tools
