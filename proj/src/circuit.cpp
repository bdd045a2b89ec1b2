// Copyright 2026 The qec-energy Authors
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

#include "qec/circuit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class Validator {
 public:
  Validator(int nq, int nc) : nq_(nq), nc_(nc) {}

  void run(const std::vector<Instruction>& list, const std::string& where) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      ctx_ = where + "instruction " + std::to_string(i);
      std::visit(*this, list[i].op);
    }
  }

  void operator()(const GateOp& g) { check_gate(g); }
  void operator()(const ChannelX& c) { qubit(c.qubit); }
  void operator()(const Measure& m) {
    qubit(m.qubit);
    clbit(m.clbit);
  }
  void operator()(const ConditionalGate& c) {
    check_gate(c.gate);
    if (c.condition.clbits.empty() || c.condition.clbits.size() > 64) {
      fail("condition must reference between 1 and 64 clbits");
    }
    for (int b : c.condition.clbits) clbit(b);
    if (c.condition.clbits.size() < 64 && (c.condition.value >> c.condition.clbits.size()) != 0) {
      fail("condition value has bits beyond its clbit list");
    }
  }
  void operator()(const Barrier&) {}
  void operator()(const Parity& p) {
    if (p.sources.empty()) fail("parity needs at least one source");
    for (int b : p.sources) clbit(b);
    clbit(p.target);
  }
  void operator()(const Reset& r) { qubit(r.qubit); }
  void operator()(const RetryBlock& r) {
    if (r.max_attempts < 1) fail("retry block needs max_attempts >= 1");
    for (int b : r.check_clbits) clbit(b);
    const std::string saved = ctx_;
    run(r.body, saved + " / retry body ");
    ctx_ = saved;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("malformed circuit: " + ctx_ + ": " + msg);
  }
  void qubit(int q) const {
    if (q < 0 || q >= nq_) fail("qubit " + std::to_string(q) + " out of range");
  }
  void clbit(int c) const {
    if (c < 0 || c >= nc_) fail("clbit " + std::to_string(c) + " out of range");
  }
  void set_context(std::string s) { ctx_ = std::move(s); }

 private:
  void check_gate(const GateOp& g) const {
    qubit(g.q0);
    if (gate_arity(g.gate) == 2) {
      qubit(g.q1);
      if (g.q0 == g.q1) fail("two-qubit gate with repeated qubit");
    } else if (g.q1 != -1) {
      fail("single-qubit gate given two qubits");
    }
  }

  int nq_, nc_;
  std::string ctx_;
};

std::string gate_text(const GateOp& g) {
  if (gate_arity(g.gate) == 2) return fmt::format("{} {} {}", gate_label(g.gate), g.q0, g.q1);
  return fmt::format("{} {}", gate_label(g.gate), g.q0);
}

std::string clbit_list(const std::vector<int>& bits) {
  std::string s;
  for (std::size_t i = 0; i < bits.size(); ++i) s += (i ? ",c" : "c") + std::to_string(bits[i]);
  return s;
}

void dump_list(const std::vector<Instruction>& list, int depth, std::ostringstream& os) {
  const std::string pad(2 * std::size_t(depth), ' ');
  for (const auto& inst : list) {
    std::visit(overloaded{
                   [&](const GateOp& g) { os << pad << gate_text(g) << '\n'; },
                   [&](const ChannelX& c) { os << pad << "CHANNEL_X " << c.qubit << '\n'; },
                   [&](const Measure& m) { os << pad << "MEASURE " << m.qubit << " -> c" << m.clbit << '\n'; },
                   [&](const ConditionalGate& c) {
                     os << pad << "IF " << clbit_list(c.condition.clbits) << " == " << c.condition.value << " "
                        << gate_text(c.gate) << '\n';
                   },
                   [&](const Barrier& b) { os << pad << "BARRIER " << b.label << '\n'; },
                   [&](const Parity& p) { os << pad << "PARITY " << clbit_list(p.sources) << " -> c" << p.target << '\n'; },
                   [&](const Reset& r) { os << pad << "RESET " << r.qubit << '\n'; },
                   [&](const RetryBlock& r) {
                     os << pad << "RETRY max=" << r.max_attempts << " check=" << clbit_list(r.check_clbits) << " {\n";
                     dump_list(r.body, depth + 1, os);
                     os << pad << "}\n";
                   },
               },
               inst.op);
  }
}

void tally_list(const std::vector<Instruction>& list, GateTally& t) {
  for (const auto& inst : list) {
    std::visit(overloaded{
                   [&](const GateOp& g) { ++t.gates[g.gate]; },
                   [&](const ChannelX&) { ++t.channel_errors; },
                   [&](const Measure&) { ++t.measurements; },
                   [&](const ConditionalGate&) { ++t.conditional_gates; },
                   [&](const RetryBlock& r) { tally_list(r.body, t); },
                   [&](const auto&) {},
               },
               inst.op);
  }
}

}  // namespace

int decode_readout(const Readout& r, const std::vector<std::uint8_t>& bits) {
  if (r.rule == ReadoutRule::Single) return bits.at(std::size_t(r.clbits.at(0)));
  std::size_t ones = 0;
  for (int c : r.clbits) ones += bits.at(std::size_t(c));
  return 2 * ones > r.clbits.size() ? 1 : 0;
}

Circuit& Circuit::gate(GateName g, int q) { return append(Instruction{GateOp{g, q, -1}}); }
Circuit& Circuit::gate(GateName g, int q0, int q1) { return append(Instruction{GateOp{g, q0, q1}}); }
Circuit& Circuit::channel_x(int q) { return append(Instruction{ChannelX{q}}); }
Circuit& Circuit::measure(int q, int c) { return append(Instruction{Measure{q, c}}); }
Circuit& Circuit::conditional(GateOp g, Condition cond) {
  return append(Instruction{ConditionalGate{g, std::move(cond)}});
}
Circuit& Circuit::barrier(std::string label) { return append(Instruction{Barrier{std::move(label)}}); }
Circuit& Circuit::parity(std::vector<int> sources, int target) {
  return append(Instruction{Parity{std::move(sources), target}});
}
Circuit& Circuit::reset(int q) { return append(Instruction{Reset{q}}); }
Circuit& Circuit::retry(RetryBlock block) { return append(Instruction{std::move(block)}); }

Circuit& Circuit::append(Instruction inst) {
  instructions_.push_back(std::move(inst));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  resize(std::max(num_qubits_, other.num_qubits_), std::max(num_clbits_, other.num_clbits_));
  instructions_.insert(instructions_.end(), other.instructions_.begin(), other.instructions_.end());
  if (other.readout_) readout_ = other.readout_;
  return *this;
}

Circuit& Circuit::set_readout(Readout r) {
  readout_ = std::move(r);
  return *this;
}

void Circuit::resize(int num_qubits, int num_clbits) {
  num_qubits_ = num_qubits;
  num_clbits_ = num_clbits;
}

void Circuit::validate() const {
  if (num_qubits_ < 0 || num_qubits_ > kMaxQubits) {
    throw std::invalid_argument("malformed circuit: qubit count out of range");
  }
  if (num_clbits_ < 0) throw std::invalid_argument("malformed circuit: negative clbit count");
  Validator v(num_qubits_, num_clbits_);
  v.run(instructions_, "");
  if (readout_) {
    v.set_context("readout");
    if (readout_->clbits.empty()) v.fail("readout needs at least one clbit");
    for (int c : readout_->clbits) v.clbit(c);
    if (readout_->rule == ReadoutRule::Single && readout_->clbits.size() != 1) {
      v.fail("single readout takes exactly one clbit");
    }
    if (readout_->rule == ReadoutRule::Majority && readout_->clbits.size() % 2 == 0) {
      v.fail("majority readout needs an odd number of clbits");
    }
  }
}

std::string Circuit::dump() const {
  std::ostringstream os;
  os << "circuit qubits=" << num_qubits_ << " clbits=" << num_clbits_ << '\n';
  dump_list(instructions_, 0, os);
  if (readout_) {
    os << "READOUT " << (readout_->rule == ReadoutRule::Majority ? "majority " : "single ")
       << clbit_list(readout_->clbits) << '\n';
  }
  return os.str();
}

Circuit concatenate(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

int GateTally::count(GateName g) const {
  auto it = gates.find(g);
  return it == gates.end() ? 0 : it->second;
}

int GateTally::total_gates() const {
  int n = 0;
  for (const auto& [g, k] : gates) n += k;
  return n;
}

GateTally tally(const Circuit& c) {
  GateTally t;
  tally_list(c.instructions(), t);
  return t;
}

}  // namespace qec
