#include "ontoprob/prob_core.hpp"

namespace ontoprob {

namespace {
enum class Op : std::uint8_t { kAtom, kNot, kAnd, kOr };
}

struct Event::Node {
  Op op;
  PropositionId atom = -1;
  std::shared_ptr<const Node> lhs, rhs;
};

Event Event::atom(PropositionId id) {
  if (id < 0) throw std::invalid_argument("event atom: negative proposition index");
  auto node = std::make_shared<Node>();
  node->op = Op::kAtom;
  node->atom = id;
  return Event(std::move(node));
}

Event Event::negation(Event e) {
  auto node = std::make_shared<Node>();
  node->op = Op::kNot;
  node->lhs = std::move(e.root_);
  return Event(std::move(node));
}

Event Event::conjunction(Event a, Event b) {
  auto node = std::make_shared<Node>();
  node->op = Op::kAnd;
  node->lhs = std::move(a.root_);
  node->rhs = std::move(b.root_);
  return Event(std::move(node));
}

Event Event::disjunction(Event a, Event b) {
  auto node = std::make_shared<Node>();
  node->op = Op::kOr;
  node->lhs = std::move(a.root_);
  node->rhs = std::move(b.root_);
  return Event(std::move(node));
}

namespace {

bool eval_node(const Event::Node* node, std::uint32_t cell, int n);

}  // namespace

bool Event::eval(std::uint32_t cell, int n) const { return eval_node(root_.get(), cell, n); }

namespace {

bool eval_node(const Event::Node* node, std::uint32_t cell, int n) {
  switch (node->op) {
    case Op::kAtom:
      if (node->atom >= n)
        throw UnknownProposition("event mentions proposition " + std::to_string(node->atom) +
                                 " but the joint has only " + std::to_string(n));
      return classical_truth(cell, n, node->atom);
    case Op::kNot:
      return !eval_node(node->lhs.get(), cell, n);
    case Op::kAnd:
      return eval_node(node->lhs.get(), cell, n) && eval_node(node->rhs.get(), cell, n);
    case Op::kOr:
      return eval_node(node->lhs.get(), cell, n) || eval_node(node->rhs.get(), cell, n);
  }
  return false;  // unreachable
}

PropositionId max_prop(const Event::Node* node) {
  switch (node->op) {
    case Op::kAtom:
      return node->atom;
    case Op::kNot:
      return max_prop(node->lhs.get());
    default:
      return std::max(max_prop(node->lhs.get()), max_prop(node->rhs.get()));
  }
}

// Precedence: atoms/! bind tightest, then &, then |.
int precedence(Op op) {
  switch (op) {
    case Op::kOr: return 0;
    case Op::kAnd: return 1;
    default: return 2;
  }
}

void render(const Event::Node* node, int parent_prec, std::string& out) {
  int prec = precedence(node->op);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (node->op) {
    case Op::kAtom:
      out += 'p';
      out += std::to_string(node->atom);
      break;
    case Op::kNot:
      out += '!';
      render(node->lhs.get(), 3, out);  // operand of ! must be atomic or parenthesized
      break;
    case Op::kAnd:
      render(node->lhs.get(), prec, out);
      out += " & ";
      render(node->rhs.get(), prec, out);
      break;
    case Op::kOr:
      render(node->lhs.get(), prec, out);
      out += " | ";
      render(node->rhs.get(), prec, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

PropositionId Event::max_proposition() const { return max_prop(root_.get()); }

std::string Event::to_string() const {
  std::string out;
  render(root_.get(), 0, out);
  return out;
}

bool we_set_inclusion_check(int universe_size, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (universe_size < 0 || universe_size > 64)
    throw std::invalid_argument("we_set_inclusion_check: universe size outside [0, 64]");
  std::uint64_t universe = universe_size == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << universe_size) - 1;
  if ((a | b | c) & ~universe)
    throw std::invalid_argument("we_set_inclusion_check: set extends past the universe");
  std::uint64_t lhs = (a & b) | (~b & c & universe);
  return ((a & c) & ~lhs) == 0;
}

}  // namespace ontoprob
