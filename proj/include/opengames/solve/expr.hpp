#ifndef OPENGAMES_SOLVE_EXPR_HPP_
#define OPENGAMES_SOLVE_EXPR_HPP_

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/game/operators.hpp"

namespace og {

// A composition tree over atomic open games. Seq(first, second) plays `first`
// then `second`; its profiles are (σ_first, σ_second).
class GameExpr {
 public:
  enum class Kind { kAtom, kSeq, kTensor, kProduct };

  static GameExpr atom(OpenGame game, std::string kind, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::kAtom;
    n->atom_kind = std::move(kind);
    n->name = std::move(name);
    n->game = std::move(game);
    return GameExpr(std::move(n));
  }

  static GameExpr seq(GameExpr first, GameExpr second) {
    return node(Kind::kSeq, {std::move(first), std::move(second)});
  }

  // Left-nested chain.
  static GameExpr seq(const std::vector<GameExpr>& chain) {
    if (chain.empty()) throw TypeMismatch("empty sequential chain");
    GameExpr out = chain[0];
    for (std::size_t i = 1; i < chain.size(); ++i) out = seq(out, chain[i]);
    return out;
  }

  static GameExpr tensor(GameExpr a, GameExpr b) {
    return node(Kind::kTensor, {std::move(a), std::move(b)});
  }

  static GameExpr product(std::vector<GameExpr> children) {
    if (children.empty()) throw TypeMismatch("product of no games");
    return node(Kind::kProduct, std::move(children));
  }

  Kind kind() const { return node_->kind; }
  const std::vector<GameExpr>& children() const { return node_->children; }
  const std::string& name() const { return node_->name; }
  const std::string& atom_kind() const { return node_->atom_kind; }
  const void* id() const { return node_.get(); }

  // Evaluates once per node. Type errors name the path to the failing node.
  const OpenGame& eval() const { return eval_at("root"); }

  std::string to_string() const {
    switch (kind()) {
      case Kind::kAtom:
        return name();
      case Kind::kSeq:
        return "(seq " + children()[0].to_string() + " " + children()[1].to_string() + ")";
      case Kind::kTensor:
        return "(tensor " + children()[0].to_string() + " " + children()[1].to_string() + ")";
      case Kind::kProduct: {
        std::string out = "(product";
        for (const auto& c : children()) out += " " + c.to_string();
        return out + ")";
      }
    }
    return "";
  }

 private:
  struct Node {
    Kind kind = Kind::kAtom;
    std::string atom_kind;
    std::string name;
    std::vector<GameExpr> children;
    std::optional<OpenGame> game;
    std::mutex mutex;
  };

  explicit GameExpr(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  static GameExpr node(Kind k, std::vector<GameExpr> children) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->children = std::move(children);
    return GameExpr(std::move(n));
  }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::kSeq:
        return "seq";
      case Kind::kTensor:
        return "tensor";
      case Kind::kProduct:
        return "product";
      default:
        return "atom";
    }
  }

  const OpenGame& eval_at(const std::string& path) const {
    {
      std::lock_guard<std::mutex> lock(node_->mutex);
      if (node_->game) return *node_->game;
    }
    std::vector<OpenGame> parts;
    for (std::size_t i = 0; i < children().size(); ++i)
      parts.push_back(children()[i].eval_at(path + "/" + kind_name(kind()) + "[" +
                                            std::to_string(i) + "]"));
    std::optional<OpenGame> g;
    try {
      switch (kind()) {
        case Kind::kSeq:
          g = seq_compose(parts[0], parts[1]);
          break;
        case Kind::kTensor:
          g = tensor_games(parts[0], parts[1]);
          break;
        case Kind::kProduct:
          g = product_games(parts);
          break;
        case Kind::kAtom:
          break;
      }
    } catch (const TypeMismatch& e) {
      throw TypeMismatch(path + ": " + e.what());
    } catch (const BackwardMismatch& e) {
      throw BackwardMismatch(path + ": " + e.what());
    }
    std::lock_guard<std::mutex> lock(node_->mutex);
    if (!node_->game) node_->game = std::move(g);
    return *node_->game;
  }

  std::shared_ptr<Node> node_;
};

}  // namespace og

#endif  // OPENGAMES_SOLVE_EXPR_HPP_
