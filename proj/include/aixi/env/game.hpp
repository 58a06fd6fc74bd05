#ifndef AIXI_ENV_GAME_HPP
#define AIXI_ENV_GAME_HPP

#include <string>
#include <vector>

#include "aixi/core/rng.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Alternating zero-sum game tree. Even depths are moves of the agent (max),
// odd depths replies of the opponent (min); leaves at depth 2n carry the
// payoff C in {-1, 0, 1} for the agent.
struct GameNode {
    int payoff = 0;
    std::vector<GameNode> children;

    bool leaf() const { return children.empty(); }
};

class GameTree {
public:
    // Checks uniform branching (|Y'| at max nodes, |X'| at min nodes), uniform
    // depth and payoffs in {-1, 0, 1}.
    explicit GameTree(GameNode root);

    int rounds() const { return rounds_; }
    int num_moves() const { return num_moves_; }
    int num_replies() const { return num_replies_; }
    const GameNode& root() const { return root_; }

    // Node reached by a move sequence y'_1 x'_1 y'_2 ...
    const GameNode& node(const std::vector<int>& path) const;

private:
    GameNode root_;
    int rounds_ = 0;
    int num_moves_ = 0;
    int num_replies_ = 0;
};

// "(a b ...)" for inner nodes, an integer for leaves; whitespace separated.
GameTree parse_game_tree(const std::string& text);
std::string to_string(const GameTree& tree);

GameTree random_game_tree(int rounds, int num_moves, int num_replies, CounterRng& rng);

// Minimax value of a node with the max player to move when max_to_move.
int minimax_value(const GameNode& node, bool max_to_move);

// Opponent reply at a min node: lexicographically first minimizer.
int minimax_reply(const GameNode& min_node);

// Agent move at a max node: lexicographically first maximin move.
int maximin_move(const GameNode& max_node);

// mu^SG for a minimax opponent: y_k = y'_k, x'_k is the minimax reply, the
// credit is zero before the last round and the payoff at round n. Cycles
// after the game end yield credit 0 and observation 0.
class MinimaxGameEnvironment : public Semimeasure {
public:
    explicit MinimaxGameEnvironment(GameTree tree);
    const Alphabet& alphabet() const override { return alphabet_; }
    Distribution cond(const History& h, Action y) const override;
    std::string name() const override { return "game"; }
    const GameTree& tree() const { return tree_; }

    // y'_1 x'_1 ... read back from the history
    static std::vector<int> moves_of(const History& h);

private:
    GameTree tree_;
    Alphabet alphabet_;
};

Alphabet game_alphabet(int num_moves, int num_replies);

}  // namespace aixi

#endif  // AIXI_ENV_GAME_HPP
