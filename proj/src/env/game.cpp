#include "aixi/env/game.hpp"

#include <cctype>
#include <stdexcept>

namespace aixi {

namespace {

void check(const GameNode& n, int depth, int max_depth, int moves, int replies)
{
    if (n.leaf()) {
        if (depth != max_depth) throw std::invalid_argument("game tree leaves at different depths");
        if (n.payoff < -1 || n.payoff > 1) throw std::invalid_argument("game payoff outside {-1, 0, 1}");
        return;
    }
    int want = depth % 2 == 0 ? moves : replies;
    if (static_cast<int>(n.children.size()) != want) throw std::invalid_argument("game tree branching is not uniform");
    for (const auto& c : n.children) check(c, depth + 1, max_depth, moves, replies);
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    GameNode parse()
    {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("game tree: unexpected end of text");
        GameNode n;
        if (s[pos] == '(') {
            ++pos;
            for (;;) {
                skip();
                if (pos >= s.size()) throw std::invalid_argument("game tree: missing ')'");
                if (s[pos] == ')') {
                    ++pos;
                    break;
                }
                n.children.push_back(parse());
            }
            if (n.children.empty()) throw std::invalid_argument("game tree: empty node");
            return n;
        }
        std::size_t start = pos;
        if (s[pos] == '-' || s[pos] == '+') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(s[pos - 1])))
            throw std::invalid_argument("game tree: bad token at offset " + std::to_string(start));
        n.payoff = std::stoi(s.substr(start, pos - start));
        return n;
    }
};

void print(const GameNode& n, std::string& out)
{
    if (n.leaf()) {
        out += std::to_string(n.payoff);
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) out += ' ';
        print(n.children[i], out);
    }
    out += ')';
}

GameNode random_node(int depth, int max_depth, int moves, int replies, CounterRng& rng)
{
    GameNode n;
    if (depth == max_depth) {
        n.payoff = static_cast<int>(rng.below(3)) - 1;
        return n;
    }
    int width = depth % 2 == 0 ? moves : replies;
    for (int i = 0; i < width; ++i) n.children.push_back(random_node(depth + 1, max_depth, moves, replies, rng));
    return n;
}

}  // namespace

GameTree::GameTree(GameNode root) : root_(std::move(root))
{
    int depth = 0;
    for (const GameNode* n = &root_; !n->leaf(); n = &n->children.front()) ++depth;
    if (depth == 0 || depth % 2 != 0) throw std::invalid_argument("game tree needs a positive even depth");
    rounds_ = depth / 2;
    num_moves_ = static_cast<int>(root_.children.size());
    num_replies_ = static_cast<int>(root_.children.front().children.size());
    check(root_, 0, depth, num_moves_, num_replies_);
}

const GameNode& GameTree::node(const std::vector<int>& path) const
{
    const GameNode* n = &root_;
    for (int m : path) {
        if (n->leaf() || m < 0 || m >= static_cast<int>(n->children.size()))
            throw std::out_of_range("game path leaves the tree");
        n = &n->children[static_cast<std::size_t>(m)];
    }
    return *n;
}

GameTree parse_game_tree(const std::string& text)
{
    Parser p{text};
    GameNode root = p.parse();
    p.skip();
    if (p.pos != text.size()) throw std::invalid_argument("game tree: trailing text");
    return GameTree(std::move(root));
}

std::string to_string(const GameTree& tree)
{
    std::string out;
    print(tree.root(), out);
    return out;
}

GameTree random_game_tree(int rounds, int num_moves, int num_replies, CounterRng& rng)
{
    return GameTree(random_node(0, 2 * rounds, num_moves, num_replies, rng));
}

int minimax_value(const GameNode& node, bool max_to_move)
{
    if (node.leaf()) return node.payoff;
    int best = max_to_move ? -2 : 2;
    for (const auto& c : node.children) {
        int v = minimax_value(c, !max_to_move);
        best = max_to_move ? std::max(best, v) : std::min(best, v);
    }
    return best;
}

int minimax_reply(const GameNode& min_node)
{
    if (min_node.leaf()) throw std::invalid_argument("no reply at a terminal node");
    int best = 0, best_v = 2;
    for (std::size_t i = 0; i < min_node.children.size(); ++i) {
        int v = minimax_value(min_node.children[i], true);
        if (v < best_v) best_v = v, best = static_cast<int>(i);
    }
    return best;
}

int maximin_move(const GameNode& max_node)
{
    if (max_node.leaf()) throw std::invalid_argument("no move at a terminal node");
    int best = 0, best_v = -2;
    for (std::size_t i = 0; i < max_node.children.size(); ++i) {
        int v = minimax_value(max_node.children[i], false);
        if (v > best_v) best_v = v, best = static_cast<int>(i);
    }
    return best;
}

Alphabet game_alphabet(int num_moves, int num_replies)
{
    return Alphabet(num_moves, num_replies, {Rational(-1), Rational(0), Rational(1)});
}

MinimaxGameEnvironment::MinimaxGameEnvironment(GameTree tree)
    : tree_(std::move(tree)), alphabet_(game_alphabet(tree_.num_moves(), tree_.num_replies()))
{
}

std::vector<int> MinimaxGameEnvironment::moves_of(const History& h)
{
    std::vector<int> path;
    for (const auto& s : h.steps()) {
        path.push_back(s.action);
        path.push_back(s.percept.obs);
    }
    return path;
}

Distribution MinimaxGameEnvironment::cond(const History& h, Action y) const
{
    const int k = static_cast<int>(h.size()) + 1;
    if (k > tree_.rounds()) return point_mass(alphabet_, {1, 0});
    auto path = moves_of(h);
    path.push_back(y);
    const GameNode& after_move = tree_.node(path);
    int reply = minimax_reply(after_move);
    int credit = 0;
    if (k == tree_.rounds()) credit = after_move.children[static_cast<std::size_t>(reply)].payoff;
    return point_mass(alphabet_, {credit + 1, reply});
}

}  // namespace aixi
