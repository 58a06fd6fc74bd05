#ifndef AIXI_ENV_SPEC_HPP
#define AIXI_ENV_SPEC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aixi/env/ex.hpp"
#include "aixi/semimeasure/semimeasure.hpp"

namespace aixi {

// Textual environment description "kind:key=value;key=value". Episodic
// environments list their factors as "episodic:<spec>@<length>|<spec>@<length>".
//
//   sp:seq=0101 | sp:bernoulli=7/10 | sp:random=<seed>
//   heavenhell:i=1
//   needle:n=4;target=2
//   game:tree=((1 -1) (0 0))  or  game:rounds=2;moves=2;replies=2;seed=7
//   repeated-game:<game keys>;episodes=3
//   fm:actions=2;values=4;variant=fmf|fms|fme;T=3;rho=1/2;drop-obs=0
//   fm:...;f=2,1                 (one known function instead of the class)
//   ex:examples=3/4;truth=3      (truth=mix for the sigma-mixture)
//   delayed-switch
//   random:actions=2;obs=2;credits=0,1;seed=5
struct EnvSpec {
    std::string kind;
    std::map<std::string, std::string> params;
    std::vector<std::pair<EnvSpec, int>> episodes;

    std::string get(const std::string& key, const std::string& fallback) const;
    bool has(const std::string& key) const { return params.count(key) != 0; }
};

EnvSpec parse_env_spec(const std::string& text);
std::string to_string(const EnvSpec& spec);

// Builds the true environment mu; throws std::invalid_argument on a
// malformed spec.
SemimeasurePtr build_mu(const EnvSpec& spec);

// The desk-scale EX instance: |Z| = 4, |V| = 3 and four candidate relations,
// each a function Z -> V, such that at every z the candidates split 2/1/1.
std::vector<Relation> standard_ex_relations();

}  // namespace aixi

#endif  // AIXI_ENV_SPEC_HPP
