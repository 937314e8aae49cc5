#include "permgrowth/serialize.hpp"

namespace permgrowth {

using nlohmann::json;

std::string ratio_str(const Ratio& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json run_to_json(const ConstructorRun& run) {
  json j;
  j["schema"] = 1;
  j["target_low"] = ratio_str(run.target_low);
  j["target_high"] = ratio_str(run.target_high);
  j["dual"] = run.dual;
  j["k"] = run.threshold_k;
  j["word"] = run.word.str();
  j["flips"] = run.flips;
  j["state_final"] = run.state_final == RunState::kZeros ? "zeros" : "onezeros";
  json samples = json::array();
  for (const RSample& s : run.r_log) {
    json e;
    e["n"] = s.n;
    e["sign"] = s.sign_low;
    e["r"] = std::isfinite(s.r_low) ? json(s.r_low) : json();
    if (run.dual) {
      e["sign_high"] = s.sign_high;
      e["r_high"] = std::isfinite(s.r_high) ? json(s.r_high) : json();
    }
    samples.push_back(std::move(e));
  }
  j["r_log"] = std::move(samples);
  return j;
}

json search_to_json(const PeakTargetSearch& s) {
  json j;
  j["schema"] = 1;
  j["target"] = s.target;
  j["epsilon"] = s.epsilon;
  j["gamma"] = std::isfinite(s.gamma) ? json(s.gamma) : json();
  j["m"] = s.m;
  if (s.family) {
    j["a"] = s.family->a;
    j["b"] = s.family->b;
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  j["word"] = s.word.str();
  j["achieved_rate"] = s.achieved_rate;
  return j;
}

}  // namespace permgrowth
