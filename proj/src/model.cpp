#include "rwf/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rwf {

namespace {

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string dims(std::size_t a, std::size_t b) {
  return std::to_string(a) + "x" + std::to_string(b);
}

}  // namespace

NetworkScenario::NetworkScenario(std::size_t num_users, std::size_t num_channels,
                                 std::vector<double> gain, std::vector<double> noise,
                                 std::vector<double> p_max, std::vector<double> p_mask)
    : num_users_(num_users), num_channels_(num_channels), gain_(std::move(gain)),
      noise_(std::move(noise)), p_max_(std::move(p_max)), p_mask_(std::move(p_mask)) {
  const std::size_t m = num_users_;
  const std::size_t k = num_channels_;
  if (m == 0 || k == 0) throw InvalidInput("scenario needs at least one user and one channel");
  if (gain_.size() != m * m * k)
    throw InvalidInput("gain must have " + std::to_string(m * m * k) + " entries, got " +
                       std::to_string(gain_.size()));
  if (noise_.size() != m * k) throw InvalidInput("noise must be " + dims(m, k));
  if (p_max_.size() != m) throw InvalidInput("p_max must have one entry per user");
  if (p_mask_.size() != k) throw InvalidInput("p_mask must have one entry per channel");
  if (!all_finite(gain_) || !all_finite(noise_) || !all_finite(p_max_) || !all_finite(p_mask_))
    throw InvalidInput("scenario contains non-finite values");

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < k; ++c) {
        const double g = this->gain(j, i, c);
        if (g < 0.0) throw InvalidInput("negative channel gain");
        if (i == j && g <= 0.0)
          throw InvalidInput("direct gain of user " + std::to_string(i) + " on channel " +
                             std::to_string(c) + " must be positive");
      }
  for (double n : noise_)
    if (n <= 0.0) throw InvalidInput("noise powers must be positive");
  for (double b : p_max_)
    if (b <= 0.0) throw InvalidInput("p_max must be positive");
  for (double c : p_mask_)
    if (c <= 0.0) throw InvalidInput("p_mask must be positive");
}

PowerProfile PowerProfile::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("empty power profile");
  PowerProfile out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.num_channels_) throw InvalidInput("ragged power profile");
    out.set_row(i, rows[i]);
  }
  return out;
}

void PowerProfile::set_row(std::size_t user, std::span<const double> values) {
  if (values.size() != num_channels_) throw InvalidInput("row length mismatch");
  std::copy(values.begin(), values.end(), p_.begin() + user * num_channels_);
}

std::vector<std::vector<double>> PowerProfile::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(num_users_);
  for (std::size_t i = 0; i < num_users_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

double sup_distance(const PowerProfile& a, const PowerProfile& b) {
  if (a.num_users() != b.num_users() || a.num_channels() != b.num_channels())
    throw InvalidInput("profile dimensions differ");
  double d = 0.0;
  auto va = a.values();
  auto vb = b.values();
  for (std::size_t n = 0; n < va.size(); ++n) d = std::max(d, std::abs(va[n] - vb[n]));
  return d;
}

void require_dimensions(const NetworkScenario& scn, const PowerProfile& profile) {
  if (profile.num_users() != scn.num_users() || profile.num_channels() != scn.num_channels())
    throw InvalidInput("profile is " + dims(profile.num_users(), profile.num_channels()) +
                       " but scenario is " + dims(scn.num_users(), scn.num_channels()));
}

bool is_feasible(const NetworkScenario& scn, const PowerProfile& profile) {
  if (profile.num_users() != scn.num_users() || profile.num_channels() != scn.num_channels())
    return false;
  for (std::size_t i = 0; i < scn.num_users(); ++i) {
    double total = 0.0;
    for (std::size_t k = 0; k < scn.num_channels(); ++k) {
      const double p = profile(i, k);
      if (!(p >= 0.0) || p > scn.p_mask(k)) return false;
      total += p;
    }
    if (total > scn.p_max(i) * (1.0 + kFeasibilityTol)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

UncertaintySpec UncertaintySpec::worst_case(double epsilon) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw InvalidInput("epsilon must be >= 0");
  UncertaintySpec u;
  u.mode_ = RobustnessMode::worst_case;
  u.scalar_epsilon_ = epsilon;
  return u;
}

UncertaintySpec UncertaintySpec::probabilistic(double epsilon, double delta0) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw InvalidInput("epsilon must be >= 0");
  if (!(delta0 >= 0.0 && delta0 <= 1.0)) throw InvalidInput("delta0 must lie in [0, 1]");
  UncertaintySpec u;
  u.mode_ = RobustnessMode::probabilistic;
  u.scalar_epsilon_ = epsilon;
  u.delta0_ = delta0;
  return u;
}

UncertaintySpec UncertaintySpec::per_entry(RobustnessMode mode, std::size_t num_users,
                                           std::size_t num_channels,
                                           std::vector<double> epsilon, double delta0) {
  if (epsilon.size() != num_users * num_channels)
    throw InvalidInput("epsilon must be " + dims(num_users, num_channels));
  for (double e : epsilon)
    if (!(e >= 0.0) || !std::isfinite(e)) throw InvalidInput("epsilon must be >= 0");
  if (!(delta0 >= 0.0 && delta0 <= 1.0)) throw InvalidInput("delta0 must lie in [0, 1]");
  UncertaintySpec u;
  u.mode_ = mode;
  u.delta0_ = delta0;
  u.users_ = num_users;
  u.channels_ = num_channels;
  u.per_entry_ = std::move(epsilon);
  return u;
}

double UncertaintySpec::epsilon(std::size_t user, std::size_t k) const {
  if (per_entry_.empty()) return scalar_epsilon_;
  return per_entry_[user * channels_ + k];
}

std::vector<std::vector<double>> UncertaintySpec::epsilon_rows() const {
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < users_ && !per_entry_.empty(); ++i)
    out.emplace_back(per_entry_.begin() + i * channels_, per_entry_.begin() + (i + 1) * channels_);
  return out;
}

bool UncertaintySpec::fits(const NetworkScenario& scn) const {
  return per_entry_.empty() ||
         (users_ == scn.num_users() && channels_ == scn.num_channels());
}

double UncertaintySpec::multiplier(std::size_t user, std::size_t k) const {
  switch (mode_) {
    case RobustnessMode::nominal:
      return 1.0;
    case RobustnessMode::worst_case:
      return 1.0 + epsilon(user, k);
    case RobustnessMode::probabilistic:
      return 1.0 + epsilon(user, k) * (2.0 * delta0_ - 1.0);
  }
  return 1.0;
}

double UncertaintySpec::effective_epsilon(std::size_t user, std::size_t k) const {
  return std::abs(multiplier(user, k) - 1.0);
}

// ---------------------------------------------------------------------------

std::vector<double> normalized_interference(const NetworkScenario& scn,
                                            const PowerProfile& profile, std::size_t user) {
  require_dimensions(scn, profile);
  if (user >= scn.num_users()) throw InvalidInput("user index out of range");
  const std::size_t m = scn.num_users();
  const std::size_t kk = scn.num_channels();
  std::vector<double> s(kk);
  for (std::size_t k = 0; k < kk; ++k) {
    double received = scn.noise(user, k);
    for (std::size_t j = 0; j < m; ++j)
      if (j != user) received += profile(j, k) * scn.gain(j, user, k);
    s[k] = received / scn.gain(user, user, k);
  }
  return s;
}

std::vector<double> effective_interference(std::span<const double> s_nominal,
                                           const UncertaintySpec& unc, std::size_t user) {
  std::vector<double> out(s_nominal.begin(), s_nominal.end());
  if (unc.mode() == RobustnessMode::nominal) return out;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double factor = unc.multiplier(user, k);
    if (!(factor > 0.0))
      throw DegenerateMultiplier("uncertainty multiplier " + std::to_string(factor) +
                                 " for user " + std::to_string(user) + " channel " +
                                 std::to_string(k) + " is not positive");
    out[k] *= factor;
  }
  return out;
}

double user_utility(const NetworkScenario& scn, const PowerProfile& profile, std::size_t user,
                    const UncertaintySpec& unc) {
  const auto s = effective_interference(normalized_interference(scn, profile, user), unc, user);
  double u = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) u += std::log1p(profile(user, k) / s[k]);
  return u;
}

std::string to_string(RobustnessMode mode) {
  switch (mode) {
    case RobustnessMode::nominal: return "nominal";
    case RobustnessMode::worst_case: return "worst_case";
    case RobustnessMode::probabilistic: return "probabilistic";
  }
  return "nominal";
}

RobustnessMode parse_robustness_mode(const std::string& text) {
  if (text == "nominal") return RobustnessMode::nominal;
  if (text == "worst_case" || text == "worst-case") return RobustnessMode::worst_case;
  if (text == "probabilistic") return RobustnessMode::probabilistic;
  throw InvalidInput("unknown robustness mode '" + text + "'");
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const NetworkScenario& scn) {
  const std::size_t m = scn.num_users();
  const std::size_t kk = scn.num_channels();
  nlohmann::json gain = nlohmann::json::array();
  for (std::size_t j = 0; j < m; ++j) {
    nlohmann::json to = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> row(kk);
      for (std::size_t k = 0; k < kk; ++k) row[k] = scn.gain(j, i, k);
      to.push_back(row);
    }
    gain.push_back(std::move(to));
  }
  nlohmann::json noise = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(kk);
    for (std::size_t k = 0; k < kk; ++k) row[k] = scn.noise(i, k);
    noise.push_back(row);
  }
  auto budgets = scn.budgets();
  auto masks = scn.masks();
  return {{"num_users", m},
          {"num_channels", kk},
          {"gain", std::move(gain)},
          {"noise", std::move(noise)},
          {"p_max", std::vector<double>(budgets.begin(), budgets.end())},
          {"p_mask", std::vector<double>(masks.begin(), masks.end())}};
}

namespace {

const nlohmann::json& require_key(const nlohmann::json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidInput(std::string("scenario is missing key '") + key + "'");
  return *it;
}

std::vector<double> number_array(const nlohmann::json& node, std::size_t expected,
                                 const std::string& where) {
  if (!node.is_array() || node.size() != expected)
    throw InvalidInput(where + " must be an array of " + std::to_string(expected) + " numbers");
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& v : node) {
    if (!v.is_number()) throw InvalidInput(where + " contains a non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

std::size_t positive_count(const nlohmann::json& node, const char* key) {
  if (!node.is_number_integer() || node.get<long long>() <= 0)
    throw InvalidInput(std::string(key) + " must be a positive integer");
  return node.get<std::size_t>();
}

}  // namespace

NetworkScenario scenario_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("scenario document must be a JSON object");
  const std::size_t m = positive_count(require_key(doc, "num_users"), "num_users");
  const std::size_t kk = positive_count(require_key(doc, "num_channels"), "num_channels");
  const auto& gain_node = require_key(doc, "gain");
  const auto& noise_node = require_key(doc, "noise");
  const auto& pmax_node = require_key(doc, "p_max");
  const auto& pmask_node = require_key(doc, "p_mask");

  std::vector<double> gain;
  gain.reserve(m * m * kk);
  if (!gain_node.is_array() || gain_node.size() != m)
    throw InvalidInput("gain must have num_users outer entries");
  for (std::size_t j = 0; j < m; ++j) {
    const auto& to = gain_node[j];
    if (!to.is_array() || to.size() != m)
      throw InvalidInput("gain[" + std::to_string(j) + "] must have num_users entries");
    for (std::size_t i = 0; i < m; ++i) {
      auto row = number_array(to[i], kk,
                              "gain[" + std::to_string(j) + "][" + std::to_string(i) + "]");
      gain.insert(gain.end(), row.begin(), row.end());
    }
  }
  std::vector<double> noise;
  noise.reserve(m * kk);
  if (!noise_node.is_array() || noise_node.size() != m)
    throw InvalidInput("noise must have num_users rows");
  for (std::size_t i = 0; i < m; ++i) {
    auto row = number_array(noise_node[i], kk, "noise[" + std::to_string(i) + "]");
    noise.insert(noise.end(), row.begin(), row.end());
  }
  return NetworkScenario(m, kk, std::move(gain), std::move(noise),
                         number_array(pmax_node, m, "p_max"),
                         number_array(pmask_node, kk, "p_mask"));
}

nlohmann::json parse_json_document(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line:column
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t n = 0; n < stop; ++n) {
      if (text[n] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(col) +
                       ": malformed " + what + " JSON (" + e.what() + ")");
  }
}

NetworkScenario parse_scenario(const std::string& text) {
  return scenario_from_json(parse_json_document(text, "scenario"));
}

NetworkScenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

nlohmann::json to_json(const PowerProfile& profile) { return profile.rows(); }

PowerProfile profile_from_json(const nlohmann::json& doc) {
  const nlohmann::json* node = &doc;
  if (doc.is_object()) {
    auto it = doc.find("profile");
    if (it == doc.end()) throw InvalidInput("profile document has no 'profile' key");
    node = &*it;
  }
  if (!node->is_array()) throw InvalidInput("profile must be a nested array");
  std::vector<std::vector<double>> rows;
  for (const auto& r : *node) {
    if (!r.is_array()) throw InvalidInput("profile rows must be arrays");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw InvalidInput("profile contains a non-numeric entry");
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  return PowerProfile::from_rows(rows);
}

nlohmann::json to_json(const UncertaintySpec& unc) {
  nlohmann::json out{{"mode", to_string(unc.mode())}, {"delta0", unc.delta0()}};
  if (unc.is_per_entry())
    out["epsilon"] = unc.epsilon_rows();
  else
    out["epsilon"] = unc.epsilon(0, 0);
  return out;
}

}  // namespace rwf
