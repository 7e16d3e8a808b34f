#include "hurwitz/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace hurwitz {

namespace {

using Beta = std::vector<int>;  // strictly decreasing first-column hook lengths

Beta beta_set(const Partition& lambda) {
  int n = lambda.length();
  Beta b(n);
  for (int i = 0; i < n; ++i) b[i] = lambda[i] + (n - 1 - i);
  return b;
}

Partition from_beta(Beta b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  int n = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    int p = b[i] - (n - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

struct MnMemo {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, Integer> table;
};

MnMemo& memo() {
  static MnMemo m;
  return m;
}

// nu is a partition whose parts are removed from the front (largest first).
Integer mn(const Partition& lambda, const Partition& nu) {
  if (nu.empty() || nu[0] == 1) return hook_dim(lambda);
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    auto it = memo().table.find({lambda, nu});
    if (it != memo().table.end()) return it->second;
  }
  int r = nu[0];
  Partition rest(std::vector<int>(nu.begin() + 1, nu.end()));
  Beta b = beta_set(lambda);
  std::set<int> present(b.begin(), b.end());
  Integer total = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    int from = b[j], to = b[j] - r;
    if (to < 0 || present.count(to)) continue;
    int between = 0;
    for (int x : b)
      if (x > to && x < from) ++between;
    Beta nb = b;
    nb[j] = to;
    Integer v = mn(from_beta(nb), rest);
    if (between % 2)
      total -= v;
    else
      total += v;
  }
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().table.emplace(std::make_pair(lambda, nu), total);
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size())
    throw DomainError("character: |lambda| = " + std::to_string(lambda.size()) + " but |nu| = " +
                      std::to_string(nu.size()));
  return mn(lambda, nu);
}

CharacterTable::CharacterTable(int d) : d_(d), parts_(enumerate_partitions(d)) {
  for (const auto& lam : parts_)
    for (const auto& nu : parts_) chi_[{lam, nu}] = character(lam, nu);
}

const Integer& CharacterTable::at(const Partition& lambda, const Partition& nu) const {
  auto it = chi_.find({lambda, nu.size() == d_ ? nu : nu.padded(d_)});
  if (it == chi_.end()) throw DomainError("character table of degree " + std::to_string(d_) + " has no entry");
  return it->second;
}

std::string CharacterTable::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["degree"] = d_;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& lam : parts_)
    for (const auto& nu : parts_) {
      nlohmann::ordered_json e;
      e["lambda"] = lam.parts();
      e["nu"] = nu.parts();
      e["chi"] = chi_.at({lam, nu}).get_str();
      j["entries"].push_back(std::move(e));
    }
  return j.dump();
}

CharacterTable CharacterTable::from_json(const std::string& text) {
  CharacterTable t;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) throw DomainError("unsupported character cache version");
    t.d_ = j.at("degree").get<int>();
    t.parts_ = enumerate_partitions(t.d_);
    for (const auto& e : j.at("entries")) {
      Partition lam(e.at("lambda").get<std::vector<int>>()), nu(e.at("nu").get<std::vector<int>>());
      if (lam.size() != t.d_ || nu.size() != t.d_) throw DomainError("character cache entry of wrong degree");
      t.chi_[{lam, nu}] = Integer(e.at("chi").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad character cache: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("bad character cache: ") + e.what());
  }
  if (t.chi_.size() != t.parts_.size() * t.parts_.size()) throw DomainError("incomplete character cache");
  return t;
}

namespace {

struct TableStore {
  std::mutex mu;
  bool dir_set = false;
  std::optional<std::string> dir;
  std::map<int, std::unique_ptr<CharacterTable>> tables;
};

TableStore& store() {
  static TableStore s;
  return s;
}

std::optional<std::string> current_dir_locked(TableStore& s) {
  if (s.dir_set) return s.dir;
  if (const char* env = std::getenv("HURWITZ_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

}  // namespace

void set_cache_dir(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(store().mu);
  store().dir_set = true;
  store().dir = std::move(dir);
}

std::optional<std::string> cache_dir() {
  std::lock_guard<std::mutex> lock(store().mu);
  return current_dir_locked(store());
}

std::string cache_file(int d) {
  auto dir = cache_dir();
  if (!dir) throw DomainError("no cache directory configured");
  return (std::filesystem::path(*dir) / ("characters_d" + std::to_string(d) + ".json")).string();
}

const CharacterTable& character_table(int d) {
  if (d < 0) throw DomainError("negative degree");
  auto& s = store();
  std::optional<std::string> dir;
  {
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.tables.find(d);
    if (it != s.tables.end()) return *it->second;
    dir = current_dir_locked(s);
  }
  std::unique_ptr<CharacterTable> table;
  if (dir) {
    auto path = std::filesystem::path(*dir) / ("characters_d" + std::to_string(d) + ".json");
    std::ifstream in(path);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        auto loaded = CharacterTable::from_json(buf.str());
        if (loaded.degree() == d) table = std::make_unique<CharacterTable>(std::move(loaded));
      } catch (const DomainError&) {
        // unreadable cache is recomputed and overwritten
      }
    }
    if (!table) {
      table = std::make_unique<CharacterTable>(d);
      std::error_code ec;
      std::filesystem::create_directories(*dir, ec);
      std::ofstream out(path);
      if (out) out << table->to_json();
    }
  } else {
    table = std::make_unique<CharacterTable>(d);
  }
  std::lock_guard<std::mutex> lock(s.mu);
  auto [it, inserted] = s.tables.emplace(d, std::move(table));
  return *it->second;
}

Rational central_character_f(const Partition& nu, const Partition& lambda) {
  if (nu.has_ones()) throw DomainError("central_character_f needs nu without 1-parts, got " + nu.str());
  if (nu.size() > lambda.size()) return 0;
  const int d = lambda.size();
  const auto& table = character_table(d);
  return make_rational(class_size(nu, d) * table.at(lambda, nu), hook_dim(lambda));
}

Rational shifted_central_character(const Partition& nu, const Partition& lambda) {
  if (nu.size() > lambda.size()) return 0;
  const int d = lambda.size();
  Integer cls = factorial(nu.size()) / centralizer_order(nu);
  return make_rational(binomial(d, nu.size()) * cls * character_table(d).at(lambda, nu.padded(d)), hook_dim(lambda));
}

Rational hurwitz_by_characters(const HurwitzSpec& spec) {
  spec.validate();
  if (spec.connected) throw DomainError("the character sum gives disconnected numbers; use the connected series");
  const int d = spec.degree;
  const auto profiles = spec.stripped_profiles();
  const auto& table = character_table(d);
  const Partition two({2});
  Rational total = 0;
  for (const auto& lam : table.partitions()) {
    Integer dim = hook_dim(lam);
    Rational term = rpow(make_rational(dim, factorial(d)), 2 - 2 * spec.base_genus);
    for (const auto& mu : profiles) term *= make_rational(class_size(mu, d) * table.at(lam, mu), dim);
    if (term == 0) continue;
    if (spec.k > 0) {
      Rational f2 = d >= 2 ? make_rational(class_size(two, d) * table.at(lam, two), dim) : Rational(0);
      term *= rpow(f2, spec.k);
    }
    auto cont = contents(lam);
    term *= sym_eval(SymKind::complete_homogeneous, spec.l, cont);
    term *= sym_eval(SymKind::elementary, spec.m, cont);
    total += term;
  }
  if (spec.labeled)
    for (const auto& mu : spec.profiles) total *= aut_count(mu.padded(d));
  return total;
}

Integer commutator_count_by_characters(int g, const Partition& nu, int d) {
  if (g < 1) throw DomainError("commutator count needs g >= 1");
  if (nu.size() > d) throw DomainError("|nu| exceeds d");
  const auto& table = character_table(d);
  Rational s = 0;
  for (const auto& lam : table.partitions())
    s += rpow(make_rational(factorial(d), hook_dim(lam)), 2 * g - 1) * table.at(lam, nu);
  s *= class_size(nu, d);
  if (s.get_den() != 1) throw DomainError("commutator count is not integral");
  return s.get_num();
}

}  // namespace hurwitz
