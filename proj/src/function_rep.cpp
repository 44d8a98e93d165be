#include "groupmeans/function_rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include <json.hpp>

#include "groupmeans/errors.hpp"

namespace groupmeans {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t checked_cell_size(const GroupSpec& g,
                               const std::vector<std::int64_t>& period) {
  if (static_cast<int>(period.size()) != g.free_rank)
    throw spec_error("period length does not match free rank");
  std::int64_t n = 1;
  for (auto p : period) {
    if (p < 1) throw std::domain_error("period entries must be positive");
    n *= p;
  }
  return n * g.torsion_card();
}

Rat dyadic_value(std::int64_t x) {
  if (x < 3) return 0;
  int e = 0;
  while ((std::int64_t{1} << e) < x) ++e;  // smallest e with 2^e >= x
  return (e % 2 == 0) ? Rat(-1) : Rat(0);
}

}  // namespace

FunctionRep FunctionRep::periodic(GroupSpec g, std::vector<std::int64_t> period,
                                  std::vector<Rat> cell) {
  g.validate();
  FunctionRep f;
  f.spec_ = std::move(g);
  f.kind_ = RepKind::periodic;
  std::int64_t size = checked_cell_size(f.spec_, period);
  if (static_cast<std::int64_t>(cell.size()) != size)
    throw std::domain_error("cell size mismatch");
  f.per_.period = std::move(period);
  f.per_.cell = std::move(cell);
  return f;
}

FunctionRep FunctionRep::periodic_set(GroupSpec g,
                                      std::vector<std::int64_t> period,
                                      const std::vector<GroupElement>& members) {
  g.validate();
  FunctionRep f;
  f.spec_ = std::move(g);
  f.kind_ = RepKind::periodic;
  std::int64_t size = checked_cell_size(f.spec_, period);
  f.per_.period = std::move(period);
  f.per_.cell.assign(static_cast<std::size_t>(size), Rat(0));
  FunctionRep& ref = f;
  for (const auto& m : members)
    ref.per_.cell[static_cast<std::size_t>(ref.cell_index(m))] = 1;
  return f;
}

FunctionRep FunctionRep::constant(GroupSpec g, Rat value) {
  g.validate();
  std::vector<std::int64_t> period(g.free_rank, 1);
  std::int64_t size = g.torsion_card();
  std::vector<Rat> cell(static_cast<std::size_t>(size), value);
  return periodic(std::move(g), std::move(period), std::move(cell));
}

FunctionRep FunctionRep::finite_mod(
    const FunctionRep& base, std::vector<std::pair<GroupElement, Rat>> overrides) {
  if (base.kind() != RepKind::periodic)
    throw kind_error("finite_mod base must be periodic");
  FunctionRep f = base;
  for (auto& [x, v] : overrides) x = reduce(f.spec_, std::move(x));
  std::sort(overrides.begin(), overrides.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // later entries win, then drop no-ops
  std::vector<std::pair<GroupElement, Rat>> canon;
  for (auto& e : overrides) {
    if (!canon.empty() && canon.back().first == e.first)
      canon.back().second = e.second;
    else
      canon.push_back(e);
  }
  std::erase_if(canon, [&](const auto& e) {
    return base.evaluate(e.first) == e.second;
  });
  if (canon.empty()) return f;
  f.kind_ = RepKind::finite_mod;
  f.over_ = std::move(canon);
  return f;
}

FunctionRep FunctionRep::oracle_dyadic(std::int64_t horizon) {
  if (horizon < 1) throw std::domain_error("oracle horizon must be positive");
  FunctionRep f;
  f.spec_ = GroupSpec{1, {}};
  f.kind_ = RepKind::oracle;
  f.oracle_.generator = OracleGenerator::dyadic_blocks;
  f.oracle_.horizon = horizon;
  return f;
}

FunctionRep FunctionRep::oracle_table(std::int64_t horizon, std::vector<Rat> values) {
  if (horizon < 1) throw std::domain_error("oracle horizon must be positive");
  if (static_cast<std::int64_t>(values.size()) != 2 * horizon + 1)
    throw std::domain_error("oracle table must have 2*horizon+1 entries");
  FunctionRep f;
  f.spec_ = GroupSpec{1, {}};
  f.kind_ = RepKind::oracle;
  f.oracle_.generator = OracleGenerator::explicit_table;
  f.oracle_.horizon = horizon;
  f.oracle_.table = std::move(values);
  return f;
}

const PeriodicRep& FunctionRep::periodic_part() const {
  if (kind_ == RepKind::oracle)
    throw kind_error("oracle representation has no periodic part");
  return per_;
}

const std::vector<std::pair<GroupElement, Rat>>& FunctionRep::overrides() const {
  return over_;
}

const OracleWindowRep& FunctionRep::oracle_part() const {
  if (kind_ != RepKind::oracle) throw kind_error("not an oracle representation");
  return oracle_;
}

std::int64_t FunctionRep::cell_size() const {
  return static_cast<std::int64_t>(periodic_part().cell.size());
}

std::int64_t FunctionRep::cell_index(const GroupElement& in) const {
  GroupElement x = reduce(spec_, in);
  std::int64_t idx = 0;
  for (int i = 0; i < spec_.free_rank; ++i)
    idx = idx * per_.period[i] + mod_floor(x.free[i], per_.period[i]);
  for (std::size_t j = 0; j < spec_.torsion.size(); ++j)
    idx = idx * spec_.torsion[j] + x.tors[j];
  return idx;
}

GroupElement FunctionRep::cell_point(std::int64_t index) const {
  GroupElement x = zero_element(spec_);
  for (std::size_t j = spec_.torsion.size(); j-- > 0;) {
    x.tors[j] = index % spec_.torsion[j];
    index /= spec_.torsion[j];
  }
  for (int i = spec_.free_rank; i-- > 0;) {
    x.free[i] = index % per_.period[i];
    index /= per_.period[i];
  }
  return x;
}

FiniteSubset FunctionRep::fundamental_cell() const {
  std::vector<GroupElement> elems;
  std::int64_t n = cell_size();
  elems.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elems.push_back(cell_point(i));
  return FiniteSubset(spec_, std::move(elems));
}

Rat FunctionRep::evaluate(const GroupElement& in) const {
  switch (kind_) {
    case RepKind::periodic:
      return per_.cell[static_cast<std::size_t>(cell_index(in))];
    case RepKind::finite_mod: {
      GroupElement x = reduce(spec_, in);
      auto it = std::lower_bound(
          over_.begin(), over_.end(), x,
          [](const auto& e, const GroupElement& k) { return e.first < k; });
      if (it != over_.end() && it->first == x) return it->second;
      return per_.cell[static_cast<std::size_t>(cell_index(x))];
    }
    case RepKind::oracle: {
      if (spec_.free_rank != 1 || !in.tors.empty())
        throw spec_error("oracle evaluation expects an element of Z");
      std::int64_t x = in.free[0];
      if (std::abs(x) > oracle_.horizon)
        throw horizon_error("evaluation outside the oracle horizon");
      if (oracle_.generator == OracleGenerator::dyadic_blocks)
        return dyadic_value(x);
      return oracle_.table[static_cast<std::size_t>(x + oracle_.horizon)];
    }
  }
  throw std::logic_error("unreachable");
}

Rat FunctionRep::evaluate_int(std::int64_t x) const {
  if (spec_.free_rank != 1 || !spec_.torsion.empty())
    throw spec_error("integer evaluation requires the group Z");
  return evaluate(GroupElement{{x}, {}});
}

Rat FunctionRep::sup_value() const {
  if (kind_ == RepKind::oracle) {
    if (oracle_.generator == OracleGenerator::dyadic_blocks) return 0;
    return *std::max_element(oracle_.table.begin(), oracle_.table.end());
  }
  Rat m = *std::max_element(per_.cell.begin(), per_.cell.end());
  for (const auto& [x, v] : over_) m = std::max(m, v);
  return m;
}

Rat FunctionRep::inf_value() const {
  if (kind_ == RepKind::oracle) {
    if (oracle_.generator == OracleGenerator::dyadic_blocks)
      return oracle_.horizon >= 3 ? Rat(-1) : Rat(0);
    return *std::min_element(oracle_.table.begin(), oracle_.table.end());
  }
  Rat m = *std::min_element(per_.cell.begin(), per_.cell.end());
  for (const auto& [x, v] : over_) m = std::min(m, v);
  return m;
}

Rat FunctionRep::bound() const {
  Rat lo = inf_value(), hi = sup_value();
  return std::max(Rat(abs(lo)), Rat(abs(hi)));
}

Rat FunctionRep::cell_average() const {
  const auto& cell = periodic_part().cell;
  Rat total = 0;
  for (const auto& v : cell) total += v;
  return total / Rat(static_cast<long>(cell.size()));
}

bool FunctionRep::is_set() const {
  auto ok = [](const Rat& v) { return v == 0 || v == 1; };
  if (kind_ == RepKind::oracle) {
    if (oracle_.generator == OracleGenerator::dyadic_blocks) return false;
    return std::all_of(oracle_.table.begin(), oracle_.table.end(), ok);
  }
  if (!std::all_of(per_.cell.begin(), per_.cell.end(), ok)) return false;
  return std::all_of(over_.begin(), over_.end(),
                     [&](const auto& e) { return ok(e.second); });
}

bool FunctionRep::is_constant() const {
  if (kind_ != RepKind::periodic) return false;
  return std::all_of(per_.cell.begin(), per_.cell.end(),
                     [&](const Rat& v) { return v == per_.cell.front(); });
}

bool FunctionRep::operator==(const FunctionRep& other) const {
  return spec_ == other.spec_ && kind_ == other.kind_ && per_ == other.per_ &&
         over_ == other.over_ && oracle_ == other.oracle_;
}

void require_set(const FunctionRep& f, const char* where) {
  if (!f.is_set())
    throw kind_error(std::string(where) + ": input values must all be 0 or 1");
}

// ---------------------------------------------------------------------------
// pointwise algebra

FunctionRep linear_combine(const std::vector<LinearTerm>& terms) {
  if (terms.empty()) throw std::domain_error("linear_combine: no terms");
  const GroupSpec& g = terms.front().f.spec();
  for (const auto& t : terms) {
    if (t.f.spec() != g) throw spec_error("linear_combine: mismatched group specs");
    if (static_cast<int>(t.shift.free.size()) != g.free_rank ||
        t.shift.tors.size() != g.torsion.size())
      throw spec_error("linear_combine: shift shape mismatch");
  }

  bool any_oracle = std::any_of(terms.begin(), terms.end(), [](const auto& t) {
    return t.f.kind() == RepKind::oracle;
  });
  if (any_oracle) {
    std::int64_t horizon = -1;
    for (const auto& t : terms) {
      if (t.f.kind() == RepKind::oracle) {
        std::int64_t h = t.f.oracle_part().horizon - std::abs(t.shift.free[0]);
        horizon = horizon < 0 ? h : std::min(horizon, h);
      } else if (!t.f.is_constant()) {
        throw kind_error("linear_combine: oracle combines only with oracle or constant");
      }
    }
    if (horizon < 0) throw horizon_error("linear_combine: horizon underflow");
    std::vector<Rat> table;
    table.reserve(static_cast<std::size_t>(2 * horizon + 1));
    for (std::int64_t x = -horizon; x <= horizon; ++x) {
      Rat v = 0;
      for (const auto& t : terms)
        v += t.coeff * t.f.evaluate_int(x + t.shift.free[0]);
      table.push_back(std::move(v));
    }
    return FunctionRep::oracle_table(horizon, std::move(table));
  }

  // combined periodic base on the lcm period
  std::vector<std::int64_t> period(g.free_rank, 1);
  for (const auto& t : terms)
    for (int i = 0; i < g.free_rank; ++i)
      period[i] = std::lcm(period[i], t.f.periodic_part().period[i]);
  std::int64_t size = 1;
  for (auto p : period) size *= p;
  size *= g.torsion_card();

  FunctionRep shape = FunctionRep::periodic(
      g, period, std::vector<Rat>(static_cast<std::size_t>(size), Rat(0)));
  std::vector<Rat> cell(static_cast<std::size_t>(size), Rat(0));
  for (std::int64_t i = 0; i < size; ++i) {
    GroupElement x = shape.cell_point(i);
    Rat v = 0;
    for (const auto& t : terms) {
      GroupElement y = add(g, x, t.shift);
      // base value only; overrides are folded in below
      const FunctionRep& f = t.f;
      Rat base = f.periodic_part()
                     .cell[static_cast<std::size_t>(f.cell_index(y))];
      v += t.coeff * base;
    }
    cell[static_cast<std::size_t>(i)] = std::move(v);
  }
  FunctionRep base = FunctionRep::periodic(g, period, std::move(cell));

  std::set<GroupElement> candidates;
  for (const auto& t : terms)
    for (const auto& [p, v] : t.f.overrides())
      candidates.insert(sub(g, p, t.shift));
  if (candidates.empty()) return base;

  std::vector<std::pair<GroupElement, Rat>> overrides;
  for (const auto& x : candidates) {
    Rat v = 0;
    for (const auto& t : terms)
      v += t.coeff * t.f.evaluate(add(g, x, t.shift));
    overrides.emplace_back(x, std::move(v));
  }
  return FunctionRep::finite_mod(base, std::move(overrides));
}

FunctionRep positive_part(const FunctionRep& f) {
  auto plus = [](const Rat& v) { return v > 0 ? v : Rat(0); };
  switch (f.kind()) {
    case RepKind::periodic: {
      std::vector<Rat> cell;
      cell.reserve(f.periodic_part().cell.size());
      for (const auto& v : f.periodic_part().cell) cell.push_back(plus(v));
      return FunctionRep::periodic(f.spec(), f.periodic_part().period,
                                   std::move(cell));
    }
    case RepKind::finite_mod: {
      std::vector<Rat> cell;
      for (const auto& v : f.periodic_part().cell) cell.push_back(plus(v));
      FunctionRep base = FunctionRep::periodic(
          f.spec(), f.periodic_part().period, std::move(cell));
      std::vector<std::pair<GroupElement, Rat>> overrides;
      for (const auto& [x, v] : f.overrides()) overrides.emplace_back(x, plus(v));
      return FunctionRep::finite_mod(base, std::move(overrides));
    }
    case RepKind::oracle: {
      const auto& o = f.oracle_part();
      std::vector<Rat> table;
      table.reserve(static_cast<std::size_t>(2 * o.horizon + 1));
      for (std::int64_t x = -o.horizon; x <= o.horizon; ++x)
        table.push_back(plus(f.evaluate_int(x)));
      return FunctionRep::oracle_table(o.horizon, std::move(table));
    }
  }
  throw std::logic_error("unreachable");
}

FunctionRep set_complement(const FunctionRep& a) {
  require_set(a, "set_complement");
  auto flip = [](const Rat& v) { return Rat(1) - v; };
  switch (a.kind()) {
    case RepKind::periodic: {
      std::vector<Rat> cell;
      for (const auto& v : a.periodic_part().cell) cell.push_back(flip(v));
      return FunctionRep::periodic(a.spec(), a.periodic_part().period,
                                   std::move(cell));
    }
    case RepKind::finite_mod: {
      std::vector<Rat> cell;
      for (const auto& v : a.periodic_part().cell) cell.push_back(flip(v));
      FunctionRep base = FunctionRep::periodic(
          a.spec(), a.periodic_part().period, std::move(cell));
      std::vector<std::pair<GroupElement, Rat>> overrides;
      for (const auto& [x, v] : a.overrides()) overrides.emplace_back(x, flip(v));
      return FunctionRep::finite_mod(base, std::move(overrides));
    }
    case RepKind::oracle: {
      const auto& o = a.oracle_part();
      std::vector<Rat> table;
      for (const auto& v : o.table) table.push_back(flip(v));
      return FunctionRep::oracle_table(o.horizon, std::move(table));
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// description format

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw parse_error(path + ": " + what);
}

Rat json_to_rat(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return rat_from_string(j.get<std::string>());
    } catch (const parse_error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational (\"num/den\" string or integer)");
}

GroupElement json_to_element(const json& j, const GroupSpec& g,
                             const std::string& path) {
  std::size_t width = static_cast<std::size_t>(g.free_rank) + g.torsion.size();
  std::vector<std::int64_t> coords;
  if (j.is_number_integer() && width == 1) {
    coords.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    if (j.size() != width)
      fail(path, "element needs " + std::to_string(width) + " coordinates");
    for (const auto& c : j) {
      if (!c.is_number_integer()) fail(path, "element coordinates must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
  } else {
    fail(path, "expected an element (integer list)");
  }
  GroupElement e;
  e.free.assign(coords.begin(), coords.begin() + g.free_rank);
  e.tors.assign(coords.begin() + g.free_rank, coords.end());
  return reduce(g, std::move(e));
}

std::vector<std::int64_t> parse_period(const json& obj, const GroupSpec& g,
                                       const std::string& path) {
  if (!obj.contains("period")) fail(path, "missing 'period'");
  const json& pj = obj.at("period");
  if (!pj.is_array() || static_cast<int>(pj.size()) != g.free_rank)
    fail(path + ".period", "expected a list of length free_rank");
  std::vector<std::int64_t> period;
  for (const auto& p : pj) {
    if (!p.is_number_integer() || p.get<std::int64_t>() < 1)
      fail(path + ".period", "period entries must be positive integers");
    period.push_back(p.get<std::int64_t>());
  }
  return period;
}

FunctionRep parse_object(const json& obj, const GroupSpec& g,
                         const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  if (!obj.contains("kind")) fail(path, "missing 'kind'");
  std::string kind = obj.at("kind").is_string() ? obj.at("kind").get<std::string>()
                                                : std::string();
  if (kind == "periodic_set") {
    auto period = parse_period(obj, g, path);
    if (!obj.contains("cell")) fail(path, "missing 'cell'");
    std::vector<GroupElement> members;
    std::size_t i = 0;
    for (const auto& m : obj.at("cell"))
      members.push_back(
          json_to_element(m, g, path + ".cell[" + std::to_string(i++) + "]"));
    return FunctionRep::periodic_set(g, std::move(period), members);
  }
  if (kind == "periodic_function") {
    auto period = parse_period(obj, g, path);
    if (!obj.contains("values")) fail(path, "missing 'values'");
    std::vector<Rat> cell;
    std::size_t i = 0;
    for (const auto& v : obj.at("values"))
      cell.push_back(
          json_to_rat(v, path + ".values[" + std::to_string(i++) + "]"));
    std::int64_t expected = checked_cell_size(g, period);
    if (static_cast<std::int64_t>(cell.size()) != expected)
      fail(path + ".values", "cell size mismatch: expected " +
                                 std::to_string(expected) + " values, got " +
                                 std::to_string(cell.size()));
    return FunctionRep::periodic(g, std::move(period), std::move(cell));
  }
  if (kind == "constant") {
    if (!obj.contains("value")) fail(path, "missing 'value'");
    return FunctionRep::constant(g, json_to_rat(obj.at("value"), path + ".value"));
  }
  if (kind == "modified") {
    if (!obj.contains("base")) fail(path, "missing 'base'");
    FunctionRep base = parse_object(obj.at("base"), g, path + ".base");
    if (base.kind() != RepKind::periodic)
      fail(path + ".base", "modified base must be periodic");
    std::vector<std::pair<GroupElement, Rat>> overrides;
    if (obj.contains("add")) {
      std::size_t i = 0;
      for (const auto& m : obj.at("add"))
        overrides.emplace_back(
            json_to_element(m, g, path + ".add[" + std::to_string(i++) + "]"),
            Rat(1));
    }
    if (obj.contains("remove")) {
      std::size_t i = 0;
      for (const auto& m : obj.at("remove"))
        overrides.emplace_back(
            json_to_element(m, g, path + ".remove[" + std::to_string(i++) + "]"),
            Rat(0));
    }
    if (obj.contains("set")) {
      std::size_t i = 0;
      for (const auto& entry : obj.at("set")) {
        std::string p = path + ".set[" + std::to_string(i++) + "]";
        if (!entry.is_array() || entry.size() != 2)
          fail(p, "expected [element, rational]");
        overrides.emplace_back(json_to_element(entry.at(0), g, p),
                               json_to_rat(entry.at(1), p));
      }
    }
    return FunctionRep::finite_mod(base, std::move(overrides));
  }
  if (kind == "oracle") {
    if (g.free_rank != 1 || !g.torsion.empty())
      fail(path, "oracle objects require the group Z (free_rank 1, no torsion)");
    if (!obj.contains("generator")) fail(path, "missing 'generator'");
    std::string gen = obj.at("generator").get<std::string>();
    if (!obj.contains("horizon") || !obj.at("horizon").is_number_integer())
      fail(path, "missing integer 'horizon'");
    std::int64_t horizon = obj.at("horizon").get<std::int64_t>();
    if (horizon < 1) fail(path + ".horizon", "horizon must be positive");
    if (gen == "dyadic_blocks") {
      if (obj.contains("table")) fail(path, "dyadic_blocks takes no table");
      return FunctionRep::oracle_dyadic(horizon);
    }
    if (gen == "explicit_table") {
      if (!obj.contains("table")) fail(path, "explicit_table needs 'table'");
      std::vector<Rat> table;
      std::size_t i = 0;
      for (const auto& v : obj.at("table"))
        table.push_back(
            json_to_rat(v, path + ".table[" + std::to_string(i++) + "]"));
      if (static_cast<std::int64_t>(table.size()) != 2 * horizon + 1)
        fail(path + ".table", "table must have 2*horizon+1 entries");
      return FunctionRep::oracle_table(horizon, std::move(table));
    }
    fail(path + ".generator", "unknown generator '" + gen + "'");
  }
  fail(path + ".kind", "unknown kind '" + kind + "'");
}

ojson element_to_json(const GroupElement& e) {
  ojson a = ojson::array();
  for (auto c : e.free) a.push_back(c);
  for (auto c : e.tors) a.push_back(c);
  return a;
}

ojson periodic_to_json(const FunctionRep& f) {
  const PeriodicRep& p = f.periodic_part();
  ojson obj;
  bool set_like = std::all_of(p.cell.begin(), p.cell.end(), [](const Rat& v) {
    return v == 0 || v == 1;
  });
  if (set_like) {
    obj["kind"] = "periodic_set";
    obj["period"] = p.period;
    ojson members = ojson::array();
    for (std::size_t i = 0; i < p.cell.size(); ++i)
      if (p.cell[i] == 1)
        members.push_back(element_to_json(f.cell_point(static_cast<std::int64_t>(i))));
    obj["cell"] = std::move(members);
  } else {
    obj["kind"] = "periodic_function";
    obj["period"] = p.period;
    ojson values = ojson::array();
    for (const auto& v : p.cell) values.push_back(rat_to_string(v));
    obj["values"] = std::move(values);
  }
  return obj;
}

}  // namespace

FunctionRep parse_description(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("group") || !root.contains("object"))
    throw parse_error("top level must have 'group' and 'object'");
  const json& gj = root.at("group");
  if (!gj.is_object() || !gj.contains("free_rank") ||
      !gj.at("free_rank").is_number_integer())
    throw parse_error("group.free_rank: expected an integer");
  GroupSpec g;
  g.free_rank = gj.at("free_rank").get<int>();
  if (g.free_rank < 0) throw parse_error("group.free_rank: must be nonnegative");
  if (gj.contains("torsion")) {
    std::size_t i = 0;
    for (const auto& m : gj.at("torsion")) {
      if (!m.is_number_integer() || m.get<std::int64_t>() < 2)
        fail("group.torsion[" + std::to_string(i) + "]", "modulus must be >= 2");
      g.torsion.push_back(m.get<std::int64_t>());
      ++i;
    }
  }
  return parse_object(root.at("object"), g, "object");
}

std::string serialize_description(const FunctionRep& f) {
  ojson root;
  ojson group;
  group["free_rank"] = f.spec().free_rank;
  group["torsion"] = f.spec().torsion;
  root["group"] = std::move(group);

  ojson obj;
  switch (f.kind()) {
    case RepKind::periodic:
      obj = periodic_to_json(f);
      break;
    case RepKind::finite_mod: {
      FunctionRep base = FunctionRep::periodic(f.spec(), f.periodic_part().period,
                                               f.periodic_part().cell);
      obj["kind"] = "modified";
      obj["base"] = periodic_to_json(base);
      ojson entries = ojson::array();
      for (const auto& [x, v] : f.overrides())
        entries.push_back(ojson::array({element_to_json(x), rat_to_string(v)}));
      obj["set"] = std::move(entries);
      break;
    }
    case RepKind::oracle: {
      const auto& o = f.oracle_part();
      obj["kind"] = "oracle";
      obj["generator"] = o.generator == OracleGenerator::dyadic_blocks
                             ? "dyadic_blocks"
                             : "explicit_table";
      obj["horizon"] = o.horizon;
      if (o.generator == OracleGenerator::explicit_table) {
        ojson table = ojson::array();
        for (const auto& v : o.table) table.push_back(rat_to_string(v));
        obj["table"] = std::move(table);
      }
      break;
    }
  }
  root["object"] = std::move(obj);
  return root.dump();
}

}  // namespace groupmeans
