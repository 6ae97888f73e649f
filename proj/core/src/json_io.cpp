#include "gqforge/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gqforge/numtheory.hpp"

namespace gqforge::json_io {

json parse(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::size_t begin = stop;
    while (begin > 0 && text[begin - 1] != '\n') --begin;
    std::size_t end = stop;
    while (end < text.size() && text[end] != '\n') ++end;
    if (begin == end && begin > 0) {
      // Error at the start of an empty line: show the line before it.
      end = begin - 1;
      begin = end;
      while (begin > 0 && text[begin - 1] != '\n') --begin;
    }
    throw Error(ErrorKind::InvalidInput, "malformed JSON in " + source + " at line " + std::to_string(line) +
                                             ", column " + std::to_string(column) + ": " +
                                             std::string(text.substr(begin, std::min<std::size_t>(end - begin, 120))));
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

json to_json(const FiniteGroup& group) {
  json j{{"order", group.order()}, {"table", group.table_rows()}};
  if (!group.name().empty()) j["name"] = group.name();
  return j;
}

FiniteGroup group_from_json(const json& j) {
  const auto order = field<std::size_t>(j, "order");
  auto table = field<std::vector<std::vector<std::int64_t>>>(j, "table");
  if (table.size() != order) throw Error(ErrorKind::InvalidInput, "table has " + std::to_string(table.size()) + " rows but order is " + std::to_string(order));
  std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string();
  return group_from_table(table, std::move(name));
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FiniteGroup parse_all() {
    auto g = parse_one();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, "group spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  bool consume(std::string_view prefix) {
    if (text_.substr(pos_, prefix.size()) != prefix) return false;
    pos_ += prefix.size();
    return true;
  }

  FiniteGroup parse_one() {
    if (consume("cyclic:")) {
      std::size_t n = 0;
      const auto* first = text_.data() + pos_;
      const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), n);
      if (ec != std::errc() || n == 0) fail("expected a positive integer");
      if (n > kMaxGroupOrder) fail("order exceeds " + std::to_string(kMaxGroupOrder));
      pos_ += static_cast<std::size_t>(ptr - first);
      return cyclic_group(n);
    }
    if (consume("product:")) {
      auto left = parse_one();
      if (!consume(",")) fail("expected ',' between product factors");
      auto right = parse_one();
      if (left.order() * right.order() > kMaxGroupOrder) fail("product order exceeds " + std::to_string(kMaxGroupOrder));
      return direct_product(left, right);
    }
    if (consume("file:")) {
      // A path runs to the end of the spec.
      const std::string path(text_.substr(pos_));
      pos_ = text_.size();
      if (path.empty()) fail("expected a path");
      return group_from_json(load_file(path));
    }
    fail("expected cyclic:, product: or file:");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) { return SpecParser(spec).parse_all(); }

json to_json(const IncidenceStructure& q) {
  json j{{"num_points", q.num_points()}, {"lines", q.lines()}};
  if (!q.name().empty()) j["name"] = q.name();
  return j;
}

IncidenceStructure incidence_from_json(const json& j) {
  const auto n = field<std::size_t>(j, "num_points");
  auto lines = field<std::vector<std::vector<Point>>>(j, "lines");
  std::string name = j.contains("name") ? field<std::string>(j, "name") : std::string();
  return IncidenceStructure(n, std::move(lines), std::move(name));
}

json to_json(const GQCertificate& cert) {
  return {{"gq", true},           {"s", cert.s},
          {"t", cert.t},          {"thick", cert.thick},
          {"num_points", cert.num_points}, {"num_lines", cert.num_lines}};
}

json to_json(const GQViolation& violation) {
  return {{"gq", false},
          {"violation", std::string(to_string(violation.kind))},
          {"message", violation.describe()},
          {"witness",
           {{"points", violation.points},
            {"lines", violation.lines},
            {"expected", violation.expected},
            {"actual", violation.actual}}}};
}

json to_json(const GQCheck& check) {
  return std::visit([](const auto& v) { return to_json(v); }, check);
}

json to_json(const ParameterCheck& check, std::uint64_t s, std::uint64_t t) {
  return {{"s", s},
          {"t", t},
          {"feasible", check.feasible},
          {"divisibility", check.divisibility},
          {"inequality", check.inequality},
          {"reason", check.reason}};
}

json to_json(const PermutationGroup& group) {
  return {{"degree", group.degree()}, {"order", group.order()}, {"generators", group.generators()}};
}

json to_json(const Isomorphism& iso) {
  return {{"isomorphic", true}, {"point_map", iso.point_map}, {"line_map", iso.line_map}};
}

json to_json(const Polarity& polarity) {
  return {{"polarity", true}, {"point_to_line", polarity.point_to_line}, {"line_to_point", polarity.line_to_point}};
}

json action_to_json(const std::vector<Permutation>& action) {
  return {{"degree", action.empty() ? 0 : action.front().size()}, {"perms", action}};
}

std::vector<Permutation> action_from_json(const json& j) {
  const auto degree = field<std::size_t>(j, "degree");
  auto perms = field<std::vector<Permutation>>(j, "perms");
  for (std::size_t g = 0; g < perms.size(); ++g) {
    if (!is_permutation(perms[g], degree)) {
      throw Error(ErrorKind::InvalidAction, "perms[" + std::to_string(g) + "] is not a permutation of degree " + std::to_string(degree));
    }
  }
  return perms;
}

json to_json(const RegularSubgroup& sub) {
  return {{"group", to_json(sub.group)},
          {"point_action", action_to_json(sub.point_action)},
          {"line_action", action_to_json(sub.line_action)}};
}

json sigma_to_json(const FiniteGroup& group, const SigmaSet& sigma) {
  return {{"group", to_json(group)}, {"sigma", sigma.members()}};
}

json to_json(const AxiomReport& report) {
  json j{{"status", report.pass ? "pass" : "fail"}};
  if (report.pass) {
    j["counting_identity"] = report.counting_identity;
    return j;
  }
  j["failed_axiom"] = std::string(to_string(*report.failed_axiom));
  json witness = json::object();
  if (report.element) witness["element"] = *report.element;
  if (report.triple) witness["triple"] = *report.triple;
  if (report.other_triple) witness["other_triple"] = *report.other_triple;
  j["witness"] = witness;
  return j;
}

json to_json(const DeltaProfile& profile, const FiniteGroup& group) {
  std::vector<Element> members;
  for (Element g = 0; g < profile.delta.size(); ++g) {
    if (profile.delta[g]) members.push_back(g);
  }
  json classes = json::array();
  for (std::size_t c = 0; c < profile.classes.size(); ++c) {
    classes.push_back({{"members", profile.classes[c].members()},
                       {"in_delta", profile.class_intersections[c].in_delta},
                       {"in_complement", profile.class_intersections[c].in_complement}});
  }
  return {{"base_point", profile.base_point}, {"s", profile.s},           {"t", profile.t},
          {"delta", members},                 {"delta_size", members.size()}, {"classes", classes},
          {"group", to_json(group)}};
}

std::pair<DeltaProfile, FiniteGroup> delta_profile_from_json(const json& j) {
  auto group = group_from_json(field<json>(j, "group"));
  DeltaProfile profile;
  profile.base_point = field<Point>(j, "base_point");
  profile.s = field<std::size_t>(j, "s");
  profile.t = field<std::size_t>(j, "t");
  profile.delta.assign(group.order(), false);
  for (auto g : field<std::vector<Element>>(j, "delta")) {
    if (g >= group.order()) throw Error(ErrorKind::InvalidInput, "delta element out of range");
    profile.delta[g] = true;
  }
  if (!profile.delta[kIdentity]) throw Error(ErrorKind::InvalidInput, "delta must contain the identity");
  // Classes are recomputed from the group rather than trusted from the file.
  profile.classes = conjugacy_classes(group);
  for (const auto& cls : profile.classes) {
    ClassIntersection ci;
    for (Element g : cls) (profile.delta[g] ? ci.in_delta : ci.in_complement)++;
    profile.class_intersections.push_back(ci);
  }
  return {std::move(profile), std::move(group)};
}

json to_json(const YoshiaraReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    classes.push_back({{"members", c.members.members()},
                       {"size", c.members.size()},
                       {"element_order", c.element_order},
                       {"in_delta", c.intersection.in_delta},
                       {"in_complement", c.intersection.in_complement},
                       {"meets_delta", c.meets_delta},
                       {"complement_divisible", c.complement_divisible},
                       {"size_bound", c.size_bound},
                       {"order_divides", c.order_divides},
                       {"pass", c.pass()}});
  }
  json normals = json::array();
  for (const auto& n : report.normal_subgroups) {
    normals.push_back({{"members", n.members.members()}, {"order", n.members.size()}, {"divides", n.divides}});
  }
  return {{"s", report.s},
          {"t", report.t},
          {"gcd", report.gcd_st},
          {"normal_bound", report.normal_bound},
          {"classes", classes},
          {"normal_subgroups", normals},
          {"pass", report.pass}};
}

json to_json(const SieveVerdict& v) {
  json j{{"s", v.s}};
  static const char* names[] = {"c1", "c2", "c3", "c4", "c5"};
  for (std::size_t i = 0; i < 5; ++i) j[names[i]] = std::string(to_string(v.conditions[i]));
  j["witness_p"] = v.witness_p ? json(*v.witness_p) : json(nullptr);
  j["witness_n"] = v.witness_n ? json(*v.witness_n) : json(nullptr);
  json hint = json::array();
  for (const auto& pp : v.factor_hint) hint.push_back({pp.p, pp.n});
  j["factor_hint"] = hint;
  j["pass"] = v.pass;
  return j;
}

json to_json(const SieveSummary& summary) {
  return {{"scanned", summary.scanned},
          {"coprime_to_six", summary.coprime_to_six},
          {"not_squarefree", summary.not_squarefree},
          {"survivors", summary.survivors}};
}

json to_json(const FeasibilityReport& report) {
  auto pairs = [](const std::vector<SuzukiPair>& list) {
    json arr = json::array();
    for (const auto& p : list) arr.push_back({{"q", p.q}, {"m", p.m}, {"a", p.a}, {"b", p.b}, {"c", p.c}});
    return arr;
  };
  return {{"kind", std::string(to_string(report.kind))},
          {"parameter", report.parameter},
          {"evaluated", pairs(report.evaluated)},
          {"candidates", pairs(report.candidates)},
          {"empty", report.empty}};
}

json to_json(const IdentityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"grid", c.grid},
                      {"cases", c.cases},
                      {"failures", c.failure_count},
                      {"failing_cases", c.failures}});
  }
  return {{"checks", checks},
          {"total_cases", report.total_cases()},
          {"total_failures", report.total_failures()},
          {"pass", report.pass()}};
}

}  // namespace gqforge::json_io
