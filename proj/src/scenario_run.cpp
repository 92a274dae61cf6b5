#include <algorithm>
#include <ctime>
#include <functional>
#include <memory>
#include <regex>

#include "campedelli/citations.hpp"
#include "campedelli/cover_configurations.hpp"
#include "campedelli/deadline.hpp"
#include "campedelli/group_actions.hpp"
#include "campedelli/involution_invariants.hpp"
#include "campedelli/variety.hpp"
#include "scenario_internal.hpp"

namespace campedelli::scenario {

using nlohmann::json;

std::string to_string(FieldPolicy p) {
  switch (p) {
    case FieldPolicy::exact: return "exact";
    case FieldPolicy::modular: return "modular";
    case FieldPolicy::both: return "both";
  }
  return "";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "";
}

namespace {

using detail::as_call;
using detail::bracket_list;
using detail::split_top_level;
using detail::trim;

/// A definition in the scenario failed; `key` names it ("group:t", "ideal:2").
class DefinitionError : public std::runtime_error {
 public:
  DefinitionError(std::string key, const std::string& what) : std::runtime_error(what), key(std::move(key)) {}
  std::string key;
};

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string observed;
  json certificate = json::object();
  std::string details;
};

bool field_independent(const std::string& op) {
  return op.rfind("cover-", 0) == 0 || op == "derive" || op == "classify" || op == "grid" || op == "note";
}

long to_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ArgumentError("expected an integer, got '" + s + "'");
  return v;
}

std::set<std::string> identifiers(const std::string& text) {
  static const std::regex id("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), id); it != std::sregex_iterator(); ++it) {
    out.insert(it->str());
  }
  return out;
}

std::string dimdeg_string(const HilbertData& h) {
  if (h.dimension < 0) return "empty";
  return "dim=" + std::to_string(h.dimension) + " deg=" + h.degree.get_str();
}

json hilbert_json(const HilbertData& h) {
  json j = {{"dimension", h.dimension}, {"degree", h.degree.get_str()}};
  if (!h.numerator.empty()) j["hilbert_numerator"] = h.numerator_string();
  return j;
}

/// Whitespace collapsed; "{b, a}" becomes "{a,b}".
std::string canonical(const std::string& s) {
  const std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '{' && t.back() == '}') {
    auto items = split_top_level(t.substr(1, t.size() - 2), ',');
    std::sort(items.begin(), items.end());
    std::string out = "{";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i > 0 ? "," : "") + items[i];
    return out + "}";
  }
  std::string out;
  bool space = false;
  for (const char c : t) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

template <class K>
std::vector<K> normalized_point(std::vector<K> p) {
  auto lead = std::find_if(p.begin(), p.end(), [](const K& x) { return !x.is_zero(); });
  if (lead == p.end()) throw ArgumentError("the zero vector is not a point");
  const K inv = lead->inverse();
  for (auto& x : p) x *= inv;
  return p;
}

template <class K>
std::string point_string(const std::vector<K>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i > 0 ? "," : "") + p[i].to_string();
  return s + ")";
}

/// Scenario data over one field: scalars, polynomials, group elements and
/// points, resolved on demand and cached.
template <class K>
class Context {
 public:
  using Aut = ProjAutomorphism<K>;
  using Point = std::vector<K>;

  Context(const Scenario& s, FieldDescriptor field, std::optional<K> zeta, const std::vector<std::string>& values)
      : s_(s), field_(field), zeta_(std::move(zeta)) {
    one_ = scalar_from_int<K>(field_, 1);
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      try {
        symbols_.emplace(s.params[i].first, scalar(values[i]));
      } catch (const std::exception& e) {
        throw DefinitionError("param:" + s.params[i].first, e.what());
      }
    }
    if (zeta_) symbols_.emplace("zeta", *zeta_);
    if (s.has_ring()) {
      std::vector<std::vector<int>> blocks;
      int next = 0;
      for (const auto& b : s.blocks) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < b.size(); ++i) idx.push_back(next++);
        blocks.push_back(std::move(idx));
      }
      try {
        ring_ = Ring::create(s.variables, field_, MonomialOrder::grevlex(), blocks);
      } catch (const std::exception& e) {
        throw DefinitionError("ring", e.what());
      }
    }
  }

  const FieldDescriptor& field() const { return field_; }
  const K& one() const { return one_; }

  const RingPtr& ring() const {
    if (!ring_) throw ArgumentError("scenario has no [ring] section");
    return ring_;
  }

  K scalar(const std::string& text) const {
    return read_expression<K>(
        text,
        [&](const std::string& name) -> K {
          auto it = symbols_.find(name);
          if (it != symbols_.end()) return it->second;
          if (name == "zeta" && zeta_) return *zeta_;
          throw UnknownSymbol(name);
        },
        [&](std::string_view lit) { return scalar_from_rational<K>(field_, Rational::parse(lit)); });
  }

  Polynomial<K> poly(const std::string& text) const { return parse_polynomial<K>(ring(), text, symbols_); }

  const Ideal<K>& ideal() {
    if (!ideal_) {
      std::vector<Polynomial<K>> gens;
      for (std::size_t i = 0; i < s_.ideal.size(); ++i) {
        try {
          gens.push_back(poly(s_.ideal[i]));
        } catch (const std::exception& e) {
          throw DefinitionError("ideal:" + std::to_string(i), e.what());
        }
      }
      ideal_.emplace(ring(), std::move(gens));
    }
    return *ideal_;
  }

  const Ideal<K>& singular(std::size_t c) {
    auto it = singular_.find(c);
    if (it == singular_.end()) it = singular_.emplace(c, singular_scheme(ideal(), c)).first;
    return it->second;
  }

  static std::size_t codimension(const std::string& text) {
    const long c = to_long(text);
    if (c < 1) throw ArgumentError("codimension must be positive");
    return static_cast<std::size_t>(c);
  }

  /// "Y", "singular(c)", "[f, g]" or a sum of these.
  Ideal<K> ideal_arg(const std::string& token, bool dry = false) {
    const auto parts = split_top_level(token, '+');
    std::vector<Polynomial<K>> gens;
    for (const auto& part : parts) {
      const auto call = as_call(part);
      if (part == "Y") {
        if (dry) continue;
        if (parts.size() == 1) return ideal();
        gens.insert(gens.end(), ideal().generators().begin(), ideal().generators().end());
      } else if (call && call->fn == "singular") {
        const std::size_t c = codimension(trim(call->inner));
        if (dry) continue;
        if (parts.size() == 1) return singular(c);
        gens.insert(gens.end(), singular(c).generators().begin(), singular(c).generators().end());
      } else if (!part.empty() && part.front() == '[') {
        for (const auto& f : bracket_list(part)) gens.push_back(poly(f));
      } else {
        throw ArgumentError("expected Y, singular(c) or [polynomials], got '" + part + "'");
      }
    }
    return Ideal<K>(ring(), std::move(gens));
  }

  Aut element(const std::string& text) {
    const std::string t = trim(text);
    if (auto call = as_call(t)) return construct(*call);
    std::optional<Aut> acc;
    std::vector<std::pair<std::string, long>> word;
    try {
      word = detail::parse_word(t);
    } catch (const std::invalid_argument& e) {
      throw ArgumentError(e.what());
    }
    for (const auto& [name, e] : word) {
      const Aut& g = named_element(name);
      const Aut p = e >= 0 ? g.pow(static_cast<std::uint64_t>(e)) : g.inverse().pow(static_cast<std::uint64_t>(-e));
      acc = acc ? *acc * p : p;
    }
    return *acc;
  }

  const Aut& named_element(const std::string& name) {
    auto it = elements_.find(name);
    if (it != elements_.end()) return it->second;
    const auto def = std::find_if(s_.group.begin(), s_.group.end(), [&](const auto& d) { return d.first == name; });
    if (def == s_.group.end()) throw ArgumentError("unknown group element '" + name + "'");
    if (!resolving_.insert("group:" + name).second) throw DefinitionError("group:" + name, "definition of '" + name + "' is circular");
    try {
      Aut g = element(def->second);
      resolving_.erase("group:" + name);
      return elements_.emplace(name, std::move(g)).first->second;
    } catch (const DefinitionError&) {
      resolving_.erase("group:" + name);
      throw;
    } catch (const std::exception& e) {
      resolving_.erase("group:" + name);
      throw DefinitionError("group:" + name, e.what());
    }
  }

  std::vector<Aut> generators(const std::string& token) {
    std::vector<Aut> out;
    if (!token.empty() && token.front() == '[') {
      for (const auto& w : bracket_list(token)) out.push_back(element(w));
    } else {
      out.push_back(element(token));
    }
    if (out.empty()) throw ArgumentError("empty generator list");
    return out;
  }

  Point point(const std::string& text) {
    const std::string t = trim(text);
    if (auto def = std::find_if(s_.points.begin(), s_.points.end(), [&](const auto& d) { return d.first == t; });
        def != s_.points.end()) {
      return named_point(t);
    }
    const auto dot = t.find('.');
    if (dot != std::string::npos) return element(t.substr(0, dot)).apply(point(t.substr(dot + 1)));
    Point p;
    for (const auto& c : split_top_level(t, ',')) p.push_back(scalar(c));
    if (ring_ && static_cast<int>(p.size()) != ring_->nvars()) {
      throw ArgumentError("point '" + t + "' needs " + std::to_string(ring_->nvars()) + " coordinates");
    }
    return p;
  }

  const Point& named_point(const std::string& name) {
    auto it = points_.find(name);
    if (it != points_.end()) return it->second;
    const auto def = std::find_if(s_.points.begin(), s_.points.end(), [&](const auto& d) { return d.first == name; });
    if (!resolving_.insert("point:" + name).second) throw DefinitionError("point:" + name, "definition of '" + name + "' is circular");
    try {
      Point p = point(def->second);
      resolving_.erase("point:" + name);
      return points_.emplace(name, std::move(p)).first->second;
    } catch (const DefinitionError&) {
      resolving_.erase("point:" + name);
      throw;
    } catch (const std::exception& e) {
      resolving_.erase("point:" + name);
      throw DefinitionError("point:" + name, e.what());
    }
  }

  /// "[P, Q, orbit(g, P)]"; orbits are expanded and repeated points dropped.
  std::vector<Point> point_list(const std::string& token) {
    std::vector<Point> out;
    auto add = [&](const Point& p) {
      const Point n = normalized_point(p);
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const auto& item : bracket_list(token)) {
      const auto call = as_call(item);
      if (call && call->fn == "orbit") {
        const auto args = split_top_level(call->inner, ',');
        if (args.size() != 2) throw ArgumentError("orbit takes a group element and a point");
        const Aut g = element(args[0]);
        const Point start = normalized_point(point(args[1]));
        Point p = start;
        for (std::size_t k = 0; k < FiniteMatrixGroup<K>::kDefaultCutoff; ++k) {
          add(p);
          p = normalized_point(g.apply(p));
          if (p == start) break;
        }
      } else {
        add(point(item));
      }
    }
    return out;
  }

  /// Declared point names equal (projectively) to p.
  std::vector<std::string> names_of(const Point& p) {
    const Point n = normalized_point(p);
    std::vector<std::string> out;
    for (const auto& [name, spec] : s_.points) {
      if (normalized_point(named_point(name)) == n) out.push_back(name);
    }
    return out;
  }

  RingPtr binary_ring() const { return Ring::create({"a", "b"}, field_); }

  std::vector<Polynomial<K>> parametrization(const std::string& token) {
    const RingPtr r = binary_ring();
    std::vector<Polynomial<K>> out;
    for (const auto& f : bracket_list(token)) out.push_back(parse_polynomial<K>(r, f, symbols_));
    if (static_cast<int>(out.size()) != ring()->nvars()) {
      throw ArgumentError("curve needs " + std::to_string(ring()->nvars()) + " coordinate forms");
    }
    return out;
  }

 private:
  std::vector<K> scalars(const std::string& list) const {
    std::vector<K> out;
    for (const auto& c : split_top_level(list, ',')) out.push_back(scalar(c));
    return out;
  }

  Matrix<K> single_block(const std::string& text) {
    const Aut g = element(text);
    if (g.blocks().size() != 1 || g.swap()) throw ArgumentError("'" + text + "' must act on a single factor");
    return g.blocks()[0];
  }

  Aut construct(const detail::Call& call) {
    const std::string& f = call.fn;
    if (f == "identity") return Aut::identity({static_cast<int>(to_long(trim(call.inner)))}, one_);
    if (f == "diag") return Aut::diagonal(scalars(call.inner));
    if (f == "perm") {
      std::vector<int> perm;
      for (const auto& c : split_top_level(call.inner, ',')) perm.push_back(static_cast<int>(to_long(c)) - 1);
      std::vector<int> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i)) throw ArgumentError("perm(" + call.inner + ") is not a permutation of 1..n");
      }
      return Aut::permutation(perm, one_);
    }
    if (f == "matrix") {
      const auto rows = split_top_level(call.inner, ';');
      const auto n = static_cast<Eigen::Index>(rows.size());
      Matrix<K> m(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto entries = scalars(rows[static_cast<std::size_t>(i)]);
        if (static_cast<Eigen::Index>(entries.size()) != n) throw ArgumentError("matrix rows must have " + std::to_string(n) + " entries");
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entries[static_cast<std::size_t>(j)];
      }
      return Aut(std::move(m));
    }
    if (f == "block" || f == "swap") {
      std::vector<Matrix<K>> blocks;
      for (const auto& part : split_top_level(call.inner, ',')) blocks.push_back(single_block(part));
      if (f == "swap" && blocks.size() != 2) throw ArgumentError("swap takes two blocks");
      return Aut(std::move(blocks), f == "swap");
    }
    throw ArgumentError("unknown constructor '" + f + "'");
  }

  const Scenario& s_;
  FieldDescriptor field_;
  std::optional<K> zeta_;
  K one_;
  std::map<std::string, K> symbols_;
  RingPtr ring_;
  std::optional<Ideal<K>> ideal_;
  std::map<std::size_t, Ideal<K>> singular_;
  std::map<std::string, Aut> elements_;
  std::map<std::string, Point> points_;
  std::set<std::string> resolving_;
};

// ---------------------------------------------------------------------------
// Field-dependent operations.

template <class K>
Outcome emptiness(const Ideal<K>& I) {
  const bool multi = I.ring()->blocks().size() > 1;
  if (multi ? !I.is_multihomogeneous() : !I.is_homogeneous()) throw NotHomogeneous("ideal is not homogeneous");
  Outcome out;
  json charts = json::array();
  bool empty = true;
  const auto ideals = campedelli::detail::chart_ideals(I);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Deadline::check();
    const auto& gb = ideals[i].groebner();
    charts.push_back({{"chart", i}, {"basis_size", gb.basis.size()}, {"unit", gb.is_unit()}});
    if (!gb.is_unit()) {
      empty = false;
      break;
    }
  }
  out.observed = empty ? "true" : "false";
  out.certificate = {{"charts", charts}, {"chart_count", ideals.size()}};
  if (empty) out.certificate["witness"] = "1 is the reduced basis of every affine chart";
  return out;
}

template <class K>
Outcome dimension_degree(const Ideal<K>& I) {
  const HilbertData h = projective_dimension_degree(I);
  return {dimdeg_string(h), hilbert_json(h), ""};
}

template <class K>
Outcome run_field_op(Context<K>& ctx, const CheckSpec& c) {
  const auto& op = c.op;
  const auto& a = c.args;
  if (op == "dimdeg") return dimension_degree(ctx.ideal_arg(a[0]));
  if (op == "empty") return emptiness(ctx.ideal_arg(a[0]));
  if (op == "singular") {
    auto out = dimension_degree(ctx.singular(Context<K>::codimension(a[0])));
    out.certificate["generators"] = ctx.singular(Context<K>::codimension(a[0])).generators().size();
    return out;
  }
  if (op == "smooth") return emptiness(ctx.singular(Context<K>::codimension(a[0])));
  if (op == "singular-support") {
    const auto pts = ctx.point_list(a[1]);
    const bool ok = supported_on_points(ctx.singular(Context<K>::codimension(a[0])), pts);
    json listed = json::array();
    for (const auto& p : pts) listed.push_back(point_string(p));
    return {ok ? "true" : "false", {{"points", listed}, {"method", "saturation by the ideal of the points is empty"}}, ""};
  }
  if (op == "support") {
    const auto sup = zero_dim_support(ctx.ideal_arg(a[0]));
    std::vector<std::string> names;
    json pts = json::array();
    for (const auto& p : sup.points) {
      const auto n = ctx.names_of(p);
      names.push_back(n.empty() ? point_string(p) : n.front());
      pts.push_back({{"point", point_string(p)}, {"names", n}});
    }
    std::sort(names.begin(), names.end());
    std::string observed = "{";
    for (std::size_t i = 0; i < names.size(); ++i) observed += (i > 0 ? "," : "") + names[i];
    observed += "}";
    if (sup.reduced_degree > sup.points.size()) {
      observed += " +" + std::to_string(sup.reduced_degree - sup.points.size()) + " irrational";
    }
    return {observed, {{"reduced_degree", sup.reduced_degree}, {"points", pts}}, ""};
  }
  if (op == "tangent-dim") {
    const auto ts = tangent_space_at(ctx.ideal(), ctx.point(a[0]));
    return {std::to_string(ts.dimension), {{"jacobian_rank", ts.jacobian_rank}, {"dimension", ts.dimension}}, ""};
  }
  if (op == "node") {
    try {
      const auto cert = is_ordinary_double_point(ctx.ideal(), ctx.point(a[0]));
      return {"A1",
              {{"chart", cert.chart},
               {"tangent_dimension", cert.tangent_dimension},
               {"quadric", cert.quadric.to_string()},
               {"quadric_rank", cert.quadric_rank}},
              ""};
    } catch (const SmoothPoint& e) {
      return {"smooth", {{"reason", e.what()}}, ""};
    } catch (const NotCertified& e) {
      return {"not-A1", {{"reason", e.what()}}, e.what()};
    }
  }
  if (op == "tangent-action") {
    const auto g = ctx.element(a[0]);
    const auto p = ctx.point(a[1]);
    const auto ts = tangent_space_at(ctx.ideal(), p);
    const Matrix<K> m = restrict_action_to_tangent_space(g, p, ts);
    const Matrix<K> id = identity<K>(m.rows(), ctx.one());
    std::string observed = "other";
    if (matrices_equal<K>(m, id)) {
      observed = "identity";
    } else if (matrices_equal<K>(m, Matrix<K>(-id))) {
      observed = "-identity";
    }
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(row);
    }
    return {observed, {{"tangent_dimension", ts.dimension}, {"matrix", rows}}, ""};
  }
  if (op == "order") {
    const auto G = FiniteMatrixGroup<K>::closure(ctx.generators(a[0]));
    std::map<std::string, std::size_t> orders;
    for (std::size_t i = 0; i < G.order(); ++i) ++orders[std::to_string(G.element_order(i))];
    return {std::to_string(G.order()), {{"element_orders", orders}, {"abelian", G.is_abelian()}}, ""};
  }
  if (op == "relation") {
    const auto l = ctx.element(a[0]);
    const auto r = ctx.element(a[1]);
    return {projective_equal(l, r) ? "true" : "false", {{"lhs", l.canonical().to_string()}, {"rhs", r.canonical().to_string()}}, ""};
  }
  if (op == "involutions") {
    const auto G = FiniteMatrixGroup<K>::closure(ctx.generators(a[0]));
    const auto inv = G.involutions();
    std::size_t classes = 0;
    json sizes = json::array();
    for (const auto& cls : G.conjugacy_classes()) {
      if (G.element_order(cls.front()) == 2) {
        ++classes;
        sizes.push_back(cls.size());
      }
    }
    return {"count=" + std::to_string(inv.size()) + " classes=" + std::to_string(classes),
            {{"group_order", G.order()}, {"class_sizes", sizes}},
            ""};
  }
  if (op == "free") {
    const auto G = FiniteMatrixGroup<K>::closure(ctx.generators(a[0]));
    try {
      const auto cert = verify_free_action(G, ctx.ideal());
      json entries = json::array();
      for (const auto& e : cert.entries) {
        json j = {{"element", e.element}, {"order", e.element_order}, {"reason", to_string(e.reason)}};
        if (e.witness) {
          j["witness"] = *e.witness;
          j["exponent"] = e.exponent;
        }
        if (!e.components.empty()) j["empty_components"] = e.components;
        entries.push_back(j);
      }
      return {"true", {{"group_order", G.order()}, {"entries", entries}}, ""};
    } catch (const NotFree& e) {
      return {"false", {{"element", e.element}, {"component", e.component}}, e.what()};
    } catch (const NotInvariant& e) {
      return {"not-invariant", json::object(), e.what()};
    }
  }
  if (op == "fixed") {
    const auto report = fixed_points_on_variety(ctx.element(a[0]), ctx.ideal());
    json comps = json::array();
    for (const auto& [label, h] : report.components) {
      json j = hilbert_json(h);
      j["component"] = label;
      comps.push_back(j);
    }
    return {dimdeg_string(report.total), {{"components", comps}}, ""};
  }
  if (op == "square-shortcut") {
    const auto s = ctx.element(a[0]);
    const auto G = FiniteMatrixGroup<K>::closure(ctx.generators(a[1]));
    const auto H = FiniteMatrixGroup<K>::closure(ctx.generators(a[2]));
    bool ok = true;
    json entries = json::array();
    for (std::size_t i = 0; i < G.order(); ++i) {
      if (H.index_of(G.element(i))) continue;
      const auto h = s * G.element(i);
      const auto sq = G.index_of(h * h);
      const bool good = sq && *sq != G.identity_index();
      ok = ok && good;
      json j = {{"element", i}, {"square_in_group", sq.has_value()}};
      if (sq) j["square"] = *sq;
      j["nontrivial"] = good;
      entries.push_back(j);
    }
    return {ok ? "true" : "false", {{"checked", entries}, {"group_order", G.order()}, {"subgroup_order", H.order()}}, ""};
  }
  if (op == "curve") {
    const auto r = curve_substitution_count(ctx.ideal(), ctx.parametrization(a[0]));
    if (r.contained) return {"contained", {{"substituted", "all generators vanish identically"}}, ""};
    return {"deg=" + std::to_string(r.degree) + (r.distinct ? " distinct" : " repeated"),
            {{"common_form", r.common.to_string()}, {"degree", r.degree}, {"squarefree", r.distinct}},
            ""};
  }
  throw ArgumentError("operation '" + op + "' is not field dependent");
}

// ---------------------------------------------------------------------------
// Field-independent operations.

cover::GroupElement2 bits_arg(const std::string& s) {
  if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos) throw ArgumentError("expected three bits, got '" + s + "'");
  return cover::GroupElement2::parse_bits(s);
}

int case_arg(const std::string& s) {
  const long n = to_long(s);
  if (n < 1 || n > 4) throw ArgumentError("case number must be 1..4");
  return static_cast<int>(n);
}

json triples_json(const cover::TriplePointReport& t) {
  json pts = json::array();
  for (const auto& p : t.points) {
    pts.push_back({{"point", cover::to_string(p.point)},
                   {"labels", {p.labels[0].to_bits(), p.labels[1].to_bits(), p.labels[2].to_bits()}},
                   {"sum", p.sum.to_bits()}});
  }
  return pts;
}

json numerics_json(const invariants::InvolutionNumerics& n) {
  json j = {{"k", n.k}, {"K2_W", n.K2_W}, {"D2", n.D2}, {"violations", n.violations}};
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  put("p_a_gamma", n.p_a_gamma);
  put("KW_D", n.KW_D);
  put("R2", n.R2);
  put("KS_R", n.KS_R);
  put("h", n.h);
  put("gamma2", n.gamma2);
  put("m", n.m);
  return j;
}

Outcome run_plain_op(const CheckSpec& c, std::uint64_t seed) {
  const auto& op = c.op;
  const auto& a = c.args;
  if (op == "cover-case" || op == "cover-parity") {
    const auto cc = cover::construct_case_config(case_arg(a[0]), seed);
    json cert = {{"configuration", cc.config.to_text()},
                 {"seed", cc.seed},
                 {"attempts", cc.attempts},
                 {"valid", cc.validity.valid},
                 {"triple_points", triples_json(cc.triples)}};
    if (op == "cover-case") {
      return {cc.validity.valid ? cover::to_string(cc.triples.classification) : "invalid", cert, ""};
    }
    const auto& s = cc.parity.sums;
    cert["consistent"] = cc.parity.consistent;
    return {std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]), cert, ""};
  }
  if (op == "cover-triples") {
    const auto t = cover::compatible_triples(bits_arg(a[0]));
    json list = json::array();
    for (const auto& tr : t) list.push_back({tr[0].to_bits(), tr[1].to_bits(), tr[2].to_bits()});
    return {std::to_string(t.size()), {{"triples", list}}, ""};
  }
  if (op == "cover-four-point") {
    const auto r = cover::four_point_search(bits_arg(a[0]), seed);
    json subsets = json::array();
    bool quadrangle = false;
    bool all_rejected = !r.subsets.empty();
    for (const auto& l : r.subsets) {
      json on_lines = json::object();
      for (const auto g : cover::GroupElement2::nonzero()) on_lines[g.to_bits()] = l.points_on_line[g.index()];
      subsets.push_back({{"points_on_line", on_lines},
                         {"rejected", l.rejected},
                         {"rejection", l.rejection},
                         {"complete_quadrangle", l.complete_quadrangle}});
      quadrangle = quadrangle || l.complete_quadrangle;
      all_rejected = all_rejected && l.rejected;
    }
    json cert = {{"subsets", subsets}, {"realization_found", r.realization_found}, {"verdict", r.verdict}};
    if (r.realization) {
      cert["realization"] = r.realization->to_text();
      cert["valid"] = r.validity.valid;
      cert["parity"] = r.parity.sums;
      cert["triple_points"] = triples_json(r.triples);
    }
    return {quadrangle ? "complete-quadrangle" : (all_rejected ? "rejected" : "other"), cert, r.verdict};
  }
  if (op == "derive") {
    const int k = static_cast<int>(to_long(a[0]));
    const int K2 = static_cast<int>(to_long(a[1]));
    const auto pa = a.size() > 2 ? std::optional<int>(static_cast<int>(to_long(a[2]))) : std::nullopt;
    const auto n = invariants::derive(k, K2, pa);
    std::string observed = "ok";
    if (!n.ok()) {
      observed.clear();
      for (const auto& v : n.violations) observed += (observed.empty() ? "" : "; ") + v;
    }
    return {observed, numerics_json(n), ""};
  }
  if (op == "classify") {
    const int k = static_cast<int>(to_long(a[0]));
    const int K2 = static_cast<int>(to_long(a[1]));
    try {
      const auto q = invariants::classify_quotient(k, K2);
      json facts = json::array();
      for (const auto& f : q.facts) facts.push_back({{"statement", f.statement}, {"citation", f.citation}});
      return {invariants::to_string(q.type), {{"case", q.case_label}, {"facts", facts}}, ""};
    } catch (const std::exception& e) {
      return {std::string("invalid: ") + e.what(), json::object(), e.what()};
    }
  }
  if (op == "grid") {
    std::size_t valid = 0;
    std::size_t invalid = 0;
    std::vector<std::string> problems;
    for (const auto& cell : invariants::invariant_grid()) {
      const std::string where = "k=" + std::to_string(cell.k) + " K2_W=" + std::to_string(cell.K2_W) +
                                " K2_W'=" + std::to_string(cell.K2_Wprime) + " p_a=" + std::to_string(cell.p_a_gamma);
      if (!cell.valid) {
        ++invalid;
        if (cell.violations.empty()) problems.push_back(where + ": invalid without a named constraint");
        continue;
      }
      ++valid;
      const auto& n = cell.numerics;
      bool ok = cell.quotient.has_value();
      if (cell.k == 6) {
        ok = ok && n.R2 == 2 * cell.K2_W + 2 && n.h == cell.p_a_gamma - cell.K2_W - 3;
      } else {
        ok = ok && n.m == 1 - cell.K2_W;
      }
      if (!ok) problems.push_back(where + ": numerics differ from the closed forms");
    }
    json cert = {{"valid_cells", valid}, {"invalid_cells", invalid}, {"problems", problems}};
    return {problems.empty() ? "consistent" : "inconsistent", cert, problems.empty() ? "" : problems.front()};
  }
  throw ArgumentError("unknown operation '" + op + "'");
}

// ---------------------------------------------------------------------------

/// Group and point names reachable from the arguments, and whether any of
/// their definitions (or the ideal and parameters) mention zeta.
bool uses_zeta(const Scenario& s, const CheckSpec& c) {
  std::vector<std::string> texts(c.args.begin(), c.args.end());
  texts.insert(texts.end(), s.ideal.begin(), s.ideal.end());
  for (const auto& [name, values] : s.params) texts.insert(texts.end(), values.begin(), values.end());
  // Support results are named after every declared point.
  if (c.op == "support") {
    for (const auto& [name, def] : s.points) texts.push_back(name);
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    for (const auto& id : identifiers(texts[i])) {
      if (id == "zeta") return true;
      if (!seen.insert(id).second) continue;
      for (const auto& [name, def] : s.group) {
        if (name == id) texts.push_back(def);
      }
      for (const auto& [name, def] : s.points) {
        if (name == id) texts.push_back(def);
      }
    }
  }
  return false;
}

std::size_t candidate_count(const Scenario& s) {
  std::size_t n = 1;
  for (const auto& [name, values] : s.params) n = std::max(n, values.size());
  return n;
}

std::vector<std::string> binding(const Scenario& s, std::size_t choice) {
  std::vector<std::string> out;
  for (const auto& [name, values] : s.params) out.push_back(values[std::min(choice, values.size() - 1)]);
  return out;
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o) : s_(s), o_(o) {
    if (o_.primes.empty()) o_.primes.assign(std::begin(kDefaultPrimes), std::end(kDefaultPrimes));
  }

  void choose(std::size_t choice) {
    choice_ = choice;
    q_.reset();
    cyc_.reset();
    fp_.clear();
  }

  CheckRecord run(const CheckSpec& c) {
    CheckRecord r{c.id, c.op, c.args, c.expect, c.cite, Verdict::skipped, "", {}, 0};
    const auto start = std::chrono::steady_clock::now();
    if (c.op == "note") {
      r.details = "cited, not computed: " + find_citation(c.cite).statement;
      return r;
    }
    {
      ScopedDeadline budget(std::chrono::duration_cast<std::chrono::milliseconds>(o_.timeout));
      if (field_independent(c.op)) {
        r.runs.push_back(attempt(c, "none", [&] { return run_plain_op(c, o_.seed); }));
      } else {
        const bool cyclotomic = s_.cyclotomic_order > 0 && uses_zeta(s_, c);
        if (o_.policy != FieldPolicy::modular) {
          if (cyclotomic) {
            r.runs.push_back(attempt(c, field_name(FieldDescriptor::cyclotomic(s_.cyclotomic_order)),
                                     [&] { return run_field_op(cyclotomic_context(), c); }));
          } else {
            r.runs.push_back(attempt(c, "Q", [&] { return run_field_op(rational_context(), c); }));
          }
        }
        if (o_.policy != FieldPolicy::exact) {
          for (const auto p : o_.primes) {
            r.runs.push_back(attempt(c, "F_" + std::to_string(p), [&] {
              if (cyclotomic) primitive_root_of_unity(s_.cyclotomic_order, p);
              return run_field_op(prime_context(p), c);
            }));
          }
        }
      }
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    decide(r);
    return r;
  }

  bool consistent() const { return consistent_; }
  std::size_t choice() const { return choice_; }

 private:
  static std::string field_name(const FieldDescriptor& f) { return f.to_string(); }

  template <class F>
  FieldRun attempt(const CheckSpec& c, const std::string& field, F&& fn) {
    FieldRun run;
    run.field = field;
    try {
      Outcome out = fn();
      run.observed = out.observed;
      run.certificate = std::move(out.certificate);
      if (!out.details.empty()) run.certificate["note"] = out.details;
      run.pass = canonical(out.observed) == canonical(c.expect);
    } catch (const CheckTimeout&) {
      run.error = "timeout after " + std::to_string(o_.timeout.count()) + " s";
    } catch (const std::exception& e) {
      run.error = e.what();
    }
    return run;
  }

  void decide(CheckRecord& r) {
    const bool all = std::all_of(r.runs.begin(), r.runs.end(), [](const FieldRun& f) { return f.pass; });
    r.verdict = all ? Verdict::pass : Verdict::fail;
    // Exact and modular runs must agree; primes must agree with each other.
    std::optional<bool> exact_pass;
    std::optional<bool> modular_pass;
    std::set<std::string> modular_observed;
    for (const auto& f : r.runs) {
      if (f.field.rfind("F_", 0) == 0) {
        modular_pass = modular_pass.value_or(true) && f.pass;
        if (f.error.empty()) modular_observed.insert(f.observed);
      } else if (f.field != "none") {
        exact_pass = f.pass;
      }
    }
    if (exact_pass && modular_pass && *exact_pass != *modular_pass) {
      consistent_ = false;
      r.verdict = Verdict::fail;
      r.details = "exact and modular verdicts disagree";
      return;
    }
    if (modular_observed.size() > 1) {
      r.verdict = Verdict::fail;
      r.details = "primes disagree";
      return;
    }
    if (!all) {
      for (const auto& f : r.runs) {
        if (f.pass) continue;
        r.details = f.error.empty() ? "expected " + r.expect + ", observed " + f.observed + " over " + f.field
                                    : f.field + ": " + f.error;
        break;
      }
    }
  }

  Context<Rational>& rational_context() {
    if (!q_) q_ = std::make_unique<Context<Rational>>(s_, FieldDescriptor::rational(), std::nullopt, binding(s_, choice_));
    return *q_;
  }
  Context<Cyclotomic>& cyclotomic_context() {
    if (!cyc_) {
      const auto n = s_.cyclotomic_order;
      cyc_ = std::make_unique<Context<Cyclotomic>>(s_, FieldDescriptor::cyclotomic(n), Cyclotomic::generator(n),
                                                   binding(s_, choice_));
    }
    return *cyc_;
  }
  Context<Fp>& prime_context(std::uint64_t p) {
    auto it = fp_.find(p);
    if (it == fp_.end()) {
      // Without the root only checks that avoid zeta can run here.
      std::optional<Fp> zeta;
      if (s_.cyclotomic_order > 0 && (p - 1) % s_.cyclotomic_order == 0) {
        zeta = primitive_root_of_unity(s_.cyclotomic_order, p);
      }
      it = fp_.emplace(p, std::make_unique<Context<Fp>>(s_, FieldDescriptor::prime(p), zeta, binding(s_, choice_))).first;
    }
    return *it->second;
  }

  const Scenario& s_;
  RunOptions o_;
  std::size_t choice_ = 0;
  bool consistent_ = true;
  std::unique_ptr<Context<Rational>> q_;
  std::unique_ptr<Context<Cyclotomic>> cyc_;
  std::map<std::uint64_t, std::unique_ptr<Context<Fp>>> fp_;
};

const CheckSpec& check_by_id(const Scenario& s, const std::string& id) {
  for (const auto& c : s.checks) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no check '" + id + "'");
}

// ---------------------------------------------------------------------------
// Validation without heavy computation.

template <class K>
void dry_run_args(Context<K>& ctx, const CheckSpec& c) {
  const auto& a = c.args;
  const auto& op = c.op;
  if (op == "dimdeg" || op == "empty" || op == "support") {
    ctx.ideal_arg(a[0], true);
  } else if (op == "singular" || op == "smooth") {
    Context<K>::codimension(a[0]);
  } else if (op == "singular-support") {
    Context<K>::codimension(a[0]);
    ctx.point_list(a[1]);
  } else if (op == "tangent-dim" || op == "node") {
    ctx.point(a[0]);
  } else if (op == "tangent-action") {
    ctx.element(a[0]);
    ctx.point(a[1]);
  } else if (op == "order" || op == "involutions" || op == "free") {
    ctx.generators(a[0]);
  } else if (op == "relation") {
    ctx.element(a[0]);
    ctx.element(a[1]);
  } else if (op == "fixed") {
    ctx.element(a[0]);
  } else if (op == "square-shortcut") {
    ctx.element(a[0]);
    ctx.generators(a[1]);
    ctx.generators(a[2]);
  } else if (op == "curve") {
    ctx.parametrization(a[0]);
  } else if (op == "cover-case" || op == "cover-parity") {
    case_arg(a[0]);
  } else if (op == "cover-triples" || op == "cover-four-point") {
    bits_arg(a[0]);
  } else if (op == "derive" || op == "classify") {
    for (const auto& x : a) to_long(x);
  }
}

template <class K>
void validate_in(Context<K>& ctx, const Scenario& s) {
  if (s.has_ring()) ctx.ideal();
  for (const auto& [name, def] : s.group) ctx.named_element(name);
  for (const auto& [name, def] : s.points) ctx.named_point(name);
  for (const auto& c : s.checks) {
    try {
      dry_run_args(ctx, c);
    } catch (const DefinitionError&) {
      throw;
    } catch (const std::exception& e) {
      throw ScenarioParseError(c.line, 1, "check '" + c.id + "': " + e.what());
    }
  }
}

}  // namespace

namespace detail {

void validate_references(const Scenario& s, const std::vector<std::pair<std::string, std::size_t>>& lines) {
  auto line_of = [&](const std::string& key) -> std::size_t {
    for (const auto& [k, l] : lines) {
      if (k == key) return l;
    }
    return 0;
  };
  std::set<std::string> vars;
  for (const auto& v : s.variables) {
    if (!vars.insert(v).second) throw ScenarioParseError(line_of("ring"), 1, "variable '" + v + "' repeated");
    if (v == "zeta" || v == "Y") throw ScenarioParseError(line_of("ring"), 1, "'" + v + "' is reserved");
  }
  std::set<std::string> names;
  for (const auto& [n, d] : s.group) {
    if (!names.insert(n).second) throw ScenarioParseError(line_of("group:" + n), 1, "name '" + n + "' repeated");
  }
  for (const auto& [n, d] : s.points) {
    if (!names.insert(n).second) throw ScenarioParseError(line_of("point:" + n), 1, "name '" + n + "' repeated");
  }
  try {
    for (std::size_t choice = 0; choice < candidate_count(s); ++choice) {
      if (s.cyclotomic_order > 0) {
        const auto n = s.cyclotomic_order;
        Context<Cyclotomic> ctx(s, FieldDescriptor::cyclotomic(n), Cyclotomic::generator(n), binding(s, choice));
        validate_in(ctx, s);
      } else {
        Context<Rational> ctx(s, FieldDescriptor::rational(), std::nullopt, binding(s, choice));
        validate_in(ctx, s);
      }
    }
  } catch (const DefinitionError& e) {
    throw ScenarioParseError(line_of(e.key), 1, e.what());
  }
}

}  // namespace detail

Report run_scenario(const Scenario& s, const RunOptions& options) {
  Report report;
  report.scenario = s.name;
  report.policy = to_string(options.policy);
  report.seed = options.seed;
  report.generated_at = utc_now();
  Runner runner(s, options);

  std::map<std::string, CheckRecord> done;
  const std::size_t candidates = candidate_count(s);
  if (candidates > 1 && !s.require.empty()) {
    bool certified = false;
    for (std::size_t choice = 0; choice < candidates && !certified; ++choice) {
      runner.choose(choice);
      std::map<std::string, CheckRecord> trial;
      bool ok = true;
      for (const auto& id : s.require) {
        auto rec = runner.run(check_by_id(s, id));
        ok = ok && rec.verdict == Verdict::pass;
        trial.emplace(id, std::move(rec));
        if (!ok) break;
      }
      std::string label;
      const auto values = binding(s, choice);
      for (std::size_t i = 0; i < s.params.size(); ++i) label += (i > 0 ? ", " : "") + s.params[i].first + " = " + values[i];
      if (ok) {
        certified = true;
        done = std::move(trial);
        report.notes.push_back(label + " certified by the required checks");
      } else {
        report.notes.push_back(label + " rejected by a required check");
      }
    }
    if (!certified) report.notes.push_back("no parameter candidate passed the required checks; the last one is used");
  }
  const auto values = binding(s, runner.choice());
  for (std::size_t i = 0; i < s.params.size(); ++i) report.certified_params.emplace_back(s.params[i].first, values[i]);
  for (const auto& c : s.checks) {
    if (options.only && !options.only->count(c.id)) continue;
    auto it = done.find(c.id);
    report.checks.push_back(it != done.end() ? it->second : runner.run(c));
  }
  report.consistent = runner.consistent();
  return report;
}

}  // namespace campedelli::scenario
